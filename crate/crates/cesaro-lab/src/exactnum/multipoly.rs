//! Multivariate polynomials over ℚ in the fixed variable universe {α, i, j, t}.
//!
//! The inner summation index of the operator series is named `t` throughout
//! the crate (the letter `k` is reserved for the operator order). Terms live
//! in a `BTreeMap` keyed by exponent tuples, so equal polynomials always have
//! identical representations and zero coefficients are never stored.

use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{format_rational, BigRational};
use super::unipoly::UniPoly;

/// The variable universe. `T` is the series summation index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Alpha,
    I,
    J,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Alpha, Var::I, Var::J, Var::T];

    fn index(self) -> usize {
        match self {
            Var::Alpha => 0,
            Var::I => 1,
            Var::J => 2,
            Var::T => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::I => "i",
            Var::J => "j",
            Var::T => "t",
        }
    }
}

type Mono = [u16; 4];

/// A multivariate polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 4], c);
        }
        Self { terms }
    }

    pub fn constant_i64(c: i64) -> Self {
        Self::constant(BigRational::from(num_bigint::BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        let mut mono = [0u16; 4];
        mono[v.index()] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(mono, BigRational::one());
        Self { terms }
    }

    /// The linear polynomial `v + c`.
    pub fn var_plus(v: Var, c: i64) -> Self {
        Self::var(v) + Self::constant_i64(c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.get(&[0; 4]).cloned();
        }
        None
    }

    fn insert_term(&mut self, mono: Mono, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn degree_in(&self, v: Var) -> usize {
        self.terms
            .keys()
            .map(|m| m[v.index()] as usize)
            .max()
            .unwrap_or(0)
    }

    /// Total degree of the polynomial (0 for the zero polynomial).
    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m[v.index()] > 0)
    }

    /// Coefficients with respect to `v`: index `d` holds the coefficient of
    /// `v^d` as a polynomial in the remaining variables.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.degree_in(v);
        let mut out = vec![MultiPoly::zero(); deg + 1];
        for (mono, coeff) in &self.terms {
            let d = mono[v.index()] as usize;
            let mut rest = *mono;
            rest[v.index()] = 0;
            out[d].insert_term(rest, coeff.clone());
        }
        out
    }

    /// Substitute exact values for a subset of the variables.
    pub fn substitute(&self, assignment: &[(Var, BigRational)]) -> MultiPoly {
        let mut values: [Option<&BigRational>; 4] = [None; 4];
        for (v, r) in assignment {
            values[v.index()] = Some(r);
        }
        let mut out = MultiPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut c = coeff.clone();
            let mut rest = *mono;
            for idx in 0..4 {
                if let Some(val) = values[idx] {
                    for _ in 0..mono[idx] {
                        c = c * val;
                    }
                    rest[idx] = 0;
                }
            }
            out.insert_term(rest, c);
        }
        out
    }

    /// Full evaluation; every variable appearing in the polynomial must be
    /// assigned.
    pub fn eval(&self, assignment: &[(Var, BigRational)]) -> BigRational {
        let reduced = self.substitute(assignment);
        reduced
            .constant_value()
            .expect("eval: unassigned variable remains")
    }

    /// Substitute `v -> v + 1` (used to form `s(t+1)` from `s(t)`).
    pub fn shift_var(&self, v: Var) -> MultiPoly {
        let shifted = MultiPoly::var_plus(v, 1);
        let mut out = MultiPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut term = MultiPoly::constant(coeff.clone());
            for idx in 0..4 {
                let e = mono[idx] as u32;
                if e == 0 {
                    continue;
                }
                let base = if idx == v.index() {
                    shifted.clone()
                } else {
                    let mut m = [0u16; 4];
                    m[idx] = 1;
                    MultiPoly { terms: BTreeMap::from([(m, BigRational::one())]) }
                };
                term = &term * &base.pow(e);
            }
            out = &out + &term;
        }
        out
    }

    /// View as a univariate polynomial in `v`; `None` if other variables occur.
    pub fn to_unipoly(&self, v: Var) -> Option<UniPoly> {
        let mut coeffs = vec![BigRational::zero(); self.degree_in(v) + 1];
        for (mono, coeff) in &self.terms {
            for idx in 0..4 {
                if idx != v.index() && mono[idx] != 0 {
                    return None;
                }
            }
            coeffs[mono[v.index()] as usize] = coeff.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    /// Iterate terms in canonical order as (exponents by [α,i,j,t], coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

/// Canonical-form equality: true iff `p - q` is the zero polynomial.
pub fn poly_equal(p: &MultiPoly, q: &MultiPoly) -> bool {
    p == q
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            out.insert_term(*mono, coeff.clone());
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            out.insert_term(*mono, -coeff.clone());
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, -v.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mono = [
                    ma[0] + mb[0],
                    ma[1] + mb[1],
                    ma[2] + mb[2],
                    ma[3] + mb[3],
                ];
                out.insert_term(mono, ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest-order terms last would look odd; BTreeMap order is fine and canonical
        for (mono, coeff) in &self.terms {
            let mut piece = String::new();
            let is_const = mono.iter().all(|&e| e == 0);
            let abs = coeff.abs();
            if is_const || !abs.is_one() {
                piece.push_str(&format_rational(&abs));
            }
            for v in Var::ALL {
                let e = mono[v.index()];
                if e == 0 {
                    continue;
                }
                if !piece.is_empty() {
                    piece.push('*');
                }
                piece.push_str(v.name());
                if e > 1 {
                    piece.push_str(&format!("^{e}"));
                }
            }
            if first {
                if coeff.is_negative() {
                    write!(f, "-{piece}")?;
                } else {
                    write!(f, "{piece}")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - {piece}")?;
            } else {
                write!(f, " + {piece}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{rat, rat_i};

    fn alpha() -> MultiPoly {
        MultiPoly::var(Var::Alpha)
    }
    fn vi() -> MultiPoly {
        MultiPoly::var(Var::I)
    }

    #[test]
    fn binomial_expansion_equal() {
        // (α+1)^2 == α^2 + 2α + 1
        let lhs = MultiPoly::var_plus(Var::Alpha, 1).pow(2);
        let rhs = alpha().pow(2) + alpha().scale(&rat_i(2)) + MultiPoly::one();
        assert!(poly_equal(&lhs, &rhs));
    }

    #[test]
    fn commutativity_equal() {
        let lhs = &alpha() * &vi();
        let rhs = &vi() * &alpha();
        assert!(poly_equal(&lhs, &rhs));
    }

    #[test]
    fn constant_offset_not_equal() {
        // α vs α + 0·i + 1
        let lhs = alpha();
        let rhs = alpha() + vi().scale(&rat_i(0)) + MultiPoly::one();
        assert!(!poly_equal(&lhs, &rhs));
    }

    #[test]
    fn substitute_and_eval() {
        // p = 3αj - t^2
        let p = (alpha() * MultiPoly::var(Var::J)).scale(&rat_i(3))
            - MultiPoly::var(Var::T).pow(2);
        let v = p.eval(&[
            (Var::Alpha, rat(1, 2)),
            (Var::J, rat_i(4)),
            (Var::T, rat_i(3)),
        ]);
        assert_eq!(v, rat_i(-3));
        let partial = p.substitute(&[(Var::T, rat_i(2))]);
        assert!(partial.uses_var(Var::Alpha) && !partial.uses_var(Var::T));
    }

    #[test]
    fn shift_var_matches_binomial() {
        // (t^2) shifted in t is (t+1)^2
        let p = MultiPoly::var(Var::T).pow(2);
        let shifted = p.shift_var(Var::T);
        let expect = MultiPoly::var_plus(Var::T, 1).pow(2);
        assert!(poly_equal(&shifted, &expect));
    }

    #[test]
    fn coeffs_in_t() {
        // p = (2+α)t^2 + 5
        let p = &MultiPoly::var_plus(Var::Alpha, 2) * &MultiPoly::var(Var::T).pow(2)
            + MultiPoly::constant_i64(5);
        let cs = p.coeffs_in(Var::T);
        assert_eq!(cs.len(), 3);
        assert!(poly_equal(&cs[0], &MultiPoly::constant_i64(5)));
        assert!(cs[1].is_zero());
        assert!(poly_equal(&cs[2], &MultiPoly::var_plus(Var::Alpha, 2)));
    }

    #[test]
    fn display_is_stable() {
        let p = MultiPoly::var_plus(Var::Alpha, 2) * MultiPoly::var(Var::J)
            - MultiPoly::var(Var::T).scale(&rat(1, 2));
        assert_eq!(p.to_string(), "2*j + alpha*j - 1/2*t");
    }
}
