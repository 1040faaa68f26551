//! Sparse polynomials in `ℚ[x₁,…,xₙ]` and the generalized Leibniz rule.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{check_dim, Result};
use crate::index::NatIndex;
use crate::Rational;

/// A polynomial stored as a map from exponent vector to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<NatIndex, Rational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(NatIndex::zero(dim), Rational::one())
    }

    /// The coordinate function `x_i` (0-based `i`).
    pub fn var(dim: usize, i: usize) -> Self {
        Self::monomial(NatIndex::unit(dim, i), Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::monomial(NatIndex::zero(dim), c)
    }

    pub fn monomial(exp: NatIndex, coeff: Rational) -> Self {
        let mut p = Polynomial::zero(exp.dim());
        p.add_term(exp, coeff);
        p
    }

    /// Build from possibly repeated or zero terms; merges and drops zeros.
    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (NatIndex, Rational)>,
    ) -> Result<Self> {
        let mut p = Polynomial::zero(dim);
        for (e, c) in terms {
            check_dim(dim, e.dim())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NatIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &NatIndex) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(NatIndex::total).max()
    }

    pub(crate) fn add_term(&mut self, exp: NatIndex, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * k))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut out = Polynomial::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Apply `∂^a = ∂₁^{a¹}…∂ₙ^{aⁿ}`.
    pub fn derive(&self, a: &NatIndex) -> Result<Polynomial> {
        check_dim(self.dim, a.dim())?;
        let mut out = Polynomial::zero(self.dim);
        for (e, c) in &self.terms {
            if let Some((k, rest)) = derive_monomial(e, a) {
                out.add_term(rest, c * Rational::from_integer(k));
            }
        }
        Ok(out)
    }
}

/// `∂^a x^e = k · x^{e−a}`; `None` when the result vanishes.
pub fn derive_monomial(e: &NatIndex, a: &NatIndex) -> Option<(BigInt, NatIndex)> {
    let rest = e.checked_sub(a)?;
    let mut k = BigInt::one();
    for (&ei, &ai) in e.entries().iter().zip(a.entries()) {
        for j in 0..ai {
            k *= BigInt::from(ei - j);
        }
    }
    Some((k, rest))
}

pub fn poly_add(u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
    u.add(v)
}

pub fn poly_mul(u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
    u.mul(v)
}

pub fn poly_derive(u: &Polynomial, a: &NatIndex) -> Result<Polynomial> {
    u.derive(a)
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for j in 0..k {
        r = r * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    r
}

/// All splittings `∂^a(uv) = Σ coeff · (∂^b u)(∂^{a−b} v)`, ordered by `b`.
pub fn leibniz_split(a: &NatIndex) -> Vec<(NatIndex, NatIndex, Rational)> {
    multinomial_split(a, 2)
        .into_iter()
        .map(|(mut parts, k)| {
            let second = parts.pop().expect("two parts");
            let first = parts.pop().expect("two parts");
            (first, second, Rational::from_integer(k))
        })
        .collect()
}

/// All ordered decompositions `a = c₁ + … + c_m` with the multinomial
/// coefficient `Πᵢ aⁱ! / (c₁ⁱ! ⋯ c_mⁱ!)`. Deterministic lexicographic order.
pub fn multinomial_split(a: &NatIndex, parts: usize) -> Vec<(Vec<NatIndex>, BigInt)> {
    assert!(parts >= 1, "at least one part");
    let dim = a.dim();
    // per-component compositions of aⁱ into `parts` pieces
    let per_component: Vec<Vec<(Vec<u32>, BigInt)>> = a
        .entries()
        .iter()
        .map(|&ai| compositions_u32(ai, parts))
        .collect();

    let mut out: Vec<(Vec<Vec<u32>>, BigInt)> = vec![(vec![Vec::with_capacity(dim); parts], BigInt::one())];
    for comps in &per_component {
        let mut next = Vec::with_capacity(out.len() * comps.len());
        for (acc, k) in &out {
            for (comp, kc) in comps {
                let mut acc = acc.clone();
                for (slot, &v) in acc.iter_mut().zip(comp) {
                    slot.push(v);
                }
                next.push((acc, k * kc));
            }
        }
        out = next;
    }
    let mut result: Vec<(Vec<NatIndex>, BigInt)> = out
        .into_iter()
        .map(|(ps, k)| (ps.into_iter().map(NatIndex::new).collect(), k))
        .collect();
    result.sort();
    result
}

// compositions of n into m ordered nonnegative parts, with multinomial weights
fn compositions_u32(n: u32, m: usize) -> Vec<(Vec<u32>, BigInt)> {
    if m == 1 {
        return vec![(vec![n], BigInt::one())];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        let k = binomial(n, first);
        for (mut rest, kr) in compositions_u32(n - first, m - 1) {
            rest.insert(0, first);
            out.push((rest, &k * kr));
        }
    }
    out
}

/// Ordered compositions of a multi-index into `parts` pieces, lexicographic.
pub fn compositions(a: &NatIndex, parts: usize) -> Vec<Vec<NatIndex>> {
    multinomial_split(a, parts).into_iter().map(|(p, _)| p).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (j, &p) in e.entries().iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "·x{}", j + 1)?,
                    _ => write!(f, "·x{}^{}", j + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn x1() -> Polynomial {
        Polynomial::var(2, 0)
    }

    #[test]
    fn derive_x1_squared_x2() {
        let u = Polynomial::monomial([2, 1].into(), q(1));
        let d = u.derive(&[1, 1].into()).unwrap();
        assert_eq!(d, Polynomial::monomial([1, 0].into(), q(2)));
    }

    #[test]
    fn derive_by_zero_is_identity() {
        let u = Polynomial::from_terms(
            2,
            [([3, 1].into(), q(5)), ([0, 2].into(), q(-1))],
        )
        .unwrap();
        assert_eq!(u.derive(&NatIndex::zero(2)).unwrap(), u);
    }

    #[test]
    fn difference_of_squares() {
        let one = Polynomial::one(2);
        let p = x1().add(&one).unwrap().mul(&x1().sub(&one).unwrap()).unwrap();
        let expected = Polynomial::from_terms(2, [([2, 0].into(), q(1)), ([0, 0].into(), q(-1))]).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let err = Polynomial::one(2).mul(&Polynomial::one(3)).unwrap_err();
        assert!(matches!(err, crate::Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn leibniz_product_rule() {
        let s = leibniz_split(&[1, 0].into());
        assert_eq!(
            s,
            vec![
                ([0, 0].into(), [1, 0].into(), q(1)),
                ([1, 0].into(), [0, 0].into(), q(1)),
            ]
        );
    }

    #[test]
    fn leibniz_binomial_row() {
        let coeffs: Vec<_> = leibniz_split(&[2, 0].into()).into_iter().map(|t| t.2).collect();
        assert_eq!(coeffs, vec![q(1), q(2), q(1)]);
    }

    #[test]
    fn leibniz_cross_check_on_x1_x2() {
        let u = x1();
        let v = Polynomial::var(2, 1);
        let a: NatIndex = [1, 1].into();
        let mut sum = Polynomial::zero(2);
        for (b, c, k) in leibniz_split(&a) {
            let term = u.derive(&b).unwrap().mul(&v.derive(&c).unwrap()).unwrap();
            sum = sum.add(&term.scale(&k)).unwrap();
        }
        assert_eq!(sum, u.mul(&v).unwrap().derive(&a).unwrap());
        assert_eq!(sum, Polynomial::one(2));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(&[2, 2].into(), 2).len(), 9);
        assert_eq!(compositions(&[2, 2].into(), 3).len(), 36);
        assert_eq!(compositions(&[0, 0].into(), 3).len(), 1);
    }
}
