//! Multi-indices: exponent vectors in ℕⁿ and weight vectors in ℤⁿ.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An exponent vector `a ∈ ℕⁿ`, used both for `x^a` and `∂^a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatIndex(Vec<u32>);

impl NatIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        NatIndex(entries)
    }

    pub fn zero(dim: usize) -> Self {
        NatIndex(vec![0; dim])
    }

    /// The unit vector `e_i` (0-based `i`).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        NatIndex(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total order `|a| = Σ aⁱ`.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn le_componentwise(&self, other: &NatIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise difference, `None` if some component would go negative.
    pub fn checked_sub(&self, other: &NatIndex) -> Option<NatIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(NatIndex)
    }

    pub fn to_int(&self) -> IntIndex {
        IntIndex(self.0.iter().map(|&e| i64::from(e)).collect())
    }
}

impl Add for &NatIndex {
    type Output = NatIndex;

    fn add(self, rhs: &NatIndex) -> NatIndex {
        debug_assert_eq!(self.dim(), rhs.dim());
        NatIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for NatIndex {
    fn from(v: Vec<u32>) -> Self {
        NatIndex(v)
    }
}

impl<const N: usize> From<[u32; N]> for NatIndex {
    fn from(v: [u32; N]) -> Self {
        NatIndex(v.to_vec())
    }
}

impl fmt::Display for NatIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// A weight vector `a ∈ ℤⁿ`. The derived `Ord` is the lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntIndex(Vec<i64>);

impl IntIndex {
    pub fn new(entries: Vec<i64>) -> Self {
        IntIndex(entries)
    }

    pub fn zero(dim: usize) -> Self {
        IntIndex(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn scale(&self, k: i64) -> IntIndex {
        IntIndex(self.0.iter().map(|e| e * k).collect())
    }

    pub fn dot(&self, other: &IntIndex) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn le_componentwise(&self, other: &IntIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Split into positive and negative parts: `self = pos − neg`.
    pub fn split_signs(&self) -> (NatIndex, NatIndex) {
        let pos = self.0.iter().map(|&e| e.max(0) as u32).collect();
        let neg = self.0.iter().map(|&e| (-e).max(0) as u32).collect();
        (NatIndex(pos), NatIndex(neg))
    }

    /// Interpret as an exponent vector if every entry is nonnegative.
    pub fn to_nat(&self) -> Option<NatIndex> {
        self.0
            .iter()
            .map(|&e| u32::try_from(e).ok())
            .collect::<Option<Vec<_>>>()
            .map(NatIndex)
    }
}

impl Add for &IntIndex {
    type Output = IntIndex;

    fn add(self, rhs: &IntIndex) -> IntIndex {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntIndex {
    type Output = IntIndex;

    fn sub(self, rhs: &IntIndex) -> IntIndex {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntIndex {
    type Output = IntIndex;

    fn neg(self) -> IntIndex {
        IntIndex(self.0.iter().map(|e| -e).collect())
    }
}

impl From<Vec<i64>> for IntIndex {
    fn from(v: Vec<i64>) -> Self {
        IntIndex(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntIndex {
    fn from(v: [i64; N]) -> Self {
        IntIndex(v.to_vec())
    }
}

impl fmt::Display for IntIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("(")?;
    for (i, e) in items.enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(")")
}
