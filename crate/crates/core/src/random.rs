//! Seeded generators of random cochains and polynomials for the law
//! suites.

use rand::Rng;

use crate::cochain::{BasisTerm, Cochain};
use crate::index::{IntIndex, NatIndex};
use crate::poly::Polynomial;
use crate::Rational;

/// Bounds for random cochains.
#[derive(Debug, Clone)]
pub struct CochainSampler {
    pub dim: usize,
    pub max_arity: usize,
    /// Bound on `|a₀|`.
    pub max_x_order: u32,
    /// Bound on each `|a_s|`.
    pub max_slot_order: u32,
    pub max_terms: usize,
}

impl CochainSampler {
    /// Arity ≤ 3, `|a₀|` ≤ 3, slot orders ≤ 2, at most 4 terms.
    pub fn standard(dim: usize) -> Self {
        CochainSampler {
            dim,
            max_arity: 3,
            max_x_order: 3,
            max_slot_order: 2,
            max_terms: 4,
        }
    }

    pub fn with_max_arity(mut self, max_arity: usize) -> Self {
        self.max_arity = max_arity;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn coefficient<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let mut n: i64 = rng.gen_range(1..=5);
        if rng.gen_bool(0.5) {
            n = -n;
        }
        let d: i64 = rng.gen_range(1..=3);
        Rational::new(n.into(), d.into())
    }

    /// A multi-index of total order at most `max`.
    pub fn index<R: Rng + ?Sized>(&self, rng: &mut R, max: u32) -> NatIndex {
        let total = rng.gen_range(0..=max);
        let mut v = vec![0u32; self.dim];
        for _ in 0..total {
            v[rng.gen_range(0..self.dim)] += 1;
        }
        NatIndex::new(v)
    }

    pub fn term<R: Rng + ?Sized>(&self, rng: &mut R, arity: usize) -> BasisTerm {
        let x = self.index(rng, self.max_x_order);
        let slots = (0..arity).map(|_| self.index(rng, self.max_slot_order)).collect();
        BasisTerm::new(x, slots)
    }

    /// Arity-homogeneous cochain with 1..=max_terms terms (may cancel to
    /// fewer, never to zero).
    pub fn homogeneous<R: Rng + ?Sized>(&self, rng: &mut R, arity: usize) -> Cochain {
        loop {
            let n = rng.gen_range(1..=self.max_terms);
            let c = Cochain::from_terms(
                self.dim,
                (0..n).map(|_| (self.term(rng, arity), self.coefficient(rng))),
            )
            .expect("sampler dimensions are consistent");
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// Homogeneous cochain of random arity in `0..=max_arity`.
    pub fn cochain<R: Rng + ?Sized>(&self, rng: &mut R) -> (usize, Cochain) {
        let p = rng.gen_range(0..=self.max_arity);
        (p, self.homogeneous(rng, p))
    }

    /// A mixed-arity cochain.
    pub fn mixed<R: Rng + ?Sized>(&self, rng: &mut R) -> Cochain {
        let n = rng.gen_range(1..=self.max_terms);
        Cochain::from_terms(
            self.dim,
            (0..n).map(|_| {
                let p = rng.gen_range(0..=self.max_arity);
                (self.term(rng, p), self.coefficient(rng))
            }),
        )
        .expect("sampler dimensions are consistent")
    }

    /// A basis term of the given weight and arity. Negative weight
    /// components are absorbed into the first slot, so arity 0 is bumped to
    /// 1 when the weight is not in ℕⁿ.
    pub fn term_with_weight<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        weight: &IntIndex,
        arity: usize,
    ) -> BasisTerm {
        let arity = if weight.to_nat().is_none() { arity.max(1) } else { arity };
        let mut slots: Vec<NatIndex> = (0..arity).map(|_| self.index(rng, self.max_slot_order)).collect();
        let sum = slots
            .iter()
            .fold(NatIndex::zero(self.dim), |acc, s| &acc + s)
            .to_int();
        let x = &sum + weight;
        let (x_pos, deficit) = x.split_signs();
        if let Some(first) = slots.first_mut() {
            *first = &*first + &deficit;
        }
        BasisTerm::new(x_pos, slots)
    }

    /// Weight-homogeneous cochain of the given weight, arities mixed.
    pub fn with_weight<R: Rng + ?Sized>(&self, rng: &mut R, weight: &IntIndex) -> Cochain {
        loop {
            let n = rng.gen_range(1..=self.max_terms);
            let c = Cochain::from_terms(
                self.dim,
                (0..n).map(|_| {
                    let p = rng.gen_range(0..=self.max_arity);
                    (self.term_with_weight(rng, weight, p), self.coefficient(rng))
                }),
            )
            .expect("sampler dimensions are consistent");
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// Vector field `Σ χⁱ(x)∂ᵢ` with polynomial coefficients.
    pub fn vector_field<R: Rng + ?Sized>(&self, rng: &mut R) -> Cochain {
        loop {
            let n = rng.gen_range(1..=self.max_terms);
            let c = Cochain::from_terms(
                self.dim,
                (0..n).map(|_| {
                    let x = self.index(rng, self.max_x_order);
                    let i = rng.gen_range(0..self.dim);
                    (BasisTerm::new(x, vec![NatIndex::unit(self.dim, i)]), self.coefficient(rng))
                }),
            )
            .expect("sampler dimensions are consistent");
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// Random polynomial of total degree at most `max_degree`.
    pub fn polynomial<R: Rng + ?Sized>(&self, rng: &mut R, max_degree: u32, max_terms: usize) -> Polynomial {
        let n = rng.gen_range(1..=max_terms);
        Polynomial::from_terms(
            self.dim,
            (0..n).map(|_| (self.index(rng, max_degree), self.coefficient(rng))),
        )
        .expect("sampler dimensions are consistent")
    }
}
