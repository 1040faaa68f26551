//! Finitely generated additive semigroups `Δ ⊂ ℤⁿ` with certified
//! membership.
//!
//! Membership is decided by an exhaustive search over coefficient vectors
//! `c ≥ 0` with `Σcᵢ` up to a cap, backed by three sound proofs of absence:
//! lattice exclusion, a separating functional (`w·g ≥ 0` for all
//! generators, `w·a < 0`), and a norm bound when all generators lie in an
//! open half-space. Everything else is reported as inconclusive.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{check_dim, Error, Result};
use crate::grading::lattice::Lattice;
use crate::index::IntIndex;

/// Upper bound on the points stored by the level search.
const MAX_SEARCH_POINTS: usize = 400_000;

/// Nonnegative generator counts with `Σ cᵢ gᵢ = a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub counts: Vec<u64>,
}

impl Certificate {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn evaluate(&self, generators: &[IntIndex], dim: usize) -> IntIndex {
        let mut acc = IntIndex::zero(dim);
        for (c, g) in self.counts.iter().zip(generators) {
            acc = &acc + &g.scale(*c as i64);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(Certificate),
    NotMember,
    Inconclusive,
}

impl Membership {
    pub fn decision(&self) -> Decision {
        match self {
            Membership::Member(_) => Decision::Yes,
            Membership::NotMember => Decision::No,
            Membership::Inconclusive => Decision::Inconclusive,
        }
    }
}

/// A three-valued answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Inconclusive,
}

impl Decision {
    /// Conjunction: any `No` wins, then any `Inconclusive`.
    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Inconclusive, _) | (_, Decision::Inconclusive) => Decision::Inconclusive,
            _ => Decision::Yes,
        }
    }

    pub fn definite(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Inconclusive => None,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Inconclusive => "inconclusive",
        })
    }
}

// level l: point -> index of the generator added last
type Levels = Vec<HashMap<IntIndex, usize>>;

/// The semigroup `{Σ cᵢgᵢ : cᵢ ∈ ℕ, Σcᵢ ≥ 1}`.
#[derive(Debug)]
pub struct SemigroupSpec {
    dim: usize,
    generators: Vec<IntIndex>,
    search_cap: u64,
    levels: OnceLock<Levels>,
    lattice: OnceLock<Lattice>,
}

impl Clone for SemigroupSpec {
    fn clone(&self) -> Self {
        SemigroupSpec {
            dim: self.dim,
            generators: self.generators.clone(),
            search_cap: self.search_cap,
            levels: OnceLock::new(),
            lattice: OnceLock::new(),
        }
    }
}

impl PartialEq for SemigroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.generators == other.generators
            && self.search_cap == other.search_cap
    }
}

impl SemigroupSpec {
    pub const DEFAULT_CAP: u64 = 24;

    pub fn new(dim: usize, generators: Vec<IntIndex>, search_cap: u64) -> Result<Self> {
        for g in &generators {
            check_dim(dim, g.dim())?;
        }
        if search_cap == 0 {
            return Err(Error::Invalid("search cap must be positive".into()));
        }
        let mut generators = generators;
        generators.dedup();
        Ok(SemigroupSpec {
            dim,
            generators,
            search_cap,
            levels: OnceLock::new(),
            lattice: OnceLock::new(),
        })
    }

    pub fn with_generators(dim: usize, generators: Vec<IntIndex>) -> Result<Self> {
        Self::new(dim, generators, Self::DEFAULT_CAP)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IntIndex] {
        &self.generators
    }

    pub fn search_cap(&self) -> u64 {
        self.search_cap
    }

    fn levels(&self) -> &Levels {
        self.levels.get_or_init(|| {
            let mut levels: Levels = vec![HashMap::new()];
            levels[0].insert(IntIndex::zero(self.dim), usize::MAX);
            let mut stored = 1usize;
            for _ in 1..=self.search_cap {
                let prev = levels.last().expect("level 0 exists");
                let mut next = HashMap::new();
                for p in prev.keys() {
                    for (i, g) in self.generators.iter().enumerate() {
                        next.entry(p + g).or_insert(i);
                    }
                }
                stored += next.len();
                levels.push(next);
                if stored > MAX_SEARCH_POINTS {
                    break;
                }
            }
            levels
        })
    }

    /// Largest `Σcᵢ` the level search fully covered.
    fn effective_cap(&self) -> u64 {
        (self.levels().len() - 1) as u64
    }

    fn lattice(&self) -> &Lattice {
        self.lattice.get_or_init(|| Lattice::new(self.dim, &self.generators))
    }

    fn certificate_at(&self, level: usize, a: &IntIndex) -> Certificate {
        let levels = self.levels();
        let mut counts = vec![0u64; self.generators.len()];
        let mut p = a.clone();
        for l in (1..=level).rev() {
            let i = levels[l][&p];
            counts[i] += 1;
            p = &p - &self.generators[i];
        }
        Certificate { counts }
    }

    fn search(&self, a: &IntIndex, min_count: u64) -> Option<Certificate> {
        let levels = self.levels();
        (min_count.max(1) as usize..levels.len())
            .find(|&l| levels[l].contains_key(a))
            .map(|l| self.certificate_at(l, a))
    }

    /// Membership in `Δ`.
    pub fn member(&self, a: &IntIndex) -> Result<Membership> {
        self.member_with_count(a, 1)
    }

    /// Membership in the `r`-fold sumset `Δ + … + Δ`, i.e. a certificate
    /// with `Σcᵢ ≥ r`.
    pub fn member_with_count(&self, a: &IntIndex, r: u64) -> Result<Membership> {
        check_dim(self.dim, a.dim())?;
        if r == 0 {
            return Err(Error::Invalid("r must be at least 1".into()));
        }
        if self.generators.is_empty() {
            return Ok(Membership::NotMember);
        }
        if let Some(c) = self.search(a, r) {
            return Ok(Membership::Member(c));
        }
        let Some(z) = self.lattice().coefficients(a) else {
            return Ok(Membership::NotMember);
        };
        if let Some(c) = self.group_certificate(&z, r) {
            return Ok(Membership::Member(c));
        }
        if self.separated(a) {
            return Ok(Membership::NotMember);
        }
        if let Some(bound) = self.count_bound(a) {
            if bound < r as i64 || bound <= self.effective_cap() as i64 {
                return Ok(Membership::NotMember);
            }
        }
        Ok(Membership::Inconclusive)
    }

    /// If every `−gᵢ` is certified in `Δ`, then `Δ` is the lattice itself and
    /// any lattice point gets a certificate by substituting negatives.
    fn group_certificate(&self, z: &[i128], r: u64) -> Option<Certificate> {
        let negs: Vec<Certificate> = self
            .generators
            .iter()
            .map(|g| self.search(&-g, 1))
            .collect::<Option<_>>()?;
        let mut counts = vec![0u64; self.generators.len()];
        for (i, &zi) in z.iter().enumerate() {
            if zi >= 0 {
                counts[i] += zi as u64;
            } else {
                for (c, n) in counts.iter_mut().zip(&negs[i].counts) {
                    *c += n * zi.unsigned_abs() as u64;
                }
            }
        }
        // pad with g₀ + (−g₀) pairs until Σcᵢ ≥ r
        while counts.iter().sum::<u64>() < r {
            counts[0] += 1;
            for (c, n) in counts.iter_mut().zip(&negs[0].counts) {
                *c += n;
            }
        }
        Some(Certificate { counts })
    }

    fn functionals(&self) -> impl Iterator<Item = IntIndex> {
        let k: i64 = if self.dim <= 3 { 3 } else { 1 };
        let dim = self.dim;
        let total = (2 * k + 1).pow(dim as u32);
        (0..total).map(move |mut idx| {
            let mut w = Vec::with_capacity(dim);
            for _ in 0..dim {
                w.push(idx % (2 * k + 1) - k);
                idx /= 2 * k + 1;
            }
            IntIndex::new(w)
        })
    }

    // some w with w·g ≥ 0 for every generator and w·a < 0
    fn separated(&self, a: &IntIndex) -> bool {
        self.functionals()
            .any(|w| w.dot(a) < 0 && self.generators.iter().all(|g| w.dot(g) >= 0))
    }

    // best bound on Σcᵢ from a functional positive on every generator
    fn count_bound(&self, a: &IntIndex) -> Option<i64> {
        self.functionals()
            .filter_map(|w| {
                let min = self.generators.iter().map(|g| w.dot(g)).min()?;
                (min > 0).then(|| w.dot(a).div_euclid(min))
            })
            .min()
    }

    /// Whether `Δ + Δ = Δ` holds on the box `[-radius, radius]ⁿ`.
    pub fn sumset_stable_on_box(&self, radius: i64) -> Decision {
        let mut d = Decision::Yes;
        for a in box_points(self.dim, radius) {
            let one = self.member(&a).map(|m| m.decision()).unwrap_or(Decision::Inconclusive);
            if one != Decision::Yes {
                if one == Decision::Inconclusive {
                    d = d.and(Decision::Inconclusive);
                }
                continue;
            }
            let two = self
                .member_with_count(&a, 2)
                .map(|m| m.decision())
                .unwrap_or(Decision::Inconclusive);
            d = d.and(two);
        }
        d
    }
}

/// All points of `[-radius, radius]ⁿ` in lexicographic order.
pub fn box_points(dim: usize, radius: i64) -> Vec<IntIndex> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-radius..=radius).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(IntIndex::new).collect()
}

pub fn semigroup_member(delta: &SemigroupSpec, a: &IntIndex) -> Result<Membership> {
    delta.member(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(gens: &[[i64; 2]]) -> SemigroupSpec {
        SemigroupSpec::with_generators(2, gens.iter().map(|&g| g.into()).collect()).unwrap()
    }

    fn check_certificate(s: &SemigroupSpec, a: [i64; 2], m: &Membership) -> u64 {
        let Membership::Member(c) = m else {
            panic!("expected member, got {m:?}");
        };
        assert_eq!(c.evaluate(s.generators(), 2), a.into());
        assert!(c.total() >= 1);
        c.total()
    }

    #[test]
    fn ray_membership() {
        let s = spec(&[[-1, -1]]);
        let m = s.member(&[-3, -3].into()).unwrap();
        assert_eq!(m, Membership::Member(Certificate { counts: vec![3] }));
    }

    #[test]
    fn off_ray_is_not_member() {
        let s = spec(&[[-1, -1]]);
        assert_eq!(s.member(&[-1, 0].into()).unwrap(), Membership::NotMember);
        // 0 is not a positive combination
        assert_eq!(s.member(&[0, 0].into()).unwrap(), Membership::NotMember);
        // far along the ray but beyond the cap is still decided by the bound
        assert_eq!(s.member(&[3, 3].into()).unwrap(), Membership::NotMember);
    }

    #[test]
    fn cancellation_pair_contains_zero() {
        let s = spec(&[[1, 0], [-1, 0]]);
        let m = s.member(&[0, 0].into()).unwrap();
        assert_eq!(check_certificate(&s, [0, 0], &m), 2);
        assert_eq!(s.member(&[0, 1].into()).unwrap(), Membership::NotMember);
    }

    #[test]
    fn group_beyond_the_cap_is_certified() {
        let s = SemigroupSpec::new(
            2,
            vec![[2, 0].into(), [-2, 0].into(), [0, 1].into(), [0, -1].into()],
            4,
        )
        .unwrap();
        let m = s.member(&[20, -9].into()).unwrap();
        check_certificate(&s, [20, -9], &m);
        assert_eq!(s.member(&[1, 0].into()).unwrap(), Membership::NotMember);
    }

    #[test]
    fn rfold_membership() {
        let s = spec(&[[-1, -1]]);
        assert!(matches!(s.member_with_count(&[-2, -2].into(), 2).unwrap(), Membership::Member(_)));
        assert_eq!(s.member_with_count(&[-1, -1].into(), 2).unwrap(), Membership::NotMember);
    }

    #[test]
    fn inconclusive_when_nothing_proves_absence() {
        // (0,1) lies in the real cone of (1,0), (-1,2) but off their lattice
        let s = SemigroupSpec::new(2, vec![[1, 0].into(), [-1, 2].into()], 2).unwrap();
        assert_eq!(s.member(&[0, 1].into()).unwrap(), Membership::NotMember);
        // (0,4) needs four generators; the best count bound is 4 > cap
        let s = SemigroupSpec::new(2, vec![[1, 1].into(), [-1, 1].into()], 1).unwrap();
        assert_eq!(s.member(&[0, 4].into()).unwrap(), Membership::Inconclusive);
    }

    #[test]
    fn sumset_stability() {
        let z2 = spec(&[[1, 0], [-1, 0], [0, 1], [0, -1]]);
        assert_eq!(z2.sumset_stable_on_box(2), Decision::Yes);
        assert_eq!(spec(&[[-1, -1]]).sumset_stable_on_box(2), Decision::No);
    }

    #[test]
    fn dimension_checked() {
        let s = spec(&[[1, 0]]);
        assert!(s.member(&[1, 0, 0].into()).is_err());
        assert!(SemigroupSpec::with_generators(2, vec![[1].into()]).is_err());
    }
}
