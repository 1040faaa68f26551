//! The `ℤⁿ` weight grading and everything built on it: semigroup
//! subalgebras `C_Δ`, ideals `I^(r)_Δ`, the involutions `θ_I`, the bigrading
//! `C_ab` and the filtration `S_α`.

pub mod lattice;
pub mod semigroup;
pub mod subgroup;

use std::collections::BTreeMap;
use std::fmt;

use num::One;

use crate::cochain::{BasisTerm, Cochain};
use crate::error::{Error, Result};
use crate::index::IntIndex;
use crate::Rational;

pub use semigroup::{box_points, semigroup_member, Certificate, Decision, Membership, SemigroupSpec};
pub use subgroup::{subgroup_complement_check, ComplementCounterexample, ComplementReport};

/// The weight `a₀ − Σ a_s ∈ ℤⁿ`: the eigenvalue of `[hⁱ, ·]`.
pub type Weight = IntIndex;

pub fn weight_of(t: &BasisTerm) -> Weight {
    &t.x_part().to_int() - &t.slot_sum().to_int()
}

/// The pair `(a₀ − Σa_s, a₀ + Σa_s)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bigrade {
    pub a: IntIndex,
    pub b: IntIndex,
}

impl Bigrade {
    /// Checks the parity and sign constraints every realizable bigrade meets.
    pub fn new(a: IntIndex, b: IntIndex) -> Result<Self> {
        crate::error::check_dim(a.dim(), b.dim())?;
        let ok = a
            .entries()
            .iter()
            .zip(b.entries())
            .all(|(&x, &y)| (x + y) >= 0 && y >= x && (y - x) % 2 == 0);
        if !ok {
            return Err(Error::Invalid(format!("({a} {b}) is not a bigrade")));
        }
        Ok(Bigrade { a, b })
    }

    /// `a₀ = (a+b)/2`.
    pub fn x_part(&self) -> crate::index::NatIndex {
        let v = self
            .a
            .entries()
            .iter()
            .zip(self.b.entries())
            .map(|(x, y)| ((x + y) / 2) as u32)
            .collect();
        crate::index::NatIndex::new(v)
    }

    /// `Σa_s = (b−a)/2`.
    pub fn slot_sum(&self) -> crate::index::NatIndex {
        let v = self
            .a
            .entries()
            .iter()
            .zip(self.b.entries())
            .map(|(x, y)| ((y - x) / 2) as u32)
            .collect();
        crate::index::NatIndex::new(v)
    }
}

impl fmt::Display for Bigrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

pub fn bigrade_of(t: &BasisTerm) -> Bigrade {
    let x = t.x_part().to_int();
    let s = t.slot_sum().to_int();
    Bigrade { a: &x - &s, b: &x + &s }
}

fn decompose<K: Ord>(c: &Cochain, key: impl Fn(&BasisTerm) -> K) -> BTreeMap<K, Cochain> {
    let mut out: BTreeMap<K, Cochain> = BTreeMap::new();
    for (t, k) in c.terms() {
        out.entry(key(t))
            .or_insert_with(|| Cochain::zero(c.dim()))
            .add_term(t.clone(), k.clone());
    }
    out
}

/// Weight-homogeneous parts of `c`; they sum back to `c`.
pub fn decompose_by_weight(c: &Cochain) -> BTreeMap<Weight, Cochain> {
    decompose(c, weight_of)
}

pub fn decompose_by_bigrade(c: &Cochain) -> BTreeMap<Bigrade, Cochain> {
    decompose(c, bigrade_of)
}

/// The common weight of a nonzero weight-homogeneous cochain.
pub fn homogeneous_weight(c: &Cochain) -> Option<Weight> {
    let parts = decompose_by_weight(c);
    (parts.len() == 1).then(|| parts.into_keys().next().expect("one part"))
}

fn weights_decision(c: &Cochain, mut decide: impl FnMut(&Weight) -> Result<Decision>) -> Result<Decision> {
    let mut d = Decision::Yes;
    for w in decompose_by_weight(c).keys() {
        d = d.and(decide(w)?);
        if d == Decision::No {
            break;
        }
    }
    Ok(d)
}

/// Whether every weight component of `c` lies in `C_Δ`.
pub fn in_c_delta(c: &Cochain, delta: &SemigroupSpec) -> Result<Decision> {
    weights_decision(c, |w| Ok(delta.member(w)?.decision()))
}

/// Keep the components whose weight lies in `Δ`. Fails rather than guess
/// when some weight is undecided.
pub fn project_c_delta(c: &Cochain, delta: &SemigroupSpec) -> Result<Cochain> {
    let mut out = Cochain::zero(c.dim());
    for (w, part) in decompose_by_weight(c) {
        match delta.member(&w)? {
            Membership::Member(_) => out = out.checked_add(&part)?,
            Membership::NotMember => {}
            Membership::Inconclusive => return Err(Error::Inconclusive(w.to_string())),
        }
    }
    Ok(out)
}

/// Membership in `I^(r)_Δ = ⊕_{a₁…a_r∈Δ} C_{a₁+…+a_r}`.
pub fn in_ideal(c: &Cochain, delta: &SemigroupSpec, r: u64) -> Result<Decision> {
    if r == 0 {
        return Err(Error::Invalid("r must be at least 1".into()));
    }
    weights_decision(c, |w| Ok(delta.member_with_count(w, r)?.decision()))
}

/// A multi-index `I = (i₁,…,i_r)` of distinct coordinates (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndexSet {
    indices: Vec<usize>,
}

impl MultiIndexSet {
    pub fn new(dim: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::Invalid("multi-index must be nonempty".into()));
        }
        for (n, &i) in indices.iter().enumerate() {
            if i == 0 || i > dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            if indices[..n].contains(&i) {
                return Err(Error::Invalid(format!("index {i} repeated")));
            }
        }
        Ok(MultiIndexSet { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Whether `a^{i₁} + … + a^{i_r}` is even, i.e. `a ∈ Θ_I`.
    pub fn is_even(&self, a: &Weight) -> bool {
        self.indices
            .iter()
            .map(|&i| a.entries()[i - 1])
            .sum::<i64>()
            .rem_euclid(2)
            == 0
    }
}

fn check_theta(c: &Cochain, set: &MultiIndexSet) -> Result<()> {
    match set.indices.iter().find(|&&i| i > c.dim()) {
        Some(&i) => Err(Error::IndexOutOfRange { index: i, dim: c.dim() }),
        None => Ok(()),
    }
}

/// `θ_I`: multiply each weight-`a` component by `(−1)^{Σ_{i∈I} aⁱ}`.
pub fn theta_apply(c: &Cochain, set: &MultiIndexSet) -> Result<Cochain> {
    check_theta(c, set)?;
    let minus = -Rational::one();
    Cochain::from_terms(
        c.dim(),
        c.terms().map(|(t, k)| {
            let k = if set.is_even(&weight_of(t)) { k.clone() } else { k * &minus };
            (t.clone(), k)
        }),
    )
}

/// `(C_I⁺ part, C_I⁻ part)` of `c`.
pub fn theta_split(c: &Cochain, set: &MultiIndexSet) -> Result<(Cochain, Cochain)> {
    check_theta(c, set)?;
    let plus = c.filter(|t| set.is_even(&weight_of(t)));
    let minus = c.filter(|t| !set.is_even(&weight_of(t)));
    Ok((plus, minus))
}

/// An element `(a, b)` of the ordered semigroup `J`, `a ≤ b`
/// lexicographically. The derived order is the pair-lexicographic one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiltrationIndex {
    pub a: IntIndex,
    pub b: IntIndex,
}

impl FiltrationIndex {
    pub fn new(a: IntIndex, b: IntIndex) -> Result<Self> {
        crate::error::check_dim(a.dim(), b.dim())?;
        if a > b {
            return Err(Error::Invalid(format!("filtration index needs {a} ≤ {b}")));
        }
        Ok(FiltrationIndex { a, b })
    }

    pub fn add(&self, other: &FiltrationIndex) -> FiltrationIndex {
        FiltrationIndex {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        }
    }
}

impl From<Bigrade> for FiltrationIndex {
    fn from(g: Bigrade) -> Self {
        FiltrationIndex { a: g.a, b: g.b }
    }
}

impl fmt::Display for FiltrationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FiltrationMode {
    /// `S_ab = ⊕_{a≤d≤b} C_ad`: first index pinned to `a`.
    Literal,
    /// `S_α = ⊕_{(c,d)≤α} C_cd`.
    #[default]
    Cumulative,
}

pub fn filtration_contains(c: &Cochain, alpha: &FiltrationIndex, mode: FiltrationMode) -> bool {
    c.terms().all(|(t, _)| {
        let g = bigrade_of(t);
        match mode {
            FiltrationMode::Literal => g.a == alpha.a && alpha.a <= g.b && g.b <= alpha.b,
            FiltrationMode::Cumulative => FiltrationIndex::from(g) <= *alpha,
        }
    })
}

/// The least `α` with `c ∈ S_α`.
pub fn filtration_index(c: &Cochain, mode: FiltrationMode) -> Result<FiltrationIndex> {
    let grades: Vec<Bigrade> = decompose_by_bigrade(c).into_keys().collect();
    let Some(top) = grades.iter().max() else {
        return Err(Error::NoFiltrationIndex("zero cochain".into()));
    };
    match mode {
        FiltrationMode::Cumulative => Ok(top.clone().into()),
        FiltrationMode::Literal => {
            let a = &grades[0].a;
            if grades.iter().any(|g| &g.a != a) {
                return Err(Error::NoFiltrationIndex(
                    "literal mode needs a single weight".into(),
                ));
            }
            let b = grades.iter().map(|g| &g.b).max().expect("nonempty");
            FiltrationIndex::new(a.clone(), b.clone())
        }
    }
}
