//! The complement criterion: for `C = C_H ⊕ L` with `L` spanned by the
//! weights outside `H`, the inclusions `C_H ⌣ L ⊂ L`, `L ⌣ C_H ⊂ L` and
//! `[C_H, L] ⊂ L` hold exactly when `H` is a subgroup.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::{BasisTerm, Cochain};
use crate::error::Result;
use crate::grading::semigroup::{box_points, Decision, SemigroupSpec};
use crate::grading::{decompose_by_weight, Weight};
use crate::index::IntIndex;
use crate::ops::{bracket, cup};
use crate::random::CochainSampler;


const SEARCH_RADIUS: i64 = 3;

/// A concrete failure of `C_H ⌣ L ⊂ L`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplementCounterexample {
    pub h: Weight,
    pub k: Weight,
    pub sum: Weight,
    /// `f ∈ C_h`.
    pub f: Cochain,
    /// `g ∈ L`, weight `k`.
    pub g: Cochain,
    /// `f ⌣ g`, which lies in `C_H` rather than `L`.
    pub product: Cochain,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplementReport {
    /// Whether every generator's negative is certified in `H`.
    pub is_subgroup: Decision,
    pub samples_checked: usize,
    /// Sampled `(f, g, operation)` whose result left `L`.
    pub violations: Vec<(Cochain, Cochain, &'static str)>,
    pub counterexample: Option<ComplementCounterexample>,
}

impl ComplementReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.counterexample.is_none()
    }
}

fn weight_decision(h: &SemigroupSpec, w: &Weight) -> Decision {
    h.member(w).map(|m| m.decision()).unwrap_or(Decision::Inconclusive)
}

// `x^{w⁺}∂^{w⁻}`, an arity-1 term of weight w
fn witness_term(w: &IntIndex) -> Cochain {
    let (pos, neg) = w.split_signs();
    Cochain::from_term(BasisTerm::new(pos, vec![neg]), num::One::one())
}

fn lands_in_l(h: &SemigroupSpec, c: &Cochain) -> Option<bool> {
    let mut ok = true;
    for w in decompose_by_weight(c).keys() {
        match weight_decision(h, w) {
            Decision::Yes => ok = false,
            Decision::No => {}
            Decision::Inconclusive => return None,
        }
    }
    Some(ok)
}

fn sample_weight(rng: &mut ChaCha8Rng, h: &SemigroupSpec, want: Decision) -> Option<Weight> {
    for _ in 0..200 {
        let w = IntIndex::new(
            (0..h.dim())
                .map(|_| rng.gen_range(-SEARCH_RADIUS..=SEARCH_RADIUS))
                .collect(),
        );
        if weight_decision(h, &w) == want {
            return Some(w);
        }
    }
    None
}

/// Check the complement inclusions on `samples` random pairs and search the
/// box `[-3, 3]ⁿ` for weights `h ∈ H`, `k ∉ H` with `h + k ∈ H`.
pub fn subgroup_complement_check(h: &SemigroupSpec, samples: usize, seed: u64) -> Result<ComplementReport> {
    let is_subgroup = h
        .generators()
        .iter()
        .map(|g| weight_decision(h, &-g))
        .fold(Decision::Yes, Decision::and);

    let sampler = CochainSampler::standard(h.dim()).with_max_arity(2).with_max_terms(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let mut checked = 0;
    for _ in 0..samples {
        let (Some(wh), Some(wk)) = (
            sample_weight(&mut rng, h, Decision::Yes),
            sample_weight(&mut rng, h, Decision::No),
        ) else {
            continue;
        };
        let f = sampler.with_weight(&mut rng, &wh);
        let g = sampler.with_weight(&mut rng, &wk);
        let results = [
            ("cup(C_H, L)", cup(&f, &g)?),
            ("cup(L, C_H)", cup(&g, &f)?),
            ("bracket(C_H, L)", bracket(&f, &g)?),
        ];
        checked += 1;
        for (name, r) in results {
            if lands_in_l(h, &r) == Some(false) {
                violations.push((f.clone(), g.clone(), name));
            }
        }
    }

    let mut counterexample = None;
    let points = box_points(h.dim(), SEARCH_RADIUS);
    let members: Vec<&Weight> = points.iter().filter(|w| weight_decision(h, w) == Decision::Yes).collect();
    let others: Vec<&Weight> = points.iter().filter(|w| weight_decision(h, w) == Decision::No).collect();
    'search: for wh in &members {
        for wk in &others {
            let sum = *wh + *wk;
            if weight_decision(h, &sum) == Decision::Yes {
                let f = witness_term(wh);
                let g = witness_term(wk);
                let product = cup(&f, &g)?;
                counterexample = Some(ComplementCounterexample {
                    h: (*wh).clone(),
                    k: (*wk).clone(),
                    sum,
                    f,
                    g,
                    product,
                });
                break 'search;
            }
        }
    }

    Ok(ComplementReport {
        is_subgroup,
        samples_checked: checked,
        violations,
        counterexample,
    })
}
