//! Order-by-order solution of the Maurer–Cartan equation `δπ = ½[π,π]`
//! for 2-cochains `π = Σ_{k≥1} t^k p_k`, giving an associative star
//! product `f ∗ g = fg + π(f,g)` modulo `t^{N+1}`.
//!
//! The series is stored in the uniform convention `p₁ = π₁/2`, so a
//! bivector `π₁` enters as the head term `(t/2)π₁`. At order `k ≥ 2` the
//! equation reads `δp_k = B_k` with `B_k = ½ Σ_{i+j=k} [p_i, p_j]`, which is
//! solved block by block in the bigrading.

pub mod block;
pub mod linalg;
mod star;



use crate::cochain::Cochain;
use crate::error::{check_dim, Error, Result};
use crate::grading::{decompose_by_bigrade, in_c_delta, in_ideal, Decision, SemigroupSpec};
use crate::ops::{bracket, hochschild_delta};
use crate::Rational;

pub use block::{build_block, BlockSystem};
pub use star::{associativity_defect, star_apply, star_series, TSeries};

/// A truncated deformation `π = Σ_{k=1}^N t^k p_k` of the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deformation {
    dim: usize,
    cochains: Vec<Cochain>,
}

impl Deformation {
    /// `cochains[k-1]` is `p_k`; each must be an arity-2 cochain.
    pub fn new(dim: usize, cochains: Vec<Cochain>) -> Result<Self> {
        for c in &cochains {
            check_dim(dim, c.dim())?;
            if let Some(p) = c.homogeneous_arity()? {
                if p != 2 {
                    return Err(Error::ArityMismatch { expected: 2, found: p });
                }
            }
        }
        Ok(Deformation { dim, cochains })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.cochains.len()
    }

    /// `p_k`, 1-based.
    pub fn p(&self, k: usize) -> &Cochain {
        &self.cochains[k - 1]
    }

    pub fn cochains(&self) -> &[Cochain] {
        &self.cochains
    }

    /// Replace `p_k`.
    pub fn with_p(mut self, k: usize, c: Cochain) -> Result<Self> {
        if k == 0 || k > self.order() {
            return Err(Error::Invalid(format!("order {k} not in 1..={}", self.order())));
        }
        self.cochains[k - 1] = c;
        Deformation::new(self.dim, self.cochains)
    }
}

/// `B_k = ½ Σ_{i+j=k, i,j≥1} [p_i, p_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionTerm {
    pub k: usize,
    pub value: Cochain,
}

pub fn obstruction(def: &Deformation, k: usize) -> Result<ObstructionTerm> {
    if k < 2 {
        return Ok(ObstructionTerm { k, value: Cochain::zero(def.dim) });
    }
    if def.order() < k - 1 {
        return Err(Error::Precondition(format!(
            "obstruction at order {k} needs p_1..p_{}, have {}",
            k - 1,
            def.order()
        )));
    }
    let mut sum = Cochain::zero(def.dim);
    for i in 1..k {
        sum = sum.checked_add(&bracket(def.p(i), def.p(k - i))?)?;
    }
    let half = Rational::new(1.into(), 2.into());
    Ok(ObstructionTerm { k, value: sum.scale(&half) })
}

/// Find `X` with `δX = B` for an arity-3 cochain `B`, one bigrade block at
/// a time. Free variables are pinned to zero, so no cocycle is added.
pub fn solve_delta(b: &Cochain) -> Result<Cochain> {
    if let Some(p) = b.homogeneous_arity()? {
        if p != 3 {
            return Err(Error::ArityMismatch { expected: 3, found: p });
        }
    }
    let mut x = Cochain::zero(b.dim());
    for (bg, part) in decompose_by_bigrade(b) {
        let block = build_block(&bg, b.dim())?;
        let rhs = block.coordinates3(&part)?;
        let sol = linalg::solve(&block.matrix, &rhs).ok_or_else(|| Error::NotCoboundary {
            bigrade: bg.to_string(),
        })?;
        x = x.checked_add(&block.cochain2(&sol))?;
    }
    Ok(x)
}

#[derive(Debug, Clone)]
pub struct SolverOptions {
    /// At order `k` the obstruction may carry total slot order at most
    /// `k · slot_order_per_step`; beyond that the solver stops with an error.
    pub slot_order_per_step: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { slot_order_per_step: 8 }
    }
}

pub fn solve_maurer_cartan(pi1: &Cochain, order: usize, delta: Option<&SemigroupSpec>) -> Result<Deformation> {
    solve_maurer_cartan_with(pi1, order, delta, &SolverOptions::default())
}

/// Build `p₁ = π₁/2, p₂, …, p_N` solving `δp_k = B_k`.
///
/// With `delta` given, `π₁ ∈ C_Δ` is required and every `p_k`, `k ≥ 2`, is
/// checked to lie in `I^(2)_Δ`.
pub fn solve_maurer_cartan_with(
    pi1: &Cochain,
    order: usize,
    delta: Option<&SemigroupSpec>,
    options: &SolverOptions,
) -> Result<Deformation> {
    if pi1.dim() != 2 {
        return Err(Error::Precondition(format!(
            "the Maurer-Cartan solver works on the plane, got dimension {}",
            pi1.dim()
        )));
    }
    if order == 0 {
        return Err(Error::Invalid("order must be at least 1".into()));
    }
    if let Some(p) = pi1.homogeneous_arity()? {
        if p != 2 {
            return Err(Error::ArityMismatch { expected: 2, found: p });
        }
    }
    let p1 = pi1.scale(&Rational::new(1.into(), 2.into()));
    if !hochschild_delta(&p1).is_zero() {
        return Err(Error::Precondition("π₁ is not a Hochschild cocycle".into()));
    }
    if let Some(d) = delta {
        check_dim(2, d.dim())?;
        match in_c_delta(pi1, d)? {
            Decision::Yes => {}
            Decision::No => return Err(Error::Precondition("π₁ is not in C_Δ".into())),
            Decision::Inconclusive => return Err(Error::Inconclusive("weights of π₁".into())),
        }
    }

    let mut def = Deformation { dim: 2, cochains: vec![p1] };
    for k in 2..=order {
        let b = obstruction(&def, k)?.value;
        let cap = options.slot_order_per_step * k as u64;
        let found = b.max_slot_total();
        if found > cap {
            return Err(Error::OrderCapExceeded { order: k, found, cap });
        }
        if !hochschild_delta(&b).is_zero() {
            return Err(Error::Precondition(format!("obstruction B_{k} is not δ-closed")));
        }
        let pk = solve_delta(&b)?;
        if let Some(d) = delta {
            if in_ideal(&pk, d, 2)? != Decision::Yes {
                return Err(Error::Precondition(format!("p_{k} left the ideal I^(2)_Δ")));
            }
        }
        def.cochains.push(pk);
    }
    Ok(def)
}

