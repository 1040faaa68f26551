//! Weights, semigroup membership with certificates, `C_Δ` and its ideals.
//!
//! `cargo run --example weights_and_semigroups`

use gerstenhaber::grading::{
    decompose_by_weight, in_c_delta, in_ideal, project_c_delta, Membership, SemigroupSpec,
};
use gerstenhaber::{cup, BasisTerm, Cochain, IntIndex, Rational};

fn term(x: [u32; 2], slots: &[[u32; 2]]) -> Cochain {
    Cochain::from_term(
        BasisTerm::new(x.into(), slots.iter().map(|&s| s.into()).collect()),
        Rational::from_integer(1.into()),
    )
}

fn main() -> gerstenhaber::Result<()> {
    let delta = SemigroupSpec::with_generators(2, vec![[0, -1].into()])?;
    for w in [[0, -3], [1, -1], [0, 0]] {
        let a = IntIndex::from(w);
        match delta.member(&a)? {
            Membership::Member(c) => println!("{a} ∈ ⟨(0,-1)⟩ with counts {:?}", c.counts),
            Membership::NotMember => println!("{a} ∉ ⟨(0,-1)⟩"),
            Membership::Inconclusive => println!("{a}: undecided"),
        }
    }

    let c = &(&term([1, 0], &[[1, 1]]) + &term([0, 0], &[[0, 2]])) + &term([0, 0], &[[0, 1]]);
    for (w, part) in decompose_by_weight(&c) {
        println!("weight {w}: {part}");
    }
    println!("projection onto C_Δ: {}", project_c_delta(&c, &delta)?);

    let f = term([0, 0], &[[0, 1]]);
    let ff = cup(&f, &f)?;
    println!("∂₂ ∈ C_Δ: {}", in_c_delta(&f, &delta)?);
    println!("∂₂ ∈ I^(2)_Δ: {}", in_ideal(&f, &delta, 2)?);
    println!("∂₂⊗∂₂ ∈ I^(2)_Δ: {}", in_ideal(&ff, &delta, 2)?);
    Ok(())
}
