//! Gerstenhaber bracket, insertions and the Hochschild coboundary.
//!
//! `cargo run --example bracket_and_differential`

use gerstenhaber::{bracket, delta_via_bracket, hochschild_delta, insert, multiplication, BasisTerm, Cochain, Rational};

fn term(x: [u32; 2], slots: &[[u32; 2]]) -> Cochain {
    Cochain::from_term(
        BasisTerm::new(x.into(), slots.iter().map(|&s| s.into()).collect()),
        Rational::from_integer(1.into()),
    )
}

fn main() -> gerstenhaber::Result<()> {
    let a = term([1, 0], &[[0, 1]]);
    let b = term([0, 1], &[[1, 0]]);
    println!("x₂∂₁ ∘₁ x₁∂₂ = {}", insert(&b, 1, &a)?);
    println!("[x₁∂₂, x₂∂₁] = {}", bracket(&a, &b)?);

    let h1 = Cochain::euler_field(2, 0);
    let t = term([2, 0], &[[1, 0], [0, 1]]);
    println!("[h¹, {t}] = {}", bracket(&h1, &t)?);

    let m = multiplication(2);
    println!("m = {m}, δm = {}", hochschild_delta(&m));

    let d12 = term([0, 0], &[[1, 1]]);
    println!("δ(∂₁∂₂)      = {}", hochschild_delta(&d12));
    println!("−[∂₁∂₂, m]   = {}", delta_via_bracket(&d12));
    println!("δδ(∂₁∂₂)     = {}", hochschild_delta(&hochschild_delta(&d12)));
    Ok(())
}
