//! Build cochains, take cup products and evaluate them on polynomials.
//!
//! `cargo run --example cochains_and_evaluation`

use gerstenhaber::{cup, BasisTerm, Cochain, Polynomial, Rational};

fn main() -> gerstenhaber::Result<()> {
    let one = Rational::from_integer(1.into());
    let d1 = Cochain::from_term(BasisTerm::new([0, 0].into(), vec![[1, 0].into()]), one.clone());
    let d2 = Cochain::from_term(BasisTerm::new([0, 0].into(), vec![[0, 1].into()]), one.clone());
    let x1 = Cochain::from_polynomial(&Polynomial::var(2, 0));

    let f = cup(&x1, &d1)?;
    let g = cup(&d1, &d2)?;
    println!("x₁ ⌣ ∂₁      = {f}");
    println!("∂₁ ⌣ ∂₂      = {g}");
    println!("h¹           = {}", Cochain::euler_field(2, 0));

    let u = Polynomial::var(2, 0).mul(&Polynomial::var(2, 0))?;
    let v = Polynomial::var(2, 1).mul(&Polynomial::var(2, 1))?.mul(&Polynomial::var(2, 1))?;
    println!("u = {u}, v = {v}");
    println!("(∂₁⊗∂₂)(u,v) = {}", g.apply(&[u.clone(), v.clone()])?);
    println!("(x₁∂₁)(u)    = {}", f.apply(&[u])?);
    Ok(())
}
