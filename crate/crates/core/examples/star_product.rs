//! Solve the Maurer–Cartan equation order by order and use the resulting
//! star product.
//!
//! `cargo run --example star_product`

use gerstenhaber::grading::SemigroupSpec;
use gerstenhaber::mc::{associativity_defect, obstruction, solve_maurer_cartan, star_apply};
use gerstenhaber::{hochschild_delta, BasisTerm, Cochain, Polynomial, Rational};

fn bivector(x: [u32; 2]) -> Cochain {
    let one = Rational::from_integer(1.into());
    &Cochain::from_term(BasisTerm::new(x.into(), vec![[1, 0].into(), [0, 1].into()]), one.clone())
        - &Cochain::from_term(BasisTerm::new(x.into(), vec![[0, 1].into(), [1, 0].into()]), one)
}

fn main() -> gerstenhaber::Result<()> {
    let moyal = solve_maurer_cartan(&bivector([0, 0]), 3, None)?;
    for k in 1..=moyal.order() {
        println!("p_{k} = {}", moyal.p(k));
    }
    let (x1, x2) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
    println!("x₁ ⋆ x₂ = {}", star_apply(&moyal, &x1, &x2)?);
    println!("x₂ ⋆ x₁ = {}", star_apply(&moyal, &x2, &x1)?);

    let delta = SemigroupSpec::with_generators(2, vec![[0, -1].into()])?;
    let linear = solve_maurer_cartan(&bivector([1, 0]), 4, Some(&delta))?;
    for k in 2..=4 {
        let b = obstruction(&linear, k)?.value;
        println!("order {k}: δp_{k} = B_{k}: {}", hochschild_delta(linear.p(k)) == b);
    }
    let f = x1.mul(&x2)?;
    let g = x2.mul(&x2)?;
    let h = x1.mul(&x1)?;
    println!("associativity defect: {}", associativity_defect(&linear, &f, &g, &h)?);
    Ok(())
}
