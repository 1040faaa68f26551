//! Sign involutions `θ_I`, their ± split, bigrades and the filtration.
//!
//! `cargo run --example involutions_and_filtration`

use gerstenhaber::grading::{
    bigrade_of, filtration_contains, filtration_index, theta_apply, theta_split, FiltrationIndex, FiltrationMode,
    MultiIndexSet,
};
use gerstenhaber::{multiplication, BasisTerm, Cochain, Rational};

fn main() -> gerstenhaber::Result<()> {
    let one = Rational::from_integer(1.into());
    let c = &Cochain::from_term(BasisTerm::new([1, 0].into(), vec![[0, 1].into()]), one.clone())
        + &Cochain::from_term(BasisTerm::new([1, 0].into(), vec![[0, 0].into()]), one);

    for idx in [vec![1], vec![2], vec![1, 2]] {
        let set = MultiIndexSet::new(2, idx.clone())?;
        let (plus, minus) = theta_split(&c, &set)?;
        println!("I = {idx:?}: θ(c) = {}", theta_apply(&c, &set)?);
        println!("    C⁺ part {plus}; C⁻ part {minus}");
    }

    for (t, _) in c.terms() {
        println!("bigrade of {t}: {}", bigrade_of(t));
    }

    let m = multiplication(2);
    let alpha = FiltrationIndex::new([0, 0].into(), [0, 0].into())?;
    let beta = FiltrationIndex::new([1, 0].into(), [1, 0].into())?;
    println!("filtration index of m: {}", filtration_index(&m, FiltrationMode::Cumulative)?);
    for mode in [FiltrationMode::Literal, FiltrationMode::Cumulative] {
        println!(
            "{mode:?}: m ∈ S_{alpha}: {}, m ∈ S_{beta}: {}",
            filtration_contains(&m, &alpha, mode),
            filtration_contains(&m, &beta, mode)
        );
    }
    Ok(())
}
