//! The complement `L` of `C_H` is a `C_H`-module when `H` is a subgroup,
//! and fails to be one for the semigroup `⟨(1,0)⟩`.
//!
//! `cargo run --example subgroup_complement`

use gerstenhaber::grading::{subgroup_complement_check, SemigroupSpec};

fn main() -> gerstenhaber::Result<()> {
    let h = SemigroupSpec::with_generators(2, vec![[2, 0].into(), [-2, 0].into(), [0, 1].into(), [0, -1].into()])?;
    let report = subgroup_complement_check(&h, 100, 1)?;
    println!(
        "2ℤ×ℤ: subgroup {}, {} samples, passed {}",
        report.is_subgroup,
        report.samples_checked,
        report.passed()
    );

    let ray = SemigroupSpec::with_generators(2, vec![[1, 0].into()])?;
    let report = subgroup_complement_check(&ray, 100, 1)?;
    println!("⟨(1,0)⟩: subgroup {}, passed {}", report.is_subgroup, report.passed());
    if let Some(cx) = report.counterexample {
        println!("  h = {} ∈ H, k = {} ∉ H, h + k = {} ∈ H", cx.h, cx.k, cx.sum);
        println!("  f = {}\n  g = {}\n  f ⌣ g = {}", cx.f, cx.g, cx.product);
    }
    Ok(())
}
