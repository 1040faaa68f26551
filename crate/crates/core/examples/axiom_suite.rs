//! Run every seeded law and print one line per law.
//!
//! `cargo run --example axiom_suite -- 42 100`

use gerstenhaber::laws::verify_all;

fn main() -> gerstenhaber::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    println!("seed {seed}, {trials} trials");
    for law in verify_all(seed, trials)? {
        let mark = if law.passed { "ok  " } else { "FAIL" };
        println!("{mark} {:<60} {}", law.name, law.detail);
    }
    Ok(())
}
