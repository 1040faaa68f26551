//! The s-expression document format, its JSON mirror, and the command
//! dispatcher used by the `gerstenhaber` binary.
//!
//! `cargo run --example documents_and_cli`

use gerstenhaber::cli::run_command;
use gerstenhaber::document::{document_to_json, parse_document, print_document};

fn main() -> gerstenhaber::Result<()> {
    let doc = parse_document("(cochain 2 (term 1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))")?;
    println!("{}", print_document(&doc));
    println!("{}", document_to_json(&doc));

    let out = run_command(["gerstenhaber", "delta", "-"], &mut "(cochain 2 (term 1 (0 0) (1 1)))".as_bytes());
    println!("delta: exit {}\n{}", out.code, out.stdout);

    let out = run_command(
        ["gerstenhaber", "--delta", "((1 0) (-1 0))", "member", "--weight", "(-2 0)"],
        &mut std::io::empty(),
    );
    println!("member: exit {}\n{}", out.code, out.stdout);
    Ok(())
}
