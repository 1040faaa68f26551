use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use gerstenhaber::cli::{run_command, CommandOutput};
use gerstenhaber::document::parse_deformation;

const SYMPLECTIC: &str = "(cochain 2 (term 1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))";
const H1: &str = "(cochain 2 (term 1 (1 0) (1 0)))";

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("gerstenhaber-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&str], stdin: &str) -> CommandOutput {
    let mut argv = vec!["gerstenhaber"];
    argv.extend_from_slice(args);
    run_command(argv, &mut stdin.as_bytes())
}

#[test]
fn euler_field_eigenvalue_one() {
    let s = Scratch::new("euler");
    let h = s.file("h1.sexp", H1);
    let t = s.file("term.sexp", "(cochain 2 (term 1 (2 0) (1 0)))");
    let out = run(&["bracket", &h, &t], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "(cochain 2\n  (term 1 (2 0) (1 0)))\n");
}

#[test]
fn insert_flag_composes() {
    let s = Scratch::new("insert");
    let f = s.file("f.sexp", "(cochain 2 (term 1 (0 1) (1 0)))");
    let g = s.file("g.sexp", "(cochain 2 (term 1 (1 0) (0 1)))");
    let out = run(&["bracket", "--insert", "1", &f, &g], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    // x₂∂₁ ∘ x₁∂₂ = x₂∂₂ + x₁x₂∂₁∂₂
    assert_eq!(out.stdout, "(cochain 2\n  (term 1 (0 1) (0 1))\n  (term 1 (1 1) (1 1)))\n");
}

#[test]
fn delta_and_delta_via_bracket_agree() {
    let a = run(&["delta", "-"], "(cochain 2 (term 3/2 (1 2) (1 0) (0 2)))");
    let b = run(&["delta", "--via-bracket", "-"], "(cochain 2 (term 3/2 (1 2) (1 0) (0 2)))");
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cup_and_apply() {
    let s = Scratch::new("apply");
    let d1 = s.file("d1.sexp", "(cochain 2 (term 1 (0 0) (1 0)))");
    let d2 = s.file("d2.sexp", "(cochain 2 (term 1 (0 0) (0 1)))");
    let out = run(&["cup", &d1, &d2], "");
    assert_eq!(out.stdout, "(cochain 2\n  (term 1 (0 0) (1 0) (0 1)))\n");
    let c = s.file("c.sexp", &out.stdout);
    let u = s.file("u.sexp", "(poly 2 (term 1 (2 0)))");
    let v = s.file("v.sexp", "(poly 2 (term 1 (0 3)))");
    let out = run(&["apply", &c, &u, &v], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "(poly 2\n  (term 6 (1 2)))\n");
    assert_eq!(run(&["apply", &c, &u], "").code, 1);
}

#[test]
fn json_mirrors_text() {
    let out = run(&["--json", "delta", "-"], "(cochain 2 (term 1 (0 0) (1 1)))");
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["kind"], "cochain");
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["terms"][0], serde_json::json!(["-1", [0, 0], [0, 1], [1, 0]]));
}

#[test]
fn weight_bigrade_and_filtration_reports() {
    let w = run(&["weight", "-"], "(cochain 2 (term 1 (1 0) (0 1)) (term 2 (0 0) (1 1)))");
    assert!(w.stdout.contains("(weight (-1 -1))"), "{}", w.stdout);
    assert!(w.stdout.contains("(weight (1 -1))"), "{}", w.stdout);
    let b = run(&["bigrade", "-"], "(cochain 2 (term 1 (1 0) (0 1)))");
    assert!(b.stdout.contains("(bigrade (1 -1) (1 1))"), "{}", b.stdout);
    let f = run(&["filtration", "-"], "(cochain 2 (term 1 (0 0) (0 0) (0 0)))");
    assert!(f.stdout.contains("(index (0 0) (0 0))"), "{}", f.stdout);
    let lit = run(
        &["filtration", "--mode", "literal", "--alpha", "((1 0) (1 0))", "-"],
        "(cochain 2 (term 1 (0 0) (0 0) (0 0)))",
    );
    assert!(lit.stdout.contains("(decision no)"), "{}", lit.stdout);
    let cum = run(&["filtration", "--alpha", "((1 0) (1 0))", "-"], "(cochain 2 (term 1 (0 0) (0 0) (0 0)))");
    assert!(cum.stdout.contains("(decision yes)"), "{}", cum.stdout);
}

#[test]
fn semigroup_commands() {
    let c = "(cochain 2 (term 1 (0 0) (0 1)) (term 1 (1 0) (0 0)))";
    let p = run(&["--delta", "((0 -1))", "project", "-"], c);
    assert_eq!(p.code, 0, "{}", p.stderr);
    assert_eq!(p.stdout, "(cochain 2\n  (term 1 (0 0) (0 1)))\n");
    let m = run(&["--delta", "((0 -1))", "member", "-"], c);
    assert!(m.stdout.contains("(decision no)"));
    let i = run(&["--delta", "((0 -1))", "ideal-member", "--r", "2", "-"], "(cochain 2 (term 1 (0 0) (0 2)))");
    assert!(i.stdout.contains("(decision yes)"));
    let i = run(&["--delta", "((0 -1))", "ideal-member", "--r", "2", "-"], "(cochain 2 (term 1 (0 0) (0 1)))");
    assert!(i.stdout.contains("(decision no)"));
    assert_eq!(run(&["project", "-"], c).code, 1);
}

#[test]
fn inconclusive_is_exit_3() {
    let out = run(&["--cap", "1", "--delta", "((1 0) (0 1))", "member", "--weight", "(3 0)"], "");
    assert_eq!(out.code, 3);
    assert!(out.stdout.contains("(decision inconclusive)"));
}

#[test]
fn theta_commands() {
    let t = run(&["theta", "--indices", "1", "-"], "(cochain 2 (term 1 (1 0) (0 0)))");
    assert_eq!(t.stdout, "(cochain 2\n  (term -1 (1 0) (0 0)))\n");
    let s = run(&["theta-split", "--indices", "1 2", "-"], "(cochain 2 (term 1 (1 0) (0 1)) (term 1 (1 0) (0 0)))");
    assert!(s.stdout.contains("(plus (cochain 2 (term 1 (1 0) (0 1))))"), "{}", s.stdout);
    assert!(s.stdout.contains("(minus (cochain 2 (term 1 (1 0) (0 0))))"), "{}", s.stdout);
    assert_eq!(run(&["theta", "--indices", "3", "-"], H1).code, 1);
}

#[test]
fn mc_solve_star_and_defect() {
    let s = Scratch::new("mc");
    let pi1 = s.file("sympl.sexp", SYMPLECTIC);
    let out = run(&["mc-solve", "--pi1", &pi1, "--order", "3", "--check-assoc"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stderr.contains("0 of 20 triples nonzero"), "{}", out.stderr);
    let def = parse_deformation(&out.stdout).unwrap();
    assert_eq!(def.order(), 3);

    let d = s.file("def.sexp", &out.stdout);
    let x1 = s.file("x1.sexp", "(poly 2 (term 1 (1 0)))");
    let x2 = s.file("x2.sexp", "(poly 2 (term 1 (0 1)))");
    let star = run(&["star-apply", &d, &x1, &x2], "");
    assert_eq!(star.code, 0, "{}", star.stderr);
    assert!(star.stdout.contains("(t 0 (term 1 (1 1)))"), "{}", star.stdout);
    assert!(star.stdout.contains("(t 1 (term 1/2 (0 0)))"), "{}", star.stdout);
    let defect = run(&["assoc-defect", &d, &x1, &x2, &x1], "");
    assert_eq!(defect.code, 0);
    assert!(defect.stdout.contains("(zero yes)"));

    // dropping p₂ breaks associativity at t²
    let broken = s.file(
        "broken.sexp",
        "(deformation 2 (order 2) (convention half-pi1)\n  (p 1 (term 1/2 (0 0) (1 0) (0 1)) (term -1/2 (0 0) (0 1) (1 0)))\n  (p 2))",
    );
    let x1sq = s.file("x1sq.sexp", "(poly 2 (term 1 (2 0)))");
    let x2sq = s.file("x2sq.sexp", "(poly 2 (term 1 (0 2)))");
    let bad = run(&["assoc-defect", &broken, &x1sq, &x2sq, &x2sq], "");
    assert_eq!(bad.code, 2, "{}", bad.stdout);
}

#[test]
fn mc_solve_with_delta_and_preconditions() {
    let s = Scratch::new("mcd");
    let pi1 = s.file("lin.sexp", "(cochain 2 (term 1 (1 0) (1 0) (0 1)) (term -1 (1 0) (0 1) (1 0)))");
    let out = run(&["--delta", "((0 -1))", "mc-solve", "--pi1", &pi1, "--order", "3"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let bad = s.file("bad.sexp", "(cochain 2 (term 1 (0 0) (2 0) (0 0)))");
    assert_eq!(run(&["mc-solve", "--pi1", &bad, "--order", "2"], "").code, 1);
    let three = s.file("three.sexp", "(cochain 3 (term 1 (0 0 0) (1 0 0) (0 1 0)))");
    assert_eq!(run(&["mc-solve", "--pi1", &three, "--order", "2"], "").code, 1);
}

#[test]
fn verify_axioms_report() {
    let out = run(&["verify-axioms", "--seed", "42", "--trials", "100"], "");
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.starts_with("(report 2\n  (seed 42)"));
    for law in ["jacobi identity", "vector field leibniz", "C_Delta closure", "delta squared", "delta via bracket"] {
        assert!(out.stdout.contains(&format!("(law \"{law}")), "missing {law}");
    }
    assert!(!out.stdout.contains(" fail "));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify-axioms", "--seed", "9", "--trials", "10"], "");
    let b = run(&["verify-axioms", "--seed", "9", "--trials", "10"], "");
    assert_eq!(a, b);
}

#[test]
fn bad_input_exit_codes() {
    assert_eq!(run(&["delta", "-"], "(cochain 2 (term 1 (0 0 0)))").code, 1);
    assert_eq!(run(&["delta", "/nonexistent/file.sexp"], "").code, 1);
    assert_eq!(run(&["cup"], "").code, 1);
    assert_eq!(run(&["--help"], "").code, 0);
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gerstenhaber"))
        .args(["delta", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(SYMPLECTIC.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(cochain 2)\n");
}
