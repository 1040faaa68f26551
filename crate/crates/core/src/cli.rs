//! Command-line frontend.
//!
//! [`run_command`] parses `argv`, reads input documents from files (or
//! standard input for `-`), runs one library operation and renders the
//! result as an s-expression or JSON document.
//!
//! Exit codes: `0` success, `1` parse or precondition failure, `2` a law or
//! associativity check failed, `3` a semigroup decision was inconclusive.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cochain::{apply, Cochain};
use crate::document::{
    self, cochain_sexpr, document_to_json, int_index_sexpr, parse_int_index, series_sexpr, Document,
    Report,
};
use crate::error::{Error, Result};
use crate::grading::{
    decompose_by_bigrade, decompose_by_weight, filtration_contains, filtration_index, in_c_delta,
    in_ideal, project_c_delta, theta_apply, theta_split, Decision, FiltrationIndex, FiltrationMode, Membership,
    MultiIndexSet, SemigroupSpec,
};
use crate::laws;
use crate::mc::{self, associativity_defect, star_apply, Deformation, SolverOptions};
use crate::ops::{bracket, cup, delta_via_bracket, hochschild_delta, insert};
use crate::poly::Polynomial;
use crate::random::CochainSampler;
use crate::sexpr::{self, SExpr};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "gerstenhaber", version, about = "Polydifferential operators, Gerstenhaber brackets and star products")]
struct Cli {
    /// Emit JSON instead of s-expressions.
    #[arg(long, global = true)]
    json: bool,

    /// Semigroup generators, e.g. "((0 -1))" or "((1 0) (-1 0))".
    #[arg(long, global = true, allow_hyphen_values = true)]
    delta: Option<String>,

    /// Search depth for semigroup membership.
    #[arg(long, global = true, default_value_t = SemigroupSpec::DEFAULT_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f ⌣ g.
    Cup { f: PathBuf, g: PathBuf },
    /// [f, g], or f ∘_k g with --insert.
    Bracket {
        f: PathBuf,
        g: PathBuf,
        #[arg(long, value_name = "K")]
        insert: Option<usize>,
    },
    /// Hochschild coboundary δf.
    Delta {
        f: PathBuf,
        #[arg(long)]
        via_bracket: bool,
    },
    /// Evaluate a p-cochain on p polynomials.
    Apply { f: PathBuf, args: Vec<PathBuf> },
    /// Weight decomposition.
    Weight { f: PathBuf },
    /// Bigrade decomposition.
    Bigrade { f: PathBuf },
    /// Projection onto C_Δ (requires --delta).
    Project { f: PathBuf },
    /// Membership of a weight in Δ, or of a cochain in C_Δ.
    Member {
        f: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Membership of a cochain in the ideal I^(r)_Δ.
    IdealMember {
        f: PathBuf,
        #[arg(long, default_value_t = 2)]
        r: u64,
    },
    /// θ_I f.
    Theta {
        f: PathBuf,
        #[arg(long)]
        indices: String,
    },
    /// The (C_I⁺, C_I⁻) components of f.
    ThetaSplit {
        f: PathBuf,
        #[arg(long)]
        indices: String,
    },
    /// Filtration index, or membership in S_α with --alpha.
    Filtration {
        f: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Cumulative)]
        mode: ModeArg,
        /// "((a1 a2) (b1 b2))".
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Solve the Maurer–Cartan equation order by order.
    McSolve {
        #[arg(long)]
        pi1: PathBuf,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        check_assoc: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Largest total slot order allowed per step.
        #[arg(long, default_value_t = 8)]
        slot_cap: u64,
    },
    /// f ⋆ g for a deformation document.
    StarApply { deformation: PathBuf, f: PathBuf, g: PathBuf },
    /// (f ⋆ g) ⋆ h − f ⋆ (g ⋆ h).
    AssocDefect {
        deformation: PathBuf,
        f: PathBuf,
        g: PathBuf,
        h: PathBuf,
    },
    /// Run every law with the given seed.
    VerifyAxioms {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ModeArg {
    Literal,
    Cumulative,
}

impl From<ModeArg> for FiltrationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Literal => FiltrationMode::Literal,
            ModeArg::Cumulative => FiltrationMode::Cumulative,
        }
    }
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    cached: Option<String>,
}

impl Inputs<'_> {
    fn text(&mut self, path: &PathBuf) -> Result<String> {
        if path.as_os_str() == "-" {
            if self.cached.is_none() {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Error::Invalid(format!("reading standard input: {e}")))?;
                self.cached = Some(s);
            }
            return Ok(self.cached.clone().unwrap_or_default());
        }
        std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
    }

    fn cochain(&mut self, path: &PathBuf) -> Result<Cochain> {
        document::parse_cochain(&self.text(path)?)
    }

    fn poly(&mut self, path: &PathBuf) -> Result<Polynomial> {
        document::parse_polynomial(&self.text(path)?)
    }

    fn deformation(&mut self, path: &PathBuf) -> Result<Deformation> {
        document::parse_deformation(&self.text(path)?)
    }
}

struct Outcome {
    doc: Document,
    code: i32,
    stderr: String,
}

impl Outcome {
    fn ok(doc: Document) -> Self {
        Outcome { doc, code: EXIT_OK, stderr: String::new() }
    }
}

fn parse_delta(text: &str, dim: usize, cap: u64) -> Result<SemigroupSpec> {
    let e = sexpr::parse(text)?;
    let gens = e.as_list()?.iter().map(|g| parse_int_index(g, Some(dim))).collect::<Result<Vec<_>>>()?;
    SemigroupSpec::new(dim, gens, cap)
}

fn require_delta(cli: &Cli, dim: usize) -> Result<SemigroupSpec> {
    match &cli.delta {
        Some(d) => parse_delta(d, dim, cli.cap),
        None => Err(Error::Invalid("this command needs --delta".into())),
    }
}

fn parse_indices(text: &str, dim: usize) -> Result<MultiIndexSet> {
    let trimmed = text.trim();
    let wrapped = if trimmed.starts_with('(') { trimmed.to_string() } else { format!("({trimmed})") };
    let e = sexpr::parse(&wrapped)?;
    let idx = e.as_list()?.iter().map(|x| x.as_u64().map(|v| v as usize)).collect::<Result<Vec<_>>>()?;
    MultiIndexSet::new(dim, idx)
}

fn decision_code(d: Decision) -> i32 {
    match d {
        Decision::Inconclusive => EXIT_INCONCLUSIVE,
        _ => EXIT_OK,
    }
}

fn item(head: &str, rest: Vec<SExpr>) -> SExpr {
    let mut v = vec![SExpr::sym(head)];
    v.extend(rest);
    SExpr::list(v)
}

fn decision_item(d: Decision) -> SExpr {
    item("decision", vec![SExpr::sym(d.to_string())])
}

fn execute(cli: &Cli, io: &mut Inputs<'_>) -> Result<Outcome> {
    match &cli.command {
        Command::Cup { f, g } => {
            let (f, g) = (io.cochain(f)?, io.cochain(g)?);
            Ok(Outcome::ok(Document::Cochain(cup(&f, &g)?)))
        }
        Command::Bracket { f, g, insert: k } => {
            let (f, g) = (io.cochain(f)?, io.cochain(g)?);
            let out = match k {
                Some(k) => insert(&f, *k, &g)?,
                None => bracket(&f, &g)?,
            };
            Ok(Outcome::ok(Document::Cochain(out)))
        }
        Command::Delta { f, via_bracket } => {
            let f = io.cochain(f)?;
            let out = if *via_bracket { delta_via_bracket(&f) } else { hochschild_delta(&f) };
            Ok(Outcome::ok(Document::Cochain(out)))
        }
        Command::Apply { f, args } => {
            let f = io.cochain(f)?;
            let args = args.iter().map(|a| io.poly(a)).collect::<Result<Vec<_>>>()?;
            Ok(Outcome::ok(Document::Poly(apply(&f, &args)?)))
        }
        Command::Weight { f } => {
            let f = io.cochain(f)?;
            let mut r = Report::new(f.dim());
            for (w, c) in decompose_by_weight(&f) {
                r.push(item("component", vec![item("weight", vec![int_index_sexpr(&w)]), cochain_sexpr(&c)]));
            }
            Ok(Outcome::ok(Document::Report(r)))
        }
        Command::Bigrade { f } => {
            let f = io.cochain(f)?;
            let mut r = Report::new(f.dim());
            for (g, c) in decompose_by_bigrade(&f) {
                let head = item("bigrade", vec![int_index_sexpr(&g.a), int_index_sexpr(&g.b)]);
                r.push(item("component", vec![head, cochain_sexpr(&c)]));
            }
            Ok(Outcome::ok(Document::Report(r)))
        }
        Command::Project { f } => {
            let f = io.cochain(f)?;
            let d = require_delta(cli, f.dim())?;
            Ok(Outcome::ok(Document::Cochain(project_c_delta(&f, &d)?)))
        }
        Command::Member { f, weight } => match (f, weight) {
            (None, Some(w)) => {
                let a = parse_int_index(&sexpr::parse(w)?, None)?;
                let d = require_delta(cli, a.dim())?;
                let m = d.member(&a)?;
                let mut r = Report::new(a.dim());
                r.push(item("weight", vec![int_index_sexpr(&a)]));
                r.push(decision_item(m.decision()));
                if let Membership::Member(cert) = &m {
                    r.push(item("certificate", cert.counts.iter().map(|&c| SExpr::int(c)).collect()));
                }
                let code = decision_code(m.decision());
                Ok(Outcome { doc: Document::Report(r), code, stderr: String::new() })
            }
            (Some(f), None) => {
                let f = io.cochain(f)?;
                let d = require_delta(cli, f.dim())?;
                let dec = in_c_delta(&f, &d)?;
                let mut r = Report::new(f.dim());
                r.push(decision_item(dec));
                Ok(Outcome { doc: Document::Report(r), code: decision_code(dec), stderr: String::new() })
            }
            _ => Err(Error::Invalid("member takes either a cochain file or --weight".into())),
        },
        Command::IdealMember { f, r } => {
            let f = io.cochain(f)?;
            let d = require_delta(cli, f.dim())?;
            let dec = in_ideal(&f, &d, *r)?;
            let mut rep = Report::new(f.dim());
            rep.push(item("r", vec![SExpr::int(*r)]));
            rep.push(decision_item(dec));
            Ok(Outcome { doc: Document::Report(rep), code: decision_code(dec), stderr: String::new() })
        }
        Command::Theta { f, indices } => {
            let f = io.cochain(f)?;
            let set = parse_indices(indices, f.dim())?;
            Ok(Outcome::ok(Document::Cochain(theta_apply(&f, &set)?)))
        }
        Command::ThetaSplit { f, indices } => {
            let f = io.cochain(f)?;
            let set = parse_indices(indices, f.dim())?;
            let (plus, minus) = theta_split(&f, &set)?;
            let mut r = Report::new(f.dim());
            r.push(item("plus", vec![cochain_sexpr(&plus)]));
            r.push(item("minus", vec![cochain_sexpr(&minus)]));
            Ok(Outcome::ok(Document::Report(r)))
        }
        Command::Filtration { f, mode, alpha } => {
            let f = io.cochain(f)?;
            let mode = FiltrationMode::from(*mode);
            let mut r = Report::new(f.dim());
            r.push(item(
                "mode",
                vec![SExpr::sym(match mode {
                    FiltrationMode::Literal => "literal",
                    FiltrationMode::Cumulative => "cumulative",
                })],
            ));
            match alpha {
                Some(a) => {
                    let e = sexpr::parse(a)?;
                    let parts = e.as_list()?;
                    if parts.len() != 2 {
                        return Err(e.error("--alpha takes two indices ((a…) (b…))"));
                    }
                    let alpha = FiltrationIndex::new(
                        parse_int_index(&parts[0], Some(f.dim()))?,
                        parse_int_index(&parts[1], Some(f.dim()))?,
                    )?;
                    let inside = filtration_contains(&f, &alpha, mode);
                    r.push(item("alpha", vec![int_index_sexpr(&alpha.a), int_index_sexpr(&alpha.b)]));
                    r.push(decision_item(if inside { Decision::Yes } else { Decision::No }));
                }
                None => {
                    let idx = filtration_index(&f, mode)?;
                    r.push(item("index", vec![int_index_sexpr(&idx.a), int_index_sexpr(&idx.b)]));
                }
            }
            Ok(Outcome::ok(Document::Report(r)))
        }
        Command::McSolve { pi1, order, check_assoc, seed, samples, slot_cap } => {
            let pi1 = io.cochain(pi1)?;
            let delta = cli.delta.as_deref().map(|d| parse_delta(d, pi1.dim(), cli.cap)).transpose()?;
            let opts = SolverOptions { slot_order_per_step: *slot_cap };
            let def = mc::solve_maurer_cartan_with(&pi1, *order, delta.as_ref(), &opts)?;
            let mut stderr = String::new();
            let mut code = EXIT_OK;
            if *check_assoc {
                let sampler = CochainSampler::standard(2);
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut bad = 0;
                for _ in 0..*samples {
                    let f = sampler.polynomial(&mut rng, 3, 3);
                    let g = sampler.polynomial(&mut rng, 3, 3);
                    let h = sampler.polynomial(&mut rng, 3, 3);
                    if !associativity_defect(&def, &f, &g, &h)?.is_zero() {
                        bad += 1;
                    }
                }
                let n = def.order();
                stderr = format!(
                    "associativity defect mod t^{}: {} of {samples} triples nonzero (seed {seed})\n",
                    n + 1,
                    bad
                );
                if bad > 0 {
                    code = EXIT_VERIFY;
                }
            }
            Ok(Outcome { doc: Document::Deformation(def), code, stderr })
        }
        Command::StarApply { deformation, f, g } => {
            let def = io.deformation(deformation)?;
            let (f, g) = (io.poly(f)?, io.poly(g)?);
            let s = star_apply(&def, &f, &g)?;
            let mut r = Report::new(def.dim());
            r.push(item("star", vec![series_sexpr(&s)]));
            Ok(Outcome::ok(Document::Report(r)))
        }
        Command::AssocDefect { deformation, f, g, h } => {
            let def = io.deformation(deformation)?;
            let (f, g, h) = (io.poly(f)?, io.poly(g)?, io.poly(h)?);
            let s = associativity_defect(&def, &f, &g, &h)?;
            let mut r = Report::new(def.dim());
            r.push(item("defect", vec![series_sexpr(&s)]));
            r.push(item("zero", vec![SExpr::sym(if s.is_zero() { "yes" } else { "no" })]));
            let code = if s.is_zero() { EXIT_OK } else { EXIT_VERIFY };
            Ok(Outcome { doc: Document::Report(r), code, stderr: String::new() })
        }
        Command::VerifyAxioms { seed, trials } => {
            let results = laws::verify_all(*seed, *trials)?;
            let mut r = Report::new(2);
            r.push(item("seed", vec![SExpr::int(*seed)]));
            r.push(item("trials", vec![SExpr::int(*trials as u64)]));
            let mut failed = 0;
            for law in &results {
                let mut fields = vec![
                    SExpr::string(law.name.clone()),
                    SExpr::sym(if law.passed { "pass" } else { "fail" }),
                    item("trials", vec![SExpr::int(law.trials as u64)]),
                ];
                if !law.passed {
                    failed += 1;
                    fields.push(item("detail", vec![SExpr::string(law.detail.clone())]));
                    fields.push(item("counterexample", law.counterexample.iter().map(cochain_sexpr).collect()));
                }
                r.push(item("law", fields));
            }
            let code = if failed == 0 { EXIT_OK } else { EXIT_VERIFY };
            Ok(Outcome {
                doc: Document::Report(r),
                code,
                stderr: format!("seed {seed}: {} laws, {failed} failed\n", results.len()),
            })
        }
    }
}

fn render(doc: &Document, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&document_to_json(doc)).expect("json values serialize");
        s.push('\n');
        s
    } else {
        let mut s = document::print_document(doc);
        s.push('\n');
        s
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Inconclusive(_) => EXIT_INCONCLUSIVE,
        _ => EXIT_INPUT,
    }
}

/// Run one command. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I, stdin: &mut dyn Read) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                CommandOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut io = Inputs { stdin, cached: None };
    match execute(&cli, &mut io) {
        Ok(out) => CommandOutput { code: out.code, stdout: render(&out.doc, cli.json), stderr: out.stderr },
        Err(e) => CommandOutput { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str], stdin: &str) -> CommandOutput {
        let mut argv = vec!["gerstenhaber"];
        argv.extend_from_slice(args);
        run_command(argv, &mut stdin.as_bytes())
    }

    #[test]
    fn delta_from_stdin() {
        let out = run(&["delta", "-"], "(cochain 2 (term 1 (0 0) (1 1)))");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "(cochain 2\n  (term -1 (0 0) (0 1) (1 0))\n  (term -1 (0 0) (1 0) (0 1)))\n");
    }

    #[test]
    fn parse_error_is_exit_1() {
        let out = run(&["delta", "-"], "(cochain 2 (term 1 (0 0)");
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("at 1:12"), "{}", out.stderr);
    }

    #[test]
    fn member_weight() {
        let out = run(&["--delta", "((0 -1))", "member", "--weight", "(0 -3)"], "");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("(decision yes)"));
        assert!(out.stdout.contains("(certificate 3)"));
        let out = run(&["--delta", "((0 -1))", "member", "--weight", "(1 0)"], "");
        assert!(out.stdout.contains("(decision no)"));
    }

    #[test]
    fn unknown_subcommand() {
        assert_eq!(run(&["frobnicate"], "").code, 1);
    }
}
