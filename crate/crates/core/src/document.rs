//! The s-expression file format and its JSON mirror.
//!
//! ```text
//! document := "(" kind INT body ")"
//! term     := "(" "term" rational index index* ")"
//! index    := "(" INT{n} ")"
//! rational := INT | INT "/" INT
//! ```
//!
//! The first index of a term is the x-part `a₀`; the rest are the
//! `∂`-slots in order. Polynomials use terms with only the x-part.

use serde_json::{json, Value};

use crate::cochain::{BasisTerm, Cochain};
use crate::error::{Error, Result};
use crate::index::{IntIndex, NatIndex};
use crate::mc::{Deformation, TSeries};
use crate::poly::Polynomial;
use crate::sexpr::{self, SExpr};

/// Name of the scalar convention written into deformation documents:
/// `π = Σ t^k p_k` with `p₁ = π₁/2`.
pub const CONVENTION: &str = "half-pi1";

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Cochain(Cochain),
    Poly(Polynomial),
    Deformation(Deformation),
    Report(Report),
}

/// Free-form results: a dimension and a list of s-expression items.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub dim: usize,
    pub items: Vec<SExpr>,
}

impl Report {
    pub fn new(dim: usize) -> Self {
        Report { dim, items: Vec::new() }
    }

    pub fn push(&mut self, item: SExpr) -> &mut Self {
        self.items.push(item);
        self
    }
}

fn nat_sexpr(a: &NatIndex) -> SExpr {
    SExpr::list(a.entries().iter().map(|&e| SExpr::int(e)).collect())
}

pub fn int_index_sexpr(a: &IntIndex) -> SExpr {
    SExpr::list(a.entries().iter().map(|&e| SExpr::int(e)).collect())
}

fn term_sexpr(t: &BasisTerm, k: &crate::Rational) -> SExpr {
    let mut items = vec![SExpr::sym("term"), SExpr::rational(k), nat_sexpr(t.x_part())];
    items.extend(t.slots().iter().map(nat_sexpr));
    SExpr::list(items)
}

/// The `(term …)` forms of a cochain.
pub fn cochain_terms(c: &Cochain) -> Vec<SExpr> {
    c.terms().map(|(t, k)| term_sexpr(t, k)).collect()
}

pub fn poly_terms(u: &Polynomial) -> Vec<SExpr> {
    u.terms()
        .map(|(e, k)| SExpr::list(vec![SExpr::sym("term"), SExpr::rational(k), nat_sexpr(e)]))
        .collect()
}

/// `(cochain n term*)` as an s-expression, for nesting inside reports.
pub fn cochain_sexpr(c: &Cochain) -> SExpr {
    let mut items = vec![SExpr::sym("cochain"), SExpr::int(c.dim() as u64)];
    items.extend(cochain_terms(c));
    SExpr::list(items)
}

pub fn poly_sexpr(u: &Polynomial) -> SExpr {
    let mut items = vec![SExpr::sym("poly"), SExpr::int(u.dim() as u64)];
    items.extend(poly_terms(u));
    SExpr::list(items)
}

/// `(series (t 0 term*) (t 1 term*) …)`.
pub fn series_sexpr(s: &TSeries) -> SExpr {
    let mut items = vec![SExpr::sym("series")];
    for (k, c) in s.coeffs().iter().enumerate() {
        let mut t = vec![SExpr::sym("t"), SExpr::int(k as u64)];
        t.extend(poly_terms(c));
        items.push(SExpr::list(t));
    }
    SExpr::list(items)
}

fn block(head: &str, dim: usize, lead: Vec<String>, body: Vec<String>, indent: &str) -> String {
    let mut out = format!("({head} {dim}");
    for l in lead {
        out.push(' ');
        out.push_str(&l);
    }
    for b in body {
        out.push('\n');
        out.push_str(indent);
        out.push_str(&b);
    }
    out.push(')');
    out
}

pub fn print_cochain(c: &Cochain) -> String {
    let body = cochain_terms(c).iter().map(ToString::to_string).collect();
    block("cochain", c.dim(), vec![], body, "  ")
}

pub fn print_poly(u: &Polynomial) -> String {
    let body = poly_terms(u).iter().map(ToString::to_string).collect();
    block("poly", u.dim(), vec![], body, "  ")
}

pub fn print_deformation(d: &Deformation) -> String {
    let lead = vec![
        format!("(order {})", d.order()),
        format!("(convention {CONVENTION})"),
    ];
    let body = d
        .cochains()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut s = format!("(p {}", i + 1);
            for t in cochain_terms(c) {
                s.push_str("\n    ");
                s.push_str(&t.to_string());
            }
            s.push(')');
            s
        })
        .collect();
    block("deformation", d.dim(), lead, body, "  ")
}

pub fn print_report(r: &Report) -> String {
    let body = r.items.iter().map(ToString::to_string).collect();
    block("report", r.dim, vec![], body, "  ")
}

pub fn print_document(d: &Document) -> String {
    match d {
        Document::Cochain(c) => print_cochain(c),
        Document::Poly(u) => print_poly(u),
        Document::Deformation(x) => print_deformation(x),
        Document::Report(r) => print_report(r),
    }
}

fn parse_nat(e: &SExpr, dim: usize) -> Result<NatIndex> {
    let items = e.as_list()?;
    if items.len() != dim {
        return Err(e.error(format!(
            "index has {} entries but the document dimension is {dim}",
            items.len()
        )));
    }
    items
        .iter()
        .map(|x| {
            let v = x.as_u64()?;
            u32::try_from(v).map_err(|_| x.error("exponent too large"))
        })
        .collect::<Result<Vec<_>>>()
        .map(NatIndex::new)
}

pub fn parse_int_index(e: &SExpr, dim: Option<usize>) -> Result<IntIndex> {
    let items = e.as_list()?;
    if let Some(dim) = dim {
        if items.len() != dim {
            return Err(e.error(format!("index has {} entries, expected {dim}", items.len())));
        }
    }
    items.iter().map(SExpr::as_i64).collect::<Result<Vec<_>>>().map(IntIndex::new)
}

fn parse_term(e: &SExpr, dim: usize) -> Result<(BasisTerm, crate::Rational)> {
    if !e.is_form("term") {
        return Err(e.error("expected (term rational index index*)"));
    }
    let items = e.as_list()?;
    if items.len() < 3 {
        return Err(e.error("a term needs a coefficient and an x-part"));
    }
    let k = items[1].as_rational()?;
    let x = parse_nat(&items[2], dim)?;
    let slots = items[3..].iter().map(|s| parse_nat(s, dim)).collect::<Result<Vec<_>>>()?;
    Ok((BasisTerm::new(x, slots), k))
}

fn parse_terms(items: &[SExpr], dim: usize) -> Result<Cochain> {
    let terms = items.iter().map(|t| parse_term(t, dim)).collect::<Result<Vec<_>>>()?;
    Cochain::from_terms(dim, terms)
}

fn parse_poly_terms(items: &[SExpr], dim: usize) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(items.len());
    for t in items {
        let (bt, k) = parse_term(t, dim)?;
        if bt.arity() != 0 {
            return Err(t.error("polynomial terms carry only an x-part"));
        }
        terms.push((bt.x_part().clone(), k));
    }
    Polynomial::from_terms(dim, terms)
}

fn header(e: &SExpr) -> Result<(&str, usize, &[SExpr])> {
    let items = e.as_list()?;
    if items.len() < 2 {
        return Err(e.error("document needs a kind and a dimension"));
    }
    let kind = items[0].as_symbol()?;
    let dim = items[1].as_u64()? as usize;
    Ok((kind, dim, &items[2..]))
}

pub fn document_from_sexpr(e: &SExpr) -> Result<Document> {
    let (kind, dim, body) = header(e)?;
    match kind {
        "cochain" => Ok(Document::Cochain(parse_terms(body, dim)?)),
        "poly" => Ok(Document::Poly(parse_poly_terms(body, dim)?)),
        "deformation" => {
            let mut order = None;
            let mut cochains = Vec::new();
            for item in body {
                let parts = item.as_list()?;
                if item.is_form("order") && parts.len() == 2 {
                    order = Some(parts[1].as_u64()? as usize);
                } else if item.is_form("convention") {
                    let name = parts.get(1).map(SExpr::as_symbol).transpose()?;
                    if name != Some(CONVENTION) {
                        return Err(item.error(format!("unknown convention, expected {CONVENTION}")));
                    }
                } else if item.is_form("p") && parts.len() >= 2 {
                    let k = parts[1].as_u64()? as usize;
                    if k != cochains.len() + 1 {
                        return Err(parts[1].error(format!("expected p {}", cochains.len() + 1)));
                    }
                    cochains.push(parse_terms(&parts[2..], dim)?);
                } else {
                    return Err(item.error("expected (order N), (convention …) or (p k term*)"));
                }
            }
            if let Some(n) = order {
                if n != cochains.len() {
                    return Err(e.error(format!("order {n} but {} cochains given", cochains.len())));
                }
            }
            Ok(Document::Deformation(Deformation::new(dim, cochains)?))
        }
        "report" => Ok(Document::Report(Report { dim, items: body.to_vec() })),
        other => Err(e.error(format!("unknown document kind `{other}`"))),
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    document_from_sexpr(&sexpr::parse(text)?)
}

pub fn parse_cochain(text: &str) -> Result<Cochain> {
    match parse_document(text)? {
        Document::Cochain(c) => Ok(c),
        // a polynomial is an arity-0 cochain
        Document::Poly(u) => Ok(Cochain::from_polynomial(&u)),
        _ => Err(Error::Parse { line: 1, column: 1, message: "expected a cochain document".into() }),
    }
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    match parse_document(text)? {
        Document::Poly(u) => Ok(u),
        Document::Cochain(c) if c.terms().all(|(t, _)| t.arity() == 0) => Polynomial::from_terms(
            c.dim(),
            c.terms().map(|(t, k)| (t.x_part().clone(), k.clone())),
        ),
        _ => Err(Error::Parse { line: 1, column: 1, message: "expected a poly document".into() }),
    }
}

pub fn parse_deformation(text: &str) -> Result<Deformation> {
    match parse_document(text)? {
        Document::Deformation(d) => Ok(d),
        _ => Err(Error::Parse { line: 1, column: 1, message: "expected a deformation document".into() }),
    }
}

fn terms_json(c: &Cochain) -> Value {
    Value::Array(
        c.terms()
            .map(|(t, k)| {
                let mut row = vec![json!(k.to_string()), json!(t.x_part().entries())];
                row.extend(t.slots().iter().map(|s| json!(s.entries())));
                Value::Array(row)
            })
            .collect(),
    )
}

pub fn sexpr_to_json(e: &SExpr) -> Value {
    match e {
        SExpr::Atom { text, .. } => match text.parse::<i64>() {
            Ok(i) => json!(i),
            Err(_) => json!(text),
        },
        SExpr::Str { text, .. } => json!(text),
        SExpr::List { items, .. } => Value::Array(items.iter().map(sexpr_to_json).collect()),
    }
}

/// JSON mirror: terms are arrays `[coefficient, a₀, a₁, …]` with the
/// coefficient as a `"p/q"` string.
pub fn document_to_json(d: &Document) -> Value {
    match d {
        Document::Cochain(c) => json!({"kind": "cochain", "dimension": c.dim(), "terms": terms_json(c)}),
        Document::Poly(u) => json!({
            "kind": "poly",
            "dimension": u.dim(),
            "terms": terms_json(&Cochain::from_polynomial(u)),
        }),
        Document::Deformation(x) => json!({
            "kind": "deformation",
            "dimension": x.dim(),
            "order": x.order(),
            "convention": CONVENTION,
            "cochains": x.cochains().iter().enumerate()
                .map(|(i, c)| json!({"k": i + 1, "terms": terms_json(c)}))
                .collect::<Vec<_>>(),
        }),
        Document::Report(r) => json!({
            "kind": "report",
            "dimension": r.dim,
            "items": r.items.iter().map(sexpr_to_json).collect::<Vec<_>>(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn symplectic_literal() {
        let c = parse_cochain("(cochain 2 (term 1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))").unwrap();
        assert_eq!(c.len(), 2);
        let t = BasisTerm::new([0, 0].into(), vec![[0, 1].into(), [1, 0].into()]);
        assert_eq!(c.coeff(&t), q(-1));
    }

    #[test]
    fn euler_field_literal() {
        let c = parse_cochain("(cochain 2 (term 1 (1 0) (1 0)))").unwrap();
        assert_eq!(c, Cochain::euler_field(2, 0));
    }

    #[test]
    fn zero_cochain_and_print() {
        let c = parse_cochain("(cochain 3)").unwrap();
        assert!(c.is_zero());
        assert_eq!(print_cochain(&c), "(cochain 3)");
    }

    #[test]
    fn dimension_errors() {
        let err = parse_cochain("(cochain 2\n (term 1 (0 0 0)))").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 10, .. }), "{err:?}");
        assert!(parse_cochain("(cochain 2 (term 1/0 (0 0)))").is_err());
        assert!(parse_cochain("(cochain 2 (term x (0 0)))").is_err());
        assert!(parse_cochain("(cochain 2 (term 1 (0 -1)))").is_err());
        assert!(parse_polynomial("(poly 2 (term 1 (0 0) (1 0)))").is_err());
    }

    #[test]
    fn deformation_round_trip() {
        let p1 = parse_cochain("(cochain 2 (term 1/2 (0 0) (1 0) (0 1)) (term -1/2 (0 0) (0 1) (1 0)))").unwrap();
        let d = Deformation::new(2, vec![p1, Cochain::zero(2)]).unwrap();
        let text = print_deformation(&d);
        assert_eq!(parse_deformation(&text).unwrap(), d);
        assert!(parse_deformation("(deformation 2 (order 2) (p 1))").is_err());
        assert!(parse_deformation("(deformation 2 (convention other) (p 1))").is_err());
    }

    #[test]
    fn json_mirror() {
        let c = parse_cochain("(cochain 2 (term -3/2 (1 0) (0 1)))").unwrap();
        let v = document_to_json(&Document::Cochain(c));
        assert_eq!(v["kind"], "cochain");
        assert_eq!(v["terms"][0][0], "-3/2");
        assert_eq!(v["terms"][0][2], json!([0, 1]));
    }

    #[test]
    fn report_round_trip() {
        let mut r = Report::new(2);
        r.push(SExpr::list(vec![SExpr::sym("law"), SExpr::string("cup associativity"), SExpr::sym("pass")]));
        let doc = Document::Report(r);
        let text = print_document(&doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(print_document(&back), text);
    }
}
