//! A small s-expression reader and printer with source positions.

use std::fmt;

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SExpr {
    /// Integer, rational `p/q`, or bare symbol.
    Atom { text: String, line: usize, column: usize },
    /// A double-quoted string.
    Str { text: String, line: usize, column: usize },
    List { items: Vec<SExpr>, line: usize, column: usize },
}

impl SExpr {
    pub fn sym(s: impl Into<String>) -> Self {
        SExpr::Atom { text: s.into(), line: 0, column: 0 }
    }

    pub fn int(i: impl Into<BigInt>) -> Self {
        SExpr::sym(i.into().to_string())
    }

    pub fn rational(r: &Rational) -> Self {
        SExpr::sym(r.to_string())
    }

    pub fn string(s: impl Into<String>) -> Self {
        SExpr::Str { text: s.into(), line: 0, column: 0 }
    }

    pub fn list(items: Vec<SExpr>) -> Self {
        SExpr::List { items, line: 0, column: 0 }
    }

    pub fn position(&self) -> (usize, usize) {
        match self {
            SExpr::Atom { line, column, .. }
            | SExpr::Str { line, column, .. }
            | SExpr::List { line, column, .. } => (*line, *column),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.position();
        Error::Parse { line, column, message: message.into() }
    }

    pub fn as_list(&self) -> Result<&[SExpr]> {
        match self {
            SExpr::List { items, .. } => Ok(items),
            _ => Err(self.error("expected a list")),
        }
    }

    pub fn as_symbol(&self) -> Result<&str> {
        match self {
            SExpr::Atom { text, .. } => Ok(text),
            _ => Err(self.error("expected a symbol")),
        }
    }

    pub fn as_string(&self) -> Result<&str> {
        match self {
            SExpr::Str { text, .. } | SExpr::Atom { text, .. } => Ok(text),
            _ => Err(self.error("expected a string")),
        }
    }

    pub fn as_bigint(&self) -> Result<BigInt> {
        let text = self.as_symbol()?;
        text.parse::<BigInt>()
            .map_err(|_| self.error(format!("expected an integer, found `{text}`")))
    }

    pub fn as_i64(&self) -> Result<i64> {
        let text = self.as_symbol()?;
        text.parse::<i64>()
            .map_err(|_| self.error(format!("expected an integer, found `{text}`")))
    }

    pub fn as_u64(&self) -> Result<u64> {
        let text = self.as_symbol()?;
        text.parse::<u64>()
            .map_err(|_| self.error(format!("expected a nonnegative integer, found `{text}`")))
    }

    /// `INT` or `INT/INT` with a nonzero denominator.
    pub fn as_rational(&self) -> Result<Rational> {
        let text = self.as_symbol()?;
        let bad = || self.error(format!("expected a rational, found `{text}`"));
        match text.split_once('/') {
            None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(self.error("rational with zero denominator"));
                }
                Ok(Rational::new(n, d))
            }
        }
    }

    /// Whether this is a list whose head is the given symbol.
    pub fn is_form(&self, head: &str) -> bool {
        matches!(self, SExpr::List { items, .. }
            if matches!(items.first(), Some(SExpr::Atom { text, .. }) if text == head))
    }
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Atom { text, .. } => f.write_str(text),
            SExpr::Str { text, .. } => {
                f.write_str("\"")?;
                for ch in text.chars() {
                    match ch {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        '\n' => f.write_str("\\n")?,
                        c => write!(f, "{c}")?,
                    }
                }
                f.write_str("\"")
            }
            SExpr::List { items, .. } => {
                f.write_str("(")?;
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{it}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Reader<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.column, message: message.into() }
    }

    fn skip_blank(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == ';' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<SExpr> {
        self.skip_blank();
        let (line, column) = (self.line, self.column);
        match self.chars.peek().copied() {
            None => Err(self.err("unexpected end of input")),
            Some(')') => Err(self.err("unbalanced `)`")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_blank();
                    match self.chars.peek() {
                        None => {
                            return Err(Error::Parse {
                                line,
                                column,
                                message: "unclosed `(`".into(),
                            })
                        }
                        Some(')') => {
                            self.bump();
                            return Ok(SExpr::List { items, line, column });
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some('"') => {
                self.bump();
                let mut text = String::new();
                loop {
                    match self.bump() {
                        None => return Err(Error::Parse { line, column, message: "unterminated string".into() }),
                        Some('"') => return Ok(SExpr::Str { text, line, column }),
                        Some('\\') => match self.bump() {
                            Some('n') => text.push('\n'),
                            Some(c) => text.push(c),
                            None => return Err(self.err("dangling escape")),
                        },
                        Some(c) => text.push(c),
                    }
                }
            }
            Some(_) => {
                let mut text = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == '"' || c == ';' {
                        break;
                    }
                    text.push(c);
                    self.bump();
                }
                let atom = SExpr::Atom { text, line, column };
                // reject `p/0` early; other atoms are validated where used
                if let SExpr::Atom { text, .. } = &atom {
                    if let Some((n, d)) = text.split_once('/') {
                        if n.parse::<BigInt>().is_ok() && d.parse::<BigInt>().is_ok_and(|d| d.is_zero()) {
                            return Err(atom.error("rational with zero denominator"));
                        }
                    }
                }
                Ok(atom)
            }
        }
    }
}

/// Parse exactly one s-expression from `text`.
pub fn parse(text: &str) -> Result<SExpr> {
    let mut r = Reader { chars: text.chars().peekable(), line: 1, column: 1 };
    let e = r.read()?;
    r.skip_blank();
    if r.chars.peek().is_some() {
        return Err(r.err("trailing input after expression"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_lists() {
        let e = parse("(a (1 -2/4) \"s t\") ; comment").unwrap();
        let items = e.as_list().unwrap();
        assert_eq!(items[0].as_symbol().unwrap(), "a");
        let inner = items[1].as_list().unwrap();
        assert_eq!(inner[1].as_rational().unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(items[2].as_string().unwrap(), "s t");
        assert_eq!(e.to_string(), "(a (1 -2/4) \"s t\")");
    }

    #[test]
    fn positions_in_errors() {
        match parse("(a\n  (b 1/0))") {
            Err(Error::Parse { line: 2, column: 6, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("(a (b)"), Err(Error::Parse { line: 1, column: 1, .. })));
        assert!(matches!(parse("(a))"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn string_escapes_round_trip() {
        let s = SExpr::string("say \"hi\"\\");
        assert_eq!(parse(&s.to_string()).unwrap().as_string().unwrap(), "say \"hi\"\\");
    }
}
