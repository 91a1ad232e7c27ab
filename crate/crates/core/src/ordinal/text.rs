//! ASCII notation for ordinals.
//!
//! ```text
//! ordinal := term (' + ' term)* | '0'
//! term    := 'w' ('^' exp)? ('*' nat)? | 'eps' nat | nat
//! exp     := nat | 'w' | 'eps' nat | '(' ordinal ')'
//! ```
//!
//! Terms must be strictly decreasing; sums are never reordered.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use super::{cmp_exponents, Exponent, Ordinal, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
    pub message: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: ", self.position + 1)?;
        if let Some(msg) = &self.message {
            return f.write_str(msg);
        }
        write!(f, "expected {}, found {}", self.expected.join(" or "), self.found)
    }
}

/// A byte cursor shared by the ordinal and query parsers.
pub(crate) struct Cursor<'a> {
    pub src: &'a str,
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c == ' ' || c == '\t') {
            self.pos += 1;
        }
    }

    pub fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    pub fn found(&self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(c) => format!("'{c}'"),
        }
    }

    pub fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.found(),
            message: None,
        }
    }

    pub fn error_at(&self, position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            position,
            expected: Vec::new(),
            found: String::new(),
            message: Some(message.into()),
        }
    }

    pub fn nat(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["natural number"]));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error_at(start, "natural number out of range"))
    }

    /// Consumes `+` surrounded by optional blanks, but only if a `+` is next.
    pub fn eat_operator(&mut self, op: &str) -> bool {
        let save = self.pos;
        self.skip_ws();
        if self.eat(op) {
            self.skip_ws();
            true
        } else {
            self.pos = save;
            false
        }
    }
}

pub(crate) fn parse(src: &str) -> Result<Ordinal, ParseError> {
    let mut cur = Cursor::new(src);
    cur.skip_ws();
    let value = parse_ordinal_at(&mut cur)?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(cur.error(&["' + '", "end of input"]));
    }
    Ok(value)
}

/// Parses a full ordinal (a decreasing sum of terms) at the cursor.
pub(crate) fn parse_ordinal_at(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    let start = cur.pos;
    let first = parse_term_at(cur)?;
    if first.is_zero() {
        if cur.eat_operator("+") {
            return Err(cur.error_at(start, "0 cannot appear inside a sum"));
        }
        return Ok(first);
    }
    let mut terms: Vec<Term> = first.terms;
    while cur.eat_operator("+") {
        let at = cur.pos;
        let next = parse_term_at(cur)?;
        let Some(term) = next.terms.into_iter().next() else {
            return Err(cur.error_at(at, "0 cannot appear inside a sum"));
        };
        let previous = &terms.last().expect("nonempty").exponent;
        if cmp_exponents(previous, &term.exponent) != Ordering::Greater {
            return Err(cur.error_at(
                at,
                "terms not in strictly decreasing order (ordinal sums are not reordered)",
            ));
        }
        terms.push(term);
    }
    Ok(Ordinal::from_raw(terms))
}

/// Parses a single term: `w^e*c`, `epsK` or a natural number.
pub(crate) fn parse_term_at(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    if cur.eat("eps") {
        let k = cur.nat()?;
        let k = u32::try_from(k).map_err(|_| cur.error_at(cur.pos, "epsilon index too large"))?;
        return Ok(Ordinal::epsilon(k));
    }
    if cur.eat("w") {
        let exponent = if cur.eat("^") {
            parse_exponent(cur)?
        } else {
            Ordinal::one()
        };
        let coefficient = if cur.eat("*") {
            let at = cur.pos;
            let c = cur.nat()?;
            if c == 0 {
                return Err(cur.error_at(at, "zero coefficient"));
            }
            c
        } else {
            1
        };
        return Ok(Ordinal::monomial(Exponent::from_ordinal(exponent), coefficient));
    }
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        return Ok(Ordinal::from(cur.nat()?));
    }
    Err(cur.error(&["'w'", "'eps'", "natural number"]))
}

fn parse_exponent(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    if cur.eat("(") {
        cur.skip_ws();
        let inner = parse_ordinal_at(cur)?;
        cur.skip_ws();
        if !cur.eat(")") {
            return Err(cur.error(&["')'", "' + '"]));
        }
        return Ok(inner);
    }
    if cur.eat("w") {
        return Ok(Ordinal::omega());
    }
    if cur.eat("eps") {
        let k = cur.nat()?;
        let k = u32::try_from(k).map_err(|_| cur.error_at(cur.pos, "epsilon index too large"))?;
        return Ok(Ordinal::epsilon(k));
    }
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        return Ok(Ordinal::from(cur.nat()?));
    }
    Err(cur.error(&["natural number", "'w'", "'eps'", "'('"]))
}

pub(crate) fn render(a: &Ordinal) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    a.terms
        .iter()
        .map(render_term)
        .collect::<Vec<_>>()
        .join(" + ")
}

fn render_term(t: &Term) -> String {
    let coefficient = if t.coefficient > 1 {
        format!("*{}", t.coefficient)
    } else {
        String::new()
    };
    match &t.exponent {
        Exponent::Epsilon(k) if t.coefficient == 1 => format!("eps{k}"),
        Exponent::Epsilon(k) => format!("w^eps{k}{coefficient}"),
        Exponent::Ordinal(e) => match e.as_finite() {
            Some(0) => t.coefficient.to_string(),
            Some(1) => format!("w{coefficient}"),
            Some(n) => format!("w^{n}{coefficient}"),
            None if *e == Ordinal::omega() => format!("w^w{coefficient}"),
            None => format!("w^({}){coefficient}", render(e)),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_renders_canonical_strings() {
        for s in [
            "0",
            "1",
            "42",
            "w",
            "w*3 + 2",
            "w^(w*2 + 3)*2 + 1",
            "w^(w*2 + 3)*2 + w*5 + 1",
            "eps0",
            "eps0 + w",
            "w^eps1*2 + eps0",
            "w^(eps0 + 1)",
            "w^(w^w)",
            "w^w*7",
        ] {
            let parsed = parse(s).unwrap_or_else(|e| panic!("{s}: {e}"));
            assert_eq!(render(&parsed), s);
        }
    }

    #[test]
    fn normalises_epsilon_exponent() {
        assert_eq!(parse("w^eps1").unwrap(), Ordinal::epsilon(1));
        assert_eq!(render(&parse("w^eps1").unwrap()), "eps1");
        assert_eq!(parse("w^(w^eps0)").unwrap(), Ordinal::epsilon(0));
    }

    #[test]
    fn rejects_out_of_order_sums() {
        let err = parse("1 + w").unwrap_err();
        assert_eq!(err.position, 4);
        assert!(err.to_string().contains("decreasing"));
        assert!(parse("w + w^2").is_err());
        assert!(parse("w + w").is_err());
    }

    #[test]
    fn rejects_syntax_errors() {
        assert!(parse("").is_err());
        assert!(parse("w^").is_err());
        assert!(parse("w*0").is_err());
        assert!(parse("w^(w + 1").is_err());
        assert!(parse("0 + w").is_err());
        assert!(parse("w + 0").is_err());
        let err = parse("v").unwrap_err();
        assert_eq!(err.position, 0);
        assert_eq!(err.found, "'v'");
    }
}
