//! The textual query language.
//!
//! ```text
//! query := ('o' | 'h' | 'w' | 'sot' | 'all') '(' expr ')'
//! expr  := expr ' + ' expr | expr ' U ' expr | expr ' x ' expr | expr ' . ' expr
//!        | 'Md(' expr ')' | 'Mr(' expr ')' | 'Gamma(' nat ')' | 'H'
//!        | ordinal | 'poset:' path | '(' expr ')'
//! ```
//!
//! Binding, tightest first: `Md`/`Mr`, then `x` and `.` (which may not be
//! mixed without parentheses), then `U`, then `+`. All are left-associative.
//! Ordinal literals are read one CNF term at a time; neighbouring ordinals in
//! a `+` chain are added, so `w^2 + w*3 + 1` is a single ordinal leaf.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{PosetLeaf, WpoTerm};
use crate::ordinal::{parse_term_at, Cursor, ParseError};
use crate::poset::{Composition, FinitePoset, PosetError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    O,
    H,
    W,
    Sot,
    All,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::O => "o",
            Function::H => "h",
            Function::W => "w",
            Function::Sot => "sot",
            Function::All => "all",
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Function {
    type Err = ();

    fn from_str(s: &str) -> Result<Function, ()> {
        Ok(match s {
            "o" => Function::O,
            "h" => Function::H,
            "w" => Function::W,
            "sot" => Function::Sot,
            "all" => Function::All,
            _ => return Err(()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub function: Function,
    pub term: WpoTerm,
}

#[derive(Debug, Error)]
pub enum QueryError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("poset file '{path}': {source}")]
    Poset {
        path: String,
        #[source]
        source: PosetError,
    },
}

/// Parses a query, reading `poset:` files from disk.
pub fn parse_query(text: &str) -> Result<Query, QueryError> {
    parse_query_with(text, &mut |path| FinitePoset::load(path))
}

/// Parses a query with a custom loader for `poset:` references.
pub fn parse_query_with(
    text: &str,
    loader: &mut dyn FnMut(&str) -> Result<FinitePoset, PosetError>,
) -> Result<Query, QueryError> {
    let mut p = Parser {
        cur: Cursor::new(text),
        loader,
    };
    p.cur.skip_ws();
    let start = p.cur.pos;
    let name = p.word().to_string();
    let function = name.parse().map_err(|_| {
        let mut e = p.cur.error(&["'o'", "'h'", "'w'", "'sot'", "'all'"]);
        e.position = start;
        e.found = if name.is_empty() { p.cur.found() } else { format!("'{name}'") };
        e
    })?;
    p.expect("(")?;
    let term = p.expr()?;
    p.expect(")")?;
    p.cur.skip_ws();
    if !p.cur.at_end() {
        return Err(p.cur.error(&["end of input"]).into());
    }
    Ok(Query { function, term })
}

/// Parses a bare term.
pub fn parse_term(text: &str) -> Result<WpoTerm, QueryError> {
    let mut loader = |path: &str| FinitePoset::load(path);
    let mut p = Parser {
        cur: Cursor::new(text),
        loader: &mut loader,
    };
    let term = p.expr()?;
    p.cur.skip_ws();
    if !p.cur.at_end() {
        return Err(p.cur.error(&["operator", "end of input"]).into());
    }
    Ok(term)
}

struct Parser<'a, 'l> {
    cur: Cursor<'a>,
    loader: &'l mut dyn FnMut(&str) -> Result<FinitePoset, PosetError>,
}

impl Parser<'_, '_> {
    fn word(&mut self) -> &str {
        let start = self.cur.pos;
        while self.cur.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.cur.pos += 1;
        }
        &self.cur.src[start..self.cur.pos]
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        self.cur.skip_ws();
        if self.cur.eat(token) {
            self.cur.skip_ws();
            Ok(())
        } else {
            Err(self.cur.error(&[&format!("'{token}'")]))
        }
    }

    fn expr(&mut self) -> Result<WpoTerm, QueryError> {
        self.cur.skip_ws();
        let mut operands = vec![self.union()?];
        while self.cur.eat_operator("+") {
            operands.push(self.union()?);
        }
        // neighbouring ordinals add up; lexicographic sum is associative
        let mut merged: Vec<WpoTerm> = Vec::new();
        for t in operands {
            match (merged.last_mut(), t) {
                (Some(WpoTerm::Ordinal(a)), WpoTerm::Ordinal(b)) => *a = a.add(&b),
                (_, t) => merged.push(t),
            }
        }
        let mut it = merged.into_iter();
        let first = it.next().expect("at least one operand");
        Ok(it.fold(first, WpoTerm::lex_sum))
    }

    fn union(&mut self) -> Result<WpoTerm, QueryError> {
        let mut t = self.product()?;
        while self.cur.eat_operator("U") {
            t = WpoTerm::disjoint_sum(t, self.product()?);
        }
        Ok(t)
    }

    fn product(&mut self) -> Result<WpoTerm, QueryError> {
        let mut t = self.atom()?;
        let mut seen: Option<Composition> = None;
        loop {
            let at = self.cur.pos;
            let op = if self.cur.eat_operator("x") {
                Composition::Cartesian
            } else if self.cur.eat_operator(".") {
                Composition::LexProduct
            } else {
                break;
            };
            if seen.is_some_and(|s| s != op) {
                let at = at + self.cur.src[at..].len() - self.cur.src[at..].trim_start().len();
                return Err(self
                    .cur
                    .error_at(at, "mixing 'x' and '.' requires parentheses")
                    .into());
            }
            seen = Some(op);
            t = WpoTerm::binary(op, t, self.atom()?);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<WpoTerm, QueryError> {
        self.cur.skip_ws();
        let start = self.cur.pos;
        if self.cur.eat("(") {
            self.cur.skip_ws();
            let t = self.expr()?;
            self.expect(")")?;
            return Ok(t);
        }
        for (name, build) in [
            ("Md(", WpoTerm::multiset_emb as fn(WpoTerm) -> WpoTerm),
            ("Mr(", WpoTerm::multiset_ord),
        ] {
            if self.cur.eat(name) {
                self.cur.skip_ws();
                let child = self.expr()?;
                self.expect(")")?;
                return Ok(build(child));
            }
        }
        if self.cur.eat("Gamma(") {
            self.cur.skip_ws();
            let at = self.cur.pos;
            let k = self.cur.nat()?;
            let k = usize::try_from(k).map_err(|_| self.cur.error_at(at, "antichain too large"))?;
            self.expect(")")?;
            return Ok(WpoTerm::Gamma(k));
        }
        if self.cur.eat("poset:") {
            let path_start = self.cur.pos;
            while self
                .cur
                .peek()
                .is_some_and(|c| !c.is_whitespace() && c != ')')
            {
                self.cur.pos += self.cur.peek().map_or(1, char::len_utf8);
            }
            let path = &self.cur.src[path_start..self.cur.pos];
            if path.is_empty() {
                return Err(self.cur.error(&["file path"]).into());
            }
            let poset = (self.loader)(path).map_err(|source| QueryError::Poset {
                path: path.to_string(),
                source,
            })?;
            return Ok(WpoTerm::Poset(PosetLeaf {
                poset,
                source: Some(path.to_string()),
            }));
        }
        if self.cur.rest().starts_with('H')
            && !self.cur.rest()[1..].starts_with(|c: char| c.is_ascii_alphanumeric())
        {
            self.cur.pos += 1;
            return Ok(WpoTerm::H);
        }
        match parse_term_at(&mut self.cur) {
            Ok(o) => Ok(WpoTerm::Ordinal(o)),
            Err(e) if self.cur.pos > start => Err(e.into()),
            Err(_) => {
                self.cur.pos = start;
                Err(self
                    .cur
                    .error(&[
                        "'('", "'Md('", "'Mr('", "'Gamma('", "'H'", "'poset:'", "ordinal",
                    ])
                    .into())
            }
        }
    }
}
