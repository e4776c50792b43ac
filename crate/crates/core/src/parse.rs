//! Text grammar for ordinal expressions and for sequence, list and vector literals.
//!
//! ```text
//! expr := sum
//! sum  := prod (('+' | '#') prod)*
//! prod := pw (('*' | '@') pw)*
//! pw   := atom ['^' pw]
//! atom := 'w' | NAT | '(' expr ')'
//! ```
//!
//! `+`/`*` are the classical operations, `#`/`@` the natural ones, `^` is
//! right-associative. Whitespace is ignored between tokens.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::natural::{nat_prod, nat_sum};
use crate::ordinal::{Natural, Ordinal};
use crate::sequence::OmegaSequence;

pub fn parse(text: &str) -> Result<Ordinal> {
    let mut p = Parser::new(text);
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// `[e0, e1, ... ; c0, c1, ...]`; the prefix may be empty, the cycle may not.
pub fn parse_sequence(text: &str) -> Result<OmegaSequence> {
    let mut p = Parser::new(text);
    p.expect('[')?;
    let prefix = if p.peek() == Some(';') {
        Vec::new()
    } else {
        p.expr_list()?
    };
    p.expect(';')?;
    if p.peek() == Some(']') {
        return Err(p.error("the cycle of a sequence literal must be nonempty"));
    }
    let cycle = p.expr_list()?;
    p.expect(']')?;
    p.finish()?;
    OmegaSequence::new(prefix, cycle)
}

/// `[e0, e1, ...]`, possibly empty.
pub fn parse_list(text: &str) -> Result<Vec<Ordinal>> {
    let mut p = Parser::new(text);
    p.expect('[')?;
    let items = if p.peek() == Some(']') {
        Vec::new()
    } else {
        p.expr_list()?
    };
    p.expect(']')?;
    p.finish()?;
    Ok(items)
}

/// `{i:EXPR, j:EXPR, ...}`; zero entries are dropped, omitted indices are 0.
pub fn parse_vector_entries(text: &str) -> Result<BTreeMap<usize, Ordinal>> {
    let mut p = Parser::new(text);
    p.expect('{')?;
    let mut entries = BTreeMap::new();
    if p.peek() != Some('}') {
        loop {
            let at = p.offset();
            let index = p.natural()?;
            let index: usize = index
                .try_into()
                .map_err(|_| Error::syntax(at, "index too large"))?;
            p.expect(':')?;
            let value = p.expr()?;
            if entries.contains_key(&index) {
                return Err(Error::syntax(at, format!("duplicate index {index}")));
            }
            if !value.is_zero() {
                entries.insert(index, value);
            }
            if p.peek() == Some(',') {
                p.bump();
            } else {
                break;
            }
        }
    }
    p.expect('}')?;
    p.finish()?;
    Ok(entries)
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn offset(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn error(&mut self, msg: &str) -> Error {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        Error::syntax(self.pos, format!("{msg}, found {found}"))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }

    fn expr_list(&mut self) -> Result<Vec<Ordinal>> {
        let mut items = vec![self.expr()?];
        while self.peek() == Some(',') {
            self.bump();
            items.push(self.expr()?);
        }
        Ok(items)
    }

    fn expr(&mut self) -> Result<Ordinal> {
        let mut acc = self.prod()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.ord_add(&self.prod()?);
                }
                Some('#') => {
                    self.bump();
                    acc = nat_sum(&acc, &self.prod()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn prod(&mut self) -> Result<Ordinal> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.ord_mul(&self.power()?);
                }
                Some('@') => {
                    self.bump();
                    acc = nat_prod(&acc, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Ordinal> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let exponent = self.power()?;
            return base.pow(&exponent);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ordinal> {
        match self.peek() {
            Some('w') => {
                self.bump();
                Ok(Ordinal::omega())
            }
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::finite(self.natural()?)),
            _ => Err(self.error("expected expression")),
        }
    }

    fn natural(&mut self) -> Result<Natural> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a decimal numeral"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}
