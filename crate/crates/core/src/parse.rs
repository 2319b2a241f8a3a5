//! Text syntax for monomials and monomial ideals.
//!
//! A monomial is a product of `var^exp` factors separated by `*`,
//! whitespace, or nothing at all (`x^2y`), with variables drawn from
//! `x, y, z, t`. An ideal is a
//! comma-separated list of monomials; `0` is the zero ideal and `1` the unit
//! ideal. Example: `x^3, x^2*y^2, x y^4`.

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{Monomial, MAX_VARS, VARIABLE_NAMES};

struct Scanner {
    chars: Vec<char>,
    pos: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn var_index(c: char) -> Option<usize> {
    VARIABLE_NAMES.iter().position(|n| n.starts_with(c))
}

impl Scanner {
    fn new(src: &str) -> Self {
        Scanner {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                Some('-') => err(start + 1, "negative exponent"),
                Some(c) => err(start + 1, format!("expected exponent, found '{c}'")),
                None => err(start + 1, "expected exponent, found end of input"),
            });
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| err(start + 1, format!("exponent '{digits}' out of range")))
    }

    /// One monomial as a list of exponents indexed by variable.
    fn monomial(&mut self) -> Result<[u32; MAX_VARS]> {
        let mut exps = [0u32; MAX_VARS];
        let mut factors = 0;
        loop {
            self.skip_ws();
            let at = self.pos;
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let v = var_index(c)
                        .ok_or_else(|| err(at + 1, format!("unknown variable '{c}'")))?;
                    self.pos += 1;
                    let mut e = 1;
                    let before_ws = self.pos;
                    self.skip_ws();
                    if self.peek() != Some('^') {
                        self.pos = before_ws;
                    } else {
                        self.pos += 1;
                        self.skip_ws();
                        e = self.number()?;
                    }
                    exps[v] += e;
                }
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number()?;
                    if n != 1 {
                        return Err(err(at + 1, format!("coefficient {n} is not allowed")));
                    }
                }
                Some(c) => return Err(err(at + 1, format!("unexpected '{c}'"))),
                None => return Err(err(at + 1, "expected a monomial")),
            }
            factors += 1;
            let had_ws = self.skip_ws();
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(',') | None => break,
                Some(c) if had_ws || c.is_ascii_alphabetic() => {}
                Some(c) => return Err(err(self.pos + 1, format!("unexpected '{c}'"))),
            }
        }
        debug_assert!(factors > 0);
        Ok(exps)
    }
}

/// Generator exponent vectors padded to `MAX_VARS`; `None` is the zero ideal.
fn parse_raw(text: &str) -> Result<Option<Vec<[u32; MAX_VARS]>>> {
    let mut sc = Scanner::new(text);
    sc.skip_ws();
    if sc.peek() == Some('0') {
        let at = sc.pos;
        sc.pos += 1;
        sc.skip_ws();
        if sc.peek().is_none() {
            return Ok(None);
        }
        sc.pos = at;
        if sc.chars.get(at + 1).is_some_and(|c| c.is_ascii_digit()) {
            // e.g. "01" is not a monomial either
            return Err(err(at + 1, "malformed number"));
        }
        return Err(err(at + 1, "'0' must stand alone"));
    }
    let mut gens = Vec::new();
    loop {
        gens.push(sc.monomial()?);
        match sc.peek() {
            Some(',') => sc.pos += 1,
            None => break,
            Some(c) => return Err(err(sc.pos + 1, format!("unexpected '{c}'"))),
        }
    }
    Ok(Some(gens))
}

/// Number of variables an expression mentions (the highest variable index
/// plus one; at least 1).
pub fn variables_used(text: &str) -> Result<usize> {
    let gens = parse_raw(text)?.unwrap_or_default();
    Ok(gens
        .iter()
        .filter_map(|e| e.iter().rposition(|&v| v > 0))
        .max()
        .map_or(1, |v| v + 1))
}

/// Parses an ideal in a ring with `nvars` variables.
pub fn parse_ideal_in(text: &str, nvars: usize) -> Result<MonomialIdeal> {
    let Some(gens) = parse_raw(text)? else {
        return MonomialIdeal::zero(nvars);
    };
    let mut monos = Vec::with_capacity(gens.len());
    for e in gens {
        if let Some(v) = e.iter().rposition(|&x| x > 0) {
            if v >= nvars {
                return Err(Error::VariableOutOfRange { index: v, nvars });
            }
        }
        monos.push(Monomial::new(e[..nvars].to_vec())?);
    }
    minimalize(nvars, monos)
}

/// Parses an ideal in the smallest ring containing its variables.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    parse_ideal_in(text, variables_used(text)?)
}
