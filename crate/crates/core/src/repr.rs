//! Complex representations of the circle `T` and of the torus `T^2`.
//!
//! A circle representation is a finite multiset of characters `z^n`; a torus
//! representation is a finite multiset of characters `x^λ y^μ`. Both come with
//! a small text grammar:
//!
//! ```text
//! circle:  REP  := '0' | TERM ('+' TERM)*
//!          TERM := [α] ('eps' | 'z' ['^' n])
//! torus:   REP  := '0' | TERM ('+' TERM)*
//!          TERM := [α] ('eps' | ['x' ['^' n]] ['y' ['^' n]])
//! ```
//!
//! `α` is a positive integer, `n` an integer (optionally negative), and
//! whitespace is ignored. `eps` is the trivial character. The lone text `0`
//! denotes the zero representation.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FiniteSubgroup;

/// Largest accepted absolute value of an exponent or multiplicity literal.
pub const LITERAL_LIMIT: i64 = 10_000;

/// The character `x^λ y^μ` of `T^2`.
///
/// Circle characters `z^n` are embedded as `(n, 0)` only when needed; most of
/// the crate works with torus characters directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Character {
    pub lambda: i64,
    pub mu: i64,
}

impl From<[i64; 2]> for Character {
    fn from([lambda, mu]: [i64; 2]) -> Self {
        Character { lambda, mu }
    }
}

impl From<Character> for [i64; 2] {
    fn from(c: Character) -> Self {
        [c.lambda, c.mu]
    }
}

impl Character {
    pub const fn new(lambda: i64, mu: i64) -> Self {
        Character { lambda, mu }
    }

    pub const TRIVIAL: Character = Character::new(0, 0);

    pub fn is_trivial(self) -> bool {
        self.lambda == 0 && self.mu == 0
    }

    /// `gcd(|λ|, |μ|)`; zero only for the trivial character.
    pub fn content(self) -> i64 {
        self.lambda.gcd(&self.mu)
    }

    /// Canonical primitive form: coprime entries, first nonzero entry positive.
    pub fn is_canonical_primitive(self) -> bool {
        self.content() == 1 && (self.lambda > 0 || (self.lambda == 0 && self.mu > 0))
    }

    /// Splits `self = g · v` with `g > 0` and `v` canonical primitive, up to
    /// the sign of `v` (`v` and `-v` have the same kernel).
    pub fn primitive_part(self) -> Option<(i64, Character)> {
        let g = self.content();
        if g == 0 {
            return None;
        }
        let v = Character::new(self.lambda / g, self.mu / g);
        Some((g, v.canonical_sign()))
    }

    /// `±self` with the first nonzero coordinate positive.
    pub fn canonical_sign(self) -> Character {
        if self.lambda < 0 || (self.lambda == 0 && self.mu < 0) {
            Character::new(-self.lambda, -self.mu)
        } else {
            self
        }
    }

    pub fn scale(self, k: i64) -> Character {
        Character::new(k * self.lambda, k * self.mu)
    }

    pub fn det(self, other: Character) -> i64 {
        self.lambda * other.mu - self.mu * other.lambda
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.mu)
    }
}

/// A finite-dimensional complex representation `V = ⊕ α_n z^n` of the circle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleRep {
    terms: BTreeMap<i64, u64>,
}

impl CircleRep {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `mult` copies of `z^n`. Zero multiplicities are ignored.
    pub fn add(&mut self, n: i64, mult: u64) {
        if mult > 0 {
            *self.terms.entry(n).or_insert(0) += mult;
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, u64)>>(terms: I) -> Self {
        let mut rep = CircleRep::new();
        for (n, m) in terms {
            rep.add(n, m);
        }
        rep
    }

    /// Multiplicity of `z^n`.
    pub fn mult(&self, n: i64) -> u64 {
        self.terms.get(&n).copied().unwrap_or(0)
    }

    /// Iterates `(n, α_n)` in increasing `n`, nonzero multiplicities only.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.terms.iter().map(|(&n, &m)| (n, m))
    }

    /// Number of isotypic components.
    pub fn num_components(&self) -> usize {
        self.terms.len()
    }

    pub fn dim(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for CircleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (n, m)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m > 1 {
                write!(f, "{m}")?;
            }
            match n {
                0 => f.write_str("eps")?,
                1 => f.write_str("z")?,
                _ => write!(f, "z^{n}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for CircleRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_circle_rep(s)
    }
}

/// A finite-dimensional complex representation of `T^2`, as a multiset of
/// (not necessarily primitive) characters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusRep {
    terms: BTreeMap<Character, u64>,
}

impl TorusRep {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, c: Character, mult: u64) {
        if mult > 0 {
            *self.terms.entry(c).or_insert(0) += mult;
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Character, u64)>>(terms: I) -> Self {
        let mut rep = TorusRep::new();
        for (c, m) in terms {
            rep.add(c, m);
        }
        rep
    }

    pub fn mult(&self, c: Character) -> u64 {
        self.terms.get(&c).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Character, u64)> + '_ {
        self.terms.iter().map(|(&c, &m)| (c, m))
    }

    pub fn dim(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_trivial_summand(&self) -> bool {
        self.terms.contains_key(&Character::TRIVIAL)
    }

    /// Direct sum.
    pub fn sum(&self, other: &TorusRep) -> TorusRep {
        let mut out = self.clone();
        for (c, m) in other.terms() {
            out.add(c, m);
        }
        out
    }

    /// `dim_C W^F`.
    pub fn fixed_dim(&self, f: &FiniteSubgroup) -> u64 {
        fixed_dim(self, f)
    }
}

impl fmt::Display for TorusRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, m)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m > 1 {
                write!(f, "{m}")?;
            }
            write!(f, "x^{}y^{}", c.lambda, c.mu)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for TorusRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_torus_rep(s)
    }
}

/// Parses a circle representation such as `"eps + 4z"` or `"3z^5 + z^-2"`.
pub fn parse_circle_rep(text: &str) -> Result<CircleRep> {
    let mut p = Parser::new(text);
    if p.is_zero_literal() {
        return Ok(CircleRep::new());
    }
    let mut rep = CircleRep::new();
    loop {
        let (mult, start) = p.multiplicity()?;
        let n = if p.eat_word("eps") {
            0
        } else if p.eat(b'z') {
            if p.eat(b'^') {
                p.integer()?
            } else {
                1
            }
        } else {
            return Err(p.error("expected 'eps' or 'z'"));
        };
        if mult == 0 {
            return Err(Error::ZeroMultiplicity { pos: start });
        }
        rep.add(n, mult);
        if !p.separator()? {
            break;
        }
    }
    Ok(rep)
}

/// Parses a torus representation such as `"x^0y^1 + 4x^1y^1"`.
pub fn parse_torus_rep(text: &str) -> Result<TorusRep> {
    let mut p = Parser::new(text);
    if p.is_zero_literal() {
        return Ok(TorusRep::new());
    }
    let mut rep = TorusRep::new();
    loop {
        let (mult, start) = p.multiplicity()?;
        let c = if p.eat_word("eps") {
            Character::TRIVIAL
        } else {
            let mut seen = false;
            let mut lambda = 0;
            let mut mu = 0;
            if p.eat(b'x') {
                seen = true;
                lambda = if p.eat(b'^') { p.integer()? } else { 1 };
            }
            if p.eat(b'y') {
                seen = true;
                mu = if p.eat(b'^') { p.integer()? } else { 1 };
            }
            if !seen {
                return Err(p.error("expected 'eps', 'x' or 'y'"));
            }
            Character::new(lambda, mu)
        };
        if mult == 0 {
            return Err(Error::ZeroMultiplicity { pos: start });
        }
        rep.add(c, mult);
        if !p.separator()? {
            break;
        }
    }
    Ok(rep)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn error(&mut self, msg: &str) -> Error {
        self.skip_ws();
        let found = match self.src.get(self.pos) {
            Some(&b) => format!("{msg}, found '{}'", b as char),
            None => format!("{msg}, found end of input"),
        };
        Error::Syntax { pos: self.pos, msg: found }
    }

    /// The whole input is the literal `0`.
    fn is_zero_literal(&mut self) -> bool {
        let save = self.pos;
        if self.eat(b'0') && self.peek().is_none() {
            return true;
        }
        self.pos = save;
        false
    }

    fn digits(&mut self) -> Result<Option<i64>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<i64>() {
            Ok(v) if v <= LITERAL_LIMIT => Ok(Some(v)),
            _ => Err(Error::Syntax { pos: start, msg: format!("integer literal exceeds {LITERAL_LIMIT}") }),
        }
    }

    /// Optional leading multiplicity; returns it with the term's start offset.
    fn multiplicity(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let m = self.digits()?.unwrap_or(1);
        Ok((m as u64, start))
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        match self.digits()? {
            Some(v) => Ok(if neg { -v } else { v }),
            None => Err(self.error("expected an integer exponent")),
        }
    }

    /// Consumes a `+` between terms; `false` at end of input.
    fn separator(&mut self) -> Result<bool> {
        match self.peek() {
            None => Ok(false),
            Some(b'+') => {
                self.pos += 1;
                Ok(true)
            }
            Some(_) => Err(self.error("expected '+' or end of input")),
        }
    }
}

/// `V ↦ V ⊗ w`: each `z^n` becomes the torus character `(n, 1)`.
pub fn tensor_with_w(v: &CircleRep) -> TorusRep {
    TorusRep::from_terms(v.terms().map(|(n, m)| (Character::new(n, 1), m)))
}

/// Total multiplicity of the characters of `w` that vanish on `f`.
pub fn fixed_dim(w: &TorusRep, f: &FiniteSubgroup) -> u64 {
    w.terms().filter(|&(c, _)| f.kills(c)).map(|(_, m)| m).sum()
}
