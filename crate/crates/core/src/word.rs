//! Words over the generators {a, b} with nested commutator terms, plus the
//! compact string grammar used by the CLI and relator files.
//!
//! Grammar (whitespace between terms is optional):
//!
//! ```text
//! word  := term*
//! term  := atom ('^' exponent)?
//! atom  := 'a' | 'b' | '[' word (',' word)+ ']'
//! exponent := '-'? digits          (arbitrary precision)
//! ```
//!
//! `[u,v]` is the commutator of two words; `[u,v,w]` abbreviates the
//! left-normed `[[u,v],w]`. An explicit exponent of zero is rejected. In
//! relator files, `#` starts a comment and blank lines are skipped.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    A,
    B,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::A => write!(f, "a"),
            Generator::B => write!(f, "b"),
        }
    }
}

/// A single factor of a word: a generator power or a commutator power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordTerm {
    Gen {
        gen: Generator,
        exp: BigInt,
    },
    Comm {
        left: Box<Word>,
        right: Box<Word>,
        exp: BigInt,
    },
}

/// A word: a finite product of terms. Terms with zero exponent are never
/// stored; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    terms: Vec<WordTerm>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[WordTerm] {
        &self.terms
    }

    /// aᵉ or bᵉ; dropped silently when e = 0.
    pub fn generator_power(gen: Generator, exp: BigInt) -> Self {
        let mut w = Self::empty();
        w.push_generator(gen, exp);
        w
    }

    /// [left, right]ᵉ; dropped silently when e = 0.
    pub fn commutator_power(left: Word, right: Word, exp: BigInt) -> Self {
        let mut w = Self::empty();
        w.push_commutator(left, right, exp);
        w
    }

    pub fn push_generator(&mut self, gen: Generator, exp: BigInt) {
        if !exp.is_zero() {
            self.terms.push(WordTerm::Gen { gen, exp });
        }
    }

    pub fn push_commutator(&mut self, left: Word, right: Word, exp: BigInt) {
        if !exp.is_zero() {
            self.terms.push(WordTerm::Comm {
                left: Box::new(left),
                right: Box::new(right),
                exp,
            });
        }
    }

    /// Concatenation (group product of the two words).
    pub fn concat(mut self, other: Word) -> Word {
        self.terms.extend(other.terms);
        self
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "1");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for WordTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordTerm::Gen { gen, exp } => {
                if exp.is_one() {
                    write!(f, "{gen}")
                } else {
                    write!(f, "{gen}^{exp}")
                }
            }
            WordTerm::Comm { left, right, exp } => {
                // Left-normed chains print flat: [[a,b],a] as [a,b,a].
                let mut parts: Vec<String> = Vec::new();
                let mut cur: (&Word, &Word) = (left, right);
                loop {
                    parts.push(cur.1.to_string());
                    match cur.0.terms() {
                        [WordTerm::Comm {
                            left: l,
                            right: r,
                            exp: e,
                        }] if e.is_one() => cur = (l, r),
                        _ => {
                            parts.push(cur.0.to_string());
                            break;
                        }
                    }
                }
                parts.reverse();
                if exp.is_one() {
                    write!(f, "[{}]", parts.join(","))
                } else {
                    write!(f, "[{}]^{exp}", parts.join(","))
                }
            }
        }
    }
}

/// Parse failure for the word grammar, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("word syntax error at byte {offset}: {message}")]
pub struct WordParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> WordParseError {
        WordParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn word(&mut self, stop: &[u8]) -> Result<Word, WordParseError> {
        let mut w = Word::empty();
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(w),
                Some(ch) if stop.contains(&ch) => return Ok(w),
                Some(b'a') | Some(b'b') => {
                    let gen = if self.peek() == Some(b'a') {
                        Generator::A
                    } else {
                        Generator::B
                    };
                    self.pos += 1;
                    let exp = self.exponent()?;
                    w.push_generator(gen, exp);
                }
                Some(b'[') => {
                    self.pos += 1;
                    let mut inner = vec![self.word(b",]")?];
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        inner.push(self.word(b",]")?);
                    }
                    if self.peek() != Some(b']') {
                        return Err(self.err("expected ',' or ']' in commutator"));
                    }
                    self.pos += 1;
                    if inner.len() < 2 {
                        return Err(self.err("commutator needs at least two arguments"));
                    }
                    // Fold [u,v,w,...] left-normed.
                    let mut it = inner.into_iter();
                    let mut acc = it.next().unwrap();
                    for next in it {
                        acc = Word::commutator_power(acc, next, BigInt::one());
                    }
                    let exp = self.exponent()?;
                    // Unwrap the redundant power-of-one wrapper.
                    match acc.terms.as_mut_slice() {
                        [WordTerm::Comm { exp: e, .. }] if e.is_one() => *e = exp.clone(),
                        _ => unreachable!("left-normed fold yields a single term"),
                    }
                    if !exp.is_zero() {
                        w.terms.extend(acc.terms);
                    }
                }
                Some(other) => {
                    return Err(self.err(format!("unexpected character {:?}", other as char)))
                }
            }
        }
    }

    /// Optional `^<signed integer>`; defaults to 1; rejects 0.
    fn exponent(&mut self) -> Result<BigInt, WordParseError> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(BigInt::one());
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.err("expected digits after '^'"));
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        let exp: BigInt = text.parse().unwrap();
        if exp.is_zero() {
            return Err(self.err("zero exponents are not allowed"));
        }
        Ok(exp)
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        let w = p.word(&[])?;
        p.skip_ws();
        if p.pos != p.input.len() {
            return Err(p.err("trailing input"));
        }
        Ok(w)
    }
}

/// Parses a relator file: one word per line, `#` comments, blank lines skipped.
pub fn parse_relator_lines(text: &str) -> Result<Vec<Word>, WordParseError> {
    let mut out = Vec::new();
    let mut offset = 0usize;
    for line in text.lines() {
        let body = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if !body.trim().is_empty() {
            let w: Word = body.parse().map_err(|e: WordParseError| WordParseError {
                offset: offset + e.offset,
                message: e.message,
            })?;
            out.push(w);
        }
        offset += line.len() + 1;
    }
    Ok(out)
}
