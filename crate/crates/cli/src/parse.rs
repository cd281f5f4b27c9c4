//! Expression grammar:
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := rational ['*' word] | word
//! word  := atom+
//! atom  := base ['^' n]
//! base  := 'b'n | 'x0' | 'x1' | 'y'n | 'D(' n ',' n ')' | 'ad0' ['^' n] '(' poly ')'
//! ```
//!
//! Juxtaposed atoms multiply by concatenation; `ad0^n(p)` is `ad(b0)^n(p)`
//! (or `ad(x0)^n(p)` for `x`-alphabet `p`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use lq_core::hopfmaps::ad0_pow;
use lq_core::{Alphabet, Letter, NcPoly, Word, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A parsed polynomial together with the alphabet its letters came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub poly: NcPoly,
    /// `None` when the expression contains no letters.
    pub alphabet: Option<Alphabet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        alphabet: None,
    };
    let raw = p.poly()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(Expr {
        poly: to_poly(raw, p.alphabet.unwrap_or(Alphabet::B)),
        alphabet: p.alphabet,
    })
}

/// Parses with a fixed alphabet for letter-free input.
pub fn parse_poly(text: &str, default: Alphabet) -> Result<NcPoly, ParseError> {
    let e = parse_expr(text)?;
    Ok(match e.alphabet {
        Some(_) => e.poly,
        None => NcPoly::monomial(e.poly.constant_term(), Word::empty(default)),
    })
}

/// Terms keyed by letter sequence; the alphabet is fixed only once the whole
/// expression has been read.
type Raw = BTreeMap<Vec<Letter>, Q>;

fn raw_add(acc: &mut Raw, letters: Vec<Letter>, c: Q) {
    let e = acc.entry(letters).or_insert_with(Q::zero);
    *e += c;
    acc.retain(|_, c| !c.is_zero());
}

fn raw_mul(a: &Raw, b: &Raw) -> Raw {
    let mut out = Raw::new();
    for (u, c) in a {
        for (v, d) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            raw_add(&mut out, w, c * d);
        }
    }
    out
}

fn to_poly(raw: Raw, alphabet: Alphabet) -> NcPoly {
    let mut out = NcPoly::zero(alphabet);
    for (letters, c) in raw {
        let w = Word::new(alphabet, letters).expect("letters validated while parsing");
        out.add_term(w, c);
    }
    out
}

fn from_poly(p: &NcPoly) -> Raw {
    p.iter()
        .map(|(w, c)| (w.letters().to_vec(), c.clone()))
        .collect()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alphabet: Option<Alphabet>,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.into(),
        }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    /// Digits immediately at the cursor.
    fn nat_here(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(s).expect("digits parse"))
    }

    fn small_nat_here(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.nat_here()?;
        u32::try_from(n).map_err(|_| ParseError {
            pos: start,
            message: "index too large".into(),
        })
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        self.small_nat_here()
    }

    fn poly(&mut self) -> Result<Raw, ParseError> {
        let mut acc = Raw::new();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let term = self.term()?;
            for (w, c) in term {
                raw_add(&mut acc, w, if neg { -c } else { c });
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Raw, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.rational()?;
                let mut word = Raw::new();
                if self.eat(b'*') {
                    word = self.word()?;
                } else {
                    word.insert(Vec::new(), Q::one());
                }
                Ok(word.into_iter().map(|(w, d)| (w, d * &c)).collect())
            }
            Some(_) => self.word(),
            None => Err(self.error("expected a term")),
        }
    }

    fn rational(&mut self) -> Result<Q, ParseError> {
        self.skip_ws();
        let num = self.nat_here()?;
        if self.eat(b'/') {
            self.skip_ws();
            let start = self.pos;
            let den = self.nat_here()?;
            if den.is_zero() {
                return Err(ParseError {
                    pos: start,
                    message: "zero denominator".into(),
                });
            }
            return Ok(Q::new(num, den));
        }
        Ok(Q::from_integer(num))
    }

    fn word(&mut self) -> Result<Raw, ParseError> {
        let mut acc = self.atom()?;
        while matches!(self.peek(), Some(b'b' | b'x' | b'y' | b'D' | b'a' | b'(')) {
            let next = self.atom()?;
            acc = raw_mul(&acc, &next);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Raw, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let n = self.nat()?;
            if n == 0 {
                return Err(self.error("exponent must be positive"));
            }
            let mut out = base.clone();
            for _ in 1..n {
                out = raw_mul(&out, &base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn letter(&mut self, letter: Letter, start: usize) -> Result<Raw, ParseError> {
        let a = letter.alphabet();
        match self.alphabet {
            None => self.alphabet = Some(a),
            Some(b) if b == a => {}
            Some(b) => {
                return Err(ParseError {
                    pos: start,
                    message: format!("mixed alphabets: {a} letter in a {b} expression"),
                })
            }
        }
        Word::new(a, [letter]).map_err(|e| ParseError {
            pos: start,
            message: e.to_string(),
        })?;
        Ok(Raw::from([(vec![letter], Q::one())]))
    }

    fn base(&mut self) -> Result<Raw, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        if rest.starts_with(b"ad0") {
            self.pos += 3;
            let n = if self.eat(b'^') { self.nat()? } else { 1 };
            self.expect(b'(')?;
            let inner = self.poly()?;
            self.expect(b')')?;
            let inner = to_poly(inner, self.alphabet.unwrap_or(Alphabet::B));
            return ad0_pow(&inner, n)
                .map(|p| from_poly(&p))
                .map_err(|e| ParseError {
                    pos: start,
                    message: e.to_string(),
                });
        }
        match rest.first() {
            Some(b'b') => {
                self.pos += 1;
                let s = self.small_nat_here()?;
                self.letter(Letter::B(s), start)
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.small_nat_here()?;
                if i > 1 {
                    return Err(ParseError {
                        pos: start,
                        message: "x letters are x0 and x1".into(),
                    });
                }
                self.letter(Letter::X(i as u8), start)
            }
            Some(b'y') => {
                self.pos += 1;
                let k = self.small_nat_here()?;
                self.letter(Letter::Y(k), start)
            }
            Some(b'D') => {
                self.pos += 1;
                self.expect(b'(')?;
                let k = self.nat()?;
                self.expect(b',')?;
                let m = self.nat()?;
                self.expect(b')')?;
                if k < 1 {
                    return Err(ParseError {
                        pos: start,
                        message: "D(k,m) requires k >= 1".into(),
                    });
                }
                self.letter(Letter::D(k, m), start)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                self.expect(b')')?;
                Ok(inner)
            }
            _ => Err(self.error("expected a letter")),
        }
    }
}
