use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::word::{Alphabet, Letter, Word};
use crate::error::{expect_alphabet, Result};
use crate::rational::Q;

/// A finite linear combination of words over one alphabet.
///
/// Arithmetic operators panic when the two operands live over different
/// alphabets; the fallible entry points in [`super::products`] report
/// [`crate::Error::AlphabetMismatch`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Q>,
}

impl NcPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        NcPoly {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::from_word(Word::empty(alphabet))
    }

    pub fn from_word(word: Word) -> Self {
        Self::monomial(Q::one(), word)
    }

    pub fn monomial(coeff: Q, word: Word) -> Self {
        let mut p = Self::zero(word.alphabet());
        p.add_term(word, coeff);
        p
    }

    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Word, Q)>) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            expect_alphabet(alphabet, w.alphabet())?;
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn letter(letter: Letter) -> Self {
        Self::from_word(Word::from_letters(letter.alphabet(), std::iter::once(letter).collect()))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of words with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (degree-lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn get(&self, word: &Word) -> Option<&Q> {
        self.terms.get(word)
    }

    /// Coefficient of `word`, zero when absent.
    pub fn coeff_of(&self, word: &Word) -> Q {
        self.terms.get(word).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, word: Word, coeff: Q) {
        assert_eq!(word.alphabet(), self.alphabet, "word `{word}` added to a {} polynomial", self.alphabet);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly, factor: &Q) {
        self.check_same(other);
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Q) -> NcPoly {
        if factor.is_zero() {
            return Self::zero(self.alphabet);
        }
        NcPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * factor)).collect(),
        }
    }

    /// Extends a word-level map linearly. `target` is the alphabet of the images.
    pub fn map_linear<F>(&self, target: Alphabet, mut f: F) -> NcPoly
    where
        F: FnMut(&Word) -> NcPoly,
    {
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Like [`NcPoly::map_linear`] with a fallible word map.
    pub fn try_map_linear<F>(&self, target: Alphabet, mut f: F) -> Result<NcPoly>
    where
        F: FnMut(&Word) -> Result<NcPoly>,
    {
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    /// Linear extension of `f` with one evaluation per distinct word, shared
    /// through `cache`.
    pub fn map_linear_cached<F>(&self, target: Alphabet, cache: &mut HashMap<Word, NcPoly>, mut f: F) -> NcPoly
    where
        F: FnMut(&Word) -> NcPoly,
    {
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            let img = cache.entry(w.clone()).or_insert_with(|| f(w));
            out.add_scaled(img, c);
        }
        out
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter<F>(&self, mut keep: F) -> NcPoly
    where
        F: FnMut(&Word) -> bool,
    {
        NcPoly {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Bihomogeneous components keyed by `(weight, depth)`.
    pub fn components(&self) -> BTreeMap<(u32, u32), NcPoly> {
        let mut out: BTreeMap<(u32, u32), NcPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry((w.weight(), w.depth()))
                .or_insert_with(|| NcPoly::zero(self.alphabet))
                .add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn depth_component(&self, depth: u32) -> NcPoly {
        self.filter(|w| w.depth() == depth)
    }

    pub fn max_depth(&self) -> Option<u32> {
        self.terms.keys().map(Word::depth).max()
    }

    /// The single `(weight, depth)` of a nonzero bihomogeneous polynomial.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|w| (w.weight(), w.depth()));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff_of(&Word::empty(self.alphabet))
    }

    /// Concatenation product (no alphabet check).
    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        self.check_same(other);
        let mut out = NcPoly::zero(self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Commutator `fg - gf`.
    pub fn commutator(&self, other: &NcPoly) -> NcPoly {
        &self.mul(other) - &other.mul(self)
    }

    fn check_same(&self, other: &NcPoly) {
        assert_eq!(
            self.alphabet, other.alphabet,
            "alphabet mismatch in polynomial arithmetic"
        );
    }
}

impl AddAssign<&NcPoly> for NcPoly {
    fn add_assign(&mut self, rhs: &NcPoly) {
        self.check_same(rhs);
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&NcPoly> for NcPoly {
    fn sub_assign(&mut self, rhs: &NcPoly) {
        self.check_same(rhs);
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for NcPoly {
    type Output = NcPoly;
    fn add(mut self, rhs: NcPoly) -> NcPoly {
        self += &rhs;
        self
    }
}

impl Sub for NcPoly {
    type Output = NcPoly;
    fn sub(mut self, rhs: NcPoly) -> NcPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

/// Canonical term order; coefficients as `a/b`, a leading minus for negative
/// terms, and `0` for the zero polynomial.
impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}
