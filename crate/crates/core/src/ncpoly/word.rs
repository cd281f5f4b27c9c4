use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    B,
    X,
    Y,
    Dbi,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Alphabet::B => "B",
            Alphabet::X => "X",
            Alphabet::Y => "Y",
            Alphabet::Dbi => "Dbi",
        };
        f.write_str(s)
    }
}

/// A single letter. The derived order compares indices within one alphabet,
/// which is the order used for Lyndon words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `b_s`, `s >= 0`.
    B(u32),
    /// `x_0` or `x_1`.
    X(u8),
    /// `y_k`, `k >= 1`.
    Y(u32),
    /// `D_{k,m}`, `k >= 1`, `m >= 0`.
    D(u32, u32),
}

impl Letter {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Letter::B(_) => Alphabet::B,
            Letter::X(_) => Alphabet::X,
            Letter::Y(_) => Alphabet::Y,
            Letter::D(..) => Alphabet::Dbi,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            Letter::B(_) => true,
            Letter::X(i) => i <= 1,
            Letter::Y(k) => k >= 1,
            Letter::D(k, _) => k >= 1,
        }
    }

    pub fn weight(self) -> u32 {
        match self {
            Letter::B(0) => 1,
            Letter::B(s) => s,
            Letter::X(_) => 1,
            Letter::Y(k) => k,
            Letter::D(k, m) => k + m,
        }
    }

    pub fn depth(self) -> u32 {
        match self {
            Letter::B(s) => u32::from(s != 0),
            Letter::X(i) => u32::from(i == 1),
            Letter::Y(_) | Letter::D(..) => 1,
        }
    }

    /// `b_0` or `x_0`.
    pub fn is_zero_letter(self) -> bool {
        matches!(self, Letter::B(0) | Letter::X(0))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::B(s) => write!(f, "b{s}"),
            Letter::X(i) => write!(f, "x{i}"),
            Letter::Y(k) => write!(f, "y{k}"),
            Letter::D(k, m) => write!(f, "D({k},{m})"),
        }
    }
}

pub(crate) type Letters = SmallVec<[Letter; 8]>;

/// A word over one alphabet with its bigrading cached.
///
/// Words are ordered degree-lexicographically: first by weight, then depth,
/// then letter by letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Letters,
    weight: u32,
    depth: u32,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let letters: Letters = letters.into_iter().collect();
        for &l in &letters {
            if l.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: alphabet,
                    found: l.alphabet(),
                });
            }
            if !l.is_valid() {
                return Err(Error::InvalidLetter(l.to_string()));
            }
        }
        Ok(Self::from_letters(alphabet, letters))
    }

    /// Caller guarantees the letters are valid and belong to `alphabet`.
    pub(crate) fn from_letters(alphabet: Alphabet, letters: Letters) -> Self {
        debug_assert!(letters.iter().all(|l| l.alphabet() == alphabet && l.is_valid()));
        let weight = letters.iter().map(|l| l.weight()).sum();
        let depth = letters.iter().map(|l| l.depth()).sum();
        Word {
            alphabet,
            letters,
            weight,
            depth,
        }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self::from_letters(alphabet, Letters::new())
    }

    /// `b_{s_1} ... b_{s_l}`.
    pub fn b(indices: &[u32]) -> Self {
        Self::from_letters(Alphabet::B, indices.iter().map(|&s| Letter::B(s)).collect())
    }

    /// # Panics
    /// If an index is not 0 or 1.
    pub fn x(indices: &[u8]) -> Self {
        Self::new(Alphabet::X, indices.iter().map(|&i| Letter::X(i))).expect("x index must be 0 or 1")
    }

    /// # Panics
    /// If an index is 0.
    pub fn y(indices: &[u32]) -> Self {
        Self::new(Alphabet::Y, indices.iter().map(|&k| Letter::Y(k))).expect("y index must be >= 1")
    }

    /// `D_{k_1,m_1} ... D_{k_d,m_d}`.
    ///
    /// # Panics
    /// If some `k_i` is 0.
    pub fn d(pairs: &[(u32, u32)]) -> Self {
        Self::new(Alphabet::Dbi, pairs.iter().map(|&(k, m)| Letter::D(k, m)))
            .expect("D(k,m) requires k >= 1")
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.alphabet, other.alphabet);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            alphabet: self.alphabet,
            letters,
            weight: self.weight + other.weight,
            depth: self.depth + other.depth,
        }
    }

    pub fn prepend(&self, letter: Letter) -> Word {
        let mut letters = Letters::with_capacity(self.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        Word {
            alphabet: self.alphabet,
            letters,
            weight: self.weight + letter.weight(),
            depth: self.depth + letter.depth(),
        }
    }

    pub fn append(&self, letter: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word {
            alphabet: self.alphabet,
            letters,
            weight: self.weight + letter.weight(),
            depth: self.depth + letter.depth(),
        }
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word {
            letters,
            ..self.clone()
        }
    }

    /// The subword `letters[range]`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Self::from_letters(self.alphabet, self.letters[range].iter().copied().collect())
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// True for `b`-words whose last letter is `b_0`.
    pub fn ends_in_b0(&self) -> bool {
        self.last() == Some(Letter::B(0))
    }

    /// Splits a `b`-word as `b0^{m_1} b_{k_1} ... b0^{m_d} b_{k_d} b0^{m_{d+1}}`,
    /// returning the blocks `(m_s, k_s)` and the trailing exponent `m_{d+1}`.
    pub fn b_blocks(&self) -> (Vec<(u32, u32)>, u32) {
        debug_assert_eq!(self.alphabet, Alphabet::B);
        let mut blocks = Vec::with_capacity(self.depth as usize);
        let mut zeros = 0;
        for l in &self.letters {
            match *l {
                Letter::B(0) => zeros += 1,
                Letter::B(k) => {
                    blocks.push((zeros, k));
                    zeros = 0;
                }
                _ => unreachable!("b_blocks on a non-B word"),
            }
        }
        (blocks, zeros)
    }

    /// Inverse of [`Word::b_blocks`].
    pub fn from_b_blocks(blocks: &[(u32, u32)], trailing: u32) -> Word {
        let mut letters = Letters::new();
        for &(m, k) in blocks {
            debug_assert!(k >= 1);
            letters.extend(std::iter::repeat_n(Letter::B(0), m as usize));
            letters.push(Letter::B(k));
        }
        letters.extend(std::iter::repeat_n(Letter::B(0), trailing as usize));
        Self::from_letters(Alphabet::B, letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then(self.depth.cmp(&other.depth))
            .then_with(|| self.letters.cmp(&other.letters))
            .then(self.alphabet.cmp(&other.alphabet))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Letters separated by spaces, runs compressed as `letter^n`; the empty word
/// prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{l}^{run}")?;
            } else {
                write!(f, "{l}")?;
            }
            i += run;
        }
        Ok(())
    }
}
