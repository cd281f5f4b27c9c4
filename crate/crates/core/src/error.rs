use thiserror::Error;

use crate::ncpoly::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },

    #[error("invalid letter: {0}")]
    InvalidLetter(String),

    /// A map defined only on words that do not end in `b0` received one that does.
    #[error("word `{0}` ends in b0 (apply pi0 first)")]
    EndsInB0(String),

    #[error("not in Q<Dbi>: {0}")]
    NotInDbi(String),

    #[error(
        "cell (weight {weight}, depth {depth}) exceeds the resource ceiling \
         (max weight {max_weight}, max depth {max_depth})"
    )]
    ResourceBound {
        weight: u32,
        depth: u32,
        max_weight: u32,
        max_depth: u32,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn expect_alphabet(expected: Alphabet, found: Alphabet) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch { expected, found })
    }
}
