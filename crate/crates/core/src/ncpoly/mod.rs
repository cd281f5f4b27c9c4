//! Words over tagged alphabets, sparse non-commutative polynomials with exact
//! rational coefficients, and the three products on them.
//!
//! Every alphabet carries a bigrading by weight and depth:
//!
//! | letter      | weight            | depth        |
//! |-------------|-------------------|--------------|
//! | `b_s`       | `s + [s = 0]`     | `[s != 0]`   |
//! | `x_i`       | 1                 | `[i = 1]`    |
//! | `y_k`       | `k`               | 1            |
//! | `D_{k,m}`   | `k + m`           | 1            |
//!
//! A polynomial never stores a zero coefficient, so structural equality is
//! mathematical equality.

mod poly;
mod products;
mod word;

pub use poly::NcPoly;
pub use products::{
    balanced_quasi_shuffle, coeff, concat, gr_d, shuffle, word_quasi_shuffle, word_shuffle,
    wt_dep,
};
pub use word::{Alphabet, Letter, Word};
