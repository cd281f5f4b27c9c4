//! The maps between `Q<X>`, `Q<Y>` and `Q<B>`: the projection `pi_Y`, the
//! relabelings `theta_X`, `theta_Y`, and the embedding
//! `theta = theta_X + theta_Y ∘ pi_Y` of `ls` into `lq`.

use crate::error::{expect_alphabet, Result};
use crate::ncpoly::{Alphabet, Letter, NcPoly, Word};
use crate::rational::q;

/// `x0^{k_1-1} x1 ... x0^{k_d-1} x1 x0^n -> y_{k_1} ... y_{k_d}` if `n = 0`, else 0.
pub fn pi_y_word(w: &Word) -> Option<Word> {
    let mut out = Vec::with_capacity(w.depth() as usize);
    let mut run = 0u32;
    for &l in w.letters() {
        match l {
            Letter::X(0) => run += 1,
            Letter::X(_) => {
                out.push(Letter::Y(run + 1));
                run = 0;
            }
            _ => unreachable!("pi_y on a non-X word"),
        }
    }
    (run == 0).then(|| Word::from_letters(Alphabet::Y, out.into_iter().collect()))
}

pub fn pi_y(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::X, p.alphabet())?;
    Ok(p.map_linear(Alphabet::Y, |w| match pi_y_word(w) {
        Some(y) => NcPoly::from_word(y),
        None => NcPoly::zero(Alphabet::Y),
    }))
}

/// `x_{s_1} ... x_{s_k} -> b_{s_1} ... b_{s_k}`.
pub fn theta_x(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::X, p.alphabet())?;
    Ok(p.map_linear(Alphabet::B, |w| {
        let letters = w.letters().iter().map(|&l| match l {
            Letter::X(i) => Letter::B(u32::from(i)),
            _ => unreachable!(),
        });
        NcPoly::from_word(Word::from_letters(Alphabet::B, letters.collect()))
    }))
}

/// `y_{k_1} ... y_{k_d} -> b_{k_d} ... b_{k_1}`.
pub fn theta_y(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::Y, p.alphabet())?;
    Ok(p.map_linear(Alphabet::B, |w| {
        let letters = w.letters().iter().rev().map(|&l| match l {
            Letter::Y(k) => Letter::B(k),
            _ => unreachable!(),
        });
        NcPoly::monomial(q(1), Word::from_letters(Alphabet::B, letters.collect()))
    }))
}

/// `theta(phi) = theta_X(phi) + theta_Y(pi_Y(phi))`.
pub fn theta(p: &NcPoly) -> Result<NcPoly> {
    Ok(&theta_x(p)? + &theta_y(&pi_y(p)?)?)
}
