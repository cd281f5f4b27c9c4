//! Derivations and Lie brackets.
//!
//! - `d^w_A` and `{f, g}_A = d^f_A(g) - d^g_A(f) + [f, g]` on `Q<B>` (and on
//!   `Q<Dbi>` through the `b` alphabet),
//! - the one-sided derivations `d^{r,w}`, `d^{l,w}` with `d^w = d^{r,w} - d^{l,w}`,
//! - the zero-projected variants on `Q<B>^0`,
//! - the Ihara bracket on `Q<X>`,
//! - the derivation `delta(D_{k,m}) = D_{k+1,m+1}` on `Q<Dbi>`.

pub mod identities;

use std::collections::HashMap;

use crate::error::{expect_alphabet, Result};
use crate::hopfmaps::{for_each_bounded_composition, from_dbi, pi0, sec, to_dbi};
use crate::ncpoly::{Alphabet, Letter, NcPoly, Word};
use crate::rational::{binomial, q, q_i128, sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `b_i -> b_{i+l} W`
    Right,
    /// `b_i -> W b_{i+l}`
    Left,
    /// `b_i -> [b_{i+l}, W]`
    Both,
}

/// The terms `(-1)^l prod C(k_s - 1, l_s - 1) (l, W)` of `d^w(b_i)` for a
/// single word `w`, independent of `i`.
fn derivation_terms(w: &Word) -> Vec<(i128, u32, Word)> {
    let (blocks, trailing) = w.b_blocks();
    let d = blocks.len();
    let total_k: u32 = blocks.iter().map(|b| b.1).sum();
    let mut lo = vec![1u32; d];
    let mut hi: Vec<u32> = blocks.iter().map(|b| b.1).collect();
    lo.push(0);
    hi.push(total_k);
    let mut out = Vec::new();
    for_each_bounded_composition(total_k, &lo, &hi, &mut |ls| {
        let l = ls[d];
        let mut c = sign(l as i64) as i128;
        for s in 0..d {
            c *= binomial(blocks[s].1 as i64 - 1, ls[s] as i64 - 1);
        }
        if c != 0 {
            let image: Vec<(u32, u32)> = (0..d).map(|s| (blocks[s].0, ls[s])).collect();
            out.push((c, l, Word::from_b_blocks(&image, trailing)));
        }
    });
    out
}

/// `d^{side, w}_A(b_i)` for a single word `w`.
fn generator_image(terms: &[(i128, u32, Word)], side: Side, i: u32) -> NcPoly {
    let mut out = NcPoly::zero(Alphabet::B);
    for (c, l, w) in terms {
        let head = Word::b(&[i + l]);
        let c = q_i128(*c);
        if matches!(side, Side::Right | Side::Both) {
            out.add_term(head.concat(w), c.clone());
        }
        match side {
            Side::Left => out.add_term(w.concat(&head), c),
            Side::Both => out.add_term(w.concat(&head), -c),
            Side::Right => {}
        }
    }
    out
}

/// Applies the concatenation derivation determined by `images` (`b0 -> 0`)
/// to `target`.
fn apply_derivation(target: &NcPoly, images: &mut impl FnMut(u32) -> NcPoly) -> NcPoly {
    let mut cache: HashMap<u32, NcPoly> = HashMap::new();
    let mut out = NcPoly::zero(Alphabet::B);
    for (t, c) in target.iter() {
        let letters = t.letters();
        for (pos, &letter) in letters.iter().enumerate() {
            let Letter::B(i) = letter else { unreachable!() };
            if i == 0 {
                continue;
            }
            let img = cache.entry(i).or_insert_with(|| images(i));
            let prefix = t.slice(0..pos);
            let suffix = t.slice(pos + 1..letters.len());
            for (mid, a) in img.iter() {
                out.add_term(prefix.concat(mid).concat(&suffix), a * c);
            }
        }
    }
    out
}

/// `d^{side, w}_A(target)`, bilinear in `w` and `target`.
pub fn der_a(w: &NcPoly, side: Side, target: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::B, w.alphabet())?;
    expect_alphabet(Alphabet::B, target.alphabet())?;
    let mut out = NcPoly::zero(Alphabet::B);
    for (word, c) in w.iter() {
        let terms = derivation_terms(word);
        let image = apply_derivation(target, &mut |i| generator_image(&terms, side, i));
        out.add_scaled(&image, c);
    }
    Ok(out)
}

/// `{f, g}_A`. Both arguments in `Q<B>`, or both in `Q<Dbi>` (the result is
/// then in `Q<Dbi>` as well).
pub fn bracket_a(f: &NcPoly, g: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(f.alphabet(), g.alphabet())?;
    if f.alphabet() == Alphabet::Dbi {
        let fb = from_dbi(f)?;
        let gb = from_dbi(g)?;
        return to_dbi(&bracket_a(&fb, &gb)?);
    }
    expect_alphabet(Alphabet::B, f.alphabet())?;
    let mut out = der_a(f, Side::Both, g)?;
    out -= &der_a(g, Side::Both, f)?;
    out += &f.commutator(g);
    Ok(out)
}

/// `d^{side,0}_w(v) = pi0(d^{side}_{sec w}(sec v))` on `Q<B>^0`.
pub fn zero_projected_der(w: &NcPoly, side: Side, v: &NcPoly) -> Result<NcPoly> {
    pi0(&der_a(&sec(w)?, side, &sec(v)?)?)
}

/// `v ._0 w = pi0(sec(v) sec(w))`.
pub fn mul0(v: &NcPoly, w: &NcPoly) -> Result<NcPoly> {
    pi0(&sec(v)?.mul(&sec(w)?))
}

/// `{v, w}_{A,0} = pi0({sec v, sec w}_A)`.
pub fn bracket_a0(v: &NcPoly, w: &NcPoly) -> Result<NcPoly> {
    pi0(&bracket_a(&sec(v)?, &sec(w)?)?)
}

/// The Ihara derivation `d_w`: `x0 -> 0`, `x1 -> [x1, w]`.
pub fn ihara_der(w: &NcPoly, target: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::X, w.alphabet())?;
    expect_alphabet(Alphabet::X, target.alphabet())?;
    let x1 = NcPoly::letter(Letter::X(1));
    let image = x1.commutator(w);
    let mut out = NcPoly::zero(Alphabet::X);
    for (t, c) in target.iter() {
        let letters = t.letters();
        for (pos, &letter) in letters.iter().enumerate() {
            if letter != Letter::X(1) {
                continue;
            }
            let prefix = t.slice(0..pos);
            let suffix = t.slice(pos + 1..letters.len());
            for (mid, a) in image.iter() {
                out.add_term(prefix.concat(mid).concat(&suffix), a * c);
            }
        }
    }
    Ok(out)
}

/// `{f, g} = d_f(g) - d_g(f) + [f, g]` on `Q<X>`.
pub fn ihara_bracket(f: &NcPoly, g: &NcPoly) -> Result<NcPoly> {
    let mut out = ihara_der(f, g)?;
    out -= &ihara_der(g, f)?;
    out += &f.commutator(g);
    Ok(out)
}

/// The derivation `D_{k,m} -> D_{k+1,m+1}`.
pub fn delta(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::Dbi, p.alphabet())?;
    Ok(p.map_linear(Alphabet::Dbi, |w| {
        let mut out = NcPoly::zero(Alphabet::Dbi);
        for i in 0..w.len() {
            let mut ls = w.letters().to_vec();
            if let Letter::D(k, m) = ls[i] {
                ls[i] = Letter::D(k + 1, m + 1);
            }
            out.add_term(Word::from_letters(Alphabet::Dbi, ls.into_iter().collect()), q(1));
        }
        out
    }))
}
