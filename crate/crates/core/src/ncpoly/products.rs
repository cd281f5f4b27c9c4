use std::collections::HashMap;

use num_traits::Zero;

use super::poly::NcPoly;
use super::word::{Alphabet, Letter, Letters, Word};
use crate::error::{expect_alphabet, Result};
use crate::rational::{q_i128, Q};

pub fn wt_dep(w: &Word) -> (u32, u32) {
    (w.weight(), w.depth())
}

pub fn coeff(p: &NcPoly, w: &Word) -> Result<Q> {
    expect_alphabet(p.alphabet(), w.alphabet())?;
    Ok(p.coeff_of(w))
}

pub fn concat(p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(p.alphabet(), q.alphabet())?;
    Ok(p.mul(q))
}

pub fn shuffle(p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(p.alphabet(), q.alphabet())?;
    Ok(bilinear(p, q, word_shuffle))
}

/// The balanced quasi-shuffle product `*_b` on `Q<B>`.
pub fn balanced_quasi_shuffle(p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::B, p.alphabet())?;
    expect_alphabet(Alphabet::B, q.alphabet())?;
    Ok(bilinear(p, q, word_quasi_shuffle))
}

/// Projection onto the component of maximal depth.
pub fn gr_d(p: &NcPoly) -> NcPoly {
    match p.max_depth() {
        Some(d) => p.depth_component(d),
        None => p.clone(),
    }
}

pub fn word_shuffle(u: &Word, v: &Word) -> NcPoly {
    assert_eq!(u.alphabet(), v.alphabet(), "shuffle of words over different alphabets");
    to_poly(u.alphabet(), product_table(u.letters(), v.letters(), |_, _| None))
}

pub fn word_quasi_shuffle(u: &Word, v: &Word) -> NcPoly {
    assert_eq!(u.alphabet(), Alphabet::B, "quasi-shuffle needs b-words");
    assert_eq!(v.alphabet(), Alphabet::B, "quasi-shuffle needs b-words");
    let merge = |a: Letter, b: Letter| match (a, b) {
        (Letter::B(i), Letter::B(j)) if i > 0 && j > 0 => Some(Letter::B(i + j)),
        _ => None,
    };
    to_poly(Alphabet::B, product_table(u.letters(), v.letters(), merge))
}

fn bilinear(p: &NcPoly, q: &NcPoly, f: fn(&Word, &Word) -> NcPoly) -> NcPoly {
    let mut out = NcPoly::zero(p.alphabet());
    for (u, a) in p.iter() {
        for (v, b) in q.iter() {
            out.add_scaled(&f(u, v), &(a * b));
        }
    }
    out
}

type Counts = HashMap<Letters, i128>;

fn prepend_all(letter: Letter, src: &Counts, dst: &mut Counts) {
    for (w, c) in src {
        let mut nw = Letters::with_capacity(w.len() + 1);
        nw.push(letter);
        nw.extend_from_slice(w);
        *dst.entry(nw).or_insert(0) += c;
    }
}

/// Suffix table: `table[i][j]` is the product of `u[i..]` and `v[j..]` under
/// the recursion `au * bv = a(u * bv) + b(au * v) + [a.b](u * v)`, where
/// `merge` gives the optional letter `a.b`.
fn product_table<F>(u: &[Letter], v: &[Letter], merge: F) -> Counts
where
    F: Fn(Letter, Letter) -> Option<Letter>,
{
    let (n, m) = (u.len(), v.len());
    let mut table: Vec<Vec<Counts>> = vec![vec![Counts::new(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            let mut cell = Counts::new();
            if i == n {
                cell.insert(v[j..].iter().copied().collect(), 1);
            } else if j == m {
                cell.insert(u[i..].iter().copied().collect(), 1);
            } else {
                prepend_all(u[i], &table[i + 1][j], &mut cell);
                prepend_all(v[j], &table[i][j + 1], &mut cell);
                if let Some(c) = merge(u[i], v[j]) {
                    prepend_all(c, &table[i + 1][j + 1], &mut cell);
                }
            }
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

fn to_poly(alphabet: Alphabet, counts: Counts) -> NcPoly {
    let mut out = NcPoly::zero(alphabet);
    for (letters, c) in counts {
        if !c.is_zero() {
            out.add_term(Word::from_letters(alphabet, letters), q_i128(c));
        }
    }
    out
}
