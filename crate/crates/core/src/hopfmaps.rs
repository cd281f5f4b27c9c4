//! Primitivity, the antipodes and the map family `tau`, `pi0`, `sec`,
//! `partial0`, `rho`, `S0`, `tau_dbi`, together with the conversion between
//! the `b` alphabet and the `D` alphabet.
//!
//! Maps that are only defined on `Q<B>^0` (polynomials none of whose words end
//! in `b0`) return [`Error::EndsInB0`] instead of projecting silently.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::error::{expect_alphabet, Error, Result};
use crate::ncpoly::{word_shuffle, Alphabet, Letter, NcPoly, Word};
use crate::rational::{binomial, q, q_i128, sign, Q};

/// Two nonempty words `u`, `v` with `(p | u ⧢ v) = pairing != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleWitness {
    pub left: Word,
    pub right: Word,
    pub pairing: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivityReport {
    pub is_primitive: bool,
    pub witness: Option<ShuffleWitness>,
}

/// `(p | u ⧢ v)`.
pub fn shuffle_pairing(p: &NcPoly, u: &Word, v: &Word) -> Q {
    let mut acc = Q::zero();
    for (w, c) in word_shuffle(u, v).iter() {
        if let Some(pc) = p.get(w) {
            acc += pc * c;
        }
    }
    acc
}

/// Left-normed bracket `[...[[a1, a2], a3], ..., an]` of the letters of `w`.
pub fn dynkin_bracket(w: &Word) -> NcPoly {
    let mut acc: HashMap<Vec<Letter>, i128> = HashMap::new();
    let letters = w.letters();
    if let Some(&first) = letters.first() {
        acc.insert(vec![first], 1);
    }
    for &a in letters.iter().skip(1) {
        let mut next: HashMap<Vec<Letter>, i128> = HashMap::with_capacity(acc.len() * 2);
        for (u, c) in acc {
            let mut right = u.clone();
            right.push(a);
            *next.entry(right).or_insert(0) += c;
            let mut left = Vec::with_capacity(u.len() + 1);
            left.push(a);
            left.extend_from_slice(&u);
            *next.entry(left).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    let mut out = NcPoly::zero(w.alphabet());
    for (ls, c) in acc {
        out.add_term(Word::from_letters(w.alphabet(), ls.into_iter().collect()), q_i128(c));
    }
    out
}

/// Decides whether `(p | u ⧢ v) = 0` for all nonempty `u`, `v`, i.e. whether
/// the non-constant part of `p` is a Lie polynomial.
///
/// The decision uses the Dynkin operator: a polynomial without constant term
/// is Lie iff `r(p_n) = n p_n` for every length-homogeneous part `p_n`. On
/// failure, a witness is found by splitting support words into complementary
/// subsequences.
pub fn is_primitive(p: &NcPoly) -> PrimitivityReport {
    if dynkin_defect(p).is_zero() {
        return PrimitivityReport {
            is_primitive: true,
            witness: None,
        };
    }
    let witness = find_witness(p);
    debug_assert!(witness.is_some(), "Dynkin test failed but no shuffle witness exists");
    PrimitivityReport {
        is_primitive: false,
        witness,
    }
}

/// `sum_w c_w (r(w) - len(w) w)` over the nonempty words of `p`.
pub fn dynkin_defect(p: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero(p.alphabet());
    for (w, c) in p.iter() {
        if w.is_empty() {
            continue;
        }
        out.add_scaled(&dynkin_bracket(w), c);
        out.add_term(w.clone(), -(c * q(w.len() as i64)));
    }
    out
}

fn find_witness(p: &NcPoly) -> Option<ShuffleWitness> {
    let mut seen = BTreeSet::new();
    for w in p.words() {
        let n = w.len();
        if n < 2 {
            continue;
        }
        let letters = w.letters();
        for mask in 1u64..(1u64 << n) - 1 {
            let (mut u, mut v) = (Vec::new(), Vec::new());
            for (i, &l) in letters.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    u.push(l);
                } else {
                    v.push(l);
                }
            }
            let u = Word::from_letters(w.alphabet(), u.into_iter().collect());
            let v = Word::from_letters(w.alphabet(), v.into_iter().collect());
            let key = if u <= v { (u, v) } else { (v, u) };
            if !seen.insert(key.clone()) {
                continue;
            }
            let pairing = shuffle_pairing(p, &key.0, &key.1);
            if !pairing.is_zero() {
                return Some(ShuffleWitness {
                    left: key.0,
                    right: key.1,
                    pairing,
                });
            }
        }
    }
    None
}

/// `S(a_1 ... a_l) = (-1)^l a_l ... a_1`.
pub fn antipode_s(p: &NcPoly) -> NcPoly {
    p.map_linear(p.alphabet(), |w| {
        NcPoly::monomial(q(sign(w.len() as i64)), w.reversed())
    })
}

/// Kills every word ending in `b0`.
pub fn pi0(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::B, p.alphabet())?;
    Ok(p.filter(|w| !w.ends_in_b0()))
}

fn check_b0_free(p: &NcPoly) -> Result<()> {
    expect_alphabet(Alphabet::B, p.alphabet())?;
    match p.words().find(|w| w.ends_in_b0()) {
        Some(w) => Err(Error::EndsInB0(w.to_string())),
        None => Ok(()),
    }
}

/// `b0^{m_1} b_{k_1} ... b0^{m_d} b_{k_d} -> b0^{k_d - 1} b_{m_d + 1} ... b0^{k_1 - 1} b_{m_1 + 1}`.
pub fn tau_word(w: &Word) -> Result<Word> {
    if w.ends_in_b0() {
        return Err(Error::EndsInB0(w.to_string()));
    }
    let (blocks, _) = w.b_blocks();
    let image: Vec<(u32, u32)> = blocks.iter().rev().map(|&(m, k)| (k - 1, m + 1)).collect();
    Ok(Word::from_b_blocks(&image, 0))
}

pub fn tau(p: &NcPoly) -> Result<NcPoly> {
    check_b0_free(p)?;
    p.try_map_linear(Alphabet::B, |w| Ok(NcPoly::from_word(tau_word(w)?)))
}

/// `ad(z)^n(p)` for the zero letter `z` (`b0` or `x0`) of the alphabet of `p`.
pub fn ad0_pow(p: &NcPoly, n: u32) -> Result<NcPoly> {
    let zero = match p.alphabet() {
        Alphabet::B => Letter::B(0),
        Alphabet::X => Letter::X(0),
        other => {
            return Err(Error::InvalidLetter(format!(
                "ad0 needs the B or X alphabet, got {other}"
            )))
        }
    };
    let z = NcPoly::letter(zero);
    let mut out = p.clone();
    for _ in 0..n {
        out = z.commutator(&out);
    }
    Ok(out)
}

/// Nested adjoint expansion of one word of `Q<B>^0`.
pub fn sec_word(w: &Word) -> Result<NcPoly> {
    if w.ends_in_b0() {
        return Err(Error::EndsInB0(w.to_string()));
    }
    let (blocks, _) = w.b_blocks();
    let mut acc = NcPoly::one(Alphabet::B);
    for &(m, k) in blocks.iter().rev() {
        acc = NcPoly::letter(Letter::B(k)).mul(&acc);
        acc = ad0_pow(&acc, m)?;
    }
    Ok(acc)
}

pub fn sec(p: &NcPoly) -> Result<NcPoly> {
    check_b0_free(p)?;
    p.try_map_linear(Alphabet::B, sec_word)
}

/// The concatenation derivation with `b0 -> 1` and `b_i -> 0` for `i >= 1`.
pub fn partial0(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::B, p.alphabet())?;
    Ok(p.map_linear(Alphabet::B, |w| {
        let mut out = NcPoly::zero(Alphabet::B);
        let letters = w.letters();
        for (i, &l) in letters.iter().enumerate() {
            if l == Letter::B(0) {
                let rest = letters[..i].iter().chain(&letters[i + 1..]).copied();
                out.add_term(Word::from_letters(Alphabet::B, rest.collect()), q(1));
            }
        }
        out
    }))
}

/// Calls `f` for every composition `(c_1, ..., c_r)` of `total` with
/// `lo[s] <= c_s <= hi[s]`.
pub(crate) fn for_each_bounded_composition(
    total: u32,
    lo: &[u32],
    hi: &[u32],
    f: &mut impl FnMut(&[u32]),
) {
    fn go(
        s: usize,
        remaining: u32,
        lo: &[u32],
        hi: &[u32],
        cur: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32]),
    ) {
        if s == lo.len() {
            if remaining == 0 {
                f(cur);
            }
            return;
        }
        let min_rest: u32 = lo[s + 1..].iter().sum();
        let max_rest: u32 = hi[s + 1..].iter().fold(0u32, |a, &b| a.saturating_add(b));
        if remaining < min_rest + lo[s] {
            return;
        }
        let top = hi[s].min(remaining - min_rest);
        let bottom = lo[s].max(remaining.saturating_sub(max_rest));
        for c in bottom..=top {
            cur.push(c);
            go(s + 1, remaining - c, lo, hi, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(lo.len());
    go(0, total, lo, hi, &mut cur, f);
}

pub fn rho_word(w: &Word) -> Result<NcPoly> {
    if w.ends_in_b0() {
        return Err(Error::EndsInB0(w.to_string()));
    }
    let (blocks, _) = w.b_blocks();
    let d = blocks.len();
    if d == 0 {
        return Ok(NcPoly::from_word(w.clone()));
    }
    let total_k: u32 = blocks.iter().map(|b| b.1).sum();
    let total_m: u32 = blocks.iter().map(|b| b.0).sum();
    let mut out = NcPoly::zero(Alphabet::B);

    let mut l_lo = vec![1; d];
    let mut l_hi: Vec<u32> = blocks.iter().map(|b| b.1).collect();
    l_hi[d - 1] = u32::MAX;
    l_lo[d - 1] = 1;
    let n_lo = vec![0; d];
    let mut n_hi: Vec<u32> = blocks.iter().map(|b| b.0).collect();
    n_hi[d - 1] = u32::MAX;

    for_each_bounded_composition(total_k, &l_lo, &l_hi, &mut |ls| {
        for_each_bounded_composition(total_m, &n_lo, &n_hi, &mut |ns| {
            let mut c: i128 = sign(ls[d - 1] as i64 + ns[d - 1] as i64 - 1) as i128;
            for s in 0..d - 1 {
                let (m, k) = blocks[s];
                c *= binomial(k as i64 - 1, ls[s] as i64 - 1) * binomial(m as i64, ns[s] as i64);
            }
            if c == 0 {
                return;
            }
            let mut image = Vec::with_capacity(d);
            image.push((ns[d - 1], ls[d - 1]));
            image.extend((0..d - 1).map(|s| (ns[s], ls[s])));
            out.add_term(Word::from_b_blocks(&image, 0), q_i128(c));
        });
    });
    Ok(out)
}

pub fn rho(p: &NcPoly) -> Result<NcPoly> {
    check_b0_free(p)?;
    p.try_map_linear(Alphabet::B, rho_word)
}

/// `S0 = pi0 ∘ S ∘ sec` on `Q<B>^0`.
pub fn s0(p: &NcPoly) -> Result<NcPoly> {
    pi0(&antipode_s(&sec(p)?))
}

/// Expansion of `D_{k,m} = ad(b0)^m(b_k)` in the `b` alphabet.
pub fn dbi_letter_in_b(k: u32, m: u32) -> NcPoly {
    let mut out = NcPoly::zero(Alphabet::B);
    for n in 0..=m {
        let c = sign((m - n) as i64) as i128 * binomial(m as i64, n as i64);
        out.add_term(Word::from_b_blocks(&[(n, k)], m - n), q_i128(c));
    }
    out
}

pub fn from_dbi_word(w: &Word) -> NcPoly {
    let mut acc = NcPoly::one(Alphabet::B);
    for &l in w.letters() {
        let Letter::D(k, m) = l else {
            unreachable!("from_dbi on a non-D word")
        };
        acc = acc.mul(&dbi_letter_in_b(k, m));
    }
    acc
}

pub fn from_dbi(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::Dbi, p.alphabet())?;
    let mut cache = HashMap::new();
    Ok(p.map_linear_cached(Alphabet::B, &mut cache, from_dbi_word))
}

/// `ad(b0)` transported to `Q<Dbi>`: the derivation `D_{k,m} -> D_{k,m+1}`.
fn ad_dbi(p: &NcPoly) -> NcPoly {
    p.map_linear(Alphabet::Dbi, |w| {
        let mut out = NcPoly::zero(Alphabet::Dbi);
        let letters = w.letters();
        for i in 0..letters.len() {
            let mut ls: Vec<Letter> = letters.to_vec();
            if let Letter::D(k, m) = ls[i] {
                ls[i] = Letter::D(k, m + 1);
            }
            out.add_term(Word::from_letters(Alphabet::Dbi, ls.into_iter().collect()), q(1));
        }
        out
    })
}

/// `sec(w)` for a word of `Q<B>^0`, written in the `D` alphabet.
pub fn sec_dbi_word(w: &Word) -> Result<NcPoly> {
    if w.ends_in_b0() {
        return Err(Error::EndsInB0(w.to_string()));
    }
    let (blocks, _) = w.b_blocks();
    let mut acc = NcPoly::one(Alphabet::Dbi);
    for &(m, k) in blocks.iter().rev() {
        // ad^m(b_k X) = sum_j C(m, j) ad^j(b_k) ad^{m-j}(X)
        let mut powers = Vec::with_capacity(m as usize + 1);
        powers.push(acc);
        for _ in 0..m {
            let next = ad_dbi(powers.last().expect("nonempty"));
            powers.push(next);
        }
        let mut next = NcPoly::zero(Alphabet::Dbi);
        for j in 0..=m {
            let letter = NcPoly::letter(Letter::D(k, j));
            let term = letter.mul(&powers[(m - j) as usize]);
            next.add_scaled(&term, &q_i128(binomial(m as i64, j as i64)));
        }
        acc = next;
    }
    Ok(acc)
}

/// Inverse of [`from_dbi`] on its image.
pub fn to_dbi(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::B, p.alphabet())?;
    if !partial0(p)?.is_zero() {
        return Err(Error::NotInDbi(format!("partial0 does not vanish on {p}")));
    }
    let projected = pi0(p)?;
    let out = projected.try_map_linear(Alphabet::Dbi, sec_dbi_word)?;
    if from_dbi(&out)? != *p {
        return Err(Error::NotInDbi(format!("{p} is not a polynomial in the D_(k,m)")));
    }
    Ok(out)
}

/// `tau_Dbi = sec ∘ tau ∘ pi0` on one `D`-word.
pub fn tau_dbi_word(w: &Word) -> NcPoly {
    let projected = pi0(&from_dbi_word(w)).expect("B polynomial");
    let swapped = tau(&projected).expect("pi0 output is b0-free");
    swapped
        .try_map_linear(Alphabet::Dbi, sec_dbi_word)
        .expect("tau output is b0-free")
}

pub fn tau_dbi(p: &NcPoly) -> Result<NcPoly> {
    expect_alphabet(Alphabet::Dbi, p.alphabet())?;
    let mut cache = HashMap::new();
    Ok(p.map_linear_cached(Alphabet::Dbi, &mut cache, tau_dbi_word))
}
