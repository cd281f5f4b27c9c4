use std::collections::HashMap;

use crate::ncpoly::{Alphabet, Letter, NcPoly, Word};

/// The finitely many letters that can occur in a word of weight `k` and depth `d`.
fn letters_for(alphabet: Alphabet, k: u32, d: u32) -> Vec<Letter> {
    let max_single = k.saturating_sub(d.saturating_sub(1));
    match alphabet {
        Alphabet::B => std::iter::once(Letter::B(0))
            .chain((1..=max_single).map(Letter::B))
            .collect(),
        Alphabet::X => vec![Letter::X(0), Letter::X(1)],
        Alphabet::Y => (1..=max_single).map(Letter::Y).collect(),
        Alphabet::Dbi => {
            let mut out = Vec::new();
            for a in 1..=max_single {
                for m in 0..=max_single - a {
                    out.push(Letter::D(a, m));
                }
            }
            out
        }
    }
}

/// All words of weight `k` and depth `d`, in lexicographic order.
pub fn words(alphabet: Alphabet, k: u32, d: u32) -> Vec<Word> {
    let letters = letters_for(alphabet, k, d);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        letters: &[Letter],
        alphabet: Alphabet,
        k: u32,
        d: u32,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if k == 0 && d == 0 {
            out.push(Word::from_letters(alphabet, cur.iter().copied().collect()));
            return;
        }
        for &l in letters {
            let (w, dp) = (l.weight(), l.depth());
            if w > k || dp > d || k - w < d - dp {
                continue;
            }
            cur.push(l);
            go(letters, alphabet, k - w, d - dp, cur, out);
            cur.pop();
        }
    }
    go(&letters, alphabet, k, d, &mut cur, &mut out);
    out
}

/// `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[Letter]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Lyndon words of weight `k` and depth `d`, in lexicographic order.
pub fn lyndon_words(alphabet: Alphabet, k: u32, d: u32) -> Vec<Word> {
    words(alphabet, k, d)
        .into_iter()
        .filter(|w| is_lyndon(w.letters()))
        .collect()
}

/// Standard bracketing: `P(a) = a`, `P(uv) = [P(u), P(v)]` where `v` is the
/// longest proper suffix of `uv` that is a Lyndon word.
pub fn lyndon_bracket(w: &Word, cache: &mut HashMap<Word, NcPoly>) -> NcPoly {
    if let Some(p) = cache.get(w) {
        return p.clone();
    }
    let n = w.len();
    let p = if n <= 1 {
        NcPoly::from_word(w.clone())
    } else {
        let split = (1..n)
            .find(|&i| is_lyndon(&w.letters()[i..]))
            .expect("a single letter is a Lyndon suffix");
        let u = lyndon_bracket(&w.slice(0..split), cache);
        let v = lyndon_bracket(&w.slice(split..n), cache);
        u.commutator(&v)
    };
    cache.insert(w.clone(), p.clone());
    p
}

/// Bracketed Lyndon words spanning the `(k, d)` component of the free Lie
/// algebra over `alphabet`.
pub fn lyndon_basis(alphabet: Alphabet, k: u32, d: u32) -> Vec<NcPoly> {
    let mut cache = HashMap::new();
    lyndon_words(alphabet, k, d)
        .iter()
        .map(|w| lyndon_bracket(w, &mut cache))
        .collect()
}
