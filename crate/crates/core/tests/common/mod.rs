//! Independent oracles and random generators shared by the integration tests.
//!
//! Nothing here calls the library's map implementations; the oracles work
//! from the closed summation formulas directly, on plain letter vectors.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use lq_core::{Alphabet, Letter, NcPoly, Word, Q};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn multinom(parts: &[u32]) -> i64 {
    let mut total = 0i64;
    let mut r = 1i64;
    for &p in parts {
        total += p as i64;
        r *= binom(total, p as i64);
    }
    r
}

pub fn sgn(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn bw(idx: &[u32]) -> Word {
    Word::new(Alphabet::B, idx.iter().map(|&s| Letter::B(s))).unwrap()
}

pub fn b(idx: &[u32]) -> NcPoly {
    NcPoly::from_word(bw(idx))
}

pub fn dw(pairs: &[(u32, u32)]) -> Word {
    Word::new(Alphabet::Dbi, pairs.iter().map(|&(k, m)| Letter::D(k, m))).unwrap()
}

pub fn d(pairs: &[(u32, u32)]) -> NcPoly {
    NcPoly::from_word(dw(pairs))
}

pub fn xw(idx: &[u8]) -> Word {
    Word::new(Alphabet::X, idx.iter().map(|&s| Letter::X(s))).unwrap()
}

pub fn x(idx: &[u8]) -> NcPoly {
    NcPoly::from_word(xw(idx))
}

/// `b0^{m_1} b_{k_1} ... b0^{m_d} b_{k_d} b0^{t}` as `([(m_s, k_s)], t)`.
pub fn blocks_of(w: &Word) -> (Vec<(u32, u32)>, u32) {
    let mut out = Vec::new();
    let mut zeros = 0;
    for &l in w.letters() {
        match l {
            Letter::B(0) => zeros += 1,
            Letter::B(k) => {
                out.push((zeros, k));
                zeros = 0;
            }
            _ => panic!("not a b word"),
        }
    }
    (out, zeros)
}

pub fn push_block(letters: &mut Vec<u32>, zeros: u32, k: u32) {
    letters.extend(std::iter::repeat_n(0, zeros as usize));
    letters.push(k);
}

pub fn zeros(letters: &mut Vec<u32>, n: u32) {
    letters.extend(std::iter::repeat_n(0, n as usize));
}

/// Every tuple `t` with `lo[i] <= t[i] <= hi[i]`.
pub fn boxes(lo: &[u32], hi: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for (&a, &b) in lo.iter().zip(hi) {
        let mut next = Vec::new();
        for t in &out {
            for v in a..=b {
                let mut t = t.clone();
                t.push(v);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Compositions of `total` into `parts` nonnegative parts.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn add(out: &mut NcPoly, letters: &[u32], c: i64) {
    if c != 0 {
        out.add_term(bw(letters), q(c));
    }
}

/// `sec(w) = sum (-1)^n prod C(m_s, n_s) b0^{n_1} b_{k_1} ... b0^{n_d} b_{k_d} b0^n`.
pub fn sec_closed(w: &Word) -> NcPoly {
    let (blocks, trailing) = blocks_of(w);
    assert_eq!(trailing, 0);
    let total_m: u32 = blocks.iter().map(|b| b.0).sum();
    let mut out = NcPoly::zero(Alphabet::B);
    let hi: Vec<u32> = blocks.iter().map(|b| b.0).collect();
    for ns in boxes(&vec![0; blocks.len()], &hi) {
        let n = total_m - ns.iter().sum::<u32>();
        let mut c = sgn(n as i64);
        let mut letters = Vec::new();
        for (s, &(m, k)) in blocks.iter().enumerate() {
            c *= binom(m as i64, ns[s] as i64);
            push_block(&mut letters, ns[s], k);
        }
        zeros(&mut letters, n);
        add(&mut out, &letters, c);
    }
    out
}

/// The closed formula for `S0 = pi0 . S . sec`.
pub fn s0_closed(w: &Word) -> NcPoly {
    let (blocks, trailing) = blocks_of(w);
    assert_eq!(trailing, 0);
    let dd = blocks.len();
    let mut out = NcPoly::zero(Alphabet::B);
    if dd == 0 {
        out.add_term(w.clone(), q(1));
        return out;
    }
    let total_m: u32 = blocks.iter().map(|b| b.0).sum();
    // free indices n_2..n_d
    let hi: Vec<u32> = blocks[1..].iter().map(|b| b.0).collect();
    for rest in boxes(&vec![0; dd - 1], &hi) {
        let used: u32 = rest.iter().sum();
        if used > total_m {
            continue;
        }
        let n1 = total_m - used;
        let mut c = sgn(dd as i64);
        for (j, &ns) in rest.iter().enumerate() {
            let m = blocks[j + 1].0;
            c *= sgn(ns as i64) * binom(m as i64, ns as i64);
        }
        // b0^{n_1} b_{k_d} b0^{n_d} b_{k_{d-1}} ... b0^{n_2} b_{k_1}
        let n = |s: usize| if s == 1 { n1 } else { rest[s - 2] };
        let mut letters = Vec::new();
        push_block(&mut letters, n1, blocks[dd - 1].1);
        for s in (2..=dd).rev() {
            push_block(&mut letters, n(s), blocks[s - 2].1);
        }
        add(&mut out, &letters, c);
    }
    out
}

/// The closed multinomial formula for `tau_dbi` on a single `D` word.
pub fn tau_dbi_closed(w: &Word) -> NcPoly {
    let pairs: Vec<(u32, u32)> = w
        .letters()
        .iter()
        .map(|&l| match l {
            Letter::D(k, m) => (k, m),
            _ => panic!("not a D word"),
        })
        .collect();
    let dd = pairs.len();
    let mut out = NcPoly::zero(Alphabet::Dbi);
    if dd == 0 {
        out.add_term(w.clone(), q(1));
        return out;
    }
    // l^{(s)}: composition of k_s - 1 into s parts
    let l_choices: Vec<Vec<Vec<u32>>> = (1..=dd)
        .map(|s| compositions(pairs[s - 1].0 - 1, s))
        .collect();
    let n_hi: Vec<u32> = pairs[..dd - 1].iter().map(|p| p.1).collect();
    let l_index_hi: Vec<u32> = l_choices.iter().map(|c| c.len() as u32 - 1).collect();
    for ns in boxes(&vec![0; dd - 1], &n_hi) {
        let mut n = ns.clone();
        n.push(pairs[dd - 1].1);
        let mut c_n = 1i64;
        for s in 0..dd {
            let (m, ns) = (pairs[s].1 as i64, n[s] as i64);
            c_n *= binom(m, ns) * sgn(m + ns);
        }
        for pick in boxes(&vec![0; dd], &l_index_hi) {
            let ls: Vec<&Vec<u32>> = (0..dd).map(|s| &l_choices[s][pick[s] as usize]).collect();
            let mut c = c_n;
            for l in &ls {
                c *= multinom(l);
            }
            // positions j = d..1 (1-based)
            let mut letters = Vec::new();
            for j in (1..=dd).rev() {
                let prev_m = if j >= 2 { pairs[j - 2].1 } else { 0 };
                let prev_n = if j >= 2 { n[j - 2] } else { 0 };
                let first = n[j - 1] + prev_m - prev_n + 1;
                let second: u32 = (j..=dd).map(|s| ls[s - 1][j - 1]).sum();
                letters.push(Letter::D(first, second));
            }
            if c != 0 {
                out.add_term(Word::new(Alphabet::Dbi, letters).unwrap(), q(c));
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// The explicit sums for the zero-projected one-sided derivations
/// `d^{r,0}_w(v)` and `d^{l,0}_w(v)` on words of `Q<B>^0`.
pub fn d0_explicit(side: Side, w: &Word, v: &Word) -> NcPoly {
    let (wb, wt) = blocks_of(w);
    let (vb, vt) = blocks_of(v);
    assert!(wt == 0 && vt == 0);
    let dd = wb.len();
    let e = vb.len();
    let total_k: u32 = wb.iter().map(|b| b.1).sum();
    let total_m: u32 = wb.iter().map(|b| b.0).sum();
    let mut out = NcPoly::zero(Alphabet::B);
    let ls_all = boxes(&vec![1; dd], &wb.iter().map(|b| b.1).collect::<Vec<_>>());
    let ns_all = boxes(&vec![0; dd], &wb.iter().map(|b| b.0).collect::<Vec<_>>());
    for i in 0..e {
        for ls in &ls_all {
            let sl: u32 = ls.iter().sum();
            if sl > total_k {
                continue;
            }
            let l = total_k - sl;
            for ns in &ns_all {
                let sn: u32 = ns.iter().sum();
                if sn > total_m {
                    continue;
                }
                let n = total_m - sn;
                if side == Side::Right && i == e - 1 && n != 0 {
                    continue;
                }
                let mut c = sgn((l + n) as i64);
                for s in 0..dd {
                    c *= binom(wb[s].1 as i64 - 1, ls[s] as i64 - 1) * binom(wb[s].0 as i64, ns[s] as i64);
                }
                if c == 0 {
                    continue;
                }
                let mut letters = Vec::new();
                for (j, &(t, s)) in vb.iter().enumerate() {
                    if j != i {
                        push_block(&mut letters, t, s);
                        continue;
                    }
                    zeros(&mut letters, t);
                    if side == Side::Right {
                        letters.push(s + l);
                    }
                    for r in 0..dd {
                        push_block(&mut letters, ns[r], ls[r]);
                    }
                    zeros(&mut letters, n);
                    if side == Side::Left {
                        letters.push(s + l);
                    }
                }
                add(&mut out, &letters, c);
            }
        }
    }
    out
}

pub fn d0_explicit_poly(side: Side, w: &NcPoly, v: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero(Alphabet::B);
    for (ww, c) in w.iter() {
        for (vw, e) in v.iter() {
            out.add_scaled(&d0_explicit(side, ww, vw), &(c * e));
        }
    }
    out
}

fn dbi_pairs(w: &Word) -> Vec<(u32, u32)> {
    w.letters()
        .iter()
        .map(|&l| match l {
            Letter::D(k, m) => (k, m),
            _ => panic!("not a D word"),
        })
        .collect()
}

/// `d^w(D_{i,n})` from the multinomial formula in the `D` alphabet.
pub fn dbi_der_letter(w: &Word, i: u32, n: u32) -> NcPoly {
    let pairs = dbi_pairs(w);
    let dd = pairs.len();
    let total_k: u32 = pairs.iter().map(|p| p.0).sum();
    let mut out = NcPoly::zero(Alphabet::Dbi);
    for ls in boxes(&vec![1; dd], &pairs.iter().map(|p| p.0).collect::<Vec<_>>()) {
        let sl: u32 = ls.iter().sum();
        if sl > total_k {
            continue;
        }
        let l = total_k - sl;
        let mut c = sgn(l as i64);
        for s in 0..dd {
            c *= binom(pairs[s].0 as i64 - 1, ls[s] as i64 - 1);
        }
        if c == 0 {
            continue;
        }
        for ps in compositions(n, dd + 1) {
            let c = c * multinom(&ps);
            let head = d(&[(i + l, ps[dd])]);
            let tail_pairs: Vec<(u32, u32)> =
                (0..dd).map(|s| (ls[s], pairs[s].1 + ps[s])).collect();
            let tail = d(&tail_pairs);
            out.add_scaled(&head.commutator(&tail), &q(c));
        }
    }
    out
}

/// `d^f(g)` for `D`-alphabet polynomials via the letter formula and Leibniz.
pub fn dbi_der(f: &NcPoly, g: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero(Alphabet::Dbi);
    for (fw, fc) in f.iter() {
        if fw.is_empty() {
            continue;
        }
        for (gw, gc) in g.iter() {
            let gp = dbi_pairs(gw);
            for pos in 0..gp.len() {
                let img = dbi_der_letter(fw, gp[pos].0, gp[pos].1);
                let left = d(&gp[..pos]);
                let right = d(&gp[pos + 1..]);
                out.add_scaled(&left.mul(&img).mul(&right), &(fc * gc));
            }
        }
    }
    out
}

pub fn dbi_bracket(f: &NcPoly, g: &NcPoly) -> NcPoly {
    &(&dbi_der(f, g) - &dbi_der(g, f)) + &f.commutator(g)
}

/// Primitivity from the definition: every proper split of the coproduct
/// `sum_I w_I (x) w_{I^c}` cancels.
pub fn primitive_by_coproduct(p: &NcPoly) -> bool {
    let mut terms: HashMap<(Vec<Letter>, Vec<Letter>), Q> = HashMap::new();
    for (w, c) in p.iter() {
        if w.is_empty() {
            return false;
        }
        let l = w.letters();
        let n = l.len();
        for mask in 1u32..(1 << n) - 1 {
            let (mut u, mut v) = (Vec::new(), Vec::new());
            for (i, &a) in l.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    u.push(a)
                } else {
                    v.push(a)
                }
            }
            *terms.entry((u, v)).or_insert_with(Q::zero) += c;
        }
    }
    terms.values().all(|c| c.is_zero())
}

/// Rank of a rational matrix by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Coordinates of polynomials in a common list of words.
pub fn coordinates(polys: &[NcPoly]) -> Vec<Vec<Q>> {
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    for p in polys {
        for w in p.words() {
            let n = index.len();
            index.entry(w.clone()).or_insert(n);
        }
    }
    polys
        .iter()
        .map(|p| {
            let mut row = vec![Q::zero(); index.len()];
            for (w, c) in p.iter() {
                row[index[w]] = c.clone();
            }
            row
        })
        .collect()
}

pub fn rank_of(polys: &[NcPoly]) -> usize {
    rank(coordinates(polys))
}

/// A random word of `Q<B>^0` of weight between 1 and `max_weight`.
pub fn random_b0_word(rng: &mut ChaCha8Rng, max_weight: u32) -> Word {
    let target = rng.gen_range(1..=max_weight);
    loop {
        let mut letters = Vec::new();
        let mut wt = 0;
        while wt < target {
            let s = rng.gen_range(0..=(target - wt).min(4));
            wt += s.max(1);
            letters.push(s);
        }
        if letters.last() != Some(&0) {
            return bw(&letters);
        }
    }
}

/// A random polynomial in `Q<B>^0` with up to `terms` words.
pub fn random_b0_poly(rng: &mut ChaCha8Rng, max_weight: u32, terms: usize) -> NcPoly {
    let mut p = NcPoly::zero(Alphabet::B);
    for _ in 0..rng.gen_range(1..=terms) {
        let c = rng.gen_range(-3i64..=3);
        p.add_term(random_b0_word(rng, max_weight), q(c));
    }
    p
}

pub fn random_x_poly(rng: &mut ChaCha8Rng, max_weight: u32, terms: usize) -> NcPoly {
    let mut p = NcPoly::zero(Alphabet::X);
    for _ in 0..rng.gen_range(1..=terms) {
        let len = rng.gen_range(1..=max_weight as usize);
        let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..=1)).collect();
        p.add_term(xw(&w), q(rng.gen_range(-3i64..=3)));
    }
    p
}

fn random_letter(rng: &mut ChaCha8Rng, alphabet: Alphabet, max_weight: u32) -> Letter {
    match alphabet {
        Alphabet::B => Letter::B(rng.gen_range(0..=max_weight.min(3))),
        Alphabet::X => Letter::X(rng.gen_range(0..=1)),
        Alphabet::Y => Letter::Y(rng.gen_range(1..=max_weight.max(1))),
        Alphabet::Dbi => {
            let wt = rng.gen_range(1..=max_weight.max(1));
            let k = rng.gen_range(1..=wt);
            Letter::D(k, wt - k)
        }
    }
}

/// A random Lie monomial (iterated commutator) of weight at most `max_weight`.
pub fn random_lie_monomial(rng: &mut ChaCha8Rng, alphabet: Alphabet, max_weight: u32) -> NcPoly {
    let letters = rng.gen_range(1..=3usize);
    let mut budget = max_weight;
    let mut out: Option<NcPoly> = None;
    for _ in 0..letters {
        if budget == 0 {
            break;
        }
        let l = random_letter(rng, alphabet, budget);
        if l.weight() > budget {
            continue;
        }
        budget -= l.weight();
        let p = NcPoly::from_word(Word::new(alphabet, [l]).unwrap());
        out = Some(match out {
            None => p,
            Some(acc) if rng.gen_bool(0.5) => acc.commutator(&p),
            Some(acc) => p.commutator(&acc),
        });
    }
    out.unwrap_or_else(|| NcPoly::zero(alphabet))
}

/// A random nonzero Lie polynomial whose words all have weight at most `max_weight`.
pub fn random_lie(rng: &mut ChaCha8Rng, alphabet: Alphabet, max_weight: u32) -> NcPoly {
    loop {
        let mut p = NcPoly::zero(alphabet);
        for _ in 0..rng.gen_range(1..=2) {
            let c = q(rng.gen_range(1i64..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
            p.add_scaled(&random_lie_monomial(rng, alphabet, max_weight), &c);
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// All `b` words of `Q<B>^0` with weight `1..=max_weight`.
pub fn all_b0_words(max_weight: u32) -> Vec<Word> {
    fn go(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Word>) {
        if !cur.is_empty() && cur.last() != Some(&0) {
            out.push(bw(cur));
        }
        for s in 0..=rest {
            let wt = s.max(1);
            if wt > rest {
                continue;
            }
            cur.push(s);
            go(rest - wt, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_weight, &mut Vec::new(), &mut out);
    out
}

/// All `D` words of weight `1..=max_weight`.
pub fn all_dbi_words(max_weight: u32) -> Vec<Word> {
    fn go(rest: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Word>) {
        if !cur.is_empty() {
            out.push(dw(cur));
        }
        for wt in 1..=rest {
            for k in 1..=wt {
                cur.push((k, wt - k));
                go(rest - wt, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(max_weight, &mut Vec::new(), &mut out);
    out
}

/// The element of weight 8 and depth 2 used as membership test data.
pub fn remark_element() -> NcPoly {
    let terms: [(i64, &[u32]); 12] = [
        (1, &[3, 0, 2, 0, 0]),
        (-1, &[2, 0, 3, 0, 0]),
        (1, &[2, 0, 0, 3, 0]),
        (-1, &[3, 0, 0, 2, 0]),
        (-1, &[0, 0, 2, 3, 0]),
        (1, &[0, 0, 3, 2, 0]),
        (1, &[0, 2, 3, 0, 0]),
        (-1, &[0, 3, 2, 0, 0]),
        (-1, &[0, 0, 3, 0, 2]),
        (1, &[0, 0, 2, 0, 3]),
        (-1, &[0, 2, 0, 0, 3]),
        (1, &[0, 3, 0, 0, 2]),
    ];
    let mut p = NcPoly::zero(Alphabet::B);
    for (c, w) in terms {
        p.add_term(bw(w), q(c));
    }
    p
}

/// Ceilings wide enough for every cell of weight at most 10.
pub const WIDE: lq_core::spaces::Limits = lq_core::spaces::Limits {
    max_weight: 10,
    max_depth: 10,
};

/// All `D` words of exact weight `k` and depth `d`.
pub fn dbi_words(k: u32, d: u32) -> Vec<Word> {
    all_dbi_words(k)
        .into_iter()
        .filter(|w| w.weight() == k && w.len() as u32 == d)
        .collect()
}

/// All `x` words of length `k` with `d` letters `x1`.
pub fn x_words(k: u32, d: u32) -> Vec<Word> {
    (0..1u32 << k)
        .filter(|m| m.count_ones() == d)
        .map(|m| xw(&(0..k).map(|i| (m >> i & 1) as u8).collect::<Vec<_>>()))
        .collect()
}

/// All `y` words of weight `k` and depth `d`.
pub fn y_words(k: u32, d: u32) -> Vec<Word> {
    compositions(k, d as usize)
        .into_iter()
        .filter(|c| c.iter().all(|&p| p >= 1))
        .map(|c| Word::new(Alphabet::Y, c.into_iter().map(Letter::Y)).unwrap())
        .collect()
}

fn letters_shuffle(u: &[Letter], v: &[Letter]) -> Vec<Vec<Letter>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    let mut out = Vec::new();
    for mut w in letters_shuffle(&u[1..], v) {
        w.insert(0, u[0]);
        out.push(w);
    }
    for mut w in letters_shuffle(u, &v[1..]) {
        w.insert(0, v[0]);
        out.push(w);
    }
    out
}

/// Rows `(phi | u sh v)` for all nonempty `u`, `v` whose product lands in `cols`.
/// `translate` maps a shuffled word to the column word it pairs with.
fn shuffle_rows(
    pieces: &[(Word, Word)],
    index: &HashMap<Word, usize>,
    translate: &dyn Fn(Vec<Letter>) -> Option<Word>,
) -> Vec<Vec<Q>> {
    let mut rows = Vec::new();
    for (u, v) in pieces {
        let mut row = vec![Q::zero(); index.len()];
        for w in letters_shuffle(u.letters(), v.letters()) {
            if let Some(c) = translate(w).and_then(|w| index.get(&w).copied()) {
                row[c] += q(1);
            }
        }
        rows.push(row);
    }
    rows
}

fn split_pairs(words_of: &dyn Fn(u32, u32) -> Vec<Word>, k: u32, d: u32, min_part_weight: u32) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for k1 in min_part_weight..k {
        for d1 in 0..=d {
            for u in words_of(k1, d1) {
                for v in words_of(k - k1, d - d1) {
                    out.push((u.clone(), v));
                }
            }
        }
    }
    out
}

/// `dim lq_{k,d}` as the kernel, over all `D` words, of the shuffle functionals,
/// the even depth-one coefficients and `tau_dbi - id` (closed formula).
pub fn lq_dim_oracle(k: u32, d: u32) -> usize {
    let cols = dbi_words(k, d);
    let index: HashMap<Word, usize> = cols.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = cols.len();
    let mut rows = shuffle_rows(
        &split_pairs(&|k, d| dbi_words(k, d), k, d, 1),
        &index,
        &|l| Some(Word::new(Alphabet::Dbi, l).unwrap()),
    );
    if d == 1 && k.is_multiple_of(2) {
        for i in 0..n {
            let mut row = vec![Q::zero(); n];
            row[i] = q(1);
            rows.push(row);
        }
    }
    // (tau_dbi(phi) - phi | w) = sum_u phi_u (tau_dbi(u) | w) - phi_w
    let images: Vec<NcPoly> = cols.iter().map(tau_dbi_closed).collect();
    for (j, w) in cols.iter().enumerate() {
        let mut row: Vec<Q> = images.iter().map(|img| img.coeff_of(w)).collect();
        row[j] -= q(1);
        rows.push(row);
    }
    n - rank(rows)
}

fn x_to_y(letters: &[Letter]) -> Option<Word> {
    let mut out = Vec::new();
    let mut run = 0;
    for &l in letters {
        match l {
            Letter::X(0) => run += 1,
            _ => {
                out.push(Letter::Y(run + 1));
                run = 0;
            }
        }
    }
    (run == 0).then(|| Word::new(Alphabet::Y, out).unwrap())
}

fn y_to_x(letters: &[Letter]) -> Word {
    let mut out = Vec::new();
    for &l in letters {
        let Letter::Y(k) = l else { unreachable!() };
        out.extend(std::iter::repeat_n(Letter::X(0), k as usize - 1));
        out.push(Letter::X(1));
    }
    Word::new(Alphabet::X, out).unwrap()
}

/// `dim ls_{k,d}` as the kernel, over all `x` words, of conditions (i)-(iv),
/// with (iv) written as shuffle functionals on `y` words.
pub fn ls_dim_oracle(k: u32, d: u32) -> usize {
    let cols = x_words(k, d);
    let index: HashMap<Word, usize> = cols.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = cols.len();
    let mut rows = shuffle_rows(
        &split_pairs(&|k, d| if d <= k { x_words(k, d) } else { Vec::new() }, k, d, 1),
        &index,
        &|l| Some(Word::new(Alphabet::X, l).unwrap()),
    );
    let unit = |w: &Word| {
        let mut row = vec![Q::zero(); n];
        if let Some(&i) = index.get(w) {
            row[i] = q(1);
        }
        row
    };
    if k == 1 {
        rows.push(unit(&xw(&[0])));
        rows.push(unit(&xw(&[1])));
    }
    if d == 1 && k.is_multiple_of(2) {
        let mut w = vec![0u8; k as usize - 1];
        w.push(1);
        rows.push(unit(&xw(&w)));
    }
    let y_pieces = split_pairs(&|k, d| y_words(k, d), k, d, 1);
    let y_rows = shuffle_rows(&y_pieces, &index, &|l| Some(y_to_x(&l)));
    rows.extend(y_rows);
    debug_assert!(x_to_y(xw(&[0, 1]).letters()).is_some());
    n - rank(rows)
}

/// `dim lq_{k,1}` from the orbits of the `tau_dbi` pairing on the letters
/// `D_{k-m,m}`; a letter fixed with sign `-1` would contribute nothing.
pub fn depth_one_orbit_dim(k: u32) -> usize {
    if k.is_multiple_of(2) {
        return 0;
    }
    let letters: Vec<Word> = (0..k).map(|m| dw(&[(k - m, m)])).collect();
    let mut seen = vec![false; letters.len()];
    let mut orbits = 0;
    for i in 0..letters.len() {
        if seen[i] {
            continue;
        }
        let img = tau_dbi_closed(&letters[i]);
        assert_eq!(img.len(), 1);
        let (w, c) = img.iter().next().unwrap();
        let j = letters.iter().position(|l| l == w).unwrap();
        seen[i] = true;
        seen[j] = true;
        if !(i == j && *c == q(-1)) {
            orbits += 1;
        }
    }
    orbits
}
