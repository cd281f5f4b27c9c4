//! Bimoulds: depth-indexed commutative polynomials in `X_1, Y_1, ..., X_d, Y_d`,
//! the translation `beta` from `Q<Dbi>`, and the operations `mu`, `arit`,
//! `ari`, `swap` and `delta`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{expect_alphabet, Result};
use crate::hopfmaps::{is_primitive, ShuffleWitness};
use crate::ncpoly::{Alphabet, Letter, NcPoly, Word};
use crate::rational::{q, Q};

/// A linear form `sum c_v V_v` in the variables of some depth, `V_{2(i-1)} = X_i`
/// and `V_{2(i-1)+1} = Y_i`.
type LinearForm = Vec<(usize, i64)>;

fn x_var(i: usize) -> usize {
    2 * (i - 1)
}

fn y_var(i: usize) -> usize {
    2 * (i - 1) + 1
}

/// A polynomial in `X_1, Y_1, ..., X_d, Y_d` for a fixed depth `d`, keyed by
/// the exponent vector `(e_1, f_1, ..., e_d, f_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CommPoly {
    depth: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl CommPoly {
    pub fn zero(depth: usize) -> Self {
        CommPoly {
            depth,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(depth: usize, c: Q) -> Self {
        Self::monomial(depth, vec![0; 2 * depth], c)
    }

    pub fn monomial(depth: usize, exps: Vec<u32>, c: Q) -> Self {
        let mut p = Self::zero(depth);
        p.add_term(exps, c);
        p
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        assert_eq!(exps.len(), 2 * self.depth, "exponent vector of the wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &CommPoly, factor: &Q) {
        assert_eq!(self.depth, other.depth);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Q) -> CommPoly {
        let mut out = CommPoly::zero(self.depth);
        out.add_scaled(self, factor);
        out
    }

    /// Product of two polynomials of the same depth.
    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        assert_eq!(self.depth, other.depth);
        let mut out = CommPoly::zero(self.depth);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `A(V_1, ..., V_{2d}) B(V_{2d+1}, ...)`: the variables of `other` are
    /// shifted past those of `self`.
    fn juxtapose(&self, other: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero(self.depth + other.depth);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut e = a.clone();
                e.extend_from_slice(b);
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    fn linear(depth: usize, form: &LinearForm) -> CommPoly {
        let mut out = CommPoly::zero(depth);
        for &(v, c) in form {
            let mut e = vec![0; 2 * depth];
            e[v] = 1;
            out.add_term(e, q(c));
        }
        out
    }

    /// Substitutes variable `v` of `self` by the linear form `forms[v]` in
    /// the variables of depth `target_depth`.
    fn substitute(&self, target_depth: usize, forms: &[LinearForm]) -> CommPoly {
        assert_eq!(forms.len(), 2 * self.depth);
        let mut powers: Vec<Vec<CommPoly>> = forms
            .iter()
            .map(|_| vec![CommPoly::constant(target_depth, Q::one())])
            .collect();
        let mut out = CommPoly::zero(target_depth);
        for (exps, c) in &self.terms {
            let mut term = CommPoly::constant(target_depth, c.clone());
            for (v, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v]
                        .last()
                        .expect("nonempty")
                        .mul(&CommPoly::linear(target_depth, &forms[v]));
                    powers[v].push(next);
                }
                term = term.mul(&powers[v][e as usize]);
            }
            out.add_scaled(&term, &Q::one());
        }
        out
    }

    /// True if every monomial has even total degree.
    pub fn is_even(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().sum::<u32>() % 2 == 0)
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (exps, c)) in self.terms.iter().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            for (v, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if v % 2 == 0 { 'X' } else { 'Y' };
                let idx = v / 2 + 1;
                factors.push(if e == 1 {
                    format!("{name}{idx}")
                } else {
                    format!("{name}{idx}^{e}")
                });
            }
            let abs = c.abs();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A bimould with finitely many nonzero components; absent depths are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bimould {
    components: BTreeMap<usize, CommPoly>,
}

impl Bimould {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_components(components: impl IntoIterator<Item = CommPoly>) -> Self {
        let mut out = Self::zero();
        for c in components {
            out.add_component(&c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, depth: usize) -> CommPoly {
        self.components
            .get(&depth)
            .cloned()
            .unwrap_or_else(|| CommPoly::zero(depth))
    }

    pub fn components(&self) -> impl Iterator<Item = (&usize, &CommPoly)> {
        self.components.iter()
    }

    fn add_component(&mut self, p: &CommPoly) {
        self.add_component_scaled(p, &Q::one());
    }

    fn add_component_scaled(&mut self, p: &CommPoly, factor: &Q) {
        if p.is_zero() {
            return;
        }
        let entry = self
            .components
            .entry(p.depth())
            .or_insert_with(|| CommPoly::zero(p.depth()));
        entry.add_scaled(p, factor);
        if entry.is_zero() {
            self.components.remove(&p.depth());
        }
    }

    fn map_components(&self, f: impl Fn(&CommPoly) -> CommPoly) -> Bimould {
        Bimould::from_components(self.components.values().map(f))
    }
}

impl Add for &Bimould {
    type Output = Bimould;
    fn add(self, rhs: &Bimould) -> Bimould {
        let mut out = self.clone();
        for c in rhs.components.values() {
            out.add_component(c);
        }
        out
    }
}

impl Sub for &Bimould {
    type Output = Bimould;
    fn sub(self, rhs: &Bimould) -> Bimould {
        let mut out = self.clone();
        for c in rhs.components.values() {
            out.add_component_scaled(c, &q(-1));
        }
        out
    }
}

impl Neg for &Bimould {
    type Output = Bimould;
    fn neg(self) -> Bimould {
        self.map_components(|c| c.scale(&q(-1)))
    }
}

/// One line per nonzero depth, `d: polynomial`; the zero bimould prints `0`.
impl fmt::Display for Bimould {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        for (n, (d, p)) in self.components.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}: {p}")?;
        }
        Ok(())
    }
}

/// `D_{k_1,m_1} ... D_{k_d,m_d} -> X_1^{k_1-1} Y_1^{m_1} ... X_d^{k_d-1} Y_d^{m_d}`,
/// with the depth-0 component set to zero.
pub fn beta(p: &NcPoly) -> Result<Bimould> {
    expect_alphabet(Alphabet::Dbi, p.alphabet())?;
    let mut out = Bimould::zero();
    for (w, c) in p.iter() {
        if w.is_empty() {
            continue;
        }
        let mut exps = Vec::with_capacity(2 * w.len());
        for &l in w.letters() {
            let Letter::D(k, m) = l else { unreachable!() };
            exps.push(k - 1);
            exps.push(m);
        }
        out.add_component(&CommPoly::monomial(w.len(), exps, c.clone()));
    }
    Ok(out)
}

/// The coefficient map of `a`, as a polynomial in `Q<Dbi>` (the depth-0
/// component becomes the constant term).
pub fn coefficient_map(a: &Bimould) -> NcPoly {
    let mut out = NcPoly::zero(Alphabet::Dbi);
    for p in a.components.values() {
        for (exps, c) in p.iter() {
            let letters = exps.chunks(2).map(|ef| Letter::D(ef[0] + 1, ef[1]));
            out.add_term(Word::from_letters(Alphabet::Dbi, letters.collect()), c.clone());
        }
    }
    out
}

/// `mu(A, B)_d = sum_i A_i(X_1..X_i) B_{d-i}(X_{i+1}..X_d)`.
pub fn mu(a: &Bimould, b: &Bimould) -> Bimould {
    let mut out = Bimould::zero();
    for pa in a.components.values() {
        for pb in b.components.values() {
            out.add_component(&pa.juxtapose(pb));
        }
    }
    out
}

/// The substitution `X_i -> Y_{d+1-i} + ... + Y_d`, `Y_i -> X_{d+1-i} - X_{d-i}`
/// (`X_0 = 0`) in every component.
pub fn swap(a: &Bimould) -> Bimould {
    a.map_components(|p| {
        let d = p.depth();
        let mut forms = vec![Vec::new(); 2 * d];
        for i in 1..=d {
            forms[x_var(i)] = (d + 1 - i..=d).map(|t| (y_var(t), 1)).collect();
            let mut yf = vec![(x_var(d + 1 - i), 1)];
            if d - i >= 1 {
                yf.push((x_var(d - i), -1));
            }
            forms[y_var(i)] = yf;
        }
        p.substitute(d, &forms)
    })
}

/// `arit_B(A)`.
pub fn arit(b: &Bimould, a: &Bimould) -> Bimould {
    let mut out = Bimould::zero();
    for pa in a.components.values() {
        let da = pa.depth();
        for pb in b.components.values() {
            let j = pb.depth();
            if j == 0 {
                continue;
            }
            let d = da + j;
            for i in 1..=da {
                let y_form = |t: usize| -> LinearForm {
                    if t < i {
                        vec![(y_var(t), 1)]
                    } else if t == i {
                        (i..=i + j).map(|s| (y_var(s), 1)).collect()
                    } else {
                        vec![(y_var(t + j), 1)]
                    }
                };
                // first sum: B is inserted to the right of X_i
                let mut forms_a = vec![Vec::new(); 2 * da];
                for t in 1..=da {
                    let xt = if t <= i { t } else { t + j };
                    forms_a[x_var(t)] = vec![(x_var(xt), 1)];
                    forms_a[y_var(t)] = y_form(t);
                }
                let mut forms_b = vec![Vec::new(); 2 * j];
                for t in 1..=j {
                    forms_b[x_var(t)] = vec![(x_var(i + t), 1), (x_var(i), -1)];
                    forms_b[y_var(t)] = vec![(y_var(i + t), 1)];
                }
                let first = pa.substitute(d, &forms_a).mul(&pb.substitute(d, &forms_b));
                out.add_component(&first);

                // second sum: B is inserted to the left of X_{i+j}
                for t in 1..=da {
                    let xt = if t < i { t } else { t + j };
                    forms_a[x_var(t)] = vec![(x_var(xt), 1)];
                }
                for t in 1..=j {
                    forms_b[x_var(t)] = vec![(x_var(i + t - 1), 1), (x_var(i + j), -1)];
                    forms_b[y_var(t)] = vec![(y_var(i + t - 1), 1)];
                }
                let second = pa.substitute(d, &forms_a).mul(&pb.substitute(d, &forms_b));
                out.add_component_scaled(&second, &q(-1));
            }
        }
    }
    out
}

/// `ari(A, B) = arit_A(B) - arit_B(A) + mu(A, B) - mu(B, A)`.
pub fn ari(a: &Bimould, b: &Bimould) -> Bimould {
    let mut out = &arit(a, b) - &arit(b, a);
    out = &out + &mu(a, b);
    &out - &mu(b, a)
}

/// `delta(A)_d = (X_1 Y_1 + ... + X_d Y_d) A_d`.
pub fn delta_bimould(a: &Bimould) -> Bimould {
    a.map_components(|p| {
        let d = p.depth();
        let mut factor = CommPoly::zero(d);
        for i in 1..=d {
            let mut e = vec![0; 2 * d];
            e[x_var(i)] = 1;
            e[y_var(i)] = 1;
            factor.add_term(e, Q::one());
        }
        factor.mul(p)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternalityReport {
    pub is_alternal: bool,
    /// A pair of nonempty `D`-words whose shuffle the coefficient map does
    /// not kill.
    pub witness: Option<ShuffleWitness>,
}

pub fn is_alternal(a: &Bimould) -> AlternalityReport {
    let report = is_primitive(&coefficient_map(a));
    AlternalityReport {
        is_alternal: report.is_primitive,
        witness: report.witness,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapReport {
    pub is_swap_invariant: bool,
    /// Smallest depth where `A_d != swap(A)_d`.
    pub failing_depth: Option<usize>,
}

pub fn is_swap_invariant(a: &Bimould) -> SwapReport {
    let s = swap(a);
    let diff = &s - a;
    let failing_depth = diff.components.keys().next().copied();
    SwapReport {
        is_swap_invariant: failing_depth.is_none(),
        failing_depth,
    }
}

/// Depths whose component contains a monomial of odd total degree.
pub fn odd_components(a: &Bimould) -> Vec<usize> {
    a.components
        .iter()
        .filter(|(_, p)| !p.is_even())
        .map(|(d, _)| *d)
        .collect()
}

/// Bimoulds of `beta` images evaluated once per word, for bulk conversions.
pub fn beta_cached(p: &NcPoly, cache: &mut HashMap<Word, Bimould>) -> Result<Bimould> {
    expect_alphabet(Alphabet::Dbi, p.alphabet())?;
    let mut out = Bimould::zero();
    for (w, c) in p.iter() {
        let img = match cache.get(w) {
            Some(b) => b.clone(),
            None => {
                let b = beta(&NcPoly::from_word(w.clone()))?;
                cache.insert(w.clone(), b.clone());
                b
            }
        };
        for comp in img.components.values() {
            out.add_component_scaled(comp, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::bracket_a;
    use crate::hopfmaps::to_dbi;

    fn d(pairs: &[(u32, u32)]) -> NcPoly {
        NcPoly::from_word(Word::d(pairs))
    }

    fn mono(depth: usize, exps: &[u32], c: i64) -> Bimould {
        Bimould::from_components([CommPoly::monomial(depth, exps.to_vec(), q(c))])
    }

    fn b_as_dbi(ix: &[u32]) -> NcPoly {
        to_dbi(&NcPoly::from_word(Word::b(ix))).unwrap()
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&d(&[(2, 1)])).unwrap(), mono(1, &[1, 1], 1));
        assert_eq!(beta(&d(&[(1, 0)])).unwrap(), mono(1, &[0, 0], 1));
        assert_eq!(beta(&d(&[(1, 0), (2, 3)])).unwrap(), mono(2, &[0, 0, 1, 3], 1));
        assert!(beta(&NcPoly::one(Alphabet::Dbi)).unwrap().is_zero());
    }

    #[test]
    fn mu_examples() {
        let a = beta(&b_as_dbi(&[1])).unwrap();
        let b = beta(&b_as_dbi(&[2])).unwrap();
        assert_eq!(mu(&a, &b), mono(2, &[0, 0, 1, 0], 1));
        let with_const = Bimould::from_components([CommPoly::constant(0, q(3))]);
        assert_eq!(mu(&with_const, &with_const).component(0), CommPoly::constant(0, q(9)));
    }

    #[test]
    fn swap_examples() {
        let a = mono(1, &[2, 1], 1);
        assert_eq!(swap(&a), mono(1, &[1, 2], 1));
        let x1y1 = beta(&d(&[(2, 1)])).unwrap();
        assert_eq!(swap(&x1y1), x1y1);
        let deep = &mono(2, &[1, 0, 0, 2], 1) + &mono(3, &[0, 1, 2, 0, 1, 1], -2);
        assert_eq!(swap(&swap(&deep)), deep);
    }

    #[test]
    fn arit_and_ari_examples() {
        let a = beta(&b_as_dbi(&[1])).unwrap();
        let b = beta(&b_as_dbi(&[2])).unwrap();
        let expected = &mono(2, &[1, 0, 0, 0], 1) - &mono(2, &[0, 0, 1, 0], 1);
        assert_eq!(arit(&a, &b), expected);
        assert!(arit(&a, &Bimould::zero()).is_zero());
        assert!(ari(&a, &a).is_zero());
        assert_eq!(ari(&a, &b), expected.map_components(|p| p.scale(&q(2))));
        let bracket = bracket_a(&b_as_dbi(&[1]), &b_as_dbi(&[2])).unwrap();
        assert_eq!(beta(&bracket).unwrap(), ari(&a, &b));
    }

    #[test]
    fn alternality_examples() {
        let sq = beta(&d(&[(1, 0), (1, 0)])).unwrap();
        let r = is_alternal(&sq);
        assert!(!r.is_alternal);
        let w = r.witness.unwrap();
        assert_eq!((w.left, w.right), (Word::d(&[(1, 0)]), Word::d(&[(1, 0)])));
        let comm = &d(&[(1, 0), (2, 0)]) - &d(&[(2, 0), (1, 0)]);
        assert!(is_alternal(&beta(&comm).unwrap()).is_alternal);
    }

    #[test]
    fn swap_invariance_examples() {
        assert!(is_swap_invariant(&beta(&d(&[(2, 1)])).unwrap()).is_swap_invariant);
        let r = is_swap_invariant(&beta(&d(&[(3, 0)])).unwrap());
        assert_eq!(r.failing_depth, Some(1));
        let sym = &d(&[(3, 0)]) + &d(&[(1, 2)]);
        assert!(is_swap_invariant(&beta(&sym).unwrap()).is_swap_invariant);
    }

    #[test]
    fn delta_examples() {
        let one = beta(&d(&[(1, 0)])).unwrap();
        assert_eq!(delta_bimould(&one), mono(1, &[1, 1], 1));
        assert!(delta_bimould(&Bimould::zero()).is_zero());
        let sq = beta(&d(&[(1, 0), (1, 0)])).unwrap();
        let expected = &mono(2, &[1, 1, 0, 0], 1) + &mono(2, &[0, 0, 1, 1], 1);
        assert_eq!(delta_bimould(&sq), expected);
    }

    #[test]
    fn coefficient_map_inverts_beta() {
        let p = &d(&[(2, 1), (1, 0)]) - &d(&[(3, 0)]).scale(&q(4));
        assert_eq!(coefficient_map(&beta(&p).unwrap()), p);
    }
}
