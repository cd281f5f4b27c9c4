//! Binomial identities behind `tau ∘ d^{l,0}_{tau(w)} ∘ tau = d^{l,0}_{rho(w)}`,
//! as integer predicates that can be swept over parameter boxes.
//!
//! Parameters: depth `d`, `k = (k_1..k_d)` with `k_s >= 1`, `m = (m_1..m_d)`,
//! and the splitting
//! `lambda_1 + ... + lambda_{d-1} + lambda + lambda_bar = k_1 + ... + k_d`,
//! `mu_1 + ... + mu_{d-1} + mu + mu_bar = m_1 + ... + m_d`.

use crate::hopfmaps::for_each_bounded_composition;
use crate::rational::{binomial, sign};

/// The `k`/`l` half of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlParams {
    pub k: Vec<u32>,
    /// `lambda_1 .. lambda_{d-1}`
    pub lambdas: Vec<u32>,
    pub lambda: u32,
    pub lambda_bar: u32,
}

/// The `m`/`n` half of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnParams {
    pub m: Vec<u32>,
    /// `mu_1 .. mu_{d-1}`
    pub mus: Vec<u32>,
    pub mu: u32,
    pub mu_bar: u32,
}

/// Left and right side of
/// `(-1)^lambda_bar sum_{l_1+..+l_d = K, l_s >= 1} (-1)^{l_d} C(l_d - 1, lambda - 1)
///  prod_{s<d} C(k_s - lambda_s, l_s - lambda_s) = (-1)^lambda C(k_d - 1, lambda_bar)`.
pub fn kl_collapse(p: &KlParams) -> (i128, i128) {
    let d = p.k.len();
    let total: u32 = p.k.iter().sum();
    let mut lo = vec![1u32; d];
    let mut hi: Vec<u32> = p.k.clone();
    hi[d - 1] = total;
    lo[d - 1] = 1;
    let mut sum: i128 = 0;
    for_each_bounded_composition(total, &lo, &hi, &mut |ls| {
        let mut c = sign(ls[d - 1] as i64) as i128 * binomial(ls[d - 1] as i64 - 1, p.lambda as i64 - 1);
        for s in 0..d - 1 {
            c *= binomial(
                p.k[s] as i64 - p.lambdas[s] as i64,
                ls[s] as i64 - p.lambdas[s] as i64,
            );
        }
        sum += c;
    });
    let lhs = sign(p.lambda_bar as i64) as i128 * sum;
    let rhs = sign(p.lambda as i64) as i128 * binomial(p.k[d - 1] as i64 - 1, p.lambda_bar as i64);
    (lhs, rhs)
}

/// Left and right side of
/// `(-1)^mu_bar sum_{n_1+..+n_d = M, n_s >= 0} (-1)^{n_d} C(n_d, mu)
///  prod_{s<d} C(m_s - mu_s, n_s - mu_s) = (-1)^mu C(m_d, mu_bar)`.
pub fn mn_collapse(p: &MnParams) -> (i128, i128) {
    let d = p.m.len();
    let total: u32 = p.m.iter().sum();
    let lo = vec![0u32; d];
    let mut hi: Vec<u32> = p.m.clone();
    hi[d - 1] = total;
    let mut sum: i128 = 0;
    for_each_bounded_composition(total, &lo, &hi, &mut |ns| {
        let mut c = sign(ns[d - 1] as i64) as i128 * binomial(ns[d - 1] as i64, p.mu as i64);
        for s in 0..d - 1 {
            c *= binomial(
                p.m[s] as i64 - p.mus[s] as i64,
                ns[s] as i64 - p.mus[s] as i64,
            );
        }
        sum += c;
    });
    let lhs = sign(p.mu_bar as i64) as i128 * sum;
    let rhs = sign(p.mu as i64) as i128 * binomial(p.m[d - 1] as i64, p.mu_bar as i64);
    (lhs, rhs)
}

/// Left and right side of the full identity
/// `(-1)^{lambda+mu} C(m_d, mu_bar) C(k_d - 1, lambda_bar)
///  = (-1)^{lambda_bar+mu_bar} sum (-1)^{l_d+n_d} C(l_d - 1, lambda - 1) C(n_d, mu)
///    prod_{s<d} C(k_s - lambda_s, l_s - lambda_s) C(m_s - mu_s, n_s - mu_s)`,
/// with the double sum evaluated directly.
pub fn full_identity(kl: &KlParams, mn: &MnParams) -> (i128, i128) {
    let d = kl.k.len();
    assert_eq!(d, mn.m.len(), "k and m must have the same length");
    let k_total: u32 = kl.k.iter().sum();
    let m_total: u32 = mn.m.iter().sum();
    let lhs = sign(kl.lambda as i64 + mn.mu as i64) as i128
        * binomial(mn.m[d - 1] as i64, mn.mu_bar as i64)
        * binomial(kl.k[d - 1] as i64 - 1, kl.lambda_bar as i64);

    let mut l_lo = vec![1u32; d];
    let mut l_hi = kl.k.clone();
    l_lo[d - 1] = 1;
    l_hi[d - 1] = k_total;
    let n_lo = vec![0u32; d];
    let mut n_hi = mn.m.clone();
    n_hi[d - 1] = m_total;

    let mut sum: i128 = 0;
    for_each_bounded_composition(k_total, &l_lo, &l_hi, &mut |ls| {
        for_each_bounded_composition(m_total, &n_lo, &n_hi, &mut |ns| {
            let mut c = sign(ls[d - 1] as i64 + ns[d - 1] as i64) as i128
                * binomial(ls[d - 1] as i64 - 1, kl.lambda as i64 - 1)
                * binomial(ns[d - 1] as i64, mn.mu as i64);
            for s in 0..d - 1 {
                c *= binomial(
                    kl.k[s] as i64 - kl.lambdas[s] as i64,
                    ls[s] as i64 - kl.lambdas[s] as i64,
                ) * binomial(
                    mn.m[s] as i64 - mn.mus[s] as i64,
                    ns[s] as i64 - mn.mus[s] as i64,
                );
            }
            sum += c;
        });
    });
    let rhs = sign(kl.lambda_bar as i64 + mn.mu_bar as i64) as i128 * sum;
    (lhs, rhs)
}

/// All admissible `k`/`lambda` parameters with `d <= max_depth` and
/// `k_1 + ... + k_d <= max_k`: `1 <= lambda_s <= k_s`, `lambda >= 1`,
/// `lambda_bar >= min_lambda_bar`.
pub fn kl_box(max_depth: usize, max_k: u32, min_lambda_bar: u32) -> Vec<KlParams> {
    let mut out = Vec::new();
    for d in 1..=max_depth {
        for k in vectors(d, 1, max_k) {
            let total: u32 = k.iter().sum();
            for lambdas in bounded_vectors(&k[..d - 1], 1) {
                let used: u32 = lambdas.iter().sum();
                if used >= total {
                    continue;
                }
                for lambda in 1..=total - used {
                    let lambda_bar = total - used - lambda;
                    if lambda_bar < min_lambda_bar {
                        continue;
                    }
                    out.push(KlParams {
                        k: k.clone(),
                        lambdas: lambdas.clone(),
                        lambda,
                        lambda_bar,
                    });
                }
            }
        }
    }
    out
}

/// All admissible `m`/`mu` parameters with `d <= max_depth` and
/// `m_1 + ... + m_d <= max_m`: `0 <= mu_s <= m_s`, `mu, mu_bar >= 0`.
pub fn mn_box(max_depth: usize, max_m: u32) -> Vec<MnParams> {
    let mut out = Vec::new();
    for d in 1..=max_depth {
        for m in vectors(d, 0, max_m) {
            let total: u32 = m.iter().sum();
            for mus in bounded_vectors(&m[..d - 1], 0) {
                let used: u32 = mus.iter().sum();
                if used > total {
                    continue;
                }
                for mu in 0..=total - used {
                    out.push(MnParams {
                        m: m.clone(),
                        mus: mus.clone(),
                        mu,
                        mu_bar: total - used - mu,
                    });
                }
            }
        }
    }
    out
}

/// Vectors of length `d` with entries `>= min` and sum `<= max_total`.
fn vectors(d: usize, min: u32, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn go(d: usize, min: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        let slots_after = (d - cur.len() - 1) as u32;
        if left < min * (slots_after + 1) {
            return;
        }
        for v in min..=left - min * slots_after {
            cur.push(v);
            go(d, min, left - v, cur, out);
            cur.pop();
        }
    }
    go(d, min, max_total, &mut cur, &mut out);
    out
}

/// All vectors `v` with `min <= v_s <= bound_s`.
fn bounded_vectors(bounds: &[u32], min: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::new();
        for v in &out {
            for x in min..=b.max(min) {
                if x > b {
                    continue;
                }
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Outcome of sweeping an identity over a parameter box.
#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the two collapse identities and the full identity on the box
/// `d <= max_depth`, `sum k <= max_k`, `sum m <= max_m`.
pub fn sweep(max_depth: usize, max_k: u32, max_m: u32, min_lambda_bar: u32) -> SweepReport {
    let kls = kl_box(max_depth, max_k, min_lambda_bar);
    let mns = mn_box(max_depth, max_m);
    let mut report = SweepReport::default();
    for kl in &kls {
        report.checked += 1;
        let (l, r) = kl_collapse(kl);
        if l != r {
            report.failures.push(format!("kl collapse {kl:?}: {l} != {r}"));
        }
    }
    for mn in &mns {
        report.checked += 1;
        let (l, r) = mn_collapse(mn);
        if l != r {
            report.failures.push(format!("mn collapse {mn:?}: {l} != {r}"));
        }
    }
    for kl in &kls {
        for mn in mns.iter().filter(|mn| mn.m.len() == kl.k.len()) {
            report.checked += 1;
            let (l, r) = full_identity(kl, mn);
            if l != r {
                report.failures.push(format!("full identity {kl:?} {mn:?}: {l} != {r}"));
            }
        }
    }
    report
}
