use std::fmt;

use num_traits::Zero;

use crate::embedding::pi_y;
use crate::error::{Error, Result};
use crate::hopfmaps::{from_dbi, is_primitive, pi0, tau};
use crate::ncpoly::{Alphabet, NcPoly, Word};

/// The four defining conditions of `lq` and of `ls`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// No weight-one terms.
    I,
    /// Depth-one coefficients vanish in even weight.
    II,
    /// Primitivity.
    III,
    /// `tau`-invariance of `pi0` (for `lq`) or primitivity of `pi_y` (for `ls`).
    IV,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::I => "(i)",
            Condition::II => "(ii)",
            Condition::III => "(iii)",
            Condition::IV => "(iv)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub condition: Condition,
    pub weight: u32,
    pub depth: u32,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition {} fails in weight {}, depth {}: {}",
            self.condition, self.weight, self.depth, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub member: bool,
    pub failure: Option<Failure>,
}

impl MembershipReport {
    fn pass() -> Self {
        MembershipReport {
            member: true,
            failure: None,
        }
    }

    fn fail(condition: Condition, weight: u32, depth: u32, detail: String) -> Self {
        MembershipReport {
            member: false,
            failure: Some(Failure {
                condition,
                weight,
                depth,
                detail,
            }),
        }
    }
}

impl fmt::Display for MembershipReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}", self.member),
            Some(fail) => write!(f, "{} ({fail})", self.member),
        }
    }
}

fn nonzero_coeff(p: &NcPoly, w: &Word) -> Option<String> {
    let c = p.coeff_of(w);
    (!c.is_zero()).then(|| format!("coefficient {c} at {w}"))
}

/// Tests a `b`- or `D`-alphabet polynomial for membership in `lq`, one
/// bigraded component at a time. `D`-alphabet input is expanded into `b`
/// first.
pub fn is_in_lq(p: &NcPoly) -> Result<MembershipReport> {
    let p = match p.alphabet() {
        Alphabet::B => p.clone(),
        Alphabet::Dbi => from_dbi(p)?,
        found => {
            return Err(Error::AlphabetMismatch {
                expected: Alphabet::B,
                found,
            })
        }
    };
    for ((k, d), c) in p.components() {
        if (k, d) == (1, 0) {
            if let Some(detail) = nonzero_coeff(&c, &Word::b(&[0])) {
                return Ok(MembershipReport::fail(Condition::I, k, d, detail));
            }
        }
        if d == 1 && k % 2 == 0 {
            for s in 1..=k {
                let w = Word::from_b_blocks(&[(k - s, s)], 0);
                if let Some(detail) = nonzero_coeff(&c, &w) {
                    return Ok(MembershipReport::fail(Condition::II, k, d, detail));
                }
            }
        }
        if (k, d) == (0, 0) {
            return Ok(MembershipReport::fail(
                Condition::III,
                k,
                d,
                "nonzero constant term".into(),
            ));
        }
        let prim = is_primitive(&c);
        if !prim.is_primitive {
            return Ok(MembershipReport::fail(
                Condition::III,
                k,
                d,
                shuffle_detail(prim.witness),
            ));
        }
        let p0 = pi0(&c)?;
        let diff = &tau(&p0)? - &p0;
        if !diff.is_zero() {
            return Ok(MembershipReport::fail(
                Condition::IV,
                k,
                d,
                format!("tau(pi0(p)) - pi0(p) = {diff}"),
            ));
        }
    }
    Ok(MembershipReport::pass())
}

/// Tests an `x`-alphabet polynomial for membership in `ls`, one bigraded
/// component at a time.
pub fn is_in_ls(p: &NcPoly) -> Result<MembershipReport> {
    if p.alphabet() != Alphabet::X {
        return Err(Error::AlphabetMismatch {
            expected: Alphabet::X,
            found: p.alphabet(),
        });
    }
    for ((k, d), c) in p.components() {
        if k == 1 {
            for i in 0..=1 {
                if let Some(detail) = nonzero_coeff(&c, &Word::x(&[i])) {
                    return Ok(MembershipReport::fail(Condition::I, k, d, detail));
                }
            }
        }
        if d == 1 && k % 2 == 0 {
            let mut idx = vec![0u8; k as usize - 1];
            idx.push(1);
            if let Some(detail) = nonzero_coeff(&c, &Word::x(&idx)) {
                return Ok(MembershipReport::fail(Condition::II, k, d, detail));
            }
        }
        if (k, d) == (0, 0) {
            return Ok(MembershipReport::fail(
                Condition::III,
                k,
                d,
                "nonzero constant term".into(),
            ));
        }
        let prim = is_primitive(&c);
        if !prim.is_primitive {
            return Ok(MembershipReport::fail(
                Condition::III,
                k,
                d,
                shuffle_detail(prim.witness),
            ));
        }
        let py = is_primitive(&pi_y(&c)?);
        if !py.is_primitive {
            return Ok(MembershipReport::fail(
                Condition::IV,
                k,
                d,
                format!("pi_y: {}", shuffle_detail(py.witness)),
            ));
        }
    }
    Ok(MembershipReport::pass())
}

fn shuffle_detail(witness: Option<crate::hopfmaps::ShuffleWitness>) -> String {
    match witness {
        Some(w) => format!(
            "pairing with {} sh {} is {}",
            w.left, w.right, w.pairing
        ),
        None => "not a Lie polynomial".into(),
    }
}
