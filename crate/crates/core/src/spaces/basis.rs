use std::collections::{BTreeMap, HashMap};

use crate::embedding::pi_y;
use crate::hopfmaps::{dynkin_defect, from_dbi, tau_dbi_word};
use crate::ncpoly::{Alphabet, Letter, NcPoly, Word};
use crate::rational::Q;
use crate::spaces::lyndon::lyndon_basis;
use crate::spaces::matrix::RationalMatrix;
use crate::spaces::{GradedBasis, Limits, Space};
use crate::Result;

/// Collects linear functionals on the span of `columns`, one row per word.
struct Conditions {
    cols: usize,
    rows: BTreeMap<(usize, Word), Vec<Q>>,
    groups: usize,
}

impl Conditions {
    fn new(cols: usize) -> Self {
        Conditions {
            cols,
            rows: BTreeMap::new(),
            groups: 0,
        }
    }

    /// Adds the rows "coefficient of each word in `images[j]`", `j` indexing columns.
    fn add_group(&mut self, images: &[NcPoly]) {
        let g = self.groups;
        self.groups += 1;
        for (j, img) in images.iter().enumerate() {
            for (w, c) in img.iter() {
                self.rows
                    .entry((g, w.clone()))
                    .or_insert_with(|| vec![Q::default(); self.cols])[j] = c.clone();
            }
        }
    }

    fn kernel(self, columns: &[NcPoly]) -> Vec<NcPoly> {
        if columns.is_empty() {
            return Vec::new();
        }
        let alphabet = columns[0].alphabet();
        let m = RationalMatrix::from_rows(self.cols, self.rows.into_values().collect());
        m.kernel()
            .into_iter()
            .map(|v| {
                let mut p = NcPoly::zero(alphabet);
                for (c, col) in v.iter().zip(columns) {
                    p.add_scaled(col, c);
                }
                p
            })
            .collect()
    }
}

/// Basis of `lq_{k,d}` in the `D` alphabet.
pub fn basis_lq(weight: u32, depth: u32) -> Result<GradedBasis> {
    basis_lq_with(weight, depth, &Limits::default())
}

pub fn basis_lq_with(weight: u32, depth: u32, limits: &Limits) -> Result<GradedBasis> {
    limits.check(weight, depth)?;
    let columns = lyndon_basis(Alphabet::Dbi, weight, depth);
    let mut conds = Conditions::new(columns.len());
    if depth == 1 && weight.is_multiple_of(2) {
        let expanded = columns
            .iter()
            .map(from_dbi)
            .collect::<Result<Vec<_>>>()?;
        let picked: Vec<NcPoly> = expanded
            .iter()
            .map(|p| {
                p.filter(|w| {
                    let (blocks, trailing) = w.b_blocks();
                    trailing == 0 && blocks.len() == 1
                })
            })
            .collect();
        conds.add_group(&picked);
    }
    let mut cache = HashMap::new();
    let tau_minus_id: Vec<NcPoly> = columns
        .iter()
        .map(|c| &c.map_linear_cached(Alphabet::Dbi, &mut cache, tau_dbi_word) - c)
        .collect();
    conds.add_group(&tau_minus_id);
    Ok(GradedBasis {
        space: Space::Lq,
        weight,
        depth,
        basis: conds.kernel(&columns),
    })
}

/// Basis of `ls_{k,d}` in the `x` alphabet.
pub fn basis_ls(weight: u32, depth: u32) -> Result<GradedBasis> {
    basis_ls_with(weight, depth, &Limits::default())
}

pub fn basis_ls_with(weight: u32, depth: u32, limits: &Limits) -> Result<GradedBasis> {
    limits.check(weight, depth)?;
    let columns = lyndon_basis(Alphabet::X, weight, depth);
    let mut conds = Conditions::new(columns.len());
    if weight == 1 || (depth == 1 && weight.is_multiple_of(2)) {
        let picked: Vec<NcPoly> = columns
            .iter()
            .map(|p| p.filter(|w| weight == 1 || w.last() == Some(Letter::X(1))))
            .collect();
        conds.add_group(&picked);
    }
    let defects = columns
        .iter()
        .map(|c| pi_y(c).map(|p| dynkin_defect(&p)))
        .collect::<Result<Vec<_>>>()?;
    conds.add_group(&defects);
    Ok(GradedBasis {
        space: Space::Ls,
        weight,
        depth,
        basis: conds.kernel(&columns),
    })
}
