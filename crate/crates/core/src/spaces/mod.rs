//! Exact linear algebra, Lyndon bases, membership in `lq` and `ls`, and the
//! bigraded bases and dimension tables of both spaces.

mod basis;
mod lyndon;
mod matrix;
mod membership;

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ncpoly::NcPoly;

pub use basis::{basis_lq, basis_lq_with, basis_ls, basis_ls_with};
pub use lyndon::{is_lyndon, lyndon_basis, lyndon_bracket, lyndon_words, words};
pub use matrix::{rref, Eliminator, RationalMatrix};
pub use membership::{is_in_lq, is_in_ls, Condition, Failure, MembershipReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Lq,
    Ls,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Lq => "lq",
            Space::Ls => "ls",
        })
    }
}

/// Ceilings on the cells that basis and dimension computations accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_weight: u32,
    pub max_depth: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_weight: 10,
            max_depth: 6,
        }
    }
}

impl Limits {
    pub fn check(&self, weight: u32, depth: u32) -> Result<()> {
        if weight > self.max_weight || depth > self.max_depth {
            return Err(Error::ResourceBound {
                weight,
                depth,
                max_weight: self.max_weight,
                max_depth: self.max_depth,
            });
        }
        Ok(())
    }
}

/// A basis of one bigraded cell: `D`-alphabet polynomials for `lq`,
/// `x`-alphabet polynomials for `ls`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub space: Space,
    pub weight: u32,
    pub depth: u32,
    pub basis: Vec<NcPoly>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DimEntry {
    pub weight: u32,
    pub depth: u32,
    pub dim: usize,
}

pub fn basis(space: Space, weight: u32, depth: u32, limits: &Limits) -> Result<GradedBasis> {
    match space {
        Space::Lq => basis_lq_with(weight, depth, limits),
        Space::Ls => basis_ls_with(weight, depth, limits),
    }
}

/// Dimensions of every cell `0 <= k <= max_weight`, `0 <= d <= max_depth`,
/// ordered by weight, then depth.
pub fn dim_table(space: Space, max_weight: u32, max_depth: u32) -> Result<Vec<DimEntry>> {
    dim_table_with(space, max_weight, max_depth, &Limits::default())
}

pub fn dim_table_with(
    space: Space,
    max_weight: u32,
    max_depth: u32,
    limits: &Limits,
) -> Result<Vec<DimEntry>> {
    limits.check(max_weight, max_depth)?;
    let cells: Vec<(u32, u32)> = (0..=max_weight)
        .flat_map(|k| (0..=max_depth).map(move |d| (k, d)))
        .collect();
    cells
        .into_par_iter()
        .map(|(weight, depth)| {
            let dim = basis(space, weight, depth, limits)?.dim();
            Ok(DimEntry { weight, depth, dim })
        })
        .collect()
}
