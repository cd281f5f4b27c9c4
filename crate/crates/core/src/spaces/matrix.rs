use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// A dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Q>>) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "row {i} has the wrong length");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rank(&self) -> usize {
        let mut e = Eliminator::new(self.cols);
        for i in 0..self.rows {
            e.push_rational(self.row(i));
        }
        e.rank()
    }

    /// A basis of the null space, in reduced row echelon form (leading
    /// coordinate 1, ordered by leading coordinate).
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut e = Eliminator::new(self.cols);
        for i in 0..self.rows {
            e.push_rational(self.row(i));
        }
        e.kernel()
    }
}

/// Incremental fraction-free row reduction over the integers.
///
/// Rows are scaled to primitive integer vectors on insertion and reduced
/// against the current pivot rows; every stored row has a distinct pivot
/// column (its first nonzero entry).
#[derive(Debug, Clone)]
pub struct Eliminator {
    cols: usize,
    /// `(pivot column, row)`, in insertion order.
    pivots: Vec<(usize, Vec<BigInt>)>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Eliminator {
    pub fn new(cols: usize) -> Self {
        Eliminator {
            cols,
            pivots: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.cols
    }

    pub fn push_rational(&mut self, row: &[Q]) {
        assert_eq!(row.len(), self.cols);
        let denom_lcm = row
            .iter()
            .filter(|v| !v.is_zero())
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<BigInt> = row
            .iter()
            .map(|v| v.numer() * (&denom_lcm / v.denom()))
            .collect();
        self.push(ints);
    }

    /// Reduces `row` against the pivots and stores it if it is independent.
    /// Returns whether the rank grew.
    pub fn push(&mut self, mut row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.cols);
        if self.is_full() {
            return false;
        }
        make_primitive(&mut row);
        loop {
            let Some(lead) = row.iter().position(|v| !v.is_zero()) else {
                return false;
            };
            match self.pivot_of_col[lead] {
                None => {
                    self.pivot_of_col[lead] = Some(self.pivots.len());
                    self.pivots.push((lead, row));
                    return true;
                }
                Some(p) => {
                    let pivot_row = &self.pivots[p].1;
                    eliminate(&mut row, pivot_row, lead);
                    make_primitive(&mut row);
                }
            }
        }
    }

    /// Full reduction: every pivot column is zero outside its pivot row.
    fn reduced(&self) -> Vec<(usize, Vec<BigInt>)> {
        let mut rows = self.pivots.clone();
        rows.sort_by_key(|(c, _)| *c);
        for i in (0..rows.len()).rev() {
            let (col, pivot) = rows[i].clone();
            for (_, row) in rows.iter_mut().take(i) {
                if !row[col].is_zero() {
                    eliminate(row, &pivot, col);
                    make_primitive(row);
                }
            }
        }
        rows
    }

    /// The null space of the stored rows, in reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let rows = self.reduced();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if self.pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (col, row) in &rows {
                if !row[free].is_zero() {
                    v[*col] = -Q::new(row[free].clone(), row[*col].clone());
                }
            }
            basis.push(v);
        }
        rref(basis, self.cols)
    }
}

/// `row <- pivot[col] * row - row[col] * pivot`, so that `row[col] = 0`.
fn eliminate(row: &mut [BigInt], pivot: &[BigInt], col: usize) {
    let g = row[col].gcd(&pivot[col]);
    let a = &pivot[col] / &g;
    let b = &row[col] / &g;
    for (x, p) in row.iter_mut().zip(pivot) {
        if p.is_zero() {
            if !x.is_zero() {
                *x *= &a;
            }
        } else {
            *x = &*x * &a - &b * p;
        }
    }
}

/// Divides by the content and makes the leading entry positive.
fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return;
    }
    let lead_negative = row.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
    let g = if lead_negative { -g } else { g };
    if !g.is_one() {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Reduced row echelon form of a list of rational vectors, zero rows dropped.
pub fn rref(rows: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let mut e = Eliminator::new(cols);
    for r in &rows {
        e.push_rational(r);
    }
    e.reduced()
        .into_iter()
        .map(|(col, row)| {
            let lead = row[col].clone();
            row.into_iter().map(|v| Q::new(v, lead.clone())).collect()
        })
        .collect()
}
