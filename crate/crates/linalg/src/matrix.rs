//! Dense rational vectors and matrices.

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::Rational;

/// A dense vector of exact rationals (0-based internally).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatVector(pub Vec<Rational>);

impl RatVector {
    pub fn zeros(n: usize) -> Self {
        RatVector(vec![Rational::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RatVector(v.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        dot(&self.0, &other.0)
    }

    pub fn select(&self, idx: &[usize]) -> RatVector {
        RatVector(idx.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

impl From<Vec<Rational>> for RatVector {
    fn from(v: Vec<Rational>) -> Self {
        RatVector(v)
    }
}

impl FromIterator<Rational> for RatVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RatVector(iter.into_iter().collect())
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for RatVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl<'a> IntoIterator for &'a RatVector {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Row-major dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system has more than one solution")]
    Underdetermined,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when `rows` is empty.
    ///
    /// # Panics
    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            data.extend(row);
        }
        RatMatrix { rows: r, cols, data }
    }

    pub fn try_from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self, SolveError> {
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(SolveError::DimensionMismatch(format!(
                "row {} has {} entries, expected {cols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(Self::from_rows(rows, cols))
    }

    pub fn from_ints(rows: &[&[i64]], cols: usize) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> RatVector {
        RatVector(self.row(i).to_vec())
    }

    pub fn col_vec(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn select_rows(&self, idx: &[usize]) -> RatMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        RatMatrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> RatMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                data.push(self[(i, j)].clone());
            }
        }
        RatMatrix { rows: self.rows, cols: idx.len(), data }
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &RatVector) -> RatVector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), &v.0)).collect()
    }

    pub fn mul_mat(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RatMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Exact rank by fraction-based Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        echelon(&mut rows, self.cols).len()
    }

    /// Indices of a maximal linearly independent subset of rows, chosen greedily
    /// in index order.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut chosen = Vec::new();
        for i in 0..self.rows {
            let mut r = self.row(i).to_vec();
            if reduce_against(&mut r, &basis, &pivots) {
                let p = r.iter().position(|x| !x.is_zero()).unwrap();
                normalize_row(&mut r, p);
                basis.push(r);
                pivots.push(p);
                chosen.push(i);
            }
        }
        chosen
    }

    /// Returns the unique solution `z` of `M z = rhs` with `z_j = 0` for every
    /// `j` in `forced_zero`.
    pub fn solve_unique(&self, rhs: &RatVector, forced_zero: &[usize]) -> Result<RatVector, SolveError> {
        if rhs.len() != self.rows {
            return Err(SolveError::DimensionMismatch(format!(
                "matrix has {} rows but right-hand side has {} entries",
                self.rows,
                rhs.len()
            )));
        }
        if let Some(&j) = forced_zero.iter().find(|&&j| j >= self.cols) {
            return Err(SolveError::DimensionMismatch(format!("forced-zero index {j} out of range")));
        }
        let free: Vec<usize> = (0..self.cols).filter(|j| !forced_zero.contains(j)).collect();
        let reduced = self.select_cols(&free);
        let nf = free.len();
        let mut aug: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| {
                let mut r = reduced.row(i).to_vec();
                r.push(rhs[i].clone());
                r
            })
            .collect();
        let piv = echelon(&mut aug, nf);
        for r in &aug {
            if r[..nf].iter().all(Rational::is_zero) && !r[nf].is_zero() {
                return Err(SolveError::Inconsistent);
            }
        }
        if piv.len() < nf {
            return Err(SolveError::Underdetermined);
        }
        let mut z = RatVector::zeros(self.cols);
        // Reduced row echelon: each pivot row reads z_p = rhs.
        for (k, &p) in piv.iter().enumerate() {
            z[free[p]] = aug[k][nf].clone();
        }
        Ok(z)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

fn normalize_row(r: &mut [Rational], p: usize) {
    let inv = r[p].recip().expect("pivot is nonzero");
    for x in r.iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
}

/// Eliminates `r` against normalized basis rows; true if something nonzero remains.
fn reduce_against(r: &mut [Rational], basis: &[Vec<Rational>], pivots: &[usize]) -> bool {
    for (b, &p) in basis.iter().zip(pivots) {
        if r[p].is_zero() {
            continue;
        }
        let f = r[p].clone();
        for (x, y) in r.iter_mut().zip(b) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
    r.iter().any(|x| !x.is_zero())
}

/// In-place reduced row echelon form over the first `ncols` columns.
/// Returns the pivot columns; pivot rows are moved to the top in order.
fn echelon(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().unwrap();
        let norm: Vec<Rational> = rows[r]
            .iter().map(|x| if x.is_zero() { x.clone() } else { x * &inv }).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&norm) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = norm;
        pivots.push(c);
        r += 1;
    }
    pivots
}
