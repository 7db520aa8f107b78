use std::fmt;

use super::rational::{fmt_rational, Rational};
use crate::error::{Error, Result};

/// Sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Sparse row-major matrix over ℚ. Absent entries are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::from(1))
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        if *c != 0u32 {
            for i in 0..n {
                m.data[i].push((i, c.clone()));
            }
        }
        m
    }

    /// Accumulates triplets; repeated positions are summed and zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry ({i},{j}) out of bounds {rows}×{cols}");
            data[i].push((j, v));
        }
        for row in &mut data {
            *row = normalize(std::mem::take(row));
        }
        Matrix { rows, cols, data }
    }

    /// Builds from already sorted, zero-free rows.
    pub fn from_sparse_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data
            .iter()
            .all(|r| r.windows(2).all(|w| w[0].0 < w[1].0) && r.iter().all(|(j, v)| *j < cols && *v != 0u32)));
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Builds from sparse columns (each sorted, zero-free).
    pub fn from_sparse_cols(rows: usize, columns: &[SparseVec]) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                data[*i].push((j, v.clone()));
            }
        }
        Matrix {
            rows,
            cols: columns.len(),
            data,
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0u32)
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        if dense.is_empty() {
            return Self::zeros(0, 0);
        }
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Rational::from(0),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::from(0); self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Sparse columns of the matrix.
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = crate::par::map(&self.data, |row| {
            let mut acc: Vec<(usize, Rational)> = Vec::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    acc.push((*j, a * b));
                }
            }
            normalize(acc)
        });
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut dense: std::collections::BTreeMap<usize, Rational> = Default::default();
        let vd: std::collections::HashMap<usize, &Rational> = v.iter().map(|(i, x)| (*i, x)).collect();
        for (i, row) in self.data.iter().enumerate() {
            let mut s = Rational::from(0);
            for (j, a) in row {
                if let Some(x) = vd.get(j) {
                    s += a * *x;
                }
            }
            if s != 0u32 {
                dense.insert(i, s);
            }
        }
        dense.into_iter().collect()
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Matrix, negate: bool) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}×{} and {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut acc = a.clone();
                acc.extend(b.iter().map(|(j, v)| (*j, if negate { -v } else { v.clone() })));
                normalize(acc)
            })
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        if *c == 0u32 {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
                .collect(),
        }
    }

    /// `self − λ·I` for square matrices.
    pub fn shift_diagonal(&self, lambda: &Rational) -> Matrix {
        assert_eq!(self.rows, self.cols, "shift_diagonal needs a square matrix");
        self.sub(&Matrix::scalar(self.rows, lambda)).expect("square shapes agree")
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            data: rows.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    /// Keeps the listed columns, renumbered in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut map = vec![usize::MAX; self.cols];
        for (new, &old) in cols.iter().enumerate() {
            map[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut out: SparseVec = r
                    .iter()
                    .filter(|(j, _)| map[*j] != usize::MAX)
                    .map(|(j, v)| (map[*j], v.clone()))
                    .collect();
                out.sort_by_key(|e| e.0);
                out
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Columns side by side.
    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Shape("hstack of matrices with different row counts".into()));
        }
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        let mut offset = 0;
        for b in blocks {
            for (i, row) in b.data.iter().enumerate() {
                data[i].extend(row.iter().map(|(j, v)| (j + offset, v.clone())));
            }
            offset += b.cols;
        }
        Ok(Matrix {
            rows,
            cols: offset,
            data,
        })
    }
}

/// Sorts by index, sums duplicates and drops zeros.
pub fn normalize(mut v: SparseVec) -> SparseVec {
    if v.windows(2).all(|w| w[0].0 < w[1].0) {
        v.retain(|(_, x)| *x != 0u32);
        return v;
    }
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (j, x) in v {
        match out.last_mut() {
            Some((k, y)) if *k == j => *y += x,
            _ => out.push((j, x)),
        }
    }
    out.retain(|(_, x)| *x != 0u32);
    out
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}×{} [", self.rows, self.cols)?;
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                write!(f, " ({i},{j})={}", fmt_rational(v))?;
            }
        }
        write!(f, " ]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    #[test]
    fn triplets_accumulate() {
        let m = Matrix::from_triplets(2, 2, [(0, 1, q(2)), (0, 1, q(-2)), (1, 0, q(3)), (1, 0, q(1))]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), q(4));
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_i64(&[&[1, -2], &[0, 1]]);
        assert_eq!(a.mul(&b).unwrap(), Matrix::identity(2));
        assert_eq!(a.transpose().get(1, 0), q(2));
        assert!(a.mul(&Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn select_and_stack() {
        let a = Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        let s = a.select_cols(&[2, 0]);
        assert_eq!(s, Matrix::from_i64(&[&[3, 1], &[6, 4]]));
        let h = Matrix::hstack(&[&s, &a]).unwrap();
        assert_eq!(h.cols(), 5);
        assert_eq!(h.get(1, 4), q(6));
    }
}
