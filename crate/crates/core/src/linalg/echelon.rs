//! Exact elimination. Large matrices are split into the connected components
//! of their row/column incidence graph and each block is eliminated on its
//! own; blocks smaller than 64×64 go through a dense Gauss–Jordan routine.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use malachite_base::num::basic::traits::Zero;

use super::matrix::{Matrix, SparseVec};
use super::rational::{bit_cost, Rational};
use crate::par;

const DENSE_LIMIT: usize = 64;

/// Reduced row echelon form: each row has a 1 at its pivot column and zeros
/// at every other pivot column. Rows are sorted by pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    pub cols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

/// Incremental sparse echelon basis. New rows are reduced against the stored
/// rows in insertion order; the pivot of a new row is its entry of smallest
/// bit cost, ties going to the lowest column.
pub(crate) struct Echelon {
    cols: usize,
    rows: Vec<SparseVec>,
    pivot_cols: Vec<usize>,
    pivot_of: HashMap<usize, usize>,
    scratch: Vec<Rational>,
    marked: Vec<bool>,
    touched: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            pivot_of: HashMap::new(),
            scratch: vec![Rational::ZERO; cols],
            marked: vec![false; cols],
            touched: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn load(&mut self, row: &[(usize, Rational)], heap: &mut BinaryHeap<Reverse<usize>>) {
        for (j, v) in row {
            if !self.marked[*j] {
                self.marked[*j] = true;
                self.touched.push(*j);
            }
            self.scratch[*j] += v;
            if let Some(&p) = self.pivot_of.get(j) {
                heap.push(Reverse(p));
            }
        }
    }

    fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::new();
        for &j in &self.touched {
            self.marked[j] = false;
            let v = std::mem::replace(&mut self.scratch[j], Rational::ZERO);
            if v != 0u32 {
                out.push((j, v));
            }
        }
        self.touched.clear();
        out
    }

    /// Reduces `row` against every stored row.
    pub(crate) fn reduce(&mut self, row: &[(usize, Rational)]) -> SparseVec {
        let mut heap = BinaryHeap::new();
        self.load(row, &mut heap);
        while let Some(Reverse(p)) = heap.pop() {
            let c = self.pivot_cols[p];
            if self.scratch[c] == 0u32 {
                continue;
            }
            let coef = std::mem::replace(&mut self.scratch[c], Rational::ZERO);
            for (j, w) in &self.rows[p] {
                if *j == c {
                    continue;
                }
                if !self.marked[*j] {
                    self.marked[*j] = true;
                    self.touched.push(*j);
                }
                let was_zero = self.scratch[*j] == 0u32;
                self.scratch[*j] -= &coef * w;
                if was_zero {
                    if let Some(&q) = self.pivot_of.get(j) {
                        heap.push(Reverse(q));
                    }
                }
            }
        }
        self.drain()
    }

    /// Returns true when the row was independent of the stored rows.
    pub(crate) fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        let reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        let (k, _) = reduced
            .iter()
            .enumerate()
            .min_by_key(|(_, (j, v))| (bit_cost(v), *j))
            .expect("nonempty");
        let (pc, pv) = reduced[k].clone();
        let normalized: SparseVec = reduced.into_iter().map(|(j, v)| (j, v / &pv)).collect();
        self.pivot_of.insert(pc, self.rows.len());
        self.pivot_cols.push(pc);
        self.rows.push(normalized);
        true
    }

    /// Back-substitution into reduced row echelon form.
    pub(crate) fn into_rref(mut self) -> Rref {
        let n = self.rows.len();
        for p in (0..n).rev() {
            let row = std::mem::take(&mut self.rows[p]);
            let needs = row
                .iter()
                .any(|(j, _)| *j != self.pivot_cols[p] && self.pivot_of.contains_key(j));
            if !needs {
                self.rows[p] = row;
                continue;
            }
            for (j, v) in &row {
                if !self.marked[*j] {
                    self.marked[*j] = true;
                    self.touched.push(*j);
                }
                self.scratch[*j] += v;
            }
            for (j, v) in &row {
                if *j == self.pivot_cols[p] {
                    continue;
                }
                if let Some(&q) = self.pivot_of.get(j) {
                    // row q is already fully reduced
                    for (k, w) in &self.rows[q] {
                        if !self.marked[*k] {
                            self.marked[*k] = true;
                            self.touched.push(*k);
                        }
                        self.scratch[*k] -= v * w;
                    }
                }
            }
            self.rows[p] = self.drain();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&p| self.pivot_cols[p]);
        Rref {
            cols: self.cols,
            pivots: order.iter().map(|&p| self.pivot_cols[p]).collect(),
            rows: order.into_iter().map(|p| std::mem::take(&mut self.rows[p])).collect(),
        }
    }
}

/// Dense Gauss–Jordan with the global pivot rule: smallest bit cost, ties
/// broken by lowest (row, column).
fn dense_rref(m: &Matrix) -> Rref {
    let cols = m.cols();
    let mut a = m.to_dense();
    let mut used = vec![false; a.len()];
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate() {
            if used[i] {
                continue;
            }
            for (j, v) in row.iter().enumerate() {
                if *v != 0u32 {
                    let key = (bit_cost(v), i, j);
                    if best.map_or(true, |b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        used[pi] = true;
        let pv = a[pi][pj].clone();
        for v in a[pi].iter_mut() {
            *v /= &pv;
        }
        let prow = a[pi].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == pi || row[pj] == 0u32 {
                continue;
            }
            let f = row[pj].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if *y != 0u32 {
                    *x -= &f * y;
                }
            }
        }
        pivots.push((pj, pi));
    }
    pivots.sort();
    Rref {
        cols,
        pivots: pivots.iter().map(|p| p.0).collect(),
        rows: pivots
            .iter()
            .map(|&(_, i)| {
                a[i].iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0u32)
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect(),
    }
}

/// RREF of the rows of `m`, without block splitting.
pub fn rref(m: &Matrix) -> Rref {
    if m.rows() < DENSE_LIMIT && m.cols() < DENSE_LIMIT {
        return dense_rref(m);
    }
    let mut e = Echelon::new(m.cols());
    for row in m.row_vecs() {
        e.insert(row);
    }
    e.into_rref()
}

struct Block {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Connected components of the bipartite row/column graph. Columns touched
/// by no row are left out.
fn blocks(m: &Matrix) -> Vec<Block> {
    let mut parent: Vec<usize> = (0..m.cols()).collect();
    for row in m.row_vecs() {
        if let Some((first, _)) = row.first() {
            let a = find(&mut parent, *first);
            for (j, _) in &row[1..] {
                let b = find(&mut parent, *j);
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut out: Vec<Block> = Vec::new();
    for (i, row) in m.row_vecs().iter().enumerate() {
        if let Some((first, _)) = row.first() {
            let r = find(&mut parent, *first);
            let k = *index.entry(r).or_insert_with(|| {
                out.push(Block {
                    rows: Vec::new(),
                    cols: Vec::new(),
                });
                out.len() - 1
            });
            out[k].rows.push(i);
        }
    }
    let mut seen = vec![false; m.cols()];
    for row in m.row_vecs() {
        for (j, _) in row {
            if !seen[*j] {
                seen[*j] = true;
                let r = find(&mut parent, *j);
                out[index[&r]].cols.push(*j);
            }
        }
    }
    for b in &mut out {
        b.cols.sort_unstable();
    }
    out
}

fn block_matrix(m: &Matrix, b: &Block) -> Matrix {
    m.select_rows(&b.rows).select_cols(&b.cols)
}

pub fn rank(m: &Matrix) -> usize {
    if m.rows() < DENSE_LIMIT && m.cols() < DENSE_LIMIT {
        return dense_rref(m).pivots.len();
    }
    let bs = blocks(m);
    par::map(&bs, |b| {
        let sub = block_matrix(m, b);
        let sub = if sub.rows() > sub.cols() { sub.transpose() } else { sub };
        if sub.rows() < DENSE_LIMIT && sub.cols() < DENSE_LIMIT {
            return dense_rref(&sub).pivots.len();
        }
        let mut e = Echelon::new(sub.cols());
        for row in sub.row_vecs() {
            e.insert(row);
            if e.rank() == sub.cols() {
                break;
            }
        }
        e.rank()
    })
    .into_iter()
    .sum()
}

/// Kernel vectors of an RREF, one per free column, with a 1 in that column.
fn kernel_from_rref(r: &Rref) -> Vec<(usize, SparseVec)> {
    let mut is_pivot = vec![false; r.cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut slot = vec![usize::MAX; r.cols];
    let mut out: Vec<(usize, SparseVec)> = Vec::new();
    for f in 0..r.cols {
        if !is_pivot[f] {
            slot[f] = out.len();
            out.push((f, vec![(f, Rational::from(1))]));
        }
    }
    for (pc, row) in r.pivots.iter().zip(&r.rows) {
        for (j, v) in row {
            if !is_pivot[*j] {
                out[slot[*j]].1.push((*pc, -v));
            }
        }
    }
    for (_, v) in &mut out {
        v.sort_by_key(|e| e.0);
    }
    out
}

/// Null space of `m` as a subspace whose coordinate columns are the free
/// columns of the elimination.
pub fn kernel(m: &Matrix) -> Subspace {
    let cols = m.cols();
    if m.rows() < DENSE_LIMIT && cols < DENSE_LIMIT {
        let ker = kernel_from_rref(&dense_rref(m));
        return Subspace::from_normalized(cols, ker);
    }
    let bs = blocks(m);
    let mut touched = vec![false; cols];
    for b in &bs {
        for &j in &b.cols {
            touched[j] = true;
        }
    }
    let parts = par::map(&bs, |b| {
        let sub = block_matrix(m, b);
        kernel_from_rref(&rref(&sub))
            .into_iter()
            .map(|(f, v)| (b.cols[f], v.into_iter().map(|(j, x)| (b.cols[j], x)).collect::<SparseVec>()))
            .collect::<Vec<_>>()
    });
    let mut all: Vec<(usize, SparseVec)> = parts.into_iter().flatten().collect();
    all.extend((0..cols).filter(|&j| !touched[j]).map(|j| (j, vec![(j, Rational::from(1))])));
    all.sort_by_key(|e| e.0);
    Subspace::from_normalized(cols, all)
}

pub fn kernel_basis(m: &Matrix) -> Matrix {
    kernel(m).basis_matrix()
}

pub fn eigenspace(m: &Matrix, lambda: &Rational) -> Subspace {
    kernel(&m.shift_diagonal(lambda))
}

pub fn eigenspace_basis(m: &Matrix, lambda: &Rational) -> Matrix {
    eigenspace(m, lambda).basis_matrix()
}

/// Dimension of the span of a set of vectors in an ambient space.
pub fn span_dim(ambient: usize, vectors: &[SparseVec]) -> usize {
    rank(&Matrix::from_sparse_rows(ambient, vectors.to_vec()))
}

/// A subspace of ℚ^ambient with a normalized basis: basis vector k has a 1 at
/// `coords[k]` and a 0 at every other coordinate column. Coordinates of a
/// member vector are read off at those columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    coords: Vec<usize>,
    vectors: Vec<SparseVec>,
}

impl Subspace {
    fn from_normalized(ambient: usize, pairs: Vec<(usize, SparseVec)>) -> Self {
        let (coords, vectors) = pairs.into_iter().unzip();
        Subspace {
            ambient,
            coords,
            vectors,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            coords: Vec::new(),
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            coords: (0..ambient).collect(),
            vectors: (0..ambient).map(|j| vec![(j, Rational::from(1))]).collect(),
        }
    }

    /// Span of arbitrary vectors, normalized through RREF.
    pub fn span(ambient: usize, vectors: &[SparseVec]) -> Self {
        let m = Matrix::from_sparse_rows(ambient, vectors.to_vec());
        let bs = blocks(&m);
        let parts = par::map(&bs, |b| {
            let r = rref(&block_matrix(&m, b));
            r.pivots
                .iter()
                .zip(r.rows)
                .map(|(p, row)| (b.cols[*p], row.into_iter().map(|(j, x)| (b.cols[j], x)).collect::<SparseVec>()))
                .collect::<Vec<_>>()
        });
        let mut all: Vec<(usize, SparseVec)> = parts.into_iter().flatten().collect();
        all.sort_by_key(|e| e.0);
        Self::from_normalized(ambient, all)
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    /// Columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_sparse_cols(self.ambient, &self.vectors)
    }

    /// Ambient columns not used as coordinates; the standard vectors there
    /// represent a basis of the quotient.
    pub fn complement(&self) -> Vec<usize> {
        let mut is = vec![false; self.ambient];
        for &c in &self.coords {
            is[c] = true;
        }
        (0..self.ambient).filter(|&j| !is[j]).collect()
    }

    fn coord_lookup(&self) -> HashMap<usize, usize> {
        self.coords.iter().enumerate().map(|(k, &c)| (c, k)).collect()
    }

    /// `v − Σ_k v[coords[k]]·b_k`; zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> SparseVec {
        self.reduce_with(&self.coord_lookup(), v)
    }

    fn reduce_with(&self, lookup: &HashMap<usize, usize>, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc: SparseVec = v.to_vec();
        for (j, x) in v {
            if let Some(&k) = lookup.get(j) {
                acc.extend(self.vectors[k].iter().map(|(i, y)| (*i, -(x * y))));
            }
        }
        super::matrix::normalize(acc)
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is not a member.
    pub fn coordinates(&self, v: &[(usize, Rational)]) -> Option<SparseVec> {
        let lookup = self.coord_lookup();
        if !self.reduce_with(&lookup, v).is_empty() {
            return None;
        }
        let mut out: SparseVec = v
            .iter()
            .filter_map(|(j, x)| lookup.get(j).map(|&k| (k, x.clone())))
            .collect();
        out.sort_by_key(|e| e.0);
        Some(out)
    }

    /// Coordinates of many vectors at once, as the columns of a matrix;
    /// `None` if any vector is outside the subspace.
    pub fn coordinate_matrix(&self, columns: &[SparseVec]) -> Option<Matrix> {
        let lookup = self.coord_lookup();
        let coords: Vec<Option<SparseVec>> = par::map(columns, |v| {
            if !self.reduce_with(&lookup, v).is_empty() {
                return None;
            }
            let mut out: SparseVec = v
                .iter()
                .filter_map(|(j, x)| lookup.get(j).map(|&k| (k, x.clone())))
                .collect();
            out.sort_by_key(|e| e.0);
            Some(out)
        });
        let coords: Option<Vec<SparseVec>> = coords.into_iter().collect();
        Some(Matrix::from_sparse_cols(self.dim(), &coords?))
    }

    /// `reduce` over many vectors, sharing one coordinate lookup.
    pub fn reduce_all(&self, vs: &[SparseVec]) -> Vec<SparseVec> {
        let lookup = self.coord_lookup();
        par::map(vs, |v| self.reduce_with(&lookup, v))
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    fn big_diag(n: usize) -> Matrix {
        Matrix::from_triplets(n, n, (0..n).map(|i| (i, i, q(i as i64 % 3))))
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&Matrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&Matrix::identity(3)), 3);
        assert_eq!(rank(&Matrix::zeros(0, 5)), 0);
    }

    #[test]
    fn sparse_path_agrees_with_dense() {
        let m = big_diag(100);
        assert_eq!(rank(&m), 66);
        assert_eq!(kernel(&m).dim(), 34);
    }

    #[test]
    fn kernels() {
        assert_eq!(kernel(&Matrix::identity(2)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(2, 3)).dim(), 3);
        let k = kernel(&Matrix::from_i64(&[&[1, 1], &[1, 1]]));
        assert_eq!(k.dim(), 1);
        let v = &k.vectors()[0];
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].1, -v[1].1.clone());
    }

    #[test]
    fn subspace_membership_and_quotient() {
        let s = Subspace::span(3, &[vec![(0, q(2)), (1, q(2))], vec![(0, q(1)), (1, q(1))]]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[(0, q(5)), (1, q(5))]));
        assert!(!s.contains(&[(0, q(1))]));
        assert_eq!(s.complement().len(), 2);
        let c = s.coordinates(&[(0, q(3)), (1, q(3))]).unwrap();
        assert_eq!(c, vec![(0, q(3))]);
    }

    #[test]
    fn echelon_back_substitution() {
        // rows chosen so that later pivots appear in earlier rows
        let m = Matrix::from_i64(&[&[1, 3, 0, 5], &[0, 1, 1, 0], &[2, 0, 7, 1]]);
        let mut e = Echelon::new(4);
        for r in m.row_vecs() {
            e.insert(r);
        }
        let r = e.into_rref();
        let d = dense_rref(&m);
        assert_eq!(r.pivots.len(), 3);
        // kernels agree up to the choice of free column, so compare via membership
        let ks = kernel_from_rref(&r);
        let kd = kernel_from_rref(&d);
        assert_eq!(ks.len(), 1);
        assert_eq!(kd.len(), 1);
        for (_, v) in ks.iter().chain(&kd) {
            assert!(m.mul_vec(v).is_empty());
        }
    }
}
