use crate::linalg::{normalize, Rational, SparseVec};

/// Bilinear map on basis indices: `entry(i, j)` is the image of
/// (e_i, f_j) as a sparse vector over the output basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    left: usize,
    right: usize,
    out: usize,
    entries: Vec<SparseVec>,
}

impl Table {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Table {
            left,
            right,
            out,
            entries: vec![Vec::new(); left * right],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn entry(&self, i: usize, j: usize) -> &SparseVec {
        &self.entries[i * self.right + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SparseVec) {
        debug_assert!(v.iter().all(|(k, _)| *k < self.out));
        self.entries[i * self.right + j] = normalize(v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    /// Bilinear extension to sparse vectors.
    pub fn apply(&self, a: &[(usize, Rational)], b: &[(usize, Rational)]) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                acc.extend(self.entry(*i, *j).iter().map(|(k, c)| (*k, c * &xy)));
            }
        }
        normalize(acc)
    }

    /// Swaps the two arguments: `t.entry(j, i) = self.entry(i, j)`.
    pub fn flipped(&self) -> Table {
        let mut t = Table::zero(self.right, self.left, self.out);
        for i in 0..self.left {
            for j in 0..self.right {
                t.entries[j * self.left + i] = self.entry(i, j).clone();
            }
        }
        t
    }

    /// For each output index k, the pairs (i, j, c) with c = coefficient of
    /// e_k in entry(i, j). Used to pull back along products.
    pub fn preimages(&self) -> Vec<Vec<(usize, usize, Rational)>> {
        let mut out = vec![Vec::new(); self.out];
        for i in 0..self.left {
            for j in 0..self.right {
                for (k, c) in self.entry(i, j) {
                    out[*k].push((i, j, c.clone()));
                }
            }
        }
        out
    }
}

pub fn unit(i: usize) -> SparseVec {
    vec![(i, Rational::from(1))]
}
