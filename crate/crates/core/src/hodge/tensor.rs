//! The one map behind the bar, Hochschild, cotangent and Connes complexes:
//! N ⊗ A^{⊗k} → N ⊗ A^{⊗(k−1)}, built from
//!
//! | term  | image of n ⊗ a₁ ⊗ … ⊗ a_k        |
//! |-------|----------------------------------|
//! | first | (n·a₁) ⊗ a₂ ⊗ … ⊗ a_k            |
//! | merge | n ⊗ … ⊗ a_i a_{i+1} ⊗ …  (i < k) |
//! | last  | (a_k·n) ⊗ a₁ ⊗ … ⊗ a_{k−1}       |
//! | wrap  | n ⊗ a_k a₁ ⊗ a₂ ⊗ … ⊗ a_{k−1}    |
//!
//! each with its own sign.

use super::basis::PairBasis;
use crate::algebra::Table;
use crate::linalg::{Matrix, Rational};
use crate::par;

pub(crate) struct TensorTerms<'a> {
    pub mul: &'a Table,
    /// Right action n·a, indexed (module, algebra).
    pub first: Option<(&'a Table, i64)>,
    /// Signs of the merges at positions 1..k−1.
    pub merge: Vec<i64>,
    /// Left action a·n, indexed (algebra, module).
    pub last: Option<(&'a Table, i64)>,
    pub wrap: Option<i64>,
}

pub(crate) fn tensor_map(terms: &TensorTerms, src: &PairBasis, tgt: &PairBasis) -> Matrix {
    let cols: Vec<Vec<(usize, usize, Rational)>> = par::map_range(src.len(), |j| {
        let (t, m) = src.pair(j);
        let k = t.len();
        let mut out = Vec::new();
        let mut push = |w: &[u16], m: usize, c: Rational| {
            let i = tgt.index(w, m).expect("differential stays inside the weight window");
            out.push((i, j, c));
        };
        if k == 0 {
            return Vec::new();
        }
        if let Some((r, s)) = terms.first {
            for (m2, c) in r.entry(m, t[0] as usize) {
                push(&t[1..], *m2, c * Rational::from(s));
            }
        }
        let mut w: Vec<u16> = Vec::with_capacity(k);
        for i in 0..k - 1 {
            let s = terms.merge[i];
            if s == 0 {
                continue;
            }
            for (x, c) in terms.mul.entry(t[i] as usize, t[i + 1] as usize) {
                w.clear();
                w.extend_from_slice(&t[..i]);
                w.push(*x as u16);
                w.extend_from_slice(&t[i + 2..]);
                push(&w, m, c * Rational::from(s));
            }
        }
        if let Some((l, s)) = terms.last {
            for (m2, c) in l.entry(t[k - 1] as usize, m) {
                push(&t[..k - 1], *m2, c * Rational::from(s));
            }
        }
        if let (Some(s), true) = (terms.wrap, k >= 2) {
            for (x, c) in terms.mul.entry(t[k - 1] as usize, t[0] as usize) {
                w.clear();
                w.push(*x as u16);
                w.extend_from_slice(&t[1..k - 1]);
                push(&w, m, c * Rational::from(s));
            }
        }
        out
    });
    Matrix::from_triplets(tgt.len(), src.len(), cols.into_iter().flatten())
}
