use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{eigenspace, rank, Matrix, Rational, SparseVec, Subspace};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Homological,
    Cohomological,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Homological => Direction::Cohomological,
            Direction::Cohomological => Direction::Homological,
        }
    }

    /// Degree shift of the differential: −1 or +1.
    pub fn step(self) -> i64 {
        match self {
            Direction::Homological => -1,
            Direction::Cohomological => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Homological => "homological",
            Direction::Cohomological => "cohomological",
        }
    }
}

/// A bounded complex of finite-dimensional ℚ-vector spaces in degrees
/// `min_degree ..= max_degree`. `diffs[k]` is the differential leaving
/// degree `min_degree + k`; its row count is the dimension of the target,
/// or 0 when the target lies outside the range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    direction: Direction,
    min_degree: i64,
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    weights: Option<Vec<Vec<i64>>>,
    diffs: Vec<Matrix>,
}

impl ChainComplex {
    /// Checks shapes and d∘d = 0. Labels default to `e1, e2, …`.
    pub fn new(direction: Direction, min_degree: i64, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        let labels = dims.iter().map(|&d| (1..=d).map(|i| format!("e{i}")).collect()).collect();
        let c = ChainComplex {
            direction,
            min_degree,
            dims,
            labels,
            weights: None,
            diffs,
        };
        c.check_shapes()?;
        c.check_square_zero()?;
        Ok(c)
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Result<Self> {
        if labels.len() != self.dims.len() || labels.iter().zip(&self.dims).any(|(l, d)| l.len() != *d) {
            return Err(Error::Shape("label lists do not match the degree dimensions".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_weights(mut self, weights: Vec<Vec<i64>>) -> Result<Self> {
        if weights.len() != self.dims.len() || weights.iter().zip(&self.dims).any(|(w, d)| w.len() != *d) {
            return Err(Error::Shape("weight lists do not match the degree dimensions".into()));
        }
        self.weights = Some(weights);
        Ok(self)
    }

    fn check_shapes(&self) -> Result<()> {
        if self.diffs.len() != self.dims.len() {
            return Err(Error::Shape(format!(
                "{} degrees but {} differentials",
                self.dims.len(),
                self.diffs.len()
            )));
        }
        for k in 0..self.dims.len() {
            let n = self.degree_at(k);
            let d = &self.diffs[k];
            let want_rows = self.index_of(n + self.direction.step()).map_or(0, |t| self.dims[t]);
            if d.cols() != self.dims[k] || d.rows() != want_rows {
                return Err(Error::Shape(format!(
                    "differential from degree {n} is {}×{}, expected {}×{}",
                    d.rows(),
                    d.cols(),
                    want_rows,
                    self.dims[k]
                )));
            }
        }
        Ok(())
    }

    fn check_square_zero(&self) -> Result<()> {
        let bad = par::find_first(self.dims.len(), |k| {
            let n = self.degree_at(k);
            let t = self.index_of(n + self.direction.step())?;
            let dd = self.diffs[t].mul(&self.diffs[k]).expect("shapes checked");
            (!dd.is_zero()).then_some(n)
        });
        match bad {
            Some(degree) => Err(Error::NotAComplex { degree }),
            None => Ok(()),
        }
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.dims.len()).map(|k| self.degree_at(k))
    }

    fn degree_at(&self, k: usize) -> i64 {
        self.min_degree + k as i64
    }

    fn index_of(&self, n: i64) -> Option<usize> {
        let k = n - self.min_degree;
        (k >= 0 && (k as usize) < self.dims.len()).then_some(k as usize)
    }

    pub fn dim(&self, n: i64) -> usize {
        self.index_of(n).map_or(0, |k| self.dims[k])
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.degrees().map(|n| (n, self.dim(n))).collect()
    }

    pub fn labels(&self, n: i64) -> &[String] {
        self.index_of(n).map_or(&[], |k| &self.labels[k])
    }

    pub fn weights(&self, n: i64) -> Option<&[i64]> {
        let k = self.index_of(n)?;
        self.weights.as_ref().map(|w| w[k].as_slice())
    }

    pub fn has_weights(&self) -> bool {
        self.weights.is_some()
    }

    /// Differential leaving degree n (empty matrix outside the range).
    pub fn differential(&self, n: i64) -> Matrix {
        match self.index_of(n) {
            Some(k) => self.diffs[k].clone(),
            None => Matrix::zeros(self.dim(n + self.direction.step()), 0),
        }
    }

    pub(crate) fn differential_ref(&self, n: i64) -> Option<&Matrix> {
        self.index_of(n).map(|k| &self.diffs[k])
    }

    /// Degree whose differential lands in degree n.
    pub fn incoming_degree(&self, n: i64) -> i64 {
        n - self.direction.step()
    }

    pub fn target_degree(&self, n: i64) -> i64 {
        n + self.direction.step()
    }

    pub fn ranks(&self) -> BTreeMap<i64, usize> {
        let r = par::map(&self.diffs, rank);
        self.degrees().zip(r).collect()
    }

    /// dim H_n = dim C_n − rank(d out of n) − rank(d into n).
    pub fn homology_dims(&self) -> BTreeMap<i64, usize> {
        let r = self.ranks();
        self.degrees()
            .map(|n| {
                let out = r[&n];
                let inc = r.get(&self.incoming_degree(n)).copied().unwrap_or(0);
                (n, self.dim(n) - out - inc)
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|n| if n.rem_euclid(2) == 0 { self.dim(n) as i64 } else { -(self.dim(n) as i64) })
            .sum()
    }

    /// Hom(−, ℚ): same degrees, reversed direction, transposed differentials.
    /// Labels and weights carry over to the dual basis.
    pub fn dual(&self) -> ChainComplex {
        let dir = self.direction.flip();
        let diffs = self
            .degrees()
            .map(|n| {
                // in the dual the differential leaves n towards n − step
                let from = n - self.direction.step();
                match self.index_of(from) {
                    Some(k) => self.diffs[k].transpose(),
                    None => Matrix::zeros(0, self.dim(n)),
                }
            })
            .collect();
        ChainComplex {
            direction: dir,
            min_degree: self.min_degree,
            dims: self.dims.clone(),
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            diffs,
        }
    }

    /// Shifts every degree by `by`.
    pub fn shifted(&self, by: i64) -> ChainComplex {
        let mut c = self.clone();
        c.min_degree += by;
        c
    }

    /// Keeps degrees `lo..=hi` (differentials leaving the window are dropped).
    pub fn truncated(&self, lo: i64, hi: i64) -> Result<ChainComplex> {
        let lo = lo.max(self.min_degree);
        let hi = hi.min(self.max_degree());
        if lo > hi {
            return Err(Error::InvalidArgument("empty degree window".into()));
        }
        let ks: Vec<usize> = (lo..=hi).map(|n| self.index_of(n).expect("in range")).collect();
        let diffs = ks
            .iter()
            .map(|&k| {
                let t = self.degree_at(k) + self.direction.step();
                if (lo..=hi).contains(&t) {
                    self.diffs[k].clone()
                } else {
                    Matrix::zeros(0, self.dims[k])
                }
            })
            .collect();
        Ok(ChainComplex {
            direction: self.direction,
            min_degree: lo,
            dims: ks.iter().map(|&k| self.dims[k]).collect(),
            labels: ks.iter().map(|&k| self.labels[k].clone()).collect(),
            weights: self.weights.as_ref().map(|w| ks.iter().map(|&k| w[k].clone()).collect()),
            diffs,
        })
    }

    /// Direct sum of two complexes with the same direction.
    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        if self.direction != other.direction {
            return Err(Error::InvalidArgument("direct sum of complexes with different directions".into()));
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        let mut dims = Vec::new();
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        for n in lo..=hi {
            dims.push(self.dim(n) + other.dim(n));
            let mut l = self.labels(n).to_vec();
            l.extend_from_slice(other.labels(n));
            labels.push(l);
            let mut w: Vec<i64> = self.weights(n).map_or(vec![0; self.dim(n)], <[i64]>::to_vec);
            w.extend(other.weights(n).map_or(vec![0; other.dim(n)], <[i64]>::to_vec));
            weights.push(w);
        }
        let step = self.direction.step();
        let diffs = (lo..=hi)
            .map(|n| {
                let t = n + step;
                let rows = if (lo..=hi).contains(&t) { self.dim(t) + other.dim(t) } else { 0 };
                let mut entries = Vec::new();
                if let Some(d) = self.differential_ref(n) {
                    for (i, row) in d.row_vecs().iter().enumerate() {
                        entries.extend(row.iter().map(|(j, v)| (i, *j, v.clone())));
                    }
                }
                if let Some(d) = other.differential_ref(n) {
                    let (ro, co) = (self.dim(t), self.dim(n));
                    for (i, row) in d.row_vecs().iter().enumerate() {
                        entries.extend(row.iter().map(|(j, v)| (i + ro, j + co, v.clone())));
                    }
                }
                Matrix::from_triplets(rows, self.dim(n) + other.dim(n), entries)
            })
            .collect();
        let c = ChainComplex::new(self.direction, lo, dims, diffs)?.with_labels(labels)?;
        if self.has_weights() || other.has_weights() {
            c.with_weights(weights)
        } else {
            Ok(c)
        }
    }

    /// Restriction to subspaces `bases[k]` of each degree, which must be
    /// carried into each other by the differential.
    pub fn subcomplex(&self, bases: &[Subspace]) -> Result<ChainComplex> {
        if bases.len() != self.dims.len() || bases.iter().zip(&self.dims).any(|(b, d)| b.ambient() != *d) {
            return Err(Error::Shape("subspace list does not match the complex".into()));
        }
        let ks: Vec<usize> = (0..self.dims.len()).collect();
        let diffs: Vec<Result<Matrix>> = par::map(&ks, |&k| {
            let n = self.degree_at(k);
            let b = &bases[k];
            let images: Vec<SparseVec> = b.vectors().iter().map(|v| self.diffs[k].mul_vec(v)).collect();
            match self.index_of(n + self.direction.step()) {
                None => Ok(Matrix::zeros(0, b.dim())),
                Some(t) => bases[t]
                    .coordinate_matrix(&images)
                    .ok_or(Error::NotInvariant { degree: n }),
            }
        });
        let diffs: Vec<Matrix> = diffs.into_iter().collect::<Result<_>>()?;
        let dims: Vec<usize> = bases.iter().map(Subspace::dim).collect();
        let mut c = ChainComplex::new(self.direction, self.min_degree, dims.clone(), diffs)?;
        if let Some(w) = &self.weights {
            let hw: Option<Vec<Vec<i64>>> = bases
                .iter()
                .zip(w)
                .map(|(b, wk)| b.vectors().iter().map(|v| homogeneous_weight(v, wk)).collect())
                .collect();
            if let Some(hw) = hw {
                c = c.with_weights(hw)?;
            }
        }
        Ok(c)
    }

    /// Quotient by subspaces `subs[k]` that the differential carries into
    /// each other. The quotient basis is the standard vectors at the
    /// complement columns of each subspace.
    pub fn quotient(&self, subs: &[Subspace]) -> Result<ChainComplex> {
        if subs.len() != self.dims.len() || subs.iter().zip(&self.dims).any(|(b, d)| b.ambient() != *d) {
            return Err(Error::Shape("subspace list does not match the complex".into()));
        }
        let ks: Vec<usize> = (0..self.dims.len()).collect();
        let comps: Vec<Vec<usize>> = subs.iter().map(Subspace::complement).collect();
        let diffs: Vec<Result<Matrix>> = par::map(&ks, |&k| {
            let n = self.degree_at(k);
            let Some(t) = self.index_of(n + self.direction.step()) else {
                return Ok(Matrix::zeros(0, comps[k].len()));
            };
            let d = &self.diffs[k];
            let images: Vec<SparseVec> = subs[k].vectors().iter().map(|w| d.mul_vec(w)).collect();
            if subs[t].reduce_all(&images).iter().any(|r| !r.is_empty()) {
                return Err(Error::NotInvariant { degree: n });
            }
            let cols = d.select_cols(&comps[k]).columns();
            let mut pos = vec![usize::MAX; self.dims[t]];
            for (i, &c) in comps[t].iter().enumerate() {
                pos[c] = i;
            }
            let reduced: Vec<SparseVec> = subs[t]
                .reduce_all(&cols)
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .map(|(i, x)| {
                            debug_assert!(pos[i] != usize::MAX);
                            (pos[i], x)
                        })
                        .collect()
                })
                .collect();
            Ok(Matrix::from_sparse_cols(comps[t].len(), &reduced))
        });
        let diffs: Vec<Matrix> = diffs.into_iter().collect::<Result<_>>()?;
        let dims = comps.iter().map(Vec::len).collect();
        let labels = comps
            .iter()
            .zip(&self.labels)
            .map(|(c, l)| c.iter().map(|&j| l[j].clone()).collect())
            .collect();
        let c = ChainComplex::new(self.direction, self.min_degree, dims, diffs)?.with_labels(labels)?;
        match &self.weights {
            Some(w) => c.with_weights(comps.iter().zip(w).map(|(c, wk)| c.iter().map(|&j| wk[j]).collect()).collect()),
            None => Ok(c),
        }
    }

    /// Eigenspaces of an operator commuting with the differential:
    /// `result[e][k]` is the eigenspace for `eigenvalues[e]` in degree
    /// `min_degree + k`. Fails if the operator does not commute or the
    /// eigenspaces do not fill some degree.
    pub fn eigenspaces(&self, op: &[Matrix], eigenvalues: &[Rational]) -> Result<Vec<Vec<Subspace>>> {
        if op.len() != self.dims.len() || op.iter().zip(&self.dims).any(|(m, d)| m.rows() != *d || m.cols() != *d) {
            return Err(Error::Shape("operator does not match the complex".into()));
        }
        let bad = par::find_first(self.dims.len(), |k| {
            let n = self.degree_at(k);
            let t = self.index_of(n + self.direction.step())?;
            let lhs = self.diffs[k].mul(&op[k]).expect("shapes");
            let rhs = op[t].mul(&self.diffs[k]).expect("shapes");
            (lhs != rhs).then_some(n)
        });
        if let Some(degree) = bad {
            return Err(Error::NonCommuting { degree });
        }
        let jobs: Vec<(usize, usize)> = (0..self.dims.len())
            .flat_map(|k| (0..eigenvalues.len()).map(move |e| (k, e)))
            .collect();
        let spaces = par::map(&jobs, |&(k, e)| eigenspace(&op[k], &eigenvalues[e]));
        let mut per_value: Vec<Vec<Subspace>> = vec![Vec::new(); eigenvalues.len()];
        for (&(_, e), s) in jobs.iter().zip(spaces) {
            per_value[e].push(s);
        }
        for k in 0..self.dims.len() {
            let found: usize = per_value.iter().map(|v| v[k].dim()).sum();
            if found != self.dims[k] {
                return Err(Error::EigenspacesDoNotSpan {
                    degree: self.degree_at(k),
                    found,
                    expected: self.dims[k],
                });
            }
        }
        Ok(per_value)
    }

    /// Splits along an operator commuting with the differential, one
    /// subcomplex per eigenvalue.
    pub fn split_by_operator(&self, op: &[Matrix], eigenvalues: &[Rational]) -> Result<Vec<ChainComplex>> {
        let per_value = self.eigenspaces(op, eigenvalues)?;
        per_value.iter().map(|bases| self.subcomplex(bases)).collect()
    }

    /// Homology dims keyed by (degree, weight), zero cells omitted. An
    /// ungraded complex is read as living in weight 0.
    pub fn homology_by_weight(&self) -> Result<BTreeMap<(i64, i64), usize>> {
        if self.weights.is_none() {
            return Ok(self.homology_dims().into_iter().filter(|(_, d)| *d > 0).map(|(n, d)| ((n, 0), d)).collect());
        }
        let ws = self.weight_values();
        let parts = par::map(&ws, |&w| self.weight_component(w).map(|c| c.homology_dims()));
        let mut out = BTreeMap::new();
        for (w, h) in ws.iter().zip(parts) {
            for (n, d) in h? {
                if d > 0 {
                    out.insert((n, *w), d);
                }
            }
        }
        Ok(out)
    }

    /// The distinct basis weights, if the complex is weight-graded.
    pub fn weight_values(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.weights.iter().flatten().flatten().copied().collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// Direct summand spanned by the basis vectors of weight `w`. Fails if
    /// the differential mixes weights.
    pub fn weight_component(&self, w: i64) -> Result<ChainComplex> {
        let Some(weights) = &self.weights else {
            return Err(Error::InvalidArgument("complex carries no weight grading".into()));
        };
        for k in 0..self.dims.len() {
            let n = self.degree_at(k);
            if let Some(t) = self.index_of(n + self.direction.step()) {
                for (i, row) in self.diffs[k].row_vecs().iter().enumerate() {
                    if row.iter().any(|(j, _)| weights[k][*j] != weights[t][i]) {
                        return Err(Error::Weight(format!("differential from degree {n} mixes weights")));
                    }
                }
            }
        }
        let keep: Vec<Vec<usize>> = weights
            .iter()
            .map(|wk| (0..wk.len()).filter(|&j| wk[j] == w).collect())
            .collect();
        let diffs = (0..self.dims.len())
            .map(|k| {
                let n = self.degree_at(k);
                let d = self.diffs[k].select_cols(&keep[k]);
                match self.index_of(n + self.direction.step()) {
                    Some(t) => d.select_rows(&keep[t]),
                    None => d,
                }
            })
            .collect();
        let dims = keep.iter().map(Vec::len).collect();
        let labels = keep
            .iter()
            .zip(&self.labels)
            .map(|(c, l)| c.iter().map(|&j| l[j].clone()).collect())
            .collect();
        ChainComplex::new(self.direction, self.min_degree, dims, diffs)?
            .with_labels(labels)?
            .with_weights(keep.iter().map(|c| vec![w; c.len()]).collect())
    }
}

fn homogeneous_weight(v: &SparseVec, w: &[i64]) -> Option<i64> {
    let mut it = v.iter().map(|(j, _)| w[*j]);
    let first = it.next()?;
    it.all(|x| x == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn two_term_iso() -> ChainComplex {
        // C_1 = ℚ → C_0 = ℚ, d = 1
        ChainComplex::new(
            Direction::Homological,
            0,
            vec![1, 1],
            vec![Matrix::zeros(0, 1), Matrix::identity(1)],
        )
        .unwrap()
    }

    #[test]
    fn iso_has_no_homology() {
        let c = two_term_iso();
        assert_eq!(c.homology_dims().values().sum::<usize>(), 0);
        assert_eq!(c.dual().homology_dims().values().sum::<usize>(), 0);
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn zero_differential() {
        let c = ChainComplex::new(
            Direction::Cohomological,
            0,
            vec![2, 3],
            vec![Matrix::zeros(3, 2), Matrix::zeros(0, 3)],
        )
        .unwrap();
        assert_eq!(c.homology_dims(), [(0, 2), (1, 3)].into());
    }

    #[test]
    fn rejects_nonzero_square() {
        let d1 = Matrix::identity(1);
        let d2 = Matrix::identity(1);
        let r = ChainComplex::new(Direction::Homological, 0, vec![1, 1, 1], vec![Matrix::zeros(0, 1), d1, d2]);
        assert_eq!(r.unwrap_err(), Error::NotAComplex { degree: 2 });
    }

    #[test]
    fn split_identity_and_scaled() {
        let c = two_term_iso();
        let id = vec![Matrix::identity(1), Matrix::identity(1)];
        let parts = c.split_by_operator(&id, &[q(1)]).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].dims(), c.dims());
        assert_eq!(parts[0].homology_dims(), c.homology_dims());
        let two = vec![Matrix::scalar(1, &q(2)), Matrix::scalar(1, &q(2))];
        assert!(matches!(
            c.split_by_operator(&two, &[q(1)]),
            Err(Error::EigenspacesDoNotSpan { .. })
        ));
    }

    #[test]
    fn non_commuting_operator() {
        let c = two_term_iso();
        let op = vec![Matrix::identity(1), Matrix::scalar(1, &q(2))];
        assert_eq!(
            c.split_by_operator(&op, &[q(1), q(2)]).unwrap_err(),
            Error::NonCommuting { degree: 1 }
        );
    }

    #[test]
    fn quotient_by_acyclic_piece() {
        // ℚ² → ℚ², d = [[1,0],[0,0]]; quotient by the span of e1 in both degrees
        let d = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let c = ChainComplex::new(Direction::Homological, 0, vec![2, 2], vec![Matrix::zeros(0, 2), d]).unwrap();
        let w = Subspace::span(2, &[vec![(0, q(1))]]);
        let qc = c.quotient(&[w.clone(), w]).unwrap();
        assert_eq!(qc.dims(), [(0, 1), (1, 1)].into());
        assert_eq!(qc.homology_dims(), c.homology_dims());
    }
}
