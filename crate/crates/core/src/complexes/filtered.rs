use std::collections::BTreeMap;

use super::chain::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::{kernel, rank, span_dim, SparseVec};
use crate::par;

/// A complex with an increasing filtration given by one level per basis
/// vector: F_p is spanned by the basis vectors of level ≤ p, and the
/// differential never raises the level.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    complex: ChainComplex,
    levels: BTreeMap<i64, Vec<i64>>,
}

/// One page of the spectral sequence; `dims[(p, q)]` is dim E^r_{p,q} with
/// total degree p + q. Zero entries are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPage {
    pub r: usize,
    pub dims: BTreeMap<(i64, i64), usize>,
}

impl SpectralPage {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn total_by_degree(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (&(p, q), &d) in &self.dims {
            *out.entry(p + q).or_insert(0) += d;
        }
        out
    }

    pub fn same_dims(&self, other: &SpectralPage) -> bool {
        self.dims == other.dims
    }
}

impl FilteredComplex {
    pub fn new(complex: ChainComplex, levels: BTreeMap<i64, Vec<i64>>) -> Result<Self> {
        for n in complex.degrees() {
            let l = levels.get(&n).map_or(0, Vec::len);
            if l != complex.dim(n) {
                return Err(Error::Shape(format!("degree {n} has {} basis vectors but {l} levels", complex.dim(n))));
            }
        }
        if let Some(n) = levels.keys().find(|&&n| complex.dim(n) == 0 && !levels[&n].is_empty()) {
            return Err(Error::Shape(format!("levels given for empty degree {n}")));
        }
        for n in complex.degrees() {
            let Some(d) = complex.differential_ref(n) else { continue };
            let t = complex.target_degree(n);
            let (src, tgt) = (&levels[&n], levels.get(&t));
            for (i, row) in d.row_vecs().iter().enumerate() {
                let lt = tgt.expect("nonempty rows imply a target")[i];
                if row.iter().any(|(j, _)| lt > src[*j]) {
                    return Err(Error::FiltrationViolated { degree: n });
                }
            }
        }
        Ok(FilteredComplex { complex, levels })
    }

    /// Every basis vector at level 0.
    pub fn trivial(complex: ChainComplex) -> Self {
        let levels = complex.degrees().map(|n| (n, vec![0; complex.dim(n)])).collect();
        FilteredComplex { complex, levels }
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn levels(&self, n: i64) -> &[i64] {
        self.levels.get(&n).map_or(&[], Vec::as_slice)
    }

    fn level_range(&self) -> Option<(i64, i64)> {
        let mut it = self.levels.values().flatten().copied();
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Number of pages after which the sequence is certainly stationary.
    pub fn spread(&self) -> usize {
        self.level_range().map_or(0, |(lo, hi)| (hi - lo) as usize)
    }

    fn indices(&self, n: i64, pred: impl Fn(i64) -> bool) -> Vec<usize> {
        self.levels(n).iter().enumerate().filter(|(_, &l)| pred(l)).map(|(i, _)| i).collect()
    }

    /// Z^r_p in degree n: {x ∈ F_p : dx ∈ F_{p−r}}, as vectors of C_n.
    fn cycles(&self, n: i64, p: i64, r: i64) -> Vec<SparseVec> {
        let cols = self.indices(n, |l| l <= p);
        if cols.is_empty() {
            return Vec::new();
        }
        let t = self.complex.target_degree(n);
        let rows = self.indices(t, |l| l > p - r);
        let k = match self.complex.differential_ref(n) {
            Some(d) if !rows.is_empty() => kernel(&d.select_cols(&cols).select_rows(&rows)),
            _ => crate::linalg::Subspace::full(cols.len()),
        };
        k.vectors()
            .iter()
            .map(|v| v.iter().map(|(j, x)| (cols[*j], x.clone())).collect())
            .collect()
    }

    fn page_entry(&self, n: i64, p: i64, r: i64) -> usize {
        let z = self.cycles(n, p, r);
        if z.is_empty() {
            return 0;
        }
        let mut denom = self.cycles(n, p - 1, r - 1);
        let m = self.complex.incoming_degree(n);
        if let Some(d) = self.complex.differential_ref(m) {
            denom.extend(self.cycles(m, p + r - 1, r - 1).iter().map(|x| d.mul_vec(x)));
        }
        z.len() - span_dim(self.complex.dim(n), &denom)
    }

    pub fn page(&self, r: usize) -> SpectralPage {
        let Some((lo, hi)) = self.level_range() else {
            return SpectralPage { r, dims: BTreeMap::new() };
        };
        let cells: Vec<(i64, i64)> = self
            .complex
            .degrees()
            .filter(|&n| self.complex.dim(n) > 0)
            .flat_map(|n| (lo..=hi).map(move |p| (n, p)))
            .collect();
        let dims = par::map(&cells, |&(n, p)| self.page_entry(n, p, r as i64));
        SpectralPage {
            r,
            dims: cells
                .iter()
                .zip(dims)
                .filter(|(_, d)| *d > 0)
                .map(|(&(n, p), d)| ((p, n - p), d))
                .collect(),
        }
    }

    /// Pages E⁰ … E^{r_max}.
    pub fn spectral_pages(&self, r_max: usize) -> Vec<SpectralPage> {
        (0..=r_max).map(|r| self.page(r)).collect()
    }

    /// E^∞, read off the page at r = spread + 1, where every later
    /// differential vanishes for degree reasons.
    pub fn e_infinity(&self) -> SpectralPage {
        self.page(self.spread() + 1)
    }

    /// E^∞ from the associated graded of homology:
    /// dim E^∞_p = (z_p − z_{p−1}) − (b_p − b_{p−1}) with z_p = dim(F_p ∩ ker d)
    /// and b_p = dim(F_p ∩ im d).
    pub fn e_infinity_direct(&self) -> SpectralPage {
        let r = self.spread() + 1;
        let Some((lo, hi)) = self.level_range() else {
            return SpectralPage { r, dims: BTreeMap::new() };
        };
        let mut dims = BTreeMap::new();
        for n in self.complex.degrees() {
            let zb = |p: i64| -> (usize, usize) {
                let cols = self.indices(n, |l| l <= p);
                let z = match self.complex.differential_ref(n) {
                    Some(d) => cols.len() - rank(&d.select_cols(&cols)),
                    None => cols.len(),
                };
                let b = match self.complex.differential_ref(self.complex.incoming_degree(n)) {
                    Some(d) => rank(d) - rank(&d.select_rows(&self.indices(n, |l| l > p))),
                    None => 0,
                };
                (z, b)
            };
            let mut prev = zb(lo - 1);
            for p in lo..=hi {
                let cur = zb(p);
                let e = (cur.0 - prev.0) - (cur.1 - prev.1);
                if e > 0 {
                    dims.insert((p, n - p), e);
                }
                prev = cur;
            }
        }
        SpectralPage { r, dims }
    }

    /// Smallest r with E^r = E^∞ (dimension-wise).
    pub fn degeneration_page(&self) -> usize {
        let inf = self.e_infinity();
        (0..=inf.r).find(|&r| self.page(r).same_dims(&inf)).unwrap_or(inf.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::Direction;
    use crate::linalg::Matrix;

    /// a (level 0) ← b1 (level 1); b2 (level 2) ← c (level 2).
    fn hand_example() -> FilteredComplex {
        let d1 = Matrix::from_i64(&[&[1, 0]]);
        let d2 = Matrix::from_i64(&[&[0], &[1]]);
        let c = ChainComplex::new(Direction::Homological, 0, vec![1, 2, 1], vec![Matrix::zeros(0, 1), d1, d2]).unwrap();
        FilteredComplex::new(c, [(0, vec![0]), (1, vec![1, 2]), (2, vec![2])].into()).unwrap()
    }

    #[test]
    fn hand_pages() {
        let f = hand_example();
        let e0 = f.page(0);
        assert_eq!(e0.dims, [((0, 0), 1), ((1, 0), 1), ((2, -1), 1), ((2, 0), 1)].into());
        assert_eq!(f.page(1).dims, [((0, 0), 1), ((1, 0), 1)].into());
        assert_eq!(f.page(2).total(), 0);
        assert_eq!(f.e_infinity(), f.e_infinity_direct());
        assert_eq!(f.degeneration_page(), 2);
    }

    #[test]
    fn rejects_raising_differential() {
        let d1 = Matrix::from_i64(&[&[1]]);
        let c = ChainComplex::new(Direction::Homological, 0, vec![1, 1], vec![Matrix::zeros(0, 1), d1]).unwrap();
        let r = FilteredComplex::new(c, [(0, vec![1]), (1, vec![0])].into());
        assert_eq!(r.unwrap_err(), Error::FiltrationViolated { degree: 1 });
    }
}
