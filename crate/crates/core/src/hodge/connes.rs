//! Connes' complex: A^{⊗k} in degree k−1 modulo the image of 1 − t, where
//! t(a₁⊗…⊗a_k) = ε·a_k⊗a₁⊗…⊗a_{k−1}, with the differential induced from
//! b(a₁⊗…⊗a_k) = Σ_{i<k} (−1)^{i−1} …⊗a_i a_{i+1}⊗… + (−1)^{k−1} a_k a₁⊗a₂⊗…⊗a_{k−1}.

use super::hochschild::{sign, LabelStyle, TensorSide};
use super::tensor::TensorTerms;
use crate::algebra::{AlgebraPresentation, ModulePresentation};
use crate::complexes::{ChainComplex, Direction};
use crate::error::{Error, Result};
use crate::linalg::{normalize, Matrix, Rational, SparseVec, Subspace};
use crate::par;

/// Sign ε of the cyclic operator on A^{⊗k}.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CyclicSign {
    /// ε = (−1)^{k−1}, the sign of the cyclic permutation of k letters.
    /// The differential always descends.
    #[default]
    Degree,
    /// ε = (−1)^k. Descends when the multiplication is zero; otherwise
    /// construction may fail with `NotInvariant`.
    TensorLength,
}

impl CyclicSign {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "degree" => Ok(CyclicSign::Degree),
            "tensor-length" => Ok(CyclicSign::TensorLength),
            _ => Err(Error::InvalidArgument(format!("`{s}` is not degree or tensor-length"))),
        }
    }

    fn epsilon(self, k: usize) -> i64 {
        match self {
            CyclicSign::Degree => sign(k + 1),
            CyclicSign::TensorLength => sign(k),
        }
    }
}

pub fn connes_complex(alg: &AlgebraPresentation, max_length: usize, cyclic: CyclicSign) -> Result<ChainComplex> {
    if max_length < 1 {
        return Err(Error::InvalidArgument("max length must be at least 1".into()));
    }
    let unit = ModulePresentation::trivial(alg, 1);
    let ts = TensorSide::new(alg, unit, 0..=max_length, None)?;
    let mut diffs = vec![Matrix::zeros(0, ts.bases[1].len())];
    diffs.extend(par::map_range(max_length - 1, |i| {
        let k = i + 2;
        let terms = TensorTerms {
            mul: alg.primary(),
            first: None,
            merge: (0..k - 1).map(sign).collect(),
            last: None,
            wrap: Some(sign(k + 1)),
        };
        ts.map(k, &terms)
    }));
    let dims = (1..=max_length).map(|k| ts.bases[k].len()).collect();
    let labels = (1..=max_length).map(|k| ts.labels(k, LabelStyle::Bar, &[])).collect();
    let weights = (1..=max_length).map(|k| ts.weights(k)).collect();
    let c = ChainComplex::new(Direction::Homological, 0, dims, diffs)?
        .with_labels(labels)?
        .with_weights(weights)?;
    let subs: Vec<Subspace> = (1..=max_length)
        .map(|k| {
            let b = &ts.bases[k];
            let eps = Rational::from(cyclic.epsilon(k));
            let vs: Vec<SparseVec> = (0..b.len())
                .map(|j| {
                    let (w, m) = b.pair(j);
                    let mut r = Vec::with_capacity(k);
                    r.push(w[k - 1]);
                    r.extend_from_slice(&w[..k - 1]);
                    let i = b.index(&r, m).expect("rotation keeps the weight");
                    normalize(vec![(j, Rational::from(1)), (i, -eps.clone())])
                })
                .collect();
            Subspace::span(b.len(), &vs)
        })
        .collect();
    c.quotient(&subs)
}
