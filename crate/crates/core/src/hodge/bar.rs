use super::basis::WeightWindow;
use super::hochschild::{sign, LabelStyle, TensorSide};
use super::tensor::TensorTerms;
use crate::algebra::{AlgebraPresentation, ModulePresentation};
use crate::complexes::{ChainComplex, Direction};
use crate::error::Result;
use crate::par;

/// Bar construction of a non-unital algebra: A^{⊗k} in degree k−1 for
/// k = 1..=max_length, with d[a₁|…|a_k] = Σ (−1)^{i−1} [a₁|…|a_i a_{i+1}|…|a_k].
pub fn bar_complex(alg: &AlgebraPresentation, max_length: usize, window: Option<WeightWindow>) -> Result<ChainComplex> {
    let unit = ModulePresentation::trivial(alg, 1);
    let side = TensorSide::new(alg, unit, 0..=max_length, window)?;
    let mut diffs = vec![crate::Matrix::zeros(0, side.bases[1].len())];
    diffs.extend(par::map_range(max_length.saturating_sub(1), |i| {
        let k = i + 2;
        let terms = TensorTerms {
            mul: alg.primary(),
            first: None,
            merge: (0..k - 1).map(sign).collect(),
            last: None,
            wrap: None,
        };
        side.map(k, &terms)
    }));
    let dims = (1..=max_length).map(|k| side.bases[k].len()).collect();
    let labels = (1..=max_length).map(|k| side.labels(k, LabelStyle::Bar, &[])).collect();
    let weights = (1..=max_length).map(|k| side.weights(k)).collect();
    ChainComplex::new(Direction::Homological, 0, dims, diffs)?
        .with_labels(labels)?
        .with_weights(weights)
}
