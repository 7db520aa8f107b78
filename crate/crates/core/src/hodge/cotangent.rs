//! Cotangent complexes with coefficients, hand-instantiated per operad.
//!
//! | tag   | chains in degree k−1                | differential                     |
//! |-------|-------------------------------------|----------------------------------|
//! | assoc | N ⊗ A^{⊗k}, k ≥ 1                   | −b (Hochschild boundary)         |
//! | comm  | N ⊗ A^{⊗k} / shuffle products       | induced by −b                    |
//! | lie   | N ⊗ Λ^k g, k ≥ 1                    | Chevalley–Eilenberg              |
//!
//! For assoc the terms of d(n⊗a₁…a_k) are −(n·a₁)⊗a₂…, the merges with
//! sign (−1)^{i−1}, and (−1)^{k+1}(a_k·n)⊗a₁…a_{k−1}. The Hom side is the
//! dual of the tensor side with N = M*.

use super::basis::WeightWindow;
use super::hochschild::{shuffle_subspaces, sign, LabelStyle, TensorSide};
use super::tensor::TensorTerms;
use crate::algebra::{AlgebraPresentation, ModulePresentation, OperadTag};
use crate::complexes::{ChainComplex, Direction};
use crate::error::{Error, Result};
use crate::lie_postlie::ce_tensor_complex;
use crate::linalg::Matrix;
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CotangentSide {
    /// Hom(L, M): cohomology.
    Hom,
    /// N ⊗ L: homology.
    Tensor,
}

impl CotangentSide {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "hom" => Ok(CotangentSide::Hom),
            "tensor" => Ok(CotangentSide::Tensor),
            _ => Err(Error::InvalidArgument(format!("`{s}` is not hom or tensor"))),
        }
    }
}

/// The cotangent complex of `alg` with coefficients, degrees 0..=n_max.
/// `tag` may be assoc for a commutative algebra (restriction along
/// As → Com); otherwise it must match the algebra.
pub fn cotangent_complex(
    tag: OperadTag,
    alg: &AlgebraPresentation,
    coefficients: &ModulePresentation,
    side: CotangentSide,
    n_max: usize,
    window: Option<WeightWindow>,
) -> Result<ChainComplex> {
    let fits = match tag {
        OperadTag::Assoc => matches!(alg.tag, OperadTag::Assoc | OperadTag::Comm),
        OperadTag::Comm => alg.tag == OperadTag::Comm,
        OperadTag::Lie => matches!(alg.tag, OperadTag::Lie | OperadTag::PostLie),
        OperadTag::PostLie => false,
    };
    if !fits {
        return Err(Error::InvalidArgument(format!(
            "cannot take the {} cotangent complex of a {} algebra",
            tag.as_str(),
            alg.tag.as_str()
        )));
    }
    if coefficients.algebra != alg.name {
        return Err(Error::InvalidArgument(format!(
            "module is for `{}`, not `{}`",
            coefficients.algebra, alg.name
        )));
    }
    let n = match side {
        CotangentSide::Tensor => coefficients.clone(),
        CotangentSide::Hom => coefficients.dual(alg.tag),
    };
    let names = &coefficients.basis;
    let c = match tag {
        OperadTag::Lie => ce_tensor_complex(alg, &n, 1, n_max + 1, window, side == CotangentSide::Hom, names)?,
        _ => {
            if n.left.is_none() || n.right.is_none() {
                return Err(Error::InvalidArgument("coefficients need both a left and a right action".into()));
            }
            let ts = TensorSide::new(alg, n, 0..=n_max + 1, window)?;
            let mut diffs = vec![Matrix::zeros(0, ts.bases[1].len())];
            diffs.extend(par::map_range(n_max, |i| {
                let k = i + 2;
                let terms = TensorTerms {
                    mul: ts.alg.primary(),
                    first: Some((ts.module.right_action(), -1)),
                    merge: (0..k - 1).map(sign).collect(),
                    last: Some((ts.module.left_action(), sign(k + 1))),
                    wrap: None,
                };
                ts.map(k, &terms)
            }));
            let dims = (1..=n_max + 1).map(|k| ts.bases[k].len()).collect();
            let style = match side {
                CotangentSide::Tensor => LabelStyle::BarChain,
                CotangentSide::Hom => LabelStyle::BarHom,
            };
            let labels = (1..=n_max + 1).map(|k| ts.labels(k, style, names)).collect();
            let weights = (1..=n_max + 1).map(|k| ts.weights(k)).collect();
            let c = ChainComplex::new(Direction::Homological, 0, dims, diffs)?
                .with_labels(labels)?
                .with_weights(weights)?;
            let c = if tag == OperadTag::Comm {
                let subs = shuffle_subspaces(&ts);
                c.quotient(&subs[1..])?
            } else {
                c
            };
            match side {
                CotangentSide::Tensor => c,
                CotangentSide::Hom => c.dual(),
            }
        }
    };
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::*;
    use crate::hodge::{hochschild_dims, HochschildSpec, Variant};

    #[test]
    fn shift_identity_on_truncated_cubic() {
        let a = truncated_polynomial(3);
        let m = ModulePresentation::regular(&a);
        let h = cotangent_complex(OperadTag::Assoc, &a, &m, CotangentSide::Hom, 5, None)
            .unwrap()
            .homology_dims();
        let hh = hochschild_dims(&HochschildSpec::new(&a, &m, Variant::Cochain, 5)).unwrap();
        for i in 2..=5usize {
            assert_eq!(h[&(i as i64 - 1)], hh[&i], "i = {i}");
        }
    }

    #[test]
    fn lie_cotangent_dims() {
        let g = heisenberg();
        let m = ModulePresentation::regular(&g);
        let c = cotangent_complex(OperadTag::Lie, &g, &m, CotangentSide::Hom, 2, None).unwrap();
        assert_eq!(c.dims().values().copied().collect::<Vec<_>>(), vec![9, 9, 3]);
        assert_eq!(c.direction(), Direction::Cohomological);
    }

    #[test]
    fn rejects_mismatched_tag() {
        let g = heisenberg();
        let m = ModulePresentation::regular(&g);
        assert!(cotangent_complex(OperadTag::Comm, &g, &m, CotangentSide::Hom, 2, None).is_err());
    }
}
