//! Post-Lie homology of a Lie algebra g viewed as a post-Lie algebra with
//! zero circle product.
//!
//! Tensor side, grading table:
//!
//! | summand              | degree    | differential                         |
//! |----------------------|-----------|--------------------------------------|
//! | N ⊗ Λ^k g, k ≥ 1     | k − 1     | cotangent (CE with the Λ⁰ part cut)  |
//! | N ⊗ Λ^k g ⊗ Λ^l g    | k + l − 1 | CE brackets on Λ^k, d^l (k ≥ 2), and |
//! |   k, l ≥ 1           |           | (−1)^{k−1}·CE brackets on Λ^l        |
//!
//! with d^l(n⊗g₁∧…∧g_k⊗h) = Σ (−1)^{i−1} (n·g_i) ⊗ (…ĝ_i…) ⊗ h. The Hom
//! side is the dual with N = M*. The second summand is the cotangent
//! complex tensored with sB_Lie(g), where B_Lie(g) is Λ^{≥1} g with the
//! bracket part of the CE boundary, Λ^l in degree l − 1, shifted up once.

use std::collections::BTreeMap;

use super::ce::{ce_tensor_complex, check_lie, finish, grading, letter_weights, LieOps};
use crate::algebra::{AlgebraPresentation, ModulePresentation, OperadTag};
use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::hodge::basis::{word_map, PairBasis, WeightWindow, SEP};
use crate::hodge::CotangentSide;
use crate::linalg::Matrix;
use crate::par;

#[derive(Clone, Debug)]
pub struct PostLieSpec {
    pub algebra: AlgebraPresentation,
    pub coefficients: ModulePresentation,
    pub side: CotangentSide,
    /// Bound on both exterior powers; `dim g` computes everything.
    pub k_max: usize,
    pub window: Option<WeightWindow>,
}

impl PostLieSpec {
    pub fn new(algebra: &AlgebraPresentation, coefficients: &ModulePresentation, side: CotangentSide) -> Self {
        PostLieSpec {
            algebra: algebra.clone(),
            coefficients: coefficients.clone(),
            side,
            k_max: algebra.dim(),
            window: None,
        }
    }

    pub fn with_window(mut self, window: WeightWindow) -> Self {
        self.window = Some(window);
        self
    }

    fn k(&self) -> usize {
        self.k_max.min(self.algebra.dim())
    }

    fn tensor_module(&self) -> ModulePresentation {
        match self.side {
            CotangentSide::Tensor => self.coefficients.clone(),
            CotangentSide::Hom => self.coefficients.dual(self.algebra.tag),
        }
    }

    fn hom(&self) -> bool {
        self.side == CotangentSide::Hom
    }
}

fn check(spec: &PostLieSpec) -> Result<()> {
    check_lie(&spec.algebra, &spec.coefficients)?;
    if spec.algebra.tag == OperadTag::PostLie && !spec.algebra.op("circ").is_zero() {
        return Err(Error::InvalidArgument("only post-Lie algebras with zero circle product are supported".into()));
    }
    Ok(())
}

pub fn postlie_complex(spec: &PostLieSpec) -> Result<ChainComplex> {
    check(spec)?;
    let alg = &spec.algebra;
    let n = spec.tensor_module();
    let k = spec.k();
    let letters = letter_weights(alg, spec.window)?;
    let g = grading(&letters, &n, spec.window);
    let top = (2 * k).max(1) - 1;
    let bases: Vec<PairBasis> = (0..=top)
        .map(|d| {
            let mut words = if d < k { g.wedge_words(alg.dim(), d + 1) } else { Vec::new() };
            for a in 1..=k.min(d) {
                let b = d + 1 - a;
                if (1..=k).contains(&b) {
                    words.extend(g.wedge_pairs(alg.dim(), a, b));
                }
            }
            PairBasis::new(words, n.dim(), |w, m| g.keeps(w, m))
        })
        .collect();
    let ops = LieOps::new(alg, &n);
    let mut diffs = vec![Matrix::zeros(0, bases[0].len())];
    diffs.extend(par::map_range(top, |i| {
        word_map(&bases[i + 1], &bases[i], |w, m| {
            let mut out = Vec::new();
            let p = w.iter().position(|&c| c == SEP).unwrap_or(w.len());
            ops.brackets(w, 0, p, 1, m, &mut out);
            if p >= 2 {
                ops.actions(w, 0, p, 1, m, &mut out);
            }
            if p < w.len() {
                ops.brackets(w, p + 1, w.len(), if p % 2 == 1 { 1 } else { -1 }, m, &mut out);
            }
            out
        })
    }));
    finish(&bases, diffs, &g, alg, &spec.coefficients.basis, spec.hom())
}

/// Homology dims keyed by (degree, weight); zero cells omitted.
pub type GradedDims = BTreeMap<(i64, i64), usize>;

/// Both sides of the splitting
/// H(post-Lie) ≅ H(cotangent) ⊕ H(sB_Lie(g)) ⊗ H(cotangent),
/// compared degree- and weight-wise up to `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub lhs: GradedDims,
    pub rhs: GradedDims,
    /// Degrees beyond this are not compared (they may be cut by `k_max`).
    pub max_degree: Option<i64>,
    pub equal: bool,
}

impl SplitReport {
    pub fn by_degree(dims: &GradedDims) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (&(d, _), &x) in dims {
            *out.entry(d).or_insert(0) += x;
        }
        out
    }
}

/// The right-hand side's B_Lie(g): Λ^l g, 1 ≤ l ≤ k, bracket part only,
/// placed in degree l (after the suspension).
pub(crate) fn suspended_bar(alg: &AlgebraPresentation, k: usize) -> Result<ChainComplex> {
    let unit = ModulePresentation::trivial(alg, 1);
    Ok(ce_tensor_complex(alg, &unit, 1, k.max(1), None, false, &unit.basis)?.shifted(1))
}

pub fn postlie_split_check(spec: &PostLieSpec) -> Result<SplitReport> {
    check(spec)?;
    let k = spec.k();
    let n = spec.tensor_module();
    let (lhs, rhs) = par::join(
        || -> Result<GradedDims> { postlie_complex(spec)?.homology_by_weight() },
        || -> Result<GradedDims> {
            if k == 0 {
                return Ok(GradedDims::new());
            }
            let cot = ce_tensor_complex(&spec.algebra, &n, 1, k, spec.window, spec.hom(), &spec.coefficients.basis)?
                .homology_by_weight()?;
            let bar = suspended_bar(&spec.algebra, k)?.homology_by_weight()?;
            let mut rhs = cot.clone();
            for (&(d1, w1), &x) in &cot {
                for (&(d2, w2), &y) in &bar {
                    let w = w1 + w2;
                    if spec.window.map_or(true, |win| win.contains(w)) {
                        *rhs.entry((d1 + d2, w)).or_insert(0) += x * y;
                    }
                }
            }
            Ok(rhs)
        },
    );
    let (lhs, rhs) = (lhs?, rhs?);
    let max_degree = (k < spec.algebra.dim()).then(|| k as i64 - 2);
    let cut = |m: &GradedDims| -> GradedDims {
        m.iter()
            .filter(|((d, _), x)| **x > 0 && max_degree.map_or(true, |top| *d <= top))
            .map(|(a, b)| (*a, *b))
            .collect()
    };
    let equal = cut(&lhs) == cut(&rhs);
    Ok(SplitReport {
        lhs,
        rhs,
        max_degree,
        equal,
    })
}
