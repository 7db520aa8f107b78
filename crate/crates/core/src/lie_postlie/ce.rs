use crate::algebra::{AlgebraPresentation, ModulePresentation, OperadTag, Table};
use crate::complexes::{ChainComplex, Direction};
use crate::error::{Error, Result};
use crate::hodge::basis::{join_labels, sort_wedge, word_map, Grading, PairBasis, WeightWindow, SEP};
use crate::hodge::Variant;
use crate::linalg::{Matrix, Rational};
use crate::par;

#[derive(Clone, Debug)]
pub struct CESpec {
    pub algebra: AlgebraPresentation,
    pub coefficients: ModulePresentation,
    pub variant: Variant,
    pub k_max: usize,
    pub window: Option<WeightWindow>,
}

impl CESpec {
    /// Chains or cochains up to Λ^{dim g}.
    pub fn new(algebra: &AlgebraPresentation, coefficients: &ModulePresentation, variant: Variant) -> Self {
        CESpec {
            algebra: algebra.clone(),
            coefficients: coefficients.clone(),
            variant,
            k_max: algebra.dim(),
            window: None,
        }
    }
}

type Terms = Vec<(Vec<u16>, usize, Rational)>;

/// Bracket of g and the right action n·x = −x·n of a module N.
pub(crate) struct LieOps {
    bracket: Table,
    right: Table,
}

impl LieOps {
    pub fn new(alg: &AlgebraPresentation, n: &ModulePresentation) -> Self {
        LieOps {
            bracket: alg.primary().clone(),
            right: n.right_or_induced(alg.tag),
        }
    }

    /// Σ_{a<b} (−1)^{a+b} [x_a, x_b] ∧ (slot without x_a, x_b), on the
    /// wedge slot w[lo..hi], times `sign`.
    pub fn brackets(&self, w: &[u16], lo: usize, hi: usize, sign: i64, m: usize, out: &mut Terms) {
        let slot = &w[lo..hi];
        for a in 0..slot.len() {
            for b in a + 1..slot.len() {
                let s = if (a + b) % 2 == 0 { sign } else { -sign };
                for (z, c) in self.bracket.entry(slot[a] as usize, slot[b] as usize) {
                    let mut new: Vec<u16> = Vec::with_capacity(slot.len() - 1);
                    new.push(*z as u16);
                    new.extend(slot.iter().enumerate().filter(|(i, _)| *i != a && *i != b).map(|(_, &x)| x));
                    let Some(sg) = sort_wedge(&mut new) else { continue };
                    let mut word = w[..lo].to_vec();
                    word.extend_from_slice(&new);
                    word.extend_from_slice(&w[hi..]);
                    out.push((word, m, c * Rational::from(s * sg)));
                }
            }
        }
    }

    /// Σ_a (−1)^a (n·x_a) ⊗ (slot without x_a), times `sign`.
    pub fn actions(&self, w: &[u16], lo: usize, hi: usize, sign: i64, m: usize, out: &mut Terms) {
        for a in 0..hi - lo {
            let s = if a % 2 == 0 { sign } else { -sign };
            for (m2, c) in self.right.entry(m, w[lo + a] as usize) {
                let mut word = w[..lo + a].to_vec();
                word.extend_from_slice(&w[lo + a + 1..]);
                out.push((word, *m2, c * Rational::from(s)));
            }
        }
    }
}

pub(crate) fn check_lie(alg: &AlgebraPresentation, m: &ModulePresentation) -> Result<()> {
    if !matches!(alg.tag, OperadTag::Lie | OperadTag::PostLie) {
        return Err(Error::InvalidArgument(format!("expected a Lie algebra, got {}", alg.tag.as_str())));
    }
    if m.algebra != alg.name {
        return Err(Error::InvalidArgument(format!("module is for `{}`, not `{}`", m.algebra, alg.name)));
    }
    Ok(())
}

pub(crate) fn grading<'a>(letters: &'a [i64], n: &ModulePresentation, window: Option<WeightWindow>) -> Grading<'a> {
    Grading {
        letters,
        module: (0..n.dim()).map(|j| n.weight(j)).collect(),
        window,
    }
}

pub(crate) fn letter_weights(alg: &AlgebraPresentation, window: Option<WeightWindow>) -> Result<Vec<i64>> {
    Grading::check(alg.weights.as_deref(), window)?;
    Ok(alg.weights.clone().unwrap_or_else(|| vec![0; alg.dim()]))
}

/// Label of `n ⊗ u` or `n ⊗ u ⊗ v` (tensor side) or `u ↦ m`, `u | v ↦ m`
/// (Hom side), with `u`, `v` wedge words.
pub(crate) fn wedge_label(w: &[u16], m: usize, alg: &AlgebraPresentation, names: &[String], hom: bool) -> String {
    let parts: Vec<String> = w
        .split(|&c| c == SEP)
        .map(|p| if p.is_empty() { "1".to_string() } else { join_labels(p, &alg.basis, "∧") })
        .collect();
    if hom {
        if w.is_empty() {
            names[m].clone()
        } else {
            format!("{} ↦ {}", parts.join(" | "), names[m])
        }
    } else if w.is_empty() {
        names[m].clone()
    } else {
        format!("{}⊗{}", names[m], parts.join("⊗"))
    }
}

pub(crate) fn finish(
    bases: &[PairBasis],
    diffs: Vec<Matrix>,
    g: &Grading,
    alg: &AlgebraPresentation,
    names: &[String],
    hom: bool,
) -> Result<ChainComplex> {
    let dims = bases.iter().map(PairBasis::len).collect();
    let labels = bases
        .iter()
        .map(|b| (0..b.len()).map(|j| {
            let (w, m) = b.pair(j);
            wedge_label(w, m, alg, names, hom)
        }).collect())
        .collect();
    let weights = bases
        .iter()
        .map(|b| (0..b.len()).map(|j| {
            let (w, m) = b.pair(j);
            g.weight(w, m)
        }).collect())
        .collect();
    let c = ChainComplex::new(Direction::Homological, 0, dims, diffs)?
        .with_labels(labels)?
        .with_weights(weights)?;
    Ok(if hom { c.dual() } else { c })
}

/// N ⊗ Λ^k g for k = k_lo..=k_hi in degree k − k_lo with the CE boundary
/// d(n⊗x₁∧…∧x_k) = Σ (−1)^{i+1} (n·x_i)⊗…x̂_i… + Σ_{i<j} (−1)^{i+j} n⊗[x_i,x_j]∧…;
/// the part leaving Λ^{k_lo} is dropped. With `hom`, the dual complex,
/// which is the cochain complex when N = M*.
pub(crate) fn ce_tensor_complex(
    alg: &AlgebraPresentation,
    n: &ModulePresentation,
    k_lo: usize,
    k_hi: usize,
    window: Option<WeightWindow>,
    hom: bool,
    names: &[String],
) -> Result<ChainComplex> {
    check_lie(alg, n)?;
    let letters = letter_weights(alg, window)?;
    let g = grading(&letters, n, window);
    let bases: Vec<PairBasis> = (k_lo..=k_hi)
        .map(|k| PairBasis::new(g.wedge_words(alg.dim(), k), n.dim(), |w, m| g.keeps(w, m)))
        .collect();
    let ops = LieOps::new(alg, n);
    let mut diffs = vec![Matrix::zeros(0, bases[0].len())];
    diffs.extend(par::map_range(k_hi - k_lo, |i| {
        word_map(&bases[i + 1], &bases[i], |w, m| {
            let mut out = Vec::new();
            ops.actions(w, 0, w.len(), 1, m, &mut out);
            ops.brackets(w, 0, w.len(), 1, m, &mut out);
            out
        })
    }));
    finish(&bases, diffs, &g, alg, names, hom)
}

/// Chevalley–Eilenberg chains M ⊗ Λ^k g or cochains Hom(Λ^k g, M),
/// k = 0..=k_max.
pub fn chevalley_eilenberg(spec: &CESpec) -> Result<ChainComplex> {
    let m = &spec.coefficients;
    let n = match spec.variant {
        Variant::Chain => m.clone(),
        Variant::Cochain => m.dual(spec.algebra.tag),
    };
    let k_max = spec.k_max.min(spec.algebra.dim());
    ce_tensor_complex(&spec.algebra, &n, 0, k_max, spec.window, spec.variant == Variant::Cochain, &m.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::*;

    fn dims(c: &ChainComplex) -> Vec<usize> {
        c.homology_dims().values().copied().collect()
    }

    #[test]
    fn affine_line_trivial() {
        let g = affine_line();
        let k = ModulePresentation::trivial(&g, 1);
        for v in [Variant::Chain, Variant::Cochain] {
            assert_eq!(dims(&chevalley_eilenberg(&CESpec::new(&g, &k, v)).unwrap()), vec![1, 1, 0]);
        }
        let c = chevalley_eilenberg(&CESpec::new(&g, &k, Variant::Chain)).unwrap();
        assert_eq!(c.labels(2), ["1⊗e∧f"]);
        assert_eq!(crate::linalg::rank(&c.differential(2)), 1);
    }

    #[test]
    fn sl2_adjoint_is_acyclic() {
        // Whitehead: H^*(sl₂, M) = 0 for nontrivial irreducible M
        let g = sl2();
        let m = ModulePresentation::regular(&g);
        let c = chevalley_eilenberg(&CESpec::new(&g, &m, Variant::Cochain)).unwrap();
        assert_eq!(dims(&c), vec![0, 0, 0, 0]);
        let t = chevalley_eilenberg(&CESpec::new(&g, &ModulePresentation::trivial(&g, 1), Variant::Chain)).unwrap();
        assert_eq!(dims(&t), vec![1, 0, 0, 1]);
    }

    #[test]
    fn heisenberg_trivial_betti() {
        // Betti numbers of the Heisenberg nilmanifold
        let g = heisenberg();
        let c = chevalley_eilenberg(&CESpec::new(&g, &ModulePresentation::trivial(&g, 1), Variant::Cochain)).unwrap();
        assert_eq!(dims(&c), vec![1, 2, 2, 1]);
    }
}
