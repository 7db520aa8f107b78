use std::collections::BTreeMap;

use opcohom::algebra::{examples, free_algebra_truncation, ModulePresentation, OperadTag};
use opcohom::hodge::{CotangentSide, WeightWindow};
use opcohom::lie_postlie::{postlie_complex, postlie_split_check, PostLieSpec};

/// Mag^¡ ≅ I ⊕ s·kS₂, so (Mag^¡ ∘ V) is V in degree 0 plus V ⊗ V in
/// degree 1, graded by the total weight of the letters.
fn mag_dual_on(gen_weights: &[i64], cutoff: i64) -> BTreeMap<(i64, i64), usize> {
    let mut out = BTreeMap::new();
    for &w in gen_weights {
        *out.entry((0, w)).or_insert(0) += 1;
    }
    for &u in gen_weights {
        for &v in gen_weights {
            if u + v <= cutoff {
                *out.entry((1, u + v)).or_insert(0) += 1;
            }
        }
    }
    out
}

#[test]
fn free_lie_matches_mag_dual() {
    let g = free_algebra_truncation(OperadTag::Lie, 2, 4).unwrap();
    let n = ModulePresentation::trivial(&g, 1);
    let spec = PostLieSpec::new(&g, &n, CotangentSide::Tensor).with_window(WeightWindow::at_most(4));
    let got: BTreeMap<(i64, i64), usize> = postlie_complex(&spec).unwrap().homology_by_weight().unwrap().into_iter().collect();
    let gens: Vec<i64> = g.weights.clone().unwrap().into_iter().filter(|&w| w == 1).collect();
    assert_eq!(got, mag_dual_on(&gens, 4));
    let report = postlie_split_check(&spec).unwrap();
    assert!(report.equal);
}

#[test]
fn abelian_sides_are_exterior_powers() {
    // abelian g, trivial N: both sides are Λ*g ⊕ (sΛ*g ⊗ Λ*g) dimensionwise
    for d in 1..=3usize {
        let g = examples::abelian_lie(d);
        let n = ModulePresentation::trivial(&g, 1);
        let r = postlie_split_check(&PostLieSpec::new(&g, &n, CotangentSide::Tensor)).unwrap();
        assert!(r.equal);
        let total: usize = r.lhs.values().sum();
        let binom = |k: usize| (0..k).fold(1, |acc, i| acc * (d - i) / (i + 1));
        let lambda_pos: usize = (1..=d).map(binom).sum();
        // cotangent part Λ^{≥1}; each suspended Λ^{l≥1} tensors with it
        assert_eq!(total, lambda_pos + lambda_pos * lambda_pos);
    }
}
