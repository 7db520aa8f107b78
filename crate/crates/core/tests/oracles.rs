mod common;

use common::*;
use opcohom::algebra::{examples, ModulePresentation};
use opcohom::hodge::{hochschild_dims, shuffle_commutation_defect, HochschildSpec, Variant};

fn library_hh(a: &opcohom::algebra::AlgebraPresentation, n_max: usize) -> Vec<usize> {
    let m = ModulePresentation::regular(a);
    hochschild_dims(&HochschildSpec::new(a, &m, Variant::Cochain, n_max)).unwrap().into_values().collect()
}

#[test]
fn dual_numbers_match_dense_delta() {
    let oracle = hochschild_oracle(&truncated_monomials(1, 1), 6);
    assert_eq!(oracle, vec![1; 7]);
    assert_eq!(library_hh(&examples::dual_numbers(), 6), oracle);
}

#[test]
fn hochschild_dims_agree_with_oracle() {
    assert_eq!(library_hh(&examples::truncated_polynomial(3), 5), hochschild_oracle(&truncated_monomials(1, 2), 5));
    assert_eq!(library_hh(&examples::upper_triangular(), 4), hochschild_oracle(&upper_triangular(), 4));
    assert_eq!(library_hh(&examples::plane_cubic_truncation(), 2), hochschild_oracle(&truncated_monomials(2, 2), 2));
}

#[test]
fn barr_commutation_against_dense_shuffle() {
    for n in 1..=4 {
        assert!(barr_commutes(&truncated_monomials(1, 1), n), "dual numbers n={n}");
        assert!(barr_commutes(&truncated_monomials(1, 2), n), "cubic n={n}");
    }
    assert!(barr_commutes(&truncated_monomials(2, 2), 1));
    assert!(barr_commutes(&truncated_monomials(2, 2), 2));
    let bad = (1..=3).find(|&n| !barr_commutes(&upper_triangular(), n));
    assert!(bad.is_some());
    let a = examples::upper_triangular();
    let m = ModulePresentation::regular(&a);
    let lib = shuffle_commutation_defect(&HochschildSpec::new(&a, &m, Variant::Cochain, 4)).unwrap();
    assert!(lib.is_some());
}

#[test]
fn sh_eigenvalues_on_cochains() {
    // sh_1 = 2·id; on degree n the oracle shuffle is diagonalisable with
    // eigenvalues among 2^1..2^n, so Π (sh − 2^i) = 0.
    for n in 1..=4 {
        let s = shuffle_on_cochains(2, n);
        let size = s.len();
        let mut prod: Vec<Vec<i64>> = (0..size).map(|i| (0..size).map(|j| i64::from(i == j)).collect()).collect();
        for i in 1..=n {
            let mut f = s.clone();
            for (k, row) in f.iter_mut().enumerate() {
                row[k] -= 1 << i;
            }
            prod = mat_mul(&prod, &f);
        }
        assert!(prod.iter().flatten().all(|&x| x == 0), "n={n}");
    }
}
