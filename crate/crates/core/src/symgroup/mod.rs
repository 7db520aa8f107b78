//! Permutations, the group algebra ℚS_n, the shuffle element and partial
//! composition of permutations inside As.

mod algebra;
mod perm;
mod substitute;

use std::collections::HashMap;

pub use algebra::{
    bracket_element, left_regular_matrix, shuffle_element, shuffle_permutation, symmetrizer, GroupAlgebraElement,
};
pub use perm::Permutation;
pub use substitute::{bimodule_identity_sides, check_bimodule_identity, operadic_substitute, substitute_permutation};

use crate::error::Result;
use crate::linalg::{eigenspace, rational::pow2, Matrix, Rational};

/// Dimensions of the eigenspaces of left multiplication by sh_n on ℚS_n for
/// the eigenvalues 2^1,…,2^n, computed on the full n!×n! matrix.
pub fn shuffle_spectrum_direct(n: usize) -> Result<Vec<usize>> {
    let m = left_regular_matrix(&shuffle_element(n)?);
    let exps: Vec<u32> = (1..=n as u32).collect();
    Ok(crate::par::map(&exps, |&i| eigenspace(&m, &pow2(i)).dim()))
}

/// Same dimensions as [`shuffle_spectrum_direct`], computed blockwise.
///
/// Left multiplication commutes with the right action of
/// H = ⟨(12),(34),…⟩ ≅ (ℤ/2)^⌊n/2⌋. For each character χ of H the right
/// ideal ℚS_n·f_χ, f_χ = |H|⁻¹ Σ_h χ(h) h, is invariant and has basis τ·f_χ
/// over the coset representatives τ with τ(2j−1) < τ(2j). The eigenspace
/// dimensions on ℚS_n are the sums over the blocks.
pub fn shuffle_spectrum(n: usize) -> Result<Vec<usize>> {
    let sh = shuffle_element(n)?;
    let pairs = n / 2;
    let reps: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|p| (0..pairs).all(|j| p.apply(2 * j + 1) < p.apply(2 * j + 2)))
        .collect();
    let index: HashMap<&Permutation, usize> = reps.iter().enumerate().map(|(i, p)| (p, i)).collect();

    // σ∘τ = τ'∘h: sorting each position pair of σ∘τ gives τ', the pairs that
    // needed a swap give h.
    let split = |g: &Permutation| -> (usize, u32) {
        let mut img = g.images();
        let mut swapped = 0u32;
        for j in 0..pairs {
            if img[2 * j] > img[2 * j + 1] {
                img.swap(2 * j, 2 * j + 1);
                swapped |= 1 << j;
            }
        }
        let rep = Permutation::from_images(&img).expect("still a permutation");
        (index[&rep], swapped)
    };
    let products: Vec<Vec<(usize, u32, Rational)>> = crate::par::map(&reps, |tau| {
        sh.terms()
            .map(|(s, c)| {
                let (r, h) = split(&s.compose(tau));
                (r, h, c.clone())
            })
            .collect()
    });

    let characters: Vec<u32> = (0..1u32 << pairs).collect();
    let per_block: Vec<Vec<usize>> = crate::par::map(&characters, |&chi| {
        let entries = products.iter().enumerate().flat_map(|(col, terms)| {
            terms.iter().map(move |(row, h, c)| {
                let sign = (h & chi).count_ones() % 2 == 1;
                (*row, col, if sign { -c.clone() } else { c.clone() })
            })
        });
        let block = Matrix::from_triplets(reps.len(), reps.len(), entries);
        (1..=n as u32).map(|i| eigenspace(&block, &pow2(i)).dim()).collect()
    });
    Ok((0..n).map(|i| per_block.iter().map(|b| b[i]).sum()).collect())
}
