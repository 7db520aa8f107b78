//! Small algebras used throughout the tests and the CLI corpus.

use std::collections::BTreeMap;

use super::free::free_algebra_truncation;
use super::presentation::{AlgebraPresentation, OperadTag};
use super::table::Table;
use crate::linalg::q;

fn named(mut a: AlgebraPresentation, name: &str) -> AlgebraPresentation {
    a.name = name.into();
    a
}

/// k[x]/(x²) without unit: span{x}, x² = 0.
pub fn dual_numbers() -> AlgebraPresentation {
    named(free_algebra_truncation(OperadTag::Comm, 1, 1).expect("valid"), "dual_numbers")
}

/// Augmentation ideal of k[x]/(x^n): span{x,…,x^{n−1}}.
pub fn truncated_polynomial(n: usize) -> AlgebraPresentation {
    assert!(n >= 2, "need n ≥ 2");
    named(free_algebra_truncation(OperadTag::Comm, 1, n - 1).expect("valid"), &format!("k[x]/(x^{n})"))
}

/// Augmentation ideal of k[x,y]/(x,y)³: span{x, y, x², xy, y²}.
pub fn plane_cubic_truncation() -> AlgebraPresentation {
    named(free_algebra_truncation(OperadTag::Comm, 2, 2).expect("valid"), "k[x,y]/(x,y)^3")
}

/// span{e, n} ⊂ upper-triangular 2×2 matrices, e = E₁₁, n = E₁₂:
/// e·e = e, e·n = n, n·e = n·n = 0. Associative, not commutative.
pub fn upper_triangular() -> AlgebraPresentation {
    let mut t = Table::zero(2, 2, 2);
    t.set(0, 0, vec![(0, q(1))]);
    t.set(0, 1, vec![(1, q(1))]);
    AlgebraPresentation::new(
        "upper_triangular",
        OperadTag::Assoc,
        vec!["e".into(), "n".into()],
        [("mul".to_string(), t)].into(),
        None,
    )
    .expect("valid")
}

/// n-dimensional algebra with all products zero.
pub fn zero_algebra(tag: OperadTag, n: usize) -> AlgebraPresentation {
    let basis: Vec<String> = if n == 1 {
        vec!["x".into()]
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    };
    let products: BTreeMap<String, Table> =
        tag.operations().iter().map(|op| (op.to_string(), Table::zero(n, n, n))).collect();
    AlgebraPresentation::new(&format!("zero_{tag}_{n}"), tag, basis, products, None).expect("valid")
}

pub fn abelian_lie(n: usize) -> AlgebraPresentation {
    named(zero_algebra(OperadTag::Lie, n), &format!("abelian_{n}"))
}

/// Two-dimensional nonabelian Lie algebra [e,f] = f.
pub fn affine_line() -> AlgebraPresentation {
    lie_from_brackets("aff1", &["e", "f"], &[(0, 1, &[(1, 1)])])
}

/// Heisenberg algebra [x,y] = z.
pub fn heisenberg() -> AlgebraPresentation {
    lie_from_brackets("heisenberg", &["x", "y", "z"], &[(0, 1, &[(2, 1)])])
}

/// sl₂ with [h,e] = 2e, [h,f] = −2f, [e,f] = h.
pub fn sl2() -> AlgebraPresentation {
    lie_from_brackets(
        "sl2",
        &["h", "e", "f"],
        &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
    )
}

/// Lie algebra from the brackets [x_i, x_j] for i < j (0-based), extended
/// antisymmetrically.
pub fn lie_from_brackets(name: &str, basis: &[&str], brackets: &[(usize, usize, &[(usize, i64)])]) -> AlgebraPresentation {
    let n = basis.len();
    let mut t = Table::zero(n, n, n);
    for (i, j, terms) in brackets {
        t.set(*i, *j, terms.iter().map(|(k, c)| (*k, q(*c))).collect());
        t.set(*j, *i, terms.iter().map(|(k, c)| (*k, q(-c))).collect());
    }
    AlgebraPresentation::new(
        name,
        OperadTag::Lie,
        basis.iter().map(|s| s.to_string()).collect(),
        [("bracket".to_string(), t)].into(),
        None,
    )
    .expect("valid Lie algebra")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_validates() {
        assert_eq!(dual_numbers().dim(), 1);
        assert_eq!(truncated_polynomial(3).dim(), 2);
        assert_eq!(plane_cubic_truncation().dim(), 5);
        assert_eq!(upper_triangular().dim(), 2);
        for a in [affine_line(), heisenberg(), sl2(), abelian_lie(3)] {
            a.validate().unwrap();
        }
    }
}
