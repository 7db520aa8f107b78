use std::collections::BTreeMap;
use std::fmt;

use malachite_base::num::basic::traits::{One, Zero};

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

/// A formal ℚ-combination of permutations of a fixed arity. The product is
/// `σ·τ = σ∘τ` extended bilinearly.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(p: Permutation) -> Self {
        let mut e = Self::zero(p.n());
        e.terms.insert(p, Rational::ONE);
        e
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut e = Self::zero(n);
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::InvalidArgument(format!("{p} does not have arity {n}")));
            }
            e.add_term(p, c);
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        debug_assert_eq!(p.n(), self.n);
        let slot = self.terms.entry(p).or_insert(Rational::ZERO);
        *slot += c;
        if *slot == 0u32 {
            self.terms.retain(|_, v| *v != 0u32);
        }
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "arity mismatch");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::ONE))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if *c == 0u32 {
            return Self::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "arity mismatch");
        let mut acc: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                *acc.entry(p.compose(q)).or_insert(Rational::ZERO) += a * b;
            }
        }
        acc.retain(|_, v| *v != 0u32);
        GroupAlgebraElement { n: self.n, terms: acc }
    }
}

/// The shuffle element sh_n = Σ_{A⊆[n]} σ_A. For A = {i₁<…<i_p} with
/// complement {j₁<…<j_q}, σ_A sends k ↦ i_k for k ≤ p and k ↦ j_{k−p}
/// afterwards. Coinciding σ_A accumulate.
pub fn shuffle_element(n: usize) -> Result<GroupAlgebraElement> {
    if n == 0 {
        return Err(Error::InvalidArgument("shuffle element needs n ≥ 1".into()));
    }
    if n > 20 {
        return Err(Error::InvalidArgument("shuffle element limited to n ≤ 20".into()));
    }
    let mut e = GroupAlgebraElement::zero(n);
    for mask in 0u32..(1 << n) {
        e.add_term(shuffle_permutation(n, mask), Rational::ONE);
    }
    Ok(e)
}

/// σ_A for the subset encoded by the bits of `mask` (bit k−1 ↔ k ∈ A).
pub fn shuffle_permutation(n: usize, mask: u32) -> Permutation {
    let inside = (0..n as u8).filter(|&k| mask >> k & 1 == 1);
    let outside = (0..n as u8).filter(|&k| mask >> k & 1 == 0);
    Permutation::from_zero_based(inside.chain(outside).collect())
}

/// s_n = (1/n!) Σ_σ σ.
pub fn symmetrizer(n: usize) -> Result<GroupAlgebraElement> {
    if n == 0 {
        return Err(Error::InvalidArgument("symmetrizer needs n ≥ 1".into()));
    }
    let all = Permutation::all(n);
    let c = Rational::ONE / Rational::from(all.len());
    GroupAlgebraElement::from_terms(n, all.into_iter().map(|p| (p, c.clone())))
}

/// l = [12] − [21] in ℚS₂.
pub fn bracket_element() -> GroupAlgebraElement {
    let swap = Permutation::from_images(&[2, 1]).expect("valid");
    GroupAlgebraElement::identity(2).sub(&GroupAlgebraElement::basis(swap))
}

/// Matrix of left multiplication by `g` on ℚS_n, basis in lexicographic order.
pub fn left_regular_matrix(g: &GroupAlgebraElement) -> Matrix {
    let all = Permutation::all(g.n);
    let dim = all.len();
    let cols: Vec<Vec<(usize, Rational)>> = crate::par::map(&all, |tau| {
        let mut col: Vec<(usize, Rational)> = g
            .terms
            .iter()
            .map(|(s, c)| (s.compose(tau).lex_index(), c.clone()))
            .collect();
        col.sort_by_key(|e| e.0);
        col
    });
    Matrix::from_sparse_cols(dim, &cols)
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let neg = *c < 0u32;
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs == 1u32 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{abs}{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, q};

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn small_shuffles() {
        assert_eq!(shuffle_element(1).unwrap().to_string(), "2[1]");
        assert_eq!(shuffle_element(2).unwrap().to_string(), "3[12] + [21]");
        assert!(shuffle_element(0).is_err());
    }

    #[test]
    fn symmetrizer_is_idempotent() {
        let s = symmetrizer(3).unwrap();
        assert_eq!(s.mul(&s), s);
        assert_eq!(symmetrizer(2).unwrap().coefficient(&p(&[2, 1])), frac(1, 2));
    }

    #[test]
    fn regular_matrix_of_identity() {
        assert_eq!(left_regular_matrix(&GroupAlgebraElement::identity(3)), Matrix::identity(6));
        let m = left_regular_matrix(&shuffle_element(1).unwrap());
        assert_eq!(m, Matrix::scalar(1, &q(2)));
    }

    #[test]
    fn display_signs() {
        let l = bracket_element();
        assert_eq!(l.to_string(), "[12] - [21]");
        assert_eq!(l.scale(&q(-2)).to_string(), "-2[12] + 2[21]");
    }
}
