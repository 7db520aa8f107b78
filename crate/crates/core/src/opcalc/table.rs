use malachite_base::num::arithmetic::traits::Pow;
use malachite_nz::natural::Natural;

use super::series::{compose_series, egf_compose, hadamard, DimSeries};
use crate::error::{Error, Result};
use crate::linalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperadName {
    /// The unit 𝕊-module: k in arity 1.
    I,
    As,
    Com,
    Lie,
    Mag,
    Nil,
    Perm,
    PreLie,
    PostLie,
    Dias,
    Zinb,
}

impl OperadName {
    pub const ALL: [OperadName; 11] = [
        OperadName::I,
        OperadName::As,
        OperadName::Com,
        OperadName::Lie,
        OperadName::Mag,
        OperadName::Nil,
        OperadName::Perm,
        OperadName::PreLie,
        OperadName::PostLie,
        OperadName::Dias,
        OperadName::Zinb,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        OperadName::ALL
            .into_iter()
            .find(|o| o.as_str().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OperadName::I => "I",
            OperadName::As => "As",
            OperadName::Com => "Com",
            OperadName::Lie => "Lie",
            OperadName::Mag => "Mag",
            OperadName::Nil => "Nil",
            OperadName::Perm => "Perm",
            OperadName::PreLie => "PreLie",
            OperadName::PostLie => "PostLie",
            OperadName::Dias => "Dias",
            OperadName::Zinb => "Zinb",
        }
    }
}

fn factorial(n: usize) -> Natural {
    (1..=n as u64).map(Natural::from).product()
}

fn catalan(n: usize) -> Natural {
    factorial(2 * n) / (factorial(n) * factorial(n + 1))
}

pub fn dims_table(name: OperadName, n_max: usize) -> DimSeries {
    let nat = |x: usize| Natural::from(x as u64);
    match name {
        OperadName::I => DimSeries::from_fn(n_max, |n| nat(usize::from(n == 1))),
        OperadName::As | OperadName::Zinb => DimSeries::from_fn(n_max, factorial),
        OperadName::Com => DimSeries::from_fn(n_max, |_| nat(1)),
        OperadName::Lie => DimSeries::from_fn(n_max, |n| factorial(n - 1)),
        OperadName::Mag => DimSeries::from_fn(n_max, |n| factorial(n) * catalan(n - 1)),
        OperadName::Nil => DimSeries::from_fn(n_max, |n| nat(match n {
            1 => 1,
            2 => 2,
            _ => 0,
        })),
        OperadName::Perm => DimSeries::from_fn(n_max, nat),
        OperadName::PreLie => DimSeries::from_fn(n_max, |n| Natural::from(n as u64).pow(n as u64 - 1)),
        OperadName::Dias => DimSeries::from_fn(n_max, |n| nat(n) * factorial(n)),
        OperadName::PostLie => DimSeries::from_fn(n_max, |n| factorial(2 * n - 1) / factorial(n)),
    }
}

/// Outcome of comparing P ∘ Q (or P ⊗ Q for Dias) with O aritywise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub lhs: DimSeries,
    pub rhs: DimSeries,
    /// Whether `lhs` was formed as a Hadamard product.
    pub hadamard: bool,
    pub equal: bool,
}

/// Compares dim (P ∘ Q)(n) with dim O(n) for n ≤ n_max. When O is Dias the
/// left side is the Hadamard product P ⊗ Q instead of the composite.
pub fn law_dim_check(p: OperadName, q: OperadName, o: OperadName, n_max: usize) -> Result<LawCheck> {
    let (a, b) = (dims_table(p, n_max), dims_table(q, n_max));
    let is_hadamard = o == OperadName::Dias;
    let lhs = if is_hadamard { hadamard(&a, &b, n_max) } else { egf_compose(&a, &b, n_max)? };
    let rhs = dims_table(o, n_max);
    let equal = lhs == rhs;
    Ok(LawCheck {
        lhs,
        rhs,
        hadamard: is_hadamard,
        equal,
    })
}

pub fn koszul_partner(name: OperadName) -> Result<OperadName> {
    use OperadName::*;
    Ok(match name {
        As => As,
        Com => Lie,
        Lie => Com,
        Mag => Nil,
        Nil => Mag,
        Perm => PreLie,
        PreLie => Perm,
        other => {
            return Err(Error::InvalidArgument(format!(
                "no Koszul dual recorded for {}",
                other.as_str()
            )))
        }
    })
}

/// f_{O^!}(−f_O(−x)) = x up to x^{n_max}, for O and its recorded dual.
pub fn koszul_dual_dim_check(name: OperadName, n_max: usize) -> Result<bool> {
    let dual = koszul_partner(name)?;
    let f = dims_table(name, n_max).egf(n_max);
    let g = dims_table(dual, n_max).egf(n_max);
    // −f(−x) flips the sign of the even coefficients
    let twisted: Vec<Rational> = f
        .iter()
        .enumerate()
        .map(|(n, c)| if n % 2 == 0 { -c } else { c.clone() })
        .collect();
    let h = compose_series(&g, &twisted, n_max);
    Ok(h.iter().enumerate().all(|(n, c)| *c == Rational::from(usize::from(n == 1))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(s: &DimSeries) -> Vec<u64> {
        s.dims.iter().map(|d| u64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn table_rows() {
        assert_eq!(list(&dims_table(OperadName::Lie, 5)), vec![1, 1, 2, 6, 24]);
        assert_eq!(list(&dims_table(OperadName::Mag, 4)), vec![1, 2, 12, 120]);
        assert_eq!(list(&dims_table(OperadName::PreLie, 4)), vec![1, 2, 9, 64]);
        assert_eq!(list(&dims_table(OperadName::Nil, 4)), vec![1, 2, 0, 0]);
    }

    #[test]
    fn postlie_against_keyed_row() {
        // entered by hand from −log(1 − x − x² − 2x³ − 5x⁴)
        assert_eq!(list(&dims_table(OperadName::PostLie, 4)), vec![1, 3, 20, 210]);
    }

    #[test]
    fn names_parse() {
        assert_eq!(OperadName::parse("postlie").unwrap(), OperadName::PostLie);
        assert_eq!(OperadName::parse("Pre-Lie").unwrap(), OperadName::PreLie);
        assert_eq!(OperadName::parse("dend").unwrap_err(), Error::UnknownName("dend".into()));
    }

    #[test]
    fn koszul_pairs() {
        for o in [OperadName::As, OperadName::Com, OperadName::Lie, OperadName::Mag, OperadName::Nil, OperadName::Perm, OperadName::PreLie] {
            assert!(koszul_dual_dim_check(o, 6).unwrap(), "{o:?}");
        }
        assert!(koszul_dual_dim_check(OperadName::Dias, 3).is_err());
    }
}
