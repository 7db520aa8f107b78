use std::fmt;

use malachite_base::num::basic::traits::Zero;
use malachite_nz::natural::Natural;

use crate::error::{Error, Result};
use crate::linalg::{rational::is_integer, Rational};

/// dims[n−1] = dim P(n) for arities 1..=n_max.
#[derive(Clone, PartialEq, Eq)]
pub struct DimSeries {
    pub dims: Vec<Natural>,
}

impl DimSeries {
    pub fn new(dims: Vec<Natural>) -> Self {
        DimSeries { dims }
    }

    pub fn from_fn(n_max: usize, f: impl Fn(usize) -> Natural) -> Self {
        DimSeries {
            dims: (1..=n_max).map(f).collect(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.dims.len()
    }

    /// dim P(n), zero beyond the horizon.
    pub fn get(&self, n: usize) -> Natural {
        if n == 0 {
            return Natural::ZERO;
        }
        self.dims.get(n - 1).cloned().unwrap_or(Natural::ZERO)
    }

    pub fn truncate(&self, n_max: usize) -> DimSeries {
        DimSeries::from_fn(n_max, |n| self.get(n))
    }

    /// EGF coefficients a_n = dim P(n)/n!, index 0..=n_max.
    pub(crate) fn egf(&self, n_max: usize) -> Vec<Rational> {
        let mut fact = Rational::from(1);
        let mut out = vec![Rational::from(0)];
        for n in 1..=n_max {
            fact *= Rational::from(n);
            out.push(Rational::from(self.get(n)) / &fact);
        }
        out
    }

    pub(crate) fn from_egf(coeffs: &[Rational]) -> Result<DimSeries> {
        let mut fact = Rational::from(1);
        let mut dims = Vec::new();
        for (n, c) in coeffs.iter().enumerate().skip(1) {
            fact *= Rational::from(n);
            let d = c * &fact;
            if !is_integer(&d) || d < 0u32 {
                return Err(Error::NonInteger {
                    arity: n,
                    value: d.to_string(),
                });
            }
            dims.push(Natural::try_from(d).expect("non-negative integer"));
        }
        Ok(DimSeries { dims })
    }
}

impl fmt::Debug for DimSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.dims.iter().map(|d| d.to_string())).finish()
    }
}

fn mul_trunc(a: &[Rational], b: &[Rational], n_max: usize) -> Vec<Rational> {
    let mut out = vec![Rational::from(0); n_max + 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0u32 {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n_max + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// f_a(f_b(x)) up to x^{n_max}: Σ_r a_r·f_b(x)^r, each power truncated.
pub(crate) fn compose_series(a: &[Rational], b: &[Rational], n_max: usize) -> Vec<Rational> {
    let mut out = vec![Rational::from(0); n_max + 1];
    out[0] = a.first().cloned().unwrap_or_else(|| Rational::from(0));
    let mut power = vec![Rational::from(0); n_max + 1];
    power[0] = Rational::from(1);
    for r in 1..=n_max {
        power = mul_trunc(&power, b, n_max);
        let Some(ar) = a.get(r) else { break };
        if *ar == 0u32 {
            continue;
        }
        for (o, p) in out.iter_mut().zip(&power) {
            *o += ar * p;
        }
    }
    out
}

/// dim (A ∘ B)(n) for n ≤ n_max. B must vanish in arity 0, which a
/// `DimSeries` cannot express anyway.
pub fn egf_compose(a: &DimSeries, b: &DimSeries, n_max: usize) -> Result<DimSeries> {
    DimSeries::from_egf(&compose_series(&a.egf(n_max), &b.egf(n_max), n_max))
}

/// Aritywise product dim A(n)·dim B(n), the dimensions of A ⊗_H B.
pub fn hadamard(a: &DimSeries, b: &DimSeries, n_max: usize) -> DimSeries {
    DimSeries::from_fn(n_max, |n| a.get(n) * b.get(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(v: &[u64]) -> DimSeries {
        DimSeries::new(v.iter().map(|&x| Natural::from(x)).collect())
    }

    #[test]
    fn unit_and_exp() {
        let unit = series(&[1]);
        let com = series(&[1; 6]);
        assert_eq!(egf_compose(&com, &unit, 6).unwrap(), com);
        assert_eq!(egf_compose(&unit, &com, 6).unwrap(), com);
        // Com ∘ Com counts set partitions
        assert_eq!(egf_compose(&com, &com, 6).unwrap(), series(&[1, 2, 5, 15, 52, 203]));
    }

    #[test]
    fn non_integer_is_reported() {
        let half = DimSeries::from_egf(&[Rational::from(0), Rational::from(1), Rational::from(1) / Rational::from(4)]);
        assert!(matches!(half, Err(Error::NonInteger { arity: 2, .. })));
    }
}
