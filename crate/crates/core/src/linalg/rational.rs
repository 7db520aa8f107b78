use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Pow;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::logic::traits::SignificantBits;
pub use malachite_q::Rational;

use crate::error::{Error, Result};

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

pub fn frac(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::from(n) / Rational::from(d)
}

pub fn zero() -> Rational {
    Rational::ZERO
}

pub fn one() -> Rational {
    Rational::ONE
}

pub fn pow2(k: u32) -> Rational {
    Rational::from(2u32).pow(k as u64)
}

/// Bits of numerator plus bits of denominator; the pivot cost used by elimination.
pub fn bit_cost(x: &Rational) -> u64 {
    x.significant_bits()
}

/// Parses `"p/q"` or `"p"`. The denominator must be a positive integer; no
/// whitespace is accepted inside the string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Malformed(format!("`{s}` is not a rational of the form p/q with q > 0"));
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    if let Some((_, den)) = s.split_once('/') {
        if den.starts_with('-') || den.starts_with('+') {
            return Err(bad());
        }
    }
    Rational::from_str(s).map_err(|_| bad())
}

/// Canonical string form, `p/q` in lowest terms or `p` for integers.
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn is_integer(x: &Rational) -> bool {
    *x.denominator_ref() == 1u32
}

pub fn to_i64(x: &Rational) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    i64::try_from(x).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), frac(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), q(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("1 /2").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn lowest_terms_roundtrip() {
        let x = frac(10, -4);
        assert_eq!(fmt_rational(&x), "-5/2");
        assert_eq!(parse_rational(&fmt_rational(&x)).unwrap(), x);
        assert_eq!(to_i64(&q(-7)), Some(-7));
        assert_eq!(to_i64(&frac(1, 2)), None);
        assert_eq!(pow2(5), q(32));
    }
}
