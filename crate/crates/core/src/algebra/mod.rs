//! Exact univariate arithmetic in the single variable `w = uv`.
//!
//! [`Polynomial`] is a dense coefficient vector over [`BigRational`];
//! [`RationalFunction`] is a quotient of two polynomials kept in canonical
//! form (coprime, monic denominator) so that equality is structural.
//! [`CyclotomicFraction`] is the accumulator the stringy formulas use: its
//! denominator is a product of cyclotomic polynomials held in factored form,
//! which keeps sums of many `1/(w^m - 1)` terms cheap.

mod cyclotomic;
mod poly;
mod ratfunc;

pub use cyclotomic::{CyclotomicFraction, CyclotomicProduct};
pub use num_rational::BigRational;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the `p/q` (or `p`) form produced by [`format_rational`].
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |reason: &str| Error::Parse {
        what: "rational",
        token: s.to_string(),
        reason: reason.to_string(),
    };
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("numerator is not an integer"))?;
    let d: BigInt = d.parse().map_err(|_| bad("denominator is not an integer"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

/// Serde adapter writing a [`BigRational`] as its `p/q` string.
pub mod rational_string {
    use super::{format_rational, parse_rational, BigRational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a [`BigInt`] as a decimal string.
pub mod integer_string {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&frac(67, 40)), "67/40");
        assert_eq!(format_rational(&frac(4, 2)), "2");
        assert_eq!(format_rational(&frac(3, -6)), "-1/2");
        assert_eq!(parse_rational("6953/864").unwrap(), frac(6953, 864));
        assert_eq!(parse_rational("-8/4").unwrap(), rat(-2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
