use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Polynomial;
use crate::error::{Error, Result};

/// Quotient `num/den` of two polynomials in canonical form: `gcd(num, den) = 1`
/// and `den` is monic. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num/den` to canonical form.
    pub fn normalize(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g)?.expect("gcd divides numerator"),
                den.exact_div(&g)?.expect("gcd divides denominator"),
            )
        };
        Ok(Self::monic_parts(num, den))
    }

    /// Caller guarantees `gcd(num, den) = 1` and `den != 0`.
    pub(crate) fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        Self::monic_parts(num, den)
    }

    fn monic_parts(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coefficient().expect("nonzero denominator").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        Self { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Division by another rational function; errors on the zero function.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        let inv = Self::from_coprime(rhs.den.clone(), rhs.num.clone());
        Ok(self * &inv)
    }

    /// Exact value at `x`; a vanishing denominator is a pole.
    pub fn eval_at(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// `lim_{w -> 1}` computed by cancelling `(w - 1)` factors exactly.
    pub fn limit_at_one(&self) -> Result<BigRational> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let (dq, dr) = den.deflate_at_one();
            if !dr.is_zero() {
                return Ok(num.eval(&BigRational::one()) / dr);
            }
            let (nq, nr) = num.deflate_at_one();
            if !nr.is_zero() {
                return Err(Error::PoleAtOne);
            }
            num = nq;
            den = dq;
        }
    }

    /// The first `order + 1` coefficients of the expansion at `w = 0`.
    pub fn series_prefix(&self, order: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NoSeriesAtZero);
        }
        let d0_inv = d0.recip();
        let den = self.den.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.num.coeff(k);
            for j in 1..den.len().min(k + 1) {
                acc -= &den[j] * &out[k - j];
            }
            out.push(acc * &d0_inv);
        }
        Ok(out)
    }

    /// Display string with integer coefficients over a common denominator,
    /// e.g. `(2w^2 + 1)/(6w + 6)`. The canonical pair is authoritative.
    pub fn display_string(&self) -> String {
        let l = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = BigRational::from_integer(l);
        let num = self.num.scale(&scale);
        let den = self.den.scale(&scale);
        if den.degree() == Some(0) {
            let d = &den.coeffs()[0];
            if d.is_one() {
                return num.to_string();
            }
            return format!("({num})/{}", d.numer());
        }
        format!("({num})/({den})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_string())
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    // Henrici: with g = gcd(b, d), a/b + c/d = t / (b/g * d) where
    // t = a*(d/g) + c*(b/g), and only gcd(t, g) can cancel.
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&rhs.den);
        if g.degree() == Some(0) {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RationalFunction::from_coprime(num, &self.den * &rhs.den);
        }
        let b_g = exact(&self.den, &g);
        let d_g = exact(&rhs.den, &g);
        let t = &(&self.num * &d_g) + &(&rhs.num * &b_g);
        if t.is_zero() {
            return RationalFunction::zero();
        }
        let g2 = t.gcd(&g);
        let (t, g_rest) = if g2.degree() == Some(0) {
            (t, g)
        } else {
            (exact(&t, &g2), exact(&g, &g2))
        };
        RationalFunction::from_coprime(t, &(&b_g * &d_g) * &g_rest)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &exact(&self.num, &g1) * &exact(&rhs.num, &g2);
        let den = &exact(&self.den, &g2) * &exact(&rhs.den, &g1);
        RationalFunction::from_coprime(num, den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

fn exact(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if b.degree() == Some(0) && b.coeffs()[0].is_one() {
        return a.clone();
    }
    a.exact_div(b)
        .expect("nonzero divisor")
        .expect("divisor is a factor")
}

#[derive(Serialize, Deserialize)]
struct Parts {
    num: Polynomial,
    den: Polynomial,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Parts { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Parts::deserialize(d)?;
        RationalFunction::normalize(parts.num, parts.den).map_err(serde::de::Error::custom)
    }
}
