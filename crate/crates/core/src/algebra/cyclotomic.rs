use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::convolve;
use super::{Polynomial, RationalFunction};

/// A product `Π Φ_d(w)^{e_d}` of cyclotomic polynomials, stored as the
/// exponent map `d -> e_d` (zero exponents are never stored).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclotomicProduct {
    exps: BTreeMap<u32, u32>,
}

impl CyclotomicProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// `Φ_d`.
    pub fn cyclotomic(d: u32) -> Self {
        assert!(d >= 1, "cyclotomic index must be positive");
        Self { exps: BTreeMap::from([(d, 1)]) }
    }

    /// `w^m - 1 = Π_{d | m} Φ_d`.
    pub fn binomial(m: u32) -> Self {
        assert!(m >= 1, "binomial exponent must be positive");
        Self { exps: divisors(m).into_iter().map(|d| (d, 1)).collect() }
    }

    /// `(w^m - 1)/(w - 1) = 1 + w + ... + w^{m-1}`.
    pub fn geometric(m: u32) -> Self {
        let mut b = Self::binomial(m);
        b.exps.remove(&1);
        b
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, d: u32) -> u32 {
        self.exps.get(&d).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(&d, &e)| (d, e))
    }

    pub fn degree(&self) -> u64 {
        self.exps
            .iter()
            .map(|(&d, &e)| u64::from(totient(d)) * u64::from(e))
            .sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self { exps: self.exps.iter().map(|(&d, &e)| (d, e * k)).collect() }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (&d, &e) in &other.exps {
            let slot = exps.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        Self { exps }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn quotient(&self, other: &Self) -> Option<Self> {
        let mut exps = self.exps.clone();
        for (&d, &e) in &other.exps {
            let slot = exps.get_mut(&d)?;
            if *slot < e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                exps.remove(&d);
            }
        }
        Some(Self { exps })
    }

    fn decrement(&mut self, d: u32) {
        if let Some(e) = self.exps.get_mut(&d) {
            *e -= 1;
            if *e == 0 {
                self.exps.remove(&d);
            }
        }
    }

    /// Multiplies out to a dense monic integer polynomial.
    pub fn expand(&self) -> Polynomial {
        let mut p = vec![BigInt::one()];
        for (&d, &e) in &self.exps {
            for _ in 0..e {
                p = mul_cyclotomic(&p, d);
            }
        }
        Polynomial::from_big_ints(p)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &CyclotomicProduct {
    type Output = CyclotomicProduct;

    fn mul(self, rhs: &CyclotomicProduct) -> CyclotomicProduct {
        let mut exps = self.exps.clone();
        for (&d, &e) in &rhs.exps {
            *exps.entry(d).or_insert(0) += e;
        }
        CyclotomicProduct { exps }
    }
}

/// `scale * num(w) / den(w)` with `num` an integer polynomial and `den` a
/// product of cyclotomic polynomials.
///
/// Sums of terms like `c(w)/(w^m - 1)` stay cheap: the common denominator is
/// an exponent-wise maximum, and multiplying or dividing by `Φ_d` reduces to
/// a handful of sparse `w^e - 1` passes. Nothing is cancelled until
/// [`CyclotomicFraction::to_rational_function`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFraction {
    scale: BigRational,
    num: Vec<BigInt>,
    den: CyclotomicProduct,
}

impl CyclotomicFraction {
    pub fn zero() -> Self {
        Self { scale: BigRational::one(), num: Vec::new(), den: CyclotomicProduct::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(&Polynomial::constant(c), CyclotomicProduct::one())
    }

    pub fn from_polynomial(p: &Polynomial) -> Self {
        Self::new(p, CyclotomicProduct::one())
    }

    pub fn new(num: &Polynomial, den: CyclotomicProduct) -> Self {
        let (ints, l) = num.integer_parts();
        let mut out = Self {
            scale: BigRational::new(BigInt::one(), l),
            num: ints,
            den,
        };
        out.tidy();
        out
    }

    /// `num / (w^m - 1)`.
    pub fn over_binomial(num: &Polynomial, m: u32) -> Self {
        Self::new(num, CyclotomicProduct::binomial(m))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn denominator(&self) -> &CyclotomicProduct {
        &self.den
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { scale: &self.scale * c, num: self.num.clone(), den: self.den.clone() }
    }

    /// Balanced pairwise summation; keeps intermediate common denominators
    /// small for as long as possible.
    pub fn sum(mut terms: Vec<Self>) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        while terms.len() > 1 {
            let mut next = Vec::with_capacity(terms.len().div_ceil(2));
            let mut it = terms.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(&a + &b),
                    None => next.push(a),
                }
            }
            terms = next;
        }
        terms.pop().expect("nonempty")
    }

    /// Cancels every cyclotomic factor shared by numerator and denominator
    /// and expands to the canonical [`RationalFunction`].
    pub fn to_rational_function(&self) -> RationalFunction {
        if self.is_zero() {
            return RationalFunction::zero();
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        let ds: Vec<u32> = den.exps.keys().copied().collect();
        for d in ds {
            while den.exponent(d) > 0 {
                match div_cyclotomic(&num, d) {
                    Some(q) => {
                        num = q;
                        den.decrement(d);
                    }
                    None => break,
                }
            }
        }
        // Φ_d are monic and irreducible over Q, so what is left is coprime.
        let num = Polynomial::from_big_ints(num).scale(&self.scale);
        RationalFunction::from_coprime(num, den.expand())
    }

    // Moves the integer content of `num` into `scale`.
    fn tidy(&mut self) {
        trim(&mut self.num);
        if self.num.is_empty() {
            self.scale = BigRational::one();
            self.den = CyclotomicProduct::one();
            return;
        }
        let mut g = BigInt::zero();
        for c in &self.num {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        if self.num.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        for c in &mut self.num {
            *c /= &g;
        }
        self.scale *= BigRational::from_integer(g);
    }

    fn lift(&self, to: &CyclotomicProduct) -> Vec<BigInt> {
        let cof = to.quotient(&self.den).expect("target is a common multiple");
        let mut p = self.num.clone();
        for (d, e) in cof.factors() {
            for _ in 0..e {
                p = mul_cyclotomic(&p, d);
            }
        }
        p
    }
}

impl<'a> Add<&'a CyclotomicFraction> for &'a CyclotomicFraction {
    type Output = CyclotomicFraction;

    fn add(self, rhs: &CyclotomicFraction) -> CyclotomicFraction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let den = self.den.lcm(&rhs.den);
        let a = self.lift(&den);
        let b = rhs.lift(&den);
        // scale_a * a + scale_b * b over the common scale denominator q
        let q = self.scale.denom().lcm(rhs.scale.denom());
        let ka = self.scale.numer() * (&q / self.scale.denom());
        let kb = rhs.scale.numer() * (&q / rhs.scale.denom());
        let len = a.len().max(b.len());
        let mut num = vec![BigInt::zero(); len];
        for (slot, c) in num.iter_mut().zip(&a) {
            *slot += &ka * c;
        }
        for (slot, c) in num.iter_mut().zip(&b) {
            *slot += &kb * c;
        }
        let mut out = CyclotomicFraction {
            scale: BigRational::new(BigInt::one(), q),
            num,
            den,
        };
        out.tidy();
        out
    }
}

impl<'a> Sub<&'a CyclotomicFraction> for &'a CyclotomicFraction {
    type Output = CyclotomicFraction;

    fn sub(self, rhs: &CyclotomicFraction) -> CyclotomicFraction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CyclotomicFraction> for &'a CyclotomicFraction {
    type Output = CyclotomicFraction;

    fn mul(self, rhs: &CyclotomicFraction) -> CyclotomicFraction {
        if self.is_zero() || rhs.is_zero() {
            return CyclotomicFraction::zero();
        }
        let mut out = CyclotomicFraction {
            scale: &self.scale * &rhs.scale,
            num: convolve(&self.num, &rhs.num),
            den: &self.den * &rhs.den,
        };
        out.tidy();
        out
    }
}

impl Neg for &CyclotomicFraction {
    type Output = CyclotomicFraction;

    fn neg(self) -> CyclotomicFraction {
        CyclotomicFraction { scale: -&self.scale, num: self.num.clone(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<CyclotomicFraction> for CyclotomicFraction {
            type Output = CyclotomicFraction;
            fn $m(self, rhs: CyclotomicFraction) -> CyclotomicFraction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn divisors(m: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mobius(mut n: u32) -> i8 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Binomials `w^e - 1` whose product (`plus`) over product (`minus`) is `Φ_d`.
fn binomial_split(d: u32) -> (Vec<u32>, Vec<u32>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for e in divisors(d) {
        match mobius(d / e) {
            1 => plus.push(e),
            -1 => minus.push(e),
            _ => {}
        }
    }
    (plus, minus)
}

fn mul_binomial(p: &[BigInt], e: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + e];
    for (i, c) in p.iter().enumerate() {
        out[i + e] += c;
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// `p / (w^e - 1)` if the division is exact.
fn div_binomial(p: &[BigInt], e: usize) -> Option<Vec<BigInt>> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    if p.len() <= e {
        return None;
    }
    let mut r = p.to_vec();
    let mut q = vec![BigInt::zero(); p.len() - e];
    for i in (e..p.len()).rev() {
        let c = std::mem::take(&mut r[i]);
        r[i - e] += &c;
        q[i - e] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

fn mul_cyclotomic(p: &[BigInt], d: u32) -> Vec<BigInt> {
    let (plus, minus) = binomial_split(d);
    let mut out = p.to_vec();
    for e in plus {
        out = mul_binomial(&out, e as usize);
    }
    for e in minus {
        out = div_binomial(&out, e as usize).expect("cyclotomic identity is exact");
    }
    out
}

fn div_cyclotomic(p: &[BigInt], d: u32) -> Option<Vec<BigInt>> {
    let (plus, minus) = binomial_split(d);
    let mut out = p.to_vec();
    for e in minus {
        out = mul_binomial(&out, e as usize);
    }
    for e in plus {
        out = div_binomial(&out, e as usize)?;
    }
    Some(out)
}
