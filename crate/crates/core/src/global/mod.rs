//! Stringy Euler numbers of compact threefolds whose only singularities are
//! three-dimensional A-D-E points: the local-to-global formula, complete
//! intersections in projective space, and fiber products of rational
//! elliptic surfaces.

mod registry;
mod spec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use registry::{example_registry, GlobalSpec, RegistryEntry};
pub use spec::{CompleteIntersectionSpec, FiberProductSpec, Partner, SingularityMultiset};

use crate::algebra::{frac, rat, BigRational};
use crate::catalog::AdeType;
use crate::engine;
use crate::error::{Error, Result};

/// Milnor number, which for these singularities is the subscript.
pub fn milnor_number(ty: AdeType) -> u32 {
    ty.subscript()
}

/// Complete homogeneous symmetric polynomial `h_k(d_1, ..., d_m)`, the sum
/// over weakly increasing index tuples.
pub fn complete_homogeneous(k: u32, degrees: &[u32]) -> BigInt {
    fn go(k: u32, from: usize, degrees: &[u32]) -> BigInt {
        if k == 0 {
            return BigInt::one();
        }
        (from..degrees.len())
            .map(|j| BigInt::from(degrees[j]) * go(k - 1, j, degrees))
            .sum()
    }
    go(k, 0, degrees)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Euler number of a smooth complete intersection threefold of multidegree
/// `degrees` in `P^r`.
pub fn ci_smooth_euler(r: u32, degrees: &[u32]) -> Result<BigInt> {
    spec::check_ci_shape(r, degrees)?;
    let mut bracket = binomial(r + 1, 3);
    for nu in 1..=3u32 {
        let term = binomial(r + 1, 3 - nu) * complete_homogeneous(nu, degrees);
        if nu % 2 == 1 {
            bracket -= term;
        } else {
            bracket += term;
        }
    }
    let product: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    Ok(bracket * product)
}

/// `e_str` of the singularity type, from the engine.
pub fn local_e_str(ty: AdeType) -> Result<BigRational> {
    Ok(engine::compute(ty)?.e_number)
}

/// `e(Y) + Σ count · (e_str(local) - 1)`.
pub fn e_str_global(e_ambient: &BigRational, sings: &SingularityMultiset) -> Result<BigRational> {
    let mut total = e_ambient.clone();
    for &(ty, count) in sings.entries() {
        total += rat(i64::from(count)) * (local_e_str(ty)? - rat(1));
    }
    Ok(total)
}

/// Same total from the Euler number of a smoothing `Y'` of `Y`, using
/// `e(Y) = e(Y') + Σ μ`.
pub fn e_str_global_from_smoothing(
    e_smoothing: &BigRational,
    sings: &SingularityMultiset,
) -> Result<BigRational> {
    let milnor_sum: i64 = sings
        .entries()
        .iter()
        .map(|&(ty, count)| i64::from(count) * i64::from(milnor_number(ty)))
        .sum();
    e_str_global(&(e_smoothing + rat(milnor_sum)), sings)
}

/// One singularity type's share of a complete-intersection total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    #[serde(rename = "type")]
    pub ty: String,
    pub count: u32,
    #[serde(with = "crate::algebra::rational_string")]
    pub local_e_str: BigRational,
    pub milnor: u32,
    /// `count · (e_str + μ - 1)`.
    #[serde(with = "crate::algebra::rational_string")]
    pub total: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CiReport {
    #[serde(with = "crate::algebra::integer_string")]
    pub smooth_euler: BigInt,
    pub contributions: Vec<Contribution>,
    #[serde(with = "crate::algebra::rational_string")]
    pub e_str: BigRational,
}

/// `e(Y') + Σ count · (e_str + μ - 1)` with `Y'` a smoothing of `Y`.
pub fn ci_report(spec: &CompleteIntersectionSpec) -> Result<CiReport> {
    let smooth_euler = ci_smooth_euler(spec.r, &spec.degrees)?;
    let mut e_str = BigRational::from_integer(smooth_euler.clone());
    let mut contributions = Vec::new();
    for &(ty, count) in spec.sings.entries() {
        let local = local_e_str(ty)?;
        let mu = milnor_number(ty);
        let total = rat(i64::from(count)) * (&local + rat(i64::from(mu)) - rat(1));
        e_str += &total;
        contributions.push(Contribution { ty: ty.to_string(), count, local_e_str: local, milnor: mu, total });
    }
    Ok(CiReport { smooth_euler, contributions, e_str })
}

pub fn e_str_ci(spec: &CompleteIntersectionSpec) -> Result<BigRational> {
    Ok(ci_report(spec)?.e_str)
}

/// `2 Σ b b' + (12/5) Σ b`, over the `I_b x I_b'` and `I_b x II` fibers.
pub fn e_str_fiber_product(spec: &FiberProductSpec) -> BigRational {
    let mut total = BigRational::zero();
    for &(b, partner) in spec.fibers() {
        let b = rat(i64::from(b));
        total += match partner {
            Partner::I(b2) => rat(2) * b * rat(i64::from(b2)),
            Partner::II => frac(12, 5) * b,
        };
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    /// `Σ e(Z_s) e(Z'_s)`.
    #[serde(with = "crate::algebra::rational_string")]
    pub euler: BigRational,
    /// Nodes from `I_b x I_b'` fibers.
    pub nodes: u64,
    /// Cusp-type points from `I_b x II` fibers.
    pub cusp_points: u64,
    #[serde(with = "crate::algebra::rational_string")]
    pub local_sum: BigRational,
    #[serde(with = "crate::algebra::rational_string")]
    pub e_str: BigRational,
}

/// `e(Y)` plus the local corrections: every node is an `A_1` point and every
/// point over an `I_b x II` fiber an `A_2` point.
pub fn fiber_product_report(spec: &FiberProductSpec) -> Result<FiberReport> {
    let mut euler = BigRational::zero();
    let mut nodes = 0u64;
    let mut cusps = 0u64;
    for &(b, partner) in spec.fibers() {
        let (e2, pts, node) = match partner {
            Partner::I(b2) => (u64::from(b2), u64::from(b) * u64::from(b2), true),
            Partner::II => (2, u64::from(b), false),
        };
        euler += rat(i64::from(b)) * BigRational::from_integer(BigInt::from(e2));
        if node {
            nodes += pts;
        } else {
            cusps += pts;
        }
    }
    let a1 = local_e_str(AdeType::A(1))? - rat(1);
    let a2 = local_e_str(AdeType::A(2))? - rat(1);
    let local_sum = BigRational::from_integer(BigInt::from(nodes)) * a1
        + BigRational::from_integer(BigInt::from(cusps)) * a2;
    let e_str = &euler + &local_sum;
    Ok(FiberReport { euler, nodes, cusp_points: cusps, local_sum, e_str })
}

/// Rejects inputs the formulas do not cover.
pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_anchors() {
        assert_eq!(ci_smooth_euler(4, &[5]).unwrap(), BigInt::from(-200));
        assert_eq!(ci_smooth_euler(5, &[2, 2]).unwrap(), BigInt::from(0));
        assert_eq!(ci_smooth_euler(4, &[3]).unwrap(), BigInt::from(-6));
        assert_eq!(ci_smooth_euler(4, &[4]).unwrap(), BigInt::from(-56));
        assert!(ci_smooth_euler(5, &[5]).is_err());
        assert!(ci_smooth_euler(3, &[]).is_err());
    }

    #[test]
    fn h_small() {
        assert_eq!(complete_homogeneous(2, &[2, 3]), BigInt::from(4 + 6 + 9));
        assert_eq!(complete_homogeneous(0, &[7]), BigInt::one());
        assert_eq!(complete_homogeneous(3, &[]), BigInt::zero());
    }

    #[test]
    fn milnor() {
        assert_eq!(milnor_number(AdeType::A(1)), 1);
        assert_eq!(milnor_number(AdeType::D(6)), 6);
        assert_eq!(milnor_number(AdeType::E8), 8);
    }

    #[test]
    fn nodal_globals() {
        // e(Y) = -200 + 125 for the singular quintic itself
        let s: SingularityMultiset = "A:1x125".parse().unwrap();
        assert_eq!(e_str_global(&rat(-75), &s).unwrap(), rat(50));
        assert_eq!(e_str_global_from_smoothing(&rat(-200), &s).unwrap(), rat(50));
        let s: SingularityMultiset = "A:1x126".parse().unwrap();
        assert_eq!(e_str_global_from_smoothing(&rat(-200), &s).unwrap(), rat(52));
        assert_eq!(e_str_global(&rat(0), &SingularityMultiset::default()).unwrap(), rat(0));
    }

    #[test]
    fn fiber_products() {
        let y1: FiberProductSpec = "5xI:7 5xII".parse().unwrap();
        assert_eq!(e_str_fiber_product(&y1), rat(82));
        assert_eq!(fiber_product_report(&y1).unwrap().e_str, rat(82));
        let y2: FiberProductSpec = "8xI:7 2xII".parse().unwrap();
        assert_eq!(e_str_fiber_product(&y2), rat(116) + frac(4, 5));
        assert_eq!(e_str_fiber_product(&FiberProductSpec::default()), rat(0));
    }
}
