//! Stringy E-function, Euler number and index of a resolution graph.
//!
//! [`e_str_function`] sums over divisors, edges and triangles using the
//! simplified edge factors; [`e_str_function_oracle`] sums over the strata
//! `D_J°` directly. [`e_str_direct`] evaluates every factor at `w = 1`
//! instead of taking a limit.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{
    rat, BigRational, CyclotomicFraction as CF, CyclotomicProduct, Polynomial, RationalFunction,
};
use crate::catalog::{build_graph, validate_graph, AdeType, ResolutionGraph};
use crate::error::Result;

/// `E_str`, `e_str` and the stringy index of one singularity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StringyResult {
    pub e_function: RationalFunction,
    #[serde(with = "crate::algebra::rational_string")]
    pub e_number: BigRational,
    #[serde(with = "crate::algebra::integer_string")]
    pub index: BigInt,
}

/// `(w - 1)(1 + (1 + h11) w + w^2)`.
pub fn open_stratum_e(g: &ResolutionGraph) -> RationalFunction {
    open_stratum_poly(g.h11_link).into()
}

fn open_stratum_poly(h11: u32) -> Polynomial {
    let inner = Polynomial::new(vec![rat(1), rat(1 + i64::from(h11)), rat(1)]);
    &Polynomial::from_ints(&[-1, 1]) * &inner
}

/// `(w - w^{a+1}) / (w^{a+1} - 1)`, canonical.
pub fn edge_factor(a: u32) -> RationalFunction {
    edge_factor_cf(a).to_rational_function()
}

// (w - w^{a+1})/(w^{a+1} - 1) = -(w + ... + w^a)/(1 + w + ... + w^a)
fn edge_factor_cf(a: u32) -> CF {
    let num = Polynomial::new(
        std::iter::once(rat(0)).chain((0..a).map(|_| rat(-1))).collect(),
    );
    CF::new(&num, CyclotomicProduct::geometric(a + 1))
}

// (w - 1)/(w^{a+1} - 1) = 1/(1 + w + ... + w^a)
fn singleton_factor_cf(a: u32) -> CF {
    CF::new(&Polynomial::one(), CyclotomicProduct::geometric(a + 1))
}

/// `E_str` from a validated graph.
pub fn e_str_function(g: &ResolutionGraph) -> Result<RationalFunction> {
    validate_graph(g).into_result()?;
    Ok(e_str_function_unchecked(g))
}

/// Same sum as [`e_str_function`] without validating `g` first.
pub fn e_str_function_unchecked(g: &ResolutionGraph) -> RationalFunction {
    let a = |i: usize| g.divisors[i].discrepancy;
    let mut ef: BTreeMap<u32, CF> = BTreeMap::new();
    for d in &g.divisors {
        ef.entry(d.discrepancy).or_insert_with(|| edge_factor_cf(d.discrepancy));
    }

    let singletons = CF::sum(
        g.divisors
            .iter()
            .map(|d| &CF::from_polynomial(&d.kind.e_polynomial()) * &singleton_factor_cf(d.discrepancy))
            .collect(),
    );
    let edges = CF::sum(g.edges.iter().map(|&(i, j)| &ef[&a(i)] * &ef[&a(j)]).collect());
    let edge_block = &CF::from_polynomial(&Polynomial::from_ints(&[1, 1]))
        * &(&edges - &CF::constant(rat(g.edge_count() as i64)));
    let triangles = CF::sum(
        g.triangles
            .iter()
            .map(|&(i, j, k)| &(&ef[&a(i)] * &ef[&a(j)]) * &ef[&a(k)])
            .collect(),
    );
    CF::sum(vec![
        CF::from_polynomial(&open_stratum_poly(g.h11_link)),
        singletons,
        edge_block,
        triangles,
        CF::constant(rat(g.triangle_count() as i64)),
    ])
    .to_rational_function()
}

/// `E_str` as the sum over all strata `D_J°` of `E(D_J°)` times the product
/// of `(w - 1)/(w^{a_j+1} - 1)`.
pub fn e_str_function_oracle(g: &ResolutionGraph) -> Result<RationalFunction> {
    validate_graph(g).into_result()?;
    Ok(e_str_function_oracle_unchecked(g))
}

pub fn e_str_function_oracle_unchecked(g: &ResolutionGraph) -> RationalFunction {
    let w_minus_1 = Polynomial::from_ints(&[-1, 1]);
    let line = Polynomial::from_ints(&[1, 1]);
    let factor = |i: usize| CF::over_binomial(&w_minus_1, g.divisors[i].discrepancy + 1);

    let mut strata = vec![CF::from_polynomial(&open_stratum_poly(g.h11_link))];
    for d in &g.divisors {
        let deg = g.degree(d.id) as i64;
        let tri = g.triangles_at(d.id) as i64;
        let open = &(&d.kind.e_polynomial() - &line.scale(&rat(deg))) + &Polynomial::constant(rat(tri));
        strata.push(&CF::from_polynomial(&open) * &factor(d.id));
    }
    for &(i, j) in &g.edges {
        let open = &line - &Polynomial::constant(rat(g.triangles_on_edge(i, j) as i64));
        strata.push(&(&CF::from_polynomial(&open) * &factor(i)) * &factor(j));
    }
    for &(i, j, k) in &g.triangles {
        strata.push(&(&factor(i) * &factor(j)) * &factor(k));
    }
    CF::sum(strata).to_rational_function()
}

/// `e_str` as the limit of `E_str` at `w = 1`.
pub fn e_str_number(g: &ResolutionGraph) -> Result<BigRational> {
    e_str_function(g)?.limit_at_one()
}

/// `e_str` with every factor evaluated at `w = 1`:
/// `(w-1)/(w^{a+1}-1) -> 1/(a+1)` and the edge factor `-> -a/(a+1)`.
pub fn e_str_direct(g: &ResolutionGraph) -> Result<BigRational> {
    validate_graph(g).into_result()?;
    Ok(e_str_direct_unchecked(g))
}

pub fn e_str_direct_unchecked(g: &ResolutionGraph) -> BigRational {
    let one = BigRational::one();
    let r = |i: usize| {
        let a = BigInt::from(g.divisors[i].discrepancy);
        BigRational::new(a.clone(), a + 1)
    };
    let mut total = BigRational::zero();
    for d in &g.divisors {
        let e = d.kind.e_polynomial().eval(&one);
        total += e / BigRational::from_integer(BigInt::from(d.discrepancy) + 1);
    }
    let mut pairs = BigRational::zero();
    for &(i, j) in &g.edges {
        pairs += r(i) * r(j);
    }
    total += rat(2) * (pairs - rat(g.edge_count() as i64));
    for &(i, j, k) in &g.triangles {
        total -= r(i) * r(j) * r(k);
    }
    total + rat(g.triangle_count() as i64)
}

/// Smallest `l >= 1` with `l * e` integral.
pub fn stringy_index(e: &BigRational) -> BigInt {
    e.reduced().denom().clone()
}

/// All three invariants for the catalog entry of `ty`.
pub fn compute(ty: AdeType) -> Result<StringyResult> {
    let g = build_graph(ty)?;
    let e_function = e_str_function(&g)?;
    let e_number = e_function.limit_at_one()?;
    let index = stringy_index(&e_number);
    Ok(StringyResult { e_function, e_number, index })
}
