use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{edge_key, link_h11, reference, ResolutionGraph, SurfaceKind};
use crate::closed::theorem_exponents;
use crate::error::Error;

/// Outcome of one structural check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ty: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `Ok` when every check passed, otherwise a validation error listing
    /// the failed checks.
    pub fn into_result(self) -> Result<(), Error> {
        if self.passed() {
            return Ok(());
        }
        let failures = self
            .failures()
            .map(|c| format!("{} ({})", c.name, c.detail))
            .collect::<Vec<_>>()
            .join("; ");
        Err(Error::Validation { ty: self.ty, failures })
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name, passed, detail: detail.into() }
}

fn sorted_pair(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

fn sorted_triple(a: u32, b: u32, c: u32) -> (u32, u32, u32) {
    let mut t = [a, b, c];
    t.sort_unstable();
    (t[0], t[1], t[2])
}

/// Runs every structural check on `g`; never fails, the report carries the
/// verdicts.
pub fn validate_graph(g: &ResolutionGraph) -> ValidationReport {
    let mut checks = Vec::new();
    let n = g.divisors.len();

    let ids_ok = g.divisors.iter().enumerate().all(|(i, d)| d.id == i);
    let labels: BTreeSet<&str> = g.divisors.iter().map(|d| d.label.as_str()).collect();
    let in_range = g.edges.iter().all(|&(a, b)| a < b && b < n)
        && g.triangles.iter().all(|&(a, b, c)| a < b && b < c && c < n);
    checks.push(check(
        "well-formed",
        ids_ok && labels.len() == n && in_range,
        format!("{n} divisors, ids positional: {ids_ok}, ids in range: {in_range}"),
    ));
    if !in_range {
        return ValidationReport { ty: g.ty.to_string(), checks };
    }

    let positive = g.divisors.iter().all(|d| d.discrepancy >= 1);
    checks.push(check("discrepancy-positive", positive, "every a_i >= 1"));

    let (b, t) = reference::edge_triangle_counts(g.ty);
    checks.push(check(
        "edge-count",
        g.edge_count() == b,
        format!("found {}, expected {b}", g.edge_count()),
    ));
    checks.push(check(
        "triangle-count",
        g.triangle_count() == t,
        format!("found {}, expected {t}", g.triangle_count()),
    ));

    let open: Vec<String> = g
        .triangles
        .iter()
        .filter(|&&(a, b, c)| {
            !(g.edges.contains(&edge_key(a, b))
                && g.edges.contains(&edge_key(a, c))
                && g.edges.contains(&edge_key(b, c)))
        })
        .map(|&(a, b, c)| format!("{{{},{},{}}}", g.label(a), g.label(b), g.label(c)))
        .collect();
    checks.push(check(
        "triangle-edges",
        open.is_empty(),
        if open.is_empty() { "every triangle is a 3-clique".to_string() } else { open.join(" ") },
    ));

    // Four triangles on four divisors would put a point on all four.
    let mut quads = Vec::new();
    for &(a, b, c) in &g.triangles {
        for v in (c + 1)..n {
            if g.triangles.contains(&(a, b, v))
                && g.triangles.contains(&(a, c, v))
                && g.triangles.contains(&(b, c, v))
            {
                quads.push(format!("{{{},{},{},{}}}", g.label(a), g.label(b), g.label(c), g.label(v)));
            }
        }
    }
    checks.push(check(
        "no-quadruple-point",
        quads.is_empty(),
        if quads.is_empty() { "no four divisors share a point".to_string() } else { quads.join(" ") },
    ));

    let mut found: Vec<(String, u32)> =
        g.divisors.iter().map(|d| (d.label.clone(), d.discrepancy)).collect();
    let mut expected = reference::discrepancies(g.ty);
    found.sort();
    expected.sort();
    let diff: Vec<String> = found
        .iter()
        .filter(|x| !expected.contains(x))
        .map(|(l, a)| format!("{l}: a={a}"))
        .collect();
    checks.push(check(
        "discrepancy-table",
        found == expected,
        if found == expected {
            format!("{} divisors match", found.len())
        } else if diff.is_empty() {
            "divisor count differs".to_string()
        } else {
            format!("unexpected {}", diff.join(", "))
        },
    ));

    let mut census: BTreeMap<SurfaceKind, usize> = BTreeMap::new();
    for d in &g.divisors {
        *census.entry(d.kind).or_default() += 1;
    }
    let want = reference::surface_census(g.ty);
    checks.push(check(
        "surface-census",
        census == want,
        format!("found {}, expected {}", fmt_census(&census), fmt_census(&want)),
    ));

    let h = link_h11(g.ty);
    checks.push(check(
        "link-h11",
        g.h11_link == h,
        format!("found {}, expected {h}", g.h11_link),
    ));

    if let Some(theorem) = theorem_exponents(g.ty) {
        let theorem = theorem.sorted();
        let a = |i: usize| g.discrepancy(i);
        let mut pairs: Vec<_> = g.edges.iter().map(|&(i, j)| sorted_pair(a(i), a(j))).collect();
        pairs.sort_unstable();
        let mut triples: Vec<_> =
            g.triangles.iter().map(|&(i, j, k)| sorted_triple(a(i), a(j), a(k))).collect();
        triples.sort_unstable();
        checks.push(check(
            "edge-exponents",
            pairs == theorem.pairs,
            multiset_detail(&pairs, &theorem.pairs),
        ));
        checks.push(check(
            "triangle-exponents",
            triples == theorem.triples,
            multiset_detail(&triples, &theorem.triples),
        ));
    }

    ValidationReport { ty: g.ty.to_string(), checks }
}

fn fmt_census(c: &BTreeMap<SurfaceKind, usize>) -> String {
    c.iter().map(|(k, n)| format!("{n}x{k}")).collect::<Vec<_>>().join(" ")
}

fn multiset_detail<T: Ord + Clone + std::fmt::Debug>(found: &[T], want: &[T]) -> String {
    if found == want {
        return format!("{} entries match", found.len());
    }
    let mut rest = want.to_vec();
    let mut extra = Vec::new();
    for x in found {
        match rest.iter().position(|y| y == x) {
            Some(p) => {
                rest.remove(p);
            }
            None => extra.push(x.clone()),
        }
    }
    format!("unexpected {extra:?}, missing {rest:?}")
}
