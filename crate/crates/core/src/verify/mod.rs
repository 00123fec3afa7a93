//! The cross-check battery: catalog validation, agreement of the three
//! E-function routes, limit against direct evaluation, series integrality,
//! the value and index tables, and the global examples.
//!
//! Checks over different types run in parallel; the report is ordered by
//! check name and, within a check, by type, so the first counterexample is
//! deterministic.

mod corrupt;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{format_rational, rat};
use crate::catalog::{branch_count, build_graph, link_h11, milnor_data, validate_graph, AdeType};
use crate::closed::{closed_e_function, closed_e_number, closed_index, milnor_table};
use crate::engine::{
    e_str_direct_unchecked, e_str_function_oracle_unchecked, e_str_function_unchecked, stringy_index,
};
use crate::error::Error;
use crate::global::{
    ci_smooth_euler, e_str_fiber_product, e_str_global_from_smoothing, example_registry,
    fiber_product_report, FiberProductSpec, Partner, SingularityMultiset,
};

pub use corrupt::{all_corruptions, Change, Corruption};

/// Number of power-series coefficients tested for integrality.
pub const SERIES_TERMS: usize = 31;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    #[default]
    All,
    Local,
    Global,
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(Scope::All),
            "local" => Ok(Scope::Local),
            "global" => Ok(Scope::Global),
            _ => Err(Error::Parse {
                what: "scope",
                token: s.to_string(),
                reason: "expected all, local or global".to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub scope: Scope,
    pub max_n: u32,
    /// Applied to the catalog graph of its type before the local checks.
    pub corruption: Option<Corruption>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { scope: Scope::All, max_n: 40, corruption: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub types: Vec<String>,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{verdict} {} ({}/{} cases)", c.name, c.cases - c.failures, c.cases)?;
            if let Some(ex) = &c.first_counterexample {
                write!(f, ": {ex}")?;
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

/// One case of one check: `None` on success, otherwise the counterexample.
type Case = (&'static str, Option<String>);

fn case(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Case {
    (name, if ok { None } else { Some(shorten(detail())) })
}

const MAX_DETAIL: usize = 240;

fn shorten(mut s: String) -> String {
    if s.len() > MAX_DETAIL {
        let mut cut = MAX_DETAIL;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str(" ...");
    }
    s
}

/// Runs the battery selected by `opts`.
pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let types = match opts.scope {
        Scope::Global => Vec::new(),
        _ => AdeType::up_to(opts.max_n),
    };
    let mut cases: Vec<Case> = types
        .par_iter()
        .map(|&ty| local_cases(ty, opts.corruption.as_ref()))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    if opts.scope != Scope::Local {
        cases.extend(global_cases());
    }

    let mut grouped: BTreeMap<&'static str, CheckOutcome> = BTreeMap::new();
    for (name, failure) in cases {
        let entry = grouped.entry(name).or_insert_with(|| CheckOutcome {
            name: name.to_string(),
            passed: true,
            cases: 0,
            failures: 0,
            first_counterexample: None,
        });
        entry.cases += 1;
        if let Some(detail) = failure {
            entry.passed = false;
            entry.failures += 1;
            entry.first_counterexample.get_or_insert(detail);
        }
    }
    VerifyReport {
        types: types.iter().map(ToString::to_string).collect(),
        checks: grouped.into_values().collect(),
    }
}

/// Local checks for one type; each check contributes exactly one case.
pub fn local_cases(ty: AdeType, corruption: Option<&Corruption>) -> Vec<Case> {
    let mut g = match build_graph(ty) {
        Ok(g) => g,
        Err(e) => return vec![("graph-validation", Some(format!("{ty}: {e}")))],
    };
    if let Some(c) = corruption.filter(|c| c.ty == ty) {
        c.apply(&mut g);
    }
    let mut out = Vec::new();

    let report = validate_graph(&g);
    out.push(case("graph-validation", report.passed(), || {
        let failed: Vec<String> = report.failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
        format!("{ty}: {}", failed.join("; "))
    }));

    let main = e_str_function_unchecked(&g);
    let oracle = e_str_function_oracle_unchecked(&g);
    out.push(case("routes-oracle", main == oracle, || {
        format!("{ty}: engine {} vs strata {}", main.display_string(), oracle.display_string())
    }));
    match closed_e_function(ty) {
        Ok(closed) => out.push(case("routes-closed-form", main == closed, || {
            format!("{ty}: engine {} vs closed form {}", main.display_string(), closed.display_string())
        })),
        Err(e) => out.push(("routes-closed-form", Some(format!("{ty}: {e}")))),
    }

    let limit = match main.limit_at_one() {
        Ok(l) => l,
        Err(e) => {
            out.push(("limit-vs-direct", Some(format!("{ty}: {e}"))));
            return out;
        }
    };
    let direct = e_str_direct_unchecked(&g);
    out.push(case("limit-vs-direct", limit == direct, || {
        format!("{ty}: limit {} vs direct {}", format_rational(&limit), format_rational(&direct))
    }));

    match main.series_prefix(SERIES_TERMS - 1) {
        Ok(coeffs) => {
            let bad = coeffs.iter().position(|c| !c.is_integer());
            out.push(case("series-integrality", bad.is_none(), || {
                let k = bad.unwrap_or_default();
                format!("{ty}: coefficient of w^{k} is {}", format_rational(&coeffs[k]))
            }));
        }
        Err(e) => out.push(("series-integrality", Some(format!("{ty}: {e}")))),
    }

    if let Ok(table) = closed_e_number(ty) {
        out.push(case("e-number-table", limit == table, || {
            format!("{ty}: computed {} vs table {}", format_rational(&limit), format_rational(&table))
        }));
    }
    if let Ok(check) = closed_index(ty) {
        let index = stringy_index(&limit);
        out.push(case("index-table", check.contains(&index), || {
            format!("{ty}: computed {index} vs table {check}")
        }));
    }

    let m = milnor_data(ty);
    let ok = (m.mu, m.branches, m.s1, m.s2) == milnor_table(ty)
        && link_h11(ty) + 1 == branch_count(ty)
        && g.h11_link == link_h11(ty);
    out.push(case("link-hodge", ok, || {
        format!("{ty}: derived {m:?}, table {:?}, graph h11 {}", milnor_table(ty), g.h11_link)
    }));
    out
}

fn global_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for entry in example_registry() {
        let got = entry.spec.e_str();
        let ok = got.as_ref().is_ok_and(|v| *v == entry.expected);
        out.push(case("global-registry", ok, || match &got {
            Ok(v) => format!(
                "{}: computed {} vs recorded {}",
                entry.name,
                format_rational(v),
                format_rational(&entry.expected)
            ),
            Err(e) => format!("{}: {e}", entry.name),
        }));
    }

    for (e_smooth, k) in [(-6, 10), (-56, 45), (-200, 130), (-200, 125), (-200, 126)] {
        let sings = SingularityMultiset::single(AdeType::A(1), k).expect("positive count");
        let got = e_str_global_from_smoothing(&rat(e_smooth), &sings);
        let want = rat(e_smooth + 2 * i64::from(k));
        let ok = got.as_ref().is_ok_and(|v| *v == want);
        out.push(case("global-nodes", ok, || format!("e = {e_smooth}, {k} nodes: {got:?}")));
    }

    for spec in fiber_specs() {
        let closed = e_str_fiber_product(&spec);
        let routed = fiber_product_report(&spec).map(|r| r.e_str);
        let ok = routed.as_ref().is_ok_and(|v| *v == closed);
        out.push(case("global-fiber-routes", ok, || {
            format!("{:?}: closed {} vs e(Y) + locals {routed:?}", spec.fibers(), format_rational(&closed))
        }));
    }

    for (r, degrees) in ci_shapes() {
        let base = ci_smooth_euler(r, &degrees).ok();
        let mut reversed = degrees.clone();
        reversed.reverse();
        let mut with_hyperplane = degrees.clone();
        with_hyperplane.push(1);
        let ok = base.is_some()
            && base == ci_smooth_euler(r, &reversed).ok()
            && base == ci_smooth_euler(r + 1, &with_hyperplane).ok();
        out.push(case("global-ci-euler", ok, || format!("P^{r}, degrees {degrees:?}")));
    }
    out
}

/// Every pair of single common fibers with `b, b' <= 12`, plus a few mixed
/// specs.
fn fiber_specs() -> Vec<FiberProductSpec> {
    let mut specs = Vec::new();
    for b in 1..=12u32 {
        specs.push(vec![(b, Partner::II)]);
        for b2 in 1..=12u32 {
            specs.push(vec![(b, Partner::I(b2))]);
        }
    }
    specs.push(vec![(5, Partner::I(7)), (5, Partner::II)]);
    specs.push(vec![(8, Partner::I(7)), (2, Partner::II)]);
    specs.push(vec![(1, Partner::I(1)), (12, Partner::I(12)), (3, Partner::II), (4, Partner::II)]);
    specs.into_iter().map(|f| FiberProductSpec::new(f).expect("positive indices")).collect()
}

fn ci_shapes() -> Vec<(u32, Vec<u32>)> {
    let mut shapes: Vec<(u32, Vec<u32>)> = (1..=7).map(|d| (4, vec![d])).collect();
    for d1 in 1..=5 {
        for d2 in 1..=5 {
            shapes.push((5, vec![d1, d2]));
        }
    }
    shapes.push((6, vec![2, 2, 2]));
    shapes.push((6, vec![3, 2, 1]));
    shapes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scope_filter() {
        let opts = VerifyOptions { scope: Scope::Local, max_n: 4, corruption: None };
        let report = run(&opts);
        assert_eq!(report.types, ["A_1", "A_2", "A_3", "A_4", "D_4", "E_6", "E_7", "E_8"]);
        assert!(report.checks.iter().all(|c| !c.name.starts_with("global")));
        assert_eq!(report.check("routes-oracle").unwrap().cases, 8);
    }

    #[test]
    fn checks_are_sorted() {
        let opts = VerifyOptions { scope: Scope::All, max_n: 5, corruption: None };
        let names: Vec<_> = run(&opts).checks.into_iter().map(|c| c.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn structural_checks_pass() {
        let report = run(&VerifyOptions { scope: Scope::Local, max_n: 12, corruption: None });
        for name in ["graph-validation", "routes-oracle", "routes-closed-form", "limit-vs-direct", "series-integrality", "link-hodge"] {
            assert!(report.check(name).unwrap().passed, "{name}: {report}");
        }
    }

    #[test]
    fn corrupted_e7_edge_is_reported() {
        let g = build_graph(AdeType::E7).unwrap();
        let &(i, j) = g.edges.iter().next().unwrap();
        let opts = VerifyOptions {
            scope: Scope::Local,
            max_n: 4,
            corruption: Some(Corruption::drop_edge(AdeType::E7, i, j)),
        };
        let report = run(&opts);
        assert!(!report.check("graph-validation").unwrap().passed);
        assert!(!report.check("routes-closed-form").unwrap().passed);
        assert!(report.check("routes-closed-form").unwrap().first_counterexample.as_ref().unwrap().starts_with("E_7"));
    }
}
