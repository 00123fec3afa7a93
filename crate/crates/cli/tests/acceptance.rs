//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use stringy_core::algebra::{format_rational, frac, rat};
use stringy_core::catalog::{branch_count, build_graph, link_h11, milnor_data, reference, validate_graph, AdeType};
use stringy_core::closed::{closed_e_function, closed_index, milnor_table};
use stringy_core::engine;
use stringy_core::global::{e_str_fiber_product, example_registry, fiber_product_report, FiberProductSpec, Partner};
use stringy_core::verify::{self, all_corruptions, Corruption, Scope, VerifyOptions};
use stringy_core::BigRational;

const MAX_N: u32 = 60;
const CORRUPTION_MAX_N: u32 = 12;

struct Outcome {
    passed: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn from_failures(summary: impl Into<String>, failures: Vec<String>) -> Self {
        Self { passed: failures.is_empty(), summary: summary.into(), failures }
    }
}

fn e_number(ty: AdeType) -> BigRational {
    engine::compute(ty).expect("catalog type computes").e_number
}

fn expect_value(failures: &mut Vec<String>, what: &str, got: &BigRational, want: &BigRational) {
    if got != want {
        failures.push(format!("{what}: got {}, expected {}", format_rational(got), format_rational(want)));
    }
}

fn local_values() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=MAX_N {
        let want = if n % 2 == 1 { rat(2) } else { rat(2) - frac(3, i64::from(n) + 3) };
        expect_value(&mut failures, &format!("A_{n}"), &e_number(AdeType::A(n)), &want);
    }
    expect_value(&mut failures, "E_6", &e_number(AdeType::E6), &frac(67, 40));
    expect_value(&mut failures, "E_7", &e_number(AdeType::E7), &frac(609_851, 189_000));
    expect_value(&mut failures, "E_8", &e_number(AdeType::E8), &frac(315_467, 230_400));
    expect_value(&mut failures, "D_6", &e_number(AdeType::D(6)), &frac(2633, 864));
    Outcome::from_failures("e_str of A_1..A_60, E_6, E_7, E_8, D_6", failures)
}

fn index_table() -> Outcome {
    let mut failures = Vec::new();
    let mut expect = |name: String, got: u64, want: u64| {
        if got != want {
            failures.push(format!("{name}: got {got}, expected {want}"));
        }
    };
    let index = |ty: AdeType| -> u64 {
        engine::compute(ty).unwrap().index.try_into().expect("index fits in u64")
    };
    for n in 1..=MAX_N {
        let want = match n {
            n if n % 2 == 1 => 1,
            n if n % 6 == 0 => u64::from(n / 3 + 1),
            n => u64::from(n + 3),
        };
        expect(format!("A_{n}"), index(AdeType::A(n)), want);
    }
    expect("E_6".into(), index(AdeType::E6), 40);
    expect("E_7".into(), index(AdeType::E7), 189_000);
    expect("E_8".into(), index(AdeType::E8), 230_400);
    for n in 4..=20 {
        let ty = AdeType::D(n);
        let got = engine::compute(ty).unwrap().index;
        let bound = closed_index(ty).unwrap();
        if !bound.contains(&got) {
            failures.push(format!("D_{n}: index {got} outside {bound}"));
        }
    }
    Outcome::from_failures("index of A_1..A_60, E_6, E_7, E_8; D_4..D_20 in range", failures)
}

fn check_failures(report: &verify::VerifyReport, names: &[&str]) -> Vec<String> {
    names
        .iter()
        .filter_map(|&name| match report.check(name) {
            Some(c) if c.passed => None,
            Some(c) => Some(format!(
                "{name}: {} of {} cases failed, first: {}",
                c.failures,
                c.cases,
                c.first_counterexample.as_deref().unwrap_or("?")
            )),
            None => Some(format!("{name}: not run")),
        })
        .collect()
}

fn graph_combinatorics(report: &verify::VerifyReport) -> Outcome {
    let mut failures = check_failures(report, &["graph-validation"]);
    for ty in AdeType::up_to(MAX_N) {
        let g = build_graph(ty).unwrap();
        let want = reference::edge_triangle_counts(ty);
        if (g.edge_count(), g.triangle_count()) != want {
            failures.push(format!("{ty}: (b, t) = ({}, {}), expected {want:?}", g.edge_count(), g.triangle_count()));
        }
    }
    Outcome::from_failures("b, t and exponent multisets over the whole range", failures)
}

fn link_hodge() -> Outcome {
    let rows = [AdeType::A(7), AdeType::A(8), AdeType::D(9), AdeType::D(10), AdeType::E6, AdeType::E7, AdeType::E8];
    let mut failures = Vec::new();
    for ty in rows.into_iter().chain(AdeType::up_to(MAX_N)) {
        let m = milnor_data(ty);
        if link_h11(ty) + 1 != branch_count(ty) {
            failures.push(format!("{ty}: h11 {} vs r - 1 = {}", link_h11(ty), branch_count(ty) - 1));
        }
        if (m.mu, m.branches, m.s1, m.s2) != milnor_table(ty) {
            failures.push(format!("{ty}: derived {m:?} vs table {:?}", milnor_table(ty)));
        }
        if build_graph(ty).unwrap().h11_link != link_h11(ty) {
            failures.push(format!("{ty}: graph h11 disagrees"));
        }
    }
    Outcome::from_failures("h11 = r - 1 and the Milnor table, all seven rows", failures)
}

fn stringy(args: &[&str]) -> (bool, serde_json::Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_stringy"))
        .args(args)
        .args(["--format", "json"])
        .output()
        .expect("stringy runs");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(serde_json::Value::Null);
    (out.status.success(), json)
}

fn global_examples() -> Outcome {
    let mut failures = Vec::new();
    for entry in example_registry() {
        match entry.spec.e_str() {
            Ok(v) => expect_value(&mut failures, entry.name, &v, &entry.expected),
            Err(e) => failures.push(format!("{}: {e}", entry.name)),
        }
    }
    let cli_cases: [(&[&str], &str); 9] = [
        (&["global-ci", "--r", "4", "--degrees", "5", "--sing", "A:1x125"], "50"),
        (&["global-ci", "--r", "4", "--degrees", "5", "--sing", "A:1x126"], "52"),
        (&["global-ci", "--r", "4", "--degrees", "3", "--sing", "A:1x10"], "14"),
        (&["global-ci", "--r", "4", "--degrees", "4", "--sing", "A:1x45"], "34"),
        (&["global-ci", "--r", "4", "--degrees", "5", "--sing", "A:1x130"], "60"),
        (&["global-ci", "--r", "5", "--degrees", "2,2", "--sing", "A:5x1"], "6"),
        (&["global-ci", "--r", "5", "--degrees", "2,2", "--sing", "D:6x1"], "6953/864"),
        (&["fiber-product", "5xI:7", "5xII"], "82"),
        (&["fiber-product", "8xI:7", "2xII"], "584/5"),
    ];
    for (args, want) in cli_cases {
        let (ok, json) = stringy(args);
        if !ok || json["e_number"] != want {
            failures.push(format!("stringy {}: got {}, expected {want}", args.join(" "), json["e_number"]));
        }
    }
    Outcome::from_failures("nine named threefolds, via the registry and the CLI", failures)
}

fn fiber_routes() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let count = rng.gen_range(0..=4);
        let fibers: Vec<(u32, Partner)> = (0..count)
            .map(|_| {
                let b = rng.gen_range(1..=12);
                let partner = if rng.gen_bool(0.3) { Partner::II } else { Partner::I(rng.gen_range(1..=12)) };
                (b, partner)
            })
            .collect();
        let spec = FiberProductSpec::new(fibers).unwrap();
        let closed = e_str_fiber_product(&spec);
        let routed = fiber_product_report(&spec).unwrap().e_str;
        if closed != routed {
            failures.push(format!("{:?}: {} vs {}", spec.fibers(), format_rational(&closed), format_rational(&routed)));
        }
    }
    Outcome::from_failures("100 random specs with b, b' <= 12", failures)
}

/// Graph validation first; the route comparisons only run on corrupted
/// graphs that still validate.
fn detected(c: &Corruption) -> bool {
    let mut g = build_graph(c.ty).unwrap();
    c.apply(&mut g);
    if !validate_graph(&g).passed() {
        return true;
    }
    let main = engine::e_str_function_unchecked(&g);
    main != engine::e_str_function_oracle_unchecked(&g)
        || main != closed_e_function(c.ty).unwrap()
        || main.limit_at_one().ok() != Some(engine::e_str_direct_unchecked(&g))
}

fn negative_controls() -> Outcome {
    let corruptions: Vec<_> = AdeType::up_to(CORRUPTION_MAX_N)
        .into_iter()
        .flat_map(|ty| all_corruptions(&build_graph(ty).unwrap()))
        .collect();
    let undetected: Vec<String> =
        corruptions.par_iter().filter(|c| !detected(c)).map(ToString::to_string).collect();
    Outcome::from_failures(
        format!("{} single corruptions of A/D up to {CORRUPTION_MAX_N} and E_6..E_8", corruptions.len()),
        undetected,
    )
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, f64) {
    let start = Instant::now();
    let outcome = f();
    (outcome, start.elapsed().as_secs_f64())
}

fn main() {
    let start = Instant::now();
    let (report, sweep_secs) = {
        let t = Instant::now();
        let r = verify::run(&VerifyOptions { scope: Scope::Local, max_n: MAX_N, corruption: None });
        (r, t.elapsed().as_secs_f64())
    };
    println!("local sweep A_1..A_{MAX_N}, D_4..D_{MAX_N}, E_6..E_8: {sweep_secs:.1}s");
    let criteria: Vec<(&str, (Outcome, f64))> = vec![
        ("exact local values", timed(local_values)),
        ("index table", timed(index_table)),
        (
            "symbolic oracle equivalence",
            timed(|| {
                Outcome::from_failures(
                    "engine = strata = closed form, A_1..A_60, D_4..D_60, E_6..E_8",
                    check_failures(&report, &["routes-oracle", "routes-closed-form"]),
                )
            }),
        ),
        (
            "limit consistency",
            timed(|| {
                Outcome::from_failures(
                    "limit at w = 1 equals direct evaluation",
                    check_failures(&report, &["limit-vs-direct"]),
                )
            }),
        ),
        ("graph combinatorics", timed(|| graph_combinatorics(&report))),
        (
            "series integrality",
            timed(|| {
                Outcome::from_failures(
                    format!("first {} coefficients integral", verify::SERIES_TERMS),
                    check_failures(&report, &["series-integrality"]),
                )
            }),
        ),
        ("link Hodge identity", timed(link_hodge)),
        ("global examples", timed(global_examples)),
        ("fiber-product routes", timed(fiber_routes)),
        ("negative controls", timed(negative_controls)),
    ];

    let mut failed = 0;
    for (i, (name, (outcome, secs))) in criteria.iter().enumerate() {
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {:>2} {name}: {} [{secs:.2}s]", i + 1, outcome.summary);
        for f in &outcome.failures {
            println!("       {f}");
        }
        failed += usize::from(!outcome.passed);
    }
    println!("{} criteria, {failed} failed, {:.1}s", criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
