//! `stringy`: stringy E-functions, Euler numbers and indices of
//! three-dimensional A-D-E singularities, and of threefolds having them.

mod record;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use record::{OutputRecord, Verification};
use stringy_core::algebra::format_rational;
use stringy_core::catalog::{build_graph, to_dot};
use stringy_core::closed::{closed_e_number, closed_index};
use stringy_core::engine::{self, stringy_index};
use stringy_core::global::{
    ci_report, e_str_fiber_product, e_str_global_from_smoothing, example_registry, fiber_product_report,
    CompleteIntersectionSpec, FiberProductSpec, SingularityMultiset,
};
use stringy_core::verify::{self, Scope, VerifyOptions};
use stringy_core::{AdeType, BigRational, Error};

const MAX_TABLE_N: u32 = 200;

#[derive(Parser, Debug)]
#[command(name = "stringy", version, about = "Exact stringy invariants of 3-dimensional A-D-E singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// E_str(w), e_str and index of one singularity type.
    Local {
        /// A, D, E6, E7, E8, or a full type such as D6 or A:3.
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Subscript for the A and D families.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the intersection graph in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// e_str of a complete intersection threefold in P^r with A-D-E points.
    GlobalCi {
        #[arg(long)]
        r: u32,
        /// Comma-separated multidegree, r - 3 entries.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Singular points as FAMILY[:n]xCOUNT, e.g. A:1x125, D:6x1, E7x2.
        #[arg(long, value_delimiter = ',')]
        sing: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// e_str of a fiber product of rational elliptic surfaces.
    FiberProduct {
        /// Common singular fibers as bxI:b' or bxII, e.g. 5xI:7 5xII.
        fibers: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs the cross-check battery; exits nonzero if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = ScopeArg::All)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 40)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Corrupts one catalog graph first: TYPE/edge|triangle|discrepancy|kind/N.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// One row per subscript for the A or D family, or the named examples.
    Table {
        /// A, D or registry.
        family: String,
        n_min: Option<u32>,
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    All,
    Local,
    Global,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::All => Scope::All,
            ScopeArg::Local => Scope::Local,
            ScopeArg::Global => Scope::Global,
        }
    }
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Local { ty, n, format, dot } => {
            let ty = parse_type(&ty, n)?;
            if let Some(path) = dot {
                let g = build_graph(ty)?;
                std::fs::write(&path, to_dot(&g))
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            emit(&cmd_local(ty)?, format);
        }
        Command::GlobalCi { r, degrees, sing, format } => {
            let sings: SingularityMultiset = sing.join(" ").parse()?;
            let spec = CompleteIntersectionSpec::new(r, degrees, sings)?;
            emit(&cmd_global_ci(&spec)?, format);
        }
        Command::FiberProduct { fibers, format } => {
            let spec: FiberProductSpec = fibers.join(" ").parse()?;
            emit(&cmd_fiber_product(&spec)?, format);
        }
        Command::Verify { scope, max_n, format, corrupt } => {
            let corruption = corrupt.map(|c| c.parse()).transpose()?;
            let report = verify::run(&VerifyOptions { scope: scope.into(), max_n, corruption });
            match format {
                Format::Text => out(&format!("{report}\n")),
                Format::Json => out(&pretty(&report)),
            }
            if !report.passed() {
                return Err(Failure::Checks);
            }
        }
        Command::Table { family, n_min, n_max, format } => {
            let rows = cmd_table(&family, n_min, n_max)?;
            match format {
                TableFormat::Json => out(&pretty(&rows)),
                TableFormat::Csv => out(&to_csv(&rows)),
            }
        }
    }
    Ok(())
}

fn parse_type(ty: &str, n: Option<u32>) -> Result<AdeType, Failure> {
    let parsed = match n {
        Some(n) => AdeType::from_parts(ty, Some(n)),
        None => ty.parse(),
    };
    parsed.map_err(|e| Failure::Usage(format!("{e} (valid: A with --n n >= 1, D with --n n >= 4, E6, E7, E8)")))
}

fn emit(record: &OutputRecord, format: Format) {
    match format {
        Format::Text => out(&record.to_text()),
        Format::Json => out(&pretty(record)),
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn out(s: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(s.as_bytes()).and_then(|()| {
        if s.ends_with('\n') {
            Ok(())
        } else {
            stdout.write_all(b"\n")
        }
    });
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("records serialize") + "\n"
}

fn index_string(e: &BigRational) -> String {
    stringy_index(e).to_string()
}

fn cmd_local(ty: AdeType) -> Result<OutputRecord, Failure> {
    let g = build_graph(ty)?;
    let result = engine::compute(ty)?;
    let table_e = closed_e_number(ty)?;
    let table_index = closed_index(ty)?;
    let verification = verify::local_cases(ty, None)
        .into_iter()
        .map(|(name, failure)| match failure {
            None => Verification::new(name, true, "ok"),
            Some(detail) => Verification::new(name, false, detail),
        })
        .collect();
    Ok(OutputRecord {
        command: "local".into(),
        input: json!({ "type": ty.to_string() }),
        e_function_display: Some(result.e_function.display_string()),
        e_function: Some(result.e_function),
        e_number: format_rational(&result.e_number),
        index: result.index.to_string(),
        details: json!({
            "divisors": g.divisors.len(),
            "edges": g.edge_count(),
            "triangles": g.triangle_count(),
            "h11_link": g.h11_link,
            "table_e_number": format_rational(&table_e),
            "table_index": table_index.to_string(),
        }),
        verification,
    })
}

fn cmd_global_ci(spec: &CompleteIntersectionSpec) -> Result<OutputRecord, Failure> {
    let report = ci_report(spec)?;
    let via_smoothing = e_str_global_from_smoothing(&BigRational::from_integer(report.smooth_euler.clone()), &spec.sings)?;
    let agree = via_smoothing == report.e_str;
    Ok(OutputRecord {
        command: "global-ci".into(),
        input: json!({
            "r": spec.r,
            "degrees": spec.degrees,
            "singularities": spec.sings.to_string(),
        }),
        e_function: None,
        e_function_display: None,
        e_number: format_rational(&report.e_str),
        index: index_string(&report.e_str),
        details: json!({
            "smooth_euler": report.smooth_euler.to_string(),
            "contributions": report.contributions,
        }),
        verification: vec![Verification::new(
            "ci-vs-local-sum",
            agree,
            format!("e(Y) + sum of local corrections = {}", format_rational(&via_smoothing)),
        )],
    })
}

fn cmd_fiber_product(spec: &FiberProductSpec) -> Result<OutputRecord, Failure> {
    let closed = e_str_fiber_product(spec);
    let report = fiber_product_report(spec)?;
    let fibers: Vec<String> = spec.fibers().iter().map(|(b, p)| format!("I_{b} x {p}")).collect();
    let mut details = serde_json::to_value(&report).expect("report serializes");
    if let Value::Object(map) = &mut details {
        map.remove("e_str");
    }
    Ok(OutputRecord {
        command: "fiber-product".into(),
        input: json!({ "fibers": fibers }),
        e_function: None,
        e_function_display: None,
        e_number: format_rational(&closed),
        index: index_string(&closed),
        details,
        verification: vec![Verification::new(
            "fiber-routes",
            report.e_str == closed,
            format!("e(Y) + locals = {}", format_rational(&report.e_str)),
        )],
    })
}

fn cmd_table(family: &str, n_min: Option<u32>, n_max: Option<u32>) -> Result<Vec<Value>, Failure> {
    if family.eq_ignore_ascii_case("registry") {
        return example_registry()
            .into_iter()
            .map(|entry| {
                let e = entry.spec.e_str()?;
                Ok(json!({
                    "name": entry.name,
                    "e_str": format_rational(&e),
                    "index": index_string(&e),
                    "expected": format_rational(&entry.expected),
                    "matches": e == entry.expected,
                    "spec": entry.spec.to_string(),
                }))
            })
            .collect::<Result<_, Error>>()
            .map_err(Failure::from);
    }
    let lowest = match family.to_ascii_uppercase().as_str() {
        "A" => 1,
        "D" => 4,
        _ => return Err(Failure::Usage(format!("unknown family {family:?}; expected A, D or registry"))),
    };
    let (Some(lo), Some(hi)) = (n_min, n_max) else {
        return Err(Failure::Usage(format!("table {family} needs N_MIN and N_MAX")));
    };
    if lo < lowest || lo > hi || hi > MAX_TABLE_N {
        return Err(Failure::Usage(format!(
            "bad range {lo}..{hi}; need {lowest} <= N_MIN <= N_MAX <= {MAX_TABLE_N}"
        )));
    }
    (lo..=hi)
        .map(|n| {
            let ty = AdeType::from_parts(family, Some(n))?;
            let r = engine::compute(ty)?;
            let table_e = closed_e_number(ty)?;
            let table_index = closed_index(ty)?;
            Ok(json!({
                "n": n,
                "type": ty.to_string(),
                "e_str": format_rational(&r.e_number),
                "index": r.index.to_string(),
                "table_e_str": format_rational(&table_e),
                "table_index": table_index.to_string(),
                "index_in_table": table_index.contains(&r.index),
            }))
        })
        .collect::<Result<_, Error>>()
        .map_err(Failure::from)
}

/// Flat rows only; nested values are written as JSON inside a quoted cell.
fn to_csv(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return String::new();
    };
    let headers: Vec<&String> = first.keys().collect();
    let cell = |v: &Value| {
        let s = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s
        }
    };
    let mut out = headers.iter().map(|h| h.as_str()).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in rows {
        let line: Vec<String> = headers.iter().map(|h| cell(&row[h.as_str()])).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}
