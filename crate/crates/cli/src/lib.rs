//! Command-line front end for `charmorph`.
//!
//! Exit codes: 0 when every selected check passes (or a search completes,
//! or the lemma holds), 1 when a violation or counterexample is found, and
//! 2 on usage, parse or precondition errors.

pub mod record;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::{Read, Write};

use charmorph::category::{
    extension_factors, fixture, generated_algebra, irreducibility, search, FixtureParams,
    SearchMode, FIXTURE_NAMES,
};
use charmorph::checks::{
    characteristic_check, is_algebra_homomorphism, minimal_characteristic_check,
    nc_characteristic_check, roots_of_unity_check, verify_root_ratio_lemma, CheckName, CheckReport,
    NcMode, RootsMode,
};
use charmorph::{parse_linear_map, render_linear_map, FieldDescriptor, LinearMap};

use record::Record;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "charmorph",
    version,
    about = "Exact checks for linear maps k^d -> End(k^dim)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run checks on a document or a fixture.
    Check(CheckArgs),
    /// Search for characteristic morphisms over a field.
    Search(SearchArgs),
    /// Verify the root-ratio lemma for n-th roots of unity.
    Lemma(LemmaArgs),
    /// Print a fixture as a document, or list fixture names.
    Fixtures(FixturesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NcModeArg {
    Fast,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RootsModeArg {
    Auto,
    Full,
    ProofPath,
}

#[derive(Debug, Args)]
struct FixtureArgs {
    /// Field, e.g. `rational`, `cyclotomic:5`, `gf:7`.
    #[arg(long)]
    field: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    dim: Option<usize>,
    /// Block sizes for `diag_hom`, comma separated.
    #[arg(long, value_delimiter = ',')]
    mult: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Document to check (`-` for standard input).
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    input: Option<String>,
    #[arg(long)]
    fixture: Option<String>,
    #[command(flatten)]
    params: FixtureArgs,
    /// Comma-separated subset of hom, char, minchar, nc, roots.
    #[arg(long, value_delimiter = ',', default_value = "hom,char")]
    checks: Vec<String>,
    /// Order of the roots of unity for `roots`.
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_enum, default_value_t = NcModeArg::Fast)]
    nc_mode: NcModeArg,
    #[arg(long, value_enum, default_value_t = RootsModeArg::Auto)]
    roots_mode: RootsModeArg,
    /// Also report the generated algebra and irreducibility (does not affect the exit code).
    #[arg(long)]
    classify: bool,
    /// Violations listed per check in text output.
    #[arg(long, default_value_t = 10)]
    max_violations: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Include elapsed times (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    field: String,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    dim: usize,
    /// `exhaustive` or `random`.
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print only non-homomorphisms.
    #[arg(long)]
    non_hom_only: bool,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Args)]
struct LemmaArgs {
    #[arg(long)]
    n: u64,
    /// Defaults to the cyclotomic field of order n.
    #[arg(long)]
    field: Option<String>,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Debug, Args)]
struct FixturesArgs {
    name: Option<String>,
    #[command(flatten)]
    params: FixtureArgs,
}

type CliResult = Result<i32, String>;

fn parse_field(s: Option<&str>) -> Result<FieldDescriptor, String> {
    match s {
        None => Ok(FieldDescriptor::RATIONAL),
        Some(t) => t.parse::<FieldDescriptor>().map_err(|e| e.to_string()),
    }
}

fn build_fixture(name: &str, args: &FixtureArgs) -> Result<LinearMap, String> {
    let field = parse_field(args.field.as_deref())?;
    let params = FixtureParams {
        a: args.a.clone(),
        b: args.b.clone(),
        d: args.d,
        dim: args.dim,
        multiplicities: args.mult.clone(),
    };
    fixture(name, field, &params).map_err(|e| e.to_string())
}

/// Replaces the `field` header of a document.
fn override_field(doc: &str, field: &str) -> String {
    doc.lines()
        .map(|line| {
            if line.split_whitespace().next() == Some("field") {
                format!("field {field}")
            } else {
                line.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn load(args: &CheckArgs) -> Result<LinearMap, String> {
    match (&args.input, &args.fixture) {
        (Some(path), _) => {
            let mut text = String::new();
            if path == "-" {
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| e.to_string())?;
            } else {
                text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            }
            if let Some(f) = &args.params.field {
                let field = parse_field(Some(f))?;
                text = override_field(&text, &field.to_string());
            }
            parse_linear_map(&text).map_err(|e| format!("{path}: {e}"))
        }
        (None, Some(name)) => build_fixture(name, &args.params),
        (None, None) => Err("one of --input or --fixture is required".into()),
    }
}

fn run_one(phi: &LinearMap, check: CheckName, args: &CheckArgs) -> Result<CheckReport, String> {
    let nc_mode = match args.nc_mode {
        NcModeArg::Fast => NcMode::Fast,
        NcModeArg::Naive => NcMode::Naive,
    };
    let roots_mode = match args.roots_mode {
        RootsModeArg::Auto => RootsMode::Auto,
        RootsModeArg::Full => RootsMode::Full,
        RootsModeArg::ProofPath => RootsMode::ProofPath,
    };
    match check {
        CheckName::Homomorphism => Ok(is_algebra_homomorphism(phi)),
        CheckName::Characteristic => Ok(characteristic_check(phi)),
        CheckName::MinimalCharacteristic => Ok(minimal_characteristic_check(phi)),
        CheckName::NoncommutativeCharacteristic => {
            nc_characteristic_check(phi, nc_mode).map_err(|e| e.to_string())
        }
        CheckName::RootsOfUnity => {
            let n = args.n.ok_or("the roots check requires --n")?;
            roots_of_unity_check(phi, n, roots_mode).map_err(|e| e.to_string())
        }
    }
}

fn write_report(
    out: &mut dyn Write,
    report: &CheckReport,
    args: &CheckArgs,
) -> std::io::Result<()> {
    if args.output == Output::Jsonl {
        return writeln!(out, "{}", json(&Record::from_report(report, args.timings)));
    }
    let verdict = if report.passed() { "pass" } else { "fail" };
    write!(
        out,
        "{}: {verdict} ({} equations",
        report.check, report.stats.equations
    )?;
    if args.timings {
        write!(out, ", {:.3} ms", report.stats.elapsed.as_secs_f64() * 1e3)?;
    }
    writeln!(out, ")")?;
    for note in &report.stats.notes {
        writeln!(out, "  note: {note}")?;
    }
    let violations = report.violations();
    for v in violations.iter().take(args.max_violations) {
        writeln!(out, "  {}: {}", v.kind, v.witness)?;
    }
    if violations.len() > args.max_violations {
        writeln!(
            out,
            "  ... {} more violations",
            violations.len() - args.max_violations
        )?;
    }
    Ok(())
}

fn write_classification(
    out: &mut dyn Write,
    phi: &LinearMap,
    output: Output,
) -> std::io::Result<()> {
    let dimension = generated_algebra(phi).dimension();
    let verdict = irreducibility(phi);
    if output == Output::Jsonl {
        let rec = Record::Classification {
            generated_dimension: dimension,
            irreducibility: verdict.label().to_string(),
            certificate: record::certificate(&verdict),
            witness: record::witness_rows(verdict.witness()),
        };
        return writeln!(out, "{}", json(&rec));
    }
    writeln!(
        out,
        "generated algebra: dimension {dimension} of {}",
        phi.dim() * phi.dim()
    )?;
    writeln!(out, "irreducibility: {verdict}")?;
    if let Some((sub, quot)) = verdict.witness().and_then(|w| extension_factors(phi, w)) {
        writeln!(out, "  on the invariant subspace:")?;
        write_alphas(out, &sub, "    ")?;
        writeln!(out, "  on the quotient:")?;
        write_alphas(out, &quot, "    ")?;
    }
    Ok(())
}

fn write_alphas(out: &mut dyn Write, phi: &LinearMap, indent: &str) -> std::io::Result<()> {
    for (i, a) in phi.alphas().iter().enumerate() {
        let rows: Vec<String> = record::matrix_rows(a).iter().map(|r| r.join(" ")).collect();
        writeln!(out, "{indent}alpha_{} = [{}]", i + 1, rows.join("; "))?;
    }
    Ok(())
}

fn json(rec: &Record) -> String {
    serde_json::to_string(rec).expect("records serialize")
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> CliResult {
    let mut checks = Vec::new();
    for name in &args.checks {
        let c = CheckName::from_short(name.trim()).ok_or_else(|| {
            format!("unknown check `{name}` (expected hom, char, minchar, nc, roots)")
        })?;
        if !checks.contains(&c) {
            checks.push(c);
        }
    }
    if checks.is_empty() {
        return Err("--checks must name at least one check".into());
    }
    let phi = load(args)?;
    // Run everything first so a precondition error produces no partial report.
    let reports = checks
        .iter()
        .map(|&c| run_one(&phi, c, args))
        .collect::<Result<Vec<_>, _>>()?;
    for r in &reports {
        write_report(out, r, args).map_err(io)?;
    }
    if args.classify {
        write_classification(out, &phi, args.output).map_err(io)?;
    }
    Ok(if reports.iter().all(CheckReport::passed) {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> CliResult {
    let field = parse_field(Some(&args.field))?;
    let mode =
        SearchMode::from_name(&args.mode, args.budget, args.seed).map_err(|e| e.to_string())?;
    let report = search(field, args.d, args.dim, mode).map_err(|e| e.to_string())?;
    let shown = report
        .results
        .iter()
        .enumerate()
        .filter(|(_, r)| !(args.non_hom_only && r.is_hom));
    for (index, r) in shown {
        if args.output == Output::Jsonl {
            let rec = Record::SearchResult {
                index,
                alphas: r
                    .linear_map
                    .alphas()
                    .iter()
                    .map(record::matrix_rows)
                    .collect(),
                is_hom: r.is_hom,
                is_characteristic: r.is_characteristic,
                irreducibility: r.irreducibility.label().to_string(),
                witness: record::witness_rows(r.irreducibility.witness()),
                signature: r.signature.to_string(),
            };
            writeln!(out, "{}", json(&rec)).map_err(io)?;
        } else {
            let hom = if r.is_hom {
                "homomorphism"
            } else {
                "not a homomorphism"
            };
            writeln!(out, "#{index}: {hom}, {}", r.irreducibility).map_err(io)?;
            write_alphas(out, &r.linear_map, "  ").map_err(io)?;
        }
    }
    let stats = &report.stats;
    let elapsed_ms = args.timings.then_some(stats.elapsed.as_secs_f64() * 1e3);
    if args.output == Output::Jsonl {
        let rec = Record::SearchSummary {
            field: field.to_string(),
            d: args.d,
            dim: args.dim,
            mode: args.mode.clone(),
            examined: stats.examined,
            characteristic: stats.characteristic,
            distinct: report.results.len(),
            elapsed_ms,
        };
        writeln!(out, "{}", json(&rec)).map_err(io)?;
    } else {
        write!(
            out,
            "examined {} tuples, {} characteristic, {} distinct signatures",
            stats.examined,
            stats.characteristic,
            report.results.len()
        )
        .map_err(io)?;
        if let Some(ms) = elapsed_ms {
            write!(out, " ({ms:.1} ms)").map_err(io)?;
        }
        writeln!(out).map_err(io)?;
    }
    Ok(EXIT_PASS)
}

fn cmd_lemma(args: &LemmaArgs, out: &mut dyn Write) -> CliResult {
    let field = match &args.field {
        Some(f) => parse_field(Some(f))?,
        None => {
            let n = u32::try_from(args.n).map_err(|_| format!("n = {} is too large", args.n))?;
            FieldDescriptor::cyclotomic(n).map_err(|e| e.to_string())?
        }
    };
    let found = verify_root_ratio_lemma(args.n, field).map_err(|e| e.to_string())?;
    let degenerate = found.iter().filter(|c| c.is_degenerate()).count();
    for c in &found {
        if args.output == Output::Jsonl {
            let rec = Record::LemmaCounterexample {
                a: c.a,
                b: c.b,
                c: c.c,
                d: c.d,
                degenerate: c.is_degenerate(),
            };
            writeln!(out, "{}", json(&rec)).map_err(io)?;
        } else {
            let tag = if c.is_degenerate() {
                " (degenerate: a = c = 0)"
            } else {
                ""
            };
            writeln!(
                out,
                "counterexample (a, b, c, d) = ({}, {}, {}, {}){tag}",
                c.a, c.b, c.c, c.d
            )
            .map_err(io)?;
        }
    }
    if args.output == Output::Jsonl {
        let rec = Record::LemmaSummary {
            n: args.n,
            field: field.to_string(),
            counterexamples: found.len(),
            degenerate,
        };
        writeln!(out, "{}", json(&rec)).map_err(io)?;
    } else {
        writeln!(
            out,
            "n = {} over {field}: {} counterexamples ({degenerate} degenerate)",
            args.n,
            found.len()
        )
        .map_err(io)?;
    }
    Ok(if found.is_empty() {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_fixtures(args: &FixturesArgs, out: &mut dyn Write) -> CliResult {
    match &args.name {
        None => {
            for name in FIXTURE_NAMES {
                writeln!(out, "{name}").map_err(io)?;
            }
        }
        Some(name) => {
            let phi = build_fixture(name, &args.params)?;
            write!(out, "{}", render_linear_map(&phi)).map_err(io)?;
        }
    }
    Ok(EXIT_PASS)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_PASS
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a, out),
        Command::Search(a) => cmd_search(a, out),
        Command::Lemma(a) => cmd_lemma(a, out),
        Command::Fixtures(a) => cmd_fixtures(a, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("charmorph").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn field_override_rewrites_header() {
        let doc = "# x\nfield rational\nd 1\n";
        assert_eq!(override_field(doc, "gf 5"), "# x\nfield gf 5\nd 1");
    }

    #[test]
    fn example1_exit_code() {
        let (code, out, _) = run_capture(&[
            "check",
            "--fixture",
            "example1",
            "--a",
            "1",
            "--b",
            "1",
            "--checks",
            "char,hom",
        ]);
        assert_eq!(code, EXIT_VIOLATION);
        assert!(out.starts_with("char: pass"));
        assert!(out.contains("hom: fail"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(
            run_capture(&["check", "--fixture", "example1", "--checks", "bogus"]).0,
            EXIT_ERROR
        );
        assert_eq!(
            run_capture(&["check", "--fixture", "example1", "--checks", "roots"]).0,
            EXIT_ERROR
        );
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_ERROR);
        assert_eq!(run_capture(&["--help"]).0, EXIT_PASS);
    }
}
