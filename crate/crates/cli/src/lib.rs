//! The `gegenbauer` command-line tool.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 on usage or domain errors.

mod args;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use gegenbauer_core::gegenbauer::{
    derivative_interchange_check, evaluate, table_via_composition, table_via_recurrence,
    value_at_one,
};
use gegenbauer_core::identity::sweep;
use gegenbauer_core::{Field, GegenbauerParams, Rational};

pub use args::{Cli, Command, Format, Mode};
use args::{AtOneArgs, DerivCheckArgs, EvalArgs, TableArgs, TableRoute, VerifyArgs};
pub use output::OutputRecord;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// A usage or domain error; reported on one line with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Everything a subcommand produced, before formatting.
struct Report {
    echo: String,
    records: Vec<OutputRecord>,
    text: Vec<String>,
    summary: Option<String>,
    passed: bool,
}

impl Report {
    fn new(echo: String) -> Self {
        Self {
            echo,
            records: Vec::new(),
            text: Vec::new(),
            summary: None,
            passed: true,
        }
    }
}

/// Parses `args` (including the program name), runs the subcommand and writes
/// to `out`/`err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let message = e.to_string();
            let first = message.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "{first}");
            return EXIT_USAGE;
        }
    };
    let (format, result) = match &cli.command {
        Command::Table(a) => (a.common.format, cmd_table(a)),
        Command::Eval(a) => (a.common.format, cmd_eval(a)),
        Command::AtOne(a) => (a.common.format, cmd_at_one(a)),
        Command::Verify(a) => (a.common.format, cmd_verify(a)),
        Command::DerivCheck(a) => (a.common.format, cmd_deriv_check(a)),
    };
    let report = match result {
        Ok(r) => r,
        Err(Usage(reason)) => {
            let _ = writeln!(err, "error: {reason}");
            return EXIT_USAGE;
        }
    };
    let written = match format {
        Format::Text => write_text(&report, out),
        Format::Csv => output::write_csv(&report.records, out),
        Format::Json => output::write_json_lines(&report.records, out),
    };
    if format != Format::Text {
        if let Some(summary) = &report.summary {
            let _ = writeln!(err, "{summary}");
        }
    }
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if report.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn write_text(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "# {}", report.echo)?;
    for line in &report.text {
        writeln!(out, "{line}")?;
    }
    if let Some(summary) = &report.summary {
        writeln!(out, "{summary}")?;
    }
    Ok(())
}

/// A literal containing `.`, `e` or `E` is a float literal; anything else is rational.
fn is_float_literal(text: &str) -> bool {
    text.contains(['.', 'e', 'E'])
}

/// Picks the arithmetic mode for a set of scalar literals.
pub fn resolve_mode(explicit: Option<Mode>, literals: &[&str]) -> Result<Mode, String> {
    let any_float = literals.iter().any(|l| is_float_literal(l));
    let all_float = literals.iter().all(|l| is_float_literal(l));
    match explicit {
        Some(Mode::Float) => Ok(Mode::Float),
        Some(Mode::Exact) if any_float => {
            Err("float literal given in exact mode; use p/q literals or --mode float".into())
        }
        Some(Mode::Exact) => Ok(Mode::Exact),
        None if !any_float => Ok(Mode::Exact),
        None if all_float => Ok(Mode::Float),
        None => Err("mixing exact and float literals; pass --mode float or use p/q throughout".into()),
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Exact => "exact",
        Mode::Float => "float",
    }
}

fn parse<F: Field>(name: &str, text: &str) -> Result<F, Usage> {
    F::parse_literal(text).map_err(|e| Usage(format!("--{name}: {e}")))
}

/// Text form: exact values drop a unit denominator.
fn compact<F: Field>(x: &F) -> String {
    let s = x.to_literal();
    match s.strip_suffix("/1") {
        Some(integer) if F::EXACT => integer.to_owned(),
        _ => s,
    }
}

fn cmd_table(a: &TableArgs) -> Result<Report, Usage> {
    let mode = resolve_mode(a.common.mode, &[&a.lambda])?;
    match mode {
        Mode::Exact => table::<Rational>(a, mode),
        Mode::Float => table::<f64>(a, mode),
    }
}

fn table<F: Field>(a: &TableArgs, mode: Mode) -> Result<Report, Usage> {
    let lambda: F = parse("lambda", &a.lambda)?;
    let params = GegenbauerParams::new(lambda, a.order)?;
    let (table, route) = match a.route {
        TableRoute::Composition => (table_via_composition(&params)?, "composition"),
        TableRoute::Recurrence => (table_via_recurrence(&params)?, "recurrence"),
    };
    let mut report = Report::new(format!(
        "table lambda={} order={} route={route} mode={}",
        compact(params.lambda()),
        a.order,
        mode_name(mode)
    ));
    for (m, p) in table.polys().iter().enumerate() {
        let coeffs = p.coeffs();
        let text: Vec<String> = coeffs.iter().map(compact).collect();
        let literal: Vec<String> = coeffs.iter().map(Field::to_literal).collect();
        report.text.push(format!("C_{m}: [{}]", text.join(", ")));
        report.records.push(OutputRecord {
            lambda: params.lambda().to_literal(),
            m: Some(m.to_string()),
            check: route.to_owned(),
            value: Some(literal.join(" ")),
            status: "ok".into(),
            ..OutputRecord::default()
        });
    }
    Ok(report)
}

fn cmd_eval(a: &EvalArgs) -> Result<Report, Usage> {
    let mode = resolve_mode(a.common.mode, &[&a.lambda, &a.t])?;
    match mode {
        Mode::Exact => eval::<Rational>(a, mode),
        Mode::Float => eval::<f64>(a, mode),
    }
}

fn eval<F: Field>(a: &EvalArgs, mode: Mode) -> Result<Report, Usage> {
    let lambda: F = parse("lambda", &a.lambda)?;
    let t: F = parse("t", &a.t)?;
    let table = table_via_recurrence(&GegenbauerParams::new(lambda.clone(), a.degree)?)?;
    let value = evaluate(&table, a.degree, &t)?;
    let mut report = Report::new(format!(
        "eval lambda={} degree={} t={} mode={}",
        compact(&lambda),
        a.degree,
        compact(&t),
        mode_name(mode)
    ));
    report.text.push(compact(&value));
    report.records.push(OutputRecord {
        lambda: lambda.to_literal(),
        m: Some(a.degree.to_string()),
        check: format!("eval t={}", t.to_literal()),
        value: Some(value.to_literal()),
        status: "ok".into(),
        ..OutputRecord::default()
    });
    Ok(report)
}

fn cmd_at_one(a: &AtOneArgs) -> Result<Report, Usage> {
    let mode = resolve_mode(a.common.mode, &[&a.lambda])?;
    match mode {
        Mode::Exact => at_one::<Rational>(a, mode),
        Mode::Float => at_one::<f64>(a, mode),
    }
}

fn at_one<F: Field>(a: &AtOneArgs, mode: Mode) -> Result<Report, Usage> {
    let lambda: F = parse("lambda", &a.lambda)?;
    GegenbauerParams::new(lambda.clone(), a.degree)?;
    let value = value_at_one(&lambda, a.degree);
    let mut report = Report::new(format!(
        "at-one lambda={} degree={} mode={}",
        compact(&lambda),
        a.degree,
        mode_name(mode)
    ));
    report.text.push(compact(&value));
    report.records.push(OutputRecord {
        lambda: lambda.to_literal(),
        m: Some(a.degree.to_string()),
        check: "at-one".into(),
        value: Some(value.to_literal()),
        status: "ok".into(),
        ..OutputRecord::default()
    });
    Ok(report)
}

fn check_tolerance(tolerance: f64) -> Result<(), Usage> {
    if tolerance.is_finite() && tolerance >= 0.0 {
        Ok(())
    } else {
        Err(Usage(format!("--tolerance must be a finite nonnegative number, got {tolerance}")))
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<Report, Usage> {
    check_tolerance(a.tolerance)?;
    let literals: Vec<&str> = a.lambda_list.split(',').map(str::trim).collect();
    if literals.iter().any(|l| l.is_empty()) {
        return Err(Usage("--lambda-list has an empty entry".into()));
    }
    let mode = resolve_mode(a.common.mode, &literals)?;
    match mode {
        Mode::Exact => verify::<Rational>(a, &literals, mode),
        Mode::Float => verify::<f64>(a, &literals, mode),
    }
}

fn verify<F: Field>(a: &VerifyArgs, literals: &[&str], mode: Mode) -> Result<Report, Usage> {
    let lambdas = literals
        .iter()
        .map(|l| parse::<F>("lambda-list", l))
        .collect::<Result<Vec<_>, _>>()?;
    let reports = sweep(&lambdas, a.m_max)?;
    let mut report = Report::new(format!(
        "verify lambda-list={} m-max={} mode={}{}",
        lambdas.iter().map(compact).collect::<Vec<_>>().join(","),
        a.m_max,
        mode_name(mode),
        if F::EXACT { String::new() } else { format!(" tolerance={}", a.tolerance) }
    ));
    let mut passed = 0usize;
    for r in &reports {
        let ok = r.passes(a.tolerance);
        passed += usize::from(ok);
        let status = if ok { "pass" } else { "fail" };
        let residual = r.residual().map(|x| x.to_literal());
        report.text.push(format!(
            "lambda={} m={} lhs={} rhs={}{} {status}",
            compact(&r.lambda),
            r.m,
            compact(&r.lhs),
            compact(&r.rhs),
            residual.as_ref().map(|x| format!(" residual={x}")).unwrap_or_default()
        ));
        report.records.push(OutputRecord {
            lambda: r.lambda.to_literal(),
            m: Some(r.m.to_string()),
            check: "identity".into(),
            value: Some(r.lhs.to_literal()),
            rhs: Some(r.rhs.to_literal()),
            residual,
            status: status.into(),
        });
    }
    let failed = reports.len() - passed;
    report.summary = Some(format!("summary: {passed} passed, {failed} failed"));
    report.passed = failed == 0;
    Ok(report)
}

fn cmd_deriv_check(a: &DerivCheckArgs) -> Result<Report, Usage> {
    check_tolerance(a.tolerance)?;
    if a.common.mode == Some(Mode::Exact) {
        return Err(Usage("deriv-check runs in float mode only".into()));
    }
    let lambda: f64 = parse("lambda", &a.lambda)?;
    let t: f64 = parse("t", &a.t)?;
    let r: f64 = parse("r", &a.r)?;
    let check = derivative_interchange_check(lambda, t, r, a.order)?;
    let ok = check.within(a.tolerance);
    let status = if ok { "pass" } else { "fail" };
    let mut report = Report::new(format!(
        "deriv-check lambda={lambda} t={t} r={r} order={} tolerance={} mode=float",
        a.order, a.tolerance
    ));
    report.text = vec![
        format!("A (closed form)    = {}", check.closed_form),
        format!("B (partial sum)    = {}", check.partial_sum),
        format!("|A - B|            = {}", check.residual),
        format!("tail budget        = {}", check.tail_budget),
        format!("rounding bound     = {}", check.rounding_bound),
        format!("status: {status}"),
    ];
    let info = |name: &str, value: f64| OutputRecord {
        lambda: lambda.to_literal(),
        m: Some(a.order.to_string()),
        check: name.into(),
        value: Some(value.to_literal()),
        status: "info".into(),
        ..OutputRecord::default()
    };
    report.records = vec![
        OutputRecord {
            lambda: lambda.to_literal(),
            m: Some(a.order.to_string()),
            check: format!("deriv-check t={} r={}", t.to_literal(), r.to_literal()),
            value: Some(check.closed_form.to_literal()),
            rhs: Some(check.partial_sum.to_literal()),
            residual: Some(check.residual.to_literal()),
            status: status.into(),
        },
        info("tail-budget", check.tail_budget),
        info("rounding-bound", check.rounding_bound),
    ];
    report.passed = ok;
    Ok(report)
}
