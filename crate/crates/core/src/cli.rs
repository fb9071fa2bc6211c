//! Command-line front end for `proprat`.
//!
//! Exit codes: 0 on success, 1 on bad input, 2 when an internal invariant
//! fails (an oracle mismatch, a counterexample, or a verdict assertion).

use std::ffi::OsString;
use std::fs;
use std::io::{self, IsTerminal, Write};
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::expr::{parse, Expr};
use crate::int::Int;
use crate::oracle::{
    cross_validate, search_sum_product_counterexample, OracleError, SearchBox, TheoremSelector,
};
use crate::poly::MonicPoly;
use crate::rational::{Classification, Rational};
use crate::report::explain;
use crate::verdict::{monic_rational_roots, quadratic_from_sum_product};

#[derive(Debug, Parser)]
#[command(
    name = "proprat",
    version,
    about = "Exact rationals, proper-rational integrality verdicts and monic root checks"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce an expression and say whether it is an integer or a proper rational.
    Classify(ExprArgs),
    /// Evaluate an expression and report the integrality verdict for its top-level operation.
    Explain(ExprArgs),
    /// Integer roots of a monic polynomial, coefficients constant term first.
    Roots {
        /// a0 a1 ... an, with an = 1.
        #[arg(required = true, num_args = 2.., allow_negative_numbers = true)]
        coefficients: Vec<Int>,
    },
    /// Roots of x^2 - I1 x + I2.
    Vieta {
        #[arg(allow_negative_numbers = true)]
        i1: Int,
        #[arg(allow_negative_numbers = true)]
        i2: Int,
    },
    /// Look for two proper rationals whose sum and product are both integers.
    #[command(name = "search-t7")]
    SearchT7(BoxArgs),
    /// Cross-check an integrality condition against direct evaluation.
    Check {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[command(flatten)]
        bounds: BoxArgs,
    },
}

#[derive(Debug, Args)]
struct ExprArgs {
    #[arg(allow_hyphen_values = true, required_unless_present = "batch")]
    expr: Option<String>,
    /// Read one expression per line.
    #[arg(long, value_name = "FILE", conflicts_with = "expr")]
    batch: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BoxArgs {
    /// Largest |numerator| searched (at least 1).
    #[arg(long, value_name = "N")]
    max_num: i64,
    /// Largest denominator searched (at least 2).
    #[arg(long, value_name = "B")]
    max_den: i64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    /// proper rational times integer
    T3,
    /// sum of two proper rationals
    T4,
    /// product of two proper rationals
    T5,
}

impl TheoremArg {
    fn selector(self) -> TheoremSelector {
        match self {
            TheoremArg::T3 => TheoremSelector::Scale,
            TheoremArg::T4 => TheoremSelector::Sum,
            TheoremArg::T5 => TheoremSelector::Product,
        }
    }

    fn flag(self) -> &'static str {
        match self {
            TheoremArg::T3 => "t3",
            TheoremArg::T4 => "t4",
            TheoremArg::T5 => "t5",
        }
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
    /// Reader went away, as in `proprat ... | head`.
    BrokenPipe,
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Internal(_) => 2,
            Failure::BrokenPipe => 0,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::BrokenPipe;
        }
        Failure::Input(format!("i/o error: {e}"))
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
    color: bool,
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let color = !cli.json && std::env::var_os("NO_COLOR").is_none() && io::stdout().is_terminal();
    let mut ctx = Ctx {
        out,
        json: cli.json,
        color,
    };
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| dispatch(&cli.command, &mut ctx)));
    let failure = match outcome {
        Ok(Ok(())) => return 0,
        Ok(Err(f)) => f,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            Failure::Internal(format!("invariant violation: {msg}"))
        }
    };
    match &failure {
        Failure::Input(m) => {
            let _ = writeln!(err, "error: {m}");
        }
        Failure::Internal(m) => {
            let _ = writeln!(err, "internal error: {m}");
        }
        Failure::BrokenPipe => {}
    }
    failure.code()
}

fn dispatch(cmd: &Command, ctx: &mut Ctx<'_>) -> Result<(), Failure> {
    match cmd {
        Command::Classify(a) => run_exprs(a, ctx, classify_doc),
        Command::Explain(a) => run_exprs(a, ctx, explain_doc),
        Command::Roots { coefficients } => {
            let p =
                MonicPoly::new(coefficients.clone()).map_err(|e| Failure::Input(e.to_string()))?;
            roots_cmd(&p, ctx)
        }
        Command::Vieta { i1, i2 } => vieta_cmd(i1, i2, ctx),
        Command::SearchT7(b) => search_cmd(b, ctx),
        Command::Check { theorem, bounds } => check_cmd(*theorem, bounds, ctx),
    }
}

fn paint(ctx: &Ctx<'_>, text: &str, code: &str) -> String {
    if ctx.color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

/// One processed expression: a JSON document and a single line of text.
struct Line {
    doc: serde_json::Value,
    text: String,
}

type ExprHandler = fn(&str, &Expr, &Ctx<'_>) -> Result<Line, String>;

fn process_line(
    input: &str,
    handler: ExprHandler,
    ctx: &Ctx<'_>,
) -> Result<Line, (String, serde_json::Value)> {
    let input = input.trim();
    let fail = |msg: String| {
        let doc = json!({ "input_text": input, "error": msg });
        (msg, doc)
    };
    let e = parse(input).map_err(|e| fail(e.to_string()))?;
    handler(input, &e, ctx).map_err(fail)
}

fn run_exprs(args: &ExprArgs, ctx: &mut Ctx<'_>, handler: ExprHandler) -> Result<(), Failure> {
    if let Some(path) = &args.batch {
        let content = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        let mut docs = Vec::new();
        let mut failed = 0usize;
        for raw in content.lines() {
            match process_line(raw, handler, ctx) {
                Ok(line) => {
                    if !ctx.json {
                        writeln!(ctx.out, "{}", line.text)?;
                    }
                    docs.push(line.doc);
                }
                Err((msg, doc)) => {
                    failed += 1;
                    if !ctx.json {
                        writeln!(ctx.out, "error: {}: {msg}", raw.trim())?;
                    }
                    docs.push(doc);
                }
            }
        }
        if ctx.json {
            writeln!(
                ctx.out,
                "{}",
                serde_json::to_string_pretty(&docs).expect("json")
            )?;
        }
        if failed > 0 {
            return Err(Failure::Input(format!(
                "{failed} of {} lines failed",
                docs.len()
            )));
        }
        return Ok(());
    }

    let input = args.expr.as_deref().unwrap_or_default();
    match process_line(input, handler, ctx) {
        Ok(line) => emit(ctx, &line.doc, &line.text),
        Err((msg, _)) => Err(Failure::Input(msg)),
    }
}

fn emit(ctx: &mut Ctx<'_>, doc: &impl Serialize, text: &str) -> Result<(), Failure> {
    if ctx.json {
        writeln!(
            ctx.out,
            "{}",
            serde_json::to_string_pretty(doc).expect("json")
        )?;
    } else {
        writeln!(ctx.out, "{text}")?;
    }
    Ok(())
}

fn classify_text(ctx: &Ctx<'_>, value: &Rational) -> String {
    match value.classify() {
        Classification::ProperRational => format!(
            "{value} : {} (standard form, b={})",
            paint(ctx, "proper rational", "33"),
            value.denom()
        ),
        Classification::Integer => format!("{value} : {} (b=1)", paint(ctx, "integer", "32")),
    }
}

fn classify_doc(input: &str, e: &Expr, ctx: &Ctx<'_>) -> Result<Line, String> {
    let value = e.eval().map_err(|e| e.to_string())?;
    let doc = json!({
        "input_text": input,
        "value": value.to_string(),
        "classification": value.classify().as_str(),
        "numerator": value.numer(),
        "denominator": value.denom(),
    });
    Ok(Line {
        text: classify_text(ctx, &value),
        doc,
    })
}

fn explain_doc(input: &str, e: &Expr, ctx: &Ctx<'_>) -> Result<Line, String> {
    let mut report = explain(e).map_err(|e| e.to_string())?;
    report.input_text = input.to_string();
    let colour = if report.classification == "integer" {
        "32"
    } else {
        "33"
    };
    let mut text = format!(
        "{} = {} : {}",
        report.input_text,
        report.value,
        paint(ctx, report.classification, colour)
    );
    if report.applied_theorems.is_empty() {
        text.push_str(" | no verdict applies");
    }
    for t in &report.applied_theorems {
        text.push_str(&format!(" | {t}"));
    }
    Ok(Line {
        doc: serde_json::to_value(&report).expect("json"),
        text,
    })
}

fn list(xs: &[Int]) -> String {
    let parts: Vec<String> = xs.iter().map(Int::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn roots_cmd(p: &MonicPoly, ctx: &mut Ctx<'_>) -> Result<(), Failure> {
    let roots = monic_rational_roots(p);
    let text = if roots.is_empty() {
        format!("{p} : no rational roots")
    } else {
        format!("{p} : integer roots {}", list(&roots))
    };
    let doc = json!({
        "polynomial": p.to_string(),
        "coefficients": p.coefficients(),
        "roots": roots,
    });
    emit(ctx, &doc, &text)
}

fn vieta_cmd(i1: &Int, i2: &Int, ctx: &mut Ctx<'_>) -> Result<(), Failure> {
    let p = quadratic_from_sum_product(i1, i2);
    let roots = monic_rational_roots(&p);
    // A monic quadratic with one integer root has its other root i1 - r as
    // well, so a single distinct root means a double root.
    let pair = match roots.as_slice() {
        [] => None,
        [r] => Some((r.clone(), r.clone())),
        [r1, r2] => Some((r1.clone(), r2.clone())),
        _ => {
            return Err(Failure::Internal(format!(
                "quadratic {p} has roots {}",
                list(&roots)
            )))
        }
    };
    let sum_product = pair.as_ref().map(|(r1, r2)| (r1 + r2, r1 * r2));
    if let Some((s, m)) = &sum_product {
        if s != i1 || m != i2 {
            return Err(Failure::Internal(format!(
                "roots {} of {p} have sum {s} and product {m}",
                list(&roots)
            )));
        }
    }
    let text = match (&sum_product, roots.len()) {
        (None, _) => format!("{p} : no rational roots"),
        (Some((s, m)), 1) => format!(
            "{p} : roots {} (double), sum {s}, product {m}",
            list(&roots)
        ),
        (Some((s, m)), _) => format!("{p} : roots {}, sum {s}, product {m}", list(&roots)),
    };
    let doc = json!({
        "i1": i1,
        "i2": i2,
        "polynomial": p.to_string(),
        "coefficients": p.coefficients(),
        "roots": roots,
        "double_root": roots.len() == 1,
        "sum": sum_product.as_ref().map(|(s, _)| s),
        "product": sum_product.as_ref().map(|(_, m)| m),
    });
    emit(ctx, &doc, &text)
}

fn search_box(b: &BoxArgs) -> Result<SearchBox, Failure> {
    SearchBox::new(b.max_num, b.max_den).map_err(|e| Failure::Input(e.to_string()))
}

fn search_cmd(b: &BoxArgs, ctx: &mut Ctx<'_>) -> Result<(), Failure> {
    let bx = search_box(b)?;
    let report = search_sum_product_counterexample(bx);
    let text = match &report.pair {
        None => format!("no counterexample; pairs scanned: {}", report.pairs_scanned),
        Some((a, c)) => format!(
            "counterexample: {a}, {c}; pairs scanned: {}",
            report.pairs_scanned
        ),
    };
    let doc = json!({
        "max_num": bx.max_abs_numerator(),
        "max_den": bx.max_denominator(),
        "found": report.found,
        "pair": report.pair,
        "pairs_scanned": report.pairs_scanned,
    });
    emit(ctx, &doc, &text)?;
    if report.found {
        return Err(Failure::Internal(text));
    }
    Ok(())
}

fn check_cmd(theorem: TheoremArg, b: &BoxArgs, ctx: &mut Ctx<'_>) -> Result<(), Failure> {
    let bx = search_box(b)?;
    let which = theorem.selector();
    let checked = cross_validate(bx, which).map_err(|e| match e {
        OracleError::InvalidBox(..) => Failure::Input(e.to_string()),
        OracleError::OracleMismatch { .. } => Failure::Internal(e.to_string()),
    })?;
    let text = format!(
        "{} ({}): {checked} cases checked, condition agrees with direct evaluation on all",
        which,
        theorem.flag()
    );
    let doc = json!({
        "theorem": theorem.flag(),
        "name": which.as_str(),
        "max_num": bx.max_abs_numerator(),
        "max_den": bx.max_denominator(),
        "cases_checked": checked,
        "all_agree": true,
    });
    emit(ctx, &doc, &text)
}
