//! Command-line front end: exponentials, trig functions and linear ODE
//! propagation for multivectors in the four 3D Clifford algebras.
//!
//! Exit codes: 0 success, 2 parse error, 3 series convergence failure,
//! 4 engine disagreement above tolerance, 1 other failures.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gaexp::{
    exp_closed_detailed, exp_series_scaled_with_stats, propagate_forced, propagate_homogeneous,
    propagate_two_sided, trig, Error, Multivector, SeriesConfig, Signature,
};

mod golden;
mod output;
mod parse;

use output::{Engine, OdeRecord, OutputRecord};
use parse::parse_multivector;

const EXIT_PARSE: u8 = 2;
const EXIT_CONVERGENCE: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "gaexp",
    about = "Multivector exponentials in Cl(0,3), Cl(3,0), Cl(1,2), Cl(2,1)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exponential of a multivector (closed form, series, or both).
    Exp(ExpArgs),
    /// Trigonometric or hyperbolic function of a multivector.
    Trig(TrigArgs),
    /// Propagate a linear multivector ODE and sample the solution.
    Ode(OdeArgs),
    /// Run the built-in golden suite and report pass/fail per case.
    Selftest,
}

fn parse_algebra(text: &str) -> Result<Signature, String> {
    let (p, q) = text
        .split_once(',')
        .ok_or_else(|| format!("expected \"p,q\", got \"{text}\""))?;
    let p: u32 = p
        .trim()
        .parse()
        .map_err(|_| format!("bad p in \"{text}\""))?;
    let q: u32 = q
        .trim()
        .parse()
        .map_err(|_| format!("bad q in \"{text}\""))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Closed,
    Series,
    Both,
}

#[derive(Args)]
struct FormatArgs {
    /// Emit one JSON object per evaluation.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit human-readable text (default).
    #[arg(long)]
    text: bool,
}

#[derive(Args)]
struct ExpArgs {
    /// Algebra signature as "p,q" (one of 0,3 / 3,0 / 1,2 / 2,1).
    #[arg(long, value_parser = parse_algebra)]
    algebra: Signature,
    /// Multivector expression, e.g. "1+2*e1-0.5*e12".
    #[arg(long, allow_hyphen_values = true)]
    mv: String,
    #[arg(long, value_enum, default_value_t = EngineArg::Both)]
    engine: EngineArg,
    #[command(flatten)]
    format: FormatArgs,
    /// Largest acceptable closed-vs-series discrepancy in both mode.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Series term budget.
    #[arg(long, default_value_t = 200)]
    terms: usize,
}

#[derive(Args)]
struct TrigArgs {
    #[arg(long, value_parser = parse_algebra)]
    algebra: Signature,
    #[arg(long, allow_hyphen_values = true)]
    mv: String,
    /// Which function to apply.
    #[arg(long = "fn", value_enum)]
    function: TrigFn,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum TrigFn {
    Cos,
    Sin,
    Cosh,
    Sinh,
}

#[derive(Args)]
struct OdeArgs {
    #[arg(long, value_parser = parse_algebra)]
    algebra: Signature,
    /// Left coefficient multivector A in dX/dt = A X (+ X B) (+ f).
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    /// Optional right coefficient B for the two-sided form dX/dt = A X + X B.
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<String>,
    /// Initial value X(0).
    #[arg(long, allow_hyphen_values = true)]
    x0: String,
    /// End time.
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    /// Number of sample times (uniform grid over [0, t], endpoints included).
    #[arg(long, default_value_t = 1)]
    samples: usize,
    /// Constant forcing term f (one-sided form only).
    #[arg(long = "force", allow_hyphen_values = true)]
    force: Option<String>,
    /// Quadrature steps for the forcing integral.
    #[arg(long, default_value_t = 400)]
    steps: usize,
    #[command(flatten)]
    format: FormatArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Exp(args) => run_exp(args),
        Command::Trig(args) => run_trig(args),
        Command::Ode(args) => run_ode(args),
        Command::Selftest => {
            let failures = golden::run_selftest();
            if failures == 0 {
                println!("selftest: all cases passed");
                ExitCode::SUCCESS
            } else {
                println!("selftest: {failures} case(s) failed");
                ExitCode::FAILURE
            }
        }
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::NoConvergence { .. } => EXIT_CONVERGENCE,
        _ => 1,
    }
}

fn parse_or_exit(text: &str, sig: Signature) -> Result<Multivector, ExitCode> {
    parse_multivector(text, sig).map_err(|e| fail(EXIT_PARSE, e))
}

fn emit(record: &OutputRecord, json: bool) {
    if json {
        println!("{}", record.to_json());
    } else {
        print!("{}", record.to_text());
    }
}

fn run_exp(args: ExpArgs) -> ExitCode {
    let a = match parse_or_exit(&args.mv, args.algebra) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let cfg = SeriesConfig {
        max_terms: args.terms,
        ..SeriesConfig::default()
    };

    let closed = match args.engine {
        EngineArg::Closed | EngineArg::Both => match exp_closed_detailed(&a) {
            Ok(d) => Some(d),
            Err(e) => return fail(exit_for(&e), e),
        },
        EngineArg::Series => None,
    };
    let series = match args.engine {
        EngineArg::Series | EngineArg::Both => match exp_series_scaled_with_stats(&a, &cfg) {
            Ok(r) => Some(r),
            Err(e) => return fail(exit_for(&e), e),
        },
        EngineArg::Closed => None,
    };

    let engine = match args.engine {
        EngineArg::Closed => Engine::Closed,
        EngineArg::Series => Engine::Series,
        EngineArg::Both => Engine::Both,
    };
    let discrepancy = match (&closed, &series) {
        (Some(c), Some((s, _))) => Some(c.value.max_abs_diff(s)),
        _ => None,
    };
    let result = closed
        .as_ref()
        .map(|d| *d.value.coeffs())
        .or_else(|| series.as_ref().map(|(s, _)| *s.coeffs()))
        .expect("at least one engine ran");

    let record = OutputRecord {
        algebra: args.algebra,
        input: *a.coeffs(),
        result,
        mixing: closed.as_ref().map(|d| d.mixing),
        branch: closed.as_ref().map(|d| (d.branch_plus, d.branch_minus)),
        engine,
        series: series.as_ref().map(|(_, st)| *st),
        max_discrepancy: discrepancy,
    };
    emit(&record, args.format.json);

    if let Some(d) = discrepancy {
        if d > args.tol {
            eprintln!(
                "error: engines disagree: max-abs discrepancy {d:e} exceeds tolerance {:e}",
                args.tol
            );
            if let (Some(c), Some((s, _))) = (&closed, &series) {
                eprintln!("closed: {}", parse::format_multivector(&c.value));
                eprintln!("series: {}", parse::format_multivector(s));
            }
            return ExitCode::from(EXIT_DISAGREEMENT);
        }
    }
    ExitCode::SUCCESS
}

fn run_trig(args: TrigArgs) -> ExitCode {
    let a = match parse_or_exit(&args.mv, args.algebra) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let value = match args.function {
        TrigFn::Cos => trig::cos(&a),
        TrigFn::Sin => trig::sin(&a),
        TrigFn::Cosh => trig::cosh(&a),
        TrigFn::Sinh => trig::sinh(&a),
    };
    let value = match value {
        Ok(v) => v,
        Err(e) => return fail(exit_for(&e), e),
    };
    // cos/sin go through the even/odd series split where I² = +1
    let engine = match args.function {
        TrigFn::Cos | TrigFn::Sin if args.algebra.pseudoscalar_square() > 0.0 => Engine::Series,
        _ => Engine::Closed,
    };
    let record = OutputRecord {
        algebra: args.algebra,
        input: *a.coeffs(),
        result: *value.coeffs(),
        mixing: None,
        branch: None,
        engine,
        series: None,
        max_discrepancy: None,
    };
    emit(&record, args.format.json);
    ExitCode::SUCCESS
}

fn run_ode(args: OdeArgs) -> ExitCode {
    let sig = args.algebra;
    let a = match parse_or_exit(&args.a, sig) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let x0 = match parse_or_exit(&args.x0, sig) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let b = match &args.b {
        Some(text) => match parse_or_exit(text, sig) {
            Ok(v) => Some(v),
            Err(code) => return code,
        },
        None => None,
    };
    let force = match &args.force {
        Some(text) => match parse_or_exit(text, sig) {
            Ok(v) => Some(v),
            Err(code) => return code,
        },
        None => None,
    };
    if b.is_some() && force.is_some() {
        return fail(1, "forcing combined with --B is not supported");
    }

    let samples = args.samples.max(1);
    let times: Vec<f64> = if samples == 1 {
        vec![args.t]
    } else {
        (0..samples)
            .map(|i| args.t * i as f64 / (samples - 1) as f64)
            .collect()
    };

    for t in times {
        let x = match (&b, &force) {
            (Some(b), None) => propagate_two_sided(&a, b, &x0, t),
            (None, Some(f)) => propagate_forced(&a, &x0, |_| *f, t, args.steps),
            (None, None) => propagate_homogeneous(&a, &x0, t),
            (Some(_), Some(_)) => unreachable!("rejected above"),
        };
        let x = match x {
            Ok(v) => v,
            Err(e) => return fail(exit_for(&e), e),
        };
        let record = OdeRecord {
            algebra: sig,
            t,
            coefficients: *x.coeffs(),
        };
        if args.format.json {
            println!("{}", record.to_json());
        } else {
            println!("{}", record.to_text());
        }
    }
    ExitCode::SUCCESS
}
