use std::fmt;

use rayon::prelude::*;

use imbessel::oracle::Oracle;
use imbessel::{classify as reduce, eval_pair, eval_pair_terms, BoundReport, EvalPoint, Kind, LommelInput, Order, OrderClass, PairResult};

use crate::grid::{GridError, GridSpec};
use crate::output::{
    render, BoundsRow, ClassifyRecord, CompareRow, CompareSummary, EvalRecord, Format, TableRow,
};
use crate::{BoundsArgs, ClassifyArgs, CompareArgs, EvalArgs, GridArgs};

pub const THREADS_VAR: &str = "IMBESSEL_THREADS";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Library(imbessel::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Library(imbessel::Error::ToleranceUnachievable { .. } | imbessel::Error::TermLimit { .. }) => 3,
            Self::Library(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) => f.write_str(m),
            Self::Library(e) => write!(f, "{e}"),
        }
    }
}

impl From<imbessel::Error> for CliError {
    fn from(e: imbessel::Error) -> Self {
        Self::Library(e)
    }
}

impl From<GridError> for CliError {
    fn from(e: GridError) -> Self {
        Self::Usage(e.to_string())
    }
}

pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, status: 0 }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Pool sized by `IMBESSEL_THREADS`, capped at the available parallelism.
fn pool() -> CliResult<rayon::ThreadPool> {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    let threads = match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n.min(available),
            _ => return Err(CliError::Usage(format!("{THREADS_VAR} must be a positive integer (got {v:?})"))),
        },
        Err(_) => available,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))
}

/// Runs `f` over the points in parallel; the result keeps input order.
fn fan_out<T: Send>(points: &[(f64, f64)], f: impl Fn(f64, f64) -> CliResult<T> + Sync) -> CliResult<Vec<T>> {
    pool()?.install(|| points.par_iter().map(|&(nu, x)| f(nu, x)).collect())
}

fn evaluate(kind: Kind, nu: f64, x: f64, tol: f64, terms: Option<usize>) -> CliResult<PairResult> {
    let (nu, x) = (Order::new(nu)?, EvalPoint::new(x)?);
    Ok(match terms {
        Some(n) => eval_pair_terms(kind, nu, x, n)?,
        None => eval_pair(kind, nu, x, tol)?,
    })
}

fn check_tol(tol: f64) -> CliResult<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(imbessel::Error::NonPositiveTolerance(tol).into())
    }
}

fn grid_of(args: &GridArgs) -> CliResult<GridSpec> {
    let nus = args.nu.0.clone();
    Ok(match &args.x {
        Some(xs) => GridSpec::explicit(xs.0.clone(), nus)?,
        None => GridSpec::spaced(args.x_min, args.x_max, args.x_steps, args.x_scale, nus)?,
    })
}

/// Tolerance tried first when `eval` gets no `--tol`.
pub const EVAL_TOL: f64 = 1e-15;

/// Full double precision: `EVAL_TOL`, or the precision floor of the point
/// when that is larger.
fn eval_best(kind: Kind, nu: f64, x: f64) -> CliResult<PairResult> {
    let mut tol = EVAL_TOL;
    for _ in 0..4 {
        match evaluate(kind, nu, x, tol, None) {
            Err(CliError::Library(imbessel::Error::ToleranceUnachievable { floor, .. })) => tol = 2.0 * floor,
            other => return other,
        }
    }
    evaluate(kind, nu, x, tol, None)
}

pub fn eval(args: &EvalArgs) -> CliResult<Output> {
    if let Some(tol) = args.tol {
        check_tol(tol)?;
    }
    if args.nu.0.is_empty() {
        return Err(CliError::Usage("--nu needs at least one value".into()));
    }
    let grid = GridSpec::explicit(args.x.0.clone(), args.nu.0.clone())?;
    let kind = Kind::from(args.kind);
    let rows = fan_out(&grid.points(), |nu, x| {
        let r = match (args.tol, args.terms) {
            (None, None) => eval_best(kind, nu, x)?,
            (tol, terms) => evaluate(kind, nu, x, tol.unwrap_or(EVAL_TOL), terms)?,
        };
        Ok(EvalRecord {
            kind: kind.short_name(),
            nu,
            x,
            cos_part: r.cos_part,
            sin_part: r.sin_part,
            d_cos: r.d_cos,
            d_sin: r.d_sin,
            terms_used: r.terms_used,
            tail_bound: r.tail_bound,
            deriv_bound: r.deriv_bound,
        })
    })?;
    Ok(Output::ok(render(&rows, args.format)))
}

pub fn table(args: &GridArgs) -> CliResult<Output> {
    check_tol(args.tol)?;
    let grid = grid_of(args)?;
    let kind = Kind::from(args.kind);
    let rows = fan_out(&grid.points(), |nu, x| {
        let r = evaluate(kind, nu, x, args.tol, args.terms)?;
        Ok(TableRow {
            x,
            nu,
            cos_part: r.cos_part,
            sin_part: r.sin_part,
            d_cos: r.d_cos,
            d_sin: r.d_sin,
            terms: r.terms_used,
            bound: r.tail_bound,
        })
    })?;
    Ok(Output::ok(render(&rows, args.format)))
}

fn oracle_of(digits: u32) -> CliResult<Oracle> {
    if !(1..=1000).contains(&digits) {
        return Err(CliError::Usage(format!("--oracle-digits must be in 1..=1000 (got {digits})")));
    }
    Ok(Oracle::new(digits))
}

/// PASS needs every point within its reported bound and within `--tol`.
pub fn compare(args: &CompareArgs) -> CliResult<Output> {
    let g = &args.grid;
    check_tol(g.tol)?;
    let grid = grid_of(g)?;
    let oracle = oracle_of(args.oracle_digits)?;
    let kind = Kind::from(g.kind);
    let rows = fan_out(&grid.points(), |nu, x| {
        let r = evaluate(kind, nu, x, g.tol, g.terms)?;
        let (oc, os) = oracle.pair(kind, Order::new(nu)?, EvalPoint::new(x)?)?;
        let error = (r.cos_part - oc).abs().max((r.sin_part - os).abs());
        Ok(CompareRow {
            x,
            nu,
            cos_part: r.cos_part,
            sin_part: r.sin_part,
            oracle_cos: oc,
            oracle_sin: os,
            terms: r.terms_used,
            error,
            bound: r.tail_bound,
            within_bound: error <= r.tail_bound,
            within_tol: error <= g.tol,
        })
    })?;
    let bound_failures = rows.iter().filter(|r| !r.within_bound).count();
    let tol_failures = rows.iter().filter(|r| !r.within_tol).count();
    let pass = bound_failures == 0 && tol_failures == 0;
    let summary = CompareSummary {
        points: rows.len(),
        max_error: rows.iter().map(|r| r.error).fold(0.0, f64::max),
        tol: g.tol,
        bound_failures,
        tol_failures,
        result: if pass { "PASS" } else { "FAIL" },
    };
    let text = match g.format {
        Format::Csv => render(&rows, Format::Csv) + &summary.line(),
        Format::Json => {
            let doc = serde_json::json!({ "rows": rows, "summary": summary });
            serde_json::to_string_pretty(&doc).expect("records serialize") + "\n"
        }
    };
    Ok(Output { text, status: if pass { 0 } else { 3 } })
}

pub fn bounds(args: &BoundsArgs) -> CliResult<Output> {
    let (nu, x) = (Order::new(args.nu)?, EvalPoint::new(args.x)?);
    if args.terms.0.is_empty() {
        return Err(CliError::Usage("--terms needs at least one value".into()));
    }
    let kind = Kind::from(args.kind);
    let (oc, os) = oracle_of(args.oracle_digits)?.pair(kind, nu, x)?;
    let rows = args
        .terms
        .0
        .iter()
        .map(|&n| {
            let r = eval_pair_terms(kind, nu, x, n)?;
            let report = BoundReport::new(nu, x, n);
            Ok(BoundsRow {
                terms: n,
                tail_bound: report.tail,
                empirical_error: (r.cos_part - oc).abs().max((r.sin_part - os).abs()),
                f: report.f,
                m_nu: report.m_nu,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Output::ok(render(&rows, args.format)))
}

pub fn classify(args: &ClassifyArgs) -> CliResult<Output> {
    let sol = reduce(&LommelInput::new(args.a, args.b, args.c, args.beta)?);
    let (class, order) = match sol.order {
        OrderClass::Real(v) => ("real", v),
        OrderClass::Imaginary(v) => ("imaginary", v),
    };
    let rec = ClassifyRecord { class, order, prefactor_exponent: sol.prefactor_exponent, gamma: sol.gamma, beta: sol.beta };
    Ok(Output::ok(render(&[rec], args.format)))
}
