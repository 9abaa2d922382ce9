use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Shortest text that parses back to the same double; exponent form outside
/// `[1e-4, 1e15)` so tiny bounds stay short.
pub fn num(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) || !a.is_finite() {
        format!("{}", v + 0.0)
    } else {
        format!("{v:e}")
    }
}

pub trait Record: Serialize {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

pub fn render<R: Record>(rows: &[R], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = R::HEADER.join(",");
            out.push('\n');
            for r in rows {
                out.push_str(&r.fields().join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("records serialize");
            out.push('\n');
            out
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalRecord {
    pub kind: &'static str,
    pub nu: f64,
    pub x: f64,
    pub cos_part: f64,
    pub sin_part: f64,
    pub d_cos: f64,
    pub d_sin: f64,
    pub terms_used: usize,
    pub tail_bound: f64,
    pub deriv_bound: f64,
}

impl Record for EvalRecord {
    const HEADER: &'static [&'static str] =
        &["kind", "nu", "x", "cos_part", "sin_part", "d_cos", "d_sin", "terms_used", "tail_bound", "deriv_bound"];

    fn fields(&self) -> Vec<String> {
        let mut f = vec![self.kind.to_string()];
        f.extend([self.nu, self.x, self.cos_part, self.sin_part, self.d_cos, self.d_sin].map(num));
        f.push(self.terms_used.to_string());
        f.extend([self.tail_bound, self.deriv_bound].map(num));
        f
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub x: f64,
    pub nu: f64,
    pub cos_part: f64,
    pub sin_part: f64,
    pub d_cos: f64,
    pub d_sin: f64,
    pub terms: usize,
    pub bound: f64,
}

impl Record for TableRow {
    const HEADER: &'static [&'static str] = &["x", "nu", "cos_part", "sin_part", "d_cos", "d_sin", "terms", "bound"];

    fn fields(&self) -> Vec<String> {
        let mut f: Vec<String> = [self.x, self.nu, self.cos_part, self.sin_part, self.d_cos, self.d_sin].map(num).into();
        f.push(self.terms.to_string());
        f.push(num(self.bound));
        f
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareRow {
    pub x: f64,
    pub nu: f64,
    pub cos_part: f64,
    pub sin_part: f64,
    pub oracle_cos: f64,
    pub oracle_sin: f64,
    pub terms: usize,
    pub error: f64,
    pub bound: f64,
    pub within_bound: bool,
    pub within_tol: bool,
}

impl Record for CompareRow {
    const HEADER: &'static [&'static str] = &[
        "x", "nu", "cos_part", "sin_part", "oracle_cos", "oracle_sin", "terms", "error", "bound", "within_bound",
        "within_tol",
    ];

    fn fields(&self) -> Vec<String> {
        let mut f: Vec<String> =
            [self.x, self.nu, self.cos_part, self.sin_part, self.oracle_cos, self.oracle_sin].map(num).into();
        f.push(self.terms.to_string());
        f.extend([self.error, self.bound].map(num));
        f.push(self.within_bound.to_string());
        f.push(self.within_tol.to_string());
        f
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareSummary {
    pub points: usize,
    pub max_error: f64,
    pub tol: f64,
    pub bound_failures: usize,
    pub tol_failures: usize,
    pub result: &'static str,
}

impl CompareSummary {
    pub fn line(&self) -> String {
        format!(
            "# summary points={} max_error={} tol={} bound_failures={} tol_failures={} result={}\n",
            self.points,
            num(self.max_error),
            num(self.tol),
            self.bound_failures,
            self.tol_failures,
            self.result
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsRow {
    pub terms: usize,
    pub tail_bound: f64,
    pub empirical_error: f64,
    pub f: f64,
    pub m_nu: f64,
}

impl Record for BoundsRow {
    const HEADER: &'static [&'static str] = &["terms", "tail_bound", "empirical_error", "f", "m_nu"];

    fn fields(&self) -> Vec<String> {
        let mut f = vec![self.terms.to_string()];
        f.extend([self.tail_bound, self.empirical_error, self.f, self.m_nu].map(num));
        f
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyRecord {
    pub class: &'static str,
    pub order: f64,
    pub prefactor_exponent: f64,
    pub gamma: f64,
    pub beta: f64,
}

impl Record for ClassifyRecord {
    const HEADER: &'static [&'static str] = &["class", "order", "prefactor_exponent", "gamma", "beta"];

    fn fields(&self) -> Vec<String> {
        let mut f = vec![self.class.to_string()];
        f.extend([self.order, self.prefactor_exponent, self.gamma, self.beta].map(num));
        f
    }
}
