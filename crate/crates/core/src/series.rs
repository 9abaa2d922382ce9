//! Coefficient recurrences and evaluation of the basis functions.
//!
//! Substituting `y = P(x)cos(ν ln x) + Q(x)sin(ν ln x)` with
//! `P = Σ aₙ (x/2)²ⁿ`, `Q = Σ bₙ (x/2)²ⁿ` into `x²y'' + xy' + (±x² + ν²)y = 0`
//! and matching the coefficients of `cos` and `sin` gives, for `n ≥ 1`,
//!
//! ```text
//! aₙ = s·(n·aₙ₋₁ − ν·bₙ₋₁) / (n(n² + ν²))
//! bₙ = s·(ν·aₙ₋₁ + n·bₙ₋₁) / (n(n² + ν²))
//! ```
//!
//! with `s = −1` for the oscillatory equation and `s = +1` for the modified one.
//! The seed `(1, 0)` produces the cos-type function (`Cf`, `Cd`) and `(0, 1)`
//! the sin-type function (`Sf`, `Sd`).

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::bounds;
use crate::dd;
use crate::error::{Error, Result};

/// The real `ν` of the pure imaginary order `iν`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() {
            Ok(Self(nu))
        } else {
            Err(Error::NonFinite { what: "nu", value: nu })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.0.abs()
    }
}

impl TryFrom<f64> for Order {
    type Error = Error;

    fn try_from(nu: f64) -> Result<Self> {
        Self::new(nu)
    }
}

/// A strictly positive, finite argument.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EvalPoint(f64);

impl EvalPoint {
    pub fn new(x: f64) -> Result<Self> {
        if x.is_nan() || x == f64::INFINITY {
            Err(Error::NonFinite { what: "x", value: x })
        } else if x <= 0.0 {
            Err(Error::NonPositiveArgument(x))
        } else {
            Ok(Self(x))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for EvalPoint {
    type Error = Error;

    fn try_from(x: f64) -> Result<Self> {
        Self::new(x)
    }
}

/// Which equation is being solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `x²y'' + xy' + (x² + ν²)y = 0`, basis `Cf_ν`, `Sf_ν`.
    Oscillatory,
    /// `x²y'' + xy' + (−x² + ν²)y = 0`, basis `Cd_ν`, `Sd_ν`.
    Modified,
}

impl Kind {
    /// Sign in front of the recurrence quotient.
    #[inline]
    fn recurrence_sign(self) -> f64 {
        match self {
            Kind::Oscillatory => -1.0,
            Kind::Modified => 1.0,
        }
    }

    /// Sign of the `x²` term in the differential equation.
    #[inline]
    pub fn equation_sign(self) -> f64 {
        match self {
            Kind::Oscillatory => 1.0,
            Kind::Modified => -1.0,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Kind::Oscillatory => "osc",
            Kind::Modified => "mod",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "osc" | "oscillatory" | "f" => Ok(Kind::Oscillatory),
            "mod" | "modified" | "d" => Ok(Kind::Modified),
            other => Err(format!("unknown kind '{other}' (expected osc or mod)")),
        }
    }
}

/// Coefficients `(aₙ, bₙ)` at half-index `n` (the power of `(x/2)²`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoeffPair {
    pub n: u32,
    pub a: f64,
    pub b: f64,
}

impl CoeffPair {
    pub fn seed(a: f64, b: f64) -> Self {
        Self { n: 0, a, b }
    }

    /// `|a| + |b|`, the quantity bounded by the majorant.
    pub fn magnitude(&self) -> f64 {
        self.a.abs() + self.b.abs()
    }
}

/// One step of the recurrence for either equation.
///
/// Numerators and the denominator are formed in double-double arithmetic so
/// each step is within about one rounding of the exact quotient.
pub fn advance(kind: Kind, prev: &CoeffPair, nu: Order) -> CoeffPair {
    let n = prev.n + 1;
    let nf = f64::from(n);
    let nu = nu.get();
    let den = dd::recurrence_denominator(nf, nu);
    let a = dd::div(dd::dot2(nf, prev.a, nu, prev.b), den);
    let b = dd::div(dd::dot2(nu, prev.a, -nf, prev.b), den);
    let s = kind.recurrence_sign();
    CoeffPair { n, a: s * a, b: s * b }
}

pub fn advance_oscillatory(prev: &CoeffPair, nu: Order) -> CoeffPair {
    advance(Kind::Oscillatory, prev, nu)
}

pub fn advance_modified(prev: &CoeffPair, nu: Order) -> CoeffPair {
    advance(Kind::Modified, prev, nu)
}

/// The coefficient sequence `n = 0..=N` generated from a seed.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    kind: Kind,
    nu: Order,
    seed: (f64, f64),
    entries: Vec<CoeffPair>,
}

impl CoeffTable {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn nu(&self) -> Order {
        self.nu
    }

    pub fn seed(&self) -> (f64, f64) {
        self.seed
    }

    pub fn entries(&self) -> &[CoeffPair] {
        &self.entries
    }

    /// Highest retained half-index `N`.
    pub fn last_index(&self) -> usize {
        self.entries.len() - 1
    }

    fn sums(&self, x: f64) -> SeriesSums {
        let y = 0.25 * x * x;
        let (mut p, mut q, mut np, mut nq) = (Sum::default(), Sum::default(), Sum::default(), Sum::default());
        let (mut abs, mut abs_n) = (0.0, 0.0);
        let mut pw = 1.0;
        for e in &self.entries {
            let (ta, tb) = (e.a * pw, e.b * pw);
            let n = f64::from(e.n);
            p.add(ta);
            q.add(tb);
            np.add(n * ta);
            nq.add(n * tb);
            let mag = e.magnitude() * pw;
            abs += mag;
            abs_n += n * mag;
            pw *= y;
        }
        SeriesSums { p: p.value(), q: q.value(), np: np.value(), nq: nq.value(), abs, abs_n }
    }
}

// Neumaier compensated sum
#[derive(Default)]
struct Sum {
    s: f64,
    c: f64,
}

impl Sum {
    fn add(&mut self, v: f64) {
        let t = self.s + v;
        self.c += if self.s.abs() >= v.abs() { (self.s - t) + v } else { (v - t) + self.s };
        self.s = t;
    }

    fn value(&self) -> f64 {
        self.s + self.c
    }
}

pub fn build_table(kind: Kind, seed: (f64, f64), nu: Order, n: usize) -> Result<CoeffTable> {
    for (what, v) in [("seed a", seed.0), ("seed b", seed.1)] {
        if !v.is_finite() {
            return Err(Error::NonFinite { what, value: v });
        }
    }
    let mut entries = Vec::with_capacity(n + 1);
    let mut cur = CoeffPair::seed(seed.0, seed.1);
    entries.push(cur);
    for _ in 0..n {
        cur = advance(kind, &cur, nu);
        entries.push(cur);
    }
    Ok(CoeffTable { kind, nu, seed, entries })
}

#[derive(Debug, Default, Clone, Copy)]
struct SeriesSums {
    p: f64,
    q: f64,
    // Σ n·aₙ y^n, so that P'(x) = (2/x)·np
    np: f64,
    nq: f64,
    abs: f64,
    abs_n: f64,
}

/// Evaluated basis pair at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairResult {
    /// `Cf_ν(x)` or `Cd_ν(x)`.
    pub cos_part: f64,
    /// `Sf_ν(x)` or `Sd_ν(x)`.
    pub sin_part: f64,
    pub d_cos: f64,
    pub d_sin: f64,
    /// Highest retained half-index `N`; the series keep `N + 1` terms.
    pub terms_used: usize,
    /// Bound on `|true − returned|` for `cos_part` and `sin_part`: truncation
    /// majorant plus a double-precision rounding allowance.
    pub tail_bound: f64,
    /// Same guarantee for `d_cos` and `d_sin`.
    pub deriv_bound: f64,
}

// unit roundoff
const U: f64 = f64::EPSILON / 2.0;

struct Evaluated {
    result: PairResult,
    magnitude: f64,
}

fn eval_fixed(kind: Kind, nu: Order, x: EvalPoint, n: usize) -> Result<Evaluated> {
    let xv = x.get();
    let cos_tab = build_table(kind, (1.0, 0.0), nu, n)?;
    let sin_tab = build_table(kind, (0.0, 1.0), nu, n)?;
    let theta = nu.get() * xv.ln();
    let (sn, cs) = theta.sin_cos();
    let nu_over_x = nu.get() / xv;

    let combine = |s: &SeriesSums| {
        let value = s.p * cs + s.q * sn;
        let dp = 2.0 * s.np / xv;
        let dq = 2.0 * s.nq / xv;
        let deriv = dp * cs + dq * sn + nu_over_x * (s.q * cs - s.p * sn);
        (value, deriv)
    };
    let c = cos_tab.sums(xv);
    let s = sin_tab.sums(xv);
    let (cos_part, d_cos) = combine(&c);
    let (sin_part, d_sin) = combine(&s);

    // rounding allowance: coefficient drift and summation grow linearly in N,
    // the phase error in proportion to |ν ln x|
    let growth = 8.0 * U * (n as f64 + 4.0 + theta.abs());
    let magnitude = c.abs.max(s.abs);
    let d_magnitude = (2.0 * c.abs_n / xv + nu_over_x.abs() * c.abs)
        .max(2.0 * s.abs_n / xv + nu_over_x.abs() * s.abs);

    let tail_bound = bounds::tail_bound(nu, x, n) + growth * magnitude;
    let deriv_bound = bounds::deriv_tail_bound(nu, x, n) + growth * d_magnitude;

    for v in [cos_part, sin_part, d_cos, d_sin] {
        if !v.is_finite() {
            return Err(Error::NonFinite { what: "series value", value: v });
        }
    }

    Ok(Evaluated {
        result: PairResult {
            // normalise −0.0 so printed output never shows a signed zero
            cos_part: cos_part + 0.0,
            sin_part: sin_part + 0.0,
            d_cos: d_cos + 0.0,
            d_sin: d_sin + 0.0,
            terms_used: n,
            tail_bound,
            deriv_bound,
        },
        magnitude,
    })
}

/// Evaluates the basis pair keeping coefficient indices `0..=n` exactly.
pub fn eval_pair_terms(kind: Kind, nu: Order, x: EvalPoint, n: usize) -> Result<PairResult> {
    if n > bounds::MAX_TERMS {
        return Err(Error::TermLimit { tol: 0.0, max: bounds::MAX_TERMS });
    }
    eval_fixed(kind, nu, x, n).map(|e| e.result)
}

/// Evaluates the basis pair with enough terms that both the value and the
/// derivative truncation bounds fall below `tol`.
///
/// For the oscillatory kind and `x ≳ 20` the alternating series cancels
/// catastrophically; the result is still returned but `tail_bound` grows with
/// the size of the largest partial sums.
pub fn eval_pair(kind: Kind, nu: Order, x: EvalPoint, tol: f64) -> Result<PairResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::NonPositiveTolerance(tol));
    }
    let mut n = bounds::required_terms(nu, x, tol)?;
    while bounds::deriv_tail_bound(nu, x, n) > tol {
        n += 1;
        if n > bounds::MAX_TERMS {
            return Err(Error::TermLimit { tol, max: bounds::MAX_TERMS });
        }
    }
    let ev = eval_fixed(kind, nu, x, n)?;
    let floor = f64::EPSILON * ev.magnitude;
    if tol < floor {
        return Err(Error::ToleranceUnachievable { requested: tol, floor });
    }
    Ok(ev.result)
}

/// `cos·sin' − sin·cos' − ν/x`, identically zero for exact solutions.
pub fn wronskian_residual(kind: Kind, nu: Order, x: EvalPoint, tol: f64) -> Result<f64> {
    let r = eval_pair(kind, nu, x, tol)?;
    Ok(r.cos_part * r.d_sin - r.sin_part * r.d_cos - nu.get() / x.get())
}

/// `|Γ(iν)| = sqrt(π / (ν·sinh(πν)))`, even in `ν`.
pub fn gamma_modulus_imag(nu: Order) -> Result<f64> {
    let v = nu.abs();
    if v == 0.0 {
        return Err(Error::GammaPole { re: 0.0, im: 0.0 });
    }
    let t = PI * v;
    if t < 20.0 {
        Ok((PI / (v * t.sinh())).sqrt())
    } else {
        // ln sinh t = t + ln((1 − e^{−2t})/2)
        let ln_sinh = t + (-(-2.0 * t).exp()).ln_1p() - std::f64::consts::LN_2;
        Ok((0.5 * (PI.ln() - v.ln() - ln_sinh)).exp())
    }
}
