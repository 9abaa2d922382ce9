//! A-priori truncation bounds.
//!
//! For the seeds `(1, 0)` and `(0, 1)` the coefficients satisfy
//!
//! ```text
//! |aₙ| + |bₙ| ≤ m(ν)·n^|ν| / (n!)²,    n ≥ 1
//! m(ν) = (1+|ν|)/(1+ν²) · exp(0.6449·ν² + 0.2021·F(ν))
//! ```
//!
//! so the part of the series discarded after half-index `N` is bounded by the
//! corresponding majorant tail. For `|ν| ≤ 2` that tail has the closed form
//! `m(ν)·(x/2)^{2N+1}·I₁(x)/(N!)²`; beyond that it is summed directly.
//!
//! Throughout, `N` is the highest retained coefficient index, so an
//! evaluation at `N` keeps `N + 1` terms of each series.

use crate::error::{Error, Result};
use crate::series::{EvalPoint, Order};

/// Hard cap on the number of retained terms.
pub const MAX_TERMS: usize = 400;

/// `Σ_{n≥2} 1/n² = π²/6 − 1`, to four places.
pub const ZETA2_TAIL: f64 = 0.6449;
/// `Σ_{n≥2} 1/n³ = ζ(3) − 1`, to four places.
pub const ZETA3_TAIL: f64 = 0.2021;

// inflation applied to the closed-form I₁ factor
const I1_INFLATION: f64 = 1.0001;
// direct summation stops once the geometric remainder is below this fraction
const DIRECT_SUM_REL: f64 = 1e-3;
const DIRECT_SUM_INFLATION: f64 = 1.01;

/// The piecewise constant `F(ν)` of the third-order term in the ratio bound.
pub fn factor_f(nu: Order) -> f64 {
    let v = nu.abs();
    let v1 = (v - 1.0).abs();
    if v <= 2.0 {
        v * v * v1 * (1.0 - v).exp2()
    } else if v <= 3.0 {
        v * v1 * (3.0 * v + (v - 2.0) * (1.0 + v / 2.0) * (3.0 - v).exp2()) / 6.0
    } else {
        v * v1 * (v * v / 2.0 + 3.0 * v - 2.0) / 6.0
    }
}

/// `m(ν)`, the uniform bound on the reduced majorant `m₂ₙ`.
pub fn m_of_nu(nu: Order) -> f64 {
    let v = nu.abs();
    (1.0 + v) / (1.0 + v * v) * (ZETA2_TAIL * v * v + ZETA3_TAIL * factor_f(nu)).exp()
}

pub(crate) fn ln_factorial(n: usize) -> f64 {
    let mut exact: u64 = 1;
    for k in 2..=n.min(20) as u64 {
        exact *= k;
    }
    let mut acc = (exact as f64).ln();
    for k in 21..=n {
        acc += (k as f64).ln();
    }
    acc
}

/// `m(ν)·n^|ν|/(n!)²`, bounding `|aₙ| + |bₙ|` for the standard seeds.
///
/// At `n = 0` this returns `1`, the magnitude of either seed.
pub fn majorant_bound(nu: Order, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ln = m_of_nu(nu).ln() + nu.abs() * (n as f64).ln() - 2.0 * ln_factorial(n);
    ln.exp()
}

/// Modified Bessel function `I₁(x)` from its power series.
pub(crate) fn bessel_i1(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let mut term = 0.5 * x;
    let mut sum = term;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= y / (k * (k + 1.0));
        sum += term;
        if term <= 1e-17 * sum {
            break;
        }
    }
    sum
}

/// `Σ_{n ≥ start} w(n)·m(ν)·n^|ν|·y^n/(n!)²` with `y = (x/2)²`.
///
/// `w` must keep the term ratio nonincreasing in `n`; the remainder after the
/// last summed term is then dominated by a geometric series.
fn majorant_tail_sum(nu: Order, x: f64, start: usize, weight: impl Fn(f64) -> f64) -> f64 {
    let v = nu.abs();
    let ln_y = 2.0 * (0.5 * x).ln();
    let start = start.max(1);
    let n0 = start as f64;
    let ln_t =
        m_of_nu(nu).ln() + v * n0.ln() + n0 * ln_y - 2.0 * ln_factorial(start) + weight(n0).ln();
    let mut t = ln_t.exp();
    let mut sum = 0.0;
    let y = (0.5 * x) * (0.5 * x);
    let ratio = |n: f64| weight(n + 1.0) / weight(n) * ((n + 1.0) / n).powf(v) * y / ((n + 1.0) * (n + 1.0));
    let mut n = n0;
    for _ in 0..(8 * MAX_TERMS) {
        sum += t;
        let r = ratio(n);
        t *= r;
        n += 1.0;
        let r_next = ratio(n);
        if r_next < 1.0 {
            let rem = t / (1.0 - r_next);
            if rem <= DIRECT_SUM_REL * sum || t == 0.0 {
                return (sum + rem) * DIRECT_SUM_INFLATION;
            }
        }
    }
    f64::INFINITY
}

fn closed_form_tail(nu: Order, x: f64, n: usize) -> f64 {
    let nf = n as f64;
    let ln = m_of_nu(nu).ln() + (2.0 * nf + 1.0) * (0.5 * x).ln() - 2.0 * ln_factorial(n);
    ln.exp() * bessel_i1(x) * I1_INFLATION
}

/// Bound on the sum of the discarded terms `n > N` of each series.
///
/// Applies to the standard seeds and bounds the truncation error of each of
/// `P`, `Q` and hence of `P·cos + Q·sin`. Nonincreasing in `N`.
pub fn tail_bound(nu: Order, x: EvalPoint, n: usize) -> f64 {
    let x = x.get();
    let direct = majorant_tail_sum(nu, x, n + 1, |_| 1.0);
    if nu.abs() <= 2.0 && n >= 1 {
        // the closed form rises while N < x/2 and falls afterwards; the true
        // tail never rises, so the smaller endpoint is still a bound
        let closed = closed_form_tail(nu, x, n).min(closed_form_tail(nu, x, 1));
        closed.min(direct)
    } else {
        direct
    }
}

/// Bound on the truncation error of the derivatives `d/dx[P·cos + Q·sin]`.
///
/// Differentiating the discarded terms brings down `2n/x` from the power and
/// `|ν|/x` from the phase.
pub fn deriv_tail_bound(nu: Order, x: EvalPoint, n: usize) -> f64 {
    let x = x.get();
    let v = nu.abs();
    majorant_tail_sum(nu, x, n + 1, |k| (2.0 * k + v) / x)
}

/// Smallest `N ≤ MAX_TERMS` with `tail_bound(ν, x, N) ≤ tol`.
pub fn required_terms(nu: Order, x: EvalPoint, tol: f64) -> Result<usize> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::NonPositiveTolerance(tol));
    }
    (1..=MAX_TERMS)
        .find(|&n| tail_bound(nu, x, n) <= tol)
        .ok_or(Error::TermLimit { tol, max: MAX_TERMS })
}

/// The quantities of the majorant chain at one `(ν, x, N)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub f: f64,
    pub m_nu: f64,
    pub n: usize,
    pub tail: f64,
}

impl BoundReport {
    pub fn new(nu: Order, x: EvalPoint, n: usize) -> Self {
        Self { f: factor_f(nu), m_nu: m_of_nu(nu), n, tail: tail_bound(nu, x, n) }
    }
}
