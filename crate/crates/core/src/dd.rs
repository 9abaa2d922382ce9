//! Error-free transformations used by the coefficient recurrences.
//!
//! A value is carried as an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// `p·q − r·s` to roughly double-double accuracy.
#[inline]
pub(crate) fn dot2(p: f64, q: f64, r: f64, s: f64) -> (f64, f64) {
    let (x, ex) = two_prod(p, q);
    let (y, ey) = two_prod(r, s);
    let (hi, e) = two_sum(x, -y);
    let lo = e + (ex - ey);
    let (hi, lo2) = two_sum(hi, lo);
    (hi, lo2)
}

/// `n·(n² + ν²)` as a double-double. `n` must be below 2^26 so `n²` is exact.
#[inline]
pub(crate) fn recurrence_denominator(n: f64, nu: f64) -> (f64, f64) {
    let (q, eq) = two_prod(nu, nu);
    let (t, et) = two_sum(n * n, q);
    let t_lo = et + eq;
    let (hi, e) = two_prod(n, t);
    let lo = e + n * t_lo;
    two_sum(hi, lo)
}

/// Nearly correctly rounded quotient of two double-doubles.
#[inline]
pub(crate) fn div(num: (f64, f64), den: (f64, f64)) -> f64 {
    let q1 = num.0 / den.0;
    if !q1.is_finite() || q1 == 0.0 {
        return q1 + num.1 / den.0;
    }
    // r = num − q1·den, exact in the leading part thanks to fma
    let r = (-q1).mul_add(den.0, num.0) + num.1 - q1 * den.1;
    q1 + r / den.0
}
