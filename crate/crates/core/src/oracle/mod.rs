//! Extended-precision reference values.
//!
//! Everything here is deliberately independent of [`crate::series`]: the
//! Bessel functions are summed from their complex power series
//!
//! ```text
//! J_{iν}(x) = (x/2)^{iν} Σ (−1)ⁿ (x/2)²ⁿ / (n!·Γ(n+1+iν))
//! ```
//!
//! (drop the `(−1)ⁿ` for `I_{iν}`) in fixed-point arithmetic with at least 50
//! working digits, and `K_{iτ}` comes from quadrature of
//! `∫₀^∞ exp(−x cosh t) cos(τt) dt`. The oracle is slow and meant for tests
//! and the `compare` / `bounds` commands.

mod gamma;
pub mod hp;
mod quad;

use crate::bounds;
use crate::error::{Error, Result};
use crate::series::{EvalPoint, Kind, Order};

pub use hp::{HpComplex, HpReal};

/// Digits promised by default.
pub const DEFAULT_DIGITS: u32 = 40;
/// Lower limit on the working precision, in decimal digits.
pub const MIN_WORKING_DIGITS: u32 = 50;
/// Below this argument the Kantorovich–Lebedev integral is declared unreliable.
pub const KL_MIN_X: f64 = 0.05;
/// Digits delivered by the double-precision quadrature.
pub const KL_DIGITS: u32 = 12;

/// A complex value with the number of significant digits it is good to.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleValue {
    pub re: HpReal,
    pub im: HpReal,
    pub digits: u32,
}

impl OracleValue {
    fn from_complex(z: HpComplex, digits: u32) -> Self {
        Self { re: z.re, im: z.im, digits }
    }

    fn as_complex(&self) -> HpComplex {
        HpComplex::new(self.re.clone(), self.im.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn abs(&self) -> f64 {
        self.as_complex().abs().to_f64()
    }
}

/// Oracle at a fixed number of promised digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    digits: u32,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(DEFAULT_DIGITS)
    }
}

impl Oracle {
    pub fn new(digits: u32) -> Self {
        Self { digits: digits.max(1) }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Fractional bits used internally: at least 50 digits and 20 digits of
    /// headroom over the promise.
    pub fn working_bits(&self) -> u32 {
        let digits = MIN_WORKING_DIGITS.max(self.digits + 20);
        (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 8
    }

    fn check_pole(re: f64, im: f64) -> Result<()> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::NonFinite { what: "gamma argument", value: if re.is_finite() { im } else { re } });
        }
        if im == 0.0 && re <= 0.0 && re.fract() == 0.0 {
            return Err(Error::GammaPole { re, im });
        }
        Ok(())
    }

    /// `Γ(z)` for complex `z` away from the non-positive integers.
    pub fn gamma(&self, re: f64, im: f64) -> Result<OracleValue> {
        Self::check_pole(re, im)?;
        let z = HpComplex::from_f64(re, im, self.working_bits());
        Ok(OracleValue::from_complex(gamma::gamma(&z), self.digits))
    }

    fn gamma_one_plus_i(&self, nu: Order) -> HpComplex {
        gamma::gamma(&HpComplex::from_f64(1.0, nu.get(), self.working_bits()))
    }

    /// `Σ_{n≤limit} (∓(x/2)²)ⁿ / (n!·(1+iν)ₙ)`; without a limit, at least twice
    /// the terms the majorant asks for at 10⁻⁴⁰ and on until terms vanish.
    fn reduced_series(&self, kind: Kind, nu: Order, x: EvalPoint, limit: Option<usize>) -> HpComplex {
        let bits = self.working_bits();
        let half = HpReal::from_f64(x.get(), bits).shl(-1);
        let mut y = &half * &half;
        if kind == Kind::Oscillatory {
            y = -y;
        }
        let min_terms = match limit {
            Some(n) => n,
            None => 2 * bounds::required_terms(nu, x, 1e-40).unwrap_or(bounds::MAX_TERMS),
        };
        let nu_hp = HpReal::from_f64(nu.get(), bits);
        let mut term = HpComplex::one(bits);
        let mut sum = term.clone();
        let mut n = 1usize;
        loop {
            if let Some(limit) = limit {
                if n > limit {
                    break;
                }
            } else if n > min_terms && term.is_negligible() {
                break;
            }
            let nf = n as i64;
            let den = HpComplex::new(HpReal::from_int(nf, bits), nu_hp.clone());
            term = &term.scale(&y.div_int(nf)) / &den;
            sum = &sum + &term;
            n += 1;
        }
        sum
    }

    /// `J_{iν}(x)` (oscillatory) or `I_{iν}(x)` (modified).
    pub fn bessel_imag(&self, nu: Order, x: EvalPoint, kind: Kind) -> Result<OracleValue> {
        let bits = self.working_bits();
        let s = self.reduced_series(kind, nu, x, None);
        let ln_half_x = HpReal::from_f64(x.get(), bits).shl(-1).ln();
        let phase = HpComplex::cis(&(&HpReal::from_f64(nu.get(), bits) * &ln_half_x));
        let value = &(&phase * &s) / &self.gamma_one_plus_i(nu);
        Ok(OracleValue::from_complex(value, self.digits))
    }

    /// `Γ(1+iν)·2^{iν}·J_{iν}(x)` or `Γ(1+iν)·2^{iν}·I_{iν}(x)`, the exact
    /// complex counterpart of `cos_part + i·sin_part`.
    pub fn pair_value(&self, kind: Kind, nu: Order, x: EvalPoint) -> Result<OracleValue> {
        let bits = self.working_bits();
        let bessel = self.bessel_imag(nu, x, kind)?.as_complex();
        let nu_hp = HpReal::from_f64(nu.get(), bits);
        let two_pow = HpComplex::cis(&(&nu_hp * &HpReal::ln2(bits)));
        let value = &(&self.gamma_one_plus_i(nu) * &two_pow) * &bessel;
        Ok(OracleValue::from_complex(value, self.digits))
    }

    /// Gold `(cos_part, sin_part)` rounded to double.
    pub fn pair(&self, kind: Kind, nu: Order, x: EvalPoint) -> Result<(f64, f64)> {
        Ok(self.pair_value(kind, nu, x)?.to_f64())
    }

    fn truncated(&self, kind: Kind, nu: Order, x: EvalPoint, n: usize) -> HpComplex {
        let bits = self.working_bits();
        let s = self.reduced_series(kind, nu, x, Some(n));
        let ln_x = HpReal::from_f64(x.get(), bits).ln();
        let phase = HpComplex::cis(&(&HpReal::from_f64(nu.get(), bits) * &ln_x));
        &phase * &s
    }

    /// The same pair with the power series cut after `(x/2)^{2n}`, summed
    /// exactly; isolates truncation error from rounding.
    pub fn truncated_pair(&self, kind: Kind, nu: Order, x: EvalPoint, n: usize) -> Result<(f64, f64)> {
        Ok(self.truncated(kind, nu, x, n).to_f64())
    }

    /// `(|Δcos_part|, |Δsin_part|)` between the full pair and the pair cut
    /// after index `n`, formed before rounding to double.
    pub fn truncation_error(&self, kind: Kind, nu: Order, x: EvalPoint, n: usize) -> Result<(f64, f64)> {
        let full = self.pair_value(kind, nu, x)?;
        let cut = self.truncated(kind, nu, x, n);
        Ok(((&full.re - &cut.re).abs().to_f64(), (&full.im - &cut.im).abs().to_f64()))
    }

    /// Macdonald function `K_{iτ}(x)` from the Kantorovich–Lebedev integral.
    pub fn kl_macdonald(&self, tau: f64, x: EvalPoint) -> Result<OracleValue> {
        kl_macdonald(tau, x)
    }
}

/// `Γ(z)` at the default precision.
pub fn hp_gamma(re: f64, im: f64) -> Result<OracleValue> {
    Oracle::default().gamma(re, im)
}

/// `J_{iν}(x)` or `I_{iν}(x)` at the default precision.
pub fn hp_bessel_imag(nu: Order, x: EvalPoint, kind: Kind) -> Result<OracleValue> {
    Oracle::default().bessel_imag(nu, x, kind)
}

/// Gold `(cos_part, sin_part)` at the default precision.
pub fn oracle_pair(kind: Kind, nu: Order, x: EvalPoint) -> Result<(f64, f64)> {
    Oracle::default().pair(kind, nu, x)
}

/// `K_{iτ}(x) = ∫₀^∞ exp(−x cosh t) cos(τt) dt`.
///
/// The range is cut at `T` where `exp(−x cosh T) < 10⁻²⁵·exp(−x)` and split
/// into panels no wider than `π/(4·max(|τ|, 1))`, each integrated adaptively.
pub fn kl_macdonald(tau: f64, x: EvalPoint) -> Result<OracleValue> {
    let xv = x.get();
    if !tau.is_finite() {
        return Err(Error::NonFinite { what: "tau", value: tau });
    }
    if xv < KL_MIN_X {
        return Err(Error::QuadratureUnreliable { x: xv, min: KL_MIN_X });
    }
    let upper = (1.0 + 25.0 * std::f64::consts::LN_10 / xv).acosh();
    let width = std::f64::consts::PI / (4.0 * tau.abs().max(1.0));
    let panels = (upper / width).ceil().max(1.0) as usize;
    let h = upper / panels as f64;
    // integrand scaled by e^x so the tolerance is relative to the peak
    let f = |t: f64| (-xv * (t.cosh() - 1.0)).exp() * (tau * t).cos();
    let tol = 1e-17;
    // Neumaier summation over panels
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for i in 0..panels {
        let v = quad::adaptive(&f, i as f64 * h, (i + 1) as f64 * h, tol);
        let t = sum + v;
        comp += if sum.abs() >= v.abs() { (sum - t) + v } else { (v - t) + sum };
        sum = t;
    }
    let value = (sum + comp) * (-xv).exp();
    let bits = Oracle::default().working_bits();
    Ok(OracleValue {
        re: HpReal::from_f64(value, bits),
        im: HpReal::zero(bits),
        digits: KL_DIGITS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(v: f64) -> Order {
        Order::new(v).unwrap()
    }

    fn pt(v: f64) -> EvalPoint {
        EvalPoint::new(v).unwrap()
    }

    #[test]
    fn gamma_poles_are_errors() {
        assert!(matches!(hp_gamma(0.0, 0.0), Err(Error::GammaPole { .. })));
        assert!(matches!(hp_gamma(-3.0, 0.0), Err(Error::GammaPole { .. })));
        assert!(hp_gamma(-3.0, 1e-9).is_ok());
    }

    #[test]
    fn gamma_factorials() {
        assert_eq!(hp_gamma(1.0, 0.0).unwrap().to_f64(), (1.0, 0.0));
        assert_eq!(hp_gamma(5.0, 0.0).unwrap().to_f64(), (24.0, 0.0));
    }

    #[test]
    fn zero_order_is_j0_and_i0() {
        let j = hp_bessel_imag(nu(0.0), pt(1.0), Kind::Oscillatory).unwrap().to_f64();
        assert_eq!(j, (0.765_197_686_557_966_6, 0.0));
        let i = hp_bessel_imag(nu(0.0), pt(1.0), Kind::Modified).unwrap().to_f64();
        assert_eq!(i, (1.266_065_877_752_008_4, 0.0));
    }

    #[test]
    fn kl_rejects_small_arguments() {
        assert!(matches!(kl_macdonald(1.0, pt(0.01)), Err(Error::QuadratureUnreliable { .. })));
        assert!(kl_macdonald(f64::NAN, pt(1.0)).is_err());
    }

    #[test]
    fn kl_at_zero_order_is_k0() {
        let k = kl_macdonald(0.0, pt(1.0)).unwrap().to_f64().0;
        assert!((k - 0.421_024_438_240_708_3).abs() < 1e-15, "{k}");
    }

    #[test]
    fn working_precision_floor() {
        assert!(Oracle::new(10).working_bits() >= 166);
        assert!(Oracle::new(100).working_bits() > Oracle::new(40).working_bits());
    }
}
