//! Complex Gamma in fixed point.
//!
//! The argument is shifted up with `Γ(z) = Γ(z+K) / ∏_{m<K}(z+m)` until
//! `|z+K|` is large enough for Stirling's series to reach the working
//! precision, then `ln Γ(z+K)` is summed with Bernoulli coefficients.

use num_bigint::BigInt;
use num_traits::One;

use super::hp::{HpComplex, HpReal};

const GUARD: u32 = 32;

/// `B₂, B₄, …, B₂ₘ` as `(numerator, denominator)` via tangent numbers.
fn bernoulli_even(m: usize) -> Vec<(BigInt, BigInt)> {
    if m == 0 {
        return Vec::new();
    }
    let mut t = vec![BigInt::one(); m + 1];
    for k in 2..=m {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=m {
        for j in k..=m {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    (1..=m)
        .map(|k| {
            let four_k = BigInt::one() << (2 * k);
            let num = &t[k] * (2 * k);
            let num = if k % 2 == 0 { -num } else { num };
            let den = &four_k * (&four_k - 1);
            (num, den)
        })
        .collect()
}

/// Number of Stirling terms needed at `|w|` for `bits` of accuracy, estimated
/// from `|B₂ₖ| ≈ 2(2k)!/(2π)^{2k}`.
fn stirling_terms(abs_w: f64, bits: u32) -> usize {
    let target = -f64::from(bits + 8) * std::f64::consts::LN_2;
    let ln_two_pi = (2.0 * std::f64::consts::PI).ln();
    let mut ln_fact = 0.0;
    for k in 1..2000usize {
        let kk = 2 * k;
        ln_fact += ((kk - 1) as f64).ln() + (kk as f64).ln();
        let ln_term = 2f64.ln() + ln_fact - kk as f64 * ln_two_pi
            - ((kk * (kk - 1)) as f64).ln()
            - (kk - 1) as f64 * abs_w.ln();
        if ln_term < target {
            return k;
        }
    }
    2000
}

/// `ln Γ(w)` by Stirling's series; accurate only for large `|w|` with `Re w > 0`.
fn stirling(w: &HpComplex) -> HpComplex {
    let bits = w.bits();
    let (re, im) = w.to_f64();
    let m = stirling_terms(re.hypot(im), bits);
    let half = HpReal::one(bits).shl(-1);
    let ln_w = w.ln();
    let shifted = HpComplex::new(&w.re - &half, w.im.clone());
    let two_pi = HpReal::pi(bits).shl(1);
    let mut acc = &(&shifted * &ln_w) - w;
    acc = &acc + &HpComplex::real(two_pi.ln().shl(-1));

    let inv = &HpComplex::one(bits) / w;
    let inv2 = &inv * &inv;
    let mut pw = inv;
    for (k, (num, den)) in bernoulli_even(m).iter().enumerate() {
        let k = k + 1;
        let den = den * (2 * k) * (2 * k - 1);
        let coef = HpReal::from_ratio(num, &den, bits);
        acc = &acc + &pw.scale(&coef);
        pw = &pw * &inv2;
    }
    acc
}

/// `Γ(z)` at the precision of `z`. The caller rules out poles.
pub(crate) fn gamma(z: &HpComplex) -> HpComplex {
    let bits = z.bits();
    let w = bits + GUARD;
    let z = z.with_bits(w);
    let target = f64::from((w / 2).max(40));
    let re = z.re.to_f64();
    let shift = if re < target { (target - re.floor()) as i64 } else { 0 };

    let mut prod = HpComplex::one(w);
    let mut zm = z.clone();
    for _ in 0..shift {
        prod = &prod * &zm;
        zm = HpComplex::new(&zm.re + &HpReal::one(w), zm.im.clone());
    }
    let ln_gamma = &stirling(&zm) - &prod.ln();
    ln_gamma.exp().with_bits(bits)
}
