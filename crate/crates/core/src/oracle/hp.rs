//! Binary fixed-point reals and complexes backed by `BigInt`.
//!
//! An [`HpReal`] with `bits` fractional bits stores `raw` and represents
//! `raw / 2^bits`. The integer part is unbounded, so large magnitudes keep
//! full relative precision; tiny magnitudes lose it, which is acceptable for
//! the moderate values the oracle works with. Transcendental functions run
//! with extra guard bits and round back.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

const GUARD: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HpReal {
    raw: BigInt,
    bits: u32,
}

/// `v / 2^k` rounded half up.
fn round_shr(v: BigInt, k: u32) -> BigInt {
    if k == 0 {
        return v;
    }
    (v + (BigInt::one() << (k - 1))) >> k
}

/// `q · 2^k` without intermediate overflow.
fn ldexp(mut q: f64, mut k: i64) -> f64 {
    while k > 1000 {
        q *= 2f64.powi(1000);
        k -= 1000;
    }
    while k < -1000 {
        q *= 2f64.powi(-1000);
        k += 1000;
    }
    q * 2f64.powi(k as i32)
}

impl HpReal {
    pub fn zero(bits: u32) -> Self {
        Self { raw: BigInt::zero(), bits }
    }

    pub fn one(bits: u32) -> Self {
        Self { raw: BigInt::one() << bits, bits }
    }

    pub fn from_int(v: i64, bits: u32) -> Self {
        Self { raw: BigInt::from(v) << bits, bits }
    }

    /// Exact whenever `v·2^bits` is an integer.
    pub fn from_f64(v: f64, bits: u32) -> Self {
        assert!(v.is_finite(), "cannot convert {v} to fixed point");
        if v == 0.0 {
            return Self::zero(bits);
        }
        let word = v.to_bits();
        let exp = ((word >> 52) & 0x7ff) as i64;
        let frac = word & ((1u64 << 52) - 1);
        let (mant, e) = if exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp - 1075) };
        let sh = e + i64::from(bits);
        let raw = BigInt::from(mant);
        let raw = if sh >= 0 { raw << sh as u64 } else { round_shr(raw, (-sh) as u32) };
        let raw = if v < 0.0 { -raw } else { raw };
        Self { raw, bits }
    }

    /// `num / den`, truncated.
    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        Self { raw: (num << bits) / den, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        let raw = match bits.cmp(&self.bits) {
            Ordering::Equal => self.raw.clone(),
            Ordering::Greater => &self.raw << (bits - self.bits),
            Ordering::Less => round_shr(self.raw.clone(), self.bits - bits),
        };
        Self { raw, bits }
    }

    /// Correctly rounded (ties to even) conversion, barring subnormal results.
    pub fn to_f64(&self) -> f64 {
        if self.raw.is_zero() {
            return 0.0;
        }
        let mag = self.raw.magnitude();
        let len = mag.bits();
        let (q, shift) = if len <= 53 {
            (mag.to_u64().unwrap_or(0), 0i64)
        } else {
            let sh = len - 53;
            let mut q = mag >> sh;
            let rem = mag - (&q << sh);
            let half = num_bigint::BigUint::one() << (sh - 1);
            match rem.cmp(&half) {
                Ordering::Greater => q += 1u32,
                Ordering::Equal if q.bit(0) => q += 1u32,
                _ => {}
            }
            (q.to_u64().unwrap_or(u64::MAX), sh as i64)
        };
        let f = ldexp(q as f64, shift - i64::from(self.bits));
        if self.raw.sign() == Sign::Minus {
            -f
        } else {
            f
        }
    }

    pub fn is_zero(&self) -> bool {
        self.raw.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.raw.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self { raw: self.raw.abs(), bits: self.bits }
    }

    /// True when `|self| < 2^(8 − bits)`, i.e. within a few units of the last place.
    pub fn is_negligible(&self) -> bool {
        self.raw.bits() <= 8
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self { raw: &self.raw * k, bits: self.bits }
    }

    pub fn div_int(&self, k: i64) -> Self {
        Self { raw: &self.raw / k, bits: self.bits }
    }

    /// Multiplies by `2^k`.
    pub fn shl(&self, k: i64) -> Self {
        let raw = if k >= 0 { &self.raw << k as u64 } else { &self.raw >> (-k) as u64 };
        Self { raw, bits: self.bits }
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.raw.is_negative(), "square root of a negative fixed-point value");
        Self { raw: (&self.raw << self.bits).sqrt(), bits: self.bits }
    }

    fn round_to_i64(&self) -> i64 {
        self.to_f64().round() as i64
    }

    /// `ln 2` from `2·atanh(1/3)`.
    pub fn ln2(bits: u32) -> Self {
        let w = bits + GUARD;
        let one = BigInt::one() << w;
        let mut p: BigInt = &one / 3;
        let mut sum = p.clone();
        let mut k = 1i64;
        while !p.is_zero() {
            p /= 9;
            sum += &p / (2 * k + 1);
            k += 1;
        }
        Self { raw: sum << 1, bits: w }.with_bits(bits)
    }

    /// `π` from Machin's formula.
    pub fn pi(bits: u32) -> Self {
        let w = bits + GUARD;
        let atan_inv = |k: i64| {
            let k2 = k * k;
            let mut p = (BigInt::one() << w) / k;
            let mut sum = p.clone();
            let mut j = 1i64;
            while !p.is_zero() {
                p /= k2;
                let t = &p / (2 * j + 1);
                if j % 2 == 1 {
                    sum -= t;
                } else {
                    sum += t;
                }
                j += 1;
            }
            sum
        };
        let raw = (atan_inv(5) * 16) - (atan_inv(239) * 4);
        Self { raw, bits: w }.with_bits(bits)
    }

    pub fn exp(&self) -> Self {
        let w = self.bits + GUARD;
        let x = self.with_bits(w);
        let ln2 = Self::ln2(w);
        let k = (&x / &ln2).round_to_i64();
        let reduced = &x - &ln2.mul_int(k);
        // |reduced| ≤ ln2/2; shrink further so the Taylor series converges fast
        const HALVINGS: i64 = 16;
        let r = reduced.shl(-HALVINGS);
        let mut term = Self::one(w);
        let mut sum = Self::one(w);
        let mut i = 1i64;
        loop {
            term = (&term * &r).div_int(i);
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            i += 1;
        }
        for _ in 0..HALVINGS {
            sum = &sum * &sum;
        }
        sum.shl(k).with_bits(self.bits)
    }

    pub fn ln(&self) -> Self {
        assert!(self.raw.is_positive(), "logarithm of a non-positive fixed-point value");
        let w = self.bits + GUARD;
        let x = self.with_bits(w);
        let len = x.raw.bits() as i64;
        // x = 2^(len − w) · f with f = raw / 2^len ∈ [1/2, 1)
        let mut e = len - i64::from(w);
        let mut f = Self { raw: x.raw.clone(), bits: len as u32 }.with_bits(w);
        // move f into [1/√2, √2) so |t| ≤ 0.172 below
        if (&f.raw * &f.raw) << 1u32 < (BigInt::one() << (2 * w)) {
            f = f.shl(1);
            e -= 1;
        }
        let one = Self::one(w);
        let t = &(&f - &one) / &(&f + &one);
        let t2 = &t * &t;
        let mut p = t.clone();
        let mut sum = t;
        let mut k = 1i64;
        loop {
            p = &p * &t2;
            if p.is_zero() {
                break;
            }
            sum = &sum + &p.div_int(2 * k + 1);
            k += 1;
        }
        (&Self::ln2(w).mul_int(e) + &sum.shl(1)).with_bits(self.bits)
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(&self) -> (Self, Self) {
        let w = self.bits + GUARD;
        let x = self.with_bits(w);
        let half_pi = Self::pi(w).shl(-1);
        let k = (&x / &half_pi).round_to_i64();
        let r = &x - &half_pi.mul_int(k);
        let r2 = &r * &r;
        let mut s = r.clone();
        let mut term = r;
        let mut i = 1i64;
        loop {
            term = -(&term * &r2).div_int((2 * i) * (2 * i + 1));
            if term.is_zero() {
                break;
            }
            s = &s + &term;
            i += 1;
        }
        let mut c = Self::one(w);
        let mut term = Self::one(w);
        let mut i = 1i64;
        loop {
            term = -(&term * &r2).div_int((2 * i - 1) * (2 * i));
            if term.is_zero() {
                break;
            }
            c = &c + &term;
            i += 1;
        }
        let (s, c) = match k.rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        };
        (s.with_bits(self.bits), c.with_bits(self.bits))
    }

    /// Arctangent of a value with `|t| ≤ 1`.
    fn atan_unit(t: &Self) -> Self {
        const HALVINGS: i64 = 8;
        let one = Self::one(t.bits);
        let mut t = t.clone();
        for _ in 0..HALVINGS {
            let root = (&one + &(&t * &t)).sqrt();
            t = &t / &(&one + &root);
        }
        let t2 = &t * &t;
        let mut p = t.clone();
        let mut sum = t;
        let mut k = 1i64;
        loop {
            p = -(&p * &t2);
            if p.is_zero() {
                break;
            }
            sum = &sum + &p.div_int(2 * k + 1);
            k += 1;
        }
        sum.shl(HALVINGS)
    }

    /// Four-quadrant arctangent of `y/x`.
    pub fn atan2(y: &Self, x: &Self) -> Self {
        let bits = y.bits;
        if y.is_zero() && x.is_zero() {
            return Self::zero(bits);
        }
        let w = bits + GUARD;
        let (y, x) = (y.with_bits(w), x.with_bits(w));
        let pi = Self::pi(w);
        let r = if y.raw.abs() <= x.raw.abs() {
            let a = Self::atan_unit(&(&y / &x));
            if !x.is_negative() {
                a
            } else if !y.is_negative() {
                &a + &pi
            } else {
                &a - &pi
            }
        } else {
            let a = Self::atan_unit(&(&x / &y));
            let half_pi = pi.shl(-1);
            if y.is_negative() {
                -(&half_pi + &a)
            } else {
                &half_pi - &a
            }
        };
        r.with_bits(bits)
    }
}

impl PartialOrd for HpReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        debug_assert_eq!(self.bits, other.bits);
        Some(self.raw.cmp(&other.raw))
    }
}

impl<'a> Add<&'a HpReal> for &'a HpReal {
    type Output = HpReal;
    fn add(self, rhs: &'a HpReal) -> HpReal {
        debug_assert_eq!(self.bits, rhs.bits);
        HpReal { raw: &self.raw + &rhs.raw, bits: self.bits }
    }
}

impl<'a> Sub<&'a HpReal> for &'a HpReal {
    type Output = HpReal;
    fn sub(self, rhs: &'a HpReal) -> HpReal {
        debug_assert_eq!(self.bits, rhs.bits);
        HpReal { raw: &self.raw - &rhs.raw, bits: self.bits }
    }
}

impl<'a> Mul<&'a HpReal> for &'a HpReal {
    type Output = HpReal;
    fn mul(self, rhs: &'a HpReal) -> HpReal {
        debug_assert_eq!(self.bits, rhs.bits);
        HpReal { raw: round_shr(&self.raw * &rhs.raw, self.bits), bits: self.bits }
    }
}

impl<'a> Div<&'a HpReal> for &'a HpReal {
    type Output = HpReal;
    fn div(self, rhs: &'a HpReal) -> HpReal {
        debug_assert_eq!(self.bits, rhs.bits);
        HpReal { raw: (&self.raw << self.bits) / &rhs.raw, bits: self.bits }
    }
}

impl Neg for HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal { raw: -self.raw, bits: self.bits }
    }
}

/// Complex number with [`HpReal`] parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HpComplex {
    pub re: HpReal,
    pub im: HpReal,
}

impl HpComplex {
    pub fn new(re: HpReal, im: HpReal) -> Self {
        debug_assert_eq!(re.bits, im.bits);
        Self { re, im }
    }

    pub fn from_f64(re: f64, im: f64, bits: u32) -> Self {
        Self::new(HpReal::from_f64(re, bits), HpReal::from_f64(im, bits))
    }

    pub fn real(re: HpReal) -> Self {
        let bits = re.bits;
        Self::new(re, HpReal::zero(bits))
    }

    pub fn one(bits: u32) -> Self {
        Self::real(HpReal::one(bits))
    }

    pub fn bits(&self) -> u32 {
        self.re.bits
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        Self::new(self.re.with_bits(bits), self.im.with_bits(bits))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, k: &HpReal) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn norm_sqr(&self) -> HpReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> HpReal {
        self.norm_sqr().sqrt()
    }

    pub fn is_negligible(&self) -> bool {
        self.re.is_negligible() && self.im.is_negligible()
    }

    /// `cos θ + i sin θ`.
    pub fn cis(theta: &HpReal) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s)
    }

    pub fn exp(&self) -> Self {
        Self::cis(&self.im).scale(&self.re.exp())
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let bits = self.bits();
        let w = bits + 8;
        let z = self.with_bits(w);
        let modulus = z.norm_sqr().ln().shl(-1);
        let arg = HpReal::atan2(&z.im, &z.re);
        Self::new(modulus, arg).with_bits(bits)
    }
}

impl<'a> Add<&'a HpComplex> for &'a HpComplex {
    type Output = HpComplex;
    fn add(self, rhs: &'a HpComplex) -> HpComplex {
        HpComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a HpComplex> for &'a HpComplex {
    type Output = HpComplex;
    fn sub(self, rhs: &'a HpComplex) -> HpComplex {
        HpComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a HpComplex> for &'a HpComplex {
    type Output = HpComplex;
    fn mul(self, rhs: &'a HpComplex) -> HpComplex {
        HpComplex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl<'a> Div<&'a HpComplex> for &'a HpComplex {
    type Output = HpComplex;
    fn div(self, rhs: &'a HpComplex) -> HpComplex {
        let den = rhs.norm_sqr();
        let re = &(&self.re * &rhs.re) + &(&self.im * &rhs.im);
        let im = &(&self.im * &rhs.re) - &(&self.re * &rhs.im);
        HpComplex::new(&re / &den, &im / &den)
    }
}

impl Neg for HpComplex {
    type Output = HpComplex;
    fn neg(self) -> HpComplex {
        HpComplex::new(-self.re, -self.im)
    }
}
