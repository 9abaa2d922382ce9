//! Reduction of `x²y'' + a·x·y' + (b + c·x^{2β})y = 0` to a Bessel equation.
//!
//! With `y = x^p·u(γx^β)`, `p = −(a−1)/2` and `γ = √c/|β|`, the function `u`
//! satisfies Bessel's equation in `z = γx^β` with `ν² = (p² − b)/β²`. A
//! negative right-hand side makes the order pure imaginary, and then
//! `x^p·Cf_ν(γx^β)` and `x^p·Sf_ν(γx^β)` span the solutions.

use crate::error::{Error, Result};
use crate::series::{eval_pair, EvalPoint, Kind, Order};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LommelInput {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub beta: f64,
}

impl LommelInput {
    pub fn new(a: f64, b: f64, c: f64, beta: f64) -> Result<Self> {
        for (what, v) in [("a", a), ("b", b), ("c", c), ("beta", beta)] {
            if !v.is_finite() {
                return Err(Error::NonFinite { what, value: v });
            }
        }
        if beta == 0.0 {
            return Err(Error::ZeroBeta);
        }
        if c < 0.0 {
            return Err(Error::NegativeC(c));
        }
        Ok(Self { a, b, c, beta })
    }
}

/// Order of the reduced Bessel equation. Both carry `ν ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrderClass {
    /// Classical order `ν`.
    Real(f64),
    /// Pure imaginary order `iν`.
    Imaginary(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LommelSolution {
    /// `p = −(a−1)/2` in `y = x^p·u(γx^β)`.
    pub prefactor_exponent: f64,
    /// `γ = √c/|β|`.
    pub gamma: f64,
    /// The input `β`; its sign only enters through `x^β`.
    pub beta: f64,
    pub order: OrderClass,
}

impl LommelSolution {
    pub fn argument(&self, x: f64) -> f64 {
        self.gamma * x.powf(self.beta)
    }

    /// `(x^p·Cf_ν(γx^β), x^p·Sf_ν(γx^β))` for an imaginary-order
    /// classification, `None` otherwise.
    pub fn imaginary_basis(&self, x: EvalPoint, tol: f64) -> Result<Option<(f64, f64)>> {
        let OrderClass::Imaginary(nu) = self.order else {
            return Ok(None);
        };
        let z = EvalPoint::new(self.argument(x.get()))?;
        let r = eval_pair(Kind::Oscillatory, Order::new(nu)?, z, tol)?;
        let scale = x.get().powf(self.prefactor_exponent);
        Ok(Some((scale * r.cos_part, scale * r.sin_part)))
    }
}

/// Splits on the sign of `((a−1)/2)² − b`; zero counts as real order 0.
pub fn classify(input: &LommelInput) -> LommelSolution {
    let p = -(input.a - 1.0) / 2.0;
    let disc = p * p - input.b;
    let abs_beta = input.beta.abs();
    let order = if disc >= 0.0 {
        OrderClass::Real(disc.sqrt() / abs_beta)
    } else {
        OrderClass::Imaginary((-disc).sqrt() / abs_beta)
    };
    LommelSolution {
        prefactor_exponent: p + 0.0,
        gamma: input.c.sqrt() / abs_beta,
        beta: input.beta,
        order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input(a: f64, b: f64, c: f64, beta: f64) -> LommelInput {
        LommelInput::new(a, b, c, beta).unwrap()
    }

    #[test]
    fn plain_imaginary_order_equation() {
        let s = classify(&input(1.0, 0.49, 1.0, 1.0));
        assert_eq!(s.prefactor_exponent, 0.0);
        assert_eq!(s.gamma, 1.0);
        assert_eq!(s.order, OrderClass::Imaginary(0.7));
    }

    #[test]
    fn classical_bessel_equation() {
        let s = classify(&input(1.0, -4.0, 1.0, 1.0));
        assert_eq!(s.order, OrderClass::Real(2.0));
    }

    #[test]
    fn shifted_example() {
        let s = classify(&input(2.0, 1.0, 4.0, 1.0));
        assert_eq!(s.prefactor_exponent, -0.5);
        assert_eq!(s.gamma, 2.0);
        match s.order {
            OrderClass::Imaginary(nu) => assert!((nu - 3f64.sqrt() / 2.0).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_discriminant_is_real_zero() {
        let s = classify(&input(3.0, 1.0, 2.0, 0.5));
        assert_eq!(s.order, OrderClass::Real(0.0));
    }

    #[test]
    fn negative_beta_keeps_nonnegative_order() {
        let s = classify(&input(1.0, 1.0, 9.0, -2.0));
        assert_eq!(s.order, OrderClass::Imaginary(0.5));
        assert_eq!(s.gamma, 1.5);
        assert_eq!(s.argument(2.0), 1.5 * 0.25);
    }

    #[test]
    fn doubling_c_scales_gamma_only() {
        let a = classify(&input(0.3, 2.0, 1.5, 1.3));
        let b = classify(&input(0.3, 2.0, 3.0, 1.3));
        assert!((b.gamma / a.gamma - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(a.order, b.order);
        assert_eq!(a.prefactor_exponent, b.prefactor_exponent);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(LommelInput::new(1.0, 1.0, 1.0, 0.0).unwrap_err(), Error::ZeroBeta);
        assert_eq!(LommelInput::new(1.0, 1.0, -1.0, 1.0).unwrap_err(), Error::NegativeC(-1.0));
        assert!(LommelInput::new(f64::NAN, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn real_order_has_no_imaginary_basis() {
        let s = classify(&input(1.0, -1.0, 1.0, 1.0));
        assert_eq!(s.imaginary_basis(EvalPoint::new(1.0).unwrap(), 1e-12).unwrap(), None);
    }
}
