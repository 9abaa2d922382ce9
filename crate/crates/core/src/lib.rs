//! Real-valued Bessel functions of pure imaginary order.
//!
//! Solutions of `x²y'' + xy' + (±x² + ν²)y = 0` are written as
//! `y = P(x)·cos(ν ln x) + Q(x)·sin(ν ln x)` where `P` and `Q` are even power
//! series in `x/2`. Their coefficients obey a coupled two-term recurrence, which
//! gives four real basis functions:
//!
//! | kind          | equation sign | cos-type | sin-type |
//! |---------------|---------------|----------|----------|
//! | `Oscillatory` | `+x²`         | `Cf_ν`   | `Sf_ν`   |
//! | `Modified`    | `−x²`         | `Cd_ν`   | `Sd_ν`   |
//!
//! normalized so that `Cf + i·Sf = Γ(1+iν)·2^{iν}·J_{iν}(x)` and
//! `Cd + i·Sd = Γ(1+iν)·2^{iν}·I_{iν}(x)`. Near the origin they behave like
//! `cos(ν ln x)` and `sin(ν ln x)`.
//!
//! Every evaluation carries an a-priori truncation bound derived from a
//! factorially decaying majorant of the coefficients (see [`bounds`]). The
//! [`oracle`] module holds slow extended-precision reference implementations
//! used to validate the double-precision path.
//!
//! ```
//! use imbessel::{eval_pair, EvalPoint, Kind, Order};
//!
//! let r = eval_pair(Kind::Oscillatory, Order::new(0.0)?, EvalPoint::new(1.0)?, 1e-12)?;
//! assert!((r.cos_part - 0.7651976865579666).abs() <= 1e-12);
//! assert_eq!(r.sin_part, 0.0);
//! # Ok::<(), imbessel::Error>(())
//! ```

pub mod bounds;
mod dd;
mod error;
pub mod lommel;
pub mod oracle;
pub mod series;

pub use bounds::{
    deriv_tail_bound, factor_f, m_of_nu, majorant_bound, required_terms, tail_bound, BoundReport,
    MAX_TERMS,
};
pub use error::{Error, Result};
pub use lommel::{classify, LommelInput, LommelSolution, OrderClass};
pub use series::{
    advance, advance_modified, advance_oscillatory, build_table, eval_pair, eval_pair_terms,
    gamma_modulus_imag, wronskian_residual, CoeffPair, CoeffTable, EvalPoint, Kind, Order,
    PairResult,
};
