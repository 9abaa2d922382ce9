//! Python bindings for `imbessel`.
//!
//! Kinds are accepted as [`Kind`] members or the strings `"osc"` / `"mod"`.
//! Domain errors raise `ValueError`; a tolerance the series cannot meet
//! raises `ToleranceError` (an `ArithmeticError`).

use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyComplex;

use imbessel::oracle::Oracle;
use imbessel::{EvalPoint, Order, OrderClass};

create_exception!(imbessel_py, ToleranceError, PyArithmeticError);

fn to_py(e: imbessel::Error) -> PyErr {
    if is_tolerance_error(&e) {
        ToleranceError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn is_tolerance_error(e: &imbessel::Error) -> bool {
    matches!(e, imbessel::Error::ToleranceUnachievable { .. } | imbessel::Error::TermLimit { .. })
}

fn order(nu: f64) -> PyResult<Order> {
    Order::new(nu).map_err(to_py)
}

fn point(x: f64) -> PyResult<EvalPoint> {
    EvalPoint::new(x).map_err(to_py)
}

#[pyclass(eq, eq_int, frozen, from_py_object, module = "imbessel_py")]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// `x²y'' + xy' + (x² + ν²)y = 0`; basis Cf, Sf.
    Oscillatory,
    /// `x²y'' + xy' + (ν² − x²)y = 0`; basis Cd, Sd.
    Modified,
}

impl From<Kind> for imbessel::Kind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Oscillatory => Self::Oscillatory,
            Kind::Modified => Self::Modified,
        }
    }
}

#[derive(FromPyObject)]
enum KindLike {
    Kind(Kind),
    Name(String),
}

impl KindLike {
    fn resolve(self) -> PyResult<imbessel::Kind> {
        match self {
            Self::Kind(k) => Ok(k.into()),
            Self::Name(s) => s.parse().map_err(PyValueError::new_err),
        }
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "imbessel_py")]
#[derive(Debug, Clone)]
pub struct PairResult {
    cos_part: f64,
    sin_part: f64,
    d_cos: f64,
    d_sin: f64,
    terms_used: usize,
    tail_bound: f64,
    deriv_bound: f64,
}

#[pymethods]
impl PairResult {
    fn __repr__(&self) -> String {
        format!(
            "PairResult(cos_part={:?}, sin_part={:?}, d_cos={:?}, d_sin={:?}, terms_used={}, tail_bound={:e}, deriv_bound={:e})",
            self.cos_part, self.sin_part, self.d_cos, self.d_sin, self.terms_used, self.tail_bound, self.deriv_bound
        )
    }
}

impl From<imbessel::PairResult> for PairResult {
    fn from(r: imbessel::PairResult) -> Self {
        Self {
            cos_part: r.cos_part,
            sin_part: r.sin_part,
            d_cos: r.d_cos,
            d_sin: r.d_sin,
            terms_used: r.terms_used,
            tail_bound: r.tail_bound,
            deriv_bound: r.deriv_bound,
        }
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "imbessel_py")]
#[derive(Debug, Clone)]
pub struct BoundReport {
    f: f64,
    m_nu: f64,
    n: usize,
    tail: f64,
}

#[pyclass(frozen, skip_from_py_object, module = "imbessel_py")]
#[derive(Debug, Clone)]
pub struct LommelSolution(imbessel::LommelSolution);

#[pymethods]
impl LommelSolution {
    #[getter]
    fn prefactor_exponent(&self) -> f64 {
        self.0.prefactor_exponent
    }

    #[getter]
    fn gamma(&self) -> f64 {
        self.0.gamma
    }

    #[getter]
    fn beta(&self) -> f64 {
        self.0.beta
    }

    /// `"real"` or `"imaginary"`.
    #[getter]
    fn order_class(&self) -> &'static str {
        match self.0.order {
            OrderClass::Real(_) => "real",
            OrderClass::Imaginary(_) => "imaginary",
        }
    }

    #[getter]
    fn order(&self) -> f64 {
        match self.0.order {
            OrderClass::Real(v) | OrderClass::Imaginary(v) => v,
        }
    }

    fn argument(&self, x: f64) -> f64 {
        self.0.argument(x)
    }

    /// `(x^p·Cf(γx^β), x^p·Sf(γx^β))`, or `None` for a real order.
    #[pyo3(signature = (x, tol = 1e-12))]
    fn imaginary_basis(&self, x: f64, tol: f64) -> PyResult<Option<(f64, f64)>> {
        self.0.imaginary_basis(point(x)?, tol).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "LommelSolution(order_class={:?}, order={:?}, prefactor_exponent={:?}, gamma={:?}, beta={:?})",
            self.order_class(),
            self.order(),
            self.0.prefactor_exponent,
            self.0.gamma,
            self.0.beta
        )
    }
}

/// Basis pair and derivatives with terms chosen so the bound meets `tol`.
#[pyfunction]
#[pyo3(signature = (kind, nu, x, tol = 1e-12))]
fn eval_pair(kind: KindLike, nu: f64, x: f64, tol: f64) -> PyResult<PairResult> {
    imbessel::eval_pair(kind.resolve()?, order(nu)?, point(x)?, tol).map(Into::into).map_err(to_py)
}

/// Basis pair keeping coefficients `0..=n`.
#[pyfunction]
fn eval_pair_terms(kind: KindLike, nu: f64, x: f64, n: usize) -> PyResult<PairResult> {
    imbessel::eval_pair_terms(kind.resolve()?, order(nu)?, point(x)?, n).map(Into::into).map_err(to_py)
}

/// `C·S' − S·C' − ν/x`.
#[pyfunction]
#[pyo3(signature = (kind, nu, x, tol = 1e-13))]
fn wronskian_residual(kind: KindLike, nu: f64, x: f64, tol: f64) -> PyResult<f64> {
    imbessel::wronskian_residual(kind.resolve()?, order(nu)?, point(x)?, tol).map_err(to_py)
}

/// Coefficients `(n, a, b)` for `n = 0..=n_max` from `seed = (a₀, b₀)`.
#[pyfunction]
fn build_table(kind: KindLike, seed: (f64, f64), nu: f64, n_max: usize) -> PyResult<Vec<(u32, f64, f64)>> {
    let t = imbessel::build_table(kind.resolve()?, seed, order(nu)?, n_max).map_err(to_py)?;
    Ok(t.entries().iter().map(|c| (c.n, c.a, c.b)).collect())
}

/// `|Γ(iν)|`.
#[pyfunction]
fn gamma_modulus_imag(nu: f64) -> PyResult<f64> {
    imbessel::gamma_modulus_imag(order(nu)?).map_err(to_py)
}

/// Truncation bound after keeping coefficients `0..=n`.
#[pyfunction]
fn tail_bound(nu: f64, x: f64, n: usize) -> PyResult<f64> {
    Ok(imbessel::tail_bound(order(nu)?, point(x)?, n))
}

#[pyfunction]
fn required_terms(nu: f64, x: f64, tol: f64) -> PyResult<usize> {
    imbessel::required_terms(order(nu)?, point(x)?, tol).map_err(to_py)
}

/// `m(ν)·n^|ν|/(n!)²`.
#[pyfunction]
fn majorant_bound(nu: f64, n: usize) -> PyResult<f64> {
    Ok(imbessel::majorant_bound(order(nu)?, n))
}

#[pyfunction]
fn bound_report(nu: f64, x: f64, n: usize) -> PyResult<BoundReport> {
    let r = imbessel::BoundReport::new(order(nu)?, point(x)?, n);
    Ok(BoundReport { f: r.f, m_nu: r.m_nu, n: r.n, tail: r.tail })
}

/// Reduce `x²y'' + a·x·y' + (b + c·x^{2β})y = 0` to a Bessel equation.
#[pyfunction]
fn classify(a: f64, b: f64, c: f64, beta: f64) -> PyResult<LommelSolution> {
    let input = imbessel::LommelInput::new(a, b, c, beta).map_err(to_py)?;
    Ok(LommelSolution(imbessel::classify(&input)))
}

fn oracle_of(digits: u32) -> PyResult<Oracle> {
    if !(1..=1000).contains(&digits) {
        return Err(PyValueError::new_err(format!("digits must be in 1..=1000 (got {digits})")));
    }
    Ok(Oracle::new(digits))
}

/// Extended-precision `(cos_part, sin_part)` rounded to float.
#[pyfunction]
#[pyo3(signature = (kind, nu, x, digits = imbessel::oracle::DEFAULT_DIGITS))]
fn oracle_pair(py: Python<'_>, kind: KindLike, nu: f64, x: f64, digits: u32) -> PyResult<(f64, f64)> {
    let (kind, nu, x, oracle) = (kind.resolve()?, order(nu)?, point(x)?, oracle_of(digits)?);
    py.detach(|| oracle.pair(kind, nu, x)).map_err(to_py)
}

/// Extended-precision `Γ(re + i·im)` rounded to a Python complex.
#[pyfunction]
#[pyo3(signature = (re, im, digits = imbessel::oracle::DEFAULT_DIGITS))]
fn hp_gamma(py: Python<'_>, re: f64, im: f64, digits: u32) -> PyResult<Bound<'_, PyComplex>> {
    let oracle = oracle_of(digits)?;
    let (re, im) = py.detach(|| oracle.gamma(re, im)).map_err(to_py)?.to_f64();
    Ok(PyComplex::from_doubles(py, re, im))
}

/// `K_{iτ}(x)` from its integral representation; good to about 12 digits.
#[pyfunction]
fn kl_macdonald(py: Python<'_>, tau: f64, x: f64) -> PyResult<f64> {
    let x = point(x)?;
    Ok(py.detach(|| imbessel::oracle::kl_macdonald(tau, x)).map_err(to_py)?.re.to_f64())
}

#[pymodule]
fn imbessel_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Kind>()?;
    m.add_class::<PairResult>()?;
    m.add_class::<BoundReport>()?;
    m.add_class::<LommelSolution>()?;
    m.add("ToleranceError", m.py().get_type::<ToleranceError>())?;
    m.add_function(wrap_pyfunction!(eval_pair, m)?)?;
    m.add_function(wrap_pyfunction!(eval_pair_terms, m)?)?;
    m.add_function(wrap_pyfunction!(wronskian_residual, m)?)?;
    m.add_function(wrap_pyfunction!(build_table, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_modulus_imag, m)?)?;
    m.add_function(wrap_pyfunction!(tail_bound, m)?)?;
    m.add_function(wrap_pyfunction!(required_terms, m)?)?;
    m.add_function(wrap_pyfunction!(majorant_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_pair, m)?)?;
    m.add_function(wrap_pyfunction!(hp_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(kl_macdonald, m)?)?;
    Ok(())
}
