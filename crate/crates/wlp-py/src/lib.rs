//! Python bindings for the weighted lattice point library.
//!
//! The module mirrors the Rust API at a convenient granularity: `Polytope`
//! and `Family` wrap the standard-form polytope and the parametric fiber
//! family, `Poly` wraps exact polynomials, and free functions cover counting,
//! lifting, Ehrhart quasi-polynomials, integration, maximization, and the
//! worked applications. Counts come back as Python ints, rationals as exact
//! `p/q` strings.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use wlp::calculus::{self, MaxCertificate, MaxOptions};
use wlp::counter::{count, enumerate, EnumConfig};
use wlp::ehrhart::{ehrhart_qp, weighted_ehrhart_qp, EhrhartOptions, QuasiPolynomial};
use wlp::error::Error;
use wlp::gallery;
use wlp::io::{parse_rat, rat_decimal, rat_string, read_polytope, PolytopeInput};
use wlp::lifting::{self, Basis, ParametricFamily, WeightExpr};
use wlp::linalg::IntMat;
use wlp::poly::Polynomial;
use wlp::polytope::{standardize, StandardPolytope};

/// Computation failures (budgets, unbounded regions) surface as
/// `RuntimeError`; malformed inputs surface as `ValueError`.
fn pyerr(e: Error) -> PyErr {
    match e {
        Error::DimensionMismatch(_)
        | Error::NonCountingWeight(_)
        | Error::InvalidInput(_)
        | Error::Parse { .. }
        | Error::Io(_) => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn partition_from(parts: &[u64]) -> Result<gallery::Partition, String> {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(format!("{parts:?} is not weakly decreasing"));
    }
    let trimmed: Vec<u64> = parts.iter().copied().filter(|&p| p > 0).collect();
    Ok(gallery::Partition::new(trimmed))
}

fn py_partition(parts: Vec<u64>) -> PyResult<gallery::Partition> {
    partition_from(&parts).map_err(PyValueError::new_err)
}

fn qp_dict(py: Python<'_>, qp: &QuasiPolynomial) -> PyResult<Py<PyDict>> {
    let d = PyDict::new(py);
    d.set_item("degree", qp.degree())?;
    d.set_item("period", qp.period())?;
    let coeffs: Vec<Vec<String>> = qp
        .coefficients()
        .iter()
        .map(|per_power| per_power.iter().map(rat_string).collect())
        .collect();
    d.set_item("coeffs", coeffs)?;
    Ok(d.unbind())
}

fn cert_dict(py: Python<'_>, cert: &MaxCertificate) -> PyResult<Py<PyDict>> {
    let d = PyDict::new(py);
    d.set_item("maximum", cert.maximum.clone())?;
    d.set_item("k_reached", cert.k_reached)?;
    d.set_item("n_points", cert.n_points.clone())?;
    let mut steps = Vec::with_capacity(cert.steps.len());
    for s in &cert.steps {
        let sd = PyDict::new(py);
        sd.set_item("k", s.k)?;
        sd.set_item("power_sum", s.power_sum.clone())?;
        sd.set_item("lower", s.lower.clone())?;
        sd.set_item("upper", s.upper.clone())?;
        steps.push(sd.unbind());
    }
    d.set_item("steps", steps)?;
    Ok(d.unbind())
}

/// A rational polytope `{x : Ax = b, x >= 0}` in standard form.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Polytope {
    inner: StandardPolytope,
}

#[pymethods]
impl Polytope {
    #[new]
    fn new(a: Vec<Vec<i64>>, b: Vec<BigInt>) -> PyResult<Self> {
        let cols = a.first().map_or(0, Vec::len);
        if a.iter().any(|row| row.len() != cols) {
            return Err(PyValueError::new_err("ragged constraint matrix"));
        }
        if a.len() != b.len() {
            return Err(PyValueError::new_err("matrix rows vs rhs length"));
        }
        Ok(Polytope {
            inner: StandardPolytope::new(IntMat::from_rows(&a), b),
        })
    }

    /// The standard simplex `{x >= 0 : sum x_i = 1}` with `k + 1` coordinates.
    #[staticmethod]
    fn simplex(k: usize) -> Self {
        Polytope {
            inner: StandardPolytope::standard_simplex(k),
        }
    }

    /// The unit cube `[0, 1]^d` in standard form (`d` slack columns).
    #[staticmethod]
    fn cube(d: usize) -> Self {
        Polytope {
            inner: StandardPolytope::unit_cube(d),
        }
    }

    /// Parse LattE-style or JSON text; inequality forms are standardized.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = match read_polytope(text).map_err(pyerr)? {
            PolytopeInput::Standard(p) => p,
            PolytopeInput::H(h) => standardize(&h).map_err(pyerr)?.0,
        };
        Ok(Polytope { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn rows(&self) -> usize {
        self.inner.rows()
    }

    fn dilate(&self, t: BigInt) -> Self {
        Polytope {
            inner: self.inner.dilate(&t),
        }
    }

    /// Exact number of lattice points.
    fn count(&self) -> PyResult<BigInt> {
        Ok(count(&self.inner, &EnumConfig::default())
            .map_err(pyerr)?
            .count)
    }

    /// All lattice points, lexicographic in input variable order.
    fn points(&self) -> PyResult<Vec<Vec<BigInt>>> {
        enumerate(&self.inner).map_err(pyerr)
    }

    fn __repr__(&self) -> String {
        format!("Polytope(n={}, rows={})", self.inner.n(), self.inner.rows())
    }
}

/// A parametric fiber family `Q(x) = {y >= 0 : Cy = Dx + e}`; the weight of a
/// point `x` is the number of lattice points of its fiber.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Family {
    inner: ParametricFamily,
}

#[pymethods]
impl Family {
    #[new]
    fn new(c: Vec<Vec<i64>>, d: Vec<Vec<i64>>, e: Vec<BigInt>) -> PyResult<Self> {
        let inner = ParametricFamily::new(IntMat::from_rows(&c), IntMat::from_rows(&d), e)
            .map_err(pyerr)?;
        Ok(Family { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    /// `w(x) = |Q(x) cap Z^m|`.
    fn weight(&self, x: Vec<BigInt>) -> PyResult<BigInt> {
        lifting::weight_eval(&self.inner, &x, &EnumConfig::default()).map_err(pyerr)
    }

    fn __repr__(&self) -> String {
        format!("Family(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// An exact multivariate polynomial, entered as `(coefficient, exponents)`
/// terms with rational string coefficients such as `"3/2"`.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Poly {
    inner: Polynomial,
}

#[pymethods]
impl Poly {
    #[new]
    fn new(n_vars: usize, terms: Vec<(String, Vec<u32>)>) -> PyResult<Self> {
        let mut f = Polynomial::zero(n_vars);
        for (coeff, exps) in terms {
            if exps.len() != n_vars {
                return Err(PyValueError::new_err("exponent arity vs n_vars"));
            }
            let c = parse_rat(&coeff).map_err(pyerr)?;
            f = &f + &Polynomial::monomial(exps, c);
        }
        Ok(Poly { inner: f })
    }

    #[getter]
    fn n_vars(&self) -> usize {
        self.inner.n_vars()
    }

    fn eval(&self, x: Vec<BigInt>) -> PyResult<String> {
        if x.len() != self.inner.n_vars() {
            return Err(PyValueError::new_err("evaluation arity"));
        }
        Ok(rat_string(&self.inner.eval_int(&x)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Poly(n_vars={}, terms={})",
            self.inner.n_vars(),
            self.inner.num_terms()
        )
    }
}

/// Weight lifting: a polytope whose plain count is the weighted sum over `p`.
/// Returns `(lifted, n_vars, m_vars)`.
#[pyfunction]
fn lift(p: &Polytope, f: &Family) -> PyResult<(Polytope, usize, usize)> {
    let lifted = lifting::lift(&p.inner, &f.inner).map_err(pyerr)?;
    Ok((
        Polytope { inner: lifted.base },
        lifted.n_vars,
        lifted.m_vars,
    ))
}

/// `sum_{x in tP} w(x)` for a counting weight, via one lifted count.
#[pyfunction]
#[pyo3(signature = (p, f, t=None))]
fn weighted_sum(p: &Polytope, f: &Family, t: Option<BigInt>) -> PyResult<BigInt> {
    let w = WeightExpr::from_family(f.inner.clone(), 1);
    let t = t.unwrap_or_else(|| BigInt::from(1));
    let s = lifting::weighted_sum(&p.inner, &w, &t, &EnumConfig::default()).map_err(pyerr)?;
    debug_assert!(s.is_integer());
    Ok(s.to_integer())
}

/// The Ehrhart quasi-polynomial of `p` as `{degree, period, coeffs}`, where
/// `coeffs[m][r]` is the exact coefficient of `t^m` on residue class `r`.
#[pyfunction]
fn ehrhart(py: Python<'_>, p: &Polytope) -> PyResult<Py<PyDict>> {
    let qp = ehrhart_qp(&p.inner, &EhrhartOptions::default()).map_err(pyerr)?;
    qp_dict(py, &qp)
}

/// The weighted Ehrhart quasi-polynomial `t -> sum_{x in tP} f(x)`.
#[pyfunction]
fn weighted_ehrhart(py: Python<'_>, p: &Polytope, f: &Poly) -> PyResult<Py<PyDict>> {
    let w = lifting::compile_polynomial(&f.inner, Basis::FallingBinomial);
    let qp = weighted_ehrhart_qp(&p.inner, &w, &EhrhartOptions::default()).map_err(pyerr)?;
    qp_dict(py, &qp)
}

/// `int_p f` exactly, as a rational string (lattice measure on the hull).
#[pyfunction]
fn integrate(p: &Polytope, f: &Poly) -> PyResult<String> {
    let v = calculus::integrate(&p.inner, &f.inner, &EhrhartOptions::default()).map_err(pyerr)?;
    Ok(rat_string(&v))
}

/// `max_{x in p} w(x)` with the power-sum sandwich certificate.
#[pyfunction]
#[pyo3(signature = (p, f, k_max=64))]
fn maximize(py: Python<'_>, p: &Polytope, f: &Family, k_max: u32) -> PyResult<Py<PyDict>> {
    let opts = MaxOptions {
        k_max,
        ..MaxOptions::default()
    };
    let cert = calculus::maximize(&p.inner, &f.inner, &opts).map_err(pyerr)?;
    cert_dict(py, &cert)
}

/// Count and average size of simultaneous `(a, b)`-cores.
#[pyfunction]
fn core_statistics(py: Python<'_>, a: u64, b: u64) -> PyResult<Py<PyDict>> {
    let stats = gallery::core_statistics(a, b, &EnumConfig::default()).map_err(pyerr)?;
    let d = PyDict::new(py);
    d.set_item("count", stats.count)?;
    d.set_item("total_size", stats.total_size)?;
    d.set_item("average", rat_string(&stats.average))?;
    d.set_item("average_dec", rat_decimal(&stats.average, 10))?;
    Ok(d.unbind())
}

/// The Kostka number for shape `lam` and content `alpha`.
#[pyfunction]
fn kostka(lam: Vec<u64>, alpha: Vec<u64>) -> PyResult<BigInt> {
    let lam = py_partition(lam)?;
    gallery::kostka(&lam, &alpha, &EnumConfig::default()).map_err(pyerr)
}

/// Both sides of the RSK margin identity plus the single lifted count.
#[pyfunction]
fn rsk_check(py: Python<'_>, mu: Vec<u64>, nu: Vec<u64>) -> PyResult<Py<PyDict>> {
    let mu = py_partition(mu)?;
    let nu = py_partition(nu)?;
    let rep = gallery::rsk_check(&mu, &nu, &EnumConfig::default()).map_err(pyerr)?;
    let d = PyDict::new(py);
    d.set_item("lhs", rep.lhs.clone())?;
    d.set_item("rhs", rep.rhs.clone())?;
    d.set_item("lifted", rep.lifted.clone())?;
    d.set_item("ok", rep.lhs == rep.rhs && rep.rhs == rep.lifted)?;
    Ok(d.unbind())
}

/// The Littlewood-Richardson coefficient `c^lam_{mu, nu}` by hive counting.
#[pyfunction]
fn lr_coefficient(lam: Vec<u64>, mu: Vec<u64>, nu: Vec<u64>) -> PyResult<BigInt> {
    let lam = py_partition(lam)?;
    let mu = py_partition(mu)?;
    let nu = py_partition(nu)?;
    gallery::lr_coefficient(&lam, &mu, &nu, &EnumConfig::default()).map_err(pyerr)
}

/// The Newell-Littlewood number `n_{mu, nu, lam}`.
#[pyfunction]
fn newell_littlewood(mu: Vec<u64>, nu: Vec<u64>, lam: Vec<u64>) -> PyResult<BigInt> {
    let mu = py_partition(mu)?;
    let nu = py_partition(nu)?;
    let lam = py_partition(lam)?;
    gallery::newell_littlewood(&mu, &nu, &lam, &EnumConfig::default()).map_err(pyerr)
}

/// Per-genus counts and weight totals of numerical semigroups containing `m`,
/// for `g = 1 ..= g_max`.
#[pyfunction]
fn semigroup_series(py: Python<'_>, m: u64, g_max: u64) -> PyResult<Vec<Py<PyDict>>> {
    let rows = gallery::semigroup_series(
        m,
        g_max,
        gallery::SemigroupRoute::Direct,
        &EnumConfig::default(),
    )
    .map_err(pyerr)?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let d = PyDict::new(py);
        d.set_item("m", row.m)?;
        d.set_item("g", row.g)?;
        d.set_item("count", row.count)?;
        d.set_item("total_weight", row.total_weight)?;
        d.set_item("average", row.average.as_ref().map(rat_string))?;
        d.set_item(
            "average_over_g2",
            row.average_over_g2.as_ref().map(rat_string),
        )?;
        out.push(d.unbind());
    }
    Ok(out)
}

#[pymodule]
fn wlp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polytope>()?;
    m.add_class::<Family>()?;
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(lift, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_sum, m)?)?;
    m.add_function(wrap_pyfunction!(ehrhart, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_ehrhart, m)?)?;
    m.add_function(wrap_pyfunction!(integrate, m)?)?;
    m.add_function(wrap_pyfunction!(maximize, m)?)?;
    m.add_function(wrap_pyfunction!(core_statistics, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(rsk_check, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(newell_littlewood, m)?)?;
    m.add_function(wrap_pyfunction!(semigroup_series, m)?)?;
    Ok(())
}
