//! Python bindings: the finite field with its l-th power structure,
//! polynomial factorization, and the genus-field engine with its oracles.
//! Field elements and polynomials cross the boundary as strings in the same
//! text formats the CLI uses; reports and check results cross as JSON.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use genusfield::cli::{JobConfig, OutputFormat};
use genusfield::genus::SpecEcho;
use genusfield::gf::{make_field, FieldDesc};
use genusfield::polyring::{self, parse_poly, render_poly, DEFAULT_SEED};
use genusfield::report::{parse_spec_json, render_text, report_to_json};
use genusfield::sweep::{run_sweep, SweepBounds};

fn to_py_err(e: genusfield::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// The coefficient field F_q = F_p[u]/(modulus). Elements are strings:
/// plain integers over prime fields, polynomials in `u` otherwise.
#[pyclass]
struct Field {
    inner: FieldDesc,
}

impl Field {
    fn pair(
        &self,
        a: &str,
        b: &str,
    ) -> PyResult<(genusfield::FqElem, genusfield::FqElem)> {
        Ok((
            self.inner.parse(a).map_err(to_py_err)?,
            self.inner.parse(b).map_err(to_py_err)?,
        ))
    }
}

#[pymethods]
impl Field {
    /// Field(p, n, modulus=None): canonical modulus when omitted.
    #[new]
    #[pyo3(signature = (p, n, modulus=None))]
    fn new(p: u64, n: usize, modulus: Option<Vec<u64>>) -> PyResult<Self> {
        Ok(Field {
            inner: make_field(p, n, modulus).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.q()
    }

    #[getter]
    fn modulus(&self) -> Vec<u64> {
        self.inner.modulus().to_vec()
    }

    /// Canonical generator of the multiplicative group.
    #[getter]
    fn generator(&self) -> String {
        self.inner.render(self.inner.generator())
    }

    fn add(&self, a: &str, b: &str) -> PyResult<String> {
        let (a, b) = self.pair(a, b)?;
        Ok(self.inner.render(&self.inner.add(&a, &b)))
    }

    fn sub(&self, a: &str, b: &str) -> PyResult<String> {
        let (a, b) = self.pair(a, b)?;
        Ok(self.inner.render(&self.inner.sub(&a, &b)))
    }

    fn mul(&self, a: &str, b: &str) -> PyResult<String> {
        let (a, b) = self.pair(a, b)?;
        Ok(self.inner.render(&self.inner.mul(&a, &b)))
    }

    fn div(&self, a: &str, b: &str) -> PyResult<String> {
        let (a, b) = self.pair(a, b)?;
        Ok(self
            .inner
            .render(&self.inner.div(&a, &b).map_err(to_py_err)?))
    }

    fn inv(&self, a: &str) -> PyResult<String> {
        let a = self.inner.parse(a).map_err(to_py_err)?;
        Ok(self
            .inner
            .render(&self.inner.inv(&a).map_err(to_py_err)?))
    }

    fn pow(&self, a: &str, e: u64) -> PyResult<String> {
        let a = self.inner.parse(a).map_err(to_py_err)?;
        Ok(self.inner.render(&self.inner.pow(&a, e)))
    }

    /// Is x an l-th power in F_q*?
    fn is_lth_power(&self, x: &str, l: u64) -> PyResult<bool> {
        let x = self.inner.parse(x).map_err(to_py_err)?;
        if x.is_zero() {
            return Err(PyValueError::new_err("x must be a unit"));
        }
        Ok(self.inner.is_lth_power(&x, l))
    }

    /// Exponent of x in F_q*/(F_q*)^l relative to the canonical generator.
    fn power_class(&self, x: &str, l: u64) -> PyResult<u64> {
        let x = self.inner.parse(x).map_err(to_py_err)?;
        if x.is_zero() {
            return Err(PyValueError::new_err("x must be a unit"));
        }
        Ok(self.inner.power_class(&x, l))
    }

    /// Complete factorization of a polynomial in T over this field:
    /// (unit, [(monic irreducible, multiplicity), ...]).
    #[pyo3(signature = (poly, seed=DEFAULT_SEED))]
    fn factor(&self, poly: &str, seed: u64) -> PyResult<(String, Vec<(String, u64)>)> {
        let f = parse_poly(&self.inner, poly).map_err(to_py_err)?;
        let fact = polyring::factor(&self.inner, &f, seed).map_err(to_py_err)?;
        Ok((
            self.inner.render(&fact.unit),
            fact.factors
                .iter()
                .map(|(p, e)| (render_poly(&self.inner, p), *e))
                .collect(),
        ))
    }

    fn is_irreducible(&self, poly: &str) -> PyResult<bool> {
        let f = parse_poly(&self.inner, poly).map_err(to_py_err)?;
        Ok(polyring::is_irreducible(&self.inner, &f))
    }

    fn __repr__(&self) -> String {
        format!("Field(q={})", self.inner.q())
    }
}

/// Compute the genus field report for a JSON spec; returns the report as a
/// JSON string.
#[pyfunction]
fn compute(spec_json: &str) -> PyResult<String> {
    let spec = parse_spec_json(spec_json).map_err(to_py_err)?;
    let report = match &spec {
        SpecEcho::Kummer(s) => genusfield::genus::genus_field(s),
        SpecEcho::NonKummer(s) => genusfield::genus::genus_field_nonkummer(s),
    }
    .map_err(to_py_err)?;
    Ok(report_to_json(&report))
}

/// The human-readable rendering of the report.
#[pyfunction]
fn compute_text(spec_json: &str) -> PyResult<String> {
    let spec = parse_spec_json(spec_json).map_err(to_py_err)?;
    let report = match &spec {
        SpecEcho::Kummer(s) => genusfield::genus::genus_field(s),
        SpecEcho::NonKummer(s) => genusfield::genus::genus_field_nonkummer(s),
    }
    .map_err(to_py_err)?;
    Ok(render_text(&report))
}

/// Run the independent oracles against a JSON spec; returns one JSON object
/// per check, in the CLI's verify format.
#[pyfunction]
fn verify(spec_json: &str) -> PyResult<Vec<String>> {
    let mut cfg = JobConfig::compute(spec_json);
    cfg.command = genusfield::cli::Command::Verify { expect: None };
    cfg.format = OutputFormat::Json;
    let mut buf = Vec::new();
    let code = genusfield::cli::run(&cfg, &mut buf);
    if code == genusfield::cli::EXIT_INVALID || code == genusfield::cli::EXIT_INTERNAL {
        return Err(PyValueError::new_err(format!(
            "verification could not run (exit {code})"
        )));
    }
    Ok(String::from_utf8_lossy(&buf)
        .trim()
        .lines()
        .map(|s| s.to_string())
        .collect())
}

/// Enumerate and verify every valid spec within bounds; returns the JSON
/// line stream including the trailing summary.
#[pyfunction]
#[pyo3(signature = (q, l, max_deg, max_m=1, max_factor_deg=None))]
fn sweep(
    q: Vec<u64>,
    l: Vec<u64>,
    max_deg: usize,
    max_m: usize,
    max_factor_deg: Option<usize>,
) -> PyResult<String> {
    let bounds = SweepBounds {
        q,
        l,
        max_deg,
        max_factor_deg,
        max_m,
    };
    let mut buf = Vec::new();
    run_sweep(&bounds, &mut buf).map_err(to_py_err)?;
    Ok(String::from_utf8_lossy(&buf).to_string())
}

#[pymodule]
fn genusfield_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Field>()?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(compute_text, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
