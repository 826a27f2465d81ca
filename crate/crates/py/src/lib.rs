//! Python bindings: certificates, classification, search and the construction operations.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use equigon::io::{
    emit_certificate, emit_svg, load_corpus as core_corpus, parse_certificate, CertificateDocument, Provenance,
};
use equigon::polygon::{self, FMapParams};
use equigon::{Certificate, Error, GramMatrix, LatticeVector, Mode, SearchBudget, SearchOutcome, Wide};

create_exception!(equigon, EquigonError, PyValueError);

fn py_err(e: Error) -> PyErr {
    EquigonError::new_err(e.to_string())
}

fn pair(v: &LatticeVector) -> (BigInt, BigInt) {
    (v.x.to_bigint(), v.y.to_bigint())
}

#[pyclass(name = "Certificate", module = "equigon", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCertificate {
    inner: Certificate,
}

impl From<Certificate> for PyCertificate {
    fn from(inner: Certificate) -> Self {
        PyCertificate { inner }
    }
}

#[pymethods]
impl PyCertificate {
    /// Builds a certificate from `(x, y)` pairs; `y` is in units of √m. Not verified.
    #[new]
    fn new(m: u64, vectors: Vec<(BigInt, BigInt)>) -> Self {
        let vectors = vectors.into_iter().map(|(x, y)| LatticeVector { x: Wide::from(x), y: Wide::from(y) }).collect();
        Certificate::from_vectors(m, vectors).into()
    }

    #[getter]
    fn m(&self) -> u64 {
        self.inner.m
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn side_sq(&self) -> BigInt {
        self.inner.side_sq.to_bigint()
    }

    #[getter]
    fn vectors(&self) -> Vec<(BigInt, BigInt)> {
        self.inner.vectors.iter().map(pair).collect()
    }

    fn verify(&self) -> bool {
        polygon::verify_certificate(&self.inner).valid
    }

    /// Human-readable reasons the certificate is invalid (empty when valid).
    fn failures(&self) -> Vec<String> {
        polygon::verify_certificate(&self.inner).failures.iter().map(ToString::to_string).collect()
    }

    fn canonicalize(&self) -> PyResult<PyCertificate> {
        equigon::canonicalize(&self.inner).map(Into::into).map_err(py_err)
    }

    /// Vertices of the convex polygon, starting at the origin.
    fn vertices(&self) -> PyResult<Vec<(BigInt, BigInt)>> {
        let poly = polygon::assemble_convex(&self.inner).map_err(py_err)?;
        Ok(poly.vertices.iter().map(pair).collect())
    }

    fn svg(&self) -> PyResult<String> {
        polygon::assemble_convex(&self.inner).map(|p| emit_svg(&p)).map_err(py_err)
    }

    #[pyo3(signature = (provenance = "search"))]
    fn to_json(&self, provenance: &str) -> PyResult<String> {
        let provenance = match provenance {
            "paper" => Provenance::Paper,
            "search" => Provenance::Search,
            "constructed" => Provenance::Constructed,
            other => return Err(PyValueError::new_err(format!("unknown provenance {other:?}"))),
        };
        Ok(emit_certificate(&CertificateDocument::new(self.inner.clone(), provenance)))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<PyCertificate> {
        parse_certificate(text).map(|d| d.certificate.into()).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Certificate({})", self.inner)
    }
}

/// Classifies the lattice with Gram matrix `"g11,g12,g22"` for polygon size `n`.
#[pyfunction]
fn classify<'py>(py: Python<'py>, gram: &str, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let g: GramMatrix = gram.parse().map_err(py_err)?;
    let c = equigon::classify_lattice(&g, n).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("verdict", format!("{:?}", c.verdict))?;
    d.set_item("reason", format!("{:?}", c.reason))?;
    d.set_item("nu", c.nu)?;
    d.set_item("largest_prime", c.largest_prime)?;
    d.set_item("n", c.n)?;
    Ok(d)
}

/// Returns `(status, certificate)`; status is "found", "proven_empty" or "budget_exhausted".
#[pyfunction]
#[pyo3(signature = (m, n, cap, mode = "symmetric", max_nodes = SearchBudget::DEFAULT_MAX_NODES, jobs = 1))]
fn search(
    py: Python<'_>,
    m: u64,
    n: usize,
    cap: u64,
    mode: &str,
    max_nodes: u64,
    jobs: usize,
) -> PyResult<(&'static str, Option<PyCertificate>)> {
    let mode: Mode = mode.parse().map_err(py_err)?;
    let budget = SearchBudget::new(cap, mode).with_max_nodes(max_nodes).with_jobs(jobs);
    let out = py.detach(|| equigon::find_zero_sum(m, n, &budget)).map_err(py_err)?;
    Ok(match out {
        SearchOutcome::Found { certificate, .. } => ("found", Some(certificate.into())),
        SearchOutcome::ProvenEmptyWithinN => ("proven_empty", None),
        SearchOutcome::BudgetExhausted => ("budget_exhausted", None),
    })
}

/// Primitive `(a, b, c)` with `a² + m·b² = c²`, `b ≥ 0`, `c ≤ cap`.
#[pyfunction]
fn enumerate_reps(m: u64, cap: u64) -> PyResult<Vec<(i64, i64, i64)>> {
    let reps = equigon::enumerate_reps(m, cap).map_err(py_err)?;
    Ok(reps.into_iter().map(|r| (r.a, r.b, r.c)).collect())
}

/// The published table rows as `(m, p, certificate)`.
#[pyfunction]
fn load_corpus() -> PyResult<Vec<(u64, u64, PyCertificate)>> {
    let rows = core_corpus().map_err(py_err)?;
    Ok(rows.into_iter().map(|r| (r.m, r.p, r.certificate().into())).collect())
}

/// Returns `(certificate, t)`.
#[pyfunction]
#[pyo3(signature = (cert, max_t = 1000))]
fn extend_plus_two(cert: &PyCertificate, max_t: u64) -> PyResult<(PyCertificate, u64)> {
    let ext = polygon::extend_plus_two(&cert.inner, max_t).map_err(py_err)?;
    Ok((ext.certificate.into(), ext.t))
}

#[pyfunction]
#[pyo3(signature = (m, n, max_norm = 10_000_000))]
fn even_gon(m: u64, n: usize, max_norm: u128) -> PyResult<PyCertificate> {
    polygon::even_gon(m, n, max_norm).map(Into::into).map_err(py_err)
}

#[pyfunction]
fn descend_by_prime(cert: &PyCertificate, q: u64) -> PyResult<PyCertificate> {
    polygon::descend_by_prime(&cert.inner, q).map(Into::into).map_err(py_err)
}

#[pyfunction]
fn scale(cert: &PyCertificate, t: u64) -> PyCertificate {
    polygon::scale_certificate(&cert.inner, t).into()
}

#[pyfunction]
fn make_side_integral(cert: &PyCertificate) -> PyResult<PyCertificate> {
    polygon::make_side_integral(&cert.inner).map(Into::into).map_err(py_err)
}

#[pyfunction]
fn apply_fmap(cert: &PyCertificate, s: BigInt, t: BigInt) -> PyResult<PyCertificate> {
    let params = FMapParams::new(Wide::from(s), Wide::from(t)).map_err(py_err)?;
    let vectors = polygon::apply_fmap(&cert.inner.vectors, &params, cert.inner.m);
    Ok(Certificate::from_vectors(cert.inner.m, vectors).into())
}

#[pymodule(name = "equigon")]
fn equigon_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("EquigonError", m.py().get_type::<EquigonError>())?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_reps, m)?)?;
    m.add_function(wrap_pyfunction!(load_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(extend_plus_two, m)?)?;
    m.add_function(wrap_pyfunction!(even_gon, m)?)?;
    m.add_function(wrap_pyfunction!(descend_by_prime, m)?)?;
    m.add_function(wrap_pyfunction!(scale, m)?)?;
    m.add_function(wrap_pyfunction!(make_side_integral, m)?)?;
    m.add_function(wrap_pyfunction!(apply_fmap, m)?)?;
    Ok(())
}
