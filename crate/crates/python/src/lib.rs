//! Python bindings for the `a051221` verifier.

use std::cmp::Ordering;

use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use a051221::cli::CertificateFile;
use a051221::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Overflow(_) => PyArithmeticError::new_err(e.to_string()),
        Error::ReductionDiverged(_) | Error::PeriodCapExceeded { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn ordering(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Element s + t·√10 of ℤ[√10].
#[pyclass(name = "QuadInt", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyQuadInt(a051221::QuadInt);

#[pymethods]
impl PyQuadInt {
    #[new]
    fn new(s: i128, t: i128) -> Self {
        PyQuadInt(a051221::QuadInt::new(s, t))
    }

    #[getter]
    fn s(&self) -> i128 {
        self.0.s
    }

    #[getter]
    fn t(&self) -> i128 {
        self.0.t
    }

    fn norm(&self) -> PyResult<i128> {
        self.0.norm().map_err(to_py)
    }

    fn conj(&self) -> Self {
        PyQuadInt(self.0.conj())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        a051221::quad_mul(self.0, other.0).map(PyQuadInt).map_err(to_py)
    }

    /// -1, 0 or 1 as the real value is below, equal to or above `other`.
    fn compare(&self, other: &Self) -> i8 {
        ordering(a051221::quad_compare(self.0, other.0))
    }

    fn __repr__(&self) -> String {
        format!("QuadInt({}, {})", self.0.s, self.0.t)
    }
}

#[pyclass(name = "SignedPowerSubgroup", frozen)]
struct PySubgroup(a051221::SignedPowerSubgroup);

#[pymethods]
impl PySubgroup {
    #[getter]
    fn prime(&self) -> u64 {
        self.0.prime()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.0.order()
    }

    fn elements(&self) -> Vec<u64> {
        self.0.elements().collect()
    }

    fn __contains__(&self, residue: u64) -> bool {
        self.0.contains(residue)
    }

    fn __len__(&self) -> usize {
        self.0.order() as usize
    }
}

#[pyclass(name = "ReductionResult", frozen, get_all)]
struct PyReduction {
    a: u64,
    b: u64,
    c: u64,
    exponent: i64,
    sign: i8,
    conjugated: bool,
}

#[pymethods]
impl PyReduction {
    fn __repr__(&self) -> String {
        format!(
            "ReductionResult(a={}, b={}, c={}, exponent={}, sign={}, conjugated={})",
            self.a,
            self.b,
            self.c,
            self.exponent,
            self.sign,
            if self.conjugated { "True" } else { "False" }
        )
    }
}

#[pyclass(name = "ResidueSequence", frozen)]
struct PyResidueSequence(a051221::ResidueSequence);

#[pymethods]
impl PyResidueSequence {
    #[getter]
    fn modulus(&self) -> u64 {
        self.0.modulus
    }

    #[getter]
    fn period(&self) -> u64 {
        self.0.period()
    }

    #[getter]
    fn values(&self) -> Vec<u64> {
        self.0.values.clone()
    }

    fn zero_positions(&self) -> Vec<u64> {
        a051221::zero_positions(&self.0).positions
    }

    fn __getitem__(&self, k: i64) -> u64 {
        self.0.at(k)
    }

    fn __len__(&self) -> usize {
        self.0.values.len()
    }
}

#[pyclass(name = "VerifierConfig", from_py_object)]
#[derive(Clone)]
struct PyConfig(a051221::VerifierConfig);

#[pymethods]
impl PyConfig {
    #[new]
    #[pyo3(signature = (value_min=0, value_bound=2000, known_x_max=7, modulus_n=10_000, primes=vec![160_001, 1601], oracle_x_limit=37))]
    fn new(
        value_min: u64,
        value_bound: u64,
        known_x_max: u32,
        modulus_n: u64,
        primes: Vec<u64>,
        oracle_x_limit: u32,
    ) -> PyResult<Self> {
        let cfg = a051221::VerifierConfig {
            value_min,
            value_bound,
            known_x_max,
            modulus_n,
            primes,
            oracle_x_limit,
        };
        cfg.validate().map_err(to_py)?;
        Ok(PyConfig(cfg))
    }

    #[getter]
    fn primes(&self) -> Vec<u64> {
        self.0.primes.clone()
    }

    #[getter]
    fn value_bound(&self) -> u64 {
        self.0.value_bound
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.0)
    }
}

#[pyclass(name = "PairCertificate", frozen, get_all)]
struct PyPairCertificate {
    a: u64,
    b: u64,
    prime: u64,
    joint_period: u64,
    zero_positions: Vec<u64>,
    residues: Vec<u64>,
    subgroup_order: u64,
    excluded: bool,
}

impl From<&a051221::PairCertificate> for PyPairCertificate {
    fn from(p: &a051221::PairCertificate) -> Self {
        PyPairCertificate {
            a: p.pair.a,
            b: p.pair.b,
            prime: p.prime,
            joint_period: p.joint_period,
            zero_positions: p.zero_positions.clone(),
            residues: p.residues.clone(),
            subgroup_order: p.subgroup_order,
            excluded: p.excluded,
        }
    }
}

#[pyclass(name = "CandidateCertificate", frozen, get_all)]
struct PyCandidateCertificate {
    c: u64,
    vacuous: bool,
    excluded: bool,
    pairs: Vec<Py<PyPairCertificate>>,
}

fn candidate(py: Python<'_>, cert: &a051221::CandidateCertificate) -> PyResult<PyCandidateCertificate> {
    let pairs = cert
        .pairs
        .iter()
        .map(|p| Py::new(py, PyPairCertificate::from(p)))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(PyCandidateCertificate {
        c: cert.c,
        vacuous: cert.vacuous,
        excluded: cert.excluded,
        pairs,
    })
}

#[pyclass(name = "VerificationReport", frozen)]
struct PyReport(a051221::VerificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn known_set_size(&self) -> usize {
        self.0.known_set_size
    }

    #[getter]
    fn candidates_checked(&self) -> usize {
        self.0.candidates_checked
    }

    #[getter]
    fn complete(&self) -> bool {
        self.0.is_complete()
    }

    #[getter]
    fn fallback_pairs(&self) -> Vec<(u64, u64)> {
        self.0.fallback_pairs.iter().map(|p| (p.a, p.b)).collect()
    }

    fn inconclusive_pairs(&self) -> Vec<(u64, u64)> {
        self.0.inconclusive_pairs().iter().map(|p| (p.a, p.b)).collect()
    }

    fn certificate(&self, py: Python<'_>, c: u64) -> PyResult<Option<PyCandidateCertificate>> {
        self.0.certificate(c).map(|cert| candidate(py, cert)).transpose()
    }

    fn cross_check(&self) -> PyResult<bool> {
        a051221::cross_check(&self.0, &self.0.config)
            .map(|r| r.passed())
            .map_err(to_py)
    }

    fn to_json(&self) -> String {
        CertificateFile::from_report(&self.0).to_json()
    }
}

#[pyclass(name = "Verifier", frozen)]
struct PyVerifier(a051221::Verifier);

#[pymethods]
impl PyVerifier {
    #[new]
    #[pyo3(signature = (config=None))]
    fn new(config: Option<PyConfig>) -> PyResult<Self> {
        let cfg = config.map(|c| c.0).unwrap_or_default();
        a051221::Verifier::new(cfg).map(PyVerifier).map_err(to_py)
    }

    fn exclude_candidate(&self, py: Python<'_>, c: u64) -> PyResult<PyCandidateCertificate> {
        let cert = self.0.exclude_candidate(c).map_err(to_py)?;
        candidate(py, &cert)
    }

    fn verify(&self, py: Python<'_>) -> PyResult<PyReport> {
        py.detach(|| self.0.verify()).map(PyReport).map_err(to_py)
    }

    fn known_values(&self) -> Vec<u64> {
        self.0.known().values.clone()
    }
}

#[pyfunction]
fn isqrt(n: u128) -> u128 {
    a051221::isqrt(n)
}

#[pyfunction]
fn perfect_square_root(n: u128) -> Option<u128> {
    a051221::perfect_square_root(n)
}

#[pyfunction]
fn mod_pow(base: i128, exponent: u64, m: u64) -> PyResult<u64> {
    a051221::mod_pow(base, exponent, m).map_err(to_py)
}

#[pyfunction]
fn build_signed_subgroup(p: u64) -> PyResult<PySubgroup> {
    a051221::build_signed_subgroup(p).map(PySubgroup).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (x_max=7, bound=2000))]
fn known_set(x_max: u32, bound: u64) -> PyResult<Vec<u64>> {
    a051221::known_set(x_max, bound).map(|k| k.values).map_err(to_py)
}

#[pyfunction]
fn even_exponent_min(x: u32) -> PyResult<u128> {
    a051221::even_exponent_min(x).map_err(to_py)
}

/// `(x, y)` with `10**x - y**2 == c`, smallest `x`, or `None`.
#[pyfunction]
#[pyo3(signature = (c, x_limit=37))]
fn oracle_scan(c: u64, x_limit: u32) -> PyResult<Option<(u32, u128)>> {
    a051221::oracle_scan(c, x_limit)
        .map(|r| r.map(|r| (r.x, r.y)))
        .map_err(to_py)
}

#[pyfunction]
fn fundamental_pairs(c: u64) -> Vec<(u64, u64)> {
    a051221::fundamental_pairs(c)
        .iter()
        .map(|p| (p.a, p.b))
        .collect()
}

#[pyfunction]
fn reduce_solution(s: i128, t: i128) -> PyResult<PyReduction> {
    let r = a051221::reduce_solution(s, t).map_err(to_py)?;
    Ok(PyReduction {
        a: r.pair.a,
        b: r.pair.b,
        c: r.pair.c,
        exponent: r.exponent,
        sign: r.sign,
        conjugated: r.conjugated,
    })
}

#[pyfunction]
fn sequence_mod(a: i128, b: i128, m: u64) -> PyResult<PyResidueSequence> {
    a051221::sequence_mod(a, b, m)
        .map(PyResidueSequence)
        .map_err(to_py)
}

/// `(joint_period, [(k, t_k mod p), ...])` over the zero hits modulo `n`.
#[pyfunction]
fn joint_zero_residues(a: i128, b: i128, n: u64, p: u64) -> PyResult<(u64, Vec<(u64, u64)>)> {
    let scan = a051221::joint_zero_residues(a, b, n, p).map_err(to_py)?;
    Ok((scan.period, scan.hits.iter().map(|h| (h.k, h.residue)).collect()))
}

#[pymodule]
fn a051221_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuadInt>()?;
    m.add_class::<PySubgroup>()?;
    m.add_class::<PyReduction>()?;
    m.add_class::<PyResidueSequence>()?;
    m.add_class::<PyConfig>()?;
    m.add_class::<PyPairCertificate>()?;
    m.add_class::<PyCandidateCertificate>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyVerifier>()?;
    m.add_function(wrap_pyfunction!(isqrt, m)?)?;
    m.add_function(wrap_pyfunction!(perfect_square_root, m)?)?;
    m.add_function(wrap_pyfunction!(mod_pow, m)?)?;
    m.add_function(wrap_pyfunction!(build_signed_subgroup, m)?)?;
    m.add_function(wrap_pyfunction!(known_set, m)?)?;
    m.add_function(wrap_pyfunction!(even_exponent_min, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_scan, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_solution, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_mod, m)?)?;
    m.add_function(wrap_pyfunction!(joint_zero_residues, m)?)?;
    m.add("UNIT", PyQuadInt(a051221::UNIT))?;
    Ok(())
}
