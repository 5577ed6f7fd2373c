//! Python bindings. Systems cross the boundary as inequality-file text; spectra as lists of
//! rational strings such as `"1/3"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qmarginal::chamber::{cubicles as chamber_cubicles, extremal_edges, qubit_extremal_edges};
use qmarginal::inequality::{generate_system, GenerationOptions, InequalitySystem};
use qmarginal::io::SystemFile;
use qmarginal::polytope::{check_membership, reduce_system};
use qmarginal::quantum::necessity_trial;
use qmarginal::schubert::mahonian_count_u64;
use qmarginal::spectra::{parse_rational, Rational, Spectrum, SystemFormat};
use qmarginal::symmetric::{kronecker as kron, reduced_kronecker as reduced_kron, Partition};

fn py_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn format_of(s: &str) -> PyResult<SystemFormat> {
    s.parse().map_err(py_err)
}

fn system_of(text: &str) -> PyResult<InequalitySystem> {
    SystemFile::parse(text).and_then(|f| f.to_system()).map_err(py_err)
}

fn spectrum_of(values: &[String]) -> PyResult<Spectrum> {
    let v = values.iter().map(|s| parse_rational(s)).collect::<Result<Vec<Rational>, _>>().map_err(py_err)?;
    Ok(Spectrum::from_unsorted(v))
}

fn partition_of(rows: Vec<usize>) -> PyResult<Partition> {
    Partition::new(rows).map_err(py_err)
}

/// Extremal edges as `"a,b;c,d"` strings.
#[pyfunction]
fn edges(format: &str) -> PyResult<Vec<String>> {
    let f = format_of(format)?;
    let e = if f.is_qubit_array() { qubit_extremal_edges(f.components()) } else { extremal_edges(&f) };
    Ok(e.iter().map(|e| e.to_string()).collect())
}

#[pyfunction]
fn cubicles(format: &str) -> PyResult<Vec<String>> {
    Ok(chamber_cubicles(&format_of(format)?).iter().map(|c| c.to_string()).collect())
}

/// Candidate system as inequality-file text.
#[pyfunction]
#[pyo3(signature = (format, all_coeffs = false, qubit_fast_path = false))]
fn generate(format: &str, all_coeffs: bool, qubit_fast_path: bool) -> PyResult<String> {
    let opts = GenerationOptions { unit_coefficients_only: !all_coeffs, qubit_fast_path, ..GenerationOptions::default() };
    let sys = generate_system(&format_of(format)?, &opts).map_err(py_err)?;
    Ok(SystemFile::from_system(&sys, vec![]).to_string())
}

/// Irredundant subsystem as inequality-file text.
#[pyfunction]
#[pyo3(signature = (system, use_symmetry = true))]
fn reduce(system: &str, use_symmetry: bool) -> PyResult<String> {
    let rep = reduce_system(&system_of(system)?, use_symmetry, false).map_err(py_err)?;
    Ok(SystemFile::from_system(&rep.system, vec![]).to_string())
}

/// Whether trace-one spectra satisfy every inequality of the system.
#[pyfunction]
fn check(system: &str, composite: Vec<String>, margins: Vec<Vec<String>>) -> PyResult<bool> {
    let sys = system_of(system)?;
    let nu = spectrum_of(&composite)?;
    let lams = margins.iter().map(|m| spectrum_of(m)).collect::<PyResult<Vec<_>>>()?;
    Ok(check_membership(&sys, &nu, &lams).map_err(py_err)?.compatible)
}

#[pyfunction]
fn kronecker(lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<u64> {
    kron(&partition_of(lam)?, &partition_of(mu)?, &partition_of(nu)?).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (lam, mu, nu, cap = None))]
fn reduced_kronecker(lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>, cap: Option<usize>) -> PyResult<u64> {
    reduced_kron(&partition_of(lam)?, &partition_of(mu)?, &partition_of(nu)?, cap).map_err(py_err)
}

#[pyfunction]
fn mahonian_count(n: usize, max_len: usize) -> u64 {
    mahonian_count_u64(n, max_len)
}

/// Necessity sampling summary: `max_violation`, `violating_trials`, `generator`.
#[pyfunction]
#[pyo3(signature = (system, trials = 1000, seed = 42, tol = 1e-9))]
fn sample<'py>(py: Python<'py>, system: &str, trials: usize, seed: u64, tol: f64) -> PyResult<Bound<'py, PyDict>> {
    let r = necessity_trial(&system_of(system)?, trials, seed, tol).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("max_violation", r.max_violation)?;
    d.set_item("violating_trials", r.violating_trials)?;
    d.set_item("generator", r.generator)?;
    d.set_item("worst", r.worst)?;
    Ok(d)
}

#[pymodule]
fn qmarginal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(edges, m)?)?;
    m.add_function(wrap_pyfunction!(cubicles, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(mahonian_count, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    Ok(())
}
