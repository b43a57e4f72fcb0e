//! Python bindings: hosts, diagram checking, enumeration and realization.
//! Structured results cross the boundary as JSON strings; `json.loads` on
//! the Python side keeps the schema identical to the CLI output.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use alcove::classify::enumerate::{enumerate_primitive, enumerate_spherical};
use alcove::classify::{check_spherical, SphericalDiagram};
use alcove::grammar::{format_diagram, parse_diagram, parse_host};
use alcove::jsonio;
use alcove::realize::realize_spherical;
use alcove::render::{render_dot, render_text};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// One decorated diagram, parsed from its spec string.
#[pyclass]
struct Diagram {
    inner: SphericalDiagram,
}

#[pymethods]
impl Diagram {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(Diagram { inner: parse_diagram(spec).map_err(err)? })
    }

    fn spec(&self) -> String {
        format_diagram(&self.inner)
    }

    fn host(&self) -> String {
        self.inner.host.name()
    }

    fn is_valid(&self) -> PyResult<bool> {
        Ok(check_spherical(&self.inner).map_err(err)?.verdict.valid)
    }

    /// Full verdict as a JSON object string.
    fn check_json(&self) -> PyResult<String> {
        let check = check_spherical(&self.inner).map_err(err)?;
        serde_json::to_string(&jsonio::diagram_json(&self.inner, Some(&check))).map_err(err)
    }

    /// Momentum segment and weight as a JSON object string.
    fn realize_json(&self) -> PyResult<String> {
        let r = realize_spherical(&self.inner).map_err(err)?;
        serde_json::to_string(&jsonio::realization_json(&r)).map_err(err)
    }

    fn render(&self) -> String {
        render_text(&self.inner)
    }

    fn render_dot(&self) -> String {
        render_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Diagram({:?})", self.spec())
    }
}

#[pyfunction]
fn labels(host: &str) -> PyResult<Vec<i64>> {
    let d = parse_host(host).map_err(err)?;
    let k = d.labels().map_err(err)?;
    Ok(k.iter().map(|x| i64::try_from(x).expect("labels fit in i64")).collect())
}

#[pyfunction]
fn colabels(host: &str) -> PyResult<Vec<i64>> {
    let d = parse_host(host).map_err(err)?;
    let k = d.colabels().map_err(err)?;
    Ok(k.iter().map(|x| i64::try_from(x).expect("colabels fit in i64")).collect())
}

#[pyfunction]
fn cartan(host: &str) -> PyResult<Vec<Vec<i64>>> {
    Ok(parse_host(host).map_err(err)?.cartan().to_vec())
}

/// Spec strings of all valid diagrams on the host, canonicalized.
#[pyfunction]
#[pyo3(signature = (host, mode = "primitive"))]
fn enumerate(host: &str, mode: &str) -> PyResult<Vec<String>> {
    let h = Arc::new(parse_host(host).map_err(err)?);
    let diagrams: Vec<SphericalDiagram> = match mode {
        "primitive" => enumerate_primitive(&h)
            .map_err(err)?
            .into_iter()
            .map(|d| SphericalDiagram::new(h.clone(), vec![], d.side1, d.side2))
            .collect(),
        "spherical" => enumerate_spherical(&h).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("mode must be primitive or spherical, got {other:?}"))),
    };
    Ok(diagrams.iter().map(format_diagram).collect())
}

/// The local-model catalog as a JSON array string.
#[pyfunction]
#[pyo3(signature = (max_rank = 8))]
fn catalog_json(max_rank: u32) -> PyResult<String> {
    let entries = alcove::localmodels::catalog(max_rank);
    let v: Vec<_> = entries.iter().map(jsonio::catalog_entry_json).collect();
    serde_json::to_string(&v).map_err(err)
}

/// Run the built-in checks; returns the list of (name, error-or-None).
#[pyfunction]
#[pyo3(signature = (max_rank = 6))]
fn selftest(max_rank: u32) -> Vec<(String, Option<String>)> {
    alcove::selftest::run(max_rank)
        .into_iter()
        .map(|(name, r)| (name, r.err()))
        .collect()
}

#[pymodule]
fn alcove_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Diagram>()?;
    m.add_function(wrap_pyfunction!(labels, m)?)?;
    m.add_function(wrap_pyfunction!(colabels, m)?)?;
    m.add_function(wrap_pyfunction!(cartan, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_json, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
