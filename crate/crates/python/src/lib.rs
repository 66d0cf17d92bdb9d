//! Python bindings for the fullerene construction kit.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cellforge::census::{certificate_flags, isomorphic};
use cellforge::classify::classify_3fullerene;
use cellforge::io::{read_complex, write_cxc, write_cxf};
use cellforge::pipeline::{build_by_name, census_any, construct_by_name, Params};
use cellforge::verify::{default_rows, deep_rows, verify_table};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn params(kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<Params> {
    let mut out = BTreeMap::new();
    if let Some(kw) = kwargs {
        for (k, v) in kw.iter() {
            out.insert(k.extract::<String>()?, v.str()?.to_string());
        }
    }
    Ok(out)
}

/// A cell complex, held as an incidence complex when regular and as a flag
/// system otherwise.
#[pyclass(name = "Complex", module = "pycellforge")]
struct PyComplex {
    inner: cellforge::Complex,
}

#[pymethods]
impl PyComplex {
    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// Whether the complex is stored as an incidence complex.
    #[getter]
    fn is_regular(&self) -> bool {
        self.inner.incidence().is_some()
    }

    /// Per-rank cell counts.
    #[getter]
    fn counts(&self) -> Vec<usize> {
        self.inner.f_vector().counts
    }

    /// Counts with the pentagon / hexagon / other 2-face breakdown.
    fn f_vector<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner.f_vector())
    }

    fn euler_characteristic(&self) -> i64 {
        self.inner.f_vector().euler_characteristic()
    }

    fn is_simple_closed(&self) -> bool {
        self.inner.validate_simple_closed().passed()
    }

    fn is_fullerene(&self) -> bool {
        self.inner.is_fullerene()
    }

    fn is_orientable(&self) -> PyResult<bool> {
        Ok(self.inner.flags().map_err(err)?.orientability() == cellforge::Orientability::Orientable)
    }

    /// Hex digest of the canonical certificate of a connected complex.
    fn certificate(&self) -> PyResult<String> {
        let cert = certificate_flags(&self.inner.flags().map_err(err)?).map_err(err)?;
        Ok(cert.short_hex())
    }

    fn to_cxc(&self) -> PyResult<String> {
        self.inner
            .incidence()
            .map(write_cxc)
            .ok_or_else(|| err("complex is only available as a flag system"))
    }

    fn to_cxf(&self) -> PyResult<String> {
        Ok(write_cxf(&self.inner.flags().map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Complex({})", self.inner.f_vector())
    }
}

/// Builds a seed complex by name, e.g. `build("barrel", i=6)`.
#[pyfunction]
#[pyo3(signature = (name, **kwargs))]
fn build(name: &str, kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<PyComplex> {
    Ok(PyComplex { inner: build_by_name(name, &params(kwargs)?).map_err(err)? })
}

/// Applies a construction: "A", "B", "C", "fold", "quotient" or "dual".
#[pyfunction]
#[pyo3(signature = (op, complex, **kwargs))]
fn construct(op: &str, complex: &PyComplex, kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<PyComplex> {
    let out = construct_by_name(op, &complex.inner, &params(kwargs)?).map_err(err)?;
    Ok(PyComplex { inner: out.normalized() })
}

/// Cell census as a dict `{name: count}`.
#[pyfunction]
fn census(complex: &PyComplex) -> PyResult<BTreeMap<String, usize>> {
    Ok(census_any(&complex.inner).map_err(err)?.by_name())
}

/// Surface class of a 3-valent pentagon/hexagon surface.
#[pyfunction]
fn classify<'py>(py: Python<'py>, complex: &PyComplex) -> PyResult<Bound<'py, PyAny>> {
    let class = classify_3fullerene(&complex.inner).map_err(err)?;
    to_py(py, &class)
}

#[pyfunction]
fn is_isomorphic(a: &PyComplex, b: &PyComplex) -> PyResult<bool> {
    match (a.inner.incidence(), b.inner.incidence()) {
        (Some(x), Some(y)) => isomorphic(x, y).map_err(err),
        _ => {
            let fa = certificate_flags(&a.inner.flags().map_err(err)?).map_err(err)?;
            let fb = certificate_flags(&b.inner.flags().map_err(err)?).map_err(err)?;
            Ok(fa == fb)
        }
    }
}

/// Parses cxc or cxf text.
#[pyfunction]
fn read(text: &str) -> PyResult<PyComplex> {
    Ok(PyComplex { inner: read_complex(text).map_err(err)? })
}

/// Runs the f-vector and census table; returns one dict per row.
#[pyfunction]
#[pyo3(signature = (deep = false))]
fn verify<'py>(py: Python<'py>, deep: bool) -> PyResult<Bound<'py, PyAny>> {
    let rows = if deep { deep_rows() } else { default_rows() };
    let records = py.detach(|| verify_table(&rows));
    to_py(py, &records)
}

#[pymodule]
fn pycellforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(read, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
