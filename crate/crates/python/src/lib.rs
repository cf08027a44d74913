//! Python bindings. Structured results cross the boundary as JSON and come
//! back as plain dicts; exact rationals become `fractions.Fraction`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use zforce::bounds::bounds_report;
use zforce::heuristics::{extension_zfs_with_log, seeded_greedy_zfs};
use zforce::io::{parse_edge_list, to_edge_list};
use zforce::{Error, ExactOutcome, NamedFamily, Rational, VertexSet};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Invariant(m) => PyRuntimeError::new_err(format!("internal invariant violated: {m}")),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn to_dict<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn to_fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let text = format!("{}/{}", r.numer(), r.denom());
    py.import("fractions")?.getattr("Fraction")?.call1((text,))
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "zforce", frozen)]
pub struct PyGraph {
    inner: zforce::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = zforce::Graph::from_edges(n, edges).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = zforce::parse_graph6(text.trim()).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        let inner = parse_edge_list(text).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    /// A named family such as `("petersen", [])` or `("cycle", [5])`.
    #[staticmethod]
    #[pyo3(signature = (name, params = Vec::new()))]
    fn family(name: &str, params: Vec<usize>) -> PyResult<Self> {
        let fam = NamedFamily::from_name(name, &params).map_err(to_py_err)?;
        Ok(Self {
            inner: fam.generate().map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(to_py_err(Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.n(),
            }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    fn girth(&self) -> Option<usize> {
        self.inner.girth()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn to_graph6(&self) -> PyResult<String> {
        zforce::to_graph6(&self.inner).map_err(to_py_err)
    }

    fn to_edge_list(&self) -> String {
        to_edge_list(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

fn vertex_set(g: &zforce::Graph, vs: Vec<usize>) -> PyResult<VertexSet> {
    VertexSet::try_from_indices(g.n(), vs).map_err(to_py_err)
}

/// Closure of `z` as a sorted list.
#[pyfunction]
fn closure(g: &PyGraph, z: Vec<usize>) -> PyResult<Vec<usize>> {
    let z = vertex_set(&g.inner, z)?;
    Ok(zforce::closure(&g.inner, &z).map_err(to_py_err)?.closure.to_vec())
}

/// Forcing trace of `z` as a dict with `initial` and `steps`.
#[pyfunction]
fn forcing_trace<'py>(py: Python<'py>, g: &PyGraph, z: Vec<usize>) -> PyResult<Bound<'py, PyAny>> {
    let z = vertex_set(&g.inner, z)?;
    to_dict(py, &zforce::closure(&g.inner, &z).map_err(to_py_err)?)
}

#[pyfunction]
fn is_zero_forcing_set(g: &PyGraph, z: Vec<usize>) -> PyResult<bool> {
    let z = vertex_set(&g.inner, z)?;
    zforce::is_zero_forcing_set(&g.inner, &z).map_err(to_py_err)
}

/// The zero forcing set built from a vertex order: a vertex is left out
/// exactly when it is the last neighbor of some vertex placed before it.
#[pyfunction]
fn permutation_to_set(g: &PyGraph, order: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(zforce::permutation_to_set(&g.inner, &order)
        .map_err(to_py_err)?
        .to_vec())
}

/// `(Z(G), witness)`; raises `TimeoutError` when the budget runs out.
#[pyfunction]
#[pyo3(signature = (g, budget = None))]
fn zero_forcing_number(py: Python<'_>, g: &PyGraph, budget: Option<u64>) -> PyResult<(usize, Vec<usize>)> {
    let outcome = py
        .detach(|| zforce::zero_forcing_number(&g.inner, budget))
        .map_err(to_py_err)?;
    match outcome {
        ExactOutcome::Exact(r) => Ok((r.value, r.witness.to_vec())),
        ExactOutcome::BudgetExhausted { lower, upper, .. } => Err(pyo3::exceptions::PyTimeoutError::new_err(format!(
            "budget exhausted; Z(G) lies in [{lower}, {upper}]"
        ))),
    }
}

/// Exact expected size of the random-order forcing set.
#[pyfunction]
fn expected_size<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let e = py.detach(|| zforce::expected_size(&g.inner)).map_err(to_py_err)?;
    to_fraction(py, &e)
}

/// Best of `trials` random orders, with the sample mean and its standard error.
#[pyfunction]
#[pyo3(signature = (g, trials = 1000, seed = 0))]
fn random_zfs<'py>(py: Python<'py>, g: &PyGraph, trials: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let run = py
        .detach(|| zforce::random_zfs(&g.inner, trials, seed))
        .map_err(to_py_err)?;
    to_dict(py, &run)
}

/// Seed certificate plus greedy extension.
#[pyfunction]
fn greedy_zfs<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let run = py.detach(|| seeded_greedy_zfs(&g.inner)).map_err(to_py_err)?;
    to_dict(py, &run)
}

/// Path, cycle and lollipop augmentations on subcubic girth-5 graphs.
#[pyfunction]
fn extension_zfs<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let run = py.detach(|| extension_zfs_with_log(&g.inner)).map_err(to_py_err)?;
    to_dict(py, &run)
}

/// Every bound entry, optionally checked against `Z(G)`.
#[pyfunction]
#[pyo3(signature = (g, exact = true))]
fn bounds<'py>(py: Python<'py>, g: &PyGraph, exact: bool) -> PyResult<Bound<'py, PyAny>> {
    let report = py.detach(|| bounds_report(&g.inner, exact)).map_err(to_py_err)?;
    to_dict(py, &report)
}

#[pymodule]
#[pyo3(name = "zforce")]
fn zforce_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(closure, m)?)?;
    m.add_function(wrap_pyfunction!(forcing_trace, m)?)?;
    m.add_function(wrap_pyfunction!(is_zero_forcing_set, m)?)?;
    m.add_function(wrap_pyfunction!(permutation_to_set, m)?)?;
    m.add_function(wrap_pyfunction!(zero_forcing_number, m)?)?;
    m.add_function(wrap_pyfunction!(expected_size, m)?)?;
    m.add_function(wrap_pyfunction!(random_zfs, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_zfs, m)?)?;
    m.add_function(wrap_pyfunction!(extension_zfs, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    Ok(())
}
