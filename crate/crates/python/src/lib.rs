//! Python bindings. Complexes are wrapped in a `Complex` class; reports come
//! back as plain dictionaries decoded from the same JSON the CLI prints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use whitney_core::fattening::{fatten, induced_fat_rotation, verify_fat};
use whitney_core::gallery::{example, GALLERY};
use whitney_core::graph::{classify_unique_embeddability, planar_embedding, Multigraph};
use whitney_core::io::{emit, parse, Cx2Document};
use whitney_core::pipeline::{homology_section, rotation_section, run_pipeline, surfaces_section, PipelineOptions};
use whitney_core::rotation::{RotationSystem, DEFAULT_ORACLE_BUDGET};
use whitney_core::topology::DEFAULT_TIETZE_BUDGET;
use whitney_core::whitney::{check_whitney, link_graph};
use whitney_core::Complex2;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Complex", module = "whitney", frozen)]
struct PyComplex {
    inner: Complex2,
    rotation: Option<RotationSystem>,
}

impl PyComplex {
    fn options(oracle: bool, max_tietze: usize) -> PipelineOptions {
        PipelineOptions { force_oracle: oracle, oracle_budget: DEFAULT_ORACLE_BUDGET, tietze_budget: max_tietze }
    }

    fn systems(&self, oracle: bool) -> Vec<RotationSystem> {
        match &self.rotation {
            Some(sigma) => vec![sigma.clone()],
            None => {
                let whitney = check_whitney(&self.inner).is_whitney;
                rotation_section(&self.inner, whitney, &Self::options(oracle, DEFAULT_TIETZE_BUDGET)).1
            }
        }
    }
}

#[pymethods]
impl PyComplex {
    #[new]
    fn new(vertices: Vec<String>, faces: Vec<Vec<String>>) -> PyResult<Self> {
        let inner = Complex2::build(&vertices, &faces).map_err(value_error)?;
        Ok(PyComplex { inner, rotation: None })
    }

    /// A complex from the text of a `.cx2` document.
    #[staticmethod]
    fn from_cx2(text: &str) -> PyResult<Self> {
        let doc = parse(text).map_err(value_error)?;
        Ok(PyComplex { inner: doc.complex, rotation: doc.rotation })
    }

    #[staticmethod]
    fn example(name: &str) -> PyResult<Self> {
        let inner = example(name).ok_or_else(|| value_error(format!("unknown example `{name}`")))?;
        Ok(PyComplex { inner, rotation: None })
    }

    fn to_cx2(&self) -> String {
        emit(&Cx2Document { complex: self.inner.clone(), rotation: self.rotation.clone() })
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn faces(&self) -> Vec<Vec<String>> {
        let x = &self.inner;
        x.faces().iter().map(|f| f.iter().map(|&v| x.name(v).to_string()).collect()).collect()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String)> {
        let x = &self.inner;
        x.edges().iter().map(|&(a, b)| (x.name(a).to_string(), x.name(b).to_string())).collect()
    }

    #[getter]
    fn has_rotation(&self) -> bool {
        self.rotation.is_some()
    }

    fn counts(&self) -> (usize, usize, usize) {
        (self.inner.vertex_count(), self.inner.edge_count(), self.inner.face_count())
    }

    fn euler_characteristic(&self) -> i64 {
        self.inner.euler_characteristic()
    }

    fn is_simplicial(&self) -> bool {
        self.inner.is_simplicial()
    }

    fn link<'py>(&self, py: Python<'py>, vertex: &str) -> PyResult<Bound<'py, PyAny>> {
        let x = &self.inner;
        let v = x.vertex(vertex).ok_or_else(|| value_error(format!("unknown vertex `{vertex}`")))?;
        let link = link_graph(x, v).map_err(value_error)?;
        let g = &link.graph;
        let edges: Vec<(usize, String, String)> = g
            .edges()
            .iter()
            .map(|e| (e.id, x.name(g.label(e.ends[0])).to_string(), x.name(g.label(e.ends[1])).to_string()))
            .collect();
        to_py(py, &edges)
    }

    fn whitney<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &check_whitney(&self.inner))
    }

    #[pyo3(signature = (max_tietze = DEFAULT_TIETZE_BUDGET))]
    fn homology<'py>(&self, py: Python<'py>, max_tietze: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &homology_section(&self.inner, max_tietze))
    }

    #[pyo3(signature = (oracle = false))]
    fn rotation_systems<'py>(&self, py: Python<'py>, oracle: bool) -> PyResult<Bound<'py, PyAny>> {
        let whitney = check_whitney(&self.inner).is_whitney;
        let (section, _) = rotation_section(&self.inner, whitney, &Self::options(oracle, DEFAULT_TIETZE_BUDGET));
        to_py(py, &section)
    }

    /// Local surfaces of the stored rotation system, or of the first planar one.
    #[pyo3(signature = (oracle = false))]
    fn surfaces<'py>(&self, py: Python<'py>, oracle: bool) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &surfaces_section(&self.inner, &self.systems(oracle)))
    }

    #[pyo3(signature = (oracle = false, max_tietze = DEFAULT_TIETZE_BUDGET))]
    fn check<'py>(&self, py: Python<'py>, oracle: bool, max_tietze: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &run_pipeline(&self.inner, &Self::options(oracle, max_tietze)))
    }

    /// The fattening with its induced rotation system, the provenance of its
    /// new cells and the verification report.
    fn fatten<'py>(&self, py: Python<'py>) -> PyResult<(PyComplex, Bound<'py, PyAny>, Bound<'py, PyAny>)> {
        let sigma = self.systems(false).into_iter().next().ok_or_else(|| value_error("no planar rotation system"))?;
        let fat = fatten(&self.inner, &sigma).map_err(value_error)?;
        let sigma_fat = induced_fat_rotation(&fat).map_err(value_error)?;
        let report = verify_fat(&fat, &sigma_fat);
        let complex = PyComplex { inner: fat.carrier.clone(), rotation: Some(sigma_fat) };
        Ok((complex, to_py(py, &fat.provenance())?, to_py(py, &report)?))
    }

    fn __repr__(&self) -> String {
        let (v, e, f) = self.counts();
        format!("Complex(vertices={v}, edges={e}, faces={f})")
    }
}

/// Names of the built-in example complexes.
#[pyfunction]
fn gallery() -> Vec<&'static str> {
    GALLERY.to_vec()
}

/// Unique-embeddability class of a connected multigraph on vertices
/// `0..n`: "UniqueA", "UniqueB" or "NotUnique".
#[pyfunction]
fn classify_graph(n: usize, edges: Vec<(usize, usize)>) -> PyResult<String> {
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
        return Err(value_error(format!("edge ({a}, {b}) leaves the vertex range")));
    }
    let class = classify_unique_embeddability(&Multigraph::from_edges(n, &edges)).map_err(value_error)?;
    Ok(format!("{:?}", class.tag))
}

#[pyfunction]
fn is_planar_graph(n: usize, edges: Vec<(usize, usize)>) -> PyResult<bool> {
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
        return Err(value_error(format!("edge ({a}, {b}) leaves the vertex range")));
    }
    Ok(planar_embedding(&Multigraph::from_edges(n, &edges)).map_err(value_error)?.is_planar())
}

#[pymodule]
fn whitney(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(gallery, m)?)?;
    m.add_function(wrap_pyfunction!(classify_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_planar_graph, m)?)?;
    Ok(())
}
