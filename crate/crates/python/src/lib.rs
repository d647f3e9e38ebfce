//! Python bindings. The compiled module is importable as `hopfcolor`.

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hopfcolor::geometry::{count_lattice_points, ehrhart_qsym, hilbert_function};
use hopfcolor::invariants::{chromatic_polynomial, chromatic_qsym, count_colorings, enumerate_stable_flags};
use hopfcolor::io::{parse_structure, render_structure};
use hopfcolor::species::{phi, psi};
use hopfcolor::{GroundSet, HopfMonoid, HopfStructure, QSymPoly, Subset};

fn py_err(e: hopfcolor::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn subset(ground: &GroundSet, labels: Vec<String>) -> PyResult<Subset> {
    ground.subset_of(&labels).map_err(py_err)
}

fn labels(ground: &GroundSet, s: Subset) -> Vec<String> {
    ground.labels_of(s).into_iter().map(String::from).collect()
}

/// A quasisymmetric function in the monomial basis.
#[pyclass(name = "QSym", module = "hopfcolor", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyQSym(QSymPoly);

#[pymethods]
impl PyQSym {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyQSym).map_err(py_err)
    }

    /// `{composition: coefficient}`.
    fn terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.0.terms().map(|(a, c)| (a.parts().to_vec(), c.clone())).collect()
    }

    fn principal_specialization(&self, n: u64) -> BigInt {
        self.0.principal_specialization(n)
    }

    fn to_polynomial(&self) -> String {
        self.0.to_polynomial().to_string()
    }

    fn __add__(&self, other: &PyQSym) -> PyQSym {
        PyQSym(self.0.add(&other.0))
    }

    fn __mul__(&self, other: &PyQSym) -> PyQSym {
        PyQSym(self.0.mul(&other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QSym('{}')", self.0)
    }
}

/// A coloring problem, graph, hypergraph, poset, matroid or antimatroid.
#[pyclass(name = "Structure", module = "hopfcolor", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyStructure(HopfStructure);

impl PyStructure {
    fn problem(&self) -> hopfcolor::ColoringProblem {
        self.0.phi()
    }
}

#[pymethods]
impl PyStructure {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_structure(text).map(PyStructure).map_err(py_err)
    }

    fn to_json(&self) -> String {
        render_structure(&self.0)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.0.tag().name()
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.0.ground().labels().to_vec()
    }

    fn is_stable(&self) -> bool {
        self.0.is_stable()
    }

    fn product(&self, other: &PyStructure) -> PyResult<PyStructure> {
        self.0.product(&other.0).map(PyStructure).map_err(py_err)
    }

    /// `None` stands for the zero restriction.
    fn restrict(&self, subset_labels: Vec<String>) -> PyResult<Option<PyStructure>> {
        let s = subset(self.0.ground(), subset_labels)?;
        Ok(self.0.restrict(s).map(PyStructure))
    }

    fn contract(&self, subset_labels: Vec<String>) -> PyResult<Option<PyStructure>> {
        let s = subset(self.0.ground(), subset_labels)?;
        Ok(self.0.contract(s).map(PyStructure))
    }

    /// The associated coloring problem.
    fn phi(&self) -> PyStructure {
        PyStructure(HopfStructure::ColoringProblem(phi(&self.0)))
    }

    fn psi(&self) -> PyQSym {
        PyQSym(psi(&self.0))
    }

    fn family(&self) -> Vec<Vec<String>> {
        let c = self.problem();
        c.family().iter().map(|s| labels(c.ground(), s)).collect()
    }

    fn ideal(&self) -> Vec<(Vec<String>, Vec<String>)> {
        let c = self.problem();
        c.ideal()
            .sorted()
            .into_iter()
            .map(|(s, t)| (labels(c.ground(), s), labels(c.ground(), t)))
            .collect()
    }

    fn chromatic_polynomial(&self) -> PyResult<String> {
        chromatic_polynomial(&self.problem()).map(|p| p.to_string()).map_err(py_err)
    }

    fn count_colorings(&self, k: u32) -> PyResult<u64> {
        count_colorings(&self.problem(), k).map_err(py_err)
    }

    fn chromatic_qsym(&self) -> PyQSym {
        PyQSym(chromatic_qsym(&self.problem()))
    }

    fn stable_flags(&self) -> Vec<Vec<Vec<String>>> {
        let c = self.problem();
        enumerate_stable_flags(&c)
            .map(|f| f.chain().iter().map(|&s| labels(c.ground(), s)).collect())
            .collect()
    }

    fn hilbert_function(&self, n: u32) -> PyResult<BigUint> {
        hilbert_function(&self.problem(), n).map_err(py_err)
    }

    fn ehrhart_qsym(&self) -> PyQSym {
        PyQSym(ehrhart_qsym(&self.problem()))
    }

    fn count_lattice_points(&self, bound: u32) -> PyResult<u64> {
        count_lattice_points(&self.problem(), bound).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Structure.from_json('{}')", self.to_json())
    }
}

#[pyfunction]
fn load(text: &str) -> PyResult<PyStructure> {
    PyStructure::from_json(text)
}

#[pymodule(name = "hopfcolor")]
fn hopfcolor_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStructure>()?;
    m.add_class::<PyQSym>()?;
    m.add_function(wrap_pyfunction!(load, m)?)?;
    Ok(())
}
