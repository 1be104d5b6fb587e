//! Python bindings: `polyhermite.PolyMat` and the main operations on it.

use pyo3::create_exception;
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use ph::{Error, Poly, Prime, Shift};

create_exception!(polyhermite, SingularError, PyValueError, "The input matrix is singular.");

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Singular | Error::RankDeficient { .. } => SingularError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn coeffs(f: &Poly) -> Vec<u64> {
    f.coeffs().to_vec()
}

/// Matrix of polynomials over GF(p); entries are coefficient lists in
/// ascending degree.
#[pyclass(name = "PolyMat", module = "polyhermite", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolyMat {
    inner: ph::PolyMat,
}

fn wrap(inner: ph::PolyMat) -> PyPolyMat {
    PyPolyMat { inner }
}

#[pymethods]
impl PyPolyMat {
    #[new]
    fn new(p: u64, rows: Vec<Vec<Vec<i64>>>) -> PyResult<Self> {
        let p = Prime::new(p).map_err(to_py)?;
        ph::PolyMat::from_coeff_rows(p, &rows).map(wrap).map_err(to_py)
    }

    #[staticmethod]
    fn identity(p: u64, n: usize) -> PyResult<Self> {
        Ok(wrap(ph::PolyMat::identity(Prime::new(p).map_err(to_py)?, n)))
    }

    /// Parses the plain-text matrix format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        ph::parse_pmat(text).map(wrap).map_err(to_py)
    }

    fn to_text(&self) -> String {
        ph::format_pmat(&self.inner)
    }

    #[getter]
    fn modulus(&self) -> u64 {
        self.inner.modulus().value()
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.inner.rows(), self.inner.cols())
    }

    fn entry(&self, i: usize, j: usize) -> PyResult<Vec<u64>> {
        if i >= self.inner.rows() || j >= self.inner.cols() {
            return Err(PyIndexError::new_err(format!("entry ({i}, {j}) out of range")));
        }
        Ok(coeffs(self.inner.get(i, j)))
    }

    fn to_list(&self) -> Vec<Vec<Vec<u64>>> {
        (0..self.inner.rows())
            .map(|i| (0..self.inner.cols()).map(|j| coeffs(self.inner.get(i, j))).collect())
            .collect()
    }

    /// Largest entry degree, -1 for the zero matrix.
    fn degree(&self) -> i64 {
        self.inner.degree().max(-1)
    }

    fn transpose(&self) -> Self {
        wrap(self.inner.transpose())
    }

    fn __matmul__(&self, other: &Self) -> PyResult<Self> {
        self.inner.mul(&other.inner).map(wrap).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

fn shift(s: Vec<i64>) -> Shift {
    Shift::new(s)
}

/// Column Hermite normal form of a nonsingular matrix.
#[pyfunction]
fn hermite(a: &PyPolyMat) -> PyResult<PyPolyMat> {
    ph::hermite(&a.inner).map(wrap).map_err(to_py)
}

/// Monic diagonal entries of the Hermite form.
#[pyfunction]
fn hermite_diagonal(a: &PyPolyMat) -> PyResult<Vec<Vec<u64>>> {
    Ok(ph::hermite_diagonal(&a.inner).map_err(to_py)?.iter().map(coeffs).collect())
}

/// Hermite form given the degrees of its diagonal entries.
#[pyfunction]
fn hermite_known_degree(a: &PyPolyMat, delta: Vec<usize>) -> PyResult<PyPolyMat> {
    ph::hermite_known_degree(&a.inner, &delta).map(wrap).map_err(to_py)
}

#[pyfunction]
fn is_hermite(h: &PyPolyMat) -> bool {
    ph::is_hermite(&h.inner)
}

/// Determinant as a coefficient list in ascending degree.
#[pyfunction]
fn determinant(a: &PyPolyMat) -> PyResult<Vec<u64>> {
    ph::determinant(&a.inner).map(|d| coeffs(&d)).map_err(to_py)
}

/// Shift-minimal basis of the right kernel.
#[pyfunction]
fn kernel_basis(f: &PyPolyMat, s: Vec<i64>) -> PyResult<PyPolyMat> {
    ph::kernel_basis(&f.inner, &shift(s)).map(wrap).map_err(to_py)
}

/// Shifted column reduction of a nonsingular matrix.
#[pyfunction]
fn column_reduce(a: &PyPolyMat, s: Vec<i64>) -> PyResult<PyPolyMat> {
    ph::column_reduce(&a.inner, &shift(s)).map(wrap).map_err(to_py)
}

/// Degree-smoothed matrix with the same determinant.
#[pyfunction]
fn smooth(a: &PyPolyMat) -> PyResult<PyPolyMat> {
    ph::smooth(&a.inner).map(|(c, _)| wrap(c)).map_err(to_py)
}

/// Hermite form by plain Euclidean elimination (small matrices only).
#[pyfunction]
fn hermite_oracle(a: &PyPolyMat) -> PyResult<PyPolyMat> {
    ph::oracle::hermite_oracle(&a.inner).map(wrap).map_err(to_py)
}

/// Determinant by cofactor expansion (small matrices only).
#[pyfunction]
fn det_oracle(a: &PyPolyMat) -> PyResult<Vec<u64>> {
    ph::oracle::det_oracle(&a.inner).map(|d| coeffs(&d)).map_err(to_py)
}

#[pymodule]
fn polyhermite(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolyMat>()?;
    m.add("SingularError", m.py().get_type::<SingularError>())?;
    m.add_function(wrap_pyfunction!(hermite, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_diagonal, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_known_degree, m)?)?;
    m.add_function(wrap_pyfunction!(is_hermite, m)?)?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_basis, m)?)?;
    m.add_function(wrap_pyfunction!(column_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(smooth, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(det_oracle, m)?)?;
    Ok(())
}
