//! Python bindings for the `zeq-core` semiring linear-algebra library.
//!
//! The module mirrors the Rust API with plain-data result classes. All node
//! and class indices are 0-based, matching Python conventions (the `zeq`
//! command-line tool prints 1-based indices instead).
//!
//! ```text
//! import zeq
//! a = zeq.Matrix("max-times", [[0.0, 2.0], [0.5, 0.0]])
//! r = zeq.solve(a, b=[1.0, 0.0], lam=2.0)
//! ```

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use zeq_core::linalg::SeriesParams;
use zeq_core::semiring::SemiringId;
use zeq_core::{linalg, spectral, structure, zsolver, Error, StarOutcome};

/// Maps library errors onto Python exception types: bad inputs become
/// `ValueError`, internal failures become `RuntimeError`.
fn pyerr(e: Error) -> PyErr {
    match e {
        Error::Diverged | Error::OracleRefused(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_id(semiring: &str) -> PyResult<SemiringId> {
    SemiringId::parse(semiring).map_err(pyerr)
}

fn series_params(tolerance: Option<f64>) -> SeriesParams {
    let mut p = SeriesParams::default();
    if let Some(t) = tolerance {
        p.tolerance = t;
    }
    p
}

fn rows_of(m: &zeq_core::Matrix) -> Vec<Vec<f64>> {
    let n = m.n();
    (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect()
}

fn to_vector(ctx: SemiringId, entries: Vec<f64>) -> PyResult<zeq_core::Vector> {
    zeq_core::Vector::new(ctx, entries).map_err(pyerr)
}

/// Builds the right-hand side, defaulting to the zero vector.
fn rhs(ctx: SemiringId, n: usize, b: Option<Vec<f64>>) -> PyResult<zeq_core::Vector> {
    to_vector(ctx, b.unwrap_or_else(|| vec![0.0; n]))
}

fn problem(a: &Matrix, b: Option<Vec<f64>>, lam: f64) -> PyResult<zsolver::ZProblem> {
    let ctx = a.inner.context();
    let b = rhs(ctx, a.inner.n(), b)?;
    zsolver::ZProblem::new(a.inner.clone(), b, lam).map_err(pyerr)
}

/// A square matrix with entries validated against one of the semirings
/// `max-times`, `nonnegative`, `max-min` or `lukasiewicz`.
#[pyclass(frozen, module = "zeq")]
struct Matrix {
    inner: zeq_core::Matrix,
}

#[pymethods]
impl Matrix {
    #[new]
    fn new(semiring: &str, rows: Vec<Vec<f64>>) -> PyResult<Self> {
        let ctx = parse_id(semiring)?;
        Ok(Matrix {
            inner: zeq_core::Matrix::new(ctx, rows).map_err(pyerr)?,
        })
    }

    /// The semiring id this matrix lives in.
    #[getter]
    fn semiring(&self) -> String {
        self.inner.context().to_string()
    }

    /// Dimension of the (square) matrix.
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Entries as a list of rows.
    fn rows(&self) -> Vec<Vec<f64>> {
        rows_of(&self.inner)
    }

    /// Matrix–vector product `A ⊗ x` in the matrix's semiring.
    fn apply(&self, x: Vec<f64>) -> PyResult<Vec<f64>> {
        let v = to_vector(self.inner.context(), x)?;
        Ok(self.inner.apply(&v).map_err(pyerr)?.as_slice().to_vec())
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?}, n={})", self.semiring(), self.inner.n())
    }
}

/// Generators of the eigenvector part of the solution set at one eigenvalue.
#[pyclass(get_all, frozen, skip_from_py_object, module = "zeq")]
#[derive(Clone)]
struct Basis {
    /// The eigenvalue the columns belong to.
    eigenvalue: f64,
    /// Node whose star column produced each basis vector.
    representatives: Vec<usize>,
    /// The basis vectors themselves.
    columns: Vec<Vec<f64>>,
}

impl Basis {
    fn from_core(b: &spectral::EigenBasis) -> Self {
        Basis {
            eigenvalue: b.lambda,
            representatives: b.representatives.clone(),
            columns: b.columns.iter().map(|c| c.as_slice().to_vec()).collect(),
        }
    }

    fn to_core(&self, ctx: SemiringId) -> PyResult<spectral::EigenBasis> {
        let columns = self
            .columns
            .iter()
            .map(|c| to_vector(ctx, c.clone()))
            .collect::<PyResult<Vec<_>>>()?;
        spectral::EigenBasis::from_columns(self.eigenvalue, columns).map_err(pyerr)
    }
}

/// Solvability certificate, least solution and solution-set generators for
/// one problem `λx = Ax ⊕ b`.
#[pyclass(get_all, frozen, module = "zeq")]
struct SolveResult {
    solvable: bool,
    /// Largest class root among classes accessing the support of `b`.
    rho_bar: f64,
    /// Classes accessing the support of `b` (indices into `fnf().classes`).
    j_classes: Vec<usize>,
    /// Nodes of those classes: the support of the least solution.
    j_nodes: Vec<usize>,
    /// True when the strict comparison could not be certified at working
    /// precision (`nonnegative` only).
    borderline: bool,
    /// The least solution, present iff solvable and the series stabilized.
    least: Option<Vec<f64>>,
    /// True iff the least solution is the only solution.
    unique: bool,
    /// Eigenvector generators (`max-times` at a positive eigenvalue only).
    basis: Option<Basis>,
    warnings: Vec<String>,
}

/// Irreducible-class structure of the matrix digraph.
#[pyclass(get_all, frozen, module = "zeq")]
struct Fnf {
    /// Nodes of each class, in normal-form (lower block triangular) order.
    classes: Vec<Vec<usize>>,
    /// Class index of every node.
    class_of: Vec<usize>,
    /// Node order that realizes the block-triangular form.
    permutation: Vec<usize>,
    /// Arcs of the reduced digraph between distinct classes.
    arcs: Vec<(usize, usize)>,
    /// Spectral root of each class (`max-times`/`nonnegative` only).
    class_roots: Option<Vec<f64>>,
}

/// One eigenvalue together with the classes that certify it.
#[pyclass(get_all, frozen, skip_from_py_object, module = "zeq")]
#[derive(Clone)]
struct Eigenvalue {
    value: f64,
    /// Classes whose root equals `value` and whose spectral condition holds.
    spectral_classes: Vec<usize>,
}

/// Eigenvalue set and per-class roots of the matrix.
#[pyclass(get_all, frozen, module = "zeq")]
struct Spectrum {
    /// Spectral root of each class, in normal-form order.
    class_roots: Vec<f64>,
    /// The overall spectral radius (largest class root).
    rho: f64,
    eigenvalues: Vec<Eigenvalue>,
    /// Eigenvector generators per positive eigenvalue (`max-times` only).
    bases: Vec<Basis>,
}

/// Result of the Kleene star `A* = I ⊕ A ⊕ A² ⊕ …`.
#[pyclass(get_all, frozen, module = "zeq")]
struct Star {
    converged: bool,
    iterations: usize,
    /// The closure matrix when the series converges.
    closure: Option<Vec<Vec<f64>>>,
}

/// Result of the star–vector series `A*b = b ⊕ Ab ⊕ A²b ⊕ …`.
#[pyclass(get_all, frozen, module = "zeq")]
struct ApplyResult {
    converged: bool,
    iterations: Option<usize>,
    value: Option<Vec<f64>>,
    /// Why the series diverged, when it did.
    reason: Option<String>,
}

/// A solution split as `least ⊕ eigen` with `eigen` an eigenvector or zero.
#[pyclass(get_all, frozen, module = "zeq")]
struct Split {
    least: Vec<f64>,
    eigen: Vec<f64>,
}

/// Solves `λx = Ax ⊕ b`, returning the full report.
///
/// `b` defaults to the zero vector and `lam` to 1. `tolerance` tunes the
/// series stop criterion for the `nonnegative` instance.
#[pyfunction]
#[pyo3(signature = (a, b=None, lam=1.0, tolerance=None))]
fn solve(a: &Matrix, b: Option<Vec<f64>>, lam: f64, tolerance: Option<f64>) -> PyResult<SolveResult> {
    let p = problem(a, b, lam)?;
    let report = zsolver::solve_report_with(&p, &series_params(tolerance));
    Ok(SolveResult {
        solvable: report.solvable,
        rho_bar: report.rho_bar,
        j_classes: report.j_classes,
        j_nodes: report.j_nodes,
        borderline: report.borderline,
        least: report.least.map(|v| v.as_slice().to_vec()),
        unique: report.unique,
        basis: report.basis.as_ref().map(Basis::from_core),
        warnings: report.warnings,
    })
}

/// Checks whether `x` satisfies `λx = Ax ⊕ b` exactly.
#[pyfunction]
#[pyo3(signature = (a, x, b=None, lam=1.0))]
fn is_solution(a: &Matrix, x: Vec<f64>, b: Option<Vec<f64>>, lam: f64) -> PyResult<bool> {
    let p = problem(a, b, lam)?;
    let x = to_vector(a.inner.context(), x)?;
    zsolver::is_solution(&p, &x).map_err(pyerr)
}

/// Class structure of the matrix digraph in block lower-triangular order.
#[pyfunction]
fn fnf(a: &Matrix) -> PyResult<Fnf> {
    let f = structure::FrobeniusForm::of(&a.inner);
    let ctx = a.inner.context();
    let class_roots = match ctx {
        SemiringId::MaxTimes | SemiringId::Nonnegative => {
            Some(spectral::spectral_data(&a.inner).map_err(pyerr)?.class_rho)
        }
        _ => None,
    };
    Ok(Fnf {
        classes: f.classes().to_vec(),
        class_of: (0..f.n()).map(|i| f.class_of(i)).collect(),
        permutation: f.permutation().to_vec(),
        arcs: f.reduced_edges().filter(|&(i, j)| i != j).collect(),
        class_roots,
    })
}

/// Eigenvalue set, class roots and (for `max-times`) eigenvector bases.
///
/// Raises `ValueError` for the lattice instances, whose spectral theory is
/// not covered by this library.
#[pyfunction]
fn spectrum(a: &Matrix) -> PyResult<Spectrum> {
    let data = spectral::spectral_data(&a.inner).map_err(pyerr)?;
    let eigenvalues = data
        .eigenvalues
        .iter()
        .map(|info| Eigenvalue {
            value: info.lambda,
            spectral_classes: info.spectral_classes.clone(),
        })
        .collect();
    let mut bases = Vec::new();
    if a.inner.context() == SemiringId::MaxTimes {
        for info in &data.eigenvalues {
            if info.lambda > 0.0 {
                let b = spectral::eigenbasis(&a.inner, info.lambda).map_err(pyerr)?;
                bases.push(Basis::from_core(&b));
            }
        }
    }
    Ok(Spectrum {
        class_roots: data.class_rho.clone(),
        rho: data.rho,
        eigenvalues,
        bases,
    })
}

/// Eigenvector generators for one positive eigenvalue (`max-times` only).
#[pyfunction]
fn eigenbasis(a: &Matrix, lam: f64) -> PyResult<Basis> {
    let b = spectral::eigenbasis(&a.inner, lam).map_err(pyerr)?;
    Ok(Basis::from_core(&b))
}

/// Kleene star `A*`; `converged` is false when the series diverges.
#[pyfunction]
#[pyo3(signature = (a, tolerance=None))]
fn star(a: &Matrix, tolerance: Option<f64>) -> Star {
    let r = linalg::kleene_star_with(&a.inner, &series_params(tolerance));
    Star {
        converged: r.converged,
        iterations: r.iterations,
        closure: r.closure.as_ref().map(rows_of),
    }
}

/// Star–vector series `A*b`; may converge even when `A*` itself diverges.
#[pyfunction]
#[pyo3(signature = (a, b, tolerance=None))]
fn star_apply(a: &Matrix, b: Vec<f64>, tolerance: Option<f64>) -> PyResult<ApplyResult> {
    let b = to_vector(a.inner.context(), b)?;
    let out = linalg::star_apply_with(&a.inner, &b, &series_params(tolerance)).map_err(pyerr)?;
    Ok(match out {
        StarOutcome::Converged { value, iterations } => ApplyResult {
            converged: true,
            iterations: Some(iterations),
            value: Some(value.as_slice().to_vec()),
            reason: None,
        },
        StarOutcome::Diverged { reason } => ApplyResult {
            converged: false,
            iterations: None,
            value: None,
            reason: Some(reason.to_string()),
        },
    })
}

/// Splits a known solution `x` of `λx = Ax ⊕ b` as `least ⊕ eigen`.
///
/// Raises `ValueError` when `x` does not solve the equation.
#[pyfunction]
#[pyo3(signature = (a, x, b=None, lam=1.0, tolerance=None))]
fn decompose(
    a: &Matrix,
    x: Vec<f64>,
    b: Option<Vec<f64>>,
    lam: f64,
    tolerance: Option<f64>,
) -> PyResult<Split> {
    let p = problem(a, b, lam)?;
    let x = to_vector(a.inner.context(), x)?;
    let d = zsolver::decompose_with(&p, &x, &series_params(tolerance)).map_err(pyerr)?;
    Ok(Split {
        least: d.least.as_slice().to_vec(),
        eigen: d.eigen.as_slice().to_vec(),
    })
}

/// Builds the solution `x0 ⊕ ⊕_k coeffs[k] ⊗ basis.columns[k]`.
#[pyfunction]
fn combine(semiring: &str, x0: Vec<f64>, coeffs: Vec<f64>, basis: &Basis) -> PyResult<Vec<f64>> {
    let ctx = parse_id(semiring)?;
    let x0 = to_vector(ctx, x0)?;
    let basis = basis.to_core(ctx)?;
    let y = zsolver::combine(&x0, &coeffs, &basis).map_err(pyerr)?;
    Ok(y.as_slice().to_vec())
}

/// Least `v` with `x = u ⊕ v`, assuming `u ≤ x` componentwise.
#[pyfunction]
fn least_residual(semiring: &str, x: Vec<f64>, u: Vec<f64>) -> PyResult<Vec<f64>> {
    let ctx = parse_id(semiring)?;
    let x = to_vector(ctx, x)?;
    let u = to_vector(ctx, u)?;
    let v = zsolver::least_residual(&x, &u).map_err(pyerr)?;
    Ok(v.as_slice().to_vec())
}

#[pymodule]
fn zeq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Matrix>()?;
    m.add_class::<Basis>()?;
    m.add_class::<SolveResult>()?;
    m.add_class::<Fnf>()?;
    m.add_class::<Eigenvalue>()?;
    m.add_class::<Spectrum>()?;
    m.add_class::<Star>()?;
    m.add_class::<ApplyResult>()?;
    m.add_class::<Split>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(is_solution, m)?)?;
    m.add_function(wrap_pyfunction!(fnf, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(eigenbasis, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(star_apply, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(combine, m)?)?;
    m.add_function(wrap_pyfunction!(least_residual, m)?)?;
    m.add("SEMIRINGS", ["max-times", "nonnegative", "max-min", "lukasiewicz"])?;
    Ok(())
}
