//! Report structures shared by the text and JSON output paths.
//!
//! All node and class indices in reports are 1-based, matching the usual
//! mathematical numbering of matrix coordinates.

use std::fmt::Write as _;

use serde::Serialize;

use zeq_core::linalg::{kleene_star_with, star_apply_with, SeriesParams, StarOutcome};
use zeq_core::semiring::SemiringId;
use zeq_core::spectral::{eigenbasis, spectral_data, spectral_radius, EigenBasis};
use zeq_core::structure::FrobeniusForm;
use zeq_core::zsolver::{decompose_with, solve_report_with, ZProblem};
use zeq_core::{Matrix, Vector};

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn rows_of(m: &Matrix) -> Vec<Vec<f64>> {
    let n = m.n();
    (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).collect())
        .collect()
}

fn fmt_set(indices: &[usize]) -> String {
    let mut s = String::from("{");
    for (k, i) in indices.iter().enumerate() {
        if k > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{i}");
    }
    s.push('}');
    s
}

fn fmt_vec(entries: &[f64]) -> String {
    let mut s = String::from("(");
    for (k, v) in entries.iter().enumerate() {
        if k > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{v}");
    }
    s.push(')');
    s
}

// ------------------------------------------------------------------- solve

#[derive(Serialize)]
pub struct BasisOut {
    pub lambda: f64,
    /// 1-based critical nodes whose star columns generate the eigenvectors.
    pub representatives: Vec<usize>,
    pub columns: Vec<Vec<f64>>,
}

impl BasisOut {
    fn from_basis(b: &EigenBasis) -> Self {
        BasisOut {
            lambda: b.lambda,
            representatives: one_based(&b.representatives),
            columns: b.columns.iter().map(|c| c.as_slice().to_vec()).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SolveOut {
    pub semiring: &'static str,
    pub lambda: f64,
    pub solvable: bool,
    pub rho_bar: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub j_classes: Vec<usize>,
    pub j_nodes: Vec<usize>,
    pub borderline: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub least: Option<Vec<f64>>,
    pub unique: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisOut>,
    pub warnings: Vec<String>,
}

pub fn solve(p: &ZProblem, params: &SeriesParams) -> SolveOut {
    let r = solve_report_with(p, params);
    let reason = if r.solvable {
        None
    } else if p.lambda() == 0.0 {
        Some("lambda=0 requires b=0".into())
    } else if p.context() == SemiringId::Nonnegative {
        Some(format!("rho_bar={} >= lambda={}", r.rho_bar, p.lambda()))
    } else {
        Some(format!("rho_bar={} > lambda={}", r.rho_bar, p.lambda()))
    };
    SolveOut {
        semiring: p.context().name(),
        lambda: p.lambda(),
        solvable: r.solvable,
        rho_bar: r.rho_bar,
        reason,
        j_classes: one_based(&r.j_classes),
        j_nodes: one_based(&r.j_nodes),
        borderline: r.borderline,
        least: r.least.map(|v| v.as_slice().to_vec()),
        unique: r.unique,
        basis: r.basis.as_ref().map(BasisOut::from_basis),
        warnings: r.warnings,
    }
}

pub fn render_solve(o: &SolveOut) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "semiring: {}", o.semiring);
    let _ = writeln!(s, "lambda: {}", o.lambda);
    let _ = writeln!(s, "solvable: {}", if o.solvable { "yes" } else { "no" });
    if let Some(reason) = &o.reason {
        let _ = writeln!(s, "reason: {reason}");
    }
    let _ = writeln!(s, "rho_bar: {}", o.rho_bar);
    let _ = writeln!(s, "J classes: {}", fmt_set(&o.j_classes));
    let _ = writeln!(s, "J nodes: {}", fmt_set(&o.j_nodes));
    if let Some(least) = &o.least {
        let _ = writeln!(s, "least solution: {}", fmt_vec(least));
    }
    if o.solvable {
        let _ = writeln!(s, "unique: {}", if o.unique { "yes" } else { "no" });
    }
    if let Some(basis) = &o.basis {
        let _ = writeln!(
            s,
            "basis at {} (columns from nodes {}):",
            basis.lambda,
            fmt_set(&basis.representatives)
        );
        for col in &basis.columns {
            let _ = writeln!(s, "  {}", fmt_vec(col));
        }
    }
    for w in &o.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

// ---------------------------------------------------------------- spectrum

#[derive(Serialize)]
pub struct ClassOut {
    /// 1-based class index in normal-form order.
    pub index: usize,
    /// 1-based node indices of the class.
    pub nodes: Vec<usize>,
    pub root: f64,
}

#[derive(Serialize)]
pub struct EigOut {
    pub lambda: f64,
    /// 1-based indices of the spectral classes of this eigenvalue.
    pub spectral_classes: Vec<usize>,
}

#[derive(Serialize)]
pub struct SpectrumOut {
    pub semiring: &'static str,
    pub classes: Vec<ClassOut>,
    pub rho: f64,
    pub lambda_set: Vec<f64>,
    pub eigenvalues: Vec<EigOut>,
    /// One basis per positive eigenvalue (`max-times` only).
    pub bases: Vec<BasisOut>,
}

pub fn spectrum(a: &Matrix) -> Result<SpectrumOut, String> {
    match a.context() {
        SemiringId::MaxTimes | SemiringId::Nonnegative => {}
        _ => return Err("spectral analysis unsupported for this semiring".into()),
    }
    let sd = spectral_data(a).map_err(|e| e.to_string())?;
    let classes = sd
        .fnf
        .classes()
        .iter()
        .enumerate()
        .map(|(k, nodes)| ClassOut {
            index: k + 1,
            nodes: one_based(nodes),
            root: sd.class_rho[k],
        })
        .collect();
    let eigenvalues: Vec<EigOut> = sd
        .eigenvalues
        .iter()
        .map(|e| EigOut {
            lambda: e.lambda,
            spectral_classes: one_based(&e.spectral_classes),
        })
        .collect();
    let mut bases = Vec::new();
    if a.context() == SemiringId::MaxTimes {
        for info in &sd.eigenvalues {
            if info.lambda > 0.0 {
                let b = eigenbasis(a, info.lambda).map_err(|e| e.to_string())?;
                bases.push(BasisOut::from_basis(&b));
            }
        }
    }
    Ok(SpectrumOut {
        semiring: a.context().name(),
        classes,
        rho: sd.rho,
        lambda_set: sd.lambdas(),
        eigenvalues,
        bases,
    })
}

pub fn render_spectrum(o: &SpectrumOut) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "semiring: {}", o.semiring);
    let _ = writeln!(s, "classes: {}", o.classes.len());
    for c in &o.classes {
        let _ = writeln!(
            s,
            "  class {}: nodes {}, root {}",
            c.index,
            fmt_set(&c.nodes),
            c.root
        );
    }
    let _ = writeln!(s, "rho: {}", o.rho);
    let lambdas: Vec<String> = o.lambda_set.iter().map(|l| l.to_string()).collect();
    let _ = writeln!(s, "Lambda: {{{}}}", lambdas.join(", "));
    for e in &o.eigenvalues {
        let _ = writeln!(
            s,
            "spectral at {}: classes {}",
            e.lambda,
            fmt_set(&e.spectral_classes)
        );
    }
    for b in &o.bases {
        let _ = writeln!(
            s,
            "basis at {} (columns from nodes {}):",
            b.lambda,
            fmt_set(&b.representatives)
        );
        for col in &b.columns {
            let _ = writeln!(s, "  {}", fmt_vec(col));
        }
    }
    s
}

// --------------------------------------------------------------------- fnf

#[derive(Serialize)]
pub struct FnfOut {
    pub semiring: &'static str,
    /// 1-based node indices per class, normal-form order.
    pub classes: Vec<Vec<usize>>,
    /// Per-class roots; absent for the bounded-lattice instances.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_roots: Option<Vec<f64>>,
    /// Original 1-based node indices in permuted order.
    pub permutation: Vec<usize>,
    /// Arcs of the reduced graph between distinct classes, 1-based.
    pub arcs: Vec<[usize; 2]>,
}

pub fn fnf(a: &Matrix) -> Result<FnfOut, String> {
    let form = FrobeniusForm::of(a);
    let class_roots = match a.context() {
        SemiringId::MaxTimes | SemiringId::Nonnegative => {
            let sd = spectral_data(a).map_err(|e| e.to_string())?;
            Some(sd.class_rho)
        }
        _ => None,
    };
    let arcs = form
        .reduced_edges()
        .filter(|&(i, j)| i != j)
        .map(|(i, j)| [i + 1, j + 1])
        .collect();
    Ok(FnfOut {
        semiring: a.context().name(),
        classes: form.classes().iter().map(|c| one_based(c)).collect(),
        class_roots,
        permutation: one_based(form.permutation()),
        arcs,
    })
}

pub fn render_fnf(o: &FnfOut) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "semiring: {}", o.semiring);
    let _ = writeln!(s, "classes: {}", o.classes.len());
    for (k, nodes) in o.classes.iter().enumerate() {
        match &o.class_roots {
            Some(roots) => {
                let _ = writeln!(
                    s,
                    "  class {}: nodes {}, root {}",
                    k + 1,
                    fmt_set(nodes),
                    roots[k]
                );
            }
            None => {
                let _ = writeln!(s, "  class {}: nodes {}", k + 1, fmt_set(nodes));
            }
        }
    }
    let perm: Vec<String> = o.permutation.iter().map(|i| i.to_string()).collect();
    let _ = writeln!(s, "permutation: ({})", perm.join(", "));
    if o.arcs.is_empty() {
        let _ = writeln!(s, "reduced arcs: none");
    } else {
        let arcs: Vec<String> = o.arcs.iter().map(|[i, j]| format!("{i}->{j}")).collect();
        let _ = writeln!(s, "reduced arcs: {}", arcs.join(", "));
    }
    s
}

// -------------------------------------------------------------------- star

#[derive(Serialize)]
pub struct ApplyOut {
    pub converged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Serialize)]
pub struct StarOut {
    pub semiring: &'static str,
    /// Maximum cycle mean or Perron root; absent for lattice instances
    /// (their closures always converge).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    pub converged: bool,
    pub iterations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<Vec<Vec<f64>>>,
    /// The series `A*b`, when the file provides `b`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apply: Option<ApplyOut>,
}

pub fn star(a: &Matrix, b: Option<&Vector>, params: &SeriesParams) -> Result<StarOut, String> {
    let radius = match a.context() {
        SemiringId::MaxTimes | SemiringId::Nonnegative => {
            Some(spectral_radius(a).map_err(|e| e.to_string())?)
        }
        _ => None,
    };
    let result = kleene_star_with(a, params);
    let apply = b
        .map(|b| {
            let out = match star_apply_with(a, b, params).map_err(|e| e.to_string())? {
                StarOutcome::Converged { value, iterations } => ApplyOut {
                    converged: true,
                    iterations: Some(iterations),
                    value: Some(value.as_slice().to_vec()),
                    reason: None,
                },
                StarOutcome::Diverged { reason } => ApplyOut {
                    converged: false,
                    iterations: None,
                    value: None,
                    reason: Some(reason.to_string()),
                },
            };
            Ok::<ApplyOut, String>(out)
        })
        .transpose()?;
    Ok(StarOut {
        semiring: a.context().name(),
        radius,
        converged: result.converged,
        iterations: result.iterations,
        closure: result.closure.as_ref().map(rows_of),
        apply,
    })
}

pub fn render_star(o: &StarOut) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "semiring: {}", o.semiring);
    if let Some(r) = o.radius {
        let _ = writeln!(s, "spectral radius: {r}");
    }
    match &o.closure {
        Some(rows) => {
            let _ = writeln!(s, "closure ({} iterations):", o.iterations);
            for row in rows {
                let _ = writeln!(s, "{}", fmt_vec(row));
            }
        }
        None => {
            let bound = if o.semiring == "nonnegative" {
                "spectral radius < 1"
            } else {
                "spectral radius <= 1"
            };
            let _ = writeln!(s, "closure: diverged (convergence requires {bound})");
        }
    }
    if let Some(apply) = &o.apply {
        match (&apply.value, &apply.reason) {
            (Some(value), _) => {
                let _ = writeln!(
                    s,
                    "A*b ({} iterations): {}",
                    apply.iterations.unwrap_or(0),
                    fmt_vec(value)
                );
            }
            (None, reason) => {
                let _ = writeln!(
                    s,
                    "A*b: diverged ({})",
                    reason.as_deref().unwrap_or("no reason")
                );
            }
        }
    }
    s
}

// --------------------------------------------------------------- decompose

#[derive(Serialize)]
pub struct DecomposeOut {
    pub semiring: &'static str,
    pub lambda: f64,
    pub least: Vec<f64>,
    pub eigen: Vec<f64>,
}

pub fn decompose(p: &ZProblem, x: &Vector, params: &SeriesParams) -> Result<DecomposeOut, String> {
    let d = decompose_with(p, x, params).map_err(|e| e.to_string())?;
    Ok(DecomposeOut {
        semiring: p.context().name(),
        lambda: p.lambda(),
        least: d.least.as_slice().to_vec(),
        eigen: d.eigen.as_slice().to_vec(),
    })
}

pub fn render_decompose(o: &DecomposeOut) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "semiring: {}", o.semiring);
    let _ = writeln!(s, "lambda: {}", o.lambda);
    let _ = writeln!(s, "least part: {}", fmt_vec(&o.least));
    let _ = writeln!(s, "eigen part: {}", fmt_vec(&o.eigen));
    s
}
