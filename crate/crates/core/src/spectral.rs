//! Spectral data of matrices over the two multiplicative instances:
//! maximum cycle geometric means (`max-times`), Perron roots
//! (`nonnegative`), eigenvalue sets with their spectral classes, critical
//! graphs and eigenvector bases.
//!
//! The lattice instances have no comparable spectral theory here; their
//! operations return [`Error::Unsupported`].

use std::collections::BTreeSet;

use crate::approx::{le_rel, lt_rel, rel_close};
use crate::error::Error;
use crate::linalg::{star_truncated, Matrix, Vector};
use crate::semiring::SemiringId;
use crate::structure::{Digraph, FrobeniusForm};
use crate::Result;

/// Tolerance on log-domain cycle-mean comparisons.
const LOG_TOL: f64 = 1e-12;

/// `p^(1/k)` with the exactly-rounded paths preferred.
fn nth_root(p: f64, k: usize) -> f64 {
    match k {
        1 => p,
        2 => p.sqrt(),
        _ => {
            if p == 0.0 || p == 1.0 {
                p
            } else {
                p.powf(1.0 / k as f64)
            }
        }
    }
}

/// Geometric mean of the cycle `seq[p..=q]` (local indices into `comp`),
/// computed in the value domain when the product stays finite.
fn cycle_mean(a: &Matrix, comp: &[usize], seq: &[usize], p: usize, q: usize) -> f64 {
    let len = q - p;
    let mut product = 1.0f64;
    for t in p..q {
        product *= a.get(comp[seq[t]], comp[seq[t + 1]]);
    }
    if product.is_finite() && product > 0.0 {
        nth_root(product, len)
    } else {
        let mut log_sum = 0.0f64;
        for t in p..q {
            log_sum += a.get(comp[seq[t]], comp[seq[t + 1]]).ln();
        }
        (log_sum / len as f64).exp()
    }
}

/// Maximum cycle geometric mean inside one strongly connected component,
/// by Karp's dynamic program on logarithms followed by extraction of a
/// critical cycle whose mean is then recomputed in the value domain.
fn cycle_mean_scc(a: &Matrix, comp: &[usize]) -> f64 {
    let nc = comp.len();
    if nc == 1 {
        // Only the (possible) self-loop.
        return a.get(comp[0], comp[0]);
    }
    // Local log-weight table; absent arcs are -inf.
    let w: Vec<Vec<f64>> = comp
        .iter()
        .map(|&u| {
            comp.iter()
                .map(|&v| {
                    let e = a.get(u, v);
                    if e == 0.0 {
                        f64::NEG_INFINITY
                    } else {
                        e.ln()
                    }
                })
                .collect()
        })
        .collect();

    // f[k][v] = best log-weight of a length-k walk from node 0 to v.
    let mut f = vec![vec![f64::NEG_INFINITY; nc]; nc + 1];
    let mut pred = vec![vec![usize::MAX; nc]; nc + 1];
    f[0][0] = 0.0;
    for k in 1..=nc {
        for v in 0..nc {
            for u in 0..nc {
                if f[k - 1][u] == f64::NEG_INFINITY || w[u][v] == f64::NEG_INFINITY {
                    continue;
                }
                let cand = f[k - 1][u] + w[u][v];
                if cand > f[k][v] {
                    f[k][v] = cand;
                    pred[k][v] = u;
                }
            }
        }
    }

    // rho_log = max over v of min over k of (f[nc][v] − f[k][v]) / (nc − k).
    let mut rho_log = f64::NEG_INFINITY;
    let mut arg = usize::MAX;
    for v in 0..nc {
        if f[nc][v] == f64::NEG_INFINITY {
            continue;
        }
        let mut worst = f64::INFINITY;
        for k in 0..nc {
            if f[k][v] == f64::NEG_INFINITY {
                continue;
            }
            let ratio = (f[nc][v] - f[k][v]) / (nc - k) as f64;
            if ratio < worst {
                worst = ratio;
            }
        }
        if worst > rho_log {
            rho_log = worst;
            arg = v;
        }
    }
    debug_assert!(arg != usize::MAX, "strongly connected block has walks");

    // Walk back the optimal length-nc walk and take the best cycle on it.
    let mut seq = vec![0usize; nc + 1];
    seq[nc] = arg;
    for k in (1..=nc).rev() {
        seq[k - 1] = pred[k][seq[k]];
    }
    let mut best: Option<f64> = None;
    loop {
        let mut last = vec![usize::MAX; nc];
        let mut repeat = None;
        for (q, &node) in seq.iter().enumerate() {
            if last[node] != usize::MAX {
                repeat = Some((last[node], q));
                break;
            }
            last[node] = q;
        }
        let Some((p, q)) = repeat else { break };
        let mean = cycle_mean(a, comp, &seq, p, q);
        best = Some(best.map_or(mean, |b: f64| b.max(mean)));
        seq.drain(p + 1..=q);
    }
    match best {
        // Accept the value-domain mean when it agrees with Karp's bound;
        // this recovers exact dyadic boundary values like 1 or 2.
        Some(m) if (m.ln() - rho_log).abs() <= 1e-9 => m,
        _ => rho_log.exp(),
    }
}

/// Maximum cycle geometric mean of a `max-times` matrix; `0` iff the
/// digraph is acyclic. Computed per strongly connected component.
pub fn max_cycle_mean(a: &Matrix) -> Result<f64> {
    if a.context() != SemiringId::MaxTimes {
        return Err(Error::Unsupported {
            semiring: a.context(),
            what: "maximum cycle mean",
        });
    }
    let comps = Digraph::from_matrix(a).tarjan_scc();
    Ok(comps
        .iter()
        .map(|c| cycle_mean_scc(a, c))
        .fold(0.0, f64::max))
}

/// Perron root of an irreducible `nonnegative` block.
///
/// Power iteration on `A + sI` where `s` is the maximum row sum: the shift
/// makes the block primitive with a usable spectral gap and moves the
/// Perron root by exactly `s`. Collatz–Wielandt ratios bound the root from
/// both sides; iteration stops at relative width `1e-10` (cap `1e5`).
pub fn perron_root(a: &Matrix) -> Result<f64> {
    if a.context() != SemiringId::Nonnegative {
        return Err(Error::Unsupported {
            semiring: a.context(),
            what: "Perron root",
        });
    }
    let n = a.n();
    if n == 1 {
        return Ok(a.get(0, 0));
    }
    let shift = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j)).sum::<f64>())
        .fold(0.0f64, f64::max);
    if shift == 0.0 {
        return Ok(0.0);
    }
    let mut x = vec![1.0f64; n];
    let mut mid = shift;
    for _ in 0..100_000 {
        let mut y = vec![0.0f64; n];
        for i in 0..n {
            let mut acc = shift * x[i];
            for j in 0..n {
                acc += a.get(i, j) * x[j];
            }
            y[i] = acc;
        }
        let mut hi = f64::NEG_INFINITY;
        let mut lo = f64::INFINITY;
        for i in 0..n {
            let r = y[i] / x[i];
            hi = hi.max(r);
            lo = lo.min(r);
        }
        mid = 0.5 * (hi + lo);
        if hi - lo <= 1e-10 * hi {
            break;
        }
        let norm = y.iter().fold(0.0f64, |m, &v| m.max(v));
        for v in &mut y {
            *v /= norm;
        }
        x = y;
    }
    Ok((mid - shift).max(0.0))
}

/// Spectral radius used by convergence pre-checks: the maximum cycle mean
/// (`max-times`) or the largest block Perron root (`nonnegative`).
pub fn spectral_radius(a: &Matrix) -> Result<f64> {
    match a.context() {
        SemiringId::MaxTimes => max_cycle_mean(a),
        SemiringId::Nonnegative => {
            let comps = Digraph::from_matrix(a).tarjan_scc();
            let mut rho = 0.0f64;
            for c in &comps {
                rho = rho.max(perron_root(&a.submatrix(c))?);
            }
            Ok(rho)
        }
        other => Err(Error::Unsupported {
            semiring: other,
            what: "spectral radius",
        }),
    }
}

/// One eigenvalue together with the classes that make it one.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueInfo {
    pub lambda: f64,
    /// Class indices (in normal-form order) that are spectral for `lambda`.
    pub spectral_classes: Vec<usize>,
}

/// Per-class roots, the global radius, and the eigenvalue set of a matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    pub fnf: FrobeniusForm,
    /// Root of each class: cycle mean (`max-times`) or Perron root
    /// (`nonnegative`), indexed in normal-form order.
    pub class_rho: Vec<f64>,
    /// Global radius: the maximum of the class roots.
    pub rho: f64,
    /// Eigenvalues ascending, each with its spectral classes.
    pub eigenvalues: Vec<EigenvalueInfo>,
}

impl SpectralData {
    /// The eigenvalue set Λ, ascending.
    pub fn lambdas(&self) -> Vec<f64> {
        self.eigenvalues.iter().map(|e| e.lambda).collect()
    }

    /// Spectral classes of a given eigenvalue, if it is one.
    pub fn spectral_classes_of(&self, lambda: f64) -> Option<&[usize]> {
        self.eigenvalues
            .iter()
            .find(|e| rel_close(e.lambda, lambda, LOG_TOL))
            .map(|e| e.spectral_classes.as_slice())
    }

    pub fn is_eigenvalue(&self, lambda: f64) -> bool {
        self.spectral_classes_of(lambda).is_some()
    }
}

fn class_root(a: &Matrix, class: &[usize]) -> Result<f64> {
    match a.context() {
        SemiringId::MaxTimes => Ok(cycle_mean_scc(a, class)),
        SemiringId::Nonnegative => perron_root(&a.submatrix(class)),
        other => Err(Error::Unsupported {
            semiring: other,
            what: "class roots",
        }),
    }
}

/// Full spectral analysis: normal form, class roots and the eigenvalue set.
///
/// A class is spectral for its own root iff every class accessing it has a
/// root that does not beat it: `ρ_i ≤ ρ_j` for `max-times`, strictly
/// `ρ_i < ρ_j` (distinct classes) for `nonnegative`. The eigenvalue set is
/// exactly the set of roots of spectral classes.
pub fn spectral_data(a: &Matrix) -> Result<SpectralData> {
    let fnf = FrobeniusForm::of(a);
    let class_rho = fnf
        .classes()
        .iter()
        .map(|c| class_root(a, c))
        .collect::<Result<Vec<f64>>>()?;
    let rho = class_rho.iter().copied().fold(0.0, f64::max);
    let strict = a.context() == SemiringId::Nonnegative;

    let r = fnf.class_count();
    let mut spectral = Vec::new();
    for j in 0..r {
        let ok = (0..r).all(|i| {
            if !fnf.class_reaches(i, j) || i == j {
                return true;
            }
            if strict {
                lt_rel(class_rho[i], class_rho[j], 1e-10)
            } else {
                le_rel(class_rho[i], class_rho[j], LOG_TOL)
            }
        });
        if ok {
            spectral.push(j);
        }
    }

    // Group spectral roots into eigenvalues, merging float-equal values.
    let mut by_value: Vec<(f64, usize)> = spectral.iter().map(|&j| (class_rho[j], j)).collect();
    by_value.sort_by(|x, y| x.partial_cmp(y).expect("finite roots"));
    let mut eigenvalues: Vec<EigenvalueInfo> = Vec::new();
    for (value, class) in by_value {
        match eigenvalues.last_mut() {
            Some(last) if rel_close(last.lambda, value, LOG_TOL) => {
                last.spectral_classes.push(class);
            }
            _ => eigenvalues.push(EigenvalueInfo {
                lambda: value,
                spectral_classes: vec![class],
            }),
        }
    }
    for info in &mut eigenvalues {
        info.spectral_classes.sort_unstable();
    }

    Ok(SpectralData {
        fnf,
        class_rho,
        rho,
        eigenvalues,
    })
}

/// Whether `lambda` belongs to the eigenvalue set of `a`.
pub fn is_eigenvalue(a: &Matrix, lambda: f64) -> Result<bool> {
    Ok(spectral_data(a)?.is_eigenvalue(lambda))
}

/// The critical graph of a `max-times` matrix at a positive eigenvalue:
/// all nodes and arcs lying on cycles of geometric mean exactly `lambda`
/// within the principal submatrix spanned by `J(lambda)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalGraph {
    pub lambda: f64,
    /// Classes accessing a spectral class of `lambda` (normal-form indices).
    pub j_classes: Vec<usize>,
    /// Nodes of those classes, ascending.
    pub j_nodes: Vec<usize>,
    /// Critical nodes, ascending.
    pub nodes: Vec<usize>,
    /// Critical arcs, lexicographic.
    pub edges: Vec<(usize, usize)>,
    /// Strongly connected critical components, ordered by smallest node.
    pub components: Vec<Vec<usize>>,
    /// Smallest node of each component, ascending: one representative
    /// eigenvector column per component.
    pub representatives: Vec<usize>,
}

fn critical_graph_from(a: &Matrix, sd: &SpectralData, lambda: f64) -> Result<CriticalGraph> {
    if a.context() != SemiringId::MaxTimes {
        return Err(Error::Unsupported {
            semiring: a.context(),
            what: "critical graphs",
        });
    }
    let Some(spectral_classes) = sd.spectral_classes_of(lambda) else {
        return Err(Error::NotAnEigenvalue { lambda });
    };
    if lambda <= 0.0 {
        return Err(Error::BasisRequiresPositiveLambda);
    }
    let j_classes = sd.fnf.classes_accessing(spectral_classes);
    let j_nodes = sd.fnf.nodes_of_classes(&j_classes);

    // Normalized submatrix embedded at full size: entries a_ij / lambda on
    // J × J, zero elsewhere. All its cycle means are ≤ 1.
    let n = a.n();
    let mut b = Matrix::zeros(SemiringId::MaxTimes, n);
    for &i in &j_nodes {
        for &j in &j_nodes {
            b.set(i, j, a.get(i, j) / lambda);
        }
    }
    let (star, _) = star_truncated(&b);
    let plus = b.mul(&star)?;

    let nodes: Vec<usize> = j_nodes
        .iter()
        .copied()
        .filter(|&i| (plus.get(i, i) - 1.0).abs() <= LOG_TOL)
        .collect();
    let node_set: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut edges = Vec::new();
    for &i in &nodes {
        for &j in &nodes {
            let bij = b.get(i, j);
            if bij > 0.0 && (bij * star.get(j, i) - 1.0).abs() <= LOG_TOL {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();

    let critical = Digraph::from_edges(n, &edges)?;
    let mut components: Vec<Vec<usize>> = critical
        .tarjan_scc()
        .into_iter()
        .filter(|comp| comp.iter().any(|v| node_set.contains(v)))
        .collect();
    components.sort_by_key(|c| c[0]);
    let representatives: Vec<usize> = components.iter().map(|c| c[0]).collect();

    Ok(CriticalGraph {
        lambda,
        j_classes,
        j_nodes,
        nodes,
        edges,
        components,
        representatives,
    })
}

/// See [`CriticalGraph`]. Errors: wrong instance, `lambda` not an
/// eigenvalue, or `lambda = 0` (never invertible).
pub fn critical_graph(a: &Matrix, lambda: f64) -> Result<CriticalGraph> {
    let sd = spectral_data(a)?;
    critical_graph_from(a, &sd, lambda)
}

/// A generating set for the eigenvectors of one eigenvalue: one column per
/// critical component, each a genuine eigenvector (`Aw = λw`).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenBasis {
    pub lambda: f64,
    pub columns: Vec<Vector>,
    /// The critical node whose star column produced each basis vector;
    /// empty for hand-built bases.
    pub representatives: Vec<usize>,
}

impl EigenBasis {
    /// Wraps externally known eigenvectors (all sharing one context and
    /// length) so they can be fed to the combination routines.
    pub fn from_columns(lambda: f64, columns: Vec<Vector>) -> Result<Self> {
        let Some(first) = columns.first() else {
            return Err(Error::InvalidArgument(
                "an eigenbasis needs at least one column".into(),
            ));
        };
        for c in &columns[1..] {
            if c.context() != first.context() {
                return Err(Error::SemiringMismatch {
                    expected: first.context(),
                    found: c.context(),
                });
            }
            if c.len() != first.len() {
                return Err(Error::DimensionMismatch {
                    left: first.len(),
                    right: c.len(),
                });
            }
        }
        Ok(EigenBasis {
            lambda,
            columns,
            representatives: Vec::new(),
        })
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }
}

/// Eigenvector basis of a `max-times` matrix at a positive eigenvalue:
/// the star columns of the `J(λ)`-restricted, `λ`-normalized matrix at one
/// representative node per critical component.
pub fn eigenbasis(a: &Matrix, lambda: f64) -> Result<EigenBasis> {
    let sd = spectral_data(a)?;
    eigenbasis_from(a, &sd, lambda)
}

pub(crate) fn eigenbasis_from(a: &Matrix, sd: &SpectralData, lambda: f64) -> Result<EigenBasis> {
    let cg = critical_graph_from(a, sd, lambda)?;
    let n = a.n();
    let mut b = Matrix::zeros(SemiringId::MaxTimes, n);
    for &i in &cg.j_nodes {
        for &j in &cg.j_nodes {
            b.set(i, j, a.get(i, j) / lambda);
        }
    }
    let (star, _) = star_truncated(&b);
    let columns = cg
        .representatives
        .iter()
        .map(|&t| {
            let mut col = Vector::zeros(SemiringId::MaxTimes, n);
            for i in 0..n {
                col.set(i, star.get(i, t));
            }
            col
        })
        .collect();
    Ok(EigenBasis {
        lambda,
        columns,
        representatives: cg.representatives,
    })
}
