//! Square matrices and vectors over a semiring instance, together with the
//! Kleene star `A* = I ⊕ A ⊕ A² ⊕ …` and the star–vector series `A*b`.
//!
//! Divergence of a star or a series is a regular outcome, not an error:
//! [`kleene_star`] reports it through [`StarResult::converged`] and
//! [`star_apply`] through [`StarOutcome::Diverged`]. Faults (mismatched
//! contexts, wrong dimensions, carrier violations) are `Err` values.

use std::fmt;

use crate::error::Error;
use crate::semiring::SemiringId;
use crate::spectral;
use crate::Result;

/// Dense square matrix tagged with the semiring its entries live in.
///
/// Matrices are immutable once built; every constructor validates that all
/// entries belong to the carrier of the context.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    context: SemiringId,
    // Row-major storage.
    entries: Vec<f64>,
}

/// Dense vector tagged with its semiring instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    context: SemiringId,
    entries: Vec<f64>,
}

impl Matrix {
    /// Builds an `n × n` matrix from rows, validating shape and carrier.
    pub fn new(context: SemiringId, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("matrix must be nonempty".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for &v in row {
                if !context.contains(v) {
                    return Err(Error::OutsideCarrier {
                        value: v,
                        semiring: context,
                    });
                }
                entries.push(v);
            }
        }
        Ok(Matrix {
            n,
            context,
            entries,
        })
    }

    /// The all-zero matrix.
    pub fn zeros(context: SemiringId, n: usize) -> Self {
        Matrix {
            n,
            context,
            entries: vec![0.0; n * n],
        }
    }

    /// The semiring identity matrix (`1̄` on the diagonal, `0̄` elsewhere).
    pub fn identity(context: SemiringId, n: usize) -> Self {
        let mut m = Matrix::zeros(context, n);
        for i in 0..n {
            m.entries[i * n + i] = 1.0;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn context(&self) -> SemiringId {
        self.context
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Copies the matrix out as nested rows.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
    }

    fn same_context(&self, other: SemiringId) -> Result<()> {
        if self.context == other {
            Ok(())
        } else {
            Err(Error::SemiringMismatch {
                expected: self.context,
                found: other,
            })
        }
    }

    fn same_size(&self, other: usize) -> Result<()> {
        if self.n == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other,
            })
        }
    }

    /// Entrywise `self ⊕ other`.
    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_context(other.context)?;
        self.same_size(other.n)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.context.add(a, b))
            .collect();
        Ok(Matrix {
            n: self.n,
            context: self.context,
            entries,
        })
    }

    /// Semiring matrix product `self ⊗ other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_context(other.context)?;
        self.same_size(other.n)?;
        let ctx = self.context;
        let n = self.n;
        let mut out = Matrix::zeros(ctx, n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let term = ctx.mul(aik, other.get(k, j));
                    let cur = out.get(i, j);
                    out.set(i, j, ctx.add(cur, term));
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product `self ⊗ x`.
    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.same_context(x.context)?;
        self.same_size(x.len())?;
        let ctx = self.context;
        let entries = (0..self.n)
            .map(|i| {
                let mut acc = 0.0;
                for j in 0..self.n {
                    let a = self.get(i, j);
                    if a != 0.0 {
                        acc = ctx.add(acc, ctx.mul(a, x.entries[j]));
                    }
                }
                acc
            })
            .collect();
        Ok(Vector {
            context: ctx,
            entries,
        })
    }

    /// `self^k` by repeated products; `k = 0` gives the identity.
    pub fn power(&self, k: usize) -> Matrix {
        let mut acc = Matrix::identity(self.context, self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("same context and size");
        }
        acc
    }

    /// Principal submatrix on the (strictly increasing) index set `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> Matrix {
        let m = idx.len();
        let mut out = Matrix {
            n: m,
            context: self.context,
            entries: vec![0.0; m * m],
        };
        for (r, &i) in idx.iter().enumerate() {
            for (c, &j) in idx.iter().enumerate() {
                out.entries[r * m + c] = self.get(i, j);
            }
        }
        out
    }

    /// Divides every entry by `lambda` (which must be invertible).
    pub fn normalized_by(&self, lambda: f64) -> Result<Matrix> {
        let ctx = self.context;
        let entries = self
            .entries
            .iter()
            .map(|&v| ctx.try_div(v, lambda))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            n: self.n,
            context: ctx,
            entries,
        })
    }
}

impl Vector {
    /// Builds a vector, validating every entry against the carrier.
    pub fn new(context: SemiringId, entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("vector must be nonempty".into()));
        }
        for &v in &entries {
            if !context.contains(v) {
                return Err(Error::OutsideCarrier {
                    value: v,
                    semiring: context,
                });
            }
        }
        Ok(Vector { context, entries })
    }

    /// The all-zero vector.
    pub fn zeros(context: SemiringId, n: usize) -> Self {
        Vector {
            context,
            entries: vec![0.0; n],
        }
    }

    /// The unit vector `e_i` (multiplicative identity at position `i`).
    pub fn unit(context: SemiringId, n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::InvalidArgument(format!(
                "unit index {i} out of range for length {n}"
            )));
        }
        let mut v = Vector::zeros(context, n);
        v.entries[i] = 1.0;
        Ok(v)
    }

    pub fn context(&self) -> SemiringId {
        self.context
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.entries[i]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub(crate) fn set(&mut self, i: usize, v: f64) {
        self.entries[i] = v;
    }

    /// Componentwise `self ⊕ other`.
    pub fn add(&self, other: &Vector) -> Result<Vector> {
        if self.context != other.context {
            return Err(Error::SemiringMismatch {
                expected: self.context,
                found: other.context,
            });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.context.add(a, b))
            .collect();
        Ok(Vector {
            context: self.context,
            entries,
        })
    }

    /// Scales every component by `alpha` (a carrier value) using ⊗.
    pub fn scale(&self, alpha: f64) -> Result<Vector> {
        if !self.context.contains(alpha) {
            return Err(Error::OutsideCarrier {
                value: alpha,
                semiring: self.context,
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|&v| self.context.mul(alpha, v))
            .collect();
        Ok(Vector {
            context: self.context,
            entries,
        })
    }

    /// Divides every component by `lambda` (which must be invertible).
    pub fn normalized_by(&self, lambda: f64) -> Result<Vector> {
        let ctx = self.context;
        let entries = self
            .entries
            .iter()
            .map(|&v| ctx.try_div(v, lambda))
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector {
            context: ctx,
            entries,
        })
    }

    /// Componentwise canonical order.
    pub fn le(&self, other: &Vector) -> bool {
        self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(&a, &b)| self.context.le(a, b))
    }

    /// Indices carrying a non-`0̄` component.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "(")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Result of a Kleene star computation.
///
/// `converged` and `closure.is_some()` always agree; `iterations` counts the
/// Bellman / series steps that were actually performed.
#[derive(Debug, Clone, PartialEq)]
pub struct StarResult {
    pub closure: Option<Matrix>,
    pub converged: bool,
    pub iterations: usize,
}

/// Why a star or series failed to converge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivergenceReason {
    /// Idempotent iteration kept strictly increasing past `n` steps.
    NoStabilization,
    /// A component exceeded the overflow guard.
    Overflow,
    /// The iteration cap was reached before the increment tolerance.
    IterationCap,
}

impl fmt::Display for DivergenceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DivergenceReason::NoStabilization => "no stabilization within the dimension bound",
            DivergenceReason::Overflow => "overflow guard exceeded",
            DivergenceReason::IterationCap => "iteration cap reached",
        };
        f.write_str(s)
    }
}

/// Outcome of the star–vector series `A*b = b ⊕ Ab ⊕ A²b ⊕ …`.
#[derive(Debug, Clone, PartialEq)]
pub enum StarOutcome {
    Converged { value: Vector, iterations: usize },
    Diverged { reason: DivergenceReason },
}

impl StarOutcome {
    /// The converged value, if any.
    pub fn value(&self) -> Option<&Vector> {
        match self {
            StarOutcome::Converged { value, .. } => Some(value),
            StarOutcome::Diverged { .. } => None,
        }
    }
}

/// Knobs for the `nonnegative` series iterations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    /// Stop once the largest componentwise increment drops below this.
    pub tolerance: f64,
    /// Hard cap on iterations; hitting it reports divergence.
    pub max_iterations: usize,
    /// A component above this value reports divergence by overflow.
    pub overflow_guard: f64,
}

impl Default for SeriesParams {
    fn default() -> Self {
        SeriesParams {
            tolerance: 1e-12,
            max_iterations: 1_000_000,
            overflow_guard: 1e150,
        }
    }
}

/// Truncated closure `I ⊕ A ⊕ … ⊕ A^(n−1)` computed by Bellman iteration
/// `S ← I ⊕ A·S`, stopping early once `S` stabilizes exactly.
///
/// For the idempotent instances this equals `A*` whenever the star
/// converges; callers are responsible for that convergence check.
pub(crate) fn star_truncated(a: &Matrix) -> (Matrix, usize) {
    let n = a.n();
    let id = Matrix::identity(a.context(), n);
    let mut s = id.clone();
    let mut steps = 0;
    for _ in 1..n {
        let next = id.add(&a.mul(&s).expect("same shape")).expect("same shape");
        steps += 1;
        if next == s {
            return (s, steps);
        }
        s = next;
    }
    (s, steps)
}

/// Kleene star `A* = I ⊕ A ⊕ A² ⊕ …`.
///
/// Convergence criteria per instance:
/// * `max-times` — converges iff the maximum cycle geometric mean is ≤ 1;
///   the closure is then the exact truncated sum up to `A^(n−1)`.
/// * `nonnegative` — converges iff the Perron root is < 1; computed by
///   series iteration with [`SeriesParams`]. Radii within `1e-9` of 1 are
///   reported divergent since the series cannot be resolved numerically.
/// * `max-min`, `lukasiewicz` — always converge (walk products can only
///   shrink), via the truncated sum.
pub fn kleene_star(a: &Matrix) -> StarResult {
    kleene_star_with(a, &SeriesParams::default())
}

/// [`kleene_star`] with explicit series parameters (`nonnegative` only).
pub fn kleene_star_with(a: &Matrix, params: &SeriesParams) -> StarResult {
    match a.context() {
        SemiringId::MaxTimes => {
            let rho = spectral::max_cycle_mean(a).expect("max-times context");
            if crate::approx::le_rel(rho, 1.0, 1e-12) {
                let (closure, iterations) = star_truncated(a);
                StarResult {
                    closure: Some(closure),
                    converged: true,
                    iterations,
                }
            } else {
                StarResult {
                    closure: None,
                    converged: false,
                    iterations: 0,
                }
            }
        }
        SemiringId::MaxMin | SemiringId::Lukasiewicz => {
            let (closure, iterations) = star_truncated(a);
            StarResult {
                closure: Some(closure),
                converged: true,
                iterations,
            }
        }
        SemiringId::Nonnegative => {
            let rho = spectral::spectral_radius(a).expect("nonnegative context");
            if !crate::approx::lt_rel(rho, 1.0, 1e-9) {
                return StarResult {
                    closure: None,
                    converged: false,
                    iterations: 0,
                };
            }
            let n = a.n();
            let mut sum = Matrix::identity(SemiringId::Nonnegative, n);
            let mut term = a.clone();
            for k in 1..=params.max_iterations {
                let mut increment: f64 = 0.0;
                for i in 0..n * n {
                    sum.entries[i] += term.entries[i];
                    increment = increment.max(term.entries[i]);
                }
                if increment < params.tolerance {
                    return StarResult {
                        closure: Some(sum),
                        converged: true,
                        iterations: k,
                    };
                }
                term = term.mul(a).expect("same shape");
            }
            StarResult {
                closure: None,
                converged: false,
                iterations: params.max_iterations,
            }
        }
    }
}

/// The series `A*b`, computed by Bellman iteration `z ← Az ⊕ b` from
/// `z = b`, without forming `A*`.
///
/// The series can converge even when `kleene_star(A)` diverges, because
/// divergent walk families may only meet `0̄` components of `b`. For the
/// idempotent instances an exact fixed point within `n` steps is the
/// convergence criterion (a repeated iterate is a fixed point forever);
/// for `nonnegative` the increment tolerance of [`SeriesParams`] is used.
pub fn star_apply(a: &Matrix, b: &Vector) -> Result<StarOutcome> {
    star_apply_with(a, b, &SeriesParams::default())
}

/// [`star_apply`] with explicit series parameters (`nonnegative` only).
pub fn star_apply_with(a: &Matrix, b: &Vector, params: &SeriesParams) -> Result<StarOutcome> {
    a.same_context(b.context())?;
    a.same_size(b.len())?;
    let n = a.n();
    let mut z = b.clone();
    if a.context().is_idempotent() {
        for k in 1..=n {
            let next = a.apply(&z)?.add(b)?;
            if next == z {
                return Ok(StarOutcome::Converged {
                    value: z,
                    iterations: k,
                });
            }
            z = next;
        }
        Ok(StarOutcome::Diverged {
            reason: DivergenceReason::NoStabilization,
        })
    } else {
        for k in 1..=params.max_iterations {
            let next = a.apply(&z)?.add(b)?;
            let mut increment: f64 = 0.0;
            let mut overflow = false;
            for i in 0..n {
                increment = increment.max(next.entries[i] - z.entries[i]);
                overflow |= next.entries[i] > params.overflow_guard;
            }
            if overflow {
                return Ok(StarOutcome::Diverged {
                    reason: DivergenceReason::Overflow,
                });
            }
            z = next;
            if increment < params.tolerance {
                return Ok(StarOutcome::Converged {
                    value: z,
                    iterations: k,
                });
            }
        }
        Ok(StarOutcome::Diverged {
            reason: DivergenceReason::IterationCap,
        })
    }
}
