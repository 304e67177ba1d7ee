//! Solving `λx = Ax ⊕ b` over the `max-times` and `nonnegative` instances:
//! solvability certificates, the least solution, and the description of the
//! whole solution set as `x⁰ ⊕ (eigenvector or 0̄)`.

use crate::approx::{le_rel, lt_rel, max_abs_diff, rel_close};
use crate::error::Error;
use crate::linalg::{
    kleene_star_with, star_apply_with, star_truncated, Matrix, SeriesParams, StarOutcome, Vector,
};
use crate::semiring::SemiringId;
use crate::spectral::{eigenbasis_from, spectral_data, EigenBasis, SpectralData};
use crate::structure::SupportSet;
use crate::Result;

/// Tolerance on the `max-times` solvability comparison `ρ̄ ≤ λ`.
const MT_TOL: f64 = 1e-12;
/// Margin on the strict `nonnegative` comparison `ρ̄ < λ`; anything closer
/// is flagged borderline.
const NN_MARGIN: f64 = 1e-10;
/// Tolerance for accepting a vector as a `nonnegative` solution.
const NN_SOLUTION_TOL: f64 = 1e-9;

/// The problem instance `λx = Ax ⊕ b`, restricted to the two instances
/// with a spectral theory (`max-times`, `nonnegative`).
#[derive(Debug, Clone, PartialEq)]
pub struct ZProblem {
    a: Matrix,
    b: Vector,
    lambda: f64,
}

impl ZProblem {
    pub fn new(a: Matrix, b: Vector, lambda: f64) -> Result<Self> {
        match a.context() {
            SemiringId::MaxTimes | SemiringId::Nonnegative => {}
            other => {
                return Err(Error::Unsupported {
                    semiring: other,
                    what: "equation solving",
                })
            }
        }
        if a.context() != b.context() {
            return Err(Error::SemiringMismatch {
                expected: a.context(),
                found: b.context(),
            });
        }
        if a.n() != b.len() {
            return Err(Error::DimensionMismatch {
                left: a.n(),
                right: b.len(),
            });
        }
        if !a.context().contains(lambda) {
            return Err(Error::OutsideCarrier {
                value: lambda,
                semiring: a.context(),
            });
        }
        Ok(ZProblem { a, b, lambda })
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Vector {
        &self.b
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn context(&self) -> SemiringId {
        self.a.context()
    }
}

/// The solvability certificate: the classes accessing the support of `b`
/// and the largest root among them.
#[derive(Debug, Clone, PartialEq)]
pub struct Solvability {
    pub solvable: bool,
    /// `max { ρ_j : N_j accesses supp(b) }`, `0` for an empty support.
    pub rho_bar: f64,
    /// Class indices accessing the support of `b` (normal-form order).
    pub j_classes: Vec<usize>,
    /// All nodes of those classes, ascending: the support of the least
    /// solution when the problem is solvable.
    pub j_nodes: Vec<usize>,
    /// `ρ̄` and `λ` were too close to certify the strict `nonnegative`
    /// comparison at working precision.
    pub borderline: bool,
}

fn solvability_from(p: &ZProblem, sd: &SpectralData) -> Solvability {
    let supp = SupportSet::from_vector(p.b());
    let j_classes = sd.fnf.classes_accessing_support(&supp);
    let j_nodes = sd.fnf.nodes_of_classes(&j_classes);
    let rho_bar = j_classes
        .iter()
        .map(|&c| sd.class_rho[c])
        .fold(0.0, f64::max);
    let lambda = p.lambda();

    let (solvable, borderline) = if lambda == 0.0 {
        // 0̄·x = Ax ⊕ b forces Ax = 0̄ and b = 0̄.
        (supp.is_empty(), false)
    } else {
        match p.context() {
            SemiringId::MaxTimes => (le_rel(rho_bar, lambda, MT_TOL), false),
            SemiringId::Nonnegative => {
                let close = rel_close(rho_bar, lambda, NN_MARGIN);
                (lt_rel(rho_bar, lambda, NN_MARGIN), close)
            }
            _ => unreachable!("context validated at construction"),
        }
    };

    Solvability {
        solvable,
        rho_bar,
        j_classes,
        j_nodes,
        borderline,
    }
}

/// Checks `λx = Ax ⊕ b`: the comparison is exact for `max-times` and uses
/// a relative tolerance of `1e-9` for `nonnegative`.
pub fn is_solution(p: &ZProblem, x: &Vector) -> Result<bool> {
    let lhs = x.scale(p.lambda())?;
    let rhs = p.a().apply(x)?.add(p.b())?;
    Ok(match p.context() {
        SemiringId::MaxTimes => lhs == rhs,
        _ => {
            let scale = 1.0
                + lhs
                    .as_slice()
                    .iter()
                    .chain(rhs.as_slice())
                    .fold(0.0f64, |m, &v| m.max(v.abs()));
            max_abs_diff(lhs.as_slice(), rhs.as_slice()) <= NN_SOLUTION_TOL * scale
        }
    })
}

/// Solvability of `λx = Ax ⊕ b`: `ρ̄ ≤ λ` for `max-times`, `ρ̄ < λ` for
/// `nonnegative`, and `b = 0̄` when `λ = 0̄`.
pub fn solvability(p: &ZProblem) -> Solvability {
    let sd = spectral_data(p.a()).expect("context validated at construction");
    solvability_from(p, &sd)
}

fn least_solution_core(
    p: &ZProblem,
    sd: &SpectralData,
    sol: &Solvability,
    params: &SeriesParams,
) -> Result<Vector> {
    if !sol.solvable {
        return Err(Error::Unsolvable {
            rho_bar: sol.rho_bar,
            lambda: p.lambda(),
        });
    }
    let n = p.a().n();
    let ctx = p.context();
    if p.lambda() == 0.0 {
        return Ok(Vector::zeros(ctx, n));
    }
    let at = p.a().normalized_by(p.lambda())?;
    let bt = p.b().normalized_by(p.lambda())?;

    // Frobenius trace-down: walk the accessing classes in normal-form
    // order; everything a class reads from is already assigned.
    let mut x = Vector::zeros(ctx, n);
    for &c in &sol.j_classes {
        let nodes = &sd.fnf.classes()[c];
        let mut rhs = Vec::with_capacity(nodes.len());
        for &i in nodes {
            let mut acc = bt.get(i);
            for j in 0..n {
                let a_ij = at.get(i, j);
                if a_ij != 0.0 && x.get(j) != 0.0 {
                    acc = ctx.add(acc, ctx.mul(a_ij, x.get(j)));
                }
            }
            rhs.push(acc);
        }
        let block = at.submatrix(nodes);
        let star = match ctx {
            SemiringId::MaxTimes => star_truncated(&block).0,
            _ => kleene_star_with(&block, params)
                .closure
                .ok_or(Error::Diverged)?,
        };
        let local = star.apply(&Vector::new(ctx, rhs)?)?;
        for (k, &i) in nodes.iter().enumerate() {
            x.set(i, local.get(k));
        }
    }
    Ok(x)
}

/// The least solution `x⁰`, by block-forward substitution over the normal
/// form (each diagonal block contributes its local star).
///
/// Errors: [`Error::Unsolvable`] when the certificate fails, and
/// [`Error::Diverged`] if a `nonnegative` block series cannot stabilize at
/// working precision (only possible hard against the solvability border).
pub fn least_solution(p: &ZProblem) -> Result<Vector> {
    let sd = spectral_data(p.a()).expect("context validated at construction");
    let sol = solvability_from(p, &sd);
    least_solution_core(p, &sd, &sol, &SeriesParams::default())
}

/// `x⁰ ⊕ ⊕_j coeffs[j] ⊗ basis[j]`: a solution for every choice of
/// coefficients, and every solution arises this way for some choice.
pub fn combine(x0: &Vector, coeffs: &[f64], basis: &EigenBasis) -> Result<Vector> {
    if coeffs.len() != basis.width() {
        return Err(Error::DimensionMismatch {
            left: coeffs.len(),
            right: basis.width(),
        });
    }
    let mut acc = x0.clone();
    for (&alpha, column) in coeffs.iter().zip(&basis.columns) {
        acc = acc.add(&column.scale(alpha)?)?;
    }
    Ok(acc)
}

/// A solution split into the least solution and an eigenvector part.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    /// The least solution `x⁰` of the problem.
    pub least: Vector,
    /// Either `0̄` or an eigenvector of `A` for `λ`; always satisfies
    /// `least ⊕ eigen = x`.
    pub eigen: Vector,
}

/// Splits a solution `x` as `x⁰ ⊕ v` with `v` an eigenvector or zero.
///
/// For `max-times` the eigenvector part keeps `x` on the critical nodes of
/// `λ` and propagates it through the star of the complement; for
/// `nonnegative` it is the limit of `(A/λ)^k x`.
pub fn decompose(p: &ZProblem, x: &Vector) -> Result<Decomposition> {
    decompose_with(p, x, &SeriesParams::default())
}

/// [`decompose`] with explicit series parameters (`nonnegative` only).
pub fn decompose_with(p: &ZProblem, x: &Vector, params: &SeriesParams) -> Result<Decomposition> {
    if !is_solution(p, x)? {
        return Err(Error::NotASolution);
    }
    let sd = spectral_data(p.a()).expect("context validated at construction");
    let sol = solvability_from(p, &sd);
    let least = least_solution_core(p, &sd, &sol, params)?;
    let n = p.a().n();
    let ctx = p.context();
    let lambda = p.lambda();

    if lambda == 0.0 {
        // Solvable at 0̄ means b = 0̄ and Ax = 0̄: x itself is the part.
        return Ok(Decomposition {
            least,
            eigen: x.clone(),
        });
    }

    let eigen = match ctx {
        SemiringId::MaxTimes => {
            let mut v = Vector::zeros(ctx, n);
            if sd.is_eigenvalue(lambda) {
                let cg = crate::spectral::critical_graph(p.a(), lambda)?;
                let critical = &cg.nodes;
                if !critical.is_empty() {
                    for &i in critical {
                        v.set(i, x.get(i));
                    }
                    let rest: Vec<usize> =
                        (0..n).filter(|i| !critical.contains(i)).collect();
                    if !rest.is_empty() {
                        let at = p.a().normalized_by(lambda)?;
                        let sub = at.submatrix(&rest);
                        let mut rhs = Vector::zeros(ctx, rest.len());
                        for (r, &i) in rest.iter().enumerate() {
                            let mut acc = 0.0;
                            for &c in critical {
                                acc = ctx.add(acc, ctx.mul(at.get(i, c), x.get(c)));
                            }
                            rhs.set(r, acc);
                        }
                        match star_apply_with(&sub, &rhs, params)? {
                            StarOutcome::Converged { value, .. } => {
                                for (r, &i) in rest.iter().enumerate() {
                                    v.set(i, value.get(r));
                                }
                            }
                            StarOutcome::Diverged { .. } => return Err(Error::Diverged),
                        }
                    }
                }
            }
            v
        }
        _ => {
            // Iterate y ← (A/λ)y from x; the sequence is nonincreasing and
            // bounded below, so it converges.
            let at = p.a().normalized_by(lambda)?;
            let mut y = x.clone();
            let mut done = false;
            for _ in 0..params.max_iterations {
                let next = at.apply(&y)?;
                let step = max_abs_diff(next.as_slice(), y.as_slice());
                y = next;
                if step < params.tolerance {
                    done = true;
                    break;
                }
            }
            if !done {
                return Err(Error::Diverged);
            }
            y
        }
    };

    Ok(Decomposition { least, eigen })
}

/// The least `w` with `u ⊕ w = x`, taken componentwise; defined when
/// `u ≤ x`. Satisfies `w ≤ (A/λ)w` whenever `u` and `x` both solve the
/// equation, which makes it a seed for regenerating the eigenvector part.
pub fn least_residual(x: &Vector, u: &Vector) -> Result<Vector> {
    let ctx = x.context();
    match ctx {
        SemiringId::MaxTimes | SemiringId::Nonnegative => {}
        other => {
            return Err(Error::Unsupported {
                semiring: other,
                what: "least residuals",
            })
        }
    }
    if u.context() != ctx {
        return Err(Error::SemiringMismatch {
            expected: ctx,
            found: u.context(),
        });
    }
    if u.len() != x.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: u.len(),
        });
    }
    let mut w = Vector::zeros(ctx, x.len());
    for i in 0..x.len() {
        if !ctx.le(u.get(i), x.get(i)) {
            return Err(Error::ResidualUndefined { index: i });
        }
        w.set(
            i,
            ctx.least_addend(u.get(i), x.get(i))
                .expect("order checked above"),
        );
    }
    Ok(w)
}

/// Everything the CLI and bindings report about one problem instance.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub solvable: bool,
    pub rho_bar: f64,
    pub j_classes: Vec<usize>,
    pub j_nodes: Vec<usize>,
    pub borderline: bool,
    /// Present iff solvable (and the series stabilized).
    pub least: Option<Vector>,
    /// Meaningful when solvable: the least solution is the only one iff
    /// `λ` is not an eigenvalue.
    pub unique: bool,
    /// `max-times` only, when `λ` is a positive eigenvalue: generators of
    /// the eigenvector part of the solution set.
    pub basis: Option<EigenBasis>,
    pub warnings: Vec<String>,
}

/// One-stop report: solvability, least solution, uniqueness and (for
/// `max-times` at an eigenvalue) the eigenvector generators.
pub fn solve_report(p: &ZProblem) -> SolveReport {
    solve_report_with(p, &SeriesParams::default())
}

/// [`solve_report`] with explicit series parameters (`nonnegative` only).
pub fn solve_report_with(p: &ZProblem, params: &SeriesParams) -> SolveReport {
    let sd = spectral_data(p.a()).expect("context validated at construction");
    let sol = solvability_from(p, &sd);
    let lambda = p.lambda();
    let is_eig = sd.is_eigenvalue(lambda);
    let mut warnings = Vec::new();
    if sol.borderline {
        warnings.push(format!(
            "rho_bar={} and lambda={} are too close to certify strictly at working precision",
            sol.rho_bar, lambda
        ));
    }

    let least = if sol.solvable {
        match least_solution_core(p, &sd, &sol, params) {
            Ok(x) => Some(x),
            Err(_) => {
                warnings.push(
                    "least-solution series did not stabilize near the solvability border".into(),
                );
                None
            }
        }
    } else {
        None
    };

    let basis = if sol.solvable && is_eig && p.context() == SemiringId::MaxTimes {
        if lambda > 0.0 {
            eigenbasis_from(p.a(), &sd, lambda).ok()
        } else {
            warnings.push(
                "eigenvectors exist for lambda=0 but no basis is constructed for it".into(),
            );
            None
        }
    } else {
        None
    };

    SolveReport {
        solvable: sol.solvable,
        rho_bar: sol.rho_bar,
        j_classes: sol.j_classes,
        j_nodes: sol.j_nodes,
        borderline: sol.borderline,
        least,
        unique: sol.solvable && !is_eig,
        basis,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::star_apply;

    fn seven(ctx: SemiringId) -> Matrix {
        Matrix::new(
            ctx,
            vec![
                vec![1., 0., 0., 0., 0., 0., 0.],
                vec![0., 1., 0., 0., 0., 0., 0.],
                vec![1., 0., 1., 0., 0., 0., 0.],
                vec![0., 1., 0., 0., 0., 0., 0.],
                vec![0., 1., 0., 0., 0., 0., 0.],
                vec![0., 0., 1., 1., 0., 0., 0.],
                vec![0., 0., 0., 0., 1., 0., 2.],
            ],
        )
        .unwrap()
    }

    fn problem(ctx: SemiringId, b_at: usize, lambda: f64) -> ZProblem {
        let b = Vector::unit(ctx, 7, b_at).unwrap();
        ZProblem::new(seven(ctx), b, lambda).unwrap()
    }

    #[test]
    fn construction_guards_context_and_shape() {
        let mm = Matrix::new(SemiringId::MaxMin, vec![vec![1.]]).unwrap();
        let b = Vector::new(SemiringId::MaxMin, vec![0.]).unwrap();
        assert!(matches!(
            ZProblem::new(mm, b, 1.0),
            Err(Error::Unsupported { .. })
        ));
        let a = Matrix::new(SemiringId::MaxTimes, vec![vec![1.]]).unwrap();
        let b = Vector::new(SemiringId::MaxTimes, vec![0., 0.]).unwrap();
        assert!(matches!(
            ZProblem::new(a.clone(), b, 1.0),
            Err(Error::DimensionMismatch { .. })
        ));
        let b = Vector::new(SemiringId::MaxTimes, vec![0.]).unwrap();
        assert!(matches!(
            ZProblem::new(a, b, -1.0),
            Err(Error::OutsideCarrier { .. })
        ));
    }

    #[test]
    fn certificate_for_the_seven_node_example() {
        let p = problem(SemiringId::MaxTimes, 3, 1.0);
        let sol = solvability(&p);
        assert!(sol.solvable);
        assert_eq!(sol.rho_bar, 0.0);
        assert_eq!(sol.j_classes, vec![3, 5]);
        assert_eq!(sol.j_nodes, vec![3, 5]);

        let p = problem(SemiringId::MaxTimes, 6, 1.0);
        let sol = solvability(&p);
        assert!(!sol.solvable);
        assert_eq!(sol.rho_bar, 2.0);

        // Boundary ρ̄ = λ: fine for max-times, borderline-unsolvable for
        // the strict nonnegative comparison.
        let p = problem(SemiringId::MaxTimes, 0, 1.0);
        assert!(solvability(&p).solvable);
        let p = problem(SemiringId::Nonnegative, 0, 1.0);
        let sol = solvability(&p);
        assert!(!sol.solvable);
        assert!(sol.borderline);
    }

    #[test]
    fn least_solution_matches_the_known_fixture() {
        for ctx in [SemiringId::MaxTimes, SemiringId::Nonnegative] {
            let p = problem(ctx, 3, 1.0);
            let x0 = least_solution(&p).unwrap();
            assert_eq!(x0.as_slice(), &[0., 0., 0., 1., 0., 1., 0.], "{ctx}");
            assert!(is_solution(&p, &x0).unwrap());
        }
    }

    #[test]
    fn trace_down_agrees_with_the_series() {
        let p = problem(SemiringId::MaxTimes, 3, 3.0);
        let x0 = least_solution(&p).unwrap();
        assert_eq!(x0.as_slice(), &[0., 0., 0., 1. / 3., 0., 1. / 9., 0.]);
        let at = p.a().normalized_by(3.0).unwrap();
        let bt = p.b().normalized_by(3.0).unwrap();
        match star_apply(&at, &bt).unwrap() {
            StarOutcome::Converged { value, .. } => assert_eq!(value, x0),
            other => panic!("series should converge, got {other:?}"),
        }
    }

    #[test]
    fn unsolvable_problems_refuse_a_least_solution() {
        let p = problem(SemiringId::MaxTimes, 6, 1.0);
        assert!(matches!(
            least_solution(&p),
            Err(Error::Unsolvable { .. })
        ));
    }

    #[test]
    fn zero_lambda_needs_zero_b() {
        let ctx = SemiringId::MaxTimes;
        let p = ZProblem::new(seven(ctx), Vector::zeros(ctx, 7), 0.0).unwrap();
        let sol = solvability(&p);
        assert!(sol.solvable);
        assert_eq!(least_solution(&p).unwrap().as_slice(), &[0.0; 7]);
        // 0 is an eigenvalue here (column 6 is all zero), so not unique.
        let report = solve_report(&p);
        assert!(!report.unique);

        let p = problem(ctx, 3, 0.0);
        assert!(!solvability(&p).solvable);
    }

    #[test]
    fn uniqueness_tracks_the_eigenvalue_set() {
        // λ = 3 ∉ Λ = {0, 1, 2}: unique.
        let report = solve_report(&problem(SemiringId::MaxTimes, 3, 3.0));
        assert!(report.solvable && report.unique);
        // λ = 1 ∈ Λ: solvable but not unique, with a two-column basis.
        let report = solve_report(&problem(SemiringId::MaxTimes, 3, 1.0));
        assert!(report.solvable && !report.unique);
        assert_eq!(report.basis.as_ref().unwrap().width(), 2);
        // λ = 2 ∈ Λ: not unique either.
        let report = solve_report(&problem(SemiringId::MaxTimes, 3, 2.0));
        assert!(report.solvable && !report.unique);
    }

    #[test]
    fn combinations_parametrize_the_solution_set() {
        let p = problem(SemiringId::MaxTimes, 3, 1.0);
        let report = solve_report(&p);
        let x0 = report.least.clone().unwrap();
        let basis = report.basis.clone().unwrap();
        let y1 = combine(&x0, &[2.0, 3.0], &basis).unwrap();
        assert_eq!(y1.as_slice(), &[2., 0., 3., 1., 0., 3., 0.]);
        assert!(is_solution(&p, &y1).unwrap());

        let pn = problem(SemiringId::Nonnegative, 3, 1.0);
        let x0n = least_solution(&pn).unwrap();
        let v2 = Vector::new(SemiringId::Nonnegative, vec![0., 0., 1., 0., 0., 1., 0.]).unwrap();
        let manual = EigenBasis::from_columns(1.0, vec![v2]).unwrap();
        let y2 = combine(&x0n, &[1.0], &manual).unwrap();
        assert_eq!(y2.as_slice(), &[0., 0., 1., 1., 0., 2., 0.]);
        assert!(is_solution(&pn, &y2).unwrap());

        // Cross-checks: each combination solves only its own instance.
        let y2_mt = Vector::new(SemiringId::MaxTimes, y2.as_slice().to_vec()).unwrap();
        assert!(!is_solution(&p, &y2_mt).unwrap());
        let y1_nn = Vector::new(SemiringId::Nonnegative, y1.as_slice().to_vec()).unwrap();
        assert!(!is_solution(&pn, &y1_nn).unwrap());
    }

    #[test]
    fn decomposition_round_trips_both_instances() {
        let p = problem(SemiringId::MaxTimes, 3, 1.0);
        let y1 = Vector::new(SemiringId::MaxTimes, vec![2., 0., 3., 1., 0., 3., 0.]).unwrap();
        let d = decompose(&p, &y1).unwrap();
        assert_eq!(d.least.as_slice(), &[0., 0., 0., 1., 0., 1., 0.]);
        assert_eq!(d.eigen.as_slice(), &[2., 0., 3., 0., 0., 3., 0.]);
        assert_eq!(d.least.add(&d.eigen).unwrap(), y1);
        let av = p.a().apply(&d.eigen).unwrap();
        assert_eq!(av, d.eigen.scale(1.0).unwrap());

        let pn = problem(SemiringId::Nonnegative, 3, 1.0);
        let y2 = Vector::new(SemiringId::Nonnegative, vec![0., 0., 1., 1., 0., 2., 0.]).unwrap();
        let d = decompose(&pn, &y2).unwrap();
        assert_eq!(d.eigen.as_slice(), &[0., 0., 1., 0., 0., 1., 0.]);
        assert_eq!(d.least.add(&d.eigen).unwrap(), y2);
    }

    #[test]
    fn decompose_validates_its_input() {
        let p = problem(SemiringId::MaxTimes, 3, 1.0);
        let junk = Vector::new(SemiringId::MaxTimes, vec![1.; 7]).unwrap();
        assert!(matches!(decompose(&p, &junk), Err(Error::NotASolution)));
    }

    #[test]
    fn residuals_seed_the_eigenvector_part() {
        let y1 = Vector::new(SemiringId::MaxTimes, vec![2., 0., 3., 1., 0., 3., 0.]).unwrap();
        let x0 = Vector::new(SemiringId::MaxTimes, vec![0., 0., 0., 1., 0., 1., 0.]).unwrap();
        let w = least_residual(&y1, &x0).unwrap();
        assert_eq!(w.as_slice(), &[2., 0., 3., 0., 0., 3., 0.]);
        // w ≤ (A/λ)w, and iterating regenerates an eigenvector (here w
        // already is one).
        let a = seven(SemiringId::MaxTimes);
        assert!(w.le(&a.apply(&w).unwrap()));

        let y2 = Vector::new(SemiringId::Nonnegative, vec![0., 0., 1., 1., 0., 2., 0.]).unwrap();
        let x0 = Vector::new(SemiringId::Nonnegative, vec![0., 0., 0., 1., 0., 1., 0.]).unwrap();
        let w = least_residual(&y2, &x0).unwrap();
        assert_eq!(w.as_slice(), &[0., 0., 1., 0., 0., 1., 0.]);

        let short = Vector::new(SemiringId::MaxTimes, vec![3., 0., 0., 0., 0., 0., 0.]).unwrap();
        assert!(matches!(
            least_residual(&y1, &short),
            Err(Error::ResidualUndefined { index: 0 })
        ));
    }

    #[test]
    fn reports_surface_borderline_warnings() {
        let p = problem(SemiringId::Nonnegative, 0, 1.0);
        let report = solve_report(&p);
        assert!(!report.solvable);
        assert!(report.borderline);
        assert!(!report.warnings.is_empty());
        assert!(report.least.is_none());
    }

    #[test]
    fn omitted_b_is_the_zero_vector_case() {
        let ctx = SemiringId::MaxTimes;
        let p = ZProblem::new(seven(ctx), Vector::zeros(ctx, 7), 1.0).unwrap();
        let report = solve_report(&p);
        assert!(report.solvable);
        assert_eq!(report.rho_bar, 0.0);
        assert!(report.j_nodes.is_empty());
        assert_eq!(report.least.unwrap().as_slice(), &[0.0; 7]);
    }
}
