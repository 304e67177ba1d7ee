//! Slow reference implementations, deliberately independent of the fast
//! paths, used to cross-check results in tests.
//!
//! Each oracle refuses inputs outside its small-size comfort zone with
//! [`Error::OracleRefused`] instead of silently taking forever.

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::semiring::SemiringId;
use crate::Result;

/// Largest dimension accepted by [`brute_cycle_mean`].
const MAX_CYCLE_NODES: usize = 8;
/// Largest dimension accepted by [`enumerate_walks_star`].
const MAX_WALK_NODES: usize = 6;
/// A pivot smaller than this makes `I - A` numerically singular for
/// [`classical_star_solve`].
const PIVOT_TOL: f64 = 1e-10;

/// Maximum geometric cycle mean of a `max-times` matrix by exhaustive
/// enumeration of elementary cycles (each rooted at its smallest node).
///
/// Returns `0` for an acyclic digraph. Refuses matrices larger than
/// 8×8 — the cycle count grows factorially.
pub fn brute_cycle_mean(a: &Matrix) -> Result<f64> {
    if a.context() != SemiringId::MaxTimes {
        return Err(Error::Unsupported {
            semiring: a.context(),
            what: "cycle means",
        });
    }
    let n = a.n();
    if n > MAX_CYCLE_NODES {
        return Err(Error::OracleRefused(format!(
            "cycle enumeration handles up to {MAX_CYCLE_NODES} nodes, got {n}"
        )));
    }
    let mut best = 0.0f64;
    let mut on_path = vec![false; n];
    for s in 0..n {
        on_path[s] = true;
        close_cycles(a, s, s, 0, 1.0, &mut on_path, &mut best);
        on_path[s] = false;
    }
    Ok(best)
}

/// Extends an elementary path `s → … → cur` of `len` arcs and weight
/// product `prod`, only through nodes `> s`, and scores every arc closing
/// back to `s`.
fn close_cycles(
    a: &Matrix,
    s: usize,
    cur: usize,
    len: usize,
    prod: f64,
    on_path: &mut [bool],
    best: &mut f64,
) {
    let n = a.n();
    let w_close = a.get(cur, s);
    if w_close != 0.0 {
        let p = prod * w_close;
        let mean = match len + 1 {
            1 => p,
            2 => p.sqrt(),
            k => p.powf(1.0 / k as f64),
        };
        if mean > *best {
            *best = mean;
        }
    }
    for j in s + 1..n {
        let w = a.get(cur, j);
        if w == 0.0 || on_path[j] {
            continue;
        }
        on_path[j] = true;
        close_cycles(a, s, j, len + 1, prod * w, on_path, best);
        on_path[j] = false;
    }
}

/// Solves `(I - A)x = b` over the reals by Gaussian elimination with
/// partial pivoting, for cross-checking the `nonnegative` star series
/// (when `A*` converges, `A*b` is the unique solution of that system).
///
/// Returns the raw solution — tiny negative round-off is left in place.
/// Refuses a numerically singular `I - A`.
pub fn classical_star_solve(a: &Matrix, b: &Vector) -> Result<Vec<f64>> {
    if a.context() != SemiringId::Nonnegative {
        return Err(Error::Unsupported {
            semiring: a.context(),
            what: "real-arithmetic elimination",
        });
    }
    if a.n() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.len(),
        });
    }
    let n = a.n();
    let mut m = vec![vec![0.0f64; n + 1]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate().take(n) {
            *cell = if i == j { 1.0 - a.get(i, j) } else { -a.get(i, j) };
        }
        row[n] = b.get(i);
    }

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| m[r][col].abs().total_cmp(&m[s][col].abs()))
            .expect("nonempty range");
        if m[pivot_row][col].abs() < PIVOT_TOL {
            return Err(Error::OracleRefused(
                "I - A is numerically singular".into(),
            ));
        }
        m.swap(col, pivot_row);
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..=n {
                m[r][c] -= f * m[col][c];
            }
        }
    }

    let mut x = vec![0.0f64; n];
    for i in (0..n).rev() {
        let mut acc = m[i][n];
        for j in i + 1..n {
            acc -= m[i][j] * x[j];
        }
        x[i] = acc / m[i][i];
    }
    Ok(x)
}

/// Star closure by brute enumeration of all walks of fewer than `n` arcs,
/// for instances with idempotent addition (where the closure, whenever it
/// converges, truncates exactly at walk length `n - 1`).
///
/// Refuses matrices larger than 6×6 and the `nonnegative` instance
/// (non-idempotent addition needs the full infinite series).
pub fn enumerate_walks_star(a: &Matrix) -> Result<Matrix> {
    let ctx = a.context();
    if !ctx.is_idempotent() {
        return Err(Error::Unsupported {
            semiring: ctx,
            what: "walk-enumeration closure",
        });
    }
    let n = a.n();
    if n > MAX_WALK_NODES {
        return Err(Error::OracleRefused(format!(
            "walk enumeration handles up to {MAX_WALK_NODES} nodes, got {n}"
        )));
    }
    let mut out = Matrix::identity(ctx, n);
    for start in 0..n {
        extend_walks(a, &mut out, start, start, n - 1, ctx.one());
    }
    Ok(out)
}

/// Grows every walk from `start` currently ending at `cur` with weight `w`
/// by up to `remaining` more arcs, folding each extension into `out`.
/// Zero-weight extensions are pruned: `0̄` is absorbing for `⊗` and neutral
/// for `⊕`, so they can never contribute.
fn extend_walks(a: &Matrix, out: &mut Matrix, start: usize, cur: usize, remaining: usize, w: f64) {
    if remaining == 0 {
        return;
    }
    let ctx = a.context();
    for j in 0..a.n() {
        let arc = a.get(cur, j);
        if arc == 0.0 {
            continue;
        }
        let step = ctx.mul(w, arc);
        if step == 0.0 {
            continue;
        }
        out.set(start, j, ctx.add(out.get(start, j), step));
        extend_walks(a, out, start, j, remaining - 1, step);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kleene_star;
    use crate::spectral::max_cycle_mean;

    fn mt(rows: &[&[f64]]) -> Matrix {
        Matrix::new(
            SemiringId::MaxTimes,
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    fn nn(rows: &[&[f64]]) -> Matrix {
        Matrix::new(
            SemiringId::Nonnegative,
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn brute_mean_agrees_with_fast_path_on_the_seven_node_example() {
        let a = mt(&[
            &[1., 0., 0., 0., 0., 0., 0.],
            &[0., 1., 0., 0., 0., 0., 0.],
            &[1., 0., 1., 0., 0., 0., 0.],
            &[0., 1., 0., 0., 0., 0., 0.],
            &[0., 1., 0., 0., 0., 0., 0.],
            &[0., 0., 1., 1., 0., 0., 0.],
            &[0., 0., 0., 0., 1., 0., 2.],
        ]);
        assert_eq!(brute_cycle_mean(&a).unwrap(), 2.0);
        assert_eq!(brute_cycle_mean(&a).unwrap(), max_cycle_mean(&a).unwrap());
    }

    #[test]
    fn brute_mean_of_two_cycle_is_the_geometric_mean() {
        let a = mt(&[&[0., 3.], &[2., 0.]]);
        assert_eq!(brute_cycle_mean(&a).unwrap(), 6.0f64.sqrt());
    }

    #[test]
    fn brute_mean_of_acyclic_matrix_is_zero() {
        let a = mt(&[&[0., 5.], &[0., 0.]]);
        assert_eq!(brute_cycle_mean(&a).unwrap(), 0.0);
    }

    #[test]
    fn brute_mean_guards() {
        let big = Matrix::zeros(SemiringId::MaxTimes, 9);
        assert!(matches!(
            brute_cycle_mean(&big),
            Err(Error::OracleRefused(_))
        ));
        let wrong = Matrix::zeros(SemiringId::Nonnegative, 2);
        assert!(matches!(
            brute_cycle_mean(&wrong),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn elimination_matches_the_scalar_series() {
        let a = nn(&[&[0.5]]);
        let b = Vector::new(SemiringId::Nonnegative, vec![1.0]).unwrap();
        let x = classical_star_solve(&a, &b).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn elimination_matches_a_two_by_two_closure() {
        let a = nn(&[&[0.2, 0.3], &[0.1, 0.4]]);
        let b = Vector::new(SemiringId::Nonnegative, vec![1.0, 2.0]).unwrap();
        let x = classical_star_solve(&a, &b).unwrap();
        // (I - A) x = b restated componentwise.
        assert!((0.8 * x[0] - 0.3 * x[1] - 1.0).abs() < 1e-12);
        assert!((-0.1 * x[0] + 0.6 * x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn elimination_refuses_a_singular_system() {
        let a = nn(&[&[1.0]]);
        let b = Vector::new(SemiringId::Nonnegative, vec![1.0]).unwrap();
        assert!(matches!(
            classical_star_solve(&a, &b),
            Err(Error::OracleRefused(_))
        ));
    }

    #[test]
    fn elimination_rejects_other_instances() {
        let a = Matrix::zeros(SemiringId::MaxTimes, 2);
        let b = Vector::zeros(SemiringId::MaxTimes, 2);
        assert!(matches!(
            classical_star_solve(&a, &b),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn walk_enumeration_matches_the_fast_closure() {
        let cases = [
            mt(&[&[0., 0.5, 0.], &[0., 0., 0.25], &[1., 0., 0.]]),
            Matrix::new(
                SemiringId::MaxMin,
                vec![
                    vec![0.3, 0.9, 0.0],
                    vec![0.0, 0.0, 0.7],
                    vec![0.4, 0.0, 0.0],
                ],
            )
            .unwrap(),
            Matrix::new(
                SemiringId::Lukasiewicz,
                vec![
                    vec![0.0, 0.75, 0.5],
                    vec![1.0, 0.0, 0.0],
                    vec![0.75, 0.25, 0.0],
                ],
            )
            .unwrap(),
        ];
        for a in cases {
            let fast = kleene_star(&a).closure.unwrap();
            let slow = enumerate_walks_star(&a).unwrap();
            assert_eq!(fast, slow, "closure mismatch for {}", a.context());
        }
    }

    #[test]
    fn walk_enumeration_guards() {
        let big = Matrix::zeros(SemiringId::MaxMin, 7);
        assert!(matches!(
            enumerate_walks_star(&big),
            Err(Error::OracleRefused(_))
        ));
        let additive = Matrix::zeros(SemiringId::Nonnegative, 2);
        assert!(matches!(
            enumerate_walks_star(&additive),
            Err(Error::Unsupported { .. })
        ));
    }
}
