//! Problem-file loading: a single JSON document per problem.

use std::path::Path;

use serde::Deserialize;

use zeq_core::linalg::{Matrix, Vector};
use zeq_core::semiring::SemiringId;

/// On-disk problem document. `b` and `lambda` are optional; `lambda`
/// defaults to `1̄` and `b` to the zero vector where one is required.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    semiring: String,
    matrix: Vec<Vec<f64>>,
    b: Option<Vec<f64>>,
    lambda: Option<f64>,
}

/// A parsed and validated problem file.
pub struct Problem {
    pub matrix: Matrix,
    pub b: Option<Vector>,
    pub lambda: f64,
}

impl Problem {
    pub fn context(&self) -> SemiringId {
        self.matrix.context()
    }

    /// The right-hand side, defaulting to the zero vector.
    pub fn b_or_zero(&self) -> Vector {
        self.b
            .clone()
            .unwrap_or_else(|| Vector::zeros(self.context(), self.matrix.n()))
    }
}

pub fn load_problem(path: &Path, lambda_override: Option<f64>) -> Result<Problem, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: ProblemFile = serde_json::from_str(&text)
        .map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    let ctx = SemiringId::parse(&file.semiring).map_err(|e| e.to_string())?;
    let matrix = Matrix::new(ctx, file.matrix).map_err(|e| e.to_string())?;
    let b = file
        .b
        .map(|entries| {
            let v = Vector::new(ctx, entries).map_err(|e| e.to_string())?;
            if v.len() != matrix.n() {
                return Err(format!(
                    "b has {} entries but the matrix is {n}x{n}",
                    v.len(),
                    n = matrix.n()
                ));
            }
            Ok(v)
        })
        .transpose()?;
    let lambda = lambda_override.or(file.lambda).unwrap_or(1.0);
    Ok(Problem { matrix, b, lambda })
}

/// Loads a solution vector: a JSON array of numbers in the carrier.
pub fn load_vector(path: &Path, ctx: SemiringId, n: usize) -> Result<Vector, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let entries: Vec<f64> = serde_json::from_str(&text)
        .map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    if entries.len() != n {
        return Err(format!(
            "solution has {} entries but the matrix is {n}x{n}",
            entries.len()
        ));
    }
    Vector::new(ctx, entries).map_err(|e| e.to_string())
}
