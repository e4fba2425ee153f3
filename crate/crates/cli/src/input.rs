//! JSON operator/density specs: nested `[re, im]` pairs, row-major.
//!
//! ```json
//! {
//!   "a":   [[[0,0],[1,0]], [[1,0],[0,0]]],
//!   "b":   [[[0,0],[0,-1]], [[0,1],[0,0]]],
//!   "rho": [[[0.5,0],[0,0]], [[0,0],[0.5,0]]]
//! }
//! ```

use std::path::Path;

use serde::Deserialize;
use uncertainty_core::{Complex64, ComplexMatrix, DensityOperator};

#[derive(Debug, Deserialize)]
pub struct ProblemSpec {
    pub a: JsonMatrix,
    pub b: JsonMatrix,
    pub rho: JsonMatrix,
}

#[derive(Debug, Deserialize)]
pub struct JsonMatrix(pub Vec<Vec<[f64; 2]>>);

impl JsonMatrix {
    pub fn to_matrix(&self) -> Result<ComplexMatrix, String> {
        let rows = self.0.len();
        if rows == 0 {
            return Err("matrix has no rows".into());
        }
        let cols = self.0[0].len();
        let mut data = Vec::with_capacity(rows * cols);
        for (i, row) in self.0.iter().enumerate() {
            if row.len() != cols {
                return Err(format!("row {i} has {} entries, expected {cols}", row.len()));
            }
            for &[re, im] in row {
                data.push(Complex64::new(re, im));
            }
        }
        ComplexMatrix::from_vec(rows, cols, data).map_err(|e| e.to_string())
    }
}

impl ProblemSpec {
    /// Accepts either inline JSON (leading `{`) or a file path.
    pub fn load(arg: &str) -> Result<Self, String> {
        let text = if arg.trim_start().starts_with('{') {
            arg.to_string()
        } else {
            std::fs::read_to_string(Path::new(arg))
                .map_err(|e| format!("cannot read spec file {arg}: {e}"))?
        };
        serde_json::from_str(&text).map_err(|e| format!("invalid problem spec: {e}"))
    }

    pub fn parse(
        &self,
    ) -> Result<(ComplexMatrix, ComplexMatrix, DensityOperator), String> {
        let a = self.a.to_matrix()?;
        let b = self.b.to_matrix()?;
        let rho = DensityOperator::new(self.rho.to_matrix()?)
            .map_err(|e| format!("rho is not a valid density operator: {e}"))?;
        Ok((a, b, rho))
    }
}
