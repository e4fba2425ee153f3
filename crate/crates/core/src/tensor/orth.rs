//! Gram-Schmidt orthonormalization helpers.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::ComplexMatrix;

/// Orthonormalizes the columns of `m` in place order (modified Gram-Schmidt
/// with a reorthogonalization pass). Fails if any column is linearly
/// dependent on its predecessors.
pub fn orthonormalize_columns(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let t = orthonormalize_rows(&m.transpose())?;
    Ok(t.transpose())
}

/// Orthonormalizes the rows of `m` in place order.
pub fn orthonormalize_rows(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let rows = m.rows();
    let cols = m.cols();
    if rows > cols {
        return Err(Error::UnsupportedShape {
            context: "orthonormalize_rows".into(),
            detail: format!("{rows} rows exceed {cols} columns"),
        });
    }
    let mut q: Vec<Vec<Complex64>> = Vec::with_capacity(rows);
    let scale = m.max_abs().max(1.0);
    for i in 0..rows {
        let mut v: Vec<Complex64> = m.row(i).to_vec();
        // Two MGS passes keep orthogonality near machine precision.
        for _ in 0..2 {
            for prev in &q {
                let overlap: Complex64 = prev.iter().zip(&v).map(|(p, x)| p.conj() * x).sum();
                for (x, p) in v.iter_mut().zip(prev) {
                    *x -= overlap * p;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm <= 1e-12 * scale {
            return Err(Error::DegenerateCandidate {
                context: format!("orthonormalize_rows: row {i} linearly dependent"),
            });
        }
        let inv = Complex64::new(1.0 / norm, 0.0);
        for x in v.iter_mut() {
            *x *= inv;
        }
        q.push(v);
    }
    Ok(ComplexMatrix::from_fn(rows, cols, |i, j| q[i][j]))
}

/// Extends `rows` (orthonormal vectors of length `cols`) with `count` further
/// orthonormal vectors drawn from the canonical basis.
pub(crate) fn orthonormal_completion(
    rows: &[Vec<Complex64>],
    cols: usize,
    count: usize,
) -> Result<Vec<Vec<Complex64>>> {
    let mut have: Vec<Vec<Complex64>> = rows.to_vec();
    let mut added = Vec::with_capacity(count);
    let mut basis_index = 0;
    while added.len() < count {
        if basis_index >= cols {
            return Err(Error::DegenerateCandidate {
                context: "orthonormal_completion: basis exhausted".into(),
            });
        }
        let mut v = vec![Complex64::new(0.0, 0.0); cols];
        v[basis_index] = Complex64::new(1.0, 0.0);
        basis_index += 1;
        for _ in 0..2 {
            for prev in &have {
                let overlap: Complex64 = prev.iter().zip(&v).map(|(p, x)| p.conj() * x).sum();
                for (x, p) in v.iter_mut().zip(prev) {
                    *x -= overlap * p;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm <= 0.5 {
            continue; // basis vector mostly inside the span; try the next one
        }
        let inv = Complex64::new(1.0 / norm, 0.0);
        for x in v.iter_mut() {
            *x *= inv;
        }
        have.push(v.clone());
        added.push(v);
    }
    Ok(added)
}
