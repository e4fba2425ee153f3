//! Hermitian eigendecomposition and the factorizations built on it.
//!
//! The eigensolver is nalgebra's `SymmetricEigen` on `DMatrix<Complex64>`;
//! everything else in the crate goes through [`eigh`] so the backend stays in
//! one place.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::orth::orthonormal_completion;
use crate::tensor::ComplexMatrix;

/// Hermiticity tolerance accepted by [`eigh`] and [`psd_sqrt`].
pub const HERMITICITY_TOL: f64 = 1e-8;

// Negative eigenvalues in (PSD_REJECT·scale, 0) are treated as PSD drift and
// clamped to zero; anything below is a genuine PSD violation.
const PSD_REJECT: f64 = -1e-6;

/// Eigendecomposition of a Hermitian matrix: `M = V diag(λ) V†`.
#[derive(Debug, Clone)]
pub struct Eigh {
    /// Ascending real eigenvalues.
    pub eigenvalues: Vec<f64>,
    /// Eigenvectors as matrix columns, ordered like `eigenvalues`.
    pub eigenvectors: ComplexMatrix,
}

impl Eigh {
    /// Rebuilds `V diag(f(λ)) V†`.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let dim = self.eigenvalues.len();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(dim, dim, |i, j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..dim {
                acc += v[(i, k)] * Complex64::new(f(self.eigenvalues[k]), 0.0) * v[(j, k)].conj();
            }
            acc
        })
    }
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
pub fn eigh(m: &ComplexMatrix) -> Result<Eigh> {
    if !m.is_square() {
        return Err(Error::dims(
            "eigh",
            "square matrix",
            format!("{}x{}", m.rows(), m.cols()),
        ));
    }
    let scale = m.max_abs().max(1.0);
    let defect = m.hermiticity_defect();
    if defect > HERMITICITY_TOL * scale {
        return Err(Error::NonHermitian {
            context: "eigh".into(),
            defect,
        });
    }
    let dim = m.rows();
    // Symmetrize so float dust in the input cannot leak into the solver.
    let dm = DMatrix::from_fn(dim, dim, |i, j| {
        (m[(i, j)] + m[(j, i)].conj()) * Complex64::new(0.5, 0.0)
    });
    let decomp = dm.symmetric_eigen();
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| decomp.eigenvalues[a].total_cmp(&decomp.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| decomp.eigenvalues[k]).collect();
    let eigenvectors =
        ComplexMatrix::from_fn(dim, dim, |i, j| decomp.eigenvectors[(i, order[j])]);
    Ok(Eigh {
        eigenvalues,
        eigenvectors,
    })
}

/// Hermitian PSD square root: returns `R` with `R R = M`.
///
/// Eigenvalues in `[-1e-10, 0)` are clamped to zero before the root; smaller
/// ones reject the input as not PSD.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let decomp = eigh(m)?;
    let scale = decomp
        .eigenvalues
        .iter()
        .fold(1.0f64, |acc, &v| acc.max(v.abs()));
    let min = decomp.eigenvalues.first().copied().unwrap_or(0.0);
    if min < PSD_REJECT * scale {
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: min,
        });
    }
    Ok(decomp.map_eigenvalues(|v| v.max(0.0).sqrt()))
}

/// Polar decomposition `L = P U` of a wide matrix (`rows ≤ cols`).
///
/// `P = √(L L†)` is Hermitian PSD and `U` is semi-unitary (`U U† = I`). For
/// rank-deficient `L` the null directions of `U` are completed with an
/// orthonormal extension; only `P` and the product `P U` are contractual.
pub fn polar_decompose(l: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let (d_s, d_e) = (l.rows(), l.cols());
    if d_s > d_e {
        return Err(Error::UnsupportedShape {
            context: "polar_decompose".into(),
            detail: format!("rows {d_s} exceed cols {d_e}; only wide/square shapes supported"),
        });
    }
    let gram = l.mul(&l.adjoint())?;
    let decomp = eigh(&gram)?;
    let p = decomp.map_eigenvalues(|v| v.max(0.0).sqrt());

    let lambda_max = decomp
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, &v| acc.max(v.max(0.0)));
    let rank_tol = 1e-12 * lambda_max.max(1e-300);

    // U = Σ_{λ_i > 0} v_i (λ_i^{-1/2} v_i† L) plus an orthonormal completion
    // of the remaining rows.
    let mut u_rows: Vec<Vec<Complex64>> = Vec::new();
    let mut kept: Vec<usize> = Vec::new();
    for (k, &lambda) in decomp.eigenvalues.iter().enumerate() {
        if lambda > rank_tol {
            let inv_sqrt = 1.0 / lambda.sqrt();
            let mut row = vec![Complex64::new(0.0, 0.0); d_e];
            for j in 0..d_e {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..d_s {
                    acc += decomp.eigenvectors[(i, k)].conj() * l[(i, j)];
                }
                row[j] = acc * Complex64::new(inv_sqrt, 0.0);
            }
            u_rows.push(row);
            kept.push(k);
        }
    }
    let missing = d_s - kept.len();
    let completion = if missing > 0 {
        orthonormal_completion(&u_rows, d_e, missing)?
    } else {
        Vec::new()
    };

    // Assemble U = Σ_k v_k w_k† over kept eigenvectors and the completion.
    let mut u = ComplexMatrix::zeros(d_s, d_e);
    let mut which = kept.clone();
    which.extend(
        (0..decomp.eigenvalues.len()).filter(|k| !kept.contains(k)),
    );
    let all_rows: Vec<&Vec<Complex64>> = u_rows.iter().chain(completion.iter()).collect();
    for (slot, &k) in which.iter().enumerate() {
        let w = all_rows[slot];
        for i in 0..d_s {
            let v_ik = decomp.eigenvectors[(i, k)];
            for j in 0..d_e {
                u[(i, j)] += v_ik * w[j];
            }
        }
    }
    Ok((p, u))
}
