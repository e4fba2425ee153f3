//! Density operators: Hermitian, positive semidefinite, finite trace.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{eigh, ComplexMatrix, StateVector};

const HERMITICITY_TOL: f64 = 1e-10;
const EIGENVALUE_FLOOR: f64 = -1e-10;

/// Validated density operator (unnormalized trace allowed).
#[derive(Debug, Clone)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
    trace: f64,
    min_eigenvalue: f64,
}

impl DensityOperator {
    /// Validates Hermiticity (max elementwise defect ≤ 1e-10 relative),
    /// positivity (eigenvalues ≥ -1e-10 relative), and records the trace.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::dims(
                "DensityOperator::new",
                "square matrix",
                format!("{}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        let scale = matrix.max_abs().max(1.0);
        let defect = matrix.hermiticity_defect();
        if defect > HERMITICITY_TOL * scale {
            return Err(Error::NonHermitian {
                context: "DensityOperator::new".into(),
                defect,
            });
        }
        let decomp = eigh(&matrix)?;
        let min_eigenvalue = decomp.eigenvalues.first().copied().unwrap_or(0.0);
        if min_eigenvalue < EIGENVALUE_FLOOR * scale {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue,
            });
        }
        let trace = matrix.trace().re;
        Ok(Self {
            matrix,
            trace,
            min_eigenvalue,
        })
    }

    /// `|ψ⟩⟨ψ| / ⟨ψ|ψ⟩` for a nonzero vector.
    pub fn from_pure(psi: &StateVector) -> Result<Self> {
        let unit = psi.normalized()?;
        Self::new(unit.outer())
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension {
                context: "DensityOperator::maximally_mixed".into(),
                detail: "dimension must be positive".into(),
            });
        }
        Self::new(ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0)))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.trace
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    /// `tr(A ρ) / tr(ρ)`.
    pub fn expectation(&self, a: &ComplexMatrix) -> Result<Complex64> {
        if a.rows() != self.dim() || a.cols() != self.dim() {
            return Err(Error::dims(
                "DensityOperator::expectation",
                self.dim(),
                a.rows(),
            ));
        }
        Ok(a.mul(&self.matrix)?.trace() / Complex64::new(self.trace, 0.0))
    }
}
