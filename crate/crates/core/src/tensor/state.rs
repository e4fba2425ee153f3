//! State vectors with a cached squared norm.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex amplitude vector, possibly unnormalized.
///
/// `norm_squared` is recomputed at every construction, so the cache is always
/// exact for the stored amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    norm_squared: f64,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        let norm_squared = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        Self {
            amplitudes,
            norm_squared,
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize) -> Complex64) -> Self {
        Self::new((0..dim).map(|i| f(i)).collect())
    }

    /// Computational basis vector `|index⟩`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Self::new(amps)
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0); dim])
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_squared(&self) -> f64 {
        self.norm_squared
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared.sqrt()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm_squared <= tol
    }

    /// Inner product `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::dims("StateVector::inner", self.dim(), other.dim()));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.amplitudes.iter().map(|z| z * factor).collect())
    }

    /// `self + coeff * other`.
    pub fn add_scaled(&self, other: &Self, coeff: Complex64) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::dims(
                "StateVector::add_scaled",
                self.dim(),
                other.dim(),
            ));
        }
        Ok(Self::new(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + coeff * b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, Complex64::new(-1.0, 0.0))
    }

    pub fn normalized(&self) -> Result<Self> {
        if self.norm_squared <= 0.0 {
            return Err(Error::ZeroVector {
                context: "StateVector::normalized",
            });
        }
        Ok(self.scale(Complex64::new(1.0 / self.norm(), 0.0)))
    }

    /// Projector `|ψ⟩⟨ψ|` as a matrix.
    pub fn outer(&self) -> crate::tensor::ComplexMatrix {
        crate::tensor::ComplexMatrix::from_fn(self.dim(), self.dim(), |i, j| {
            self.amplitudes[i] * self.amplitudes[j].conj()
        })
    }
}
