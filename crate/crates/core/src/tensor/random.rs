//! Seeded, reproducible sampling of states, operators, and semi-unitaries.
//!
//! All sampling is driven by ChaCha8 keyed from a 64-bit seed, with standard
//! complex Gaussian entries (`re, im ~ N(0,1)` via the ziggurat sampler).
//! Identical seed and parameters give a bit-identical stream on every
//! platform. Seeds split with a SplitMix64 mix, so disjoint worker streams
//! never overlap.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::tensor::orth::orthonormalize_columns;
use crate::tensor::{ComplexMatrix, DensityOperator, StateVector};

/// 64-bit seed for reproducible sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RandomSeed(pub u64);

impl RandomSeed {
    /// Derives an independent child seed (SplitMix64 finalizer over
    /// `seed + index * golden`).
    pub fn split(self, index: u64) -> RandomSeed {
        let mut z = self
            .0
            .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        RandomSeed(z ^ (z >> 31))
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

fn check_dim(context: &str, dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidDimension {
            context: context.into(),
            detail: "dimension must be positive".into(),
        });
    }
    Ok(())
}

fn gaussian_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

pub(crate) fn gaussian_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian_complex(rng))
}

/// Unit-norm random state of the given dimension.
pub fn sample_unit_state(dim: usize, seed: RandomSeed) -> Result<StateVector> {
    check_dim("sample_unit_state", dim)?;
    let mut rng = seed.rng();
    let raw = StateVector::from_fn(dim, |_| gaussian_complex(&mut rng));
    raw.normalized()
}

/// Hermitian matrix `(G + G†)/2` with standard complex Gaussian `G`.
pub fn sample_hermitian(dim: usize, seed: RandomSeed) -> Result<ComplexMatrix> {
    check_dim("sample_hermitian", dim)?;
    let mut rng = seed.rng();
    let g = gaussian_matrix(dim, dim, &mut rng);
    g.add(&g.adjoint()).map(|m| m.scale(Complex64::new(0.5, 0.0)))
}

/// Density operator `G G† / tr(G G†)`; full rank almost surely.
pub fn sample_density(dim: usize, seed: RandomSeed) -> Result<DensityOperator> {
    check_dim("sample_density", dim)?;
    let mut rng = seed.rng();
    let g = gaussian_matrix(dim, dim, &mut rng);
    let gram = g.mul(&g.adjoint())?;
    let trace = gram.trace().re;
    DensityOperator::new(gram.scale(Complex64::new(1.0 / trace, 0.0)))
}

/// Semi-unitary `U` (`U U† = I`): the first `d_s` rows of the unitary
/// obtained by orthonormalizing a `d_e × d_e` Gaussian matrix.
pub fn sample_semi_unitary(d_s: usize, d_e: usize, seed: RandomSeed) -> Result<ComplexMatrix> {
    check_dim("sample_semi_unitary", d_s)?;
    check_dim("sample_semi_unitary", d_e)?;
    if d_s > d_e {
        return Err(Error::InvalidDimension {
            context: "sample_semi_unitary".into(),
            detail: format!("d_s {d_s} exceeds d_e {d_e}"),
        });
    }
    let mut rng = seed.rng();
    let g = gaussian_matrix(d_e, d_e, &mut rng);
    let q = orthonormalize_columns(&g)?;
    Ok(ComplexMatrix::from_fn(d_s, d_e, |i, j| q[(i, j)]))
}

/// General (rectangular) Gaussian matrix.
pub fn sample_general(rows: usize, cols: usize, seed: RandomSeed) -> Result<ComplexMatrix> {
    check_dim("sample_general", rows)?;
    check_dim("sample_general", cols)?;
    let mut rng = seed.rng();
    Ok(gaussian_matrix(rows, cols, &mut rng))
}
