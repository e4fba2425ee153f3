//! Shared fixtures for the kernel benchmarks.

use uncertainty_core::tensor::{
    sample_density, sample_general, sample_hermitian, sample_semi_unitary, sample_unit_state,
    ComplexMatrix, DensityOperator, RandomSeed, StateVector,
};

pub struct PureFixture {
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub psi: StateVector,
}

pub fn pure_fixture(dim: usize) -> PureFixture {
    PureFixture {
        a: sample_hermitian(dim, RandomSeed(1)).unwrap(),
        b: sample_hermitian(dim, RandomSeed(2)).unwrap(),
        psi: sample_unit_state(dim, RandomSeed(3)).unwrap(),
    }
}

pub fn general_operator(dim: usize) -> ComplexMatrix {
    sample_general(dim, dim, RandomSeed(4)).unwrap()
}

pub struct MixedFixture {
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub rho: DensityOperator,
    pub u: ComplexMatrix,
    pub candidate: ComplexMatrix,
}

pub fn mixed_fixture(d_s: usize, d_e: usize) -> MixedFixture {
    MixedFixture {
        a: sample_hermitian(d_s, RandomSeed(5)).unwrap(),
        b: sample_hermitian(d_s, RandomSeed(6)).unwrap(),
        rho: sample_density(d_s, RandomSeed(7)).unwrap(),
        u: sample_semi_unitary(d_s, d_e, RandomSeed(8)).unwrap(),
        candidate: sample_general(d_s, d_e, RandomSeed(9)).unwrap(),
    }
}
