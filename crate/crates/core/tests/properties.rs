//! Property tests for the core invariants, mixing fixed-count sweeps with
//! proptest-driven cases.

use num_complex::Complex64;
use proptest::prelude::*;

use uncertainty_core::av::{av_decompose, correlation, expectation};
use uncertainty_core::propagation::{taylor_variance, TaylorInput};
use uncertainty_core::relations::{
    maccone_pati_1, maccone_pati_2, robertson, schrodinger, sum_relation, Sign,
    DEFAULT_SATURATION_TOL,
};
use uncertainty_core::tensor::{
    eigh, partial_trace, polar_decompose, psd_sqrt, sample_density, sample_general,
    sample_hermitian, sample_semi_unitary, sample_unit_state, ComplexMatrix, RandomSeed,
    StateVector, Subsystem,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn partial_trace_preserves_trace_across_1000_seeds() {
    let mut count = 0;
    for seed in 0..1000u64 {
        let d_s = 2 + (seed % 3) as usize;
        let d_e = 2 + ((seed / 3) % 3) as usize;
        let m = sample_general(d_s * d_e, d_s * d_e, RandomSeed(seed)).unwrap();
        let keep = if seed % 2 == 0 {
            Subsystem::System
        } else {
            Subsystem::Environment
        };
        let reduced = partial_trace(&m, (d_s, d_e), keep).unwrap();
        let gap = (reduced.trace() - m.trace()).norm();
        assert!(gap <= 1e-12 * m.trace().norm().max(1.0), "seed {seed}");
        count += 1;
    }
    assert_eq!(count, 1000);
}

#[test]
fn polar_recomposition_across_1000_rectangles() {
    for seed in 0..1000u64 {
        let d_s = 2 + (seed % 3) as usize;
        let d_e = d_s + (seed % 4) as usize;
        let l = sample_general(d_s, d_e, RandomSeed(seed)).unwrap();
        let (p, u) = polar_decompose(&l).unwrap();
        let err = p.mul(&u).unwrap().sub(&l).unwrap().frobenius_norm() / l.frobenius_norm();
        assert!(err <= 1e-9, "seed {seed} err {err}");
        let uu = u.mul(&u.adjoint()).unwrap();
        let defect = uu.sub(&ComplexMatrix::identity(d_s)).unwrap().frobenius_norm();
        assert!(defect <= 1e-9, "seed {seed} defect {defect}");
    }
}

#[test]
fn psd_sqrt_is_idempotent_on_roots() {
    for seed in 0..200u64 {
        let dim = 2 + (seed % 5) as usize;
        let g = sample_general(dim, dim, RandomSeed(seed)).unwrap();
        let m = g.mul(&g.adjoint()).unwrap();
        let r = psd_sqrt(&m).unwrap();
        let r_again = psd_sqrt(&r.mul(&r).unwrap()).unwrap();
        let gap = r_again.sub(&r).unwrap().frobenius_norm() / r.frobenius_norm().max(1.0);
        assert!(gap <= 1e-8, "seed {seed} gap {gap}");
    }
}

#[test]
fn eigh_eigenvalues_are_sorted_and_real_symmetric_consistent() {
    for seed in 0..100u64 {
        let dim = 2 + (seed % 6) as usize;
        let m = sample_hermitian(dim, RandomSeed(seed)).unwrap();
        let dec = eigh(&m).unwrap();
        for pair in dec.eigenvalues.windows(2) {
            assert!(pair[0] <= pair[1]);
        }
        let trace: f64 = dec.eigenvalues.iter().sum();
        assert!((trace - m.trace().re).abs() <= 1e-10 * m.frobenius_norm().max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn av_reconstruction_orthogonality_norm(seed in any::<u64>(), dim in 2usize..=16, scale in 0.2f64..4.0) {
        let a = sample_general(dim, dim, RandomSeed(seed)).unwrap();
        let psi = sample_unit_state(dim, RandomSeed(seed ^ 0xABCD)).unwrap()
            .scale(Complex64::from_polar(scale, seed as f64));
        let dec = av_decompose(&a, &psi).unwrap();
        let a_psi = a.apply(&psi).unwrap();
        let rebuilt = psi.scale(dec.expectation)
            .add_scaled(&dec.residual, c(dec.delta, 0.0)).unwrap();
        let err = a_psi.sub(&rebuilt).unwrap().norm();
        prop_assert!(err <= 1e-9 * a.frobenius_norm() * psi.norm());
        if !dec.eigenstate {
            prop_assert!(psi.inner(&dec.residual).unwrap().norm() <= 1e-10 * psi.norm_squared());
            let gap = (dec.residual.norm_squared() - psi.norm_squared()).abs();
            prop_assert!(gap <= 1e-10 * psi.norm_squared());
        }
    }

    #[test]
    fn av_scale_invariance(seed in any::<u64>(), dim in 2usize..=8, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        prop_assume!(re * re + im * im > 1e-4);
        let a = sample_general(dim, dim, RandomSeed(seed)).unwrap();
        let psi = sample_unit_state(dim, RandomSeed(seed ^ 0x1234)).unwrap();
        let scaled = psi.scale(c(re, im));
        let d1 = av_decompose(&a, &psi).unwrap();
        let d2 = av_decompose(&a, &scaled).unwrap();
        prop_assert!((d1.expectation - d2.expectation).norm() <= 1e-12 * (1.0 + d1.expectation.norm()));
        prop_assert!((d1.delta - d2.delta).abs() <= 1e-12 * (1.0 + d1.delta));
        if !d1.eigenstate {
            let overlap = d1.residual.inner(&d2.residual).unwrap().norm();
            let norms = d1.residual.norm() * d2.residual.norm();
            prop_assert!((overlap - norms).abs() <= 1e-9 * norms.max(1.0));
        }
    }

    #[test]
    fn correlation_conjugate_symmetry_and_bound(seed in any::<u64>(), dim in 2usize..=8) {
        let a = sample_hermitian(dim, RandomSeed(seed)).unwrap();
        let b = sample_hermitian(dim, RandomSeed(seed ^ 0xFACE)).unwrap();
        let psi = sample_unit_state(dim, RandomSeed(seed ^ 0xBEEF)).unwrap();
        let ab = correlation(&a, &b, &psi).unwrap().corr;
        let ba = correlation(&b, &a, &psi).unwrap().corr;
        prop_assert!((ab - ba.conj()).norm() <= 1e-10);
        prop_assert!(ab.norm() <= 1.0 + 1e-9);
    }

    #[test]
    fn hermitian_means_are_real(seed in any::<u64>(), dim in 2usize..=10) {
        let a = sample_hermitian(dim, RandomSeed(seed)).unwrap();
        let psi = sample_unit_state(dim, RandomSeed(seed ^ 0x77)).unwrap();
        prop_assert!(expectation(&a, &psi).unwrap().im.abs() <= 1e-10);
    }

    #[test]
    fn relation_slacks_never_go_negative(seed in any::<u64>(), dim in 2usize..=8) {
        let a = sample_hermitian(dim, RandomSeed(seed)).unwrap();
        let b = sample_hermitian(dim, RandomSeed(seed ^ 0xAA)).unwrap();
        let psi = sample_unit_state(dim, RandomSeed(seed ^ 0xBB)).unwrap();
        let tol = DEFAULT_SATURATION_TOL;
        prop_assert!(robertson(&a, &b, &psi, tol).unwrap().slack >= -1e-9);
        prop_assert!(schrodinger(&a, &b, &psi, tol).unwrap().slack >= -1e-9);
        prop_assert!(sum_relation(&[a.clone(), b.clone()], &psi, tol).unwrap().slack >= -1e-9);
        prop_assert!(maccone_pati_1(&a, &b, &psi, None, Sign::Plus, tol).unwrap().slack >= -1e-9);
        prop_assert!(maccone_pati_1(&a, &b, &psi, None, Sign::Minus, tol).unwrap().slack >= -1e-9);
        prop_assert!(maccone_pati_2(&a, &b, &psi, tol).unwrap().slack >= -1e-9);
    }

    #[test]
    fn density_samples_are_valid(seed in any::<u64>(), dim in 2usize..=6) {
        let rho = sample_density(dim, RandomSeed(seed)).unwrap();
        prop_assert!(rho.matrix().hermiticity_defect() <= 1e-10);
        prop_assert!(rho.min_eigenvalue() >= -1e-10);
        prop_assert!((rho.trace() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn semi_unitaries_satisfy_their_gram_identity(seed in any::<u64>(), d_s in 1usize..=4, extra in 0usize..=3) {
        let d_e = d_s + extra;
        let u = sample_semi_unitary(d_s, d_e, RandomSeed(seed)).unwrap();
        let gram = u.mul(&u.adjoint()).unwrap();
        let defect = gram.sub(&ComplexMatrix::identity(d_s)).unwrap().max_abs();
        prop_assert!(defect <= 1e-9);
    }

    #[test]
    fn taylor_single_variable_is_exact(g in -5.0f64..5.0, d in 0.0f64..3.0) {
        let input = TaylorInput::new(vec![g], vec![d], vec![1.0]).unwrap();
        prop_assert_eq!(taylor_variance(&input), (g * g * d * d).max(0.0));
    }

    #[test]
    fn state_norm_cache_is_consistent(amps in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..12)) {
        let psi = StateVector::new(amps.iter().map(|&(re, im)| c(re, im)).collect());
        let direct: f64 = amps.iter().map(|&(re, im)| re * re + im * im).sum();
        prop_assert!((psi.norm_squared() - direct).abs() <= 1e-12 * direct.max(1.0));
    }
}
