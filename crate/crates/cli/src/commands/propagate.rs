//! Propagation validation: linear-identity sweeps plus the Taylor
//! convergence family.

use uncertainty_core::propagation::{direct_variance, linear_variance, taylor_validate, LinearCombo};
use uncertainty_core::tensor::{sample_hermitian, sample_unit_state};
use uncertainty_core::{ComplexMatrix, RandomSeed, StateVector};

use crate::config::Tolerances;
use crate::report::{ReportRow, RowKind};

pub struct PropagateConfig {
    pub dims: Vec<usize>,
    pub seeds: std::ops::Range<u64>,
    pub tol: Tolerances,
}

/// Minimum contraction of the Taylor error per halving of the deviations.
const RATIO_FLOOR: f64 = 3.5;

fn product_family(s: f64) -> (Vec<ComplexMatrix>, StateVector) {
    let probs = [0.5f64, 0.3, 0.2];
    let x_raw = [1.0, -1.0, 0.5];
    let y_raw = [1.0, 0.5, -2.0];
    let mean = |v: &[f64]| -> f64 { v.iter().zip(&probs).map(|(x, p)| x * p).sum() };
    let (mx, my) = (mean(&x_raw), mean(&y_raw));
    let a: Vec<f64> = x_raw.iter().map(|x| 2.0 + s * (x - mx)).collect();
    let b: Vec<f64> = y_raw.iter().map(|y| 3.0 + s * (y - my)).collect();
    let psi = StateVector::new(
        probs
            .iter()
            .map(|&p| uncertainty_core::Complex64::new(p.sqrt(), 0.0))
            .collect(),
    );
    (
        vec![
            ComplexMatrix::diagonal_real(&a),
            ComplexMatrix::diagonal_real(&b),
        ],
        psi,
    )
}

pub fn run(config: &PropagateConfig) -> Result<Vec<ReportRow>, String> {
    let mut rows = Vec::new();

    // Exactness of the linear identity across seeded instances.
    for &dim in &config.dims {
        for seed in config.seeds.clone() {
            let base = RandomSeed(seed);
            let ops: Vec<ComplexMatrix> = (0..3)
                .map(|k| sample_hermitian(dim, base.split(30 + k)))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let alphas: Vec<f64> = (0..3)
                .map(|k| ((seed + k) as f64 * 0.53).cos() * 1.5)
                .collect();
            let psi = sample_unit_state(dim, base.split(33)).map_err(|e| e.to_string())?;
            let combo = LinearCombo::new(alphas, ops).map_err(|e| e.to_string())?;
            let lv = linear_variance(&combo, &psi).map_err(|e| e.to_string())?;
            let dv = direct_variance(&combo, &psi).map_err(|e| e.to_string())?;
            let rel = (lv - dv).abs() / dv.abs().max(1.0);
            rows.push(ReportRow::new(
                "linear_prop",
                dim,
                seed,
                config.tol.identity,
                rel,
                rel <= config.tol.identity,
                RowKind::IdentityBound,
            ));
        }
    }

    // Taylor family: exact vs approximate variance of a product observable
    // as the deviations shrink.
    let f = |v: &[f64]| v[0] * v[1];
    let mut errors = Vec::new();
    for (k, s) in [1.0, 0.5, 0.25].into_iter().enumerate() {
        let (ops, psi) = product_family(s);
        let v = taylor_validate(&f, None, &ops, &psi).map_err(|e| e.to_string())?;
        errors.push((v.exact - v.approx).abs());
        rows.push(ReportRow::new(
            "taylor_product",
            3,
            k as u64,
            v.exact,
            v.approx,
            v.rel_error <= 0.05,
            RowKind::Informational,
        ));
    }
    for (k, pair) in errors.windows(2).enumerate() {
        let ratio = pair[0] / pair[1].max(1e-300);
        rows.push(ReportRow::new(
            "taylor_error_ratio",
            3,
            k as u64,
            ratio,
            RATIO_FLOOR,
            ratio >= RATIO_FLOOR,
            RowKind::Inequality,
        ));
    }
    Ok(rows)
}
