//! The randomized verification sweep: every relation and identity evaluated
//! on seeded instances, with a deterministic report.

use std::time::Instant;

use uncertainty_core::av::{av_decompose, cauchy_schwarz_identity, sum_residual_identity};
use uncertainty_core::mixed::{amplitude_from_density, mp1_mixed, mp2_mixed, orthogonal_amplitude};
use uncertainty_core::propagation::{direct_variance, linear_variance, LinearCombo};
use uncertainty_core::relations::{
    maccone_pati_1, maccone_pati_2, robertson, schrodinger, sum_relation, weighted_general,
    weighted_general_2, xiao_weighted, RelationReport, Sign,
};
use uncertainty_core::tensor::{
    sample_density, sample_general, sample_hermitian, sample_semi_unitary, sample_unit_state,
};
use uncertainty_core::{Complex64, ComplexMatrix, Error, RandomSeed};

use crate::config::{worker_count, Tolerances};
use crate::report::{ReportRow, RowKind};

pub struct VerifyConfig {
    pub dims: Vec<usize>,
    pub seeds: std::ops::Range<u64>,
    pub tol: Tolerances,
    pub self_test_negate: bool,
}

fn relation_row(dim: usize, seed: u64, id: &str, report: &RelationReport) -> ReportRow {
    ReportRow::new(
        id,
        dim,
        seed,
        report.lhs,
        report.rhs,
        report.saturated,
        RowKind::Inequality,
    )
}

fn identity_row(dim: usize, seed: u64, id: &str, bound: f64, residual: f64) -> ReportRow {
    ReportRow::new(
        id,
        dim,
        seed,
        bound,
        residual,
        residual <= bound,
        RowKind::IdentityBound,
    )
}

fn instance_rows(dim: usize, seed: u64, tol: &Tolerances) -> Result<Vec<ReportRow>, Error> {
    let start = Instant::now();
    let base = RandomSeed(seed);
    let sat = tol.saturation;
    let mut rows = Vec::with_capacity(20);

    // --- identities -------------------------------------------------------
    let general = sample_general(dim, dim, base.split(10))?;
    let psi_raw = sample_unit_state(dim, base.split(11))?
        .scale(Complex64::from_polar(1.0 + (seed % 5) as f64 * 0.4, seed as f64));
    let dec = av_decompose(&general, &psi_raw)?;
    let rebuilt = psi_raw
        .scale(dec.expectation)
        .add_scaled(&dec.residual, Complex64::new(dec.delta, 0.0))?;
    let recon = general.apply(&psi_raw)?.sub(&rebuilt)?.norm()
        / (general.frobenius_norm() * psi_raw.norm());
    rows.push(identity_row(dim, seed, "av_reconstruction", tol.identity, recon));

    let herms: Vec<ComplexMatrix> = (0..3)
        .map(|k| sample_hermitian(dim, base.split(20 + k)))
        .collect::<Result<_, _>>()?;
    let psi = sample_unit_state(dim, base.split(12))?;
    let prim_sum = sum_residual_identity(&herms, &psi)?;
    rows.push(identity_row(dim, seed, "prim_sum_identity", tol.identity, prim_sum));

    let f = sample_unit_state(dim, base.split(13))?.scale(Complex64::new(1.3, -0.2));
    let g = sample_unit_state(dim, base.split(14))?.scale(Complex64::new(0.4, 1.1));
    match cauchy_schwarz_identity(&f, &g) {
        Ok(id) => {
            let rel = (id.lhs - id.rhs_sum).abs() / id.lhs;
            rows.push(identity_row(dim, seed, "cauchy_schwarz", tol.identity, rel));
        }
        Err(Error::CauchySchwarzDegenerate) => {}
        Err(other) => return Err(other),
    }

    let alphas: Vec<f64> = (0..3).map(|k| ((seed + k) as f64 * 0.53).cos() * 1.5).collect();
    let combo = LinearCombo::new(alphas, herms.clone())?;
    let lv = linear_variance(&combo, &psi)?;
    let dv = direct_variance(&combo, &psi)?;
    let rel = (lv - dv).abs() / dv.abs().max(1.0);
    rows.push(identity_row(dim, seed, "linear_prop", tol.identity, rel));

    // --- pure-state inequalities ------------------------------------------
    let a = &herms[0];
    let b = &herms[1];
    rows.push(relation_row(dim, seed, "robertson", &robertson(a, b, &psi, sat)?));
    rows.push(relation_row(dim, seed, "schrodinger", &schrodinger(a, b, &psi, sat)?));
    rows.push(relation_row(
        dim,
        seed,
        "sum_relation",
        &sum_relation(&herms, &psi, sat)?,
    ));
    rows.push(relation_row(
        dim,
        seed,
        "mp1_plus",
        &maccone_pati_1(a, b, &psi, None, Sign::Plus, sat)?,
    ));
    rows.push(relation_row(
        dim,
        seed,
        "mp1_minus",
        &maccone_pati_1(a, b, &psi, None, Sign::Minus, sat)?,
    ));
    let raw = sample_unit_state(dim, base.split(15))?;
    let overlap = psi.inner(&raw)?;
    let perp_raw = raw.add_scaled(&psi, -overlap)?;
    if perp_raw.norm() > 1e-6 {
        let perp = perp_raw.normalized()?;
        rows.push(relation_row(
            dim,
            seed,
            "mp1_supplied",
            &maccone_pati_1(a, b, &psi, Some(&perp), Sign::Plus, sat)?,
        ));
    }
    rows.push(relation_row(
        dim,
        seed,
        "mp2",
        &maccone_pati_2(a, b, &psi, sat)?,
    ));
    let phase = seed as f64 * 0.61;
    let alpha = Complex64::from_polar(1.0, phase);
    let beta = Complex64::from_polar(1.0, 1.7 * phase + 0.3);
    rows.push(relation_row(
        dim,
        seed,
        "gen_mp1_rand",
        &weighted_general(alpha, beta, a, b, &psi, None, sat)?,
    ));
    rows.push(relation_row(
        dim,
        seed,
        "gen_mp2_rand",
        &weighted_general_2(alpha, beta, a, b, &psi, sat)?,
    ));
    for (label, lambda) in [("xiao_0.5", 0.5), ("xiao_1", 1.0), ("xiao_2", 2.0)] {
        rows.push(relation_row(
            dim,
            seed,
            label,
            &xiao_weighted(lambda, a, b, &psi, None, None, Sign::Plus, sat)?,
        ));
    }

    // --- mixed-state inequalities -----------------------------------------
    let d_e = dim + 1;
    let rho = sample_density(dim, base.split(16))?;
    let u = sample_semi_unitary(dim, d_e, base.split(17))?;
    let l = amplitude_from_density(&rho, Some(&u))?;
    let cand = sample_general(dim, d_e, base.split(18))?;
    let l_perp = orthogonal_amplitude(&l, &cand)?;
    rows.push(relation_row(
        dim,
        seed,
        "mp1_mixed",
        &mp1_mixed(a, b, &l, &l_perp, Sign::Plus, sat)?,
    ));
    rows.push(relation_row(
        dim,
        seed,
        "mp2_mixed",
        &mp2_mixed(a, b, &l, sat)?,
    ));

    let elapsed = start.elapsed().as_micros() as u64;
    let per_row = elapsed / rows.len().max(1) as u64;
    for row in rows.iter_mut() {
        row.wall_time_micros = per_row;
    }
    Ok(rows)
}

/// Runs the sweep across `dims × seeds`, distributing instances over worker
/// threads. Rows come back in instance order regardless of the worker count.
pub fn run(config: &VerifyConfig) -> Result<Vec<ReportRow>, String> {
    let instances: Vec<(usize, u64)> = config
        .dims
        .iter()
        .flat_map(|&dim| config.seeds.clone().map(move |seed| (dim, seed)))
        .collect();
    let workers = worker_count(instances.len());
    let chunk_size = instances.len().div_ceil(workers).max(1);
    let tol = config.tol;

    let chunks: Vec<Result<Vec<ReportRow>, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = instances
            .chunks(chunk_size)
            .map(|chunk| {
                scope.spawn(move || {
                    let mut rows = Vec::new();
                    for &(dim, seed) in chunk {
                        rows.extend(instance_rows(dim, seed, &tol)?);
                    }
                    Ok(rows)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut rows = Vec::new();
    for chunk in chunks {
        rows.extend(chunk.map_err(|e| e.to_string())?);
    }
    if config.self_test_negate {
        // Flip the sign of one rhs without touching the stored slack; the
        // violation scan catches the inconsistency and reports the row.
        if let Some(row) = rows.iter_mut().find(|r| r.rhs != 0.0) {
            row.rhs = -row.rhs;
        }
    }
    Ok(rows)
}
