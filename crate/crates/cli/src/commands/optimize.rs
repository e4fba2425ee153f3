//! Mixed-bound maximization and conjecture sweeps from a JSON problem spec.

use uncertainty_core::mixed::{conjecture_sweep, optimize_mixed_bound, MixedRelation};
use uncertainty_core::relations::Sign;
use uncertainty_core::{RandomSeed, SearchBudget};

use crate::input::ProblemSpec;
use crate::report::{ReportRow, RowKind};

pub struct OptimizeConfig {
    pub spec: String,
    pub relation: MixedRelation,
    pub d_e_range: (usize, usize),
    pub budget: SearchBudget,
    pub seed: u64,
}

/// Plateau gains at or above 1e-3 are merely informational; the rows carry
/// the gain in `rhs` against the 1e-3 reference in `lhs`.
const PLATEAU_REFERENCE: f64 = 1e-3;

pub fn run(config: &OptimizeConfig) -> Result<Vec<ReportRow>, String> {
    let (a, b, rho) = ProblemSpec::load(&config.spec)?.parse()?;
    let (lo, hi) = config.d_e_range;
    let seed = RandomSeed(config.seed);
    let mut rows = Vec::new();

    if lo == hi {
        let result = optimize_mixed_bound(config.relation, &a, &b, &rho, lo, &config.budget, seed)
            .map_err(|e| e.to_string())?;
        let id = match config.relation {
            MixedRelation::Mp1(_) => "mp1_opt",
            MixedRelation::Mp2 => "mp2_opt",
        };
        rows.push(ReportRow::new(
            id,
            result.d_e,
            result.best_seed.0,
            result.lhs,
            result.best_rhs,
            (result.lhs - result.best_rhs).abs() <= PLATEAU_REFERENCE,
            RowKind::Inequality,
        ));
        return Ok(rows);
    }

    let sign = match config.relation {
        MixedRelation::Mp1(sign) => sign,
        MixedRelation::Mp2 => Sign::Plus,
    };
    let sweep = conjecture_sweep(&a, &b, &rho, (lo, hi), &config.budget, seed, sign)
        .map_err(|e| e.to_string())?;
    // Recompute lhs once for the slack column of the sweep rows.
    let probe = optimize_mixed_bound(
        MixedRelation::Mp1(sign),
        &a,
        &b,
        &rho,
        lo,
        &SearchBudget {
            restarts: 1,
            evals_per_restart: 1,
        },
        seed,
    )
    .map_err(|e| e.to_string())?;
    for row in &sweep.rows {
        rows.push(ReportRow::new(
            "conjecture_sweep",
            row.d_e,
            row.best_seed.0,
            probe.lhs,
            row.best_rhs,
            false,
            RowKind::Inequality,
        ));
    }
    for &(d_e, gain) in &sweep.plateau {
        rows.push(ReportRow::new(
            "plateau_gain",
            d_e,
            config.seed,
            PLATEAU_REFERENCE,
            gain,
            gain <= PLATEAU_REFERENCE,
            RowKind::Informational,
        ));
    }
    Ok(rows)
}
