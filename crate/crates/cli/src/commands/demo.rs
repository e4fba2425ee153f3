//! Canonical demos with known closed-form values.

use uncertainty_core::av::{av_decompose, correlation};
use uncertainty_core::relations::{maccone_pati_1, robertson, schrodinger, Sign};
use uncertainty_core::tensor::operators::{
    momentum, pauli_x, pauli_y, position, spin_x, spin_y,
};
use uncertainty_core::{Complex64, StateVector};

use crate::config::Tolerances;
use crate::report::{ReportRow, RowKind};

fn x_plus() -> StateVector {
    let inv = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    StateVector::new(vec![inv, inv])
}

fn value_row(id: &str, dim: usize, seed: u64, value: f64) -> ReportRow {
    ReportRow::new(id, dim, seed, value, value, true, RowKind::Informational)
}

/// Spin table on `|x+⟩` with `S = σ/2`: an eigenstate of `S_x` where the
/// commutator bounds collapse to zero while `ΔS_y` stays at 1/2 and the
/// first Maccone-Pati bound stays at `(ΔS_y)²` (the computed commutator bound
/// `½|⟨[S_x,S_y]⟩| = ½|⟨S_z⟩|` is used throughout).
pub fn pauli(tol: &Tolerances) -> Result<Vec<ReportRow>, String> {
    let psi = x_plus();
    let sat = tol.saturation;
    let dsx = av_decompose(&spin_x(), &psi).map_err(|e| e.to_string())?.delta;
    let dsy = av_decompose(&spin_y(), &psi).map_err(|e| e.to_string())?.delta;
    let rob = robertson(&spin_x(), &spin_y(), &psi, sat).map_err(|e| e.to_string())?;
    let sch = schrodinger(&spin_x(), &spin_y(), &psi, sat).map_err(|e| e.to_string())?;
    let mp1_plus = maccone_pati_1(&spin_x(), &spin_y(), &psi, None, Sign::Plus, sat)
        .map_err(|e| e.to_string())?;
    let mp1_minus = maccone_pati_1(&spin_x(), &spin_y(), &psi, None, Sign::Minus, sat)
        .map_err(|e| e.to_string())?;
    Ok(vec![
        value_row("spin_delta_sx", 2, 0, dsx),
        value_row("spin_delta_sy", 2, 0, dsy),
        ReportRow::new("robertson", 2, 0, rob.lhs, rob.rhs, rob.saturated, RowKind::Inequality),
        ReportRow::new("schrodinger", 2, 0, sch.lhs, sch.rhs, sch.saturated, RowKind::Inequality),
        ReportRow::new(
            "mp1_plus_optimal",
            2,
            0,
            mp1_plus.lhs,
            mp1_plus.rhs,
            mp1_plus.saturated,
            RowKind::Inequality,
        ),
        ReportRow::new(
            "mp1_minus_optimal",
            2,
            0,
            mp1_minus.lhs,
            mp1_minus.rhs,
            mp1_minus.saturated,
            RowKind::Inequality,
        ),
    ])
}

/// `Δx Δp` against `½|⟨[x,p]⟩|` on truncated oscillators (ħ = 1): number
/// states `|n⟩` for n = 0, 1, 2 at truncations 10, 25, 50. The seed column
/// carries n.
pub fn oscillator(tol: &Tolerances) -> Result<Vec<ReportRow>, String> {
    let mut rows = Vec::new();
    for dim in [10usize, 25, 50] {
        let x = position(dim);
        let p = momentum(dim);
        for n in 0..3u64 {
            let state = StateVector::basis(dim, n as usize);
            let report = robertson(&x, &p, &state, tol.saturation).map_err(|e| e.to_string())?;
            rows.push(ReportRow::new(
                "heisenberg",
                dim,
                n,
                report.lhs,
                report.rhs,
                report.saturated,
                RowKind::Inequality,
            ));
        }
    }
    Ok(rows)
}

/// The σx/σy/|0⟩ saturation instance: Robertson, Schrödinger, and both first
/// Maccone-Pati branches are tight, with `corr = i`.
pub fn mp_saturation(tol: &Tolerances) -> Result<Vec<ReportRow>, String> {
    let psi = StateVector::basis(2, 0);
    let sat = tol.saturation;
    let rob = robertson(&pauli_x(), &pauli_y(), &psi, sat).map_err(|e| e.to_string())?;
    let sch = schrodinger(&pauli_x(), &pauli_y(), &psi, sat).map_err(|e| e.to_string())?;
    let plus = maccone_pati_1(&pauli_x(), &pauli_y(), &psi, None, Sign::Plus, sat)
        .map_err(|e| e.to_string())?;
    let minus = maccone_pati_1(&pauli_x(), &pauli_y(), &psi, None, Sign::Minus, sat)
        .map_err(|e| e.to_string())?;
    let corr = correlation(&pauli_x(), &pauli_y(), &psi).map_err(|e| e.to_string())?;
    Ok(vec![
        ReportRow::new("robertson", 2, 0, rob.lhs, rob.rhs, rob.saturated, RowKind::Inequality),
        ReportRow::new("schrodinger", 2, 0, sch.lhs, sch.rhs, sch.saturated, RowKind::Inequality),
        ReportRow::new("mp1_plus", 2, 0, plus.lhs, plus.rhs, plus.saturated, RowKind::Inequality),
        ReportRow::new("mp1_minus", 2, 0, minus.lhs, minus.rhs, minus.saturated, RowKind::Inequality),
        ReportRow::new("corr_imag", 2, 0, 1.0, corr.imcorr(), true, RowKind::Informational),
    ])
}
