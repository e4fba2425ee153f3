//! Uncertainty relations evaluated as `(lhs, rhs, slack)` reports.
//!
//! Conventions shared by every evaluator:
//!
//! * `slack = lhs - rhs` exactly as computed; a valid input never produces
//!   slack below `-1e-9`.
//! * `saturated ⇔ |slack| ≤ tolerance` (default [`DEFAULT_SATURATION_TOL`],
//!   caller-overridable through the `sat_tol` argument).
//! * For the first Maccone-Pati relation and its weighted relatives, the sign
//!   argument picks the branch: `Plus` means the bound
//!   `+i⟨[A,B]⟩ + |⟨ψ⊥|(A - iB)|ψ⟩|²`, `Minus` the conjugate branch with
//!   `A + iB`.
//! * When no orthogonal vector is supplied, the one that provably maximizes
//!   the bound is used: the normalized projection of the combined operator
//!   applied to `ψ` onto the orthogonal complement of `ψ`.

use num_complex::Complex64;

use crate::av::{av_decompose, correlation, expectation, DEFAULT_ATOL};
use crate::error::{Error, Result};
use crate::simplex::{multistart, SearchBudget};
use crate::tensor::{
    anticommutator, commutator, linear_combination, ComplexMatrix, RandomSeed, StateVector,
};

/// Default absolute tolerance on `|slack|` for the saturated flag.
pub const DEFAULT_SATURATION_TOL: f64 = 1e-8;

const UNIT_TOL: f64 = 1e-8;
const ORTHOGONALITY_TOL: f64 = 1e-9;

/// Which inequality a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationId {
    Robertson,
    Schrodinger,
    SumRelation,
    MacconePati1,
    MacconePati2,
    WeightedGeneral,
    WeightedGeneral2,
    XiaoWeighted,
    Mp1Mixed,
    Mp2Mixed,
}

impl RelationId {
    pub fn as_str(&self) -> &'static str {
        match self {
            RelationId::Robertson => "robertson",
            RelationId::Schrodinger => "schrodinger",
            RelationId::SumRelation => "sum_relation",
            RelationId::MacconePati1 => "maccone_pati_1",
            RelationId::MacconePati2 => "maccone_pati_2",
            RelationId::WeightedGeneral => "weighted_general",
            RelationId::WeightedGeneral2 => "weighted_general_2",
            RelationId::XiaoWeighted => "xiao_weighted",
            RelationId::Mp1Mixed => "mp1_mixed",
            RelationId::Mp2Mixed => "mp2_mixed",
        }
    }
}

impl std::fmt::Display for RelationId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Branch selector for the Maccone-Pati-type bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The factor in front of `⟨[A,B]⟩` on the bound side.
    fn commutator_factor(self) -> Complex64 {
        match self {
            Sign::Plus => Complex64::new(0.0, 1.0),
            Sign::Minus => Complex64::new(0.0, -1.0),
        }
    }

    /// Coefficient of `B` in the combined operator `A ∓ iB`.
    fn combine_coeff(self) -> Complex64 {
        match self {
            Sign::Plus => Complex64::new(0.0, -1.0),
            Sign::Minus => Complex64::new(0.0, 1.0),
        }
    }
}

/// Auxiliary data attached to a report.
#[derive(Debug, Clone, Default)]
pub struct Witness {
    pub scalars: Vec<(&'static str, f64)>,
    pub perp: Option<StateVector>,
    pub perp2: Option<StateVector>,
}

impl Witness {
    pub fn scalar(&self, name: &str) -> Option<f64> {
        self.scalars
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }
}

/// Two sides of an inequality plus the saturation verdict.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub relation: RelationId,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub saturated: bool,
    pub tolerance: f64,
    pub witness: Option<Witness>,
}

impl RelationReport {
    pub fn new(
        relation: RelationId,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        witness: Option<Witness>,
    ) -> Self {
        let slack = lhs - rhs;
        Self {
            relation,
            lhs,
            rhs,
            slack,
            saturated: slack.abs() <= tolerance,
            tolerance,
            witness,
        }
    }
}

pub(crate) fn ensure_hermitian(m: &ComplexMatrix, name: &str) -> Result<()> {
    let scale = m.max_abs().max(1.0);
    let defect = m.hermiticity_defect();
    if defect > 1e-9 * scale {
        return Err(Error::NonHermitian {
            context: name.into(),
            defect,
        });
    }
    Ok(())
}

pub(crate) fn ensure_unit(psi: &StateVector, context: &str) -> Result<()> {
    let nsq = psi.norm_squared();
    if (nsq - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotNormalized {
            context: context.into(),
            value: nsq,
        });
    }
    Ok(())
}

/// `αA + βB` through one shared accumulation order, so specialization
/// identities between evaluators hold at float precision.
fn combine(
    alpha: Complex64,
    a: &ComplexMatrix,
    beta: Complex64,
    b: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    linear_combination(&[(alpha, a), (beta, b)])
}

/// Normalized projection of `Mψ` onto the orthogonal complement of unit `ψ`;
/// `None` when `Mψ` is parallel to `ψ` (the bound term is then zero).
fn optimal_perp(m: &ComplexMatrix, psi: &StateVector) -> Result<Option<StateVector>> {
    let m_psi = m.apply(psi)?;
    let overlap = psi.inner(&m_psi)?;
    let projected = m_psi.add_scaled(psi, -overlap)?;
    let scale = m.frobenius_norm().max(1.0);
    if projected.norm() <= DEFAULT_ATOL * scale {
        return Ok(None);
    }
    Ok(Some(projected.normalized()?))
}

fn validate_perp(perp: &StateVector, psi: &StateVector, context: &str) -> Result<()> {
    ensure_unit(perp, context)?;
    let overlap = perp.inner(psi)?.norm();
    if overlap > ORTHOGONALITY_TOL {
        return Err(Error::NonOrthogonal {
            context: context.into(),
            overlap,
        });
    }
    Ok(())
}

/// `|⟨ψ⊥|Mψ⟩|²` for a validated or optimally chosen orthogonal vector.
/// Returns the term, the vector used (if any), and whether the optimal
/// projection degenerated.
fn perp_term(
    m: &ComplexMatrix,
    psi: &StateVector,
    supplied: Option<&StateVector>,
    context: &str,
) -> Result<(f64, Option<StateVector>, bool)> {
    let perp = match supplied {
        Some(p) => {
            validate_perp(p, psi, context)?;
            Some(p.clone())
        }
        None => optimal_perp(m, psi)?,
    };
    match perp {
        Some(p) => {
            let amplitude = p.inner(&m.apply(psi)?)?;
            Ok((amplitude.norm_sqr(), Some(p), false))
        }
        None => Ok((0.0, None, true)),
    }
}

/// `ΔA ΔB ≥ ½|⟨[A,B]⟩|`.
pub fn robertson(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    sat_tol: f64,
) -> Result<RelationReport> {
    ensure_hermitian(a, "robertson: A")?;
    ensure_hermitian(b, "robertson: B")?;
    ensure_unit(psi, "robertson")?;
    let da = av_decompose(a, psi)?;
    let db = av_decompose(b, psi)?;
    let comm_exp = expectation(&commutator(a, b)?, psi)?;
    let lhs = da.delta * db.delta;
    let rhs = 0.5 * comm_exp.norm();

    let mut witness = Witness {
        scalars: vec![("delta_a", da.delta), ("delta_b", db.delta)],
        ..Witness::default()
    };
    if !da.eigenstate && !db.eigenstate {
        if let Ok(corr) = correlation(a, b, psi) {
            witness.scalars.push(("imcorr", corr.imcorr()));
        }
    }
    Ok(RelationReport::new(
        RelationId::Robertson,
        lhs,
        rhs,
        sat_tol,
        Some(witness),
    ))
}

/// `(ΔA)²(ΔB)² ≥ |½⟨{A,B}⟩ - ⟨A⟩⟨B⟩|² + |½⟨[A,B]⟩|²`.
pub fn schrodinger(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    sat_tol: f64,
) -> Result<RelationReport> {
    ensure_hermitian(a, "schrodinger: A")?;
    ensure_hermitian(b, "schrodinger: B")?;
    ensure_unit(psi, "schrodinger")?;
    let da = av_decompose(a, psi)?;
    let db = av_decompose(b, psi)?;
    let anti_exp = expectation(&anticommutator(a, b)?, psi)?;
    let comm_exp = expectation(&commutator(a, b)?, psi)?;
    let covariance = anti_exp * Complex64::new(0.5, 0.0) - da.expectation * db.expectation;
    let lhs = (da.delta * db.delta).powi(2);
    let rhs = covariance.norm_sqr() + (comm_exp * Complex64::new(0.5, 0.0)).norm_sqr();

    let mut witness = Witness {
        scalars: vec![("delta_a", da.delta), ("delta_b", db.delta)],
        ..Witness::default()
    };
    if !da.eigenstate && !db.eigenstate {
        if let Ok(corr) = correlation(a, b, psi) {
            witness.scalars.push(("abs_corr", corr.corr.norm()));
        }
    }
    Ok(RelationReport::new(
        RelationId::Schrodinger,
        lhs,
        rhs,
        sat_tol,
        Some(witness),
    ))
}

/// `Σ_j ΔA_j ≥ Δ(Σ_j A_j)`; holds for arbitrary linear operators.
pub fn sum_relation(
    ops: &[ComplexMatrix],
    psi: &StateVector,
    sat_tol: f64,
) -> Result<RelationReport> {
    if ops.len() < 2 {
        return Err(Error::InvalidDimension {
            context: "sum_relation".into(),
            detail: format!("need at least 2 operators, got {}", ops.len()),
        });
    }
    ensure_unit(psi, "sum_relation")?;
    let one = Complex64::new(1.0, 0.0);
    let terms: Vec<(Complex64, &ComplexMatrix)> = ops.iter().map(|m| (one, m)).collect();
    let total = linear_combination(&terms)?;
    let dec_total = av_decompose(&total, psi)?;

    let mut lhs = 0.0;
    let mut witness = Witness::default();
    for (j, op) in ops.iter().enumerate() {
        let dec = av_decompose(op, psi)?;
        lhs += dec.delta;
        // Equality condition per term: Rcorr(ΣA, A_j) = 1.
        if !dec_total.eigenstate && !dec.eigenstate {
            if let Ok(corr) = correlation(&total, op, psi) {
                let name: &'static str = match j {
                    0 => "rcorr_0",
                    1 => "rcorr_1",
                    2 => "rcorr_2",
                    3 => "rcorr_3",
                    _ => "rcorr_n",
                };
                witness.scalars.push((name, corr.rcorr()));
            }
        }
    }
    let rhs = dec_total.delta;
    Ok(RelationReport::new(
        RelationId::SumRelation,
        lhs,
        rhs,
        sat_tol,
        Some(witness),
    ))
}

/// `(ΔA)² + (ΔB)² ≥ ±i⟨[A,B]⟩ + |⟨ψ⊥|(A ∓ iB)|ψ⟩|²`.
///
/// A supplied `ψ⊥` must be unit and orthogonal to `ψ`; otherwise the
/// bound-maximizing choice is used. If the optimal projection degenerates
/// (`(A ∓ iB)ψ ∝ ψ`), the bound term is zero and the witness carries a
/// `perp_degenerate` flag.
pub fn maccone_pati_1(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    psi_perp: Option<&StateVector>,
    sign: Sign,
    sat_tol: f64,
) -> Result<RelationReport> {
    ensure_hermitian(a, "maccone_pati_1: A")?;
    ensure_hermitian(b, "maccone_pati_1: B")?;
    ensure_unit(psi, "maccone_pati_1")?;
    let da = av_decompose(a, psi)?;
    let db = av_decompose(b, psi)?;
    let lhs = da.delta * da.delta + db.delta * db.delta;

    let comm_exp = expectation(&commutator(a, b)?, psi)?;
    let comm_term = (sign.commutator_factor() * comm_exp).re;
    let m = combine(Complex64::new(1.0, 0.0), a, sign.combine_coeff(), b)?;
    let (term, perp, degenerate) = perp_term(&m, psi, psi_perp, "maccone_pati_1")?;
    let rhs = comm_term + term;

    let mut witness = Witness {
        scalars: vec![
            ("delta_a", da.delta),
            ("delta_b", db.delta),
            ("comm_term", comm_term),
            ("perp_term", term),
        ],
        perp,
        ..Witness::default()
    };
    if degenerate {
        witness.scalars.push(("perp_degenerate", 1.0));
    }
    Ok(RelationReport::new(
        RelationId::MacconePati1,
        lhs,
        rhs,
        sat_tol,
        Some(witness),
    ))
}

/// `(ΔA)² + (ΔB)² ≥ ½|⟨ψ⊥_{A+B}|(A+B)|ψ⟩|²` with the canonical residual of
/// `A + B`; the bound is zero when `ψ` is an eigenstate of `A + B`.
pub fn maccone_pati_2(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    sat_tol: f64,
) -> Result<RelationReport> {
    weighted_bound_2(
        RelationId::MacconePati2,
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        a,
        b,
        psi,
        sat_tol,
    )
}

/// `|α|²(ΔA)² + |β|²(ΔB)² ≥ -Re(α*β)(⟨{A,B}⟩ - 2⟨A⟩⟨B⟩)
///  - i·Im(α*β)⟨[A,B]⟩ + |⟨ψ⊥|(αA + βB)|ψ⟩|²`.
///
/// With `(α, β) = (1, ∓i)` this reproduces [`maccone_pati_1`] field for
/// field.
pub fn weighted_general(
    alpha: Complex64,
    beta: Complex64,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    psi_perp: Option<&StateVector>,
    sat_tol: f64,
) -> Result<RelationReport> {
    if alpha.norm_sqr() == 0.0 && beta.norm_sqr() == 0.0 {
        return Err(Error::ZeroWeights);
    }
    ensure_hermitian(a, "weighted_general: A")?;
    ensure_hermitian(b, "weighted_general: B")?;
    ensure_unit(psi, "weighted_general")?;
    let da = av_decompose(a, psi)?;
    let db = av_decompose(b, psi)?;
    let lhs = alpha.norm_sqr() * da.delta * da.delta + beta.norm_sqr() * db.delta * db.delta;

    let anti_exp = expectation(&anticommutator(a, b)?, psi)?;
    let comm_exp = expectation(&commutator(a, b)?, psi)?;
    let ab = alpha.conj() * beta;
    let corr_part = -Complex64::new(ab.re, 0.0)
        * (anti_exp - Complex64::new(2.0, 0.0) * da.expectation * db.expectation)
        - Complex64::new(0.0, 1.0) * Complex64::new(ab.im, 0.0) * comm_exp;
    let m = combine(alpha, a, beta, b)?;
    let (term, perp, degenerate) = perp_term(&m, psi, psi_perp, "weighted_general")?;
    let rhs = corr_part.re + term;

    let mut witness = Witness {
        scalars: vec![
            ("delta_a", da.delta),
            ("delta_b", db.delta),
            ("comm_term", corr_part.re),
            ("perp_term", term),
        ],
        perp,
        ..Witness::default()
    };
    if degenerate {
        witness.scalars.push(("perp_degenerate", 1.0));
    }
    Ok(RelationReport::new(
        RelationId::WeightedGeneral,
        lhs,
        rhs,
        sat_tol,
        Some(witness),
    ))
}

fn weighted_bound_2(
    relation: RelationId,
    alpha: Complex64,
    beta: Complex64,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    sat_tol: f64,
) -> Result<RelationReport> {
    if alpha.norm_sqr() == 0.0 && beta.norm_sqr() == 0.0 {
        return Err(Error::ZeroWeights);
    }
    ensure_unit(psi, "weighted_general_2")?;
    let da = av_decompose(a, psi)?;
    let db = av_decompose(b, psi)?;
    let lhs = alpha.norm_sqr() * da.delta * da.delta + beta.norm_sqr() * db.delta * db.delta;

    let m = combine(alpha, a, beta, b)?;
    let dec = av_decompose(&m, psi)?;
    let (rhs, eigen) = if dec.eigenstate {
        (0.0, true)
    } else {
        let amplitude = dec.residual.inner(&m.apply(psi)?)?;
        (0.5 * amplitude.norm_sqr(), false)
    };

    let mut witness = Witness {
        scalars: vec![
            ("delta_a", da.delta),
            ("delta_b", db.delta),
            ("delta_combined", dec.delta),
        ],
        perp: (!eigen).then(|| dec.residual.clone()),
        ..Witness::default()
    };
    if eigen {
        witness.scalars.push(("combined_eigenstate", 1.0));
    }
    Ok(RelationReport::new(relation, lhs, rhs, sat_tol, Some(witness)))
}

/// `|α|²(ΔA)² + |β|²(ΔB)² ≥ ½|⟨ψ⊥_{αA+βB}|(αA + βB)|ψ⟩|²`.
pub fn weighted_general_2(
    alpha: Complex64,
    beta: Complex64,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    sat_tol: f64,
) -> Result<RelationReport> {
    weighted_bound_2(RelationId::WeightedGeneral2, alpha, beta, a, b, psi, sat_tol)
}

/// The λ-weighted combination
/// `(1+λ)(ΔA)² + (1+1/λ)(ΔB)² ≥ ±2i⟨[A,B]⟩ + |⟨ψ⊥₁|(A ∓ iB)|ψ⟩|²
///  + (1/λ)|⟨ψ⊥₂|(λA ∓ iB)|ψ⟩|²`.
pub fn xiao_weighted(
    lambda: f64,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    psi_perp_1: Option<&StateVector>,
    psi_perp_2: Option<&StateVector>,
    sign: Sign,
    sat_tol: f64,
) -> Result<RelationReport> {
    if lambda <= 0.0 {
        return Err(Error::NonPositiveWeight { lambda });
    }
    ensure_hermitian(a, "xiao_weighted: A")?;
    ensure_hermitian(b, "xiao_weighted: B")?;
    ensure_unit(psi, "xiao_weighted")?;
    let da = av_decompose(a, psi)?;
    let db = av_decompose(b, psi)?;
    let lhs = (1.0 + lambda) * da.delta * da.delta + (1.0 + 1.0 / lambda) * db.delta * db.delta;

    let comm_exp = expectation(&commutator(a, b)?, psi)?;
    let comm_term = 2.0 * (sign.commutator_factor() * comm_exp).re;

    let m1 = combine(Complex64::new(1.0, 0.0), a, sign.combine_coeff(), b)?;
    let (term1, perp1, deg1) = perp_term(&m1, psi, psi_perp_1, "xiao_weighted: ψ⊥₁")?;
    let m2 = combine(Complex64::new(lambda, 0.0), a, sign.combine_coeff(), b)?;
    let (term2, perp2, deg2) = perp_term(&m2, psi, psi_perp_2, "xiao_weighted: ψ⊥₂")?;
    let rhs = comm_term + term1 + term2 / lambda;

    let mut witness = Witness {
        scalars: vec![
            ("delta_a", da.delta),
            ("delta_b", db.delta),
            ("comm_term", comm_term),
            ("perp_term_1", term1),
            ("perp_term_2", term2 / lambda),
        ],
        perp: perp1,
        perp2,
    };
    if deg1 || deg2 {
        witness.scalars.push(("perp_degenerate", 1.0));
    }
    Ok(RelationReport::new(
        RelationId::XiaoWeighted,
        lhs,
        rhs,
        sat_tol,
        Some(witness),
    ))
}

/// Evaluates a two-operator relation by id with default auxiliary choices
/// (optimal orthogonal vectors; for the first Maccone-Pati bound, the sign
/// with the larger right-hand side).
pub fn evaluate(
    relation: RelationId,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
    sat_tol: f64,
) -> Result<RelationReport> {
    match relation {
        RelationId::Robertson => robertson(a, b, psi, sat_tol),
        RelationId::Schrodinger => schrodinger(a, b, psi, sat_tol),
        RelationId::SumRelation => sum_relation(&[a.clone(), b.clone()], psi, sat_tol),
        RelationId::MacconePati1 => {
            let plus = maccone_pati_1(a, b, psi, None, Sign::Plus, sat_tol)?;
            let minus = maccone_pati_1(a, b, psi, None, Sign::Minus, sat_tol)?;
            Ok(if plus.rhs >= minus.rhs { plus } else { minus })
        }
        RelationId::MacconePati2 => maccone_pati_2(a, b, psi, sat_tol),
        other => Err(Error::UnsupportedRelation {
            relation: other.to_string(),
        }),
    }
}

/// Parameterized family of normalized states over a box of parameters.
pub struct StateFamily {
    bounds: Vec<(f64, f64)>,
    map: Box<dyn Fn(&[f64]) -> StateVector + Send + Sync>,
}

impl StateFamily {
    pub fn new(
        bounds: Vec<(f64, f64)>,
        map: impl Fn(&[f64]) -> StateVector + Send + Sync + 'static,
    ) -> Self {
        Self {
            bounds,
            map: Box::new(map),
        }
    }

    /// Full Bloch sphere: `ψ(θ, φ) = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
    pub fn bloch() -> Self {
        Self::new(
            vec![(0.0, std::f64::consts::PI), (0.0, 2.0 * std::f64::consts::PI)],
            |params| {
                let (theta, phi) = (params[0], params[1]);
                StateVector::new(vec![
                    Complex64::new((theta / 2.0).cos(), 0.0),
                    Complex64::from_polar((theta / 2.0).sin(), phi),
                ])
            },
        )
    }

    pub fn param_count(&self) -> usize {
        self.bounds.len()
    }

    fn clamp(&self, params: &[f64]) -> Vec<f64> {
        params
            .iter()
            .zip(&self.bounds)
            .map(|(&p, &(lo, hi))| p.clamp(lo, hi))
            .collect()
    }

    pub fn state(&self, params: &[f64]) -> StateVector {
        (self.map)(&self.clamp(params))
    }
}

/// Result of a saturating-state search.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best_state: StateVector,
    pub best_slack: f64,
    pub iterations: u64,
    pub converged: bool,
}

/// Minimizes `|slack|` of the chosen relation over a state family with a
/// seeded simplex multistart. `converged` reports whether `|slack|` met
/// `sat_tol` within the budget (exhausting the budget is not an error).
pub fn find_intelligent_state(
    relation: RelationId,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    family: &StateFamily,
    budget: &SearchBudget,
    seed: RandomSeed,
    sat_tol: f64,
) -> Result<SearchResult> {
    // Surface input errors (non-Hermitian operators, unsupported relation)
    // before burning the budget.
    let probe = family.state(&family.bounds.iter().map(|&(lo, hi)| 0.5 * (lo + hi)).collect::<Vec<_>>());
    evaluate(relation, a, b, &probe, sat_tol)?;

    let mut objective = |params: &[f64]| -> f64 {
        let psi = family.state(params);
        match evaluate(relation, a, b, &psi, sat_tol) {
            Ok(report) => report.slack.abs(),
            Err(_) => f64::INFINITY,
        }
    };
    let bounds = family.bounds.clone();
    let mut starts = move |seed: RandomSeed| -> Vec<f64> {
        use rand::Rng;
        let mut rng = seed.rng();
        bounds
            .iter()
            .map(|&(lo, hi)| rng.random_range(lo..=hi))
            .collect()
    };
    let step = family
        .bounds
        .iter()
        .map(|&(lo, hi)| (hi - lo) / 8.0)
        .fold(f64::INFINITY, f64::min)
        .max(1e-3);
    let result = multistart(
        &mut objective,
        &mut starts,
        &[],
        budget,
        seed,
        step,
        1e-14,
    );

    let best_params = family.clamp(&result.best_x);
    let best_state = family.state(&best_params);
    let report = evaluate(relation, a, b, &best_state, sat_tol)?;
    Ok(SearchResult {
        best_state,
        best_slack: report.slack,
        iterations: result.total_evals as u64,
        converged: report.slack.abs() <= sat_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::operators::{
        momentum, pauli_x, pauli_y, pauli_z, position, spin_x, spin_y,
    };
    use crate::tensor::{sample_hermitian, sample_unit_state};

    const TOL: f64 = DEFAULT_SATURATION_TOL;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn x_plus() -> StateVector {
        let inv = c(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        StateVector::new(vec![inv, inv])
    }

    #[test]
    fn robertson_spin_eigenstate_bound_is_zero() {
        let report = robertson(&spin_x(), &spin_y(), &x_plus(), TOL).unwrap();
        assert!(report.lhs.abs() < 1e-12);
        assert!(report.rhs.abs() < 1e-12);
        let witness = report.witness.unwrap();
        assert!((witness.scalar("delta_b").unwrap() - 0.5).abs() < 1e-12);
        assert!(witness.scalar("delta_a").unwrap().abs() < 1e-12);
    }

    #[test]
    fn robertson_pauli_pair_saturates_on_pole() {
        let report = robertson(&pauli_x(), &pauli_y(), &StateVector::basis(2, 0), TOL).unwrap();
        assert!((report.lhs - 1.0).abs() < 1e-12);
        assert!((report.rhs - 1.0).abs() < 1e-12);
        assert!(report.saturated);
        // equality condition: corr = ±i
        let imcorr = report.witness.unwrap().scalar("imcorr").unwrap();
        assert!((imcorr.abs() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn robertson_recovers_heisenberg_on_truncated_oscillator() {
        let dim = 50;
        let ground = StateVector::basis(dim, 0);
        let report = robertson(&position(dim), &momentum(dim), &ground, TOL).unwrap();
        assert!((report.lhs - 0.5).abs() < 1e-9, "lhs {}", report.lhs);
        assert!((report.rhs - 0.5).abs() < 1e-9, "rhs {}", report.rhs);
    }

    #[test]
    fn robertson_rejects_non_hermitian() {
        let mut m = pauli_x();
        m[(0, 1)] = c(0.3, 0.2);
        assert!(matches!(
            robertson(&m, &pauli_y(), &StateVector::basis(2, 0), TOL),
            Err(Error::NonHermitian { .. })
        ));
    }

    #[test]
    fn schrodinger_saturates_where_robertson_does() {
        let report = schrodinger(&pauli_x(), &pauli_y(), &StateVector::basis(2, 0), TOL).unwrap();
        assert!((report.lhs - 1.0).abs() < 1e-12);
        assert!((report.rhs - 1.0).abs() < 1e-12);
        assert!(report.saturated);
    }

    #[test]
    fn schrodinger_self_pair_is_saturated() {
        let report = schrodinger(&pauli_z(), &pauli_z(), &x_plus(), TOL).unwrap();
        assert!((report.lhs - 1.0).abs() < 1e-12);
        assert!((report.rhs - 1.0).abs() < 1e-12);
        assert!(report.saturated);
    }

    #[test]
    fn schrodinger_dominates_robertson_on_random_instances() {
        for seed in 0..200u64 {
            let a = sample_hermitian(8, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(8, RandomSeed(seed + 4000)).unwrap();
            let psi = sample_unit_state(8, RandomSeed(seed + 8000)).unwrap();
            let rob = robertson(&a, &b, &psi, TOL).unwrap();
            let sch = schrodinger(&a, &b, &psi, TOL).unwrap();
            assert!(sch.slack >= -1e-9, "seed {seed}");
            assert!(rob.slack >= -1e-9, "seed {seed}");
            assert!(sch.rhs >= rob.rhs * rob.rhs - 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn sum_relation_cancellation() {
        let psi = sample_unit_state(2, RandomSeed(5)).unwrap();
        let a = pauli_x();
        let neg = a.scale(c(-1.0, 0.0));
        let report = sum_relation(&[a.clone(), neg], &psi, TOL).unwrap();
        assert!(report.rhs.abs() < 1e-12);
        let da = av_decompose(&a, &psi).unwrap().delta;
        assert!((report.lhs - 2.0 * da).abs() < 1e-12);
    }

    #[test]
    fn sum_relation_pauli_pair_on_pole() {
        let report = sum_relation(
            &[pauli_x(), pauli_y()],
            &StateVector::basis(2, 0),
            TOL,
        )
        .unwrap();
        assert!((report.lhs - 2.0).abs() < 1e-12);
        assert!((report.rhs - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(report.slack >= -1e-9);
    }

    #[test]
    fn sum_relation_holds_for_five_random_operators() {
        for seed in 0..100u64 {
            let ops: Vec<ComplexMatrix> = (0..5)
                .map(|k| sample_hermitian(6, RandomSeed(seed * 7 + k)).unwrap())
                .collect();
            let psi = sample_unit_state(6, RandomSeed(seed + 12345)).unwrap();
            let report = sum_relation(&ops, &psi, TOL).unwrap();
            assert!(report.slack >= -1e-9, "seed {seed} slack {}", report.slack);
        }
    }

    #[test]
    fn mp1_on_pole_with_supplied_perp_both_signs() {
        let psi = StateVector::basis(2, 0);
        let perp = StateVector::basis(2, 1);
        // sign +: rhs = i⟨[σx,σy]⟩ + |⟨1|(σx − iσy)|0⟩|² = −2 + 4 = 2
        let plus = maccone_pati_1(&pauli_x(), &pauli_y(), &psi, Some(&perp), Sign::Plus, TOL)
            .unwrap();
        assert!((plus.lhs - 2.0).abs() < 1e-12);
        assert!((plus.rhs - 2.0).abs() < 1e-12);
        assert!(plus.saturated);
        let w = plus.witness.unwrap();
        assert!((w.scalar("comm_term").unwrap() + 2.0).abs() < 1e-12);
        assert!((w.scalar("perp_term").unwrap() - 4.0).abs() < 1e-12);
        // sign −: rhs = −i⟨[σx,σy]⟩ + |⟨1|(σx + iσy)|0⟩|² = 2 + 0 = 2
        let minus = maccone_pati_1(&pauli_x(), &pauli_y(), &psi, Some(&perp), Sign::Minus, TOL)
            .unwrap();
        assert!((minus.rhs - 2.0).abs() < 1e-12);
        assert!(minus.saturated);
    }

    #[test]
    fn mp1_rejects_non_orthogonal_perp() {
        let psi = StateVector::basis(2, 0);
        let bad = x_plus();
        assert!(matches!(
            maccone_pati_1(&pauli_x(), &pauli_y(), &psi, Some(&bad), Sign::Plus, TOL),
            Err(Error::NonOrthogonal { .. })
        ));
    }

    #[test]
    fn mp1_sweeps_stay_nonnegative() {
        for seed in 0..200u64 {
            let a = sample_hermitian(8, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(8, RandomSeed(seed + 1000)).unwrap();
            let psi = sample_unit_state(8, RandomSeed(seed + 2000)).unwrap();
            for sign in [Sign::Plus, Sign::Minus] {
                let optimal = maccone_pati_1(&a, &b, &psi, None, sign, TOL).unwrap();
                assert!(optimal.slack >= -1e-9, "seed {seed} optimal");
                // a random valid orthogonal vector must give a weaker bound
                let raw = sample_unit_state(8, RandomSeed(seed + 3000)).unwrap();
                let overlap = psi.inner(&raw).unwrap();
                let perp = raw
                    .add_scaled(&psi, -overlap)
                    .unwrap()
                    .normalized()
                    .unwrap();
                let supplied =
                    maccone_pati_1(&a, &b, &psi, Some(&perp), sign, TOL).unwrap();
                assert!(supplied.slack >= -1e-9, "seed {seed} supplied");
                assert!(supplied.rhs <= optimal.rhs + 1e-9, "optimal must dominate");
            }
        }
    }

    #[test]
    fn mp1_keeps_eigenstates_nontrivial() {
        // On an eigenstate of S_x, Robertson collapses but the optimal
        // first Maccone-Pati bound stays at (ΔS_y)².
        let report =
            maccone_pati_1(&spin_x(), &spin_y(), &x_plus(), None, Sign::Plus, TOL).unwrap();
        assert!((report.lhs - 0.25).abs() < 1e-12);
        assert!((report.rhs - 0.25).abs() < 1e-9);
    }

    #[test]
    fn mp2_doubles_the_self_pair() {
        let report = maccone_pati_2(&pauli_z(), &pauli_z(), &x_plus(), TOL).unwrap();
        assert!((report.lhs - 2.0).abs() < 1e-12);
        assert!((report.rhs - 2.0).abs() < 1e-12);
        assert!(report.saturated);
    }

    #[test]
    fn mp2_eigenstate_of_sum_gives_zero_bound() {
        let report =
            maccone_pati_2(&pauli_z(), &pauli_z(), &StateVector::basis(2, 0), TOL).unwrap();
        assert_eq!(report.rhs, 0.0);
        assert!(report
            .witness
            .unwrap()
            .scalar("combined_eigenstate")
            .is_some());
    }

    #[test]
    fn mp2_sweep_nonnegative() {
        for seed in 0..200u64 {
            let a = sample_hermitian(8, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(8, RandomSeed(seed + 1111)).unwrap();
            let psi = sample_unit_state(8, RandomSeed(seed + 2222)).unwrap();
            let report = maccone_pati_2(&a, &b, &psi, TOL).unwrap();
            assert!(report.slack >= -1e-9, "seed {seed}");
        }
    }

    #[test]
    fn weighted_general_specializes_to_mp1() {
        let psi = StateVector::basis(2, 0);
        let perp = StateVector::basis(2, 1);
        // β = +i pairs with the Minus branch, β = −i with Plus.
        for (beta, sign) in [(c(0.0, 1.0), Sign::Minus), (c(0.0, -1.0), Sign::Plus)] {
            let general = weighted_general(
                c(1.0, 0.0),
                beta,
                &pauli_x(),
                &pauli_y(),
                &psi,
                Some(&perp),
                TOL,
            )
            .unwrap();
            let mp1 =
                maccone_pati_1(&pauli_x(), &pauli_y(), &psi, Some(&perp), sign, TOL).unwrap();
            assert!((general.lhs - mp1.lhs).abs() < 1e-12);
            assert!((general.rhs - mp1.rhs).abs() < 1e-12);
            assert!((general.slack - mp1.slack).abs() < 1e-12);
        }
    }

    #[test]
    fn weighted_general_specialization_on_random_instances() {
        for seed in 0..50u64 {
            let a = sample_hermitian(5, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(5, RandomSeed(seed + 50)).unwrap();
            let psi = sample_unit_state(5, RandomSeed(seed + 100)).unwrap();
            let general =
                weighted_general(c(1.0, 0.0), c(0.0, -1.0), &a, &b, &psi, None, TOL).unwrap();
            let mp1 = maccone_pati_1(&a, &b, &psi, None, Sign::Plus, TOL).unwrap();
            assert!((general.rhs - mp1.rhs).abs() < 1e-12, "seed {seed}");
            let general2 = weighted_general_2(c(1.0, 0.0), c(1.0, 0.0), &a, &b, &psi, TOL).unwrap();
            let mp2 = maccone_pati_2(&a, &b, &psi, TOL).unwrap();
            assert!((general2.rhs - mp2.rhs).abs() < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn weighted_general_single_operator_reduction_saturates() {
        for seed in 0..20u64 {
            let a = sample_hermitian(4, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(4, RandomSeed(seed + 20)).unwrap();
            let psi = sample_unit_state(4, RandomSeed(seed + 40)).unwrap();
            let report =
                weighted_general(c(1.0, 0.0), c(0.0, 0.0), &a, &b, &psi, None, TOL).unwrap();
            let da = av_decompose(&a, &psi).unwrap().delta;
            assert!((report.lhs - da * da).abs() < 1e-12);
            // optimal perp turns the reduction into an equality
            assert!(report.slack.abs() < 1e-9, "seed {seed} slack {}", report.slack);
        }
    }

    #[test]
    fn weighted_general_rejects_zero_weights() {
        let psi = StateVector::basis(2, 0);
        assert!(matches!(
            weighted_general(c(0.0, 0.0), c(0.0, 0.0), &pauli_x(), &pauli_y(), &psi, None, TOL),
            Err(Error::ZeroWeights)
        ));
    }

    #[test]
    fn weighted_general_sqrt_lambda_weights_hold() {
        let lambda: f64 = 2.0;
        for seed in 0..50u64 {
            let a = sample_hermitian(2, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(2, RandomSeed(seed + 500)).unwrap();
            let psi = sample_unit_state(2, RandomSeed(seed + 600)).unwrap();
            let report = weighted_general(
                c(lambda.sqrt(), 0.0),
                c(0.0, 1.0 / lambda.sqrt()),
                &a,
                &b,
                &psi,
                None,
                TOL,
            )
            .unwrap();
            assert!(report.slack >= -1e-9, "seed {seed}");
        }
    }

    #[test]
    fn weighted_general_2_scaling_identity() {
        for seed in 0..20u64 {
            let a = sample_hermitian(4, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(4, RandomSeed(seed + 77)).unwrap();
            let psi = sample_unit_state(4, RandomSeed(seed + 99)).unwrap();
            let report = weighted_general_2(c(2.0, 0.0), c(0.0, 0.0), &a, &b, &psi, TOL).unwrap();
            let da = av_decompose(&a, &psi).unwrap().delta;
            assert!((report.lhs - 4.0 * da * da).abs() < 1e-10);
            assert!((report.rhs - 2.0 * da * da).abs() < 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn weighted_general_2_random_phases_hold() {
        for seed in 0..100u64 {
            let a = sample_hermitian(6, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(6, RandomSeed(seed + 321)).unwrap();
            let psi = sample_unit_state(6, RandomSeed(seed + 654)).unwrap();
            let phase = seed as f64 * 0.37;
            let report = weighted_general_2(
                Complex64::from_polar(1.0, phase),
                Complex64::from_polar(1.0, 1.3 * phase + 0.4),
                &a,
                &b,
                &psi,
                TOL,
            )
            .unwrap();
            assert!(report.slack >= -1e-9, "seed {seed}");
        }
    }

    #[test]
    fn xiao_weighted_rejects_nonpositive_lambda() {
        let psi = StateVector::basis(2, 0);
        assert!(matches!(
            xiao_weighted(0.0, &pauli_x(), &pauli_y(), &psi, None, None, Sign::Plus, TOL),
            Err(Error::NonPositiveWeight { .. })
        ));
    }

    #[test]
    fn xiao_weighted_at_unit_lambda_is_sum_of_mp1_branches() {
        // λ = 1 with a shared ψ⊥ adds the two constituent bounds.
        let psi = sample_unit_state(2, RandomSeed(31)).unwrap();
        let raw = sample_unit_state(2, RandomSeed(32)).unwrap();
        let overlap = psi.inner(&raw).unwrap();
        let perp = raw.add_scaled(&psi, -overlap).unwrap().normalized().unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let xiao = xiao_weighted(
                1.0,
                &pauli_x(),
                &pauli_y(),
                &psi,
                Some(&perp),
                Some(&perp),
                sign,
                TOL,
            )
            .unwrap();
            let mp1 =
                maccone_pati_1(&pauli_x(), &pauli_y(), &psi, Some(&perp), sign, TOL).unwrap();
            assert!((xiao.lhs - 2.0 * mp1.lhs).abs() < 1e-12);
            assert!((xiao.rhs - 2.0 * mp1.rhs).abs() < 1e-11);
        }
    }

    #[test]
    fn xiao_weighted_lambda_sweep_holds() {
        let a = sample_hermitian(2, RandomSeed(71)).unwrap();
        let b = sample_hermitian(2, RandomSeed(72)).unwrap();
        let psi = sample_unit_state(2, RandomSeed(73)).unwrap();
        for lambda in [0.5, 1.0, 2.0, 4.0] {
            for sign in [Sign::Plus, Sign::Minus] {
                let report =
                    xiao_weighted(lambda, &a, &b, &psi, None, None, sign, TOL).unwrap();
                assert!(report.slack >= -1e-9, "lambda {lambda}");
            }
        }
        // direct instance from a plus eigenstate
        let report = xiao_weighted(2.0, &pauli_x(), &pauli_y(), &x_plus(), None, None, Sign::Plus, TOL)
            .unwrap();
        assert!(report.slack >= -1e-9);
    }

    #[test]
    fn saturation_flags_match_corr_conditions() {
        for seed in 0..200u64 {
            let a = sample_hermitian(4, RandomSeed(seed)).unwrap();
            let b = sample_hermitian(4, RandomSeed(seed + 111)).unwrap();
            let psi = sample_unit_state(4, RandomSeed(seed + 222)).unwrap();
            let rob = robertson(&a, &b, &psi, TOL).unwrap();
            if rob.saturated {
                if let Some(imcorr) = rob.witness.as_ref().unwrap().scalar("imcorr") {
                    assert!((imcorr.abs() - 1.0).abs() <= 10.0 * TOL);
                }
            }
            let sch = schrodinger(&a, &b, &psi, TOL).unwrap();
            if sch.saturated {
                if let Some(abs_corr) = sch.witness.as_ref().unwrap().scalar("abs_corr") {
                    assert!((abs_corr - 1.0).abs() <= 10.0 * TOL);
                }
            }
        }
    }

    #[test]
    fn search_finds_robertson_intelligent_state_on_bloch_sphere() {
        let family = StateFamily::bloch();
        let budget = SearchBudget {
            restarts: 16,
            evals_per_restart: 400,
        };
        let result = find_intelligent_state(
            RelationId::Robertson,
            &pauli_x(),
            &pauli_y(),
            &family,
            &budget,
            RandomSeed(2024),
            1e-6,
        )
        .unwrap();
        assert!(result.converged);
        assert!(result.best_slack.abs() <= 1e-6);
        assert!(result.best_slack >= -TOL);
        // The saturating set contains the poles and the σx/σy eigen-circles;
        // whichever was found must genuinely saturate, and a pole shows the
        // corr = ±i equality condition.
        let amps = result.best_state.amplitudes();
        let pole = amps[0].norm_sqr().max(amps[1].norm_sqr()) > 1.0 - 1e-4;
        if pole {
            let corr = correlation(&pauli_x(), &pauli_y(), &result.best_state).unwrap();
            assert!((corr.imcorr().abs() - 1.0).abs() < 1e-3);
        }
    }

    #[test]
    fn search_on_self_pair_converges_immediately() {
        let family = StateFamily::bloch();
        let budget = SearchBudget {
            restarts: 2,
            evals_per_restart: 50,
        };
        let result = find_intelligent_state(
            RelationId::Schrodinger,
            &pauli_z(),
            &pauli_z(),
            &family,
            &budget,
            RandomSeed(7),
            1e-6,
        )
        .unwrap();
        assert!(result.converged);
        assert!(result.best_slack.abs() <= 1e-6);
    }

    #[test]
    fn search_sum_relation_identical_operators_saturates_everywhere() {
        let a = sample_hermitian(2, RandomSeed(5)).unwrap();
        let family = StateFamily::bloch();
        let budget = SearchBudget {
            restarts: 2,
            evals_per_restart: 50,
        };
        let result = find_intelligent_state(
            RelationId::SumRelation,
            &a,
            &a,
            &family,
            &budget,
            RandomSeed(8),
            1e-6,
        )
        .unwrap();
        assert!(result.converged);
        // Rcorr(2A, A) = 1 pointwise, so any state saturates.
        let report = evaluate(RelationId::SumRelation, &a, &a, &result.best_state, TOL).unwrap();
        assert!(report.slack.abs() < 1e-9);
    }

    #[test]
    fn search_rejects_unsupported_relations() {
        let family = StateFamily::bloch();
        let budget = SearchBudget {
            restarts: 1,
            evals_per_restart: 10,
        };
        assert!(matches!(
            find_intelligent_state(
                RelationId::Mp1Mixed,
                &pauli_x(),
                &pauli_y(),
                &family,
                &budget,
                RandomSeed(1),
                1e-6,
            ),
            Err(Error::UnsupportedRelation { .. })
        ));
    }
}
