//! Mixed-state machinery built on amplitude operators.
//!
//! An amplitude operator for a density operator `ρ` on `H_S` is any
//! `L: H_E → H_S` with `L L† = ρ` — a non-commutative square root. Every such
//! `L` factors as `√ρ · U` with `U` semi-unitary, and the space of amplitude
//! operators is a Hilbert space under `⟨L, M⟩ = tr(L†M)`, so the vector
//! decomposition `A|ψ⟩ = ⟨A⟩|ψ⟩ + ΔA|ψ⊥⟩` lifts verbatim to
//! `A L = ⟨A⟩ L + ΔA L⊥`.
//!
//! Amplitude operators are interchangeable with purifications: with
//! `|Φ⁺⟩ = Σ_j |j⟩|j⟩`, the state `(I ⊗ Lᵀ)|Φ⁺⟩` purifies `LL†`, and in the
//! system-major basis convention used here that purification is exactly the
//! row-major flattening of `L`.

use num_complex::Complex64;
use rand_distr::{Distribution, StandardNormal};

use crate::av::DEFAULT_ATOL;
use crate::error::{Error, Result};
use crate::relations::{ensure_hermitian, RelationId, RelationReport, Sign, Witness};
use crate::simplex::{multistart, SearchBudget, StartOrigin};
use crate::tensor::{
    linear_combination, orthonormalize_rows, psd_sqrt, polar_decompose, ComplexMatrix,
    DensityOperator, RandomSeed, StateVector,
};

const HS_NORMALIZATION_TOL: f64 = 1e-9;

/// Rectangular `L: H_E → H_S` with `L L†` a (possibly unnormalized) density
/// operator.
#[derive(Debug, Clone)]
pub struct AmplitudeOperator {
    matrix: ComplexMatrix,
    hs_norm_sq: f64,
}

impl AmplitudeOperator {
    /// Requires a finite, nonzero Hilbert-Schmidt norm.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let hs_norm_sq: f64 = matrix.entries().iter().map(|z| z.norm_sqr()).sum();
        if !hs_norm_sq.is_finite() || hs_norm_sq <= 0.0 {
            return Err(Error::InvalidDimension {
                context: "AmplitudeOperator::new".into(),
                detail: format!("tr(LL†) = {hs_norm_sq} must be finite and positive"),
            });
        }
        Ok(Self { matrix, hs_norm_sq })
    }

    /// Zero matrix, used only as the flagged residual of an eigen-supported
    /// decomposition.
    fn zero(d_s: usize, d_e: usize) -> Self {
        Self {
            matrix: ComplexMatrix::zeros(d_s, d_e),
            hs_norm_sq: 0.0,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn d_s(&self) -> usize {
        self.matrix.rows()
    }

    pub fn d_e(&self) -> usize {
        self.matrix.cols()
    }

    /// `tr(L L†)`.
    pub fn hs_norm_sq(&self) -> f64 {
        self.hs_norm_sq
    }

    /// Whether `tr(LL†) = 1` to 1e-10.
    pub fn is_normalized(&self) -> bool {
        (self.hs_norm_sq - 1.0).abs() <= 1e-10
    }

    /// `L L†` as a validated density operator.
    pub fn density(&self) -> Result<DensityOperator> {
        DensityOperator::new(self.matrix.mul(&self.matrix.adjoint())?)
    }

    fn ensure_normalized(&self, context: &str) -> Result<()> {
        if (self.hs_norm_sq - 1.0).abs() > HS_NORMALIZATION_TOL {
            return Err(Error::NotNormalized {
                context: context.into(),
                value: self.hs_norm_sq,
            });
        }
        Ok(())
    }
}

/// Operator-level decomposition `A L = ⟨A⟩ L + ΔA L⊥`.
#[derive(Debug, Clone)]
pub struct OperatorAvDecomposition {
    pub expectation: Complex64,
    pub delta: f64,
    /// `L⊥`, Hilbert-Schmidt orthogonal to `L` with equal norm; the zero
    /// matrix when `eigen_flag` is set.
    pub residual: AmplitudeOperator,
    pub eigen_flag: bool,
}

/// `√ρ · u`; the default environment is a copy of the system (`u = I`).
pub fn amplitude_from_density(
    rho: &DensityOperator,
    u: Option<&ComplexMatrix>,
) -> Result<AmplitudeOperator> {
    let root = psd_sqrt(rho.matrix())?;
    let l = match u {
        None => root,
        Some(u) => {
            if u.rows() != rho.dim() {
                return Err(Error::dims("amplitude_from_density", rho.dim(), u.rows()));
            }
            let gram = u.mul(&u.adjoint())?;
            let defect = gram
                .sub(&ComplexMatrix::identity(u.rows()))?
                .frobenius_norm();
            if defect > 1e-9 {
                return Err(Error::NotNormalized {
                    context: "amplitude_from_density: u is not semi-unitary".into(),
                    value: defect,
                });
            }
            root.mul(u)?
        }
    };
    AmplitudeOperator::new(l)
}

/// Recovers `ρ = LL†` and the polar factors `(P, U)` with `P = √ρ`.
pub fn amplitude_validate(
    l: &AmplitudeOperator,
) -> Result<(DensityOperator, ComplexMatrix, ComplexMatrix)> {
    let rho = l.density()?;
    let (p, u) = polar_decompose(l.matrix())?;
    Ok((rho, p, u))
}

/// Lifts the vector decomposition to amplitude operators through the
/// Hilbert-Schmidt inner product.
pub fn av_operator_decompose(
    a: &ComplexMatrix,
    l: &AmplitudeOperator,
) -> Result<OperatorAvDecomposition> {
    av_operator_decompose_with_atol(a, l, DEFAULT_ATOL)
}

pub fn av_operator_decompose_with_atol(
    a: &ComplexMatrix,
    l: &AmplitudeOperator,
    atol: f64,
) -> Result<OperatorAvDecomposition> {
    if !a.is_square() || a.rows() != l.d_s() {
        return Err(Error::dims(
            "av_operator_decompose",
            l.d_s(),
            a.rows(),
        ));
    }
    let hs = l.hs_norm_sq();
    let al = a.mul(l.matrix())?;
    // ⟨A⟩ = tr(A L L†) / tr(L L†) = ⟨L, AL⟩ / tr(LL†)
    let expectation = l.matrix().hs_inner(&al)? / Complex64::new(hs, 0.0);
    let second_moment: f64 = al.entries().iter().map(|z| z.norm_sqr()).sum::<f64>() / hs;
    let variance = (second_moment - expectation.norm_sqr()).max(0.0);
    let delta = variance.sqrt();

    let threshold = atol * a.frobenius_norm().max(1.0);
    if delta <= threshold {
        return Ok(OperatorAvDecomposition {
            expectation,
            delta,
            residual: AmplitudeOperator::zero(l.d_s(), l.d_e()),
            eigen_flag: true,
        });
    }
    let centered = al.sub(&l.matrix().scale(expectation))?;
    let residual = AmplitudeOperator::new(centered.scale(Complex64::new(1.0 / delta, 0.0)))?;
    Ok(OperatorAvDecomposition {
        expectation,
        delta,
        residual,
        eigen_flag: false,
    })
}

/// `ρ⊥_A = (A - ⟨A⟩)ρ(A† - ⟨A⟩*)/(ΔA)²`; independent of which amplitude
/// operator represents `ρ`.
pub fn rho_perp(a: &ComplexMatrix, rho: &DensityOperator) -> Result<DensityOperator> {
    if !a.is_square() || a.rows() != rho.dim() {
        return Err(Error::dims("rho_perp", rho.dim(), a.rows()));
    }
    let expectation = rho.expectation(a)?;
    let a_sq = a.adjoint().mul(a)?;
    let second = rho.expectation(&a_sq)?.re;
    let variance = (second - expectation.norm_sqr()).max(0.0);
    let delta = variance.sqrt();
    if delta <= DEFAULT_ATOL * a.frobenius_norm().max(1.0) {
        return Err(Error::DegenerateDelta {
            context: "rho_perp".into(),
        });
    }
    let centered = a.sub(&ComplexMatrix::identity(rho.dim()).scale(expectation))?;
    let out = centered
        .mul(rho.matrix())?
        .mul(&centered.adjoint())?
        .scale(Complex64::new(1.0 / variance, 0.0));
    DensityOperator::new(out)
}

/// Projects `candidate` Hilbert-Schmidt-orthogonally to `l` and normalizes,
/// producing a valid companion for the mixed first Maccone-Pati bound.
pub fn orthogonal_amplitude(
    l: &AmplitudeOperator,
    candidate: &ComplexMatrix,
) -> Result<AmplitudeOperator> {
    if candidate.rows() != l.d_s() || candidate.cols() != l.d_e() {
        return Err(Error::dims(
            "orthogonal_amplitude",
            format!("{}x{}", l.d_s(), l.d_e()),
            format!("{}x{}", candidate.rows(), candidate.cols()),
        ));
    }
    let overlap = l.matrix().hs_inner(candidate)? / Complex64::new(l.hs_norm_sq(), 0.0);
    let projected = candidate.sub(&l.matrix().scale(overlap))?;
    let norm: f64 = projected
        .entries()
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    if norm <= 1e-12 * candidate.frobenius_norm().max(1.0) {
        return Err(Error::DegenerateCandidate {
            context: "orthogonal_amplitude".into(),
        });
    }
    AmplitudeOperator::new(projected.scale(Complex64::new(1.0 / norm, 0.0)))
}

fn mixed_deltas(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    l: &AmplitudeOperator,
) -> Result<(OperatorAvDecomposition, OperatorAvDecomposition)> {
    Ok((av_operator_decompose(a, l)?, av_operator_decompose(b, l)?))
}

/// `(ΔA)² + (ΔB)² ≥ ±i⟨[A,B]⟩ + |tr(L⊥†(A ∓ iB)L)|²` on `ρ = LL†`.
pub fn mp1_mixed(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    l: &AmplitudeOperator,
    l_perp: &AmplitudeOperator,
    sign: Sign,
    sat_tol: f64,
) -> Result<RelationReport> {
    ensure_hermitian(a, "mp1_mixed: A")?;
    ensure_hermitian(b, "mp1_mixed: B")?;
    l.ensure_normalized("mp1_mixed: L")?;
    l_perp.ensure_normalized("mp1_mixed: L⊥")?;
    if l.d_s() != l_perp.d_s() || l.d_e() != l_perp.d_e() {
        return Err(Error::dims(
            "mp1_mixed",
            format!("{}x{}", l.d_s(), l.d_e()),
            format!("{}x{}", l_perp.d_s(), l_perp.d_e()),
        ));
    }
    let overlap = l.matrix().hs_inner(l_perp.matrix())?.norm();
    if overlap > HS_NORMALIZATION_TOL {
        return Err(Error::NonOrthogonal {
            context: "mp1_mixed: L⊥ not Hilbert-Schmidt orthogonal to L".into(),
            overlap,
        });
    }

    let (da, db) = mixed_deltas(a, b, l)?;
    let lhs = da.delta * da.delta + db.delta * db.delta;

    let comm = crate::tensor::commutator(a, b)?;
    let comm_exp = l.matrix().hs_inner(&comm.mul(l.matrix())?)? / Complex64::new(l.hs_norm_sq(), 0.0);
    let comm_term = (match sign {
        Sign::Plus => Complex64::new(0.0, 1.0),
        Sign::Minus => Complex64::new(0.0, -1.0),
    } * comm_exp)
        .re;
    let beta = match sign {
        Sign::Plus => Complex64::new(0.0, -1.0),
        Sign::Minus => Complex64::new(0.0, 1.0),
    };
    let m = linear_combination(&[(Complex64::new(1.0, 0.0), a), (beta, b)])?;
    let amplitude = l_perp.matrix().hs_inner(&m.mul(l.matrix())?)?;
    let term = amplitude.norm_sqr();
    let rhs = comm_term + term;

    let witness = Witness {
        scalars: vec![
            ("delta_a", da.delta),
            ("delta_b", db.delta),
            ("comm_term", comm_term),
            ("perp_term", term),
        ],
        ..Witness::default()
    };
    Ok(RelationReport::new(
        RelationId::Mp1Mixed,
        lhs,
        rhs,
        sat_tol,
        Some(witness),
    ))
}

/// `(ΔA)² + (ΔB)² ≥ ½|tr(L⊥†_{A+B}(A+B)L)|²` with the canonical residual.
pub fn mp2_mixed(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    l: &AmplitudeOperator,
    sat_tol: f64,
) -> Result<RelationReport> {
    l.ensure_normalized("mp2_mixed: L")?;
    let (da, db) = mixed_deltas(a, b, l)?;
    let lhs = da.delta * da.delta + db.delta * db.delta;

    let one = Complex64::new(1.0, 0.0);
    let combined = linear_combination(&[(one, a), (one, b)])?;
    let dec = av_operator_decompose(&combined, l)?;
    let (rhs, eigen) = if dec.eigen_flag {
        (0.0, true)
    } else {
        let amplitude = dec
            .residual
            .matrix()
            .hs_inner(&combined.mul(l.matrix())?)?;
        (0.5 * amplitude.norm_sqr(), false)
    };

    let mut witness = Witness {
        scalars: vec![
            ("delta_a", da.delta),
            ("delta_b", db.delta),
            ("delta_combined", dec.delta),
        ],
        ..Witness::default()
    };
    if eigen {
        witness.scalars.push(("combined_eigenstate", 1.0));
    }
    Ok(RelationReport::new(
        RelationId::Mp2Mixed,
        lhs,
        rhs,
        sat_tol,
        Some(witness),
    ))
}

/// Which mixed bound to maximize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedRelation {
    Mp1(Sign),
    Mp2,
}

impl MixedRelation {
    pub fn as_str(&self) -> &'static str {
        match self {
            MixedRelation::Mp1(_) => "mp1",
            MixedRelation::Mp2 => "mp2",
        }
    }
}

/// Outcome of maximizing a mixed bound over amplitude operators.
#[derive(Debug, Clone)]
pub struct MixedBoundResult {
    pub relation: MixedRelation,
    pub d_e: usize,
    /// `(ΔA)² + (ΔB)²` on `ρ`; an upper bound for any achievable rhs.
    pub lhs: f64,
    pub best_rhs: f64,
    /// Seed of the winning restart; replay it with a single-restart budget of
    /// the same per-restart evaluations to reproduce `best_rhs` exactly. For
    /// a win from a supplied (embedded) start this is the run's base seed.
    pub best_seed: RandomSeed,
    pub from_supplied_start: bool,
    pub restarts: usize,
    pub evaluations: u64,
    /// Winning `U` in `L = √ρ · U`.
    pub best_u: ComplexMatrix,
    /// Winning `L⊥` (first bound only).
    pub best_perp: Option<ComplexMatrix>,
}

fn params_to_matrix(params: &[f64], rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |i, j| {
        let k = 2 * (i * cols + j);
        Complex64::new(params[k], params[k + 1])
    })
}

fn matrix_to_params(m: &ComplexMatrix) -> Vec<f64> {
    let mut out = Vec::with_capacity(2 * m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(m[(i, j)].re);
            out.push(m[(i, j)].im);
        }
    }
    out
}

struct MixedObjective {
    relation: MixedRelation,
    sqrt_rho: ComplexMatrix,
    combined: ComplexMatrix,
    comm_term: f64,
    d_s: usize,
    d_e: usize,
}

impl MixedObjective {
    fn build(
        relation: MixedRelation,
        a: &ComplexMatrix,
        b: &ComplexMatrix,
        rho: &DensityOperator,
        d_e: usize,
    ) -> Result<Self> {
        let sqrt_rho = psd_sqrt(rho.matrix())?;
        let one = Complex64::new(1.0, 0.0);
        let (combined, comm_term) = match relation {
            MixedRelation::Mp1(sign) => {
                let beta = match sign {
                    Sign::Plus => Complex64::new(0.0, -1.0),
                    Sign::Minus => Complex64::new(0.0, 1.0),
                };
                let m = linear_combination(&[(one, a), (beta, b)])?;
                let comm = crate::tensor::commutator(a, b)?;
                let comm_exp = rho.expectation(&comm)?;
                let factor = match sign {
                    Sign::Plus => Complex64::new(0.0, 1.0),
                    Sign::Minus => Complex64::new(0.0, -1.0),
                };
                (m, (factor * comm_exp).re)
            }
            MixedRelation::Mp2 => (linear_combination(&[(one, a), (one, b)])?, 0.0),
        };
        Ok(Self {
            relation,
            sqrt_rho,
            combined,
            comm_term,
            d_s: rho.dim(),
            d_e,
        })
    }

    fn param_count(&self) -> usize {
        let block = 2 * self.d_s * self.d_e;
        match self.relation {
            MixedRelation::Mp1(_) => 2 * block,
            MixedRelation::Mp2 => block,
        }
    }

    fn amplitude(&self, params: &[f64]) -> Option<(AmplitudeOperator, ComplexMatrix)> {
        let block = 2 * self.d_s * self.d_e;
        let u = orthonormalize_rows(&params_to_matrix(&params[..block], self.d_s, self.d_e)).ok()?;
        let l = self.sqrt_rho.mul(&u).ok()?;
        Some((AmplitudeOperator::new(l).ok()?, u))
    }

    /// Bound value for a parameter vector; `None` for degenerate points.
    fn rhs(&self, params: &[f64]) -> Option<(f64, AmplitudeOperator, ComplexMatrix, Option<AmplitudeOperator>)> {
        let (l, u) = self.amplitude(params)?;
        match self.relation {
            MixedRelation::Mp1(_) => {
                let block = 2 * self.d_s * self.d_e;
                let cand = params_to_matrix(&params[block..], self.d_s, self.d_e);
                let l_perp = orthogonal_amplitude(&l, &cand).ok()?;
                let ml = self.combined.mul(l.matrix()).ok()?;
                let amp = l_perp.matrix().hs_inner(&ml).ok()?;
                Some((self.comm_term + amp.norm_sqr(), l, u, Some(l_perp)))
            }
            MixedRelation::Mp2 => {
                let dec = av_operator_decompose(&self.combined, &l).ok()?;
                let rhs = if dec.eigen_flag {
                    0.0
                } else {
                    let ml = self.combined.mul(l.matrix()).ok()?;
                    0.5 * dec.residual.matrix().hs_inner(&ml).ok()?.norm_sqr()
                };
                Some((rhs, l, u, None))
            }
        }
    }
}

fn gaussian_start(seed: RandomSeed, len: usize) -> Vec<f64> {
    let mut rng = seed.rng();
    (0..len)
        .map(|_| StandardNormal.sample(&mut rng))
        .collect()
}

fn optimize_with_starts(
    relation: MixedRelation,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rho: &DensityOperator,
    d_e: usize,
    budget: &SearchBudget,
    seed: RandomSeed,
    supplied: &[Vec<f64>],
) -> Result<MixedBoundResult> {
    ensure_hermitian(a, "optimize_mixed_bound: A")?;
    ensure_hermitian(b, "optimize_mixed_bound: B")?;
    let d_s = rho.dim();
    if d_e < d_s {
        return Err(Error::InfeasibleEnvironment { d_e, d_s });
    }
    if (rho.trace() - 1.0).abs() > HS_NORMALIZATION_TOL {
        return Err(Error::NotNormalized {
            context: "optimize_mixed_bound: rho".into(),
            value: rho.trace(),
        });
    }
    let objective = MixedObjective::build(relation, a, b, rho, d_e)?;
    let param_count = objective.param_count();

    let da = av_operator_decompose(a, &amplitude_from_density(rho, None)?)?.delta;
    let db = av_operator_decompose(b, &amplitude_from_density(rho, None)?)?.delta;
    let lhs = da * da + db * db;

    let mut f = |params: &[f64]| -> f64 {
        match objective.rhs(params) {
            Some((rhs, _, _, _)) => -rhs,
            None => f64::INFINITY,
        }
    };
    let mut starts = |seed: RandomSeed| gaussian_start(seed, param_count);
    let result = multistart(&mut f, &mut starts, supplied, budget, seed, 0.35, 1e-13);

    let (best_rhs, _, best_u, best_perp) = objective
        .rhs(&result.best_x)
        .ok_or_else(|| Error::DegenerateCandidate {
            context: "optimize_mixed_bound: best point degenerate".into(),
        })?;
    let (best_seed, from_supplied_start) = match result.origin {
        StartOrigin::Seeded(_, s) => (s, false),
        StartOrigin::Supplied(_) => (seed, true),
    };
    Ok(MixedBoundResult {
        relation,
        d_e,
        lhs,
        best_rhs,
        best_seed,
        from_supplied_start,
        restarts: budget.restarts + supplied.len(),
        evaluations: result.total_evals as u64,
        best_u,
        best_perp: best_perp.map(|p| p.matrix().clone()),
    })
}

/// Maximizes the chosen bound over `L = √ρ · U` (and, for the first bound,
/// over normalized Hilbert-Schmidt-orthogonal `L⊥`) at a fixed environment
/// dimension, with seeded simplex restarts.
pub fn optimize_mixed_bound(
    relation: MixedRelation,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rho: &DensityOperator,
    d_e: usize,
    budget: &SearchBudget,
    seed: RandomSeed,
) -> Result<MixedBoundResult> {
    optimize_with_starts(relation, a, b, rho, d_e, budget, seed, &[])
}

/// One row of a conjecture sweep.
#[derive(Debug, Clone)]
pub struct ConjectureSweepRow {
    pub d_e: usize,
    pub best_rhs: f64,
    pub restarts: usize,
    pub best_seed: RandomSeed,
}

/// Environment-dimension sweep of the maximized first mixed bound.
#[derive(Debug, Clone)]
pub struct ConjectureSweep {
    pub rows: Vec<ConjectureSweepRow>,
    /// `(d_e, best_rhs(d_e) - best_rhs(2 d_s))` for every `d_e ≥ 2 d_s` in
    /// range; empty when the range does not reach `2 d_s`.
    pub plateau: Vec<(usize, f64)>,
    /// Whether every plateau gain beyond `2 d_s` stays within 1e-3.
    /// Informational only.
    pub conjecture_consistent: Option<bool>,
}

/// Sweeps `d_e` over an inclusive range (within `[d_s, 3 d_s]`), maximizing
/// the first mixed bound per row with the same budget and base seed. Each
/// row's search is additionally started from the previous row's optimum
/// embedded by a zero environment column, so `best_rhs` is nondecreasing in
/// `d_e` by construction.
pub fn conjecture_sweep(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rho: &DensityOperator,
    d_e_range: (usize, usize),
    budget: &SearchBudget,
    seed: RandomSeed,
    sign: Sign,
) -> Result<ConjectureSweep> {
    let d_s = rho.dim();
    let (lo, hi) = d_e_range;
    if lo < d_s || hi > 3 * d_s || lo > hi {
        return Err(Error::InvalidDimension {
            context: "conjecture_sweep".into(),
            detail: format!("range {lo}..={hi} outside [{d_s}, {}]", 3 * d_s),
        });
    }
    let mut rows = Vec::new();
    let mut results: Vec<MixedBoundResult> = Vec::new();
    for d_e in lo..=hi {
        let supplied: Vec<Vec<f64>> = match results.last() {
            Some(prev) => {
                let pad_col = |m: &ComplexMatrix| -> ComplexMatrix {
                    ComplexMatrix::from_fn(m.rows(), d_e, |i, j| {
                        if j < m.cols() {
                            m[(i, j)]
                        } else {
                            Complex64::new(0.0, 0.0)
                        }
                    })
                };
                let mut params = matrix_to_params(&pad_col(&prev.best_u));
                if let Some(perp) = &prev.best_perp {
                    params.extend(matrix_to_params(&pad_col(perp)));
                }
                vec![params]
            }
            None => Vec::new(),
        };
        let result = optimize_with_starts(
            MixedRelation::Mp1(sign),
            a,
            b,
            rho,
            d_e,
            budget,
            seed.split(d_e as u64),
            &supplied,
        )?;
        rows.push(ConjectureSweepRow {
            d_e,
            best_rhs: result.best_rhs,
            restarts: result.restarts,
            best_seed: result.best_seed,
        });
        results.push(result);
    }

    let anchor = 2 * d_s;
    let plateau: Vec<(usize, f64)> = match rows.iter().find(|r| r.d_e == anchor) {
        Some(base) => rows
            .iter()
            .filter(|r| r.d_e >= anchor)
            .map(|r| (r.d_e, r.best_rhs - base.best_rhs))
            .collect(),
        None => Vec::new(),
    };
    let conjecture_consistent = if plateau.len() > 1 {
        Some(plateau.iter().all(|&(_, gain)| gain <= 1e-3))
    } else {
        None
    };
    Ok(ConjectureSweep {
        rows,
        plateau,
        conjecture_consistent,
    })
}

/// `(I ⊗ Lᵀ)|Φ⁺⟩` for normalized `L`: the purification of `LL†` living on
/// `H_S ⊗ H_E` with the system-major index `s·d_e + e`.
pub fn purify(l: &AmplitudeOperator) -> Result<StateVector> {
    l.ensure_normalized("purify")?;
    let (d_s, d_e) = (l.d_s(), l.d_e());
    Ok(StateVector::from_fn(d_s * d_e, |idx| {
        l.matrix()[(idx / d_e, idx % d_e)]
    }))
}

/// Inverse of [`purify`]: contracts a unit bipartite state against `|Φ⁺⟩`
/// (conjugation and transposition in the fixed computational basis).
pub fn amplitude_from_purification(
    psi_se: &StateVector,
    dims: (usize, usize),
) -> Result<AmplitudeOperator> {
    let (d_s, d_e) = dims;
    if d_s == 0 || d_e == 0 || d_s * d_e != psi_se.dim() {
        return Err(Error::dims(
            "amplitude_from_purification",
            format!("d_s * d_e = {}", psi_se.dim()),
            format!("{d_s} * {d_e}"),
        ));
    }
    if (psi_se.norm_squared() - 1.0).abs() > 1e-8 {
        return Err(Error::NotNormalized {
            context: "amplitude_from_purification".into(),
            value: psi_se.norm_squared(),
        });
    }
    let amps = psi_se.amplitudes();
    AmplitudeOperator::new(ComplexMatrix::from_fn(d_s, d_e, |s, e| amps[s * d_e + e]))
}

/// Vector specialization: a `d_e = 1` amplitude operator from a unit state.
pub fn amplitude_from_state(psi: &StateVector) -> Result<AmplitudeOperator> {
    let amps = psi.amplitudes();
    AmplitudeOperator::new(ComplexMatrix::from_fn(psi.dim(), 1, |i, _| amps[i]))
}
