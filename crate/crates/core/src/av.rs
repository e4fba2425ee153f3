//! The identity `A|ψ⟩ = ⟨A⟩|ψ⟩ + ΔA|ψ⊥_A⟩` and what follows directly from it.
//!
//! For any linear operator `A` (Hermitian or not) and any nonzero vector `ψ`:
//!
//! * `⟨A⟩ = ⟨ψ|A|ψ⟩ / ⟨ψ|ψ⟩`, a complex number in general;
//! * `ΔA = sqrt(⟨A†A⟩ - |⟨A⟩|²)`, real and nonnegative;
//! * `ψ⊥_A` is orthogonal to `ψ` with `⟨ψ⊥|ψ⊥⟩ = ⟨ψ|ψ⟩`.
//!
//! The residual phase is fixed deterministically by the closed form
//! `ψ⊥_A = (A - ⟨A⟩)ψ / ΔA`, which makes the sum-of-residuals identity
//! `Δ(ΣA_j) ψ⊥_Σ = Σ_j ΔA_j ψ⊥_j` hold as exact vector arithmetic. When
//! `ΔA` falls below `atol · max(1, ‖A‖_F)` the state is treated as an
//! eigenstate: the residual is the zero vector and `eigenstate` is set, which
//! keeps the sum identity exactly true.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{linear_combination, ComplexMatrix, StateVector};

/// Default absolute tolerance for eigenstate detection and degeneracy checks.
pub const DEFAULT_ATOL: f64 = 1e-10;

/// Result of decomposing `Aψ` into its mean part and orthogonal fluctuation.
#[derive(Debug, Clone)]
pub struct AvDecomposition {
    /// `⟨A⟩`; real up to float noise when `A` is Hermitian.
    pub expectation: Complex64,
    /// `ΔA ≥ 0`. When `eigenstate` is set this is below the detection
    /// threshold `atol · max(1, ‖A‖_F)`.
    pub delta: f64,
    /// `ψ⊥_A`, equal-norm and orthogonal to `ψ`; the zero vector when
    /// `eigenstate` is set.
    pub residual: StateVector,
    pub eigenstate: bool,
}

/// Generalized correlation of two operators in a common state.
#[derive(Debug, Clone, Copy)]
pub struct CorrelationValue {
    /// `⟨ψ⊥_A|ψ⊥_B⟩ = (⟨A†B⟩ - ⟨A⟩*⟨B⟩) / (ΔA ΔB)`.
    pub corr: Complex64,
}

impl CorrelationValue {
    /// Real part; reduces to the Pearson correlation for commuting
    /// observables.
    pub fn rcorr(&self) -> f64 {
        self.corr.re
    }

    /// Imaginary part; `⟨[A,B]⟩ / (2i ΔA ΔB)` for Hermitian pairs.
    pub fn imcorr(&self) -> f64 {
        self.corr.im
    }
}

/// Exact two-sided evaluation of the Cauchy-Schwarz identity derived from the
/// decomposition of `P = |g⟩⟨g|` applied to `f`.
#[derive(Debug, Clone, Copy)]
pub struct CauchySchwarzIdentity {
    /// `⟨f|f⟩⟨g|g⟩`.
    pub lhs: f64,
    /// `|⟨f|g⟩|² + (ΔP)² ⟨f|f⟩² / |⟨f|g⟩|²`.
    pub rhs_sum: f64,
    pub delta_p: f64,
}

fn check_dims(a: &ComplexMatrix, psi: &StateVector, context: &'static str) -> Result<()> {
    if !a.is_square() {
        return Err(Error::dims(
            context,
            "square operator",
            format!("{}x{}", a.rows(), a.cols()),
        ));
    }
    if a.rows() != psi.dim() {
        return Err(Error::dims(context, a.rows(), psi.dim()));
    }
    if psi.norm_squared() <= 0.0 {
        return Err(Error::ZeroVector { context });
    }
    Ok(())
}

/// `⟨A⟩ = ⟨ψ|A|ψ⟩ / ⟨ψ|ψ⟩`; normalization-independent.
pub fn expectation(a: &ComplexMatrix, psi: &StateVector) -> Result<Complex64> {
    check_dims(a, psi, "expectation")?;
    let a_psi = a.apply(psi)?;
    Ok(psi.inner(&a_psi)? / Complex64::new(psi.norm_squared(), 0.0))
}

/// Decomposes `Aψ` with the default eigenstate tolerance.
pub fn av_decompose(a: &ComplexMatrix, psi: &StateVector) -> Result<AvDecomposition> {
    av_decompose_with_atol(a, psi, DEFAULT_ATOL)
}

/// Decomposes `Aψ`, treating `ΔA ≤ atol · max(1, ‖A‖_F)` as an eigenstate.
pub fn av_decompose_with_atol(
    a: &ComplexMatrix,
    psi: &StateVector,
    atol: f64,
) -> Result<AvDecomposition> {
    check_dims(a, psi, "av_decompose")?;
    let nsq = psi.norm_squared();
    let a_psi = a.apply(psi)?;
    let expectation = psi.inner(&a_psi)? / Complex64::new(nsq, 0.0);
    // ⟨A†A⟩ = ‖Aψ‖² / ‖ψ‖² is nonnegative for arbitrary linear A.
    let second_moment = a_psi.norm_squared() / nsq;
    let variance = (second_moment - expectation.norm_sqr()).max(0.0);
    let delta = variance.sqrt();

    let threshold = atol * a.frobenius_norm().max(1.0);
    if delta <= threshold {
        return Ok(AvDecomposition {
            expectation,
            delta,
            residual: StateVector::zero(psi.dim()),
            eigenstate: true,
        });
    }
    let centered = a_psi.add_scaled(psi, -expectation)?;
    let residual = centered.scale(Complex64::new(1.0 / delta, 0.0));
    Ok(AvDecomposition {
        expectation,
        delta,
        residual,
        eigenstate: false,
    })
}

/// `ΔA` alone, for callers that only need the deviation.
pub fn delta(a: &ComplexMatrix, psi: &StateVector) -> Result<f64> {
    Ok(av_decompose(a, psi)?.delta)
}

/// Generalized correlation `corr_{A,B} = (⟨A†B⟩ - ⟨A⟩*⟨B⟩)/(ΔA ΔB)`.
///
/// Undefined when either operator has vanishing deviation in `ψ`.
pub fn correlation(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    psi: &StateVector,
) -> Result<CorrelationValue> {
    check_dims(a, psi, "correlation")?;
    check_dims(b, psi, "correlation")?;
    let dec_a = av_decompose(a, psi)?;
    if dec_a.eigenstate {
        return Err(Error::DegenerateCorrelation {
            operator: "first (A)".into(),
        });
    }
    let dec_b = av_decompose(b, psi)?;
    if dec_b.eigenstate {
        return Err(Error::DegenerateCorrelation {
            operator: "second (B)".into(),
        });
    }
    let nsq = psi.norm_squared();
    let a_psi = a.apply(psi)?;
    let b_psi = b.apply(psi)?;
    // ⟨A†B⟩ = ⟨Aψ|Bψ⟩ / ⟨ψ|ψ⟩
    let cross = a_psi.inner(&b_psi)? / Complex64::new(nsq, 0.0);
    let corr = (cross - dec_a.expectation.conj() * dec_b.expectation)
        / Complex64::new(dec_a.delta * dec_b.delta, 0.0);
    Ok(CorrelationValue { corr })
}

/// Norm of `Δ(ΣA_j) ψ⊥_Σ - Σ_j ΔA_j ψ⊥_j`; zero in exact arithmetic.
pub fn sum_residual_identity(ops: &[ComplexMatrix], psi: &StateVector) -> Result<f64> {
    if ops.len() < 2 {
        return Err(Error::InvalidDimension {
            context: "sum_residual_identity".into(),
            detail: format!("need at least 2 operators, got {}", ops.len()),
        });
    }
    let one = Complex64::new(1.0, 0.0);
    let terms: Vec<(Complex64, &ComplexMatrix)> = ops.iter().map(|m| (one, m)).collect();
    let total = linear_combination(&terms)?;
    let dec_total = av_decompose(&total, psi)?;
    let mut diff = dec_total
        .residual
        .scale(Complex64::new(dec_total.delta, 0.0));
    for op in ops {
        let dec = av_decompose(op, psi)?;
        diff = diff.add_scaled(&dec.residual, Complex64::new(-dec.delta, 0.0))?;
    }
    Ok(diff.norm())
}

/// Evaluates `⟨f|f⟩⟨g|g⟩ = |⟨f|g⟩|² + (ΔP)² ⟨f|f⟩² / |⟨f|g⟩|²` for
/// `P = |g⟩⟨g|`, the nondegenerate branch of the Cauchy-Schwarz proof.
///
/// When `f` is zero or `⟨f|g⟩` vanishes the inequality holds trivially and
/// the identity is not evaluated ([`Error::CauchySchwarzDegenerate`]).
pub fn cauchy_schwarz_identity(f: &StateVector, g: &StateVector) -> Result<CauchySchwarzIdentity> {
    if f.dim() != g.dim() {
        return Err(Error::dims("cauchy_schwarz_identity", f.dim(), g.dim()));
    }
    let f_sq = f.norm_squared();
    let overlap = f.inner(g)?;
    let scale = (f_sq * g.norm_squared()).sqrt();
    if f_sq <= 0.0 || overlap.norm_sqr() <= (DEFAULT_ATOL * scale.max(1e-300)).powi(2) {
        return Err(Error::CauchySchwarzDegenerate);
    }
    let projector = g.outer();
    let dec = av_decompose(&projector, f)?;
    let overlap_sq = overlap.norm_sqr();
    let rhs_sum = overlap_sq + dec.delta * dec.delta * f_sq * f_sq / overlap_sq;
    Ok(CauchySchwarzIdentity {
        lhs: f_sq * g.norm_squared(),
        rhs_sum,
        delta_p: dec.delta,
    })
}
