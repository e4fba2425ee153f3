//! Propagation of uncertainty through linear and nonlinear functions of
//! observables.
//!
//! The linear formula is an exact identity, not an approximation:
//!
//! `[Δ(Σ α_j A_j)]² = Σ_j α_j²(ΔA_j)² + Σ_{j≠k} α_j α_k ΔA_j ΔA_k Rcorr_{jk}`.
//!
//! Cross terms with a vanishing deviation are defined as zero, which is the
//! limit of the product as either deviation shrinks, so the identity survives
//! at eigenstates. The nonlinear (first-order Taylor) formula is validated
//! against the classical variance of the induced outcome distribution, which
//! is well defined for simultaneously diagonal observables.

use num_complex::Complex64;

use crate::av::{av_decompose, correlation, DEFAULT_ATOL};
use crate::error::{Error, Result};
use crate::relations::ensure_hermitian;
use crate::tensor::operators::{pauli_x, pauli_y, pauli_z};
use crate::tensor::{linear_combination, ComplexMatrix, StateVector};

/// Real linear combination `Σ α_j A_j` of Hermitian operators.
#[derive(Debug, Clone)]
pub struct LinearCombo {
    coefficients: Vec<f64>,
    operators: Vec<ComplexMatrix>,
}

impl LinearCombo {
    pub fn new(coefficients: Vec<f64>, operators: Vec<ComplexMatrix>) -> Result<Self> {
        if coefficients.len() != operators.len() {
            return Err(Error::LengthMismatch {
                context: "LinearCombo::new".into(),
                left: coefficients.len(),
                right: operators.len(),
            });
        }
        if operators.is_empty() {
            return Err(Error::InvalidDimension {
                context: "LinearCombo::new".into(),
                detail: "empty combination".into(),
            });
        }
        let dim = operators[0].rows();
        for (k, op) in operators.iter().enumerate() {
            if op.rows() != dim || op.cols() != dim {
                return Err(Error::dims(
                    format!("LinearCombo::new: operator {k}"),
                    format!("{dim}x{dim}"),
                    format!("{}x{}", op.rows(), op.cols()),
                ));
            }
        }
        Ok(Self {
            coefficients,
            operators,
        })
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    /// The combined operator `Σ α_j A_j`.
    pub fn combined(&self) -> Result<ComplexMatrix> {
        let terms: Vec<(Complex64, &ComplexMatrix)> = self
            .coefficients
            .iter()
            .zip(&self.operators)
            .map(|(&c, m)| (Complex64::new(c, 0.0), m))
            .collect();
        linear_combination(&terms)
    }
}

/// The correlation-sum side of the linear identity.
pub fn linear_variance(combo: &LinearCombo, psi: &StateVector) -> Result<f64> {
    for (k, op) in combo.operators().iter().enumerate() {
        ensure_hermitian(op, &format!("linear_variance: operator {k}"))?;
    }
    let n = combo.len();
    let mut deltas = Vec::with_capacity(n);
    for op in combo.operators() {
        deltas.push(av_decompose(op, psi)?.delta);
    }
    let alphas = combo.coefficients();
    let mut total = 0.0;
    for j in 0..n {
        total += alphas[j] * alphas[j] * deltas[j] * deltas[j];
    }
    for j in 0..n {
        for k in 0..n {
            if j == k || deltas[j] == 0.0 || deltas[k] == 0.0 {
                continue;
            }
            let rcorr = correlation(&combo.operators()[j], &combo.operators()[k], psi)?.rcorr();
            total += alphas[j] * alphas[k] * deltas[j] * deltas[k] * rcorr;
        }
    }
    Ok(total)
}

/// `[Δ(Σ α_j A_j)]²` evaluated directly on the combined operator; the other
/// side of the identity and the oracle for [`linear_variance`].
pub fn direct_variance(combo: &LinearCombo, psi: &StateVector) -> Result<f64> {
    let dec = av_decompose(&combo.combined()?, psi)?;
    Ok(dec.delta * dec.delta)
}

/// Pauli axis label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn operator(self) -> ComplexMatrix {
        match self {
            Axis::X => pauli_x(),
            Axis::Y => pauli_y(),
            Axis::Z => pauli_z(),
        }
    }
}

/// `[Δ(σ_j + σ_k)]² = (Δσ_j)² + (Δσ_k)² - 2⟨σ_j⟩⟨σ_k⟩` for `j ≠ k`.
///
/// Valid because the computed anticommutator of distinct Pauli operators
/// vanishes; checked against [`linear_variance`] in debug builds.
pub fn pauli_shortcut_variance(j: Axis, k: Axis, psi: &StateVector) -> Result<f64> {
    if j == k {
        return Err(Error::InvalidDimension {
            context: "pauli_shortcut_variance".into(),
            detail: "axes must differ".into(),
        });
    }
    let a = j.operator();
    let b = k.operator();
    let da = av_decompose(&a, psi)?;
    let db = av_decompose(&b, psi)?;
    let shortcut = da.delta * da.delta + db.delta * db.delta
        - 2.0 * da.expectation.re * db.expectation.re;
    debug_assert!({
        let combo = LinearCombo::new(vec![1.0, 1.0], vec![a, b])?;
        (shortcut - linear_variance(&combo, psi)?).abs() <= 1e-10
    });
    Ok(shortcut)
}

/// Inputs of the first-order Taylor propagation formula.
#[derive(Debug, Clone)]
pub struct TaylorInput {
    gradient: Vec<f64>,
    deltas: Vec<f64>,
    rcorr: Vec<f64>,
}

impl TaylorInput {
    /// `rcorr` is the full n×n real matrix in row-major order; entries must
    /// lie in `[-1, 1]` (to 1e-9) with unit diagonal wherever the
    /// corresponding deviation is positive.
    pub fn new(gradient: Vec<f64>, deltas: Vec<f64>, rcorr: Vec<f64>) -> Result<Self> {
        let n = gradient.len();
        if deltas.len() != n {
            return Err(Error::LengthMismatch {
                context: "TaylorInput::new: deltas".into(),
                left: n,
                right: deltas.len(),
            });
        }
        if rcorr.len() != n * n {
            return Err(Error::LengthMismatch {
                context: "TaylorInput::new: rcorr".into(),
                left: n * n,
                right: rcorr.len(),
            });
        }
        for (idx, &r) in rcorr.iter().enumerate() {
            if !(r >= -1.0 - 1e-9 && r <= 1.0 + 1e-9) {
                return Err(Error::InvalidDimension {
                    context: "TaylorInput::new".into(),
                    detail: format!("rcorr[{idx}] = {r} outside [-1, 1]"),
                });
            }
        }
        for (j, &d) in deltas.iter().enumerate() {
            if d > 0.0 && (rcorr[j * n + j] - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidDimension {
                    context: "TaylorInput::new".into(),
                    detail: format!("rcorr diagonal {j} must be 1 where delta > 0"),
                });
            }
        }
        Ok(Self {
            gradient,
            deltas,
            rcorr,
        })
    }

    pub fn len(&self) -> usize {
        self.gradient.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gradient.is_empty()
    }
}

/// `Σ_j g_j²Δ_j² + Σ_{j≠k} g_j g_k Δ_j Δ_k Rcorr_{jk}`, clamped at zero
/// (the quadratic form only dips negative through rcorr tolerance slack).
pub fn taylor_variance(input: &TaylorInput) -> f64 {
    let n = input.len();
    let (g, d, r) = (&input.gradient, &input.deltas, &input.rcorr);
    let mut total = 0.0;
    for j in 0..n {
        total += g[j] * g[j] * d[j] * d[j];
    }
    for j in 0..n {
        for k in 0..n {
            if j == k {
                continue;
            }
            total += g[j] * g[k] * d[j] * d[k] * r[j * n + k];
        }
    }
    total.max(0.0)
}

/// Exact-vs-Taylor comparison on a commuting family.
#[derive(Debug, Clone, Copy)]
pub struct TaylorValidation {
    /// Variance of `f` under the induced joint outcome distribution.
    pub exact: f64,
    /// [`taylor_variance`] with gradient at the means and measured Rcorr.
    pub approx: f64,
    pub rel_error: f64,
}

const COMMUTATOR_TOL: f64 = 1e-10;

/// Validates the Taylor formula against the classical variance of
/// `f(A_1..A_n)` for simultaneously diagonal Hermitian observables.
///
/// `gradient` may be supplied analytically; otherwise central differences
/// with step `1e-5 · max(1, |mean|)` per coordinate are used.
pub fn taylor_validate(
    f: &dyn Fn(&[f64]) -> f64,
    gradient: Option<&[f64]>,
    ops: &[ComplexMatrix],
    psi: &StateVector,
) -> Result<TaylorValidation> {
    if ops.is_empty() {
        return Err(Error::InvalidDimension {
            context: "taylor_validate".into(),
            detail: "empty operator list".into(),
        });
    }
    let dim = ops[0].rows();
    for (k, op) in ops.iter().enumerate() {
        ensure_hermitian(op, &format!("taylor_validate: operator {k}"))?;
        if op.rows() != dim || op.cols() != dim {
            return Err(Error::dims(
                format!("taylor_validate: operator {k}"),
                dim,
                op.rows(),
            ));
        }
    }
    for j in 0..ops.len() {
        for k in (j + 1)..ops.len() {
            let norm = crate::tensor::commutator(&ops[j], &ops[k])?.frobenius_norm();
            if norm > COMMUTATOR_TOL {
                return Err(Error::NonCommuting {
                    first: j,
                    second: k,
                    norm,
                });
            }
        }
    }
    for (k, op) in ops.iter().enumerate() {
        let mut offdiag: f64 = 0.0;
        for r in 0..dim {
            for c in 0..dim {
                if r != c {
                    offdiag = offdiag.max(op[(r, c)].norm());
                }
            }
        }
        if offdiag > COMMUTATOR_TOL {
            return Err(Error::NotDiagonal { index: k, offdiag });
        }
    }
    if psi.dim() != dim {
        return Err(Error::dims("taylor_validate: state", dim, psi.dim()));
    }
    if psi.norm_squared() <= 0.0 {
        return Err(Error::ZeroVector {
            context: "taylor_validate",
        });
    }
    if let Some(g) = gradient {
        if g.len() != ops.len() {
            return Err(Error::LengthMismatch {
                context: "taylor_validate: gradient".into(),
                left: ops.len(),
                right: g.len(),
            });
        }
    }

    // Joint outcome distribution over computational-basis results.
    let nsq = psi.norm_squared();
    let probs: Vec<f64> = psi.amplitudes().iter().map(|z| z.norm_sqr() / nsq).collect();
    let values = |outcome: usize| -> Vec<f64> {
        ops.iter().map(|op| op[(outcome, outcome)].re).collect()
    };
    let mut mean_f = 0.0;
    let mut mean_f_sq = 0.0;
    for outcome in 0..dim {
        let fx = f(&values(outcome));
        mean_f += probs[outcome] * fx;
        mean_f_sq += probs[outcome] * fx * fx;
    }
    let exact = mean_f_sq - mean_f * mean_f;

    let n = ops.len();
    let mut means = vec![0.0; n];
    let mut deltas = vec![0.0; n];
    for (j, op) in ops.iter().enumerate() {
        let dec = av_decompose(op, psi)?;
        means[j] = dec.expectation.re;
        deltas[j] = dec.delta;
    }
    let grad: Vec<f64> = match gradient {
        Some(g) => g.to_vec(),
        None => (0..n)
            .map(|j| {
                let h = 1e-5 * means[j].abs().max(1.0);
                let mut up = means.clone();
                let mut down = means.clone();
                up[j] += h;
                down[j] -= h;
                (f(&up) - f(&down)) / (2.0 * h)
            })
            .collect(),
    };
    let mut rcorr = vec![0.0; n * n];
    for j in 0..n {
        rcorr[j * n + j] = 1.0;
        for k in 0..n {
            if j == k {
                continue;
            }
            let atol_j = DEFAULT_ATOL * ops[j].frobenius_norm().max(1.0);
            let atol_k = DEFAULT_ATOL * ops[k].frobenius_norm().max(1.0);
            rcorr[j * n + k] = if deltas[j] > atol_j && deltas[k] > atol_k {
                correlation(&ops[j], &ops[k], psi)?.rcorr()
            } else {
                0.0
            };
        }
    }
    let approx = taylor_variance(&TaylorInput::new(grad, deltas, rcorr)?);
    let rel_error = (exact - approx).abs() / exact.max(1e-30);
    Ok(TaylorValidation {
        exact,
        approx,
        rel_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{sample_hermitian, sample_unit_state, RandomSeed};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_pair_on_pole_gives_two() {
        let combo = LinearCombo::new(vec![1.0, 1.0], vec![pauli_x(), pauli_y()]).unwrap();
        let v = linear_variance(&combo, &StateVector::basis(2, 0)).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn cancellation_of_identical_operators() {
        let a = sample_hermitian(4, RandomSeed(3)).unwrap();
        let psi = sample_unit_state(4, RandomSeed(4)).unwrap();
        let combo = LinearCombo::new(vec![1.0, -1.0], vec![a.clone(), a]).unwrap();
        let v = linear_variance(&combo, &psi).unwrap();
        assert!(v.abs() < 1e-10, "v = {v}");
    }

    #[test]
    fn linear_variance_is_an_exact_identity() {
        for seed in 0..200u64 {
            let dim = 6;
            let ops: Vec<ComplexMatrix> = (0..4)
                .map(|k| sample_hermitian(dim, RandomSeed(seed * 11 + k)).unwrap())
                .collect();
            let alphas: Vec<f64> = (0..4).map(|k| ((seed + k) as f64 * 0.37).sin() * 2.0).collect();
            let psi = sample_unit_state(dim, RandomSeed(seed + 50_000)).unwrap();
            let combo = LinearCombo::new(alphas, ops).unwrap();
            let lhs = linear_variance(&combo, &psi).unwrap();
            let rhs = direct_variance(&combo, &psi).unwrap();
            let rel = (lhs - rhs).abs() / rhs.abs().max(1.0);
            assert!(rel <= 1e-9, "seed {seed} rel {rel}");
        }
    }

    #[test]
    fn linear_variance_is_permutation_invariant() {
        let ops: Vec<ComplexMatrix> = (0..3)
            .map(|k| sample_hermitian(4, RandomSeed(60 + k)).unwrap())
            .collect();
        let psi = sample_unit_state(4, RandomSeed(70)).unwrap();
        let a = LinearCombo::new(vec![0.5, -1.5, 2.0], ops.clone()).unwrap();
        let permuted = LinearCombo::new(
            vec![2.0, 0.5, -1.5],
            vec![ops[2].clone(), ops[0].clone(), ops[1].clone()],
        )
        .unwrap();
        let va = linear_variance(&a, &psi).unwrap();
        let vb = linear_variance(&permuted, &psi).unwrap();
        assert!((va - vb).abs() < 1e-12);
    }

    #[test]
    fn linear_variance_scales_quartically_under_doubling() {
        let ops: Vec<ComplexMatrix> = (0..3)
            .map(|k| sample_hermitian(5, RandomSeed(80 + k)).unwrap())
            .collect();
        let psi = sample_unit_state(5, RandomSeed(90)).unwrap();
        let base = LinearCombo::new(vec![1.0, 0.5, -0.7], ops.clone()).unwrap();
        let doubled = LinearCombo::new(vec![2.0, 1.0, -1.4], ops).unwrap();
        let v1 = linear_variance(&base, &psi).unwrap();
        let v2 = linear_variance(&doubled, &psi).unwrap();
        assert!((v2 - 4.0 * v1).abs() < 1e-12 * v1.abs().max(1.0));
    }

    #[test]
    fn eigenstate_terms_contribute_nothing() {
        // ψ eigenstate of σz: its delta vanishes and the cross terms drop.
        let combo = LinearCombo::new(vec![1.0, 1.0], vec![pauli_z(), pauli_x()]).unwrap();
        let psi = StateVector::basis(2, 0);
        let v = linear_variance(&combo, &psi).unwrap();
        let direct = direct_variance(&combo, &psi).unwrap();
        assert!((v - direct).abs() < 1e-12);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn shortcut_on_pole_and_x_plus() {
        let v = pauli_shortcut_variance(Axis::X, Axis::Y, &StateVector::basis(2, 0)).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        let inv = c(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let x_plus = StateVector::new(vec![inv, inv]);
        let v = pauli_shortcut_variance(Axis::X, Axis::Y, &x_plus).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn shortcut_matches_linear_variance_with_phase() {
        let psi = StateVector::new(vec![
            c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
            Complex64::from_polar(std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_PI_4),
        ]);
        let shortcut = pauli_shortcut_variance(Axis::X, Axis::Z, &psi).unwrap();
        let combo = LinearCombo::new(vec![1.0, 1.0], vec![pauli_x(), pauli_z()]).unwrap();
        let direct = linear_variance(&combo, &psi).unwrap();
        assert!((shortcut - direct).abs() < 1e-10);
    }

    #[test]
    fn shortcut_rejects_equal_axes() {
        assert!(pauli_shortcut_variance(Axis::X, Axis::X, &StateVector::basis(2, 0)).is_err());
    }

    #[test]
    fn taylor_independent_sum_form() {
        let input = TaylorInput::new(
            vec![1.0, 1.0],
            vec![0.3, 0.4],
            vec![1.0, 0.0, 0.0, 1.0],
        )
        .unwrap();
        assert!((taylor_variance(&input) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn taylor_perfect_anticorrelation_cancels() {
        let input = TaylorInput::new(
            vec![1.0, 1.0],
            vec![1.0, 1.0],
            vec![1.0, -1.0, -1.0, 1.0],
        )
        .unwrap();
        assert_eq!(taylor_variance(&input), 0.0);
    }

    #[test]
    fn taylor_single_variable_is_g_sq_delta_sq() {
        let input = TaylorInput::new(vec![-2.5], vec![0.7], vec![1.0]).unwrap();
        assert_eq!(taylor_variance(&input), 2.5 * 2.5 * 0.7 * 0.7);
    }

    #[test]
    fn taylor_three_variable_matches_naive_double_sum() {
        let g = [0.7, -1.2, 0.4];
        let d = [0.2, 0.5, 0.9];
        let r = [
            1.0, 0.3, -0.2, //
            0.3, 1.0, 0.6, //
            -0.2, 0.6, 1.0,
        ];
        let input = TaylorInput::new(g.to_vec(), d.to_vec(), r.to_vec()).unwrap();
        let mut expected = 0.0;
        for j in 0..3 {
            for k in 0..3 {
                expected += g[j] * g[k] * d[j] * d[k] * r[j * 3 + k];
            }
        }
        assert!((taylor_variance(&input) - expected).abs() < 1e-12);
    }

    #[test]
    fn taylor_input_validation() {
        assert!(TaylorInput::new(vec![1.0], vec![1.0, 2.0], vec![1.0]).is_err());
        assert!(TaylorInput::new(vec![1.0], vec![1.0], vec![1.5]).is_err());
        // diagonal must be 1 where delta > 0
        assert!(TaylorInput::new(vec![1.0], vec![1.0], vec![0.0]).is_err());
        // delta = 0 releases the diagonal constraint
        assert!(TaylorInput::new(vec![1.0], vec![0.0], vec![0.0]).is_ok());
    }

    #[test]
    fn validate_is_exact_for_linear_functions() {
        let a = ComplexMatrix::diagonal_real(&[0.1, 0.9, -0.4, 1.7]);
        let b = ComplexMatrix::diagonal_real(&[1.0, -1.0, 0.5, 0.25]);
        let psi = sample_unit_state(4, RandomSeed(17)).unwrap();
        let f = |v: &[f64]| 2.0 * v[0] - 3.0 * v[1];
        let result = taylor_validate(&f, None, &[a, b], &psi).unwrap();
        assert!(result.rel_error <= 1e-9, "rel {}", result.rel_error);
    }

    /// Correlated two-observable family on three outcomes; deviations scale
    /// linearly in `s` while the means stay put.
    fn product_family(s: f64) -> (Vec<ComplexMatrix>, StateVector) {
        let probs = [0.5, 0.3, 0.2];
        let x_raw = [1.0, -1.0, 0.5];
        let y_raw = [1.0, 0.5, -2.0];
        let mean = |v: &[f64]| -> f64 { v.iter().zip(&probs).map(|(x, p)| x * p).sum() };
        let mx = mean(&x_raw);
        let my = mean(&y_raw);
        let a_mean = 2.0;
        let b_mean = 3.0;
        let a: Vec<f64> = x_raw.iter().map(|x| a_mean + s * (x - mx)).collect();
        let b: Vec<f64> = y_raw.iter().map(|y| b_mean + s * (y - my)).collect();
        let psi = StateVector::new(probs.iter().map(|p| c(p.sqrt(), 0.0)).collect());
        (
            vec![
                ComplexMatrix::diagonal_real(&a),
                ComplexMatrix::diagonal_real(&b),
            ],
            psi,
        )
    }

    #[test]
    fn validate_product_converges_as_deltas_shrink() {
        let f = |v: &[f64]| v[0] * v[1];
        let mut errors = Vec::new();
        for s in [1.0, 0.5, 0.25] {
            let (ops, psi) = product_family(s);
            let result = taylor_validate(&f, None, &ops, &psi).unwrap();
            errors.push((result.exact - result.approx).abs());
        }
        let r1 = errors[0] / errors[1];
        let r2 = errors[1] / errors[2];
        assert!(r1 >= 3.5 && r2 >= 3.5, "ratios {r1} {r2}");
        assert!(r1 <= 16.5 && r2 <= 16.5, "ratios {r1} {r2}");
    }

    #[test]
    fn validate_product_small_relative_spread() {
        // Δ/mean = 0.05 on a two-outcome observable pair.
        let a = ComplexMatrix::diagonal_real(&[1.05, 0.95, 1.05, 0.95]);
        let b = ComplexMatrix::diagonal_real(&[2.1, 2.1, 1.9, 1.9]);
        let psi = StateVector::new(vec![c(0.5, 0.0); 4]);
        let f = |v: &[f64]| v[0] * v[1];
        let result = taylor_validate(&f, None, &[a, b], &psi).unwrap();
        assert!(result.rel_error <= 0.05, "rel {}", result.rel_error);
    }

    #[test]
    fn validate_square_of_two_outcome_observable() {
        // f(a) = a² with Δ/⟨a⟩ = 0.05.
        let a = ComplexMatrix::diagonal_real(&[1.05, 0.95]);
        let psi = StateVector::new(vec![c(std::f64::consts::FRAC_1_SQRT_2, 0.0); 2]);
        let f = |v: &[f64]| v[0] * v[0];
        let result = taylor_validate(&f, None, &[a], &psi).unwrap();
        assert!(result.rel_error <= 0.05, "rel {}", result.rel_error);
    }

    #[test]
    fn validate_rejects_non_commuting_and_names_the_pair() {
        let f = |v: &[f64]| v[0] + v[1];
        let err = taylor_validate(
            &f,
            None,
            &[pauli_x(), pauli_z()],
            &StateVector::basis(2, 0),
        )
        .unwrap_err();
        match err {
            Error::NonCommuting { first, second, .. } => {
                assert_eq!((first, second), (0, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validate_rejects_non_diagonal_commuting_inputs() {
        let f = |v: &[f64]| v[0] + v[1];
        let err = taylor_validate(
            &f,
            None,
            &[pauli_x(), pauli_x()],
            &StateVector::basis(2, 0),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotDiagonal { index: 0, .. }));
    }
}
