//! Numerical toolkit for standard-deviation uncertainty relations built on the
//! decomposition `A|ψ⟩ = ⟨A⟩|ψ⟩ + ΔA|ψ⊥_A⟩`.
//!
//! The crate splits into five layers:
//!
//! * [`tensor`] — dense complex linear algebra: matrices, state vectors,
//!   density operators, Hermitian eigendecomposition, PSD square roots, polar
//!   decomposition, partial traces, and seeded random sampling.
//! * [`av`] — the identity itself: expectation/deviation/residual triples for
//!   arbitrary linear operators, generalized correlations, the sum-of-residuals
//!   identity and the Cauchy-Schwarz identity it implies.
//! * [`relations`] — uncertainty relations (Robertson, Schrödinger, sum,
//!   Maccone-Pati and their weighted generalizations) evaluated as
//!   lhs/rhs/slack reports, plus a saturating-state search.
//! * [`propagation`] — exact linear propagation of uncertainty and the
//!   first-order Taylor formula with a classical validation oracle.
//! * [`mixed`] — amplitude operators `L` with `LL† = ρ`, the operator-level
//!   identity, mixed-state Maccone-Pati bounds, bound maximization over
//!   amplitude operators, and the purification bridge.
//!
//! Every operation is a pure function of its inputs; values are immutable
//! after construction and safe to share across threads. Randomized sweeps are
//! reproducible: all sampling goes through [`tensor::RandomSeed`].

pub mod av;
pub mod error;
pub mod mixed;
pub mod propagation;
pub mod relations;
pub mod simplex;
pub mod tensor;

pub use error::{Error, Result};
pub use tensor::{
    ComplexMatrix, Complex64, DensityOperator, RandomSeed, StateVector, Subsystem,
};
pub use av::{AvDecomposition, CorrelationValue};
pub use mixed::{AmplitudeOperator, ConjectureSweep, MixedBoundResult, OperatorAvDecomposition};
pub use relations::{RelationId, RelationReport, SearchResult, Sign};
pub use simplex::SearchBudget;
