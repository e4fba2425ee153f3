//! Partial trace over one factor of a bipartite space.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::ComplexMatrix;

/// Which factor of `H_S ⊗ H_E` an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    System,
    Environment,
}

/// Reduces a matrix on `H_S ⊗ H_E` (system-major index `s * d_e + e`) to the
/// named subsystem by tracing out the other one. The trace is preserved.
pub fn partial_trace(
    m: &ComplexMatrix,
    dims: (usize, usize),
    keep: Subsystem,
) -> Result<ComplexMatrix> {
    let (d_s, d_e) = dims;
    if d_s == 0 || d_e == 0 {
        return Err(Error::InvalidDimension {
            context: "partial_trace".into(),
            detail: format!("dims ({d_s}, {d_e})"),
        });
    }
    let side = d_s * d_e;
    if m.rows() != side || m.cols() != side {
        return Err(Error::dims(
            "partial_trace",
            format!("side {side}"),
            format!("{}x{}", m.rows(), m.cols()),
        ));
    }
    let out = match keep {
        Subsystem::System => ComplexMatrix::from_fn(d_s, d_s, |s1, s2| {
            let mut acc = Complex64::new(0.0, 0.0);
            for e in 0..d_e {
                acc += m[(s1 * d_e + e, s2 * d_e + e)];
            }
            acc
        }),
        Subsystem::Environment => ComplexMatrix::from_fn(d_e, d_e, |e1, e2| {
            let mut acc = Complex64::new(0.0, 0.0);
            for s in 0..d_s {
                acc += m[(s * d_e + e1, s * d_e + e2)];
            }
            acc
        }),
    };
    Ok(out)
}
