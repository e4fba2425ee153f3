//! Standard operators: Pauli matrices, spin-1/2 components, and truncated
//! oscillator ladders (ħ = 1 throughout).

use num_complex::Complex64;

use crate::tensor::ComplexMatrix;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
        .expect("static matrix")
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
        .expect("static matrix")
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
        .expect("static matrix")
}

/// Spin components `S_j = σ_j / 2`.
pub fn spin_x() -> ComplexMatrix {
    pauli_x().scale(c(0.5, 0.0))
}

pub fn spin_y() -> ComplexMatrix {
    pauli_y().scale(c(0.5, 0.0))
}

pub fn spin_z() -> ComplexMatrix {
    pauli_z().scale(c(0.5, 0.0))
}

/// Truncated lowering operator `a` in the number basis `|0⟩..|dim-1⟩`.
pub fn lowering(dim: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            c((j as f64).sqrt(), 0.0)
        } else {
            c(0.0, 0.0)
        }
    })
}

/// Position quadrature `x = (a + a†)/√2`.
pub fn position(dim: usize) -> ComplexMatrix {
    let a = lowering(dim);
    a.add(&a.adjoint())
        .expect("same shape")
        .scale(c(std::f64::consts::FRAC_1_SQRT_2, 0.0))
}

/// Momentum quadrature `p = i (a† - a)/√2`.
pub fn momentum(dim: usize) -> ComplexMatrix {
    let a = lowering(dim);
    a.adjoint()
        .sub(&a)
        .expect("same shape")
        .scale(c(0.0, std::f64::consts::FRAC_1_SQRT_2))
}
