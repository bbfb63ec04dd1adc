//! Shared inputs for the benchmarks.

use qutrit_core::circuit::{parse_circuit, Circuit, Registry};
use qutrit_core::rings::Cyclo36;
use qutrit_core::sim::{circuit_matrix, Matrix};

pub fn registry() -> Registry {
    Registry::builtin().expect("bundled registry")
}

pub fn construction(reg: &Registry) -> Circuit {
    reg.circuit_named("r_construction")
        .expect("bundled")
        .circuit
        .clone()
}

pub fn flat_construction(reg: &Registry) -> Circuit {
    reg.circuit_named("r_construction_flat")
        .expect("bundled")
        .circuit
        .clone()
}

/// A fixed single-qutrit Clifford+T word with T-count 6.
pub fn ct_word() -> Matrix {
    let c =
        parse_circuit("qutrits 1\nT 0\nH 0\nT 0\nS 0\nH 0\nTDG 0\nH 0\nT 0\nH 0\nT 0\nHDG 0\nT 0")
            .expect("valid text");
    circuit_matrix(&c).expect("one qutrit")
}

/// Dense field elements with several nonzero coefficients.
pub fn dense_pair() -> (Cyclo36, Cyclo36) {
    let a = Cyclo36::from_int_poly(&[3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8]);
    let b = Cyclo36::from_int_poly(&[2, 7, -1, 8, 2, -8, 1, 8, -2, 8, 4, -5]);
    (
        a.scale(&num_rational::BigRational::new(1.into(), 6.into())),
        b,
    )
}
