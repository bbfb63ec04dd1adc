//! Exact unitary simulation over `Q(z₃₆)`.
//!
//! Basis states `|q₀ q₁ … q_{n−1}⟩` are ordered with qutrit 0 most
//! significant, so `A ⊗ B` puts `A` on qutrit 0.

mod apply;
mod expr;
mod matrix;

pub use apply::{circuit_matrix, gate_matrix, single_gate_matrix};
pub use expr::{parse_target, ExprError};
pub use matrix::{
    controlled_target, equal_exact, equal_up_to_controlled_phase, equal_up_to_phase, Matrix,
    UnitaryMatrix,
};

/// Dense matrices are limited to `27×27`.
pub const MAX_QUTRITS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("{0} qutrits exceeds the simulator limit of {MAX_QUTRITS}")]
    TooManyQutrits(usize),
    #[error("qutrit index {index} out of range for {n} qutrits")]
    IndexOutOfRange { index: usize, n: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{parse_circuit, Circuit, Gate, Permutation, SingleGate, Thirds};
    use crate::rings::Cyclo36;

    fn m(g: SingleGate) -> Matrix {
        single_gate_matrix(g)
    }

    fn pow(a: &Matrix, k: usize) -> Matrix {
        (0..k).fold(Matrix::identity(a.dim()), |acc, _| acc.mul(a).unwrap())
    }

    #[test]
    fn t_is_diag_1_zeta_zeta8() {
        let z = Cyclo36::zeta9();
        assert_eq!(
            m(SingleGate::T),
            Matrix::diagonal(vec![Cyclo36::one(), z.clone(), z.pow(8)])
        );
    }

    #[test]
    fn hadamard_relations() {
        let h = m(SingleGate::H);
        let tau12 = m(SingleGate::Tau(Permutation::SWAP12));
        assert_eq!(pow(&h, 2), tau12.neg());
        assert!(pow(&h, 4).is_identity());
        assert_ne!(h, m(SingleGate::Hdg));
        assert_eq!(pow(&h, 3), m(SingleGate::Hdg));
        let sh = m(SingleGate::S).mul(&h).unwrap();
        assert_eq!(pow(&sh, 3), Matrix::identity(3).scale(&-Cyclo36::omega()));
        assert_eq!(
            equal_up_to_phase(&pow(&sh, 3), &Matrix::identity(3)).unwrap(),
            Some(-Cyclo36::omega())
        );
        assert_eq!(
            equal_up_to_phase(&pow(&h, 2), &tau12).unwrap(),
            Some(Cyclo36::from_int(-1))
        );
        assert_eq!(
            equal_up_to_phase(&m(SingleGate::X), &m(SingleGate::Z)).unwrap(),
            None
        );
    }

    #[test]
    fn xphase_2_1_is_x() {
        let x = m(SingleGate::XPhase(Thirds::integer(2), Thirds::integer(1)));
        assert_eq!(x, m(SingleGate::X));
    }

    #[test]
    fn circuit_order_and_empty() {
        let c = Circuit::new(1).unwrap();
        assert!(circuit_matrix(&c).unwrap().is_identity());
        let c = parse_circuit("qutrits 1\nS 0\nH 0\nS 0\nH 0\nS 0\nH 0").unwrap();
        // (SH)³ read as matrices: the circuit S,H applied thrice is (HS)³
        let hs = m(SingleGate::H).mul(&m(SingleGate::S)).unwrap();
        assert_eq!(circuit_matrix(&c).unwrap(), pow(&hs, 3));
        assert_eq!(pow(&hs, 3), Matrix::identity(3).scale(&-Cyclo36::omega()));
    }

    #[test]
    fn cx_and_kron_conventions() {
        let cx = gate_matrix(&Gate::cx(0, 1), 2).unwrap();
        // |1,1⟩ = index 4 ↦ |1,2⟩ = index 5
        assert!(cx.get(5, 4).is_one());
        let r_i = gate_matrix(&Gate::single(SingleGate::R, 0), 2).unwrap();
        assert_eq!(r_i, m(SingleGate::R).kron(&Matrix::identity(3)));
        let i_r = gate_matrix(&Gate::single(SingleGate::R, 1), 2).unwrap();
        let mut d = vec![Cyclo36::one(); 9];
        for k in [2, 5, 8] {
            d[k] = Cyclo36::from_int(-1);
        }
        assert_eq!(i_r, Matrix::diagonal(d));
        assert_eq!(parse_target("I x R").unwrap(), i_r);
        assert_eq!(
            circuit_matrix(&parse_circuit("qutrits 3\nCX 2 0").unwrap())
                .unwrap()
                .dim(),
            27
        );
        assert!(circuit_matrix(&parse_circuit("qutrits 4\nX 0").unwrap()).is_err());
    }

    #[test]
    fn phase_kickback() {
        let minus_i = Matrix::identity(3).neg();
        assert_eq!(
            controlled_target(&minus_i, None),
            parse_target("R x I").unwrap()
        );
        assert!(controlled_target(&Matrix::identity(3), None).is_identity());
    }

    #[test]
    fn controlled_gates_match_targets() {
        let c = parse_circuit("qutrits 2\nC2[SDG 1 phase=zeta] 0").unwrap();
        assert_eq!(
            circuit_matrix(&c).unwrap(),
            parse_target("C2[SDG phase=zeta]").unwrap()
        );
        let c = parse_circuit("qutrits 2\nC2[X 0] 1").unwrap();
        let swap = parse_circuit("qutrits 2\nC2[X 1] 0").unwrap();
        assert_ne!(circuit_matrix(&c).unwrap(), circuit_matrix(&swap).unwrap());
        let l = parse_circuit("qutrits 2\nLAMBDA[X 1] 0").unwrap();
        assert_eq!(circuit_matrix(&l).unwrap(), parse_target("CX").unwrap());
    }

    #[test]
    fn hadamard_decompositions() {
        let z22 = "ZPHASE(2,2)";
        let lhs = parse_target(&format!("-{z22}*XPHASE(2,2)*{z22}")).unwrap();
        assert_eq!(lhs, m(SingleGate::H));
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_target("zeta^7 * ZPHASE(1,1)").unwrap().dim(), 3);
        assert_eq!(parse_target("-(X)").unwrap(), m(SingleGate::X).neg());
        assert!(parse_target("Q").is_err());
        assert!(parse_target("zeta").is_err());
        assert!(parse_target("X x X x X x X").is_err());
        assert!(parse_target("C2[CX]").is_err());
        assert!(parse_target("X * CX").is_err());
    }

    #[test]
    fn unitarity_of_every_gate() {
        use SingleGate::*;
        let gates = [
            X,
            Xdg,
            Z,
            Zdg,
            S,
            Sdg,
            H,
            Hdg,
            T,
            Tdg,
            R,
            Tau(Permutation::SWAP01),
            ZPhase(Thirds(1), Thirds(-1)),
            XPhase(Thirds(2), Thirds(5)),
        ];
        for g in gates {
            assert!(m(g).is_unitary(), "{g}");
            assert_eq!(
                m(g).mul(&m(g.adjoint())).unwrap(),
                Matrix::identity(3),
                "{g}"
            );
        }
    }
}
