//! Exact gate classification: Pauli group, Clifford group, the Clifford
//! hierarchy, and ring-membership certificates and refutations.

mod hierarchy;
mod pauli;
mod phase;

pub use hierarchy::{
    hierarchy_level, in_hierarchy_level, is_clifford, CliffordReport, HierarchyReport, MAX_LEVEL,
};
pub use pauli::{is_pauli, PauliElement, PauliWitness};
pub use phase::{
    circuit_ring_certificate, matrix_ring_certificate, refute_phase_membership, Refutation,
    RingCertificate,
};

use crate::sim::{Matrix, SimError};

/// Hierarchy searches beyond the Clifford level enumerate `9ⁿ − 1` Paulis per
/// level, so they are limited to this many qutrits.
pub const MAX_HIERARCHY_QUTRITS: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("matrix dimension {0} is not a power of 3")]
    NotQutritDimension(usize),
    #[error("hierarchy search is limited to {MAX_HIERARCHY_QUTRITS} qutrits, got {0}")]
    TooManyQutrits(usize),
    #[error("hierarchy level cap must be between 1 and {MAX_LEVEL}, got {0}")]
    BadCap(u32),
    #[error(transparent)]
    Sim(#[from] SimError),
}

pub(crate) fn qutrit_count(u: &Matrix) -> Result<usize, AnalysisError> {
    u.qutrits()
        .ok_or(AnalysisError::NotQutritDimension(u.dim()))
}

pub(crate) fn conjugate(u: &Matrix, p: &Matrix) -> Matrix {
    u.mul(p)
        .and_then(|up| up.mul(&u.adjoint()))
        .expect("same dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{parse_circuit, Permutation, SingleGate, Thirds};
    use crate::rings::{Cyclo36, RingTag, RootOfUnity};
    use crate::sim::{circuit_matrix, parse_target, single_gate_matrix};

    fn g(s: SingleGate) -> Matrix {
        single_gate_matrix(s)
    }

    #[test]
    fn paulis_are_recognised_with_phase() {
        let x = g(SingleGate::X);
        let w = is_pauli(&x).unwrap().unwrap();
        assert_eq!(w.pauli.x, vec![1]);
        assert_eq!(w.phase, RootOfUnity::ONE);
        let xz = x.mul(&g(SingleGate::Z)).unwrap().scale(&Cyclo36::zeta9());
        let w = is_pauli(&xz).unwrap().unwrap();
        assert_eq!((w.pauli.x[0], w.pauli.z[0]), (1, 1));
        assert_eq!(w.phase, RootOfUnity::zeta9(1));
        assert_eq!(is_pauli(&g(SingleGate::S)).unwrap(), None);
        assert_eq!(is_pauli(&g(SingleGate::H)).unwrap(), None);
        // diagonal but not a Pauli
        assert_eq!(is_pauli(&g(SingleGate::R)).unwrap(), None);
        for p in PauliElement::all(2) {
            let w = is_pauli(&p.matrix()).unwrap().unwrap();
            assert_eq!(w.pauli, p);
        }
    }

    #[test]
    fn clifford_gates() {
        use SingleGate::*;
        for s in [
            X,
            Z,
            S,
            Sdg,
            H,
            Hdg,
            Tau(Permutation::SWAP01),
            ZPhase(Thirds(3), Thirds(3)),
        ] {
            assert!(is_clifford(&g(s)).unwrap().clifford, "{s}");
        }
        for s in [T, R, ZPhase(Thirds(1), Thirds(-1))] {
            assert!(!is_clifford(&g(s)).unwrap().clifford, "{s}");
        }
        let cx = parse_target("CX").unwrap();
        let rep = is_clifford(&cx).unwrap();
        assert!(rep.clifford);
        assert_eq!(rep.images.len(), 4);
    }

    #[test]
    fn hierarchy_levels() {
        let lvl = |m: &Matrix| hierarchy_level(m, 4).unwrap().level;
        assert_eq!(lvl(&g(SingleGate::X)), Some(1));
        assert_eq!(lvl(&g(SingleGate::H)), Some(2));
        assert_eq!(lvl(&g(SingleGate::T)), Some(3));
        assert_eq!(lvl(&g(SingleGate::Z)), Some(1));
        assert_eq!(lvl(&g(SingleGate::R)), None);
        let t_i = parse_target("T x I").unwrap();
        assert_eq!(hierarchy_level(&t_i, 3).unwrap().level, Some(3));
        assert!(in_hierarchy_level(&g(SingleGate::T), 3).unwrap());
        assert!(!in_hierarchy_level(&g(SingleGate::T), 2).unwrap());
        assert!(hierarchy_level(&g(SingleGate::T), 0).is_err());
        let three = parse_target("I x I x I").unwrap();
        assert!(hierarchy_level(&three, 3).is_err());
    }

    #[test]
    fn certificates() {
        let r = parse_circuit("qutrits 1\nR 0").unwrap();
        let cert = circuit_ring_certificate(&r, RingTag::Zomega).unwrap();
        assert!(cert.holds);
        let t = g(SingleGate::T);
        assert!(matrix_ring_certificate(&t, RingTag::Tzeta).holds);
        assert!(!matrix_ring_certificate(&t, RingTag::Tomega).holds);
        // a global phase is absorbed by the witness
        let mut_t = t.scale(&Cyclo36::zeta9().pow(8));
        let cert = matrix_ring_certificate(&mut_t, RingTag::Tzeta);
        assert!(cert.holds);
        let h = g(SingleGate::H);
        assert!(!matrix_ring_certificate(&h, RingTag::Zomega).holds);
        assert!(matrix_ring_certificate(&h, RingTag::Tomega).holds);
        assert!(!matrix_ring_certificate(&h, RingTag::Dalpha).holds);
    }

    #[test]
    fn refutations() {
        let t = g(SingleGate::T);
        match refute_phase_membership(&t, RingTag::Tomega) {
            Refutation::Refuted { first, second, .. } => {
                assert_eq!(first, (0, 0));
                assert_eq!(second, (1, 1));
            }
            Refutation::Inconclusive => panic!("T should be refuted over T[omega]"),
        }
        assert_eq!(
            refute_phase_membership(&t, RingTag::Tzeta),
            Refutation::Inconclusive
        );
        let c = circuit_matrix(&parse_circuit("qutrits 2\nH 0\nCX 0 1").unwrap()).unwrap();
        assert_eq!(
            refute_phase_membership(&c, RingTag::Tomega),
            Refutation::Inconclusive
        );
        let zeta_i = Matrix::identity(3).scale(&Cyclo36::zeta9());
        assert_eq!(
            refute_phase_membership(&zeta_i, RingTag::Tomega),
            Refutation::Inconclusive
        );
        // z36^2 is the first witness: zeta*z36^2 = z36^6 = -omega^2
        assert_eq!(
            matrix_ring_certificate(&zeta_i, RingTag::Tomega).witness,
            Some(RootOfUnity::new(2))
        );
        let t_i = parse_target("T x I").unwrap();
        let r = refute_phase_membership(&t_i, RingTag::Tomega);
        assert!(r.to_string().starts_with("refuted: pair (1, zeta)"), "{r}");
    }
}
