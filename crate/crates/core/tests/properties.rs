mod common;

use proptest::prelude::*;
use qutrit_core::adjoint::{
    adjoint_of, pattern_equiv, single_qutrit_ct_obstruction, Block, ResiduePattern, Verdict,
};
use qutrit_core::analysis::{
    circuit_ring_certificate, hierarchy_level, in_hierarchy_level, is_clifford,
    matrix_ring_certificate, refute_phase_membership,
};
use qutrit_core::circuit::{
    parse_circuit, t_count, Circuit, Gate, Permutation, Registry, SingleGate, Thirds,
};
use qutrit_core::rings::{RingTag, RootOfUnity, Z3};
use qutrit_core::sim::{circuit_matrix, controlled_target, parse_target, Matrix};

type Codes = Vec<(usize, usize, usize)>;

fn codes(max_len: usize) -> impl Strategy<Value = Codes> {
    prop::collection::vec((0usize..64, 0usize..8, 0usize..8), 0..=max_len)
}

fn matrix(c: &Circuit) -> Matrix {
    circuit_matrix(c).unwrap()
}

/// Two-qutrit words that also use registered controlled gates.
fn macro_word(codes: &[(usize, usize, usize)]) -> Circuit {
    let inners = [
        SingleGate::X,
        SingleGate::Xdg,
        SingleGate::Tau(Permutation::SWAP12),
        SingleGate::Tau(Permutation::SWAP01),
    ];
    let mut c = Circuit::new(2).unwrap();
    for &(g, a, _) in codes {
        let (q, other) = (a % 2, 1 - a % 2);
        let gate = match g % 12 {
            k @ 0..=7 => Gate::single(common::CLIFFORD_T[k], q),
            8 => Gate::cx(q, other),
            k => Gate::ctrl2(inners[k - 9 + a % 2], q, other),
        };
        c.push(gate).unwrap();
    }
    c
}

fn arb_text_circuit() -> impl Strategy<Value = Circuit> {
    let single = prop_oneof![
        (0usize..11).prop_map(|k| [
            SingleGate::X,
            SingleGate::Xdg,
            SingleGate::Z,
            SingleGate::Zdg,
            SingleGate::S,
            SingleGate::Sdg,
            SingleGate::H,
            SingleGate::Hdg,
            SingleGate::T,
            SingleGate::Tdg,
            SingleGate::R,
        ][k]),
        (0usize..6).prop_map(|k| SingleGate::Tau(Permutation::ALL[k])),
        (-9i64..9, -9i64..9).prop_map(|(a, b)| SingleGate::ZPhase(Thirds(a), Thirds(b))),
        (-9i64..9, -9i64..9).prop_map(|(a, b)| SingleGate::XPhase(Thirds(a), Thirds(b))),
    ];
    let gate =
        (single, 0usize..3, 1usize..3, 0usize..4, 0i64..36).prop_map(|(g, q, d, kind, ph)| {
            let other = (q + d) % 3;
            match kind {
                0 => Gate::single(g, q),
                1 => Gate::cx(q, other),
                2 => Gate::Ctrl2 {
                    inner: g,
                    phase: RootOfUnity::new(ph),
                    control: q,
                    target: other,
                },
                _ => Gate::Lambda {
                    inner: g,
                    control: q,
                    target: other,
                },
            }
        });
    prop::collection::vec(gate, 0..12).prop_map(|gs| Circuit::from_gates(3, gs).unwrap())
}

fn arb_pattern() -> impl Strategy<Value = ResiduePattern> {
    prop::array::uniform4(prop::array::uniform4(0u8..3)).prop_map(ResiduePattern::from_values)
}

#[test]
fn permutations_form_s3() {
    let all = Permutation::ALL;
    for a in all {
        assert_eq!(a.compose(Permutation::IDENTITY), a);
        assert_eq!(Permutation::IDENTITY.compose(a), a);
        assert_eq!(a.compose(a.inverse()), Permutation::IDENTITY);
        for b in all {
            let ab = a.compose(b);
            assert!(all.contains(&ab));
            for k in 0..3 {
                assert_eq!(ab.apply(k), a.apply(b.apply(k)));
            }
            for c in all {
                assert_eq!(ab.compose(c), a.compose(b.compose(c)));
            }
        }
    }
}

#[test]
fn kickback_identity() {
    let minus_i = Matrix::identity(3).neg();
    assert_eq!(
        controlled_target(&minus_i, None),
        parse_target("R x I").unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(c in arb_text_circuit()) {
        let text = c.to_string();
        let back = parse_circuit(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn t_count_is_additive(a in codes(10), b in codes(10)) {
        let reg = Registry::builtin().unwrap();
        let (a, b) = (macro_word(&a), macro_word(&b));
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(t_count(&ab, &reg).unwrap(), t_count(&a, &reg).unwrap() + t_count(&b, &reg).unwrap());
        prop_assert_eq!(t_count(&a.adjoint(), &reg).unwrap(), t_count(&a, &reg).unwrap());
    }

    #[test]
    fn circuit_matrices_are_unitary(n in 1usize..4, c in codes(10)) {
        let c = common::word(n, common::CLIFFORD_T, &c);
        prop_assert!(matrix(&c).is_unitary());
    }

    #[test]
    fn simulation_is_a_homomorphism(n in 1usize..3, a in codes(8), b in codes(8)) {
        let (a, b) = (common::word(n, common::CLIFFORD_T, &a), common::word(n, common::CLIFFORD_R, &b));
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(matrix(&ab), matrix(&b).mul(&matrix(&a)).unwrap());
        prop_assert!(matrix(&a.compose(&a.adjoint()).unwrap()).is_identity());
    }

    #[test]
    fn entries_lie_in_the_expected_rings(n in 1usize..3, a in codes(10)) {
        let cl = common::word(n, common::CLIFFORD, &a);
        prop_assert!(circuit_ring_certificate(&cl, RingTag::Tomega).unwrap().holds);
        let ct = common::word(n, common::CLIFFORD_T, &a);
        prop_assert!(circuit_ring_certificate(&ct, RingTag::Tzeta).unwrap().holds);
        let cr = common::word(n, common::CLIFFORD_R, &a);
        prop_assert!(circuit_ring_certificate(&cr, RingTag::Tomega).unwrap().holds);
    }

    #[test]
    fn clifford_group_is_closed(n in 1usize..3, a in codes(8), b in codes(8)) {
        let (u, v) = (matrix(&common::word(n, common::CLIFFORD, &a)), matrix(&common::word(n, common::CLIFFORD, &b)));
        prop_assert!(is_clifford(&u).unwrap().clifford);
        prop_assert!(is_clifford(&u.mul(&v).unwrap()).unwrap().clifford);
    }

    #[test]
    fn hierarchy_level_is_least(a in codes(6)) {
        let u = matrix(&common::word(1, common::CLIFFORD_T, &a));
        let rep = hierarchy_level(&u, 3).unwrap();
        if let Some(k) = rep.level {
            prop_assert!(in_hierarchy_level(&u, k).unwrap());
            if k > 1 {
                prop_assert!(!in_hierarchy_level(&u, k - 1).unwrap());
            }
        }
    }

    #[test]
    fn refutation_is_sound(n in 1usize..3, a in codes(8), tag in 0usize..8) {
        let tag = RingTag::ALL[tag];
        let u = matrix(&common::word(n, common::CLIFFORD_T, &a));
        if refute_phase_membership(&u, tag).is_refuted() {
            prop_assert!(!matrix_ring_certificate(&u, tag).holds);
        }
    }

    #[test]
    fn adjoint_is_orthogonal_homomorphism(a in codes(8), b in codes(8)) {
        let u = matrix(&common::word(1, common::CLIFFORD_T, &a));
        let v = matrix(&common::word(1, common::CLIFFORD_T, &b));
        let (au, av) = (adjoint_of(&u).unwrap(), adjoint_of(&v).unwrap());
        prop_assert!(au.is_orthogonal());
        prop_assert_eq!(adjoint_of(&u.mul(&v).unwrap()).unwrap(), au.mul(&av));
    }

    #[test]
    fn clifford_t_words_are_never_obstructed(a in codes(14)) {
        let u = matrix(&common::word(1, common::CLIFFORD_T, &a));
        let rep = single_qutrit_ct_obstruction(&u).unwrap();
        prop_assert!(matches!(rep.verdict, Verdict::Consistent { .. }), "{}", rep.verdict);
    }

    #[test]
    fn clifford_words_have_lde_zero(a in codes(10)) {
        let u = matrix(&common::word(1, common::CLIFFORD, &a));
        prop_assert_eq!(adjoint_of(&u).unwrap().block_lde(Block::A), 0);
        let rep = single_qutrit_ct_obstruction(&u).unwrap();
        prop_assert_eq!(rep.verdict, Verdict::Consistent { k: 0, clifford: true });
    }

    #[test]
    fn pattern_equivalence_is_an_equivalence(p in arb_pattern(), perm in 0usize..24, s in 1u8..3, q in arb_pattern()) {
        prop_assert!(pattern_equiv(&p, &p));
        // a generalized permutation of p
        let rows = [[0usize, 1, 2, 3], [1, 0, 3, 2], [3, 2, 1, 0], [2, 3, 0, 1]][perm % 4];
        let mut m = [[Z3::ZERO; 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                m[r][c] = p.get(rows[r], (c + perm / 4) % 4) * Z3::new(s as i64);
            }
        }
        let moved = ResiduePattern(m);
        prop_assert!(pattern_equiv(&p, &moved));
        prop_assert!(pattern_equiv(&moved, &p));
        prop_assert_eq!(pattern_equiv(&p, &q), pattern_equiv(&q, &p));
        prop_assert_eq!(pattern_equiv(&moved, &q), pattern_equiv(&p, &q));
    }
}
