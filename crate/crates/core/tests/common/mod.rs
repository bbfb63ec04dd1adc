#![allow(dead_code)]

use qutrit_core::circuit::{Circuit, Gate, SingleGate};
use qutrit_core::rings::DalphaElem;
use rand::rngs::StdRng;
use rand::Rng;

pub const CLIFFORD: &[SingleGate] = &[
    SingleGate::X,
    SingleGate::Z,
    SingleGate::S,
    SingleGate::Sdg,
    SingleGate::H,
    SingleGate::Hdg,
];

pub const CLIFFORD_T: &[SingleGate] = &[
    SingleGate::X,
    SingleGate::Z,
    SingleGate::S,
    SingleGate::Sdg,
    SingleGate::H,
    SingleGate::Hdg,
    SingleGate::T,
    SingleGate::Tdg,
];

pub const CLIFFORD_R: &[SingleGate] = &[
    SingleGate::X,
    SingleGate::Z,
    SingleGate::S,
    SingleGate::H,
    SingleGate::Hdg,
    SingleGate::R,
];

/// Builds a word from `(gate, wire, other)` codes; on two or more qutrits a
/// gate index one past the alphabet means `CX wire other`.
pub fn word(n: usize, alphabet: &[SingleGate], codes: &[(usize, usize, usize)]) -> Circuit {
    let mut c = Circuit::new(n).unwrap();
    for &(g, a, b) in codes {
        let q = a % n;
        let g = g % (alphabet.len() + usize::from(n > 1));
        if g == alphabet.len() {
            let t = (q + 1 + b % (n - 1)) % n;
            c.push(Gate::cx(q, t)).unwrap();
        } else {
            c.push(Gate::single(alphabet[g], q)).unwrap();
        }
    }
    c
}

pub fn random_word(rng: &mut StdRng, n: usize, alphabet: &[SingleGate], max_len: usize) -> Circuit {
    let len = rng.gen_range(0..=max_len);
    let codes: Vec<_> = (0..len)
        .map(|_| {
            (
                rng.gen_range(0..64),
                rng.gen_range(0..8),
                rng.gen_range(0..8),
            )
        })
        .collect();
    word(n, alphabet, &codes)
}

pub fn random_dalpha(rng: &mut StdRng) -> DalphaElem {
    let coeffs: Vec<i64> = (0..6).map(|_| rng.gen_range(-40..=40)).collect();
    DalphaElem::from_ints(&coeffs, rng.gen_range(0..5))
}
