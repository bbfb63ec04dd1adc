use std::fmt;

use crate::circuit::Circuit;
use crate::rings::{in_ring, Cyclo36, RingTag, RootOfUnity};
use crate::sim::{circuit_matrix, Matrix, SimError};

/// Whether some root of unity `c` puts every entry of `c·M` in the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCertificate {
    pub tag: RingTag,
    pub holds: bool,
    pub witness: Option<RootOfUnity>,
}

impl fmt::Display for RingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            Some(w) => write!(f, "ring {}: yes, witness phase {w}", self.tag.name()),
            None => write!(f, "ring {}: no root-of-unity phase works", self.tag.name()),
        }
    }
}

fn member(x: &Cyclo36, tag: RingTag) -> bool {
    x.is_zero() || in_ring(x, tag).unwrap_or(false)
}

/// Searches all 36 roots of unity, `1` first.
pub fn matrix_ring_certificate(m: &Matrix, tag: RingTag) -> RingCertificate {
    let nonzero: Vec<&Cyclo36> = m.entries().iter().filter(|x| !x.is_zero()).collect();
    let witness = RootOfUnity::all().find(|w| {
        let c = w.to_cyclo();
        nonzero.iter().all(|x| member(&(&c * *x), tag))
    });
    RingCertificate {
        tag,
        holds: witness.is_some(),
        witness,
    }
}

pub fn circuit_ring_certificate(c: &Circuit, tag: RingTag) -> Result<RingCertificate, SimError> {
    Ok(matrix_ring_certificate(&circuit_matrix(c)?, tag))
}

/// Outcome of the pairwise closure test: if `c·mᵢ` and `c·mⱼ` were both in a
/// conjugation-closed ring, so would be `conj(mᵢ)·mⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    Refuted {
        first: (usize, usize),
        second: (usize, usize),
        values: (Cyclo36, Cyclo36),
        product: Cyclo36,
    },
    Inconclusive,
}

impl Refutation {
    pub fn is_refuted(&self) -> bool {
        matches!(self, Refutation::Refuted { .. })
    }
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::Refuted {
                first,
                second,
                values: (a, b),
                product,
            } => write!(
                f,
                "refuted: pair ({}, {}) at {:?}, {:?}; conj(first)*second = {} is outside the ring",
                named(a),
                named(b),
                first,
                second,
                named(product)
            ),
            Refutation::Inconclusive => {
                write!(f, "inconclusive: every pairwise product lies in the ring")
            }
        }
    }
}

fn named(x: &Cyclo36) -> String {
    match x.as_root() {
        Some(r) => r.to_string(),
        None => x.to_string(),
    }
}

/// Scans nonzero entry pairs `i < j` in row-major order.
pub fn refute_phase_membership(m: &Matrix, tag: RingTag) -> Refutation {
    let dim = m.dim();
    let nonzero: Vec<((usize, usize), Cyclo36)> = m
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| ((k / dim, k % dim), x.conj()))
        .collect();
    for (i, (pi, ci)) in nonzero.iter().enumerate() {
        for (pj, _) in &nonzero[i + 1..] {
            let mj = m.get(pj.0, pj.1);
            let product = ci * mj;
            if !member(&product, tag) {
                return Refutation::Refuted {
                    first: *pi,
                    second: *pj,
                    values: (m.get(pi.0, pi.1).clone(), mj.clone()),
                    product,
                };
            }
        }
    }
    Refutation::Inconclusive
}
