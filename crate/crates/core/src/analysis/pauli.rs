use std::fmt;

use crate::rings::RootOfUnity;
use crate::sim::Matrix;

use super::{qutrit_count, AnalysisError};

/// `X^{x₀}Z^{z₀} ⊗ X^{x₁}Z^{z₁} ⊗ …`, qutrit 0 first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliElement {
    pub x: Vec<u8>,
    pub z: Vec<u8>,
}

impl PauliElement {
    pub fn identity(n: usize) -> Self {
        PauliElement {
            x: vec![0; n],
            z: vec![0; n],
        }
    }

    /// All `9ⁿ` elements, identity first.
    pub fn all(n: usize) -> Vec<PauliElement> {
        let count = 9usize.pow(n as u32);
        (0..count)
            .map(|mut code| {
                let mut p = PauliElement::identity(n);
                for q in (0..n).rev() {
                    p.z[q] = (code % 3) as u8;
                    code /= 3;
                    p.x[q] = (code % 3) as u8;
                    code /= 3;
                }
                p
            })
            .collect()
    }

    pub fn nontrivial(n: usize) -> Vec<PauliElement> {
        Self::all(n).into_iter().skip(1).collect()
    }

    /// `X` (if `z` is false) or `Z` on qutrit `q` of `n`.
    pub fn generator(n: usize, q: usize, z: bool) -> Self {
        let mut p = Self::identity(n);
        if z {
            p.z[q] = 1;
        } else {
            p.x[q] = 1;
        }
        p
    }

    pub fn n_qutrits(&self) -> usize {
        self.x.len()
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(self.z.iter()).all(|&v| v == 0)
    }

    /// `XᵃZᵇ|k⟩ = ω^{bk}|k + a⟩` on each qutrit.
    pub fn matrix(&self) -> Matrix {
        let n = self.n_qutrits();
        let dim = 3usize.pow(n as u32);
        let mut images = vec![0; dim];
        let mut phases = vec![RootOfUnity::ONE; dim];
        for k in 0..dim {
            let mut rest = k;
            let mut image = 0;
            let mut scale = 1;
            let mut ph = 0i64;
            for q in (0..n).rev() {
                let d = rest % 3;
                rest /= 3;
                image += ((d + self.x[q] as usize) % 3) * scale;
                ph += (self.z[q] as usize * d) as i64;
                scale *= 3;
            }
            images[k] = image;
            phases[k] = RootOfUnity::omega(ph);
        }
        Matrix::monomial(&images, &phases)
    }
}

impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .x
            .iter()
            .zip(self.z.iter())
            .map(|(&a, &b)| {
                let mut s = String::new();
                match a {
                    0 => {}
                    1 => s.push('X'),
                    _ => s.push_str("X^2"),
                }
                match b {
                    0 => {}
                    1 => s.push('Z'),
                    _ => s.push_str("Z^2"),
                }
                if s.is_empty() {
                    s.push('I');
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" x "))
    }
}

/// `U = phase·P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliWitness {
    pub pauli: PauliElement,
    pub phase: RootOfUnity,
}

impl fmt::Display for PauliWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase.is_one() {
            write!(f, "{}", self.pauli)
        } else {
            write!(f, "{} * {}", self.phase, self.pauli)
        }
    }
}

/// Decides membership in the Pauli group up to a root-of-unity phase.
/// `X`-exponents come from the single nonzero entry of column 0.
pub fn is_pauli(u: &Matrix) -> Result<Option<PauliWitness>, AnalysisError> {
    let n = qutrit_count(u)?;
    let dim = u.dim();
    let nonzero: Vec<usize> = (0..dim).filter(|&r| !u.get(r, 0).is_zero()).collect();
    let [r] = nonzero.as_slice() else {
        return Ok(None);
    };
    let Some(phase) = u.get(*r, 0).as_root() else {
        return Ok(None);
    };
    let mut x = vec![0u8; n];
    let mut rest = *r;
    for q in (0..n).rev() {
        x[q] = (rest % 3) as u8;
        rest /= 3;
    }
    let scaled_phase = phase.to_cyclo();
    for code in 0..3usize.pow(n as u32) {
        let mut z = vec![0u8; n];
        let mut c = code;
        for zq in z.iter_mut().rev() {
            *zq = (c % 3) as u8;
            c /= 3;
        }
        let p = PauliElement { x: x.clone(), z };
        if p.matrix().scale(&scaled_phase) == *u {
            return Ok(Some(PauliWitness { pauli: p, phase }));
        }
    }
    Ok(None)
}
