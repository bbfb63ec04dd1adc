use std::fmt;
use std::str::FromStr;

/// A permutation of the qutrit basis `{0, 1, 2}`, stored as its image table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([u8; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2]);
    pub const SWAP01: Permutation = Permutation([1, 0, 2]);
    pub const SWAP02: Permutation = Permutation([2, 1, 0]);
    pub const SWAP12: Permutation = Permutation([0, 2, 1]);
    /// `(012)`, the permutation of `X`.
    pub const CYCLE012: Permutation = Permutation([1, 2, 0]);
    /// `(021)`, the permutation of `X†`.
    pub const CYCLE021: Permutation = Permutation([2, 0, 1]);

    pub const ALL: [Permutation; 6] = [
        Self::IDENTITY,
        Self::SWAP01,
        Self::SWAP02,
        Self::SWAP12,
        Self::CYCLE012,
        Self::CYCLE021,
    ];

    /// Builds from an image table; `None` unless it is a bijection.
    pub fn from_images(images: [u8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Permutation(images))
    }

    pub fn apply(self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn images(self) -> [u8; 3] {
        self.0
    }

    /// `self ∘ other`: apply `other` first. Matches `τ_L·τ_M = τ_{L·M}`.
    pub fn compose(self, other: Permutation) -> Permutation {
        Permutation(other.0.map(|k| self.0[k as usize]))
    }

    pub fn inverse(self) -> Permutation {
        let mut inv = [0u8; 3];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        Permutation(inv)
    }

    /// Cycle notation without the identity's fixed points, e.g. `012` or `12`.
    pub fn cycle_label(self) -> &'static str {
        match self.0 {
            [0, 1, 2] => "",
            [1, 0, 2] => "01",
            [2, 1, 0] => "02",
            [0, 2, 1] => "12",
            [1, 2, 0] => "012",
            [2, 0, 1] => "021",
            _ => unreachable!("invalid permutation"),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cycle_label() {
            "" => write!(f, "()"),
            c => write!(f, "({c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown permutation `{0}`")]
pub struct PermutationParseError(pub String);

impl FromStr for Permutation {
    type Err = PermutationParseError;

    /// Accepts cycle notation with or without parentheses: `(01)`, `12`,
    /// `(012)`, `(0)(1)(2)`; cycles are read as rotations.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PermutationParseError(s.to_string());
        let mut images = [0u8, 1, 2];
        let t = s.trim();
        let cycles: Vec<&str> = if t.contains('(') {
            t.split(|c| c == '(' || c == ')')
                .filter(|p| !p.is_empty())
                .collect()
        } else {
            vec![t]
        };
        let mut used = [false; 3];
        for cyc in cycles {
            let digits: Vec<u8> = cyc
                .chars()
                .map(|c| c.to_digit(10).filter(|&d| d < 3).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(err)?;
            if digits.is_empty() {
                return Err(err());
            }
            for &d in &digits {
                if used[d as usize] {
                    return Err(err());
                }
                used[d as usize] = true;
            }
            for (i, &d) in digits.iter().enumerate() {
                images[d as usize] = digits[(i + 1) % digits.len()];
            }
        }
        Ok(Permutation(images))
    }
}
