//! Qutrit gates, circuits, the text format, and macro expansion.

mod expand;
mod gate;
mod parse;
mod perm;
mod registry;

pub use expand::{expand_macro_body, expand_macros, expand_macros_exact, t_count, ExpandError};
pub use gate::{Gate, SingleGate, Thirds};
pub use parse::{parse_circuit, parse_single_gate, ParseError};
pub use perm::{Permutation, PermutationParseError};
pub use registry::{
    CircuitEntry, Comparison, MacroBody, MacroEntry, MacroMatch, Registry, RegistryError,
};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CircuitError {
    #[error("circuit needs at least one qutrit")]
    Empty,
    #[error("qutrit index {index} out of range for a {n}-qutrit circuit")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("control and target are both qutrit {0}")]
    SameWire(usize),
    #[error("arity mismatch: {left} vs {right} qutrits")]
    ArityMismatch { left: usize, right: usize },
}

/// An ordered list of gate applications on `n` qutrits, first gate first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    n: usize,
    ops: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Result<Self, CircuitError> {
        if n == 0 {
            return Err(CircuitError::Empty);
        }
        Ok(Circuit { n, ops: Vec::new() })
    }

    pub fn from_gates(
        n: usize,
        gates: impl IntoIterator<Item = Gate>,
    ) -> Result<Self, CircuitError> {
        let mut c = Circuit::new(n)?;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn n_qutrits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn push(&mut self, g: Gate) -> Result<(), CircuitError> {
        let qs = g.qutrits();
        for &q in &qs {
            if q >= self.n {
                return Err(CircuitError::IndexOutOfRange {
                    index: q,
                    n: self.n,
                });
            }
        }
        if qs.len() == 2 && qs[0] == qs[1] {
            return Err(CircuitError::SameWire(qs[0]));
        }
        self.ops.push(g);
        Ok(())
    }

    /// `self` then `other`; the matrix is `M(other)·M(self)`.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit, CircuitError> {
        if self.n != other.n {
            return Err(CircuitError::ArityMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut ops = self.ops.clone();
        ops.extend(other.ops.iter().cloned());
        Ok(Circuit { n: self.n, ops })
    }

    pub fn adjoint(&self) -> Circuit {
        let ops = self.ops.iter().rev().flat_map(Gate::adjoint).collect();
        Circuit { n: self.n, ops }
    }

    /// `self ⊗ other`, with `other` on the higher-numbered wires.
    pub fn tensor(&self, other: &Circuit) -> Circuit {
        let shift: Vec<usize> = (self.n..self.n + other.n).collect();
        let mut ops = self.ops.clone();
        ops.extend(other.ops.iter().map(|g| g.remap(&shift)));
        Circuit {
            n: self.n + other.n,
            ops,
        }
    }

    /// Embeds onto wires `map[i]` of a wider circuit.
    pub fn remap(&self, n: usize, map: &[usize]) -> Result<Circuit, CircuitError> {
        Circuit::from_gates(n, self.ops.iter().map(|g| g.remap(map)))
    }

    /// Number of literal `T`/`T†` gates, ignoring macros.
    pub fn literal_t_count(&self) -> usize {
        self.ops.iter().filter(|g| g.is_t()).count()
    }
}

/// Canonical text: `qutrits N` followed by one gate per line.
impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qutrits {}", self.n)?;
        for g in &self.ops {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
