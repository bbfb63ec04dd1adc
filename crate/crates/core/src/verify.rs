//! Comparing circuits with target matrices, before and after macro expansion.

use std::fmt;

use crate::circuit::{expand_macros_exact, Circuit, Comparison, ExpandError, Registry};
use crate::sim::{
    circuit_matrix, equal_up_to_controlled_phase, equal_up_to_phase, Matrix, SimError,
};

/// Whether `actual` matches `target` under the comparison mode.
pub fn compare(actual: &Matrix, target: &Matrix, cmp: Comparison) -> Result<bool, SimError> {
    if actual.dim() != target.dim() {
        return Err(SimError::DimMismatch {
            left: actual.dim(),
            right: target.dim(),
        });
    }
    Ok(match cmp {
        Comparison::Exact => actual == target,
        Comparison::UpToPhase => {
            equal_up_to_phase(actual, target)?.is_some_and(|c| c.as_root().is_some())
        }
        Comparison::ControlledPhase(p) => {
            equal_up_to_controlled_phase(actual, target, &p.to_cyclo())?
        }
    })
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub comparison: Comparison,
    /// The circuit's own matrix, with controlled gates taken at face value.
    pub raw: bool,
    /// The matrix of the plain Clifford+T expansion, when one exists.
    pub expanded: Option<bool>,
    pub t_count: Option<usize>,
    pub expand_error: Option<ExpandError>,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.raw && self.expanded != Some(false)
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode: {}", self.comparison)?;
        writeln!(f, "circuit: {}", if self.raw { "equal" } else { "differs" })?;
        match (self.expanded, &self.expand_error) {
            (Some(ok), _) => writeln!(f, "expanded: {}", if ok { "equal" } else { "differs" })?,
            (None, Some(e)) => writeln!(f, "expanded: unavailable ({e})")?,
            (None, None) => writeln!(f, "expanded: skipped")?,
        }
        if let Some(t) = self.t_count {
            writeln!(f, "tcount: {t}")?;
        }
        write!(
            f,
            "verdict: {}",
            if self.holds() { "verified" } else { "refuted" }
        )
    }
}

/// Checks the circuit, and when a registry is given also its exact
/// expansion into plain gates.
pub fn verify_circuit(
    c: &Circuit,
    target: &Matrix,
    cmp: Comparison,
    reg: Option<&Registry>,
) -> Result<Verification, SimError> {
    let raw = compare(&circuit_matrix(c)?, target, cmp)?;
    let mut v = Verification {
        comparison: cmp,
        raw,
        expanded: None,
        t_count: None,
        expand_error: None,
    };
    if let Some(reg) = reg {
        match expand_macros_exact(c, reg) {
            Ok(flat) => {
                v.t_count = Some(flat.literal_t_count());
                v.expanded = Some(compare(&circuit_matrix(&flat)?, target, cmp)?);
            }
            Err(e) => v.expand_error = Some(e),
        }
    }
    Ok(v)
}
