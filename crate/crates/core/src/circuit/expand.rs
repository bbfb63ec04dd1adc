//! Rewriting circuits into plain Clifford+T gates.

use crate::rings::{Cyclo36, RootOfUnity};
use crate::sim::{single_gate_matrix, Matrix};

use super::gate::{Gate, SingleGate, Thirds};
use super::registry::{MacroBody, MacroMatch, Registry};
use super::{Circuit, CircuitError};

const MAX_DEPTH: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpandError {
    #[error("no registered expansion for `{0}`")]
    UnknownMacro(String),
    #[error("`{0}` has no Clifford+T expansion")]
    Unexpandable(String),
    #[error("`{gate}` only expands up to a controlled phase {phase}")]
    PhaseMismatch { gate: String, phase: RootOfUnity },
    #[error("macro expansion deeper than {MAX_DEPTH} levels at `{0}`")]
    TooDeep(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

struct Expander<'a> {
    reg: &'a Registry,
    exact: bool,
}

fn single(gate: SingleGate, target: usize) -> Gate {
    Gate::Single { gate, target }
}

impl Expander<'_> {
    fn zphase(
        &self,
        out: &mut Vec<Gate>,
        a: Thirds,
        b: Thirds,
        q: usize,
    ) -> Result<(), ExpandError> {
        let (a3, b3) = (a.numerator(), b.numerator());
        if (a3 + b3).rem_euclid(3) != 0 {
            return Err(ExpandError::Unexpandable(format!(
                "{} {q}",
                SingleGate::ZPhase(a, b)
            )));
        }
        // Tᵐ contributes (0, m, −m) in ninths of a turn
        let m = match a3.rem_euclid(3) {
            0 => 0,
            1 => 1,
            _ => -1,
        };
        match m {
            1 => out.push(single(SingleGate::T, q)),
            -1 => out.push(single(SingleGate::Tdg, q)),
            _ => {}
        }
        let ia = ((a3 - m) / 3).rem_euclid(3);
        let ib = ((b3 + m) / 3).rem_euclid(3);
        // Zᵃ·S^(b − 2a) = diag(1, ωᵃ, ωᵇ)
        for _ in 0..ia {
            out.push(single(SingleGate::Z, q));
        }
        for _ in 0..(ib - 2 * ia).rem_euclid(3) {
            out.push(single(SingleGate::S, q));
        }
        Ok(())
    }

    fn gate(&self, out: &mut Vec<Gate>, g: &Gate, depth: usize) -> Result<(), ExpandError> {
        if depth > MAX_DEPTH {
            return Err(ExpandError::TooDeep(g.to_string()));
        }
        match g {
            Gate::Single { gate, target } => match *gate {
                SingleGate::R => Err(ExpandError::Unexpandable(g.to_string())),
                SingleGate::ZPhase(a, b) => self.zphase(out, a, b, *target),
                SingleGate::XPhase(a, b) => {
                    out.push(single(SingleGate::Hdg, *target));
                    self.zphase(out, a, b, *target)?;
                    out.push(single(SingleGate::H, *target));
                    Ok(())
                }
                _ => {
                    out.push(g.clone());
                    Ok(())
                }
            },
            Gate::Cx { .. } => {
                out.push(g.clone());
                Ok(())
            }
            Gate::Ctrl2 {
                inner,
                phase,
                control,
                target,
            } => {
                let block = single_gate_matrix(*inner).scale(&phase.to_cyclo());
                self.controlled_block(out, &block, *control, *target, g, depth)
            }
            Gate::Lambda {
                inner,
                control,
                target,
            } => {
                let (c, t) = (*control, *target);
                match inner {
                    SingleGate::X => out.push(Gate::cx(c, t)),
                    SingleGate::Xdg => {
                        out.push(Gate::cx(c, t));
                        out.push(Gate::cx(c, t));
                    }
                    _ => {
                        let c2 = Gate::ctrl2(*inner, c, t);
                        // |1⟩-control, then |2⟩-control twice for inner²
                        out.push(single(SingleGate::X, c));
                        self.gate(out, &c2, depth + 1)?;
                        out.push(single(SingleGate::Xdg, c));
                        self.gate(out, &c2, depth + 1)?;
                        self.gate(out, &c2, depth + 1)?;
                    }
                }
                Ok(())
            }
        }
    }

    fn controlled_block(
        &self,
        out: &mut Vec<Gate>,
        block: &Matrix,
        control: usize,
        target: usize,
        g: &Gate,
        depth: usize,
    ) -> Result<(), ExpandError> {
        // ωᵏ·𝕀 kicks back to Sᵏ on the control
        if let Some(k) = scalar_root(block) {
            if k.exponent() % 12 == 0 {
                for _ in 0..k.exponent() / 12 {
                    out.push(single(SingleGate::S, control));
                }
                return Ok(());
            }
        }
        let (entry, how) = self
            .reg
            .lookup(block)
            .ok_or_else(|| ExpandError::UnknownMacro(g.to_string()))?;
        if let MacroMatch::UpToControlledPhase(phase) = how {
            if self.exact {
                return Err(ExpandError::PhaseMismatch {
                    gate: g.to_string(),
                    phase,
                });
            }
        }
        let body = self.body(&entry.name, depth)?;
        out.extend(body.gates().iter().map(|x| x.remap(&[control, target])));
        Ok(())
    }

    /// Fully expanded two-qutrit body of a macro.
    fn body(&self, name: &str, depth: usize) -> Result<Circuit, ExpandError> {
        let entry = self
            .reg
            .macro_named(name)
            .ok_or_else(|| ExpandError::UnknownMacro(name.to_string()))?;
        match &entry.body {
            MacroBody::Circuit(c) => self.circuit(c, depth + 1),
            MacroBody::AdjointOf(base) => Ok(self.body(base, depth + 1)?.adjoint()),
        }
    }

    fn circuit(&self, c: &Circuit, depth: usize) -> Result<Circuit, ExpandError> {
        let mut out = Vec::new();
        for g in c.gates() {
            self.gate(&mut out, g, depth)?;
        }
        Ok(Circuit::from_gates(c.n_qutrits(), out)?)
    }
}

fn scalar_root(m: &Matrix) -> Option<RootOfUnity> {
    let d = m.get(0, 0);
    let r = d.as_root()?;
    (*m == Matrix::identity(m.dim()).scale(&Cyclo36::from(r))).then_some(r)
}

/// Rewrites every macro into `{X, X†, Z, Z†, S, S†, H, H†, T, T†, τ, CX}`.
/// A controlled gate served by a macro that differs from it by a controlled
/// phase (as the registry declares) is accepted.
pub fn expand_macros(c: &Circuit, reg: &Registry) -> Result<Circuit, ExpandError> {
    Expander { reg, exact: false }.circuit(c, 0)
}

/// Like [`expand_macros`], but fails unless the expansion has exactly the
/// circuit's matrix.
pub fn expand_macros_exact(c: &Circuit, reg: &Registry) -> Result<Circuit, ExpandError> {
    Expander { reg, exact: true }.circuit(c, 0)
}

/// The fully expanded two-qutrit body of a registered macro.
pub fn expand_macro_body(name: &str, reg: &Registry) -> Result<Circuit, ExpandError> {
    Expander { reg, exact: true }.body(name, 0)
}

/// Number of `T` and `T†` gates after full expansion.
pub fn t_count(c: &Circuit, reg: &Registry) -> Result<usize, ExpandError> {
    Ok(expand_macros(c, reg)?.literal_t_count())
}
