use std::fmt;

use crate::rings::RootOfUnity;

use super::perm::Permutation;

/// A rational number with denominator 1 or 3, stored as its numerator over 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Thirds(pub i64);

impl Thirds {
    pub fn integer(n: i64) -> Self {
        Thirds(3 * n)
    }

    pub fn numerator(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 3 == 0
    }

    pub fn neg(self) -> Self {
        Thirds(-self.0)
    }
}

impl fmt::Display for Thirds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 3)
        } else {
            write!(f, "{}/3", self.0)
        }
    }
}

/// Single-qutrit gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingleGate {
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
    Tau(Permutation),
    /// `diag(1, ωᵃ, ωᵇ)`.
    ZPhase(Thirds, Thirds),
    /// `H·Z(a,b)·H†`.
    XPhase(Thirds, Thirds),
}

impl SingleGate {
    pub fn adjoint(self) -> SingleGate {
        use SingleGate::*;
        match self {
            X => Xdg,
            Xdg => X,
            Z => Zdg,
            Zdg => Z,
            S => Sdg,
            Sdg => S,
            H => Hdg,
            Hdg => H,
            T => Tdg,
            Tdg => T,
            R => R,
            Tau(p) => Tau(p.inverse()),
            ZPhase(a, b) => ZPhase(a.neg(), b.neg()),
            XPhase(a, b) => XPhase(a.neg(), b.neg()),
        }
    }

    pub fn is_t(self) -> bool {
        matches!(self, SingleGate::T | SingleGate::Tdg)
    }

    /// Gates allowed in a fully expanded Clifford+T circuit.
    pub fn is_primitive(self) -> bool {
        !matches!(
            self,
            SingleGate::R | SingleGate::ZPhase(..) | SingleGate::XPhase(..)
        )
    }

    /// The DSL spelling, without the qutrit index.
    pub fn mnemonic(self) -> String {
        use SingleGate::*;
        match self {
            X => "X".into(),
            Xdg => "XDG".into(),
            Z => "Z".into(),
            Zdg => "ZDG".into(),
            S => "S".into(),
            Sdg => "SDG".into(),
            H => "H".into(),
            Hdg => "HDG".into(),
            T => "T".into(),
            Tdg => "TDG".into(),
            R => "R".into(),
            Tau(p) => format!("TAU({})", p.cycle_label()),
            ZPhase(a, b) => format!("ZPHASE {a} {b}"),
            XPhase(a, b) => format!("XPHASE {a} {b}"),
        }
    }
}

impl fmt::Display for SingleGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.mnemonic())
    }
}

/// One gate application inside a circuit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    Single {
        gate: SingleGate,
        target: usize,
    },
    /// `|c, t⟩ ↦ |c, t + c⟩`.
    Cx {
        control: usize,
        target: usize,
    },
    /// `phase·inner` on the target exactly when the control is `|2⟩`.
    Ctrl2 {
        inner: SingleGate,
        phase: RootOfUnity,
        control: usize,
        target: usize,
    },
    /// `|c⟩|t⟩ ↦ |c⟩ ⊗ innerᶜ|t⟩`.
    Lambda {
        inner: SingleGate,
        control: usize,
        target: usize,
    },
}

impl Gate {
    pub fn single(gate: SingleGate, target: usize) -> Gate {
        Gate::Single { gate, target }
    }

    pub fn cx(control: usize, target: usize) -> Gate {
        Gate::Cx { control, target }
    }

    pub fn ctrl2(inner: SingleGate, control: usize, target: usize) -> Gate {
        Gate::Ctrl2 {
            inner,
            phase: RootOfUnity::ONE,
            control,
            target,
        }
    }

    pub fn qutrits(&self) -> Vec<usize> {
        match *self {
            Gate::Single { target, .. } => vec![target],
            Gate::Cx { control, target }
            | Gate::Ctrl2 {
                control, target, ..
            }
            | Gate::Lambda {
                control, target, ..
            } => vec![control, target],
        }
    }

    /// Relabels wires through `map[old] = new`.
    pub fn remap(&self, map: &[usize]) -> Gate {
        match self.clone() {
            Gate::Single { gate, target } => Gate::Single {
                gate,
                target: map[target],
            },
            Gate::Cx { control, target } => Gate::Cx {
                control: map[control],
                target: map[target],
            },
            Gate::Ctrl2 {
                inner,
                phase,
                control,
                target,
            } => Gate::Ctrl2 {
                inner,
                phase,
                control: map[control],
                target: map[target],
            },
            Gate::Lambda {
                inner,
                control,
                target,
            } => Gate::Lambda {
                inner,
                control: map[control],
                target: map[target],
            },
        }
    }

    /// The inverse as a gate sequence in application order. `CX` has order
    /// three, so its inverse is two copies of itself.
    pub fn adjoint(&self) -> Vec<Gate> {
        match self.clone() {
            Gate::Single { gate, target } => vec![Gate::Single {
                gate: gate.adjoint(),
                target,
            }],
            g @ Gate::Cx { .. } => vec![g.clone(), g],
            Gate::Ctrl2 {
                inner,
                phase,
                control,
                target,
            } => vec![Gate::Ctrl2 {
                inner: inner.adjoint(),
                phase: phase.inv(),
                control,
                target,
            }],
            Gate::Lambda {
                inner,
                control,
                target,
            } => vec![Gate::Lambda {
                inner: inner.adjoint(),
                control,
                target,
            }],
        }
    }

    /// T-gates visible without macro expansion.
    pub fn is_t(&self) -> bool {
        matches!(self, Gate::Single { gate, .. } if gate.is_t())
    }
}

/// Canonical DSL line.
impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Single { gate, target } => write!(f, "{gate} {target}"),
            Gate::Cx { control, target } => write!(f, "CX {control} {target}"),
            Gate::Ctrl2 {
                inner,
                phase,
                control,
                target,
            } => {
                if *phase == RootOfUnity::ONE {
                    write!(f, "C2[{inner} {target}] {control}")
                } else if *phase == RootOfUnity::MINUS_ONE {
                    write!(f, "C2[-{inner} {target}] {control}")
                } else {
                    write!(f, "C2[{inner} {target} phase={phase}] {control}")
                }
            }
            Gate::Lambda {
                inner,
                control,
                target,
            } => write!(f, "LAMBDA[{inner} {target}] {control}"),
        }
    }
}
