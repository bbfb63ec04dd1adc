use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::circuit::{Circuit, Gate, SingleGate};
use crate::rings::{Cyclo36, RootOfUnity};

use super::matrix::Matrix;
use super::{SimError, MAX_QUTRITS};

/// A single-qutrit operator in the form best suited to row updates.
#[derive(Clone, Debug)]
pub(crate) enum LocalOp {
    /// `|k⟩ ↦ phases[k]·|images[k]⟩`.
    Monomial {
        images: [usize; 3],
        phases: [RootOfUnity; 3],
    },
    Dense(Matrix),
}

impl LocalOp {
    fn diag(phases: [i64; 3]) -> LocalOp {
        LocalOp::Monomial {
            images: [0, 1, 2],
            phases: phases.map(RootOfUnity::new),
        }
    }

    fn perm(images: [usize; 3]) -> LocalOp {
        LocalOp::Monomial {
            images,
            phases: [RootOfUnity::ONE; 3],
        }
    }

    pub(crate) fn to_matrix(&self) -> Matrix {
        match self {
            LocalOp::Monomial { images, phases } => Matrix::monomial(images, phases),
            LocalOp::Dense(m) => m.clone(),
        }
    }

    fn with_phase(self, phase: RootOfUnity) -> LocalOp {
        if phase.is_one() {
            return self;
        }
        match self {
            LocalOp::Monomial { images, phases } => LocalOp::Monomial {
                images,
                phases: phases.map(|p| p * phase),
            },
            LocalOp::Dense(m) => LocalOp::Dense(m.scale(&phase.to_cyclo())),
        }
    }

    /// `other` after `self`.
    fn then(&self, other: &LocalOp) -> LocalOp {
        match (self, other) {
            (
                LocalOp::Monomial {
                    images: i1,
                    phases: p1,
                },
                LocalOp::Monomial {
                    images: i2,
                    phases: p2,
                },
            ) => LocalOp::Monomial {
                images: [0, 1, 2].map(|k| i2[i1[k]]),
                phases: [0, 1, 2].map(|k| p1[k] * p2[i1[k]]),
            },
            _ => LocalOp::Dense(
                other
                    .to_matrix()
                    .mul(&self.to_matrix())
                    .expect("3x3 operands"),
            ),
        }
    }

    fn pow(&self, k: usize) -> Option<LocalOp> {
        if k == 0 {
            return None;
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.then(self);
        }
        Some(acc)
    }
}

fn hadamard() -> &'static Matrix {
    static H: OnceLock<Matrix> = OnceLock::new();
    H.get_or_init(|| {
        // 1/(ω² − ω) = (ω − ω²)/3
        let pre =
            Cyclo36::sqrt3_times_i().scale(&BigRational::new(BigInt::from(1), BigInt::from(3)));
        let rows = (0..3)
            .map(|r| (0..3).map(|c| pre.mul_root(12 * (r * c) as i64)).collect())
            .collect();
        Matrix::from_rows(rows)
    })
}

fn hadamard_dg() -> &'static Matrix {
    static H: OnceLock<Matrix> = OnceLock::new();
    H.get_or_init(|| hadamard().adjoint())
}

pub(crate) fn local_op(g: SingleGate) -> LocalOp {
    use SingleGate::*;
    match g {
        X => LocalOp::perm([1, 2, 0]),
        Xdg => LocalOp::perm([2, 0, 1]),
        Z => LocalOp::diag([0, 12, 24]),
        Zdg => LocalOp::diag([0, 24, 12]),
        S => LocalOp::diag([0, 0, 12]),
        Sdg => LocalOp::diag([0, 0, 24]),
        // diag(1, ζ, ζ⁸)
        T => LocalOp::diag([0, 4, 32]),
        Tdg => LocalOp::diag([0, 32, 4]),
        R => LocalOp::diag([0, 0, 18]),
        Tau(p) => LocalOp::perm([0, 1, 2].map(|k| p.apply(k))),
        // ω^(n/3) = ζⁿ = z^(4n)
        ZPhase(a, b) => LocalOp::diag([0, 4 * a.numerator(), 4 * b.numerator()]),
        H => LocalOp::Dense(hadamard().clone()),
        Hdg => LocalOp::Dense(hadamard_dg().clone()),
        XPhase(a, b) => {
            let z = local_op(ZPhase(a, b)).to_matrix();
            let m = hadamard()
                .mul(&z)
                .and_then(|m| m.mul(hadamard_dg()))
                .expect("3x3 operands");
            LocalOp::Dense(m)
        }
    }
}

/// The `3×3` matrix of a single-qutrit gate.
pub fn single_gate_matrix(g: SingleGate) -> Matrix {
    local_op(g).to_matrix()
}

fn digit(index: usize, q: usize, n: usize) -> usize {
    (index / 3usize.pow((n - 1 - q) as u32)) % 3
}

/// Left-multiplies `m` by `op` acting on qutrit `q`, restricted to rows
/// whose control digit (if any) equals `when`.
fn apply_local(m: &mut Matrix, n: usize, q: usize, op: &LocalOp, control: Option<(usize, usize)>) {
    let dim = m.dim();
    let stride = 3usize.pow((n - 1 - q) as u32);
    let data = m.entries_mut();
    for base in 0..dim {
        if digit(base, q, n) != 0 {
            continue;
        }
        if let Some((c, v)) = control {
            if digit(base, c, n) != v {
                continue;
            }
        }
        let rows = [base, base + stride, base + 2 * stride];
        for col in 0..dim {
            let old: [Cyclo36; 3] = rows.map(|r| std::mem::take(&mut data[r * dim + col]));
            match op {
                LocalOp::Monomial { images, phases } => {
                    for k in 0..3 {
                        data[rows[images[k]] * dim + col] =
                            old[k].mul_root(phases[k].exponent() as i64);
                    }
                }
                LocalOp::Dense(u) => {
                    for r in 0..3 {
                        let mut acc = Cyclo36::zero();
                        for k in 0..3 {
                            let a = u.get(r, k);
                            if !a.is_zero() && !old[k].is_zero() {
                                acc += a * &old[k];
                            }
                        }
                        data[rows[r] * dim + col] = acc;
                    }
                }
            }
        }
    }
}

/// Left-multiplies `m` (a `3ⁿ×3ⁿ` matrix) by the gate.
pub(crate) fn apply_gate(m: &mut Matrix, n: usize, g: &Gate) {
    let controlled = |m: &mut Matrix, control: usize, target: usize, ops: [Option<LocalOp>; 3]| {
        for (v, op) in ops.iter().enumerate() {
            if let Some(op) = op {
                apply_local(m, n, target, op, Some((control, v)));
            }
        }
    };
    match g {
        Gate::Single { gate, target } => apply_local(m, n, *target, &local_op(*gate), None),
        Gate::Cx { control, target } => {
            let x = local_op(SingleGate::X);
            controlled(m, *control, *target, [None, x.pow(1), x.pow(2)]);
        }
        Gate::Ctrl2 {
            inner,
            phase,
            control,
            target,
        } => {
            let op = local_op(*inner).with_phase(*phase);
            controlled(m, *control, *target, [None, None, Some(op)]);
        }
        Gate::Lambda {
            inner,
            control,
            target,
        } => {
            let op = local_op(*inner);
            controlled(m, *control, *target, [None, op.pow(1), op.pow(2)]);
        }
    }
}

fn check_size(n: usize) -> Result<(), SimError> {
    if n > MAX_QUTRITS {
        return Err(SimError::TooManyQutrits(n));
    }
    Ok(())
}

/// The gate embedded into `n` qutrits (qutrit 0 most significant).
pub fn gate_matrix(g: &Gate, n: usize) -> Result<Matrix, SimError> {
    check_size(n)?;
    if let Some(&q) = g.qutrits().iter().find(|&&q| q >= n) {
        return Err(SimError::IndexOutOfRange { index: q, n });
    }
    let mut m = Matrix::identity(3usize.pow(n as u32));
    apply_gate(&mut m, n, g);
    Ok(m)
}

/// Exact product of the gate matrices, last gate leftmost. Controlled gates
/// use their defining semantics; no macro expansion happens here.
pub fn circuit_matrix(c: &Circuit) -> Result<Matrix, SimError> {
    let n = c.n_qutrits();
    check_size(n)?;
    let mut m = Matrix::identity(3usize.pow(n as u32));
    for g in c.gates() {
        apply_gate(&mut m, n, g);
    }
    Ok(m)
}
