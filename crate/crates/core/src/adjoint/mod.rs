//! The adjoint representation `U ↦ Ū ∈ SO(8)` of single-qutrit unitaries,
//! its block structure over `𝔸`, and the residue obstruction for
//! ancilla-free single-qutrit Clifford+T circuits.
//!
//! The basis is `{Z₊, X₊, (XZ)₊, (XZ²)₊, Z₋, X₋, (XZ)₋, (XZ²)₋}` with
//! `P₊ = P + P†` and `P₋ = i(P − P†)`, left unnormalised: every element has
//! `Tr(B²) = 6`, so `Ū_ij = Tr(B_i U B_j U†)/6`.

mod pattern;

use std::fmt;

pub use pattern::{pattern_equiv, ResiduePattern};

use num_rational::BigRational;

use crate::analysis::is_clifford;
use crate::circuit::SingleGate;
use crate::rings::{to_alpha, AlphaElem, Cyclo36, RingError, Z3};
use crate::sim::{single_gate_matrix, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdjointError {
    #[error("adjoint representation needs a 3x3 matrix, got {0}x{0}")]
    NotSingleQutrit(usize),
    #[error("adjoint entry ({row}, {col}) = {value} is not in A")]
    NotInA {
        row: usize,
        col: usize,
        value: Cyclo36,
        /// The full representation over the field, for inspection.
        exact: Vec<Cyclo36>,
    },
}

/// The eight unnormalised basis matrices, in order.
pub fn basis() -> Vec<Matrix> {
    let x = single_gate_matrix(SingleGate::X);
    let z = single_gate_matrix(SingleGate::Z);
    let xz = x.mul(&z).expect("3x3");
    let xz2 = xz.mul(&z).expect("3x3");
    let paulis = [z, x, xz, xz2];
    let i = Cyclo36::i();
    let plus = paulis.iter().map(|p| add(p, &p.adjoint()));
    let minus = paulis.iter().map(|p| sub(p, &p.adjoint()).scale(&i));
    plus.chain(minus).collect()
}

fn add(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = (0..a.dim())
        .map(|r| (0..a.dim()).map(|c| a.get(r, c) + b.get(r, c)).collect())
        .collect();
    Matrix::from_rows(rows)
}

fn sub(a: &Matrix, b: &Matrix) -> Matrix {
    add(a, &b.neg())
}

/// `Tr(A·B)` without forming the product.
fn trace_product(a: &Matrix, b: &Matrix) -> Cyclo36 {
    let n = a.dim();
    let mut acc = Cyclo36::zero();
    for r in 0..n {
        for k in 0..n {
            let x = a.get(r, k);
            if !x.is_zero() {
                acc += &(x * b.get(k, r));
            }
        }
    }
    acc
}

/// `Ū` over the field, row-major `8×8`.
pub fn adjoint_exact(u: &Matrix) -> Result<Vec<Cyclo36>, AdjointError> {
    if u.dim() != 3 {
        return Err(AdjointError::NotSingleQutrit(u.dim()));
    }
    let basis = basis();
    let udg = u.adjoint();
    let sixth = BigRational::new(1.into(), 6.into());
    let images: Vec<Matrix> = basis
        .iter()
        .map(|b| u.mul(b).and_then(|m| m.mul(&udg)).expect("3x3"))
        .collect();
    let mut out = Vec::with_capacity(64);
    for bi in &basis {
        for img in &images {
            out.push(trace_product(bi, img).scale(&sixth));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    B,
    C,
    D,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::A, Block::B, Block::C, Block::D];

    fn offsets(self) -> (usize, usize) {
        match self {
            Block::A => (0, 0),
            Block::B => (0, 4),
            Block::C => (4, 0),
            Block::D => (4, 4),
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Block::A => "A",
            Block::B => "B",
            Block::C => "C",
            Block::D => "D",
        };
        f.write_str(s)
    }
}

/// `Ū` with entries in `𝔸`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointMatrix {
    entries: Vec<AlphaElem>,
}

impl AdjointMatrix {
    pub fn identity() -> Self {
        let entries = (0..64)
            .map(|k| {
                if k % 9 == 0 {
                    AlphaElem::one()
                } else {
                    AlphaElem::zero()
                }
            })
            .collect();
        AdjointMatrix { entries }
    }

    pub fn get(&self, r: usize, c: usize) -> &AlphaElem {
        &self.entries[r * 8 + c]
    }

    pub fn block(&self, b: Block) -> [[AlphaElem; 4]; 4] {
        let (r0, c0) = b.offsets();
        std::array::from_fn(|r| std::array::from_fn(|c| self.get(r0 + r, c0 + c).clone()))
    }

    /// Largest `lde` over the block; `0` for a zero block.
    pub fn block_lde(&self, b: Block) -> u32 {
        let (r0, c0) = b.offsets();
        (0..16)
            .map(|k| self.get(r0 + k / 4, c0 + k % 4).lde())
            .max()
            .unwrap_or(0)
    }

    /// `ρₖ` of every entry of the block.
    pub fn residues(&self, b: Block, k: u32) -> Result<ResiduePattern, RingError> {
        let (r0, c0) = b.offsets();
        let mut m = [[Z3::ZERO; 4]; 4];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = self.get(r0 + r, c0 + c).k_residue(k)?;
            }
        }
        Ok(ResiduePattern(m))
    }

    pub fn mul(&self, other: &AdjointMatrix) -> AdjointMatrix {
        let mut entries = Vec::with_capacity(64);
        for r in 0..8 {
            for c in 0..8 {
                let mut acc = AlphaElem::zero();
                for k in 0..8 {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc.reduced());
            }
        }
        AdjointMatrix { entries }
    }

    pub fn transpose(&self) -> AdjointMatrix {
        let entries = (0..64).map(|k| self.get(k % 8, k / 8).clone()).collect();
        AdjointMatrix { entries }
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self) == AdjointMatrix::identity()
    }

    pub fn to_cyclo(&self) -> Vec<Cyclo36> {
        self.entries.iter().map(AlphaElem::to_cyclo).collect()
    }
}

impl fmt::Display for AdjointMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..8 {
            let cells: Vec<String> = (0..8)
                .map(|c| self.get(r, c).reduced().to_string())
                .collect();
            writeln!(f, "{}", cells.join("  "))?;
        }
        Ok(())
    }
}

/// `Ū` with entries converted into `𝔸`.
pub fn adjoint_of(u: &Matrix) -> Result<AdjointMatrix, AdjointError> {
    let exact = adjoint_exact(u)?;
    let mut entries = Vec::with_capacity(64);
    for (k, x) in exact.iter().enumerate() {
        match to_alpha(x) {
            Ok(a) => entries.push(a.reduced()),
            Err(_) => {
                return Err(AdjointError::NotInA {
                    row: k / 8,
                    col: k % 8,
                    value: x.clone(),
                    exact,
                })
            }
        }
    }
    Ok(AdjointMatrix { entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionReason {
    OddLde(u32),
    /// `lde(A) = 0` but `U` is not Clifford.
    NotClifford,
    /// `ρ_{2k}(A)` is not equivalent to the bordered pattern of 2s.
    APattern(u32),
    /// `ρ_{2k+1}(C)` is not equivalent to the bordered pattern of 1s.
    CPattern(u32),
    /// `lde(C)` exceeds `2k + 1`, so `ρ_{2k+1}(C)` is undefined.
    CLde {
        k: u32,
        lde: u32,
    },
}

impl fmt::Display for ObstructionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionReason::OddLde(l) => write!(f, "odd LDE {l} of A"),
            ObstructionReason::NotClifford => write!(f, "LDE 0 of A but not Clifford"),
            ObstructionReason::APattern(j) => write!(f, "rho{j}(A) pattern"),
            ObstructionReason::CPattern(j) => write!(f, "rho{j}(C) pattern"),
            ObstructionReason::CLde { k, lde } => {
                write!(f, "LDE {lde} of C exceeds {}", 2 * k + 1)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The necessary conditions for T-count `k` hold. Not a proof of
    /// membership.
    Consistent {
        k: u32,
        clifford: bool,
    },
    Obstructed(ObstructionReason),
    NotInA,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Consistent { k: 0, .. } => write!(f, "consistent: k = 0 (Clifford)"),
            Verdict::Consistent { k, .. } => write!(f, "consistent: k = {k}"),
            Verdict::Obstructed(r) => write!(f, "obstructed: {r}"),
            Verdict::NotInA => write!(f, "obstructed: adjoint entries outside A"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub adjoint: Option<AdjointMatrix>,
    pub block_ldes: [u32; 4],
    pub residue_a: Option<ResiduePattern>,
    pub residue_c: Option<ResiduePattern>,
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(adj) = &self.adjoint {
            writeln!(f, "adjoint:")?;
            write!(f, "{adj}")?;
            let ldes: Vec<String> = Block::ALL
                .iter()
                .zip(self.block_ldes.iter())
                .map(|(b, l)| format!("{b}={l}"))
                .collect();
            writeln!(f, "block LDE: {}", ldes.join(" "))?;
        }
        if let Some(p) = &self.residue_a {
            writeln!(f, "residues of A:\n{p}")?;
        }
        if let Some(p) = &self.residue_c {
            writeln!(f, "residues of C:\n{p}")?;
        }
        write!(f, "{}", self.verdict)
    }
}

/// Checks the necessary conditions on `Ū` for an ancilla-free
/// single-qutrit Clifford+T circuit with T-count `k = lde(A)/2`.
pub fn single_qutrit_ct_obstruction(u: &Matrix) -> Result<ObstructionReport, AdjointError> {
    let adj = match adjoint_of(u) {
        Ok(a) => a,
        Err(AdjointError::NotInA { .. }) => {
            return Ok(ObstructionReport {
                verdict: Verdict::NotInA,
                adjoint: None,
                block_ldes: [0; 4],
                residue_a: None,
                residue_c: None,
            })
        }
        Err(e) => return Err(e),
    };
    let block_ldes = Block::ALL.map(|b| adj.block_lde(b));
    let mut report = ObstructionReport {
        verdict: Verdict::NotInA,
        adjoint: None,
        block_ldes,
        residue_a: None,
        residue_c: None,
    };
    let lde_a = block_ldes[0];
    report.verdict = if lde_a % 2 == 1 {
        Verdict::Obstructed(ObstructionReason::OddLde(lde_a))
    } else if lde_a == 0 {
        let clifford = is_clifford(u).map(|r| r.clifford).unwrap_or(false);
        if clifford {
            Verdict::Consistent { k: 0, clifford }
        } else {
            Verdict::Obstructed(ObstructionReason::NotClifford)
        }
    } else {
        let k = lde_a / 2;
        let ra = adj.residues(Block::A, 2 * k).expect("2k is the LDE of A");
        report.residue_a = Some(ra);
        if !pattern_equiv(&ra, &ResiduePattern::bordered(Z3::TWO)) {
            Verdict::Obstructed(ObstructionReason::APattern(2 * k))
        } else {
            match adj.residues(Block::C, 2 * k + 1) {
                Err(_) => Verdict::Obstructed(ObstructionReason::CLde {
                    k,
                    lde: block_ldes[2],
                }),
                Ok(rc) => {
                    report.residue_c = Some(rc);
                    if pattern_equiv(&rc, &ResiduePattern::bordered(Z3::ONE)) {
                        Verdict::Consistent { k, clifford: false }
                    } else {
                        Verdict::Obstructed(ObstructionReason::CPattern(2 * k + 1))
                    }
                }
            }
        }
    };
    report.adjoint = Some(adj);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Permutation;

    fn g(s: SingleGate) -> Matrix {
        single_gate_matrix(s)
    }

    fn thirds(rows: [[i64; 4]; 4]) -> [[AlphaElem; 4]; 4] {
        let third = |v: i64| Cyclo36::from_rational(&BigRational::new(v.into(), 3.into()));
        rows.map(|r| r.map(|v| to_alpha(&third(v)).unwrap()))
    }

    #[test]
    fn basis_is_orthogonal_hermitian() {
        let b = basis();
        for (i, bi) in b.iter().enumerate() {
            assert_eq!(&bi.adjoint(), bi);
            assert!(bi.trace().is_zero());
            for (j, bj) in b.iter().enumerate() {
                let ip = trace_product(bi, bj);
                assert_eq!(ip, Cyclo36::from_int(if i == j { 6 } else { 0 }), "{i} {j}");
            }
        }
    }

    #[test]
    fn adjoint_of_r() {
        let adj = adjoint_of(&g(SingleGate::R)).unwrap();
        let expected = thirds([[3, 0, 0, 0], [0, -1, 2, 2], [0, 2, -1, 2], [0, 2, 2, -1]]);
        assert_eq!(adj.block(Block::A), expected);
        assert_eq!(adj.block(Block::D), expected);
        assert_eq!(adj.block_lde(Block::A), 6);
        assert_eq!(adj.block_lde(Block::B), 0);
        assert_eq!(adj.block_lde(Block::C), 0);
        assert!(adj.block(Block::C).iter().flatten().all(AlphaElem::is_zero));
        let ra = adj.residues(Block::A, 6).unwrap();
        assert!(pattern_equiv(&ra, &ResiduePattern::bordered(Z3::TWO)));
        let rep = single_qutrit_ct_obstruction(&g(SingleGate::R)).unwrap();
        assert_eq!(
            rep.verdict,
            Verdict::Obstructed(ObstructionReason::CPattern(7))
        );
        assert_eq!(rep.verdict.to_string(), "obstructed: rho7(C) pattern");
    }

    #[test]
    fn trivial_adjoints() {
        assert_eq!(
            adjoint_of(&Matrix::identity(3)).unwrap(),
            AdjointMatrix::identity()
        );
        let w = Matrix::identity(3).scale(&Cyclo36::omega());
        assert_eq!(adjoint_of(&w).unwrap(), AdjointMatrix::identity());
        assert!(adjoint_of(&Matrix::identity(9)).is_err());
    }

    #[test]
    fn clifford_and_t() {
        let h = g(SingleGate::H);
        let rep = single_qutrit_ct_obstruction(&h).unwrap();
        assert_eq!(
            rep.verdict,
            Verdict::Consistent {
                k: 0,
                clifford: true
            }
        );
        assert_eq!(rep.block_ldes[0], 0);
        let t = single_qutrit_ct_obstruction(&g(SingleGate::T)).unwrap();
        assert_eq!(
            t.verdict,
            Verdict::Consistent {
                k: 1,
                clifford: false
            }
        );
        let tau = single_qutrit_ct_obstruction(&g(SingleGate::Tau(Permutation::SWAP01))).unwrap();
        assert_eq!(
            tau.verdict,
            Verdict::Consistent {
                k: 0,
                clifford: true
            }
        );
        let tht = g(SingleGate::T)
            .mul(&h)
            .unwrap()
            .mul(&g(SingleGate::T))
            .unwrap();
        let rep = single_qutrit_ct_obstruction(&tht).unwrap();
        assert_eq!(
            rep.verdict,
            Verdict::Consistent {
                k: 2,
                clifford: false
            }
        );
    }

    #[test]
    fn not_in_a() {
        let q = |n: i64| Cyclo36::from_rational(&BigRational::new(n.into(), 5.into()));
        let rot = Matrix::from_rows(vec![
            vec![q(3), q(-4), Cyclo36::zero()],
            vec![q(4), q(3), Cyclo36::zero()],
            vec![Cyclo36::zero(), Cyclo36::zero(), Cyclo36::one()],
        ]);
        assert!(rot.is_unitary());
        assert_eq!(
            single_qutrit_ct_obstruction(&rot).unwrap().verdict,
            Verdict::NotInA
        );
        match adjoint_of(&rot) {
            Err(AdjointError::NotInA { exact, .. }) => assert_eq!(exact.len(), 64),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn patterns() {
        let two = ResiduePattern::bordered(Z3::TWO);
        let one = ResiduePattern::bordered(Z3::ONE);
        assert!(pattern_equiv(&two, &two));
        assert!(pattern_equiv(&two, &one));
        assert!(!pattern_equiv(&ResiduePattern::zero(), &one));
        let shifted =
            ResiduePattern::from_values([[1, 1, 0, 1], [0, 0, 0, 0], [2, 2, 0, 1], [1, 1, 0, 1]]);
        assert!(!pattern_equiv(&shifted, &one));
        let moved =
            ResiduePattern::from_values([[1, 2, 0, 1], [0, 0, 0, 0], [2, 1, 0, 2], [1, 2, 0, 1]]);
        assert!(pattern_equiv(&moved, &one));
    }
}
