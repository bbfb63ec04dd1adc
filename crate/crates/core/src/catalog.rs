//! Every identity and classification the toolkit is built to reproduce,
//! evaluated exactly against a registry.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::adjoint::{adjoint_of, single_qutrit_ct_obstruction, Block, ObstructionReason, Verdict};
use crate::analysis::{hierarchy_level, refute_phase_membership};
use crate::circuit::{expand_macro_body, MacroBody, MacroEntry, Registry, SingleGate};
use crate::rings::{has_rational_root, in_ring, to_alpha, Cyclo36, RingTag};
use crate::sim::{circuit_matrix, controlled_target, parse_target, single_gate_matrix, Matrix};
use crate::verify::verify_circuit;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub name: String,
    pub label: String,
    /// Negative controls expect `false`.
    pub expected: bool,
    pub observed: bool,
    pub detail: String,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.expected == self.observed
    }
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "VERIFIED" } else { "FAILED" };
        write!(f, "{status:<8}  {:<22} {}", self.name, self.label)?;
        if !self.detail.is_empty() {
            write!(f, " [{}]", self.detail)?;
        }
        Ok(())
    }
}

fn claim(
    name: &str,
    label: &str,
    check: impl FnOnce() -> Result<(bool, String), String>,
) -> ClaimResult {
    let (observed, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
    ClaimResult {
        name: name.into(),
        label: label.into(),
        expected: true,
        observed,
        detail,
    }
}

fn target(src: &str) -> Result<Matrix, String> {
    parse_target(src).map_err(|e| e.to_string())
}

fn identity(name: &str, lhs: &str, rhs: &str) -> ClaimResult {
    claim(name, &format!("{lhs} = {rhs}"), || {
        Ok((target(lhs)? == target(rhs)?, String::new()))
    })
}

fn clifford_relations() -> Vec<ClaimResult> {
    vec![
        identity("h_fourth_power", "H*H*H*H", "I"),
        identity("h_squared", "H*H", "-TAU(12)"),
        identity("sh_cubed", "S*H*S*H*S*H", "-omega*I"),
        identity("x_phase_gate", "X", "XPHASE(2,1)"),
        identity("xdg_phase_gate", "XDG", "XPHASE(1,2)"),
        identity("h_zxz", "H", "-ZPHASE(2,2)*XPHASE(2,2)*ZPHASE(2,2)"),
        identity("h_xzx", "H", "-XPHASE(2,2)*ZPHASE(2,2)*XPHASE(2,2)"),
        identity("hdg_zxz", "HDG", "-ZPHASE(1,1)*XPHASE(1,1)*ZPHASE(1,1)"),
        identity("hdg_xzx", "HDG", "-XPHASE(1,1)*ZPHASE(1,1)*XPHASE(1,1)"),
        identity("phase_kickback", "C2[-I]", "R x I"),
    ]
}

fn macro_claim(reg: &Registry, m: &MacroEntry) -> ClaimResult {
    claim(&m.name, &m.label, || {
        let want = controlled_target(&m.block, None);
        let body = match &m.body {
            MacroBody::Circuit(c) => c.clone(),
            MacroBody::AdjointOf(base) => match &reg.macro_named(base).map(|b| &b.body) {
                Some(MacroBody::Circuit(c)) => c.adjoint(),
                _ => expand_macro_body(base, reg)
                    .map_err(|e| e.to_string())?
                    .adjoint(),
            },
        };
        let raw = circuit_matrix(&body).map_err(|e| e.to_string())? == want;
        let flat = expand_macro_body(&m.name, reg).map_err(|e| e.to_string())?;
        let expanded = circuit_matrix(&flat).map_err(|e| e.to_string())? == want;
        let t = flat.literal_t_count();
        let t_ok = m.tcount.is_none_or(|d| d == t);
        let detail = format!(
            "matrix {}, expansion {}, tcount {t}",
            if raw { "ok" } else { "differs" },
            if expanded { "ok" } else { "differs" },
        );
        Ok((raw && expanded && t_ok, detail))
    })
}

fn circuit_claims(reg: &Registry) -> Vec<ClaimResult> {
    reg.circuits()
        .iter()
        .map(|e| {
            let mut r = claim(&e.name, &e.label, || {
                let want = target(&e.target)?;
                let v = verify_circuit(&e.circuit, &want, e.comparison, Some(reg))
                    .map_err(|err| err.to_string())?;
                let t_ok = match (e.tcount, v.t_count) {
                    (Some(d), Some(t)) => d == t,
                    (Some(_), None) => false,
                    (None, _) => true,
                };
                let detail = match v.t_count {
                    Some(t) => {
                        format!("{} tcount {t}", if v.holds() { "equal" } else { "differs" })
                    }
                    None => (if v.holds() { "equal" } else { "differs" }).to_string(),
                };
                Ok((v.holds() && t_ok, detail))
            });
            r.expected = e.expect;
            r
        })
        .collect()
}

fn ring_claims() -> Vec<ClaimResult> {
    let int = |n: i64| BigRational::from_integer(BigInt::from(n));
    vec![
        claim("zeta_not_in_tomega", "zeta not in T[omega]", || {
            let inside = in_ring(&Cyclo36::zeta9(), RingTag::Tomega).map_err(|e| e.to_string())?;
            Ok((!inside, String::new()))
        }),
        claim(
            "cubic_irreducible",
            "r^3 - 3r + 1 has no rational root",
            || {
                let root = has_rational_root(&[int(1), int(0), int(-3), int(1)]);
                Ok((root.is_none(), String::new()))
            },
        ),
        claim(
            "t_not_clifford_r",
            "T x I^n not exact over T[omega], n = 0, 1",
            || {
                let mut detail = String::new();
                let mut all = true;
                for src in ["T", "T x I"] {
                    let r = refute_phase_membership(&target(src)?, RingTag::Tomega);
                    all &= r.is_refuted();
                    if detail.is_empty() {
                        detail = r.to_string();
                    }
                }
                Ok((all, detail))
            },
        ),
    ]
}

fn adjoint_claims() -> Vec<ClaimResult> {
    let r = single_gate_matrix(SingleGate::R);
    vec![
        claim(
            "r_adjoint_blocks",
            "adjoint of R has A = D, B = C = 0, LDE(A) 6",
            || {
                let adj = adjoint_of(&r).map_err(|e| e.to_string())?;
                let third = |v: i64| {
                    to_alpha(&Cyclo36::from_rational(&BigRational::new(
                        v.into(),
                        3.into(),
                    )))
                    .map_err(|e| e.to_string())
                };
                let rows = [[3, 0, 0, 0], [0, -1, 2, 2], [0, 2, -1, 2], [0, 2, 2, -1]];
                let mut expected = Vec::new();
                for row in rows {
                    for v in row {
                        expected.push(third(v)?);
                    }
                }
                let flat = |b: Block| adj.block(b).into_iter().flatten().collect::<Vec<_>>();
                let zero_bc = [Block::B, Block::C]
                    .iter()
                    .all(|&b| flat(b).iter().all(|x| x.is_zero()));
                let ok = flat(Block::A) == expected
                    && flat(Block::D) == expected
                    && zero_bc
                    && adj.block_lde(Block::A) == 6;
                Ok((ok, format!("LDE(A) {}", adj.block_lde(Block::A))))
            },
        ),
        claim(
            "r_single_qutrit",
            "R has no ancilla-free single-qutrit Clifford+T circuit",
            || {
                let rep = single_qutrit_ct_obstruction(&r).map_err(|e| e.to_string())?;
                let ok = rep.verdict == Verdict::Obstructed(ObstructionReason::CPattern(7));
                Ok((ok, rep.verdict.to_string()))
            },
        ),
    ]
}

fn hierarchy_claims() -> Vec<ClaimResult> {
    let level = |src: &str, cap: u32| -> Result<Option<u32>, String> {
        Ok(hierarchy_level(&target(src)?, cap)
            .map_err(|e| e.to_string())?
            .level)
    };
    let show = |l: Option<u32>| l.map_or("absent".to_string(), |k| k.to_string());
    vec![
        claim("t_third_level", "T is in the third hierarchy level", || {
            let l = level("T", 3)?;
            Ok((l == Some(3), format!("level {}", show(l))))
        }),
        claim(
            "r_outside_hierarchy",
            "R is in no hierarchy level up to 4",
            || {
                let l = level("R", 4)?;
                Ok((l.is_none(), format!("level {}", show(l))))
            },
        ),
    ]
}

/// Runs every claim. Order is fixed.
pub fn run_catalog(reg: &Registry) -> Vec<ClaimResult> {
    let mut out = clifford_relations();
    out.extend(reg.macros().iter().map(|m| macro_claim(reg, m)));
    out.extend(circuit_claims(reg));
    out.extend(ring_claims());
    out.extend(adjoint_claims());
    out.extend(hierarchy_claims());
    out
}
