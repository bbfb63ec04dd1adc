use std::fmt;

use crate::sim::Matrix;

use super::pauli::{is_pauli, PauliElement, PauliWitness};
use super::{conjugate, qutrit_count, AnalysisError, MAX_HIERARCHY_QUTRITS};

pub const MAX_LEVEL: u32 = 5;

/// Images `U G U†` of the generators `Xᵢ, Zᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordReport {
    pub clifford: bool,
    pub images: Vec<(PauliElement, Option<PauliWitness>)>,
}

impl fmt::Display for CliffordReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "clifford: {}", self.clifford)?;
        for (g, img) in &self.images {
            match img {
                Some(w) => writeln!(f, "  U ({g}) U^dag = {w}")?,
                None => writeln!(f, "  U ({g}) U^dag is not a Pauli")?,
            }
        }
        Ok(())
    }
}

/// Conjugates the generator set. That suffices because the Clifford group
/// is a group and the images of generators fix the rest.
pub fn is_clifford(u: &Matrix) -> Result<CliffordReport, AnalysisError> {
    let n = qutrit_count(u)?;
    let mut images = Vec::with_capacity(2 * n);
    let mut clifford = true;
    for q in 0..n {
        for z in [false, true] {
            let g = PauliElement::generator(n, q, z);
            let img = is_pauli(&conjugate(u, &g.matrix()))?;
            clifford &= img.is_some();
            images.push((g, img));
        }
    }
    Ok(CliffordReport { clifford, images })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HierarchyReport {
    pub level: Option<u32>,
    pub cap: u32,
    /// For each nontrivial Pauli `P`, the least level `≤ cap − 1` holding
    /// `U P U†`. Empty when `cap` is 1.
    pub certificate: Vec<(PauliElement, Option<u32>)>,
}

impl fmt::Display for HierarchyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            Some(k) => writeln!(f, "level: {k}")?,
            None => writeln!(f, "level: absent (not in levels 1..={})", self.cap)?,
        }
        for (p, k) in &self.certificate {
            match k {
                Some(k) => writeln!(f, "  U ({p}) U^dag in level {k}")?,
                None => writeln!(f, "  U ({p}) U^dag not in levels 1..={}", self.cap - 1)?,
            }
        }
        Ok(())
    }
}

fn in_level(u: &Matrix, k: u32) -> Result<bool, AnalysisError> {
    match k {
        0 => Ok(false),
        1 => Ok(is_pauli(u)?.is_some()),
        2 => Ok(is_clifford(u)?.clifford),
        _ => {
            // the Clifford-and-above levels are not groups, so every Pauli is tried
            let n = qutrit_count(u)?;
            for p in PauliElement::nontrivial(n) {
                if !in_level(&conjugate(u, &p.matrix()), k - 1)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn least_level(u: &Matrix, cap: u32) -> Result<Option<u32>, AnalysisError> {
    for k in 1..=cap {
        if in_level(u, k)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn check(u: &Matrix, cap: u32) -> Result<(), AnalysisError> {
    if cap == 0 || cap > MAX_LEVEL {
        return Err(AnalysisError::BadCap(cap));
    }
    let n = qutrit_count(u)?;
    if n > MAX_HIERARCHY_QUTRITS {
        return Err(AnalysisError::TooManyQutrits(n));
    }
    Ok(())
}

/// Whether `U ∈ C_k`.
pub fn in_hierarchy_level(u: &Matrix, k: u32) -> Result<bool, AnalysisError> {
    check(u, k.max(1))?;
    in_level(u, k)
}

/// Least `k ≤ cap` with `U ∈ C_k`; absence only speaks for levels up to `cap`.
pub fn hierarchy_level(u: &Matrix, cap: u32) -> Result<HierarchyReport, AnalysisError> {
    check(u, cap)?;
    let n = qutrit_count(u)?;
    let level = least_level(u, cap)?;
    let mut certificate = Vec::new();
    if cap > 1 {
        for p in PauliElement::nontrivial(n) {
            let k = least_level(&conjugate(u, &p.matrix()), cap - 1)?;
            certificate.push((p, k));
        }
    }
    Ok(HierarchyReport {
        level,
        cap,
        certificate,
    })
}
