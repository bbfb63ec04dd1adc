//! Data-driven macro registry: Clifford+T bodies for `|2⟩`-controlled gates
//! and named verification circuits, described by `registry.toml`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::rings::RootOfUnity;
use crate::sim::{equal_up_to_phase, parse_target, Matrix};

use super::parse::parse_circuit;
use super::Circuit;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegistryError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed manifest: {0}")]
    Manifest(String),
    #[error("{file}: {message}")]
    Circuit { file: String, message: String },
    #[error("entry `{name}`: {message}")]
    Entry { name: String, message: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    #[serde(rename = "macro", default)]
    macros: Vec<RawMacro>,
    #[serde(rename = "circuit", default)]
    circuits: Vec<RawCircuit>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMacro {
    name: String,
    inner: String,
    file: Option<String>,
    adjoint_of: Option<String>,
    extra_phase: Option<String>,
    tcount: Option<usize>,
    label: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCircuit {
    name: String,
    file: String,
    target: String,
    #[serde(default = "default_mode")]
    mode: String,
    tcount: Option<usize>,
    label: Option<String>,
    #[serde(default = "default_expect")]
    expect: bool,
}

fn default_mode() -> String {
    "exact".into()
}

fn default_expect() -> bool {
    true
}

/// How a circuit matrix is compared with its target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Exact,
    UpToPhase,
    /// Equal after multiplying the control-`|2⟩` rows of the target by the phase.
    ControlledPhase(RootOfUnity),
}

impl FromStr for Comparison {
    type Err = String;

    /// `exact`, `phase`, or `cphase PHASE` (also `cphase:PHASE`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "exact" => return Ok(Comparison::Exact),
            "phase" => return Ok(Comparison::UpToPhase),
            _ => {}
        }
        let rest = s
            .strip_prefix("cphase")
            .map(|r| r.trim_start_matches(|c: char| c == ':' || c.is_whitespace()))
            .ok_or_else(|| format!("unknown comparison mode `{s}`"))?;
        rest.parse::<RootOfUnity>()
            .map(Comparison::ControlledPhase)
            .map_err(|e| e.to_string())
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Exact => write!(f, "exact"),
            Comparison::UpToPhase => write!(f, "phase"),
            Comparison::ControlledPhase(p) => write!(f, "cphase {p}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum MacroBody {
    /// Two-qutrit circuit, control on wire 0 and target on wire 1.
    Circuit(Circuit),
    /// The inverse of another macro's expansion.
    AdjointOf(String),
}

#[derive(Clone, Debug)]
pub struct MacroEntry {
    pub name: String,
    pub inner_expr: String,
    /// The `3×3` operator the body applies when the control is `|2⟩`,
    /// i.e. `extra_phase·inner`.
    pub block: Matrix,
    pub extra_phase: RootOfUnity,
    pub body: MacroBody,
    pub tcount: Option<usize>,
    pub label: String,
    pub file: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CircuitEntry {
    pub name: String,
    pub file: String,
    pub circuit: Circuit,
    pub target: String,
    pub comparison: Comparison,
    pub tcount: Option<usize>,
    pub label: String,
    /// `false` for negative controls that must not verify.
    pub expect: bool,
}

/// How a requested controlled block relates to the macro that serves it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MacroMatch {
    Exact,
    /// The expansion applies `phase·block` instead of `block` on `|2⟩`.
    UpToControlledPhase(RootOfUnity),
}

#[derive(Clone, Debug, Default)]
pub struct Registry {
    macros: Vec<MacroEntry>,
    circuits: Vec<CircuitEntry>,
    sources: BTreeMap<String, String>,
}

macro_rules! builtin_files {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../../../circuits/", $name)))),*]
    };
}

const BUILTIN: &[(&str, &str)] = builtin_files!(
    "registry.toml",
    "c2_x.qc",
    "c2_sdg.qc",
    "c2_z11.qc",
    "c2_mhdg.qc",
    "c2_tau12.qc",
    "c2_tau01.qc",
    "c2_tau02.qc",
    "c2_mtau12.qc",
    "r_construction.qc",
    "r_naive.qc",
    "r_construction_flat.qc",
    "bad.qc",
);

impl Registry {
    /// The registry shipped with the crate.
    pub fn builtin() -> Result<Registry, RegistryError> {
        let lookup = |name: &str| {
            BUILTIN
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, s)| s.to_string())
                .ok_or_else(|| RegistryError::Io {
                    path: name.to_string(),
                    message: "not a bundled file".into(),
                })
        };
        Self::from_sources(&lookup("registry.toml")?, lookup)
    }

    /// Loads `registry.toml` and the circuit files it names from `dir`.
    pub fn load_dir(dir: &Path) -> Result<Registry, RegistryError> {
        let read = |name: &str| {
            let p = dir.join(name);
            std::fs::read_to_string(&p).map_err(|e| RegistryError::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            })
        };
        Self::from_sources(&read("registry.toml")?, read)
    }

    pub fn from_sources(
        manifest: &str,
        read: impl Fn(&str) -> Result<String, RegistryError>,
    ) -> Result<Registry, RegistryError> {
        let raw: RawManifest =
            toml::from_str(manifest).map_err(|e| RegistryError::Manifest(e.to_string()))?;
        let mut reg = Registry::default();
        let load = |file: &str, reg: &mut Registry| -> Result<Circuit, RegistryError> {
            let text = read(file)?;
            let c = parse_circuit(&text).map_err(|e| RegistryError::Circuit {
                file: file.to_string(),
                message: e.to_string(),
            })?;
            reg.sources.insert(file.to_string(), text);
            Ok(c)
        };
        for m in raw.macros {
            let entry_err = |message: String| RegistryError::Entry {
                name: m.name.clone(),
                message,
            };
            if reg.macros.iter().any(|e| e.name == m.name) {
                return Err(entry_err("duplicate name".into()));
            }
            let inner = parse_target(&m.inner).map_err(|e| entry_err(e.to_string()))?;
            if inner.dim() != 3 {
                return Err(entry_err("inner operator must be single-qutrit".into()));
            }
            let extra_phase = match &m.extra_phase {
                Some(p) => p
                    .parse()
                    .map_err(|e: crate::rings::PhaseParseError| entry_err(e.to_string()))?,
                None => RootOfUnity::ONE,
            };
            let body = match (&m.file, &m.adjoint_of) {
                (Some(f), None) => {
                    let c = load(f, &mut reg)?;
                    if c.n_qutrits() != 2 {
                        return Err(entry_err("macro bodies act on exactly two qutrits".into()));
                    }
                    MacroBody::Circuit(c)
                }
                (None, Some(base)) => {
                    if !reg.macros.iter().any(|e| &e.name == base) {
                        return Err(entry_err(format!(
                            "adjoint_of names unknown macro `{base}`"
                        )));
                    }
                    MacroBody::AdjointOf(base.clone())
                }
                _ => {
                    return Err(entry_err(
                        "exactly one of `file` and `adjoint_of` is required".into(),
                    ))
                }
            };
            reg.macros.push(MacroEntry {
                label: m
                    .label
                    .clone()
                    .unwrap_or_else(|| format!("C2[{}]", m.inner)),
                name: m.name,
                block: inner.scale(&extra_phase.to_cyclo()),
                inner_expr: m.inner,
                extra_phase,
                body,
                tcount: m.tcount,
                file: m.file,
            });
        }
        for c in raw.circuits {
            let entry_err = |message: String| RegistryError::Entry {
                name: c.name.clone(),
                message,
            };
            if reg.circuits.iter().any(|e| e.name == c.name) {
                return Err(entry_err("duplicate name".into()));
            }
            parse_target(&c.target).map_err(|e| entry_err(e.to_string()))?;
            let comparison: Comparison = c.mode.parse().map_err(entry_err)?;
            let circuit = load(&c.file, &mut reg)?;
            reg.circuits.push(CircuitEntry {
                label: c.label.clone().unwrap_or_else(|| c.name.clone()),
                name: c.name,
                file: c.file,
                circuit,
                target: c.target,
                comparison,
                tcount: c.tcount,
                expect: c.expect,
            });
        }
        Ok(reg)
    }

    pub fn macros(&self) -> &[MacroEntry] {
        &self.macros
    }

    pub fn circuits(&self) -> &[CircuitEntry] {
        &self.circuits
    }

    pub fn macro_named(&self, name: &str) -> Option<&MacroEntry> {
        self.macros.iter().find(|m| m.name == name)
    }

    pub fn circuit_named(&self, name: &str) -> Option<&CircuitEntry> {
        self.circuits.iter().find(|c| c.name == name)
    }

    /// Source text of a loaded circuit file.
    pub fn source(&self, file: &str) -> Option<&str> {
        self.sources.get(file).map(String::as_str)
    }

    /// Finds a macro implementing the controlled block, preferring an exact
    /// match over one that is off by a controlled phase.
    pub fn lookup(&self, block: &Matrix) -> Option<(&MacroEntry, MacroMatch)> {
        if let Some(m) = self.macros.iter().find(|m| m.block == *block) {
            return Some((m, MacroMatch::Exact));
        }
        self.macros.iter().find_map(|m| {
            let c = equal_up_to_phase(&m.block, block).ok().flatten()?;
            let r = c.as_root()?;
            Some((m, MacroMatch::UpToControlledPhase(r)))
        })
    }
}
