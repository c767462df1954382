//! JSON instance files.
//!
//! `group` is the ambient group `G_n` (or `U(N)`); the rank of the residual
//! factor carrying `σ` is whatever the GL blocks leave over.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rgroup_core::{
    ConjugateDuality, CuspidalSymbol, DualityType, GroupFamily, GroupSpec, InducingData,
    JordanBlock, JordanData, Rule, Sign, Summand, UnitaryCuspidalSymbol, UnitaryInducingData,
    UnitaryJordanData, UnitarySummand, ValidationReport,
};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: String,
    pub group: GroupDecl,
    #[serde(default)]
    pub symbols: Vec<SymbolDecl>,
    #[serde(default)]
    pub sigma: Vec<BlockDecl>,
    #[serde(default)]
    pub deltas: Vec<DeltaDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDecl {
    /// One of `sp`, `so`, `o`, `u`.
    pub family: String,
    pub rank: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DualityDecl {
    Orthogonal,
    Symplectic,
    NotSelfDual,
    ConjSelfDual,
    NotConjSelfDual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolDecl {
    pub label: String,
    pub dim: u32,
    pub duality: DualityDecl,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDecl {
    pub rho: String,
    pub a: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaDecl {
    pub rho: String,
    pub a: u32,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Classical(InducingData),
    Unitary(UnitaryInducingData),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadError {
    /// Unreadable or malformed input.
    Parse(String),
    /// Well-formed input describing an impossible instance.
    Domain(ValidationReport),
}

impl From<serde_json::Error> for LoadError {
    fn from(e: serde_json::Error) -> Self {
        LoadError::Parse(e.to_string())
    }
}

fn parse_err(msg: impl Into<String>) -> LoadError {
    LoadError::Parse(msg.into())
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files always serialize")
    }

    pub fn read(path: &Path) -> Result<Self, LoadError> {
        let text = fs::read_to_string(path)
            .map_err(|e| parse_err(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        fs::write(path, self.to_json() + "\n")
    }

    pub fn problem(&self) -> Result<Problem, LoadError> {
        if self.format_version != FORMAT_VERSION {
            return Err(parse_err(format!(
                "unsupported format_version {:?} (expected {FORMAT_VERSION:?})",
                self.format_version
            )));
        }
        let family = GroupFamily::from_short_name(&self.group.family).ok_or_else(|| {
            parse_err(format!(
                "unknown family {:?}; use sp, so, o or u",
                self.group.family
            ))
        })?;
        let mut seen = BTreeMap::new();
        for s in &self.symbols {
            if seen.insert(s.label.as_str(), ()).is_some() {
                return Err(parse_err(format!("symbol `{}` declared twice", s.label)));
            }
        }
        for b in &self.sigma {
            if b.a == 0 {
                return Err(parse_err(format!("block ({}, 0): a must be positive", b.rho)));
            }
        }
        for d in &self.deltas {
            if d.a == 0 {
                return Err(parse_err(format!("delta ({}, 0): a must be positive", d.rho)));
            }
        }
        if family == GroupFamily::Unitary {
            self.unitary_problem().map(Problem::Unitary)
        } else {
            self.classical_problem(family).map(Problem::Classical)
        }
    }

    fn classical_symbols(&self) -> Result<BTreeMap<String, CuspidalSymbol>, LoadError> {
        let mut declared = BTreeMap::new();
        for s in &self.symbols {
            let duality = match s.duality {
                DualityDecl::Orthogonal => DualityType::Orthogonal,
                DualityDecl::Symplectic => DualityType::Symplectic,
                DualityDecl::NotSelfDual => DualityType::NotSelfDual,
                _ => {
                    return Err(parse_err(format!(
                        "symbol `{}`: conjugate duality is only meaningful for the unitary family",
                        s.label
                    )))
                }
            };
            if s.lambda.is_some() || s.lambda_matches.is_some() {
                return Err(parse_err(format!(
                    "symbol `{}`: lambda fields are only meaningful for the unitary family",
                    s.label
                )));
            }
            let sym = CuspidalSymbol::new(s.label.clone(), s.dim, duality, s.dual_label.clone())
                .map_err(|e| parse_err(e.to_string()))?;
            declared.insert(s.label.clone(), sym);
        }
        let mut all = declared.clone();
        for sym in declared.values().filter(|s| !s.is_self_dual()) {
            let dual = sym.dual();
            match declared.get(dual.label()) {
                Some(d) if d != &dual => {
                    return Err(parse_err(format!(
                        "symbols `{}` and `{}` are declared as duals inconsistently",
                        sym.label(),
                        dual.label()
                    )))
                }
                _ => {
                    all.insert(dual.label().to_string(), dual);
                }
            }
        }
        Ok(all)
    }

    fn gl_rank(&self, dims: impl Fn(&str) -> u32) -> u32 {
        self.deltas.iter().map(|d| dims(&d.rho) * d.a * d.multiplicity).sum()
    }

    fn residual_rank(&self, gl: u32) -> Result<u32, LoadError> {
        self.group.rank.checked_sub(gl).ok_or_else(|| {
            let mut report = ValidationReport::new();
            report.push(
                Rule::LeviShape,
                format!(
                    "GL blocks need rank {gl} but the group only has rank {}",
                    self.group.rank
                ),
            );
            LoadError::Domain(report)
        })
    }

    fn classical_problem(&self, family: GroupFamily) -> Result<InducingData, LoadError> {
        let symbols = self.classical_symbols()?;
        let lookup = |label: &str| {
            symbols
                .get(label)
                .cloned()
                .ok_or_else(|| parse_err(format!("unknown symbol `{label}`")))
        };
        let blocks = self
            .sigma
            .iter()
            .map(|b| Ok(JordanBlock::new(lookup(&b.rho)?, b.a)))
            .collect::<Result<Vec<_>, LoadError>>()?;
        let deltas = self
            .deltas
            .iter()
            .map(|d| {
                let s = Summand::new(lookup(&d.rho)?, d.a).map_err(|e| parse_err(e.to_string()))?;
                Ok((s, d.multiplicity))
            })
            .collect::<Result<Vec<_>, LoadError>>()?;
        let gl = self.gl_rank(|l| symbols[l].dim());
        let residual = self.residual_rank(gl)?;
        Ok(InducingData::new(
            deltas,
            JordanData::new(GroupSpec::new(family, residual), blocks),
        ))
    }

    fn unitary_symbols(&self) -> Result<BTreeMap<String, UnitaryCuspidalSymbol>, LoadError> {
        let mut declared = BTreeMap::new();
        for s in &self.symbols {
            let duality = match s.duality {
                DualityDecl::ConjSelfDual => {
                    let lambda = s.lambda.and_then(Sign::from_i64).ok_or_else(|| {
                        parse_err(format!("symbol `{}`: lambda must be 1 or -1", s.label))
                    })?;
                    if s.dual_label.is_some() {
                        return Err(parse_err(format!(
                            "symbol `{}`: a conjugate-self-dual symbol has no dual_label",
                            s.label
                        )));
                    }
                    ConjugateDuality::ConjSelfDual { lambda }
                }
                DualityDecl::NotConjSelfDual => {
                    if s.lambda.is_some() {
                        return Err(parse_err(format!(
                            "symbol `{}`: lambda is only defined for conjugate-self-dual symbols",
                            s.label
                        )));
                    }
                    let dual_label = s.dual_label.clone().ok_or_else(|| {
                        parse_err(format!("symbol `{}` needs a dual_label", s.label))
                    })?;
                    ConjugateDuality::NotConjSelfDual { dual_label }
                }
                _ => {
                    return Err(parse_err(format!(
                        "symbol `{}`: the unitary family uses conj_self_dual or not_conj_self_dual",
                        s.label
                    )))
                }
            };
            let matches = s.lambda_matches.unwrap_or(true);
            let sym = UnitaryCuspidalSymbol::new(s.label.clone(), s.dim, duality, matches)
                .map_err(|e| parse_err(e.to_string()))?;
            declared.insert(s.label.clone(), sym);
        }
        let mut all = declared.clone();
        for sym in declared.values().filter(|s| s.lambda().is_none()) {
            let dual = sym.conj_dual();
            match declared.get(dual.label()) {
                Some(d) if d != &dual => {
                    return Err(parse_err(format!(
                        "symbols `{}` and `{}` are declared as conjugate duals inconsistently",
                        sym.label(),
                        dual.label()
                    )))
                }
                _ => {
                    all.insert(dual.label().to_string(), dual);
                }
            }
        }
        Ok(all)
    }

    fn unitary_problem(&self) -> Result<UnitaryInducingData, LoadError> {
        let symbols = self.unitary_symbols()?;
        let lookup = |label: &str| {
            symbols
                .get(label)
                .cloned()
                .ok_or_else(|| parse_err(format!("unknown symbol `{label}`")))
        };
        let blocks = self
            .sigma
            .iter()
            .map(|b| Ok((lookup(&b.rho)?, b.a)))
            .collect::<Result<Vec<_>, LoadError>>()?;
        let deltas = self
            .deltas
            .iter()
            .map(|d| {
                let s = UnitarySummand::new(lookup(&d.rho)?, d.a)
                    .map_err(|e| parse_err(e.to_string()))?;
                Ok((s, d.multiplicity))
            })
            .collect::<Result<Vec<_>, LoadError>>()?;
        let gl = self.gl_rank(|l| symbols[l].dim());
        let residual = self.residual_rank(2 * gl)?;
        Ok(UnitaryInducingData {
            deltas,
            sigma: UnitaryJordanData::new(residual, blocks),
        })
    }

    pub fn from_classical(pi: &InducingData) -> Self {
        let mut symbols: BTreeMap<String, SymbolDecl> = BTreeMap::new();
        let rhos = pi
            .sigma
            .blocks()
            .iter()
            .map(|b| &b.rho)
            .chain(pi.deltas.iter().map(|(d, _)| d.rho()));
        for rho in rhos {
            let duality = match rho.duality() {
                DualityType::Orthogonal => DualityDecl::Orthogonal,
                DualityType::Symplectic => DualityDecl::Symplectic,
                DualityType::NotSelfDual => DualityDecl::NotSelfDual,
            };
            symbols.entry(rho.label().to_string()).or_insert(SymbolDecl {
                label: rho.label().to_string(),
                dim: rho.dim(),
                duality,
                dual_label: rho.dual_label().map(str::to_string),
                lambda: None,
                lambda_matches: None,
            });
        }
        let group = pi.ambient_group();
        Self {
            format_version: FORMAT_VERSION.into(),
            group: GroupDecl {
                family: group.family.short_name().into(),
                rank: group.rank,
            },
            symbols: symbols.into_values().collect(),
            sigma: pi
                .sigma
                .blocks()
                .iter()
                .map(|b| BlockDecl {
                    rho: b.rho.label().into(),
                    a: b.a,
                })
                .collect(),
            deltas: pi
                .deltas
                .iter()
                .map(|(d, m)| DeltaDecl {
                    rho: d.rho().label().into(),
                    a: d.a(),
                    multiplicity: *m,
                })
                .collect(),
        }
    }

    pub fn from_unitary(pi: &UnitaryInducingData) -> Self {
        let mut symbols: BTreeMap<String, SymbolDecl> = BTreeMap::new();
        let rhos = pi
            .sigma
            .blocks
            .iter()
            .map(|(r, _)| r)
            .chain(pi.deltas.iter().map(|(d, _)| &d.rho));
        for rho in rhos {
            let (duality, dual_label, lambda) = match rho.duality() {
                ConjugateDuality::ConjSelfDual { lambda } => {
                    (DualityDecl::ConjSelfDual, None, Some(lambda.value()))
                }
                ConjugateDuality::NotConjSelfDual { dual_label } => {
                    (DualityDecl::NotConjSelfDual, Some(dual_label.clone()), None)
                }
            };
            symbols.entry(rho.label().to_string()).or_insert(SymbolDecl {
                label: rho.label().to_string(),
                dim: rho.dim(),
                duality,
                dual_label,
                lambda,
                lambda_matches: (!rho.lambda_rho_matches()).then_some(false),
            });
        }
        Self {
            format_version: FORMAT_VERSION.into(),
            group: GroupDecl {
                family: GroupFamily::Unitary.short_name().into(),
                rank: pi.ambient_rank(),
            },
            symbols: symbols.into_values().collect(),
            sigma: pi
                .sigma
                .blocks
                .iter()
                .map(|(r, a)| BlockDecl {
                    rho: r.label().into(),
                    a: *a,
                })
                .collect(),
            deltas: pi
                .deltas
                .iter()
                .map(|(d, m)| DeltaDecl {
                    rho: d.rho.label().into(),
                    a: d.a,
                    multiplicity: *m,
                })
                .collect(),
        }
    }
}
