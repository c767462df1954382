//! Centralizers `S_ψ` of classical parameters as products of classical
//! factor groups, and the Arthur R-group they determine.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::param::{classify, DualityType, GroupSpec, Parameter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorKind {
    GeneralLinear,
    Symplectic,
    FullOrthogonal,
    SpecialOrthogonal,
}

impl FactorKind {
    pub fn symbol(self) -> &'static str {
        match self {
            FactorKind::GeneralLinear => "GL",
            FactorKind::Symplectic => "Sp",
            FactorKind::FullOrthogonal => "O",
            FactorKind::SpecialOrthogonal => "SO",
        }
    }
}

/// One factor `GL(m)`, `Sp(m)`, `O(m)` or `SO(m)` of a centralizer, together
/// with the dimension of the summand it centralizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub kind: FactorKind,
    pub size: u32,
    pub source_dim: u32,
}

impl Factor {
    pub fn new(kind: FactorKind, size: u32, source_dim: u32) -> Result<Self> {
        if size == 0 {
            return Err(Error::UnsupportedDescriptor(format!(
                "{}(0) factor",
                kind.symbol()
            )));
        }
        if kind == FactorKind::Symplectic && size % 2 == 1 {
            return Err(Error::UnsupportedDescriptor(format!(
                "Sp({size}) needs even size"
            )));
        }
        Ok(Self {
            kind,
            size,
            source_dim,
        })
    }

    /// Rank of the maximal torus of the factor.
    pub fn torus_degree(&self) -> u32 {
        match self.kind {
            FactorKind::GeneralLinear => self.size,
            _ => self.size / 2,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.symbol(), self.size)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DetTerm {
    pub factor: usize,
    pub exponent: u32,
}

/// The condition `∏ det(g_i)^{e_i} = 1` over the listed factors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DetConstraint {
    pub terms: Vec<DetTerm>,
}

impl DetConstraint {
    pub fn is_vacuous(&self) -> bool {
        self.terms.iter().all(|t| t.exponent % 2 == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralizerDescriptor {
    pub factors: Vec<Factor>,
    pub det_constraint: Option<DetConstraint>,
}

impl CentralizerDescriptor {
    pub fn new(factors: Vec<Factor>, det_constraint: Option<DetConstraint>) -> Result<Self> {
        if let Some(c) = &det_constraint {
            for t in &c.terms {
                let Some(f) = factors.get(t.factor) else {
                    return Err(Error::UnsupportedDescriptor(format!(
                        "determinant term references missing factor #{}",
                        t.factor
                    )));
                };
                if t.exponent % 2 == 1 && f.kind == FactorKind::GeneralLinear {
                    return Err(Error::UnsupportedDescriptor(format!(
                        "determinant constraint on {f} (factor #{})",
                        t.factor
                    )));
                }
            }
        }
        Ok(Self {
            factors,
            det_constraint,
        })
    }

    /// Indices of full orthogonal factors whose determinant the constraint
    /// actually involves.
    pub fn bound_orthogonal_factors(&self) -> Vec<usize> {
        let Some(c) = &self.det_constraint else {
            return Vec::new();
        };
        let mut out: Vec<usize> = c
            .terms
            .iter()
            .filter(|t| t.exponent % 2 == 1)
            .map(|t| t.factor)
            .filter(|&i| self.factors[i].kind == FactorKind::FullOrthogonal)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether the constraint cuts down the sign vectors `(det g_i)`.
    pub fn constraint_binds(&self) -> bool {
        !self.bound_orthogonal_factors().is_empty()
    }

    pub fn torus_degree(&self) -> u32 {
        self.factors.iter().map(Factor::torus_degree).sum()
    }

    fn count(&self, pred: impl Fn(&Factor) -> bool) -> usize {
        self.factors.iter().filter(|f| pred(f)).count()
    }

    /// Rank of `W/W⁰` read off the factor list: each free `O(even)` factor
    /// gives one `Z/2`; a binding constraint that involves only even-size
    /// `O` factors removes one of them again.
    pub fn closed_form_r_rank(&self) -> u32 {
        let even = self.count(|f| f.kind == FactorKind::FullOrthogonal && f.size % 2 == 0);
        let bound = self.bound_orthogonal_factors();
        let lost = !bound.is_empty() && bound.iter().all(|&i| self.factors[i].size % 2 == 0);
        (even - usize::from(lost)) as u32
    }
}

impl fmt::Display for CentralizerDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            f.write_str("1")?;
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" × ")?;
            }
            write!(f, "{factor}")?;
        }
        match &self.det_constraint {
            Some(c) if c.is_vacuous() => f.write_str(" [det constraint vacuous]"),
            Some(c) => {
                f.write_str(" [∏ det(g_i)^e_i = 1 over")?;
                for t in c.terms.iter().filter(|t| t.exponent % 2 == 1) {
                    write!(f, " #{}", t.factor)?;
                }
                f.write_str("]")
            }
            None => Ok(()),
        }
    }
}

/// The group `(Z/2)^rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementaryTwoGroup {
    pub rank: u32,
}

impl ElementaryTwoGroup {
    pub fn new(rank: u32) -> Self {
        Self { rank }
    }

    pub fn trivial() -> Self {
        Self { rank: 0 }
    }

    pub fn order(&self) -> u64 {
        1u64 << self.rank
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0
    }
}

impl fmt::Display for ElementaryTwoGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            0 => f.write_str("1"),
            1 => f.write_str("Z/2"),
            r => write!(f, "(Z/2)^{r}"),
        }
    }
}

/// `S_ψ` exactly as the intersection with the dual group presents it: one
/// factor per canonical entry (`GL(m)` for a dual pair, `Sp(m)` for an
/// opposite-type summand, `O(m)` for a same-type summand) and, for
/// `Sp(2n)` and `SO(2n+1)`, the determinant condition over the `O` factors
/// of odd source dimension.
pub fn presented_centralizer(psi: &Parameter, group: GroupSpec) -> Result<CentralizerDescriptor> {
    let classification = classify(psi, group)?;
    let dual_type = group.classical_dual_type()?;
    debug_assert_eq!(classification.s(), psi.len());

    let mut factors = Vec::with_capacity(psi.len());
    let mut terms = Vec::new();
    for e in psi.entries() {
        let t = e.summand.duality();
        let source_dim = e.summand.dim();
        let kind = if t == DualityType::NotSelfDual {
            FactorKind::GeneralLinear
        } else if t != dual_type {
            FactorKind::Symplectic
        } else {
            if source_dim % 2 == 1 {
                terms.push(DetTerm {
                    factor: factors.len(),
                    exponent: 1,
                });
            }
            FactorKind::FullOrthogonal
        };
        factors.push(Factor::new(kind, e.multiplicity, source_dim)?);
    }
    let det_constraint = group.has_det_constraint().then_some(DetConstraint { terms });
    CentralizerDescriptor::new(factors, det_constraint)
}

/// Rewrites a binding determinant constraint into an isomorphic free
/// product: the first bound `O(m)` with `m` odd becomes `SO(m)` and the
/// remaining factors are unconstrained. Descriptors whose constraint is
/// absent or vacuous are returned unchanged, as are those without a bound
/// odd-size factor (they cannot arise from valid parameters).
pub fn resolve_constraint(desc: &CentralizerDescriptor) -> CentralizerDescriptor {
    let bound = desc.bound_orthogonal_factors();
    let Some(&pivot) = bound.iter().find(|&&i| desc.factors[i].size % 2 == 1) else {
        return desc.clone();
    };
    let mut factors = desc.factors.clone();
    factors[pivot].kind = FactorKind::SpecialOrthogonal;
    CentralizerDescriptor {
        factors,
        det_constraint: None,
    }
}

/// The centralizer `S_ψ` with its determinant constraint resolved.
pub fn centralizer(psi: &Parameter, group: GroupSpec) -> Result<CentralizerDescriptor> {
    Ok(resolve_constraint(&presented_centralizer(psi, group)?))
}

/// `R_ψ ≅ (Z/2)^d` with `d` the number of same-type summands of even
/// multiplicity.
pub fn arthur_r_group(psi: &Parameter, group: GroupSpec) -> Result<ElementaryTwoGroup> {
    Ok(ElementaryTwoGroup::new(classify(psi, group)?.d() as u32))
}

/// `π₀` of the descriptor: one `Z/2` per full orthogonal factor, less one
/// when the determinant constraint binds.
pub fn component_group(desc: &CentralizerDescriptor) -> ElementaryTwoGroup {
    let orthogonal = desc.count(|f| f.kind == FactorKind::FullOrthogonal);
    ElementaryTwoGroup::new((orthogonal - usize::from(desc.constraint_binds())) as u32)
}
