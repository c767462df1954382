//! Discrete series of standard Levi subgroups and the two R-group computations.

use std::collections::BTreeSet;
use std::fmt;

use crate::centralizer::{arthur_r_group, centralizer, CentralizerDescriptor, ElementaryTwoGroup};
use crate::error::{Error, Result};
use crate::jordan::{is_reducible, jordan_parity_ok, parameter_of_sigma, validate_jordan, JordanData};
use crate::oracle::{weyl_quotient, OracleOptions};
use crate::param::{validate_parameter, GroupFamily, GroupSpec, Parameter, Summand, SymbolTable};
use crate::report::{Rule, ValidationReport};

/// `GL(n₁) × ⋯ × GL(n_r) × G_m` inside `G_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviShape {
    pub gl_blocks: Vec<u32>,
    pub residual_rank: u32,
    pub group: GroupSpec,
}

impl LeviShape {
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.gl_blocks.contains(&0) {
            report.push(Rule::LeviShape, "GL blocks must have positive size");
        }
        let total: u32 = self.gl_blocks.iter().sum::<u32>() + self.residual_rank;
        if total != self.group.rank {
            report.push(
                Rule::LeviShape,
                format!(
                    "blocks {:?} and residual rank {} do not fill {}",
                    self.gl_blocks, self.residual_rank, self.group
                ),
            );
        }
        if self.group.family == GroupFamily::EvenOrthogonal && self.residual_rank == 1 {
            report.push(
                Rule::LeviShape,
                "an O(2n) standard Levi cannot have an O(2) factor",
            );
        }
        report
    }
}

impl fmt::Display for LeviShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.gl_blocks {
            write!(f, "GL({n}) × ")?;
        }
        write!(f, "{}", GroupSpec::new(self.group.family, self.residual_rank))
    }
}

/// `π ≅ δ₁^{⊗m₁} ⊗ ⋯ ⊗ δ_r^{⊗m_r} ⊗ σ`, with each `δᵢ = δ(ρᵢ, aᵢ)` recorded
/// as the summand `ρᵢ ⊗ S_{aᵢ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducingData {
    pub deltas: Vec<(Summand, u32)>,
    pub sigma: JordanData,
}

impl InducingData {
    pub fn new(deltas: Vec<(Summand, u32)>, sigma: JordanData) -> Self {
        Self { deltas, sigma }
    }

    pub fn ambient_group(&self) -> GroupSpec {
        let gl: u32 = self.deltas.iter().map(|(d, m)| d.dim() * m).sum();
        let residual = self.sigma.group();
        GroupSpec::new(residual.family, residual.rank + gl)
    }

    pub fn levi_shape(&self) -> LeviShape {
        let gl_blocks = self
            .deltas
            .iter()
            .flat_map(|(d, m)| std::iter::repeat(d.dim()).take(*m as usize))
            .collect();
        LeviShape {
            gl_blocks,
            residual_rank: self.sigma.group().rank,
            group: self.ambient_group(),
        }
    }

    /// A copy with the multiplicity of the `i`-th δ replaced.
    pub fn with_multiplicity(&self, i: usize, multiplicity: u32) -> Self {
        let mut out = self.clone();
        out.deltas[i].1 = multiplicity;
        out
    }
}

impl fmt::Display for InducingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, m) in &self.deltas {
            if *m == 1 {
                write!(f, "δ({}) ⊗ ", d)?;
            } else {
                write!(f, "δ({})^{m} ⊗ ", d)?;
            }
        }
        write!(f, "σ[{}:", self.sigma.group())?;
        for (i, b) in self.sigma.blocks().iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}({}, {})", b.rho.label(), b.a)?;
        }
        f.write_str("]")
    }
}

pub fn validate_inducing(pi: &InducingData) -> ValidationReport {
    let mut report = ValidationReport::new();
    if pi.sigma.group().family == GroupFamily::Unitary {
        report.push(Rule::Family, "unitary Levis go through the unitary module");
        return report;
    }
    report.extend(validate_jordan(&pi.sigma));

    let mut table = SymbolTable::default();
    for b in pi.sigma.blocks() {
        // Already reported by validate_jordan when it fails.
        let _ = table.insert(&b.rho);
    }
    let mut seen = BTreeSet::new();
    for (delta, m) in &pi.deltas {
        if let Err(e) = table.insert(delta.rho()) {
            report.push(Rule::Symbol, e.to_string());
        }
        if *m == 0 {
            report.push(Rule::LeviShape, format!("δ({delta}) has multiplicity 0"));
        }
        if !seen.insert((delta.rho().label().to_string(), delta.a())) {
            report.push(Rule::DistinctDeltas, format!("δ({delta}) is listed twice"));
        }
    }
    if !report.has_rule(Rule::LeviShape) {
        report.extend(pi.levi_shape().validate());
    }
    report
}

fn check(pi: &InducingData) -> Result<()> {
    validate_inducing(pi).into_result(Error::InvalidInducingData)
}

/// One row of the per-δ breakdown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRow {
    pub delta: Summand,
    pub multiplicity: u32,
    pub self_dual: bool,
    /// `None` when δ is not self-dual.
    pub same_type: Option<bool>,
    pub in_jordan: bool,
    pub counted: bool,
}

pub fn witness(pi: &InducingData) -> Result<Vec<WitnessRow>> {
    check(pi)?;
    let group = pi.sigma.group();
    pi.deltas
        .iter()
        .map(|(delta, m)| {
            let rho = delta.rho();
            let self_dual = rho.is_self_dual();
            let same_type = if self_dual {
                Some(jordan_parity_ok(rho, delta.a(), group)?)
            } else {
                None
            };
            let in_jordan = pi.sigma.contains(rho, delta.a());
            let counted = self_dual && is_reducible(rho, delta.a(), &pi.sigma)?;
            Ok(WitnessRow {
                delta: delta.clone(),
                multiplicity: *m,
                self_dual,
                same_type,
                in_jordan,
                counted,
            })
        })
        .collect()
}

/// Rank is the number of self-dual `δᵢ` with `δᵢ ⋊ σ` reducible.
pub fn knapp_stein_r_group(pi: &InducingData) -> Result<ElementaryTwoGroup> {
    let rank = witness(pi)?.iter().filter(|w| w.counted).count();
    Ok(ElementaryTwoGroup::new(rank as u32))
}

/// `φ = ⊕ (mᵢφᵢ ⊕ mᵢφ̃ᵢ) ⊕ φ_σ`, canonicalized.
pub fn induced_parameter(pi: &InducingData) -> Result<Parameter> {
    check(pi)?;
    let phi_sigma = parameter_of_sigma(&pi.sigma)?;
    let mut raw = phi_sigma.expand();
    for (delta, m) in &pi.deltas {
        if delta.is_self_dual() {
            raw.push((delta.clone(), 2 * m));
        } else {
            raw.push((delta.clone(), *m));
            raw.push((delta.dual(), *m));
        }
    }
    let phi = Parameter::canonicalize(raw)?;
    validate_parameter(&phi, pi.ambient_group()).into_result(Error::InvalidParameter)?;
    Ok(phi)
}

pub fn arthur_r_group_of_induced(pi: &InducingData) -> Result<ElementaryTwoGroup> {
    arthur_r_group(&induced_parameter(pi)?, pi.ambient_group())
}

/// Result of the brute-force cross-check, when requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleCheck {
    NotRun,
    Rank(u32),
    /// The centralizer was too large for enumeration.
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub ks_rank: u32,
    pub arthur_rank: u32,
    pub agree: bool,
    pub witness: Vec<WitnessRow>,
    pub parameter: Parameter,
    pub centralizer: CentralizerDescriptor,
    pub oracle: OracleCheck,
}

impl VerificationResult {
    /// `None` unless the oracle produced a rank.
    pub fn oracle_agrees(&self) -> Option<bool> {
        match self.oracle {
            OracleCheck::Rank(r) => Some(r == self.arthur_rank && r == self.ks_rank),
            _ => None,
        }
    }

    /// Agreement of every side that was computed.
    pub fn all_agree(&self) -> bool {
        self.agree && self.oracle_agrees().unwrap_or(true)
    }
}

/// Runs both sides independently and optionally the Weyl-group oracle on
/// the Arthur side's centralizer.
pub fn verify_theorem(pi: &InducingData, oracle: Option<OracleOptions>) -> Result<VerificationResult> {
    let witness = witness(pi)?;
    let ks_rank = witness.iter().filter(|w| w.counted).count() as u32;
    let parameter = induced_parameter(pi)?;
    let group = pi.ambient_group();
    let arthur_rank = arthur_r_group(&parameter, group)?.rank;
    let centralizer = centralizer(&parameter, group)?;
    let oracle = match oracle {
        None => OracleCheck::NotRun,
        Some(options) => match weyl_quotient(&centralizer, options) {
            Ok(r) => OracleCheck::Rank(r.rank),
            Err(Error::BoundExceeded(msg)) => OracleCheck::Skipped(msg),
            Err(e) => return Err(e),
        },
    };
    Ok(VerificationResult {
        ks_rank,
        arthur_rank,
        agree: ks_rank == arthur_rank,
        witness,
        parameter,
        centralizer,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::JordanBlock;
    use crate::param::{CuspidalSymbol, DualityType};

    fn orth(label: &str, dim: u32) -> CuspidalSymbol {
        CuspidalSymbol::self_dual(label, dim, DualityType::Orthogonal).unwrap()
    }

    fn sympl(label: &str, dim: u32) -> CuspidalSymbol {
        CuspidalSymbol::self_dual(label, dim, DualityType::Symplectic).unwrap()
    }

    fn s(rho: &CuspidalSymbol, a: u32) -> Summand {
        Summand::new(rho.clone(), a).unwrap()
    }

    /// σ of Sp(4) with Jord = {(triv,3), (eta,1), (xi,1)}.
    fn sigma() -> JordanData {
        JordanData::new(
            GroupSpec::sp(2),
            [
                JordanBlock::new(orth("triv", 1), 3),
                JordanBlock::new(orth("eta", 1), 1),
                JordanBlock::new(orth("xi", 1), 1),
            ],
        )
    }

    fn ranks(pi: &InducingData) -> (u32, u32) {
        let r = verify_theorem(pi, Some(OracleOptions::default())).unwrap();
        assert!(r.all_agree(), "{pi}: {r:?}");
        (r.ks_rank, r.arthur_rank)
    }

    #[test]
    fn non_self_dual_deltas_never_count() {
        let chi = CuspidalSymbol::not_self_dual("chi", 1, "chi~").unwrap();
        let tau = CuspidalSymbol::not_self_dual("tau", 2, "tau~").unwrap();
        let pi = InducingData::new(vec![(s(&chi, 2), 3), (s(&tau, 1), 1)], sigma());
        assert_eq!(ranks(&pi), (0, 0));
        assert_eq!(pi.ambient_group(), GroupSpec::sp(2 + 6 + 2));
    }

    #[test]
    fn jordan_block_delta_is_irreducible() {
        let pi = InducingData::new(vec![(s(&orth("triv", 1), 3), 1)], sigma());
        assert_eq!(ranks(&pi), (0, 0));
        let phi = induced_parameter(&pi).unwrap();
        assert_eq!(phi.multiplicity(&s(&orth("triv", 1), 3)), 3);
    }

    #[test]
    fn same_type_outside_jordan_counts() {
        let pi = InducingData::new(vec![(s(&orth("triv", 1), 1), 1)], sigma());
        assert_eq!(ranks(&pi), (1, 1));
        let phi = induced_parameter(&pi).unwrap();
        assert_eq!(phi.multiplicity(&s(&orth("triv", 1), 1)), 2);
    }

    #[test]
    fn mixed_instance() {
        let pi = InducingData::new(
            vec![
                (s(&sympl("rho", 2), 2), 1),
                (s(&sympl("rho", 2), 1), 2),
                (s(&orth("triv", 1), 3), 1),
            ],
            sigma(),
        );
        assert_eq!(ranks(&pi), (1, 1));
        let w = witness(&pi).unwrap();
        assert_eq!(
            w.iter().map(|r| (r.same_type, r.in_jordan, r.counted)).collect::<Vec<_>>(),
            vec![
                (Some(true), false, true),
                (Some(false), false, false),
                (Some(true), true, false),
            ]
        );
    }

    #[test]
    fn pure_sigma_and_trivial_residual() {
        let pi = InducingData::new(vec![], sigma());
        assert_eq!(ranks(&pi), (0, 0));

        let so1 = JordanData::new(GroupSpec::so_odd(0), []);
        let pi = InducingData::new(vec![(s(&orth("triv", 1), 2), 2)], so1);
        assert_eq!(ranks(&pi), (1, 1));

        let o0 = JordanData::new(GroupSpec::o_even(0), []);
        let pi = InducingData::new(vec![(s(&orth("triv", 1), 1), 1), (s(&orth("eta", 1), 3), 1)], o0);
        assert_eq!(ranks(&pi), (2, 2));
    }

    #[test]
    fn invalid_instances() {
        let rho = orth("triv", 1);
        let dup = InducingData::new(vec![(s(&rho, 1), 1), (s(&rho, 1), 2)], sigma());
        assert!(validate_inducing(&dup).has_rule(Rule::DistinctDeltas));
        assert!(matches!(
            knapp_stein_r_group(&dup),
            Err(Error::InvalidInducingData(_))
        ));

        let clash = InducingData::new(vec![(s(&orth("triv", 2), 1), 1)], sigma());
        assert!(validate_inducing(&clash).has_rule(Rule::Symbol));

        let zero = InducingData::new(vec![(s(&rho, 1), 0)], sigma());
        assert!(validate_inducing(&zero).has_rule(Rule::LeviShape));

        let o2 = JordanData::new(
            GroupSpec::o_even(1),
            [JordanBlock::new(orth("a", 1), 1), JordanBlock::new(orth("b", 1), 1)],
        );
        let pi = InducingData::new(vec![(s(&rho, 1), 1)], o2);
        let report = validate_inducing(&pi);
        assert!(report.has_rule(Rule::LeviShape));
        assert!(report.has_rule(Rule::NoDiscreteSeries));

        let u = InducingData::new(vec![], JordanData::new(GroupSpec::unitary(1), []));
        assert!(validate_inducing(&u).has_rule(Rule::Family));
    }

    #[test]
    fn levi_shape_display() {
        let pi = InducingData::new(vec![(s(&sympl("rho", 2), 2), 2)], sigma());
        let shape = pi.levi_shape();
        assert_eq!(shape.gl_blocks, vec![4, 4]);
        assert!(shape.validate().is_valid());
        assert_eq!(shape.to_string(), "GL(4) × GL(4) × Sp(4)");
    }
}
