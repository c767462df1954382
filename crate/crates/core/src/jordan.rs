//! Discrete series of classical groups described by their Jordan blocks.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::param::{tensor_type, CuspidalSymbol, GroupFamily, GroupSpec, Parameter, Summand, SymbolTable};
use crate::report::{Rule, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanBlock {
    pub rho: CuspidalSymbol,
    pub a: u32,
}

impl JordanBlock {
    pub fn new(rho: CuspidalSymbol, a: u32) -> Self {
        Self { rho, a }
    }

    pub fn dim(&self) -> u32 {
        self.rho.dim() * self.a
    }

    pub fn matches(&self, rho: &CuspidalSymbol, a: u32) -> bool {
        self.rho.label() == rho.label() && self.a == a
    }
}

/// `Jord(σ)` for a discrete series `σ` of `group`. Stands in for `σ` itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JordanData {
    group: GroupSpec,
    blocks: Vec<JordanBlock>,
}

impl JordanData {
    /// Blocks are sorted; duplicates are kept so validation can report them.
    pub fn new(group: GroupSpec, blocks: impl IntoIterator<Item = JordanBlock>) -> Self {
        let mut blocks: Vec<JordanBlock> = blocks.into_iter().collect();
        blocks.sort();
        Self { group, blocks }
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn blocks(&self) -> &[JordanBlock] {
        &self.blocks
    }

    pub fn contains(&self, rho: &CuspidalSymbol, a: u32) -> bool {
        self.blocks.iter().any(|b| b.matches(rho, a))
    }

    /// `Jord_ρ(σ)`.
    pub fn jord_rho(&self, label: &str) -> Vec<u32> {
        self.blocks
            .iter()
            .filter(|b| b.rho.label() == label)
            .map(|b| b.a)
            .collect()
    }

    pub fn total_dim(&self) -> u32 {
        self.blocks.iter().map(JordanBlock::dim).sum()
    }
}

pub fn validate_jordan(sigma: &JordanData) -> ValidationReport {
    let mut report = ValidationReport::new();
    let group = sigma.group;
    let Some(dual_type) = group.dual_type() else {
        report.push(Rule::Family, "unitary Jordan data is handled by the unitary module");
        return report;
    };
    if group.family == GroupFamily::EvenOrthogonal && group.rank == 1 {
        report.push(
            Rule::NoDiscreteSeries,
            "O(2) has no square-integrable representations",
        );
    }

    let mut table = SymbolTable::default();
    let mut seen = BTreeSet::new();
    let mut parities: BTreeMap<&str, BTreeSet<u32>> = BTreeMap::new();
    for b in &sigma.blocks {
        if let Err(e) = table.insert(&b.rho) {
            report.push(Rule::Symbol, e.to_string());
        }
        if b.a == 0 {
            report.push(Rule::Symbol, format!("block ({}, 0) needs a positive a", b.rho.label()));
            continue;
        }
        if !seen.insert((b.rho.label(), b.a)) {
            report.push(
                Rule::MultiplicityFree,
                format!("block ({}, {}) appears more than once", b.rho.label(), b.a),
            );
        }
        if !b.rho.is_self_dual() {
            report.push(
                Rule::SelfDual,
                format!("block ({}, {}) has a non-self-dual ρ", b.rho.label(), b.a),
            );
            continue;
        }
        let t = tensor_type(b.rho.duality(), b.a);
        if t != dual_type {
            report.push(
                Rule::TypeParity,
                format!(
                    "{}⊗S_{} is {t} but the dual group of {group} is {dual_type}",
                    b.rho.label(),
                    b.a
                ),
            );
        }
        parities.entry(b.rho.label()).or_default().insert(b.a % 2);
    }
    for (label, p) in parities {
        if p.len() > 1 {
            report.push(
                Rule::MixedParity,
                format!("Jord_{label} mixes even and odd a: {:?}", sigma.jord_rho(label)),
            );
        }
    }
    if sigma.total_dim() != group.dual_dimension() {
        report.push(
            Rule::Dimension,
            format!(
                "blocks have total dimension {} but {group} needs {}",
                sigma.total_dim(),
                group.dual_dimension()
            ),
        );
    }
    report
}

/// Whether `ρ ⊗ S_a` has the type of the dual group of `group`.
pub fn jordan_parity_ok(rho: &CuspidalSymbol, a: u32, group: GroupSpec) -> Result<bool> {
    if !rho.is_self_dual() {
        return Err(Error::NotSelfDualInput {
            label: rho.label().to_string(),
        });
    }
    Ok(tensor_type(rho.duality(), a) == group.classical_dual_type()?)
}

/// Whether `δ(ρ, a) ⋊ σ` reduces: `ρ ⊗ S_a` has the dual group's type and
/// `(ρ, a)` is not already a Jordan block of `σ`.
pub fn is_reducible(rho: &CuspidalSymbol, a: u32, sigma: &JordanData) -> Result<bool> {
    if !rho.is_self_dual() {
        return Err(Error::NotSelfDualInput {
            label: rho.label().to_string(),
        });
    }
    validate_jordan(sigma).into_result(Error::InvalidJordanData)?;
    Ok(jordan_parity_ok(rho, a, sigma.group)? && !sigma.contains(rho, a))
}

/// `φ_σ = ⊕ ρ ⊗ S_a` over the Jordan blocks.
pub fn parameter_of_sigma(sigma: &JordanData) -> Result<Parameter> {
    validate_jordan(sigma).into_result(Error::InvalidJordanData)?;
    Parameter::canonicalize(
        sigma
            .blocks
            .iter()
            .map(|b| Ok((Summand::new(b.rho.clone(), b.a)?, 1)))
            .collect::<Result<Vec<_>>>()?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{validate_parameter, DualityType};

    fn orth(label: &str, dim: u32) -> CuspidalSymbol {
        CuspidalSymbol::self_dual(label, dim, DualityType::Orthogonal).unwrap()
    }

    fn sympl(label: &str, dim: u32) -> CuspidalSymbol {
        CuspidalSymbol::self_dual(label, dim, DualityType::Symplectic).unwrap()
    }

    fn jd(group: GroupSpec, blocks: &[(&CuspidalSymbol, u32)]) -> JordanData {
        JordanData::new(group, blocks.iter().map(|(r, a)| JordanBlock::new((*r).clone(), *a)))
    }

    #[test]
    fn steinberg_type_block_is_valid() {
        for m in 0..5 {
            let sigma = jd(GroupSpec::sp(m), &[(&orth("triv", 1), 2 * m + 1)]);
            assert!(validate_jordan(&sigma).is_valid(), "m = {m}");
        }
    }

    #[test]
    fn mixed_parity_is_reported() {
        let rho = sympl("rho", 2);
        let sigma = jd(GroupSpec::sp(2), &[(&rho, 2), (&rho, 3)]);
        let report = validate_jordan(&sigma);
        assert!(report.has_rule(Rule::MixedParity));
        assert!(report.has_rule(Rule::TypeParity));
    }

    #[test]
    fn o2_has_no_discrete_series() {
        let triv = orth("triv", 1);
        let eta = orth("eta", 1);
        let sigma = jd(GroupSpec::o_even(1), &[(&triv, 1), (&eta, 1)]);
        let report = validate_jordan(&sigma);
        assert!(report.has_rule(Rule::NoDiscreteSeries));
        assert_eq!(report.violations.len(), 1);
    }

    #[test]
    fn other_violations() {
        let triv = orth("triv", 1);
        let chi = CuspidalSymbol::not_self_dual("chi", 1, "chi~").unwrap();
        let report = validate_jordan(&jd(GroupSpec::sp(1), &[(&triv, 1), (&triv, 1), (&triv, 1)]));
        assert!(report.has_rule(Rule::MultiplicityFree));
        assert!(!report.has_rule(Rule::Dimension));
        let report = validate_jordan(&jd(GroupSpec::sp(1), &[(&chi, 3)]));
        assert!(report.has_rule(Rule::SelfDual));
        let report = validate_jordan(&jd(GroupSpec::sp(2), &[(&triv, 3)]));
        assert!(report.has_rule(Rule::Dimension));
        let clash = orth("triv", 3);
        let report = validate_jordan(&jd(GroupSpec::sp(2), &[(&triv, 1), (&clash, 1)]));
        assert!(report.has_rule(Rule::Symbol));
        let report = validate_jordan(&jd(GroupSpec::unitary(1), &[]));
        assert!(report.has_rule(Rule::Family));
    }

    #[test]
    fn parity_predicate() {
        let rho = sympl("rho", 2);
        let triv = orth("triv", 1);
        assert!(jordan_parity_ok(&rho, 2, GroupSpec::sp(3)).unwrap());
        assert!(jordan_parity_ok(&triv, 3, GroupSpec::sp(3)).unwrap());
        assert!(!jordan_parity_ok(&triv, 3, GroupSpec::so_odd(3)).unwrap());
        let chi = CuspidalSymbol::not_self_dual("chi", 1, "chi~").unwrap();
        assert!(matches!(
            jordan_parity_ok(&chi, 1, GroupSpec::sp(1)),
            Err(Error::NotSelfDualInput { .. })
        ));
    }

    #[test]
    fn reducibility_table() {
        let triv = orth("triv", 1);
        let eta = orth("eta", 1);
        let rho = sympl("rho", 2);
        let xi = orth("xi", 1);
        let sigma = jd(GroupSpec::sp(2), &[(&triv, 3), (&eta, 1), (&xi, 1)]);
        assert!(validate_jordan(&sigma).is_valid());
        assert!(!is_reducible(&triv, 3, &sigma).unwrap());
        assert!(is_reducible(&triv, 1, &sigma).unwrap());
        assert!(is_reducible(&rho, 2, &sigma).unwrap());
        assert!(!is_reducible(&rho, 1, &sigma).unwrap());
        assert!(!is_reducible(&triv, 2, &sigma).unwrap());

        let bad = jd(GroupSpec::sp(2), &[(&triv, 3)]);
        assert!(matches!(
            is_reducible(&triv, 1, &bad),
            Err(Error::InvalidJordanData(_))
        ));
    }

    #[test]
    fn parameter_of_sigma_examples() {
        let empty = JordanData::new(GroupSpec::so_odd(0), []);
        let p = parameter_of_sigma(&empty).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.total_dim(), 0);

        let triv = orth("triv", 1);
        let sigma = jd(GroupSpec::sp(0), &[(&triv, 1)]);
        let p = parameter_of_sigma(&sigma).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.entries()[0].summand.duality(), DualityType::Orthogonal);
        assert_eq!(p.total_dim(), 1);

        let rho = sympl("rho", 2);
        let sigma = jd(GroupSpec::sp(2), &[(&rho, 2), (&triv, 1)]);
        let p = parameter_of_sigma(&sigma).unwrap();
        let dims: Vec<u32> = p.entries().iter().map(|e| e.summand.dim()).collect();
        assert_eq!(dims, vec![4, 1]);
        assert!(validate_parameter(&p, sigma.group()).is_valid());
    }
}
