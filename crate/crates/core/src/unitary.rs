//! Unitary groups `U(n)` relative to a quadratic extension: conjugate-duality
//! signs, centralizers of `φ_E`, and the R-groups of maximal Levis
//! `Res GL_k × U(ℓ)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Neg;

use crate::centralizer::{CentralizerDescriptor, ElementaryTwoGroup, Factor, FactorKind};
use crate::error::{Error, Result};
use crate::report::{Rule, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn parity(k: u32) -> Self {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn from_i64(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConjugateDuality {
    NotConjSelfDual { dual_label: String },
    ConjSelfDual { lambda: Sign },
}

/// `λ_{φ⊗S_a} = (-1)^{a+1} λ_φ`.
pub fn lambda_tensor(lambda: Sign, a: u32) -> Sign {
    Sign::parity(a + 1) * lambda
}

/// `λ_{φ_ρ⊗S_a} = (-1)^{n+1}`.
pub fn unitary_jordan_condition(lambda_rho: Sign, a: u32, n: u32) -> bool {
    lambda_tensor(lambda_rho, a) == Sign::parity(n + 1)
}

/// A supercuspidal `ρ` of `GL(d, E)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitaryCuspidalSymbol {
    label: String,
    dim: u32,
    duality: ConjugateDuality,
    /// Whether `λ_{φ_ρ} = λ_ρ` is assumed. Always true for odd `d`.
    lambda_rho_matches: bool,
}

impl UnitaryCuspidalSymbol {
    pub fn new(
        label: impl Into<String>,
        dim: u32,
        duality: ConjugateDuality,
        lambda_rho_matches: bool,
    ) -> Result<Self> {
        let label = label.into();
        let invalid = |reason: &str| Error::InvalidSymbol {
            label: label.clone(),
            reason: reason.to_string(),
        };
        if label.is_empty() {
            return Err(invalid("empty label"));
        }
        if dim == 0 {
            return Err(invalid("dimension must be positive"));
        }
        if dim % 2 == 1 && !lambda_rho_matches {
            return Err(invalid("λ_{φ_ρ} = λ_ρ holds automatically for odd d"));
        }
        if let ConjugateDuality::NotConjSelfDual { dual_label } = &duality {
            if dual_label == &label || dual_label.is_empty() {
                return Err(invalid("conjugate dual needs a distinct label"));
            }
        }
        Ok(Self {
            label,
            dim,
            duality,
            lambda_rho_matches,
        })
    }

    pub fn conj_self_dual(label: impl Into<String>, dim: u32, lambda: Sign) -> Result<Self> {
        Self::new(label, dim, ConjugateDuality::ConjSelfDual { lambda }, true)
    }

    pub fn not_conj_self_dual(
        label: impl Into<String>,
        dim: u32,
        dual_label: impl Into<String>,
    ) -> Result<Self> {
        Self::new(
            label,
            dim,
            ConjugateDuality::NotConjSelfDual {
                dual_label: dual_label.into(),
            },
            true,
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn duality(&self) -> &ConjugateDuality {
        &self.duality
    }

    pub fn lambda_rho_matches(&self) -> bool {
        self.lambda_rho_matches
    }

    pub fn lambda(&self) -> Option<Sign> {
        match self.duality {
            ConjugateDuality::ConjSelfDual { lambda } => Some(lambda),
            ConjugateDuality::NotConjSelfDual { .. } => None,
        }
    }

    /// `^θρ̃`. Conjugate-self-dual symbols are their own dual.
    pub fn conj_dual(&self) -> Self {
        match &self.duality {
            ConjugateDuality::ConjSelfDual { .. } => self.clone(),
            ConjugateDuality::NotConjSelfDual { dual_label } => Self {
                label: dual_label.clone(),
                dim: self.dim,
                duality: ConjugateDuality::NotConjSelfDual {
                    dual_label: self.label.clone(),
                },
                lambda_rho_matches: self.lambda_rho_matches,
            },
        }
    }
}

/// `φ_ρ ⊗ S_a` as a representation of `W_E × SL(2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitarySummand {
    pub rho: UnitaryCuspidalSymbol,
    pub a: u32,
}

impl UnitarySummand {
    pub fn new(rho: UnitaryCuspidalSymbol, a: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidSymbol {
                label: rho.label,
                reason: "a must be positive".into(),
            });
        }
        Ok(Self { rho, a })
    }

    pub fn dim(&self) -> u32 {
        self.rho.dim * self.a
    }

    pub fn duality(&self) -> ConjugateDuality {
        match &self.rho.duality {
            ConjugateDuality::ConjSelfDual { lambda } => ConjugateDuality::ConjSelfDual {
                lambda: lambda_tensor(*lambda, self.a),
            },
            other => other.clone(),
        }
    }

    pub fn conj_dual(&self) -> Self {
        Self {
            rho: self.rho.conj_dual(),
            a: self.a,
        }
    }

    fn key(&self) -> (String, u32) {
        (self.rho.label.clone(), self.a)
    }
}

impl fmt::Display for UnitarySummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗S_{}", self.rho.label, self.a)
    }
}

/// Label → symbol bookkeeping that rejects contradictory declarations.
#[derive(Default)]
struct UnitarySymbolTable {
    symbols: BTreeMap<String, UnitaryCuspidalSymbol>,
}

impl UnitarySymbolTable {
    fn insert(&mut self, rho: &UnitaryCuspidalSymbol, report: &mut ValidationReport) {
        for s in [rho.clone(), rho.conj_dual()] {
            match self.symbols.get(&s.label) {
                Some(existing) if existing != &s => report.push(
                    Rule::Symbol,
                    format!("symbol `{}` declared with conflicting attributes", s.label),
                ),
                Some(_) => {}
                None => {
                    self.symbols.insert(s.label.clone(), s);
                }
            }
        }
    }
}

fn check_lambda_assumption(rho: &UnitaryCuspidalSymbol, report: &mut ValidationReport) {
    if rho.lambda().is_some() && !rho.lambda_rho_matches {
        report.push(
            Rule::LambdaAssumption,
            format!(
                "`{}` has even dimension and λ_(φ_ρ) = λ_ρ is not asserted",
                rho.label
            ),
        );
    }
}

/// Jordan blocks of a discrete series of `U(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitaryJordanData {
    pub n: u32,
    pub blocks: Vec<(UnitaryCuspidalSymbol, u32)>,
}

impl UnitaryJordanData {
    pub fn new(n: u32, blocks: Vec<(UnitaryCuspidalSymbol, u32)>) -> Self {
        Self { n, blocks }
    }

    pub fn contains(&self, rho: &UnitaryCuspidalSymbol, a: u32) -> bool {
        self.blocks.iter().any(|(r, b)| r.label == rho.label && *b == a)
    }
}

pub fn validate_unitary_jordan(sigma: &UnitaryJordanData) -> ValidationReport {
    let mut report = ValidationReport::new();
    let mut table = UnitarySymbolTable::default();
    let mut seen = BTreeSet::new();
    let mut total = 0;
    for (rho, a) in &sigma.blocks {
        table.insert(rho, &mut report);
        total += rho.dim * a;
        if *a == 0 {
            report.push(Rule::Symbol, format!("block ({}, 0) needs a positive a", rho.label));
            continue;
        }
        if !seen.insert((rho.label.as_str(), *a)) {
            report.push(
                Rule::MultiplicityFree,
                format!("block ({}, {a}) appears more than once", rho.label),
            );
        }
        check_lambda_assumption(rho, &mut report);
        match rho.lambda() {
            None => report.push(
                Rule::SelfDual,
                format!("block ({}, {a}) is not conjugate-self-dual", rho.label),
            ),
            Some(lambda) if !unitary_jordan_condition(lambda, *a, sigma.n) => report.push(
                Rule::UnitaryParity,
                format!(
                    "λ of {}⊗S_{a} is {} but U({}) needs {}",
                    rho.label,
                    lambda_tensor(lambda, *a),
                    sigma.n,
                    Sign::parity(sigma.n + 1)
                ),
            ),
            Some(_) => {}
        }
    }
    if total != sigma.n {
        report.push(
            Rule::Dimension,
            format!("blocks have total dimension {total} but U({}) needs {}", sigma.n, sigma.n),
        );
    }
    report
}

/// `S_φ ≅ ∏ C(mᵢφᵢ)` for `φ_E = ⊕ mᵢφᵢ` of dimension `n`. Conjugate-dual
/// pairs are listed as two separate summands.
pub fn unitary_centralizer(
    phi_e: &[(UnitarySummand, u32)],
    n: u32,
) -> Result<CentralizerDescriptor> {
    let found: u32 = phi_e.iter().map(|(s, m)| s.dim() * m).sum();
    if found != n {
        return Err(Error::DimensionMismatch { expected: n, found });
    }
    let orthogonal = Sign::parity(n + 1);
    let factors = phi_e
        .iter()
        .map(|(s, m)| {
            let kind = match s.duality() {
                ConjugateDuality::NotConjSelfDual { .. } => FactorKind::GeneralLinear,
                ConjugateDuality::ConjSelfDual { lambda } if lambda == orthogonal => {
                    FactorKind::FullOrthogonal
                }
                ConjugateDuality::ConjSelfDual { .. } => {
                    if m % 2 == 1 {
                        return Err(Error::OddMultiplicitySp {
                            summand: s.to_string(),
                            multiplicity: *m,
                        });
                    }
                    FactorKind::Symplectic
                }
            };
            Factor::new(kind, *m, s.dim())
        })
        .collect::<Result<Vec<_>>>()?;
    CentralizerDescriptor::new(factors, None)
}

/// Which of the three situations of the maximal-Levi analysis applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitaryCase {
    NotConjSelfDual,
    JordanBlock,
    ParityFails,
    Reducible,
}

impl fmt::Display for UnitaryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitaryCase::NotConjSelfDual => "ρ not conjugate-self-dual",
            UnitaryCase::JordanBlock => "(ρ, a) is a Jordan block of σ",
            UnitaryCase::ParityFails => "(ρ, a) fails the sign condition",
            UnitaryCase::Reducible => "δ ⋊ σ reducible",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryVerificationResult {
    pub ks_rank: u32,
    pub arthur_rank: u32,
    pub agree: bool,
    pub case: UnitaryCase,
    /// Rank of `U(n)` carrying `δ ⋊ σ`.
    pub ambient_rank: u32,
    pub phi_e: Vec<(UnitarySummand, u32)>,
    pub centralizer: CentralizerDescriptor,
}

/// `δ ⊗ σ` on `Res GL_k × U(ℓ)`, with at most one δ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitaryInducingData {
    pub deltas: Vec<(UnitarySummand, u32)>,
    pub sigma: UnitaryJordanData,
}

impl UnitaryInducingData {
    pub fn ambient_rank(&self) -> u32 {
        self.sigma.n + self.deltas.iter().map(|(d, m)| 2 * d.dim() * m).sum::<u32>()
    }
}

pub fn validate_unitary_inducing(pi: &UnitaryInducingData) -> ValidationReport {
    let mut report = validate_unitary_jordan(&pi.sigma);
    match pi.deltas.as_slice() {
        [(_, 1)] => {}
        _ => report.push(
            Rule::MaximalLevi,
            format!(
                "only maximal Levis Res GL_k × U(ℓ) are supported; got {} GL blocks",
                pi.deltas.iter().map(|(_, m)| m).sum::<u32>()
            ),
        ),
    }
    let mut table = UnitarySymbolTable::default();
    let mut scratch = ValidationReport::new();
    for (rho, _) in &pi.sigma.blocks {
        table.insert(rho, &mut scratch);
    }
    for (delta, _) in &pi.deltas {
        table.insert(&delta.rho, &mut report);
        check_lambda_assumption(&delta.rho, &mut report);
    }
    report
}

/// Both R-group ranks for `δ(ρ, a) ⋊ σ` with `δ` on `GL(d·a, E)`.
pub fn unitary_maximal_levi_r_group(
    delta: &UnitarySummand,
    sigma: &UnitaryJordanData,
) -> Result<UnitaryVerificationResult> {
    let pi = UnitaryInducingData {
        deltas: vec![(delta.clone(), 1)],
        sigma: sigma.clone(),
    };
    validate_unitary_inducing(&pi).into_result(Error::InvalidUnitaryData)?;

    let rho = &delta.rho;
    let case = match rho.lambda() {
        None => UnitaryCase::NotConjSelfDual,
        Some(_) if sigma.contains(rho, delta.a) => UnitaryCase::JordanBlock,
        Some(lambda) if !unitary_jordan_condition(lambda, delta.a, sigma.n) => {
            UnitaryCase::ParityFails
        }
        Some(_) => UnitaryCase::Reducible,
    };
    let ks_rank = u32::from(case == UnitaryCase::Reducible);

    let mut merged: BTreeMap<(String, u32), (UnitarySummand, u32)> = BTreeMap::new();
    let mut add = |s: UnitarySummand, m: u32| {
        merged.entry(s.key()).or_insert((s, 0)).1 += m;
    };
    for (rho, a) in &sigma.blocks {
        add(UnitarySummand::new(rho.clone(), *a)?, 1);
    }
    if rho.lambda().is_some() {
        add(delta.clone(), 2);
    } else {
        add(delta.clone(), 1);
        add(delta.conj_dual(), 1);
    }
    let phi_e: Vec<(UnitarySummand, u32)> = merged.into_values().collect();
    let ambient_rank = pi.ambient_rank();
    let centralizer = unitary_centralizer(&phi_e, ambient_rank)?;
    let arthur_rank = unitary_r_group(&centralizer).rank;
    Ok(UnitaryVerificationResult {
        ks_rank,
        arthur_rank,
        agree: ks_rank == arthur_rank,
        case,
        ambient_rank,
        phi_e,
        centralizer,
    })
}

/// `O(even) ↦ Z/2`, every other factor trivial.
pub fn unitary_r_group(desc: &CentralizerDescriptor) -> ElementaryTwoGroup {
    let rank = desc
        .factors
        .iter()
        .filter(|f| f.kind == FactorKind::FullOrthogonal && f.size % 2 == 0)
        .count();
    ElementaryTwoGroup::new(rank as u32)
}
