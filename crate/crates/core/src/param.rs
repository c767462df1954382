//! Formal algebra of irreducible summands `ρ ⊗ S_a` and of parameters built
//! from them: duality types, canonical form, validation against a dual group
//! and the bucket classification that drives the Arthur R-group.

use std::collections::btree_map::Entry as MapEntry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Rule, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupFamily {
    /// `Sp(2n, F)`, dual group `SO(2n+1, C)`.
    Symplectic,
    /// `SO(2n+1, F)`, dual group `Sp(2n, C)`.
    OddOrthogonal,
    /// `O(2n, F)`, dual group `O(2n, C)`.
    EvenOrthogonal,
    /// `U(n)` for a quadratic extension, dual group `GL(n, C)`.
    Unitary,
}

impl GroupFamily {
    pub const CLASSICAL: [GroupFamily; 3] = [
        GroupFamily::Symplectic,
        GroupFamily::OddOrthogonal,
        GroupFamily::EvenOrthogonal,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            GroupFamily::Symplectic => "sp",
            GroupFamily::OddOrthogonal => "so",
            GroupFamily::EvenOrthogonal => "o",
            GroupFamily::Unitary => "u",
        }
    }

    pub fn from_short_name(name: &str) -> Option<Self> {
        match name {
            "sp" => Some(GroupFamily::Symplectic),
            "so" => Some(GroupFamily::OddOrthogonal),
            "o" => Some(GroupFamily::EvenOrthogonal),
            "u" => Some(GroupFamily::Unitary),
            _ => None,
        }
    }
}

/// A group `G_n` of one of the supported families. Rank 0 is the trivial
/// group `G_0`, which only occurs as the residual factor of a Levi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: GroupFamily,
    pub rank: u32,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, rank: u32) -> Self {
        Self { family, rank }
    }

    pub fn sp(rank: u32) -> Self {
        Self::new(GroupFamily::Symplectic, rank)
    }

    pub fn so_odd(rank: u32) -> Self {
        Self::new(GroupFamily::OddOrthogonal, rank)
    }

    pub fn o_even(rank: u32) -> Self {
        Self::new(GroupFamily::EvenOrthogonal, rank)
    }

    pub fn unitary(rank: u32) -> Self {
        Self::new(GroupFamily::Unitary, rank)
    }

    /// Dimension `N` of the standard representation of the dual group.
    pub fn dual_dimension(&self) -> u32 {
        match self.family {
            GroupFamily::Symplectic => 2 * self.rank + 1,
            GroupFamily::OddOrthogonal | GroupFamily::EvenOrthogonal => 2 * self.rank,
            GroupFamily::Unitary => self.rank,
        }
    }

    /// The type of the form preserved by the dual group; `None` for `U(n)`.
    pub fn dual_type(&self) -> Option<DualityType> {
        match self.family {
            GroupFamily::Symplectic | GroupFamily::EvenOrthogonal => Some(DualityType::Orthogonal),
            GroupFamily::OddOrthogonal => Some(DualityType::Symplectic),
            GroupFamily::Unitary => None,
        }
    }

    /// Whether the dual group imposes `det = 1` on centralizers.
    pub fn has_det_constraint(&self) -> bool {
        matches!(
            self.family,
            GroupFamily::Symplectic | GroupFamily::OddOrthogonal
        )
    }

    pub(crate) fn classical_dual_type(&self) -> Result<DualityType> {
        self.dual_type().ok_or(Error::UnitaryFamily)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::Symplectic => write!(f, "Sp({})", 2 * self.rank),
            GroupFamily::OddOrthogonal => write!(f, "SO({})", 2 * self.rank + 1),
            GroupFamily::EvenOrthogonal => write!(f, "O({})", 2 * self.rank),
            GroupFamily::Unitary => write!(f, "U({})", self.rank),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DualityType {
    NotSelfDual,
    Orthogonal,
    Symplectic,
}

impl DualityType {
    pub fn is_self_dual(self) -> bool {
        self != DualityType::NotSelfDual
    }

    /// Type of the tensor product of two self-dual representations: like
    /// forms give a symmetric form, unlike forms an alternating one.
    fn times(self, other: DualityType) -> DualityType {
        match (self, other) {
            (DualityType::NotSelfDual, _) | (_, DualityType::NotSelfDual) => {
                DualityType::NotSelfDual
            }
            (x, y) if x == y => DualityType::Orthogonal,
            _ => DualityType::Symplectic,
        }
    }
}

impl fmt::Display for DualityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityType::NotSelfDual => "not self-dual",
            DualityType::Orthogonal => "orthogonal",
            DualityType::Symplectic => "symplectic",
        })
    }
}

/// Type of the `a`-dimensional irreducible representation `S_a` of `SL(2)`.
pub fn sl2_type(a: u32) -> DualityType {
    if a % 2 == 1 {
        DualityType::Orthogonal
    } else {
        DualityType::Symplectic
    }
}

/// Duality type of `ρ ⊗ S_a` given the type of `ρ`.
pub fn tensor_type(rho_type: DualityType, a: u32) -> DualityType {
    rho_type.times(sl2_type(a))
}

/// An irreducible unitary supercuspidal `ρ` of some `GL(d)`, kept as an
/// opaque label with declared dimension and duality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CuspidalSymbol {
    label: String,
    dim: u32,
    duality: DualityType,
    dual_label: Option<String>,
}

impl CuspidalSymbol {
    pub fn new(
        label: impl Into<String>,
        dim: u32,
        duality: DualityType,
        dual_label: Option<String>,
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
        if duality == DualityType::Symplectic && dim % 2 == 1 {
            return Err(invalid("a symplectic symbol must have even dimension"));
        }
        match (&duality, &dual_label) {
            (DualityType::NotSelfDual, None) => {
                return Err(invalid("a non-self-dual symbol needs a dual label"))
            }
            (DualityType::NotSelfDual, Some(d)) if *d == label || d.is_empty() => {
                return Err(invalid("the dual label must differ from the label"))
            }
            (DualityType::Orthogonal | DualityType::Symplectic, Some(_)) => {
                return Err(invalid("a self-dual symbol cannot carry a dual label"))
            }
            _ => {}
        }
        Ok(Self {
            label,
            dim,
            duality,
            dual_label,
        })
    }

    pub fn self_dual(label: impl Into<String>, dim: u32, duality: DualityType) -> Result<Self> {
        Self::new(label, dim, duality, None)
    }

    pub fn not_self_dual(
        label: impl Into<String>,
        dim: u32,
        dual_label: impl Into<String>,
    ) -> Result<Self> {
        Self::new(label, dim, DualityType::NotSelfDual, Some(dual_label.into()))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn duality(&self) -> DualityType {
        self.duality
    }

    pub fn dual_label(&self) -> Option<&str> {
        self.dual_label.as_deref()
    }

    pub fn is_self_dual(&self) -> bool {
        self.duality.is_self_dual()
    }

    /// The contragredient `ρ̃`.
    pub fn dual(&self) -> CuspidalSymbol {
        match &self.dual_label {
            None => self.clone(),
            Some(d) => CuspidalSymbol {
                label: d.clone(),
                dim: self.dim,
                duality: DualityType::NotSelfDual,
                dual_label: Some(self.label.clone()),
            },
        }
    }
}

impl PartialOrd for CuspidalSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CuspidalSymbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.label
            .cmp(&other.label)
            .then(self.dim.cmp(&other.dim))
            .then(self.duality.cmp(&other.duality))
            .then(self.dual_label.cmp(&other.dual_label))
    }
}

/// Tracks label → attributes and rejects contradictory declarations.
#[derive(Debug, Default)]
pub(crate) struct SymbolTable {
    symbols: HashMap<String, CuspidalSymbol>,
}

impl SymbolTable {
    pub(crate) fn insert(&mut self, symbol: &CuspidalSymbol) -> Result<()> {
        self.insert_one(symbol)?;
        if !symbol.is_self_dual() {
            self.insert_one(&symbol.dual())?;
        }
        Ok(())
    }

    fn insert_one(&mut self, symbol: &CuspidalSymbol) -> Result<()> {
        match self.symbols.get(symbol.label()) {
            Some(existing) if existing != symbol => Err(Error::InconsistentSymbol {
                label: symbol.label().to_string(),
            }),
            Some(_) => Ok(()),
            None => {
                self.symbols
                    .insert(symbol.label().to_string(), symbol.clone());
                Ok(())
            }
        }
    }
}

/// An irreducible summand `φ = ρ ⊗ S_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    rho: CuspidalSymbol,
    a: u32,
}

impl Summand {
    pub fn new(rho: CuspidalSymbol, a: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidSymbol {
                label: rho.label,
                reason: "S_a needs a positive a".into(),
            });
        }
        Ok(Self { rho, a })
    }

    pub fn rho(&self) -> &CuspidalSymbol {
        &self.rho
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn dim(&self) -> u32 {
        self.rho.dim * self.a
    }

    pub fn duality(&self) -> DualityType {
        tensor_type(self.rho.duality, self.a)
    }

    pub fn is_self_dual(&self) -> bool {
        self.rho.is_self_dual()
    }

    pub fn dual(&self) -> Summand {
        Summand {
            rho: self.rho.dual(),
            a: self.a,
        }
    }

    pub fn same_class(&self, other: &Summand) -> bool {
        self.rho.label == other.rho.label && self.a == other.a
    }

    fn key(&self) -> (String, u32) {
        (self.rho.label.clone(), self.a)
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗S_{}", self.rho.label, self.a)
    }
}

/// One canonical entry. For a non-self-dual summand the entry stands for
/// `m·ψ ⊕ m·ψ̃` and `summand` is the representative with the smaller label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Entry {
    pub summand: Summand,
    pub multiplicity: u32,
}

impl Entry {
    pub fn is_dual_pair(&self) -> bool {
        !self.summand.is_self_dual()
    }

    /// Dimension of the whole entry, both members of a dual pair included.
    pub fn total_dim(&self) -> u32 {
        let copies = if self.is_dual_pair() { 2 } else { 1 };
        copies * self.multiplicity * self.summand.dim()
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dual_pair() {
            write!(
                f,
                "{m}·{} ⊕ {m}·{}",
                self.summand,
                self.summand.dual(),
                m = self.multiplicity
            )
        } else {
            write!(f, "{}·{}", self.multiplicity, self.summand)
        }
    }
}

/// A parameter in canonical form: merged multiplicities, dual pairs stored
/// once, entries sorted by `(label, a)` of their representative.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Parameter {
    entries: Vec<Entry>,
}

impl Parameter {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Merges a raw multiset into canonical form.
    pub fn canonicalize<I>(raw: I) -> Result<Parameter>
    where
        I: IntoIterator<Item = (Summand, u32)>,
    {
        let mut table = SymbolTable::default();
        let mut merged: BTreeMap<(String, u32), (Summand, u32)> = BTreeMap::new();
        for (summand, multiplicity) in raw {
            if multiplicity == 0 {
                return Err(Error::ZeroMultiplicity {
                    summand: summand.to_string(),
                });
            }
            table.insert(summand.rho())?;
            match merged.entry(summand.key()) {
                MapEntry::Occupied(mut e) => e.get_mut().1 += multiplicity,
                MapEntry::Vacant(e) => {
                    e.insert((summand, multiplicity));
                }
            }
        }

        let mut entries = Vec::with_capacity(merged.len());
        for (summand, multiplicity) in merged.values() {
            if summand.is_self_dual() {
                entries.push(Entry {
                    summand: summand.clone(),
                    multiplicity: *multiplicity,
                });
                continue;
            }
            let dual = summand.dual();
            let dual_multiplicity = merged.get(&dual.key()).map_or(0, |(_, m)| *m);
            if dual_multiplicity != *multiplicity {
                return Err(Error::UnpairedDual {
                    summand: summand.to_string(),
                    multiplicity: *multiplicity,
                    dual: dual.to_string(),
                    dual_multiplicity,
                });
            }
            if summand.rho().label() < dual.rho().label() {
                entries.push(Entry {
                    summand: summand.clone(),
                    multiplicity: *multiplicity,
                });
            }
        }
        Ok(Parameter { entries })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn total_dim(&self) -> u32 {
        self.entries.iter().map(Entry::total_dim).sum()
    }

    /// Expands dual pairs back into the raw multiset they stand for.
    pub fn expand(&self) -> Vec<(Summand, u32)> {
        let mut raw = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            raw.push((e.summand.clone(), e.multiplicity));
            if e.is_dual_pair() {
                raw.push((e.summand.dual(), e.multiplicity));
            }
        }
        raw
    }

    /// Multiplicity of `summand` in the parameter (0 when absent).
    pub fn multiplicity(&self, summand: &Summand) -> u32 {
        self.entries
            .iter()
            .find(|e| e.summand.same_class(summand) || e.summand.dual().same_class(summand))
            .map_or(0, |e| e.multiplicity)
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Checks a canonical parameter against a classical dual group.
pub fn validate_parameter(psi: &Parameter, group: GroupSpec) -> ValidationReport {
    let mut report = ValidationReport::new();
    let Some(dual_type) = group.dual_type() else {
        report.push(
            Rule::Family,
            "unitary parameters are validated by the unitary module",
        );
        return report;
    };
    // SO(1) and O(0) have the empty parameter.
    if psi.is_empty() && group.dual_dimension() > 0 {
        report.push(Rule::EmptyParameter, "a parameter needs at least one summand");
    }
    let total = psi.total_dim();
    if total != group.dual_dimension() {
        report.push(
            Rule::Dimension,
            format!(
                "total dimension {total} differs from the dual dimension {} of {group}",
                group.dual_dimension()
            ),
        );
    }
    for e in psi.entries() {
        let t = e.summand.duality();
        if t.is_self_dual() && t != dual_type && e.multiplicity % 2 == 1 {
            report.push(
                Rule::OppositeTypeMultiplicity,
                format!(
                    "{} is {t} (opposite type to the dual group) but has odd multiplicity {}",
                    e.summand, e.multiplicity
                ),
            );
        }
    }
    report
}

/// The four-bucket decomposition of a valid parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub dual_pairs: Vec<Entry>,
    pub opposite_type: Vec<Entry>,
    pub same_type_odd_mult: Vec<Entry>,
    pub same_type_even_mult: Vec<Entry>,
}

impl Classification {
    pub fn p(&self) -> usize {
        self.dual_pairs.len()
    }

    pub fn q(&self) -> usize {
        self.p() + self.opposite_type.len()
    }

    pub fn r(&self) -> usize {
        self.q() + self.same_type_odd_mult.len()
    }

    pub fn s(&self) -> usize {
        self.r() + self.same_type_even_mult.len()
    }

    /// Rank of the Arthur R-group: `d = s - r`.
    pub fn d(&self) -> usize {
        self.same_type_even_mult.len()
    }
}

pub fn classify(psi: &Parameter, group: GroupSpec) -> Result<Classification> {
    validate_parameter(psi, group).into_result(Error::InvalidParameter)?;
    let dual_type = group.classical_dual_type()?;
    let mut c = Classification {
        dual_pairs: Vec::new(),
        opposite_type: Vec::new(),
        same_type_odd_mult: Vec::new(),
        same_type_even_mult: Vec::new(),
    };
    for e in psi.entries() {
        let t = e.summand.duality();
        let bucket = if !t.is_self_dual() {
            &mut c.dual_pairs
        } else if t != dual_type {
            &mut c.opposite_type
        } else if e.multiplicity % 2 == 1 {
            &mut c.same_type_odd_mult
        } else {
            &mut c.same_type_even_mult
        };
        bucket.push(e.clone());
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orth(label: &str, dim: u32) -> CuspidalSymbol {
        CuspidalSymbol::self_dual(label, dim, DualityType::Orthogonal).unwrap()
    }

    fn sympl(label: &str, dim: u32) -> CuspidalSymbol {
        CuspidalSymbol::self_dual(label, dim, DualityType::Symplectic).unwrap()
    }

    fn nsd(label: &str, dual: &str, dim: u32) -> CuspidalSymbol {
        CuspidalSymbol::not_self_dual(label, dim, dual).unwrap()
    }

    fn s(rho: &CuspidalSymbol, a: u32) -> Summand {
        Summand::new(rho.clone(), a).unwrap()
    }

    /// Gram matrices of `S_1` (symmetric) and `S_2` (alternating), and the
    /// Kronecker product rule: the tensor of two forms is symmetric exactly
    /// when both factors have the same symmetry.
    fn kron(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let (n, m) = (a.len(), b.len());
        let mut out = vec![vec![0; n * m]; n * m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                    }
                }
            }
        }
        out
    }

    fn form_type(g: &[Vec<i64>]) -> DualityType {
        let n = g.len();
        let symmetric = (0..n).all(|i| (0..n).all(|j| g[i][j] == g[j][i]));
        let alternating = (0..n).all(|i| (0..n).all(|j| g[i][j] == -g[j][i]));
        match (symmetric, alternating) {
            (true, false) => DualityType::Orthogonal,
            (false, true) => DualityType::Symplectic,
            _ => unreachable!("degenerate test form"),
        }
    }

    #[test]
    fn tensor_type_matches_explicit_bilinear_forms() {
        let symmetric = vec![vec![1]];
        let alternating = vec![vec![0, 1], vec![-1, 0]];
        let forms = [
            (DualityType::Orthogonal, symmetric),
            (DualityType::Symplectic, alternating),
        ];
        for (rho_type, rho_form) in &forms {
            for (a, sa_form) in [(1u32, &forms[0].1), (2, &forms[1].1)] {
                let expected = form_type(&kron(rho_form, sa_form));
                assert_eq!(tensor_type(*rho_type, a), expected, "{rho_type} ⊗ S_{a}");
            }
        }
    }

    #[test]
    fn tensor_type_examples() {
        assert_eq!(tensor_type(DualityType::Symplectic, 2), DualityType::Orthogonal);
        assert_eq!(tensor_type(DualityType::Orthogonal, 1), DualityType::Orthogonal);
        assert_eq!(tensor_type(DualityType::Orthogonal, 2), DualityType::Symplectic);
        assert_eq!(tensor_type(DualityType::NotSelfDual, 3), DualityType::NotSelfDual);
    }

    #[test]
    fn symbol_invariants() {
        assert!(CuspidalSymbol::self_dual("x", 3, DualityType::Symplectic).is_err());
        assert!(CuspidalSymbol::not_self_dual("x", 1, "x").is_err());
        assert!(CuspidalSymbol::new("x", 1, DualityType::NotSelfDual, None).is_err());
        assert!(CuspidalSymbol::new("x", 2, DualityType::Orthogonal, Some("y".into())).is_err());
        assert!(CuspidalSymbol::self_dual("x", 0, DualityType::Orthogonal).is_err());
        let chi = nsd("chi", "chi~", 2);
        assert_eq!(chi.dual().dual(), chi);
        assert_eq!(chi.dual().label(), "chi~");
    }

    #[test]
    fn canonicalize_merges_multiplicities() {
        let phi = s(&orth("triv", 1), 1);
        let p = Parameter::canonicalize([(phi.clone(), 1), (phi.clone(), 2)]).unwrap();
        assert_eq!(p.entries(), &[Entry { summand: phi, multiplicity: 3 }]);
    }

    #[test]
    fn canonicalize_pairs_duals_under_smaller_label() {
        let chi = nsd("b", "a", 1);
        let p = Parameter::canonicalize([(s(&chi, 1), 2), (s(&chi.dual(), 1), 2)]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.entries()[0].multiplicity, 2);
        assert_eq!(p.entries()[0].summand.rho().label(), "a");
        assert_eq!(p.total_dim(), 4);
    }

    #[test]
    fn canonicalize_rejects_unpaired_duals() {
        let chi = nsd("chi", "chi~", 1);
        let err = Parameter::canonicalize([(s(&chi, 1), 2), (s(&chi.dual(), 1), 1)]).unwrap_err();
        assert!(matches!(err, Error::UnpairedDual { .. }));
        let err = Parameter::canonicalize([(s(&chi, 1), 1)]).unwrap_err();
        assert!(matches!(err, Error::UnpairedDual { dual_multiplicity: 0, .. }));
    }

    #[test]
    fn canonicalize_rejects_inconsistent_symbols_and_zero_multiplicity() {
        let a = orth("x", 1);
        let b = orth("x", 3);
        let err = Parameter::canonicalize([(s(&a, 1), 1), (s(&b, 1), 1)]).unwrap_err();
        assert_eq!(err, Error::InconsistentSymbol { label: "x".into() });

        // A declared dual that contradicts the pairing.
        let chi = nsd("chi", "psi", 1);
        let psi = orth("psi", 1);
        let err = Parameter::canonicalize([(s(&chi, 1), 1), (s(&psi, 1), 1)]).unwrap_err();
        assert!(matches!(err, Error::InconsistentSymbol { .. }));

        let err = Parameter::canonicalize([(s(&a, 1), 0)]).unwrap_err();
        assert!(matches!(err, Error::ZeroMultiplicity { .. }));
    }

    #[test]
    fn validate_sp_example() {
        // Sp(8): N = 9 = 2·(2·2) + 1.
        let psi = Parameter::canonicalize([
            (s(&sympl("rho", 2), 2), 2),
            (s(&orth("triv", 1), 1), 1),
        ])
        .unwrap();
        assert!(validate_parameter(&psi, GroupSpec::sp(4)).is_valid());
    }

    #[test]
    fn validate_reports_opposite_type_odd_multiplicity() {
        // SO(2n+1): dual type symplectic; an orthogonal summand with m = 3.
        let psi = Parameter::canonicalize([
            (s(&orth("triv", 1), 1), 3),
            (s(&orth("eta", 1), 1), 1),
        ])
        .unwrap();
        let report = validate_parameter(&psi, GroupSpec::so_odd(2));
        assert!(report.has_rule(Rule::OppositeTypeMultiplicity));
        assert!(!report.has_rule(Rule::Dimension));
    }

    #[test]
    fn validate_reports_dimension_and_empty() {
        let psi = Parameter::canonicalize([(s(&orth("triv", 1), 1), 2)]).unwrap();
        let report = validate_parameter(&psi, GroupSpec::o_even(2));
        assert!(report.has_rule(Rule::Dimension));
        assert!(validate_parameter(&Parameter::empty(), GroupSpec::o_even(0)).is_valid());
        assert!(validate_parameter(&Parameter::empty(), GroupSpec::so_odd(0)).is_valid());
        let report = validate_parameter(&Parameter::empty(), GroupSpec::sp(0));
        assert!(report.has_rule(Rule::EmptyParameter));
        assert!(validate_parameter(&psi, GroupSpec::unitary(2)).has_rule(Rule::Family));
    }

    #[test]
    fn classify_examples() {
        // m·ψ0 ⊕ m·ψ̃0 on O(2n): p = 1, nothing else.
        let chi = nsd("chi", "chi~", 1);
        let psi = Parameter::canonicalize([(s(&chi, 1), 2), (s(&chi.dual(), 1), 2)]).unwrap();
        let c = classify(&psi, GroupSpec::o_even(2)).unwrap();
        assert_eq!((c.p(), c.q(), c.r(), c.s(), c.d()), (1, 1, 1, 1, 0));

        // 2·ψ0 with ψ0 of the dual type.
        let psi = Parameter::canonicalize([(s(&orth("triv", 1), 1), 2)]).unwrap();
        let c = classify(&psi, GroupSpec::o_even(1)).unwrap();
        assert_eq!(c.d(), 1);

        // 3·ψ0 ⊕ 2·ψ1, both orthogonal, in O(2n) with N = 3 + 2·... use dims 2 and 1.
        let psi = Parameter::canonicalize([
            (s(&orth("r2", 2), 1), 3),
            (s(&orth("triv", 1), 1), 2),
        ])
        .unwrap();
        let c = classify(&psi, GroupSpec::o_even(4)).unwrap();
        assert_eq!(c.same_type_odd_mult.len(), 1);
        assert_eq!(c.d(), 1);

        let bad = Parameter::canonicalize([(s(&orth("triv", 1), 1), 1)]).unwrap();
        assert!(matches!(
            classify(&bad, GroupSpec::o_even(3)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn multiplicity_lookup_sees_both_members_of_a_pair() {
        let chi = nsd("chi", "chi~", 1);
        let psi = Parameter::canonicalize([(s(&chi, 1), 2), (s(&chi.dual(), 1), 2)]).unwrap();
        assert_eq!(psi.multiplicity(&s(&chi.dual(), 1)), 2);
        assert_eq!(psi.multiplicity(&s(&chi, 2)), 0);
    }
}
