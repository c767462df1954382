//! Symbolic calculator for discrete L-parameters of `Sp(2n)`, `SO(2n+1)`,
//! `O(2n)` and `U(n)` over a p-adic field: centralizers and Arthur R-groups
//! of parameters, Knapp–Stein R-groups from Jordan blocks, and a checker
//! that compares the two for discrete series of standard Levi subgroups.

pub mod centralizer;
pub mod error;
pub mod fuzz;
pub mod jordan;
pub mod levi;
pub mod oracle;
pub mod param;
pub mod report;
pub mod unitary;

pub use centralizer::{
    arthur_r_group, centralizer, component_group, presented_centralizer, resolve_constraint,
    CentralizerDescriptor, DetConstraint, DetTerm, ElementaryTwoGroup, Factor, FactorKind,
};
pub use error::{Error, Result};
pub use fuzz::{random_instance, run_fuzz, FuzzBounds, FuzzFailure, FuzzSummary};
pub use jordan::{
    is_reducible, jordan_parity_ok, parameter_of_sigma, validate_jordan, JordanBlock, JordanData,
};
pub use levi::{
    arthur_r_group_of_induced, induced_parameter, knapp_stein_r_group, validate_inducing,
    verify_theorem, witness, InducingData, LeviShape, OracleCheck, VerificationResult, WitnessRow,
};
pub use oracle::{weyl_of_factor, weyl_quotient, OracleOptions};
pub use param::{
    classify, sl2_type, tensor_type, validate_parameter, Classification, CuspidalSymbol,
    DualityType, Entry, GroupFamily, GroupSpec, Parameter, Summand,
};
pub use report::{Rule, ValidationReport, Violation};
pub use unitary::{
    lambda_tensor, unitary_centralizer, unitary_jordan_condition, unitary_maximal_levi_r_group,
    unitary_r_group, validate_unitary_inducing, validate_unitary_jordan, ConjugateDuality, Sign,
    UnitaryCase, UnitaryCuspidalSymbol, UnitaryInducingData, UnitaryJordanData, UnitarySummand,
    UnitaryVerificationResult,
};
