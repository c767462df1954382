use std::fmt;

use serde::{Deserialize, Serialize};

/// The rule a violation breaks. Tags are stable and appear in CLI reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    Family,
    EmptyParameter,
    Dimension,
    OppositeTypeMultiplicity,
    SelfDual,
    TypeParity,
    MixedParity,
    MultiplicityFree,
    NoDiscreteSeries,
    Symbol,
    LeviShape,
    DistinctDeltas,
    UnitaryParity,
    LambdaAssumption,
    MaximalLevi,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::Family => "family",
            Rule::EmptyParameter => "empty-parameter",
            Rule::Dimension => "dimension",
            Rule::OppositeTypeMultiplicity => "opposite-type-multiplicity",
            Rule::SelfDual => "self-dual",
            Rule::TypeParity => "J-1'",
            Rule::MixedParity => "J-1",
            Rule::MultiplicityFree => "multiplicity-free",
            Rule::NoDiscreteSeries => "O(2)-no-discrete-series",
            Rule::Symbol => "symbol",
            Rule::LeviShape => "levi-shape",
            Rule::DistinctDeltas => "distinct-deltas",
            Rule::UnitaryParity => "J-1''",
            Rule::LambdaAssumption => "lambda-assumption",
            Rule::MaximalLevi => "maximal-levi",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: Rule,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.message)
    }
}

/// Violations found by a validation pass. Violations are data: an empty
/// report means the input is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, rule: Rule, message: impl Into<String>) {
        self.violations.push(Violation {
            rule,
            message: message.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_rule(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    /// Turns a non-empty report into an error built by `wrap`.
    pub fn into_result<E>(self, wrap: impl FnOnce(Self) -> E) -> Result<(), E> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(wrap(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  {v}")?;
        }
        Ok(())
    }
}
