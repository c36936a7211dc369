//! Parsimonious reductions carrying a per-index description of how target
//! certificates are built from source certificates, and the checkers that
//! test those descriptions against enumerated solutions.

mod builtins;
mod check;
mod map;

pub use builtins::{
    build_duplicate_and_pad, build_parity_reduction, DuplicateAndPad, ParityExtension,
};
pub use check::{
    check_conditions, check_parsimony, CheckMode, CheckReport, CheckStatus, IndexReport,
    IndexVerdict, InferredCandidate, Pairing, ParsimonyReport, Refutation, RefutationKind,
    SolutionPair, Violation, REPORT_FORMAT, REPORT_VERSION,
};
pub use map::{apply_cert_map, IndexDependency, StructuralCertificateMap};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::problems::Problem;

/// A reduction `R` from source instances to target instances. Solutions
/// correspond through the identity solution map; when a structural map is
/// declared, it realizes that correspondence on certificate strings.
pub trait Reduction {
    type Source: Problem;
    type Target: Problem;

    fn name(&self) -> &str;

    fn transform(&self, source: &Self::Source) -> Self::Target;

    /// Declared certificate map for this source instance, if the reduction
    /// has one.
    fn certificate_map(&self, source: &Self::Source) -> Option<StructuralCertificateMap>;
}

/// Reductions selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinReduction {
    DupPad,
    Parity,
}

impl BuiltinReduction {
    pub const ALL: [BuiltinReduction; 2] = [BuiltinReduction::DupPad, BuiltinReduction::Parity];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinReduction::DupPad => "dup-pad",
            BuiltinReduction::Parity => "parity",
        }
    }
}

impl fmt::Display for BuiltinReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinReduction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BuiltinReduction::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownReduction(s.to_string()))
    }
}
