//! Toolkit for the fewest clues problem: an exhaustive solver, reductions
//! with structural certificate maps, condition checkers, and forward and
//! backward clue transfer across conforming reductions.

pub mod certificate;
pub mod error;
pub mod experiment;
pub mod problems;
pub mod reduction;
pub mod solver;
pub mod transfer;

pub use certificate::{clue_size, project, satisfies, Alphabet, CertificateString, Clue, Symbol};
pub use error::{Error, Result};
pub use problems::{Limits, Problem};
pub use reduction::{Reduction, StructuralCertificateMap};
pub use solver::{FcpAnswer, FcpSolver, MinClue};
