//! NP problems as (alphabet, certificate length, verifier) triples, plus the
//! exhaustive solution enumerator that serves as ground truth everywhere.

mod format;
mod one_in_three;

pub use format::{parse_instance, Instance};
pub use one_in_three::{
    random_instance, Literal, OneInThreeInstance, ParityOneInThreeInstance, TripleClause,
};

use std::fmt;

use crate::certificate::{Alphabet, CertificateString, Symbol};
use crate::error::{Error, Result};

/// Default cap on the number of candidate certificates enumerated.
pub const DEFAULT_MAX_CANDIDATES: u64 = 1 << 24;
/// Default cap on the number of solutions collected.
pub const DEFAULT_MAX_SOLUTIONS: usize = 1_000_000;

/// A problem in NP, seen through its certificate space and verifier.
pub trait Problem {
    fn alphabet(&self) -> Alphabet;

    fn certificate_length(&self) -> usize;

    /// Verifier on raw symbols. Callers guarantee the length and that every
    /// symbol lies in [`alphabet`](Problem::alphabet).
    fn accepts(&self, cert: &[Symbol]) -> bool;

    fn verify(&self, cert: &CertificateString) -> Result<bool> {
        if *cert.alphabet() != self.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        if cert.len() != self.certificate_length() {
            return Err(Error::LengthMismatch {
                expected: self.certificate_length(),
                actual: cert.len(),
            });
        }
        Ok(self.accepts(cert.entries()))
    }
}

impl<P: Problem + ?Sized> Problem for &P {
    fn alphabet(&self) -> Alphabet {
        (**self).alphabet()
    }
    fn certificate_length(&self) -> usize {
        (**self).certificate_length()
    }
    fn accepts(&self, cert: &[Symbol]) -> bool {
        (**self).accepts(cert)
    }
}

type Verifier = Box<dyn Fn(&[Symbol]) -> bool + Send + Sync>;

/// A problem given directly by its verifier closure.
pub struct ProblemDescriptor {
    pub alphabet: Alphabet,
    pub certificate_length: usize,
    verifier: Verifier,
}

impl ProblemDescriptor {
    pub fn new(
        alphabet: Alphabet,
        certificate_length: usize,
        verifier: impl Fn(&[Symbol]) -> bool + Send + Sync + 'static,
    ) -> Self {
        ProblemDescriptor {
            alphabet,
            certificate_length,
            verifier: Box::new(verifier),
        }
    }
}

impl fmt::Debug for ProblemDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemDescriptor")
            .field("alphabet", &self.alphabet)
            .field("certificate_length", &self.certificate_length)
            .finish_non_exhaustive()
    }
}

impl Problem for ProblemDescriptor {
    fn alphabet(&self) -> Alphabet {
        self.alphabet.clone()
    }
    fn certificate_length(&self) -> usize {
        self.certificate_length
    }
    fn accepts(&self, cert: &[Symbol]) -> bool {
        (self.verifier)(cert)
    }
}

/// Guardrails for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_candidates: u64,
    pub max_solutions: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_candidates: DEFAULT_MAX_CANDIDATES,
            max_solutions: DEFAULT_MAX_SOLUTIONS,
        }
    }
}

impl Limits {
    pub fn with_max_solutions(self, max_solutions: usize) -> Self {
        Limits {
            max_solutions,
            ..self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Accepted certificates in lexicographic order (position 0 most
    /// significant).
    pub solutions: Vec<CertificateString>,
    /// Set when more than `cap` solutions exist; `solutions` then holds the
    /// first `cap`.
    pub truncated: bool,
}

impl Enumeration {
    /// The solution list, or an error if it was truncated.
    pub fn complete(self) -> Result<Vec<CertificateString>> {
        if self.truncated {
            Err(Error::SolutionCapReached {
                cap: self.solutions.len(),
            })
        } else {
            Ok(self.solutions)
        }
    }
}

/// Number of candidate certificates, `None` if it overflows `u128`.
pub fn candidate_count(alphabet_size: usize, length: usize) -> Option<u128> {
    let length = u32::try_from(length).ok()?;
    (alphabet_size as u128).checked_pow(length)
}

/// Enumerates every verifier-accepted certificate, stopping after `cap`.
pub fn enumerate_solutions<P: Problem + ?Sized>(
    problem: &P,
    cap: usize,
    max_candidates: u64,
) -> Result<Enumeration> {
    if cap == 0 {
        return Err(Error::InvalidArgument(
            "solution cap must be positive".into(),
        ));
    }
    let alphabet = problem.alphabet();
    let k = alphabet.len();
    let n = problem.certificate_length();
    match candidate_count(k, n) {
        Some(c) if c <= max_candidates as u128 => {}
        other => {
            return Err(Error::EnumerationLimit {
                candidates: other.map_or_else(|| format!("{k}^{n}"), |c| c.to_string()),
                limit: max_candidates,
            })
        }
    }

    let mut solutions = Vec::new();
    let mut current = vec![Symbol(0); n];
    loop {
        if problem.accepts(&current) {
            if solutions.len() == cap {
                return Ok(Enumeration {
                    solutions,
                    truncated: true,
                });
            }
            solutions.push(CertificateString::from_trusted(
                alphabet.clone(),
                current.clone(),
            ));
        }
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(Enumeration {
                    solutions,
                    truncated: false,
                });
            }
            pos -= 1;
            if current[pos].index() + 1 < k {
                current[pos].0 += 1;
                break;
            }
            current[pos] = Symbol(0);
        }
    }
}

/// [`enumerate_solutions`] under `limits`, failing if the cap is reached.
pub fn all_solutions<P: Problem + ?Sized>(
    problem: &P,
    limits: &Limits,
) -> Result<Vec<CertificateString>> {
    enumerate_solutions(problem, limits.max_solutions, limits.max_candidates)?.complete()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(e: &Enumeration) -> Vec<String> {
        e.solutions.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_clause_solutions() {
        let inst = OneInThreeInstance::new(
            3,
            vec![TripleClause::new([
                Literal::pos(0),
                Literal::pos(1),
                Literal::pos(2),
            ])],
        )
        .unwrap();
        let e = enumerate_solutions(&inst, 100, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(strings(&e), ["001", "010", "100"]);
        assert!(!e.truncated);
    }

    #[test]
    fn unconstrained_accepts_everything() {
        let inst = OneInThreeInstance::new(2, vec![]).unwrap();
        let e = enumerate_solutions(&inst, 100, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(strings(&e), ["00", "01", "10", "11"]);
    }

    #[test]
    fn contradiction_has_no_solutions() {
        // (v0,v0,v0) counts v0 three times: never exactly one.
        let inst =
            OneInThreeInstance::new(1, vec![TripleClause::new([Literal::pos(0); 3])]).unwrap();
        let e = enumerate_solutions(&inst, 100, DEFAULT_MAX_CANDIDATES).unwrap();
        assert!(e.solutions.is_empty());
    }

    #[test]
    fn truncation_is_flagged() {
        let inst = OneInThreeInstance::new(2, vec![]).unwrap();
        let e = enumerate_solutions(&inst, 3, DEFAULT_MAX_CANDIDATES).unwrap();
        assert!(e.truncated);
        assert_eq!(strings(&e), ["00", "01", "10"]);
        assert_eq!(e.complete(), Err(Error::SolutionCapReached { cap: 3 }));
    }

    #[test]
    fn refuses_oversized_spaces() {
        let inst = OneInThreeInstance::new(25, vec![]).unwrap();
        let err = enumerate_solutions(&inst, 10, DEFAULT_MAX_CANDIDATES).unwrap_err();
        assert_eq!(
            err,
            Error::EnumerationLimit {
                candidates: "33554432".into(),
                limit: 1 << 24
            }
        );
        assert!(err.to_string().contains("16777216"));
        let huge = ProblemDescriptor::new(Alphabet::of_size(62).unwrap(), 64, |_| true);
        assert!(matches!(
            enumerate_solutions(&huge, 10, DEFAULT_MAX_CANDIDATES),
            Err(Error::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn zero_cap_rejected() {
        let inst = OneInThreeInstance::new(1, vec![]).unwrap();
        assert!(enumerate_solutions(&inst, 0, DEFAULT_MAX_CANDIDATES).is_err());
    }

    #[test]
    fn zero_length_certificate() {
        let p = ProblemDescriptor::new(Alphabet::binary(), 0, |_| true);
        let e = enumerate_solutions(&p, 10, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(e.solutions.len(), 1);
        assert!(e.solutions[0].is_empty());
    }

    #[test]
    fn verify_checks_contract() {
        let inst = OneInThreeInstance::new(2, vec![]).unwrap();
        assert!(inst.verify(&CertificateString::from_bits(&[0, 1])).unwrap());
        assert!(matches!(
            inst.verify(&CertificateString::from_bits(&[0])),
            Err(Error::LengthMismatch { .. })
        ));
        let ternary =
            CertificateString::new(Alphabet::of_size(3).unwrap(), vec![Symbol(0), Symbol(2)])
                .unwrap();
        assert_eq!(inst.verify(&ternary), Err(Error::AlphabetMismatch));
    }
}
