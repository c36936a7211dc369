use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Problem;
use crate::certificate::{Alphabet, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub variable: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(variable: usize) -> Self {
        Literal {
            variable,
            positive: true,
        }
    }

    pub fn neg(variable: usize) -> Self {
        Literal {
            variable,
            positive: false,
        }
    }

    pub fn eval(self, assignment: &[Symbol]) -> bool {
        (assignment[self.variable].0 != 0) == self.positive
    }

    /// DIMACS-style signed integer, variable `k` written as `k + 1`.
    pub fn to_dimacs(self) -> i64 {
        let v = self.variable as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn from_dimacs(value: i64) -> Option<Self> {
        if value == 0 {
            return None;
        }
        let variable = usize::try_from(value.unsigned_abs() - 1).ok()?;
        Some(Literal {
            variable,
            positive: value > 0,
        })
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            write!(f, "¬")?;
        }
        write!(f, "v{}", self.variable)
    }
}

/// Three literal occurrences; repeats are allowed and counted separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleClause(pub [Literal; 3]);

impl TripleClause {
    pub fn new(literals: [Literal; 3]) -> Self {
        TripleClause(literals)
    }

    pub fn literals(&self) -> &[Literal; 3] {
        &self.0
    }

    pub fn true_occurrences(&self, assignment: &[Symbol]) -> usize {
        self.0.iter().filter(|l| l.eval(assignment)).count()
    }

    pub fn is_satisfied(&self, assignment: &[Symbol]) -> bool {
        self.true_occurrences(assignment) == 1
    }
}

/// 1-in-3 SAT with literals: each clause needs exactly one true occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneInThreeInstance {
    num_vars: usize,
    clauses: Vec<TripleClause>,
}

impl OneInThreeInstance {
    pub fn new(num_vars: usize, clauses: Vec<TripleClause>) -> Result<Self> {
        for (k, clause) in clauses.iter().enumerate() {
            for lit in clause.literals() {
                if lit.variable >= num_vars {
                    return Err(Error::InvalidInstance(format!(
                        "clause {k} uses variable {} but there are only {num_vars}",
                        lit.variable
                    )));
                }
            }
        }
        Ok(OneInThreeInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[TripleClause] {
        &self.clauses
    }
}

impl Problem for OneInThreeInstance {
    fn alphabet(&self) -> Alphabet {
        Alphabet::binary()
    }

    fn certificate_length(&self) -> usize {
        self.num_vars
    }

    fn accepts(&self, cert: &[Symbol]) -> bool {
        self.clauses.iter().all(|c| c.is_satisfied(cert))
    }
}

/// 1-in-3 SAT whose certificate carries one extra trailing bit that must be
/// the XOR of all variable bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityOneInThreeInstance {
    pub inner: OneInThreeInstance,
}

impl ParityOneInThreeInstance {
    pub fn new(inner: OneInThreeInstance) -> Self {
        ParityOneInThreeInstance { inner }
    }

    pub fn parity_index(&self) -> usize {
        self.inner.num_vars
    }
}

impl Problem for ParityOneInThreeInstance {
    fn alphabet(&self) -> Alphabet {
        Alphabet::binary()
    }

    fn certificate_length(&self) -> usize {
        self.inner.num_vars + 1
    }

    fn accepts(&self, cert: &[Symbol]) -> bool {
        let (vars, last) = cert.split_at(self.inner.num_vars);
        let parity = vars.iter().fold(0u8, |acc, s| acc ^ s.0);
        last[0].0 == parity && self.inner.accepts(vars)
    }
}

/// Seeded random instance; every literal picks its variable and sign
/// uniformly. The same arguments always give the same instance.
pub fn random_instance(
    num_vars: usize,
    num_clauses: usize,
    seed: u64,
) -> Result<OneInThreeInstance> {
    if num_vars == 0 {
        return Err(Error::InvalidArgument(
            "random instances need at least one variable".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..num_clauses)
        .map(|_| {
            TripleClause::new(std::array::from_fn(|_| Literal {
                variable: rng.random_range(0..num_vars),
                positive: rng.random(),
            }))
        })
        .collect();
    OneInThreeInstance::new(num_vars, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::CertificateString;

    fn bits(b: &[u8]) -> CertificateString {
        CertificateString::from_bits(b)
    }

    fn triple(a: Literal, b: Literal, c: Literal) -> TripleClause {
        TripleClause::new([a, b, c])
    }

    #[test]
    fn one_in_three_examples() {
        let inst = OneInThreeInstance::new(
            3,
            vec![triple(Literal::pos(0), Literal::pos(1), Literal::pos(2))],
        )
        .unwrap();
        assert!(inst.verify(&bits(&[1, 0, 0])).unwrap());
        assert!(!inst.verify(&bits(&[1, 1, 0])).unwrap());
    }

    #[test]
    fn repeated_literal_counts_twice() {
        // (f, f, t): brute-force truth table over the four assignments.
        let inst = OneInThreeInstance::new(
            2,
            vec![triple(Literal::pos(0), Literal::pos(0), Literal::pos(1))],
        )
        .unwrap();
        let mut accepted = vec![];
        for f in 0..2u8 {
            for t in 0..2u8 {
                let occurrences = 2 * f + t;
                if occurrences == 1 {
                    accepted.push((f, t));
                }
                assert_eq!(inst.verify(&bits(&[f, t])).unwrap(), occurrences == 1);
            }
        }
        assert_eq!(accepted, [(0, 1)]);
        assert!(!inst.verify(&bits(&[1, 0])).unwrap());
    }

    #[test]
    fn negative_literals() {
        // (a, ¬b, f) with f = 0 forces a = b
        let inst = OneInThreeInstance::new(
            3,
            vec![triple(Literal::pos(0), Literal::neg(1), Literal::pos(2))],
        )
        .unwrap();
        assert!(inst.verify(&bits(&[0, 0, 0])).unwrap());
        assert!(inst.verify(&bits(&[1, 1, 0])).unwrap());
        assert!(!inst.verify(&bits(&[1, 0, 0])).unwrap());
        assert!(inst.verify(&bits(&[0, 1, 1])).unwrap());
    }

    #[test]
    fn parity_examples() {
        let inst = ParityOneInThreeInstance::new(OneInThreeInstance::new(2, vec![]).unwrap());
        assert!(inst.verify(&bits(&[0, 0, 0])).unwrap());
        assert!(!inst.verify(&bits(&[0, 1, 0])).unwrap());
        assert!(inst.verify(&bits(&[0, 1, 1])).unwrap());
        assert!(inst.verify(&bits(&[0, 1])).is_err());
    }

    #[test]
    fn out_of_range_literal_rejected() {
        let err = OneInThreeInstance::new(
            2,
            vec![triple(Literal::pos(0), Literal::pos(1), Literal::neg(2))],
        );
        assert!(matches!(err, Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn dimacs_literals() {
        assert_eq!(Literal::pos(0).to_dimacs(), 1);
        assert_eq!(Literal::neg(4).to_dimacs(), -5);
        assert_eq!(Literal::from_dimacs(-3), Some(Literal::neg(2)));
        assert_eq!(Literal::from_dimacs(0), None);
    }

    #[test]
    fn random_instances_are_reproducible() {
        let a = random_instance(3, 1, 42).unwrap();
        let b = random_instance(3, 1, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.clauses().len(), 1);
        assert_eq!(a.num_vars(), 3);
        assert_ne!(
            random_instance(6, 4, 1).unwrap(),
            random_instance(6, 4, 2).unwrap()
        );
        assert!(random_instance(0, 1, 7).is_err());
    }
}
