//! Exhaustive fewest-clues search.
//!
//! A valid clue is consistent with at least one solution, so every clue is a
//! projection of some solution onto a position set. The search therefore
//! ranges over `(position set, solution)` pairs only. A projection of `x`
//! onto `S` uniquifies exactly when no other solution agrees with `x` on
//! `S`, i.e. when `x` sits alone in its group after bucketing the solutions
//! by their restriction to `S`.

use std::cmp::Ordering;

use itertools::Itertools;
use serde::Serialize;

use crate::certificate::{Alphabet, CertificateString, Clue};
use crate::error::{Error, Result};
use crate::problems::{all_solutions, Limits, Problem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FcpAnswer {
    pub decision: bool,
    pub witness: Option<Clue>,
    pub solutions_found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinClue {
    pub k: usize,
    pub witness: Clue,
}

/// Solver over a fully enumerated solution set. The set is computed once on
/// construction and shared by every query.
#[derive(Debug, Clone)]
pub struct FcpSolver {
    alphabet: Alphabet,
    length: usize,
    solutions: Vec<CertificateString>,
}

impl FcpSolver {
    pub fn new<P: Problem + ?Sized>(problem: &P, limits: &Limits) -> Result<Self> {
        Ok(FcpSolver {
            alphabet: problem.alphabet(),
            length: problem.certificate_length(),
            solutions: all_solutions(problem, limits)?,
        })
    }

    /// Wraps an already enumerated, complete solution list.
    pub fn from_solutions(
        alphabet: Alphabet,
        length: usize,
        solutions: Vec<CertificateString>,
    ) -> Result<Self> {
        for s in &solutions {
            if *s.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch);
            }
            if s.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    actual: s.len(),
                });
            }
        }
        Ok(FcpSolver {
            alphabet,
            length,
            solutions,
        })
    }

    pub fn solutions(&self) -> &[CertificateString] {
        &self.solutions
    }

    pub fn certificate_length(&self) -> usize {
        self.length
    }

    fn check_clue(&self, clue: &Clue) -> Result<()> {
        if *clue.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if clue.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                actual: clue.len(),
            });
        }
        Ok(())
    }

    /// Solutions satisfying `clue`, counted up to `cap`.
    pub fn consistent_count(&self, clue: &Clue, cap: usize) -> Result<usize> {
        self.check_clue(clue)?;
        Ok(self
            .solutions
            .iter()
            .filter(|s| clue.matches(s.entries()))
            .take(cap)
            .count())
    }

    /// Exactly one solution satisfies `clue`. A clue with no consistent
    /// solution is not a clue at all and answers `false`.
    pub fn is_uniquifying(&self, clue: &Clue) -> Result<bool> {
        Ok(self.consistent_count(clue, 2)? == 1)
    }

    /// First uniquifying `(solution index, positions)` with exactly `size`
    /// positions, taking position sets in lexicographic order and then the
    /// lowest solution index.
    fn first_uniquifying(&self, size: usize) -> Option<(usize, Vec<usize>)> {
        (0..self.length).combinations(size).find_map(|positions| {
            let sol = self.singletons(&positions).into_iter().min()?;
            Some((sol, positions))
        })
    }

    /// Indices of solutions whose restriction to `positions` is shared with
    /// no other solution.
    fn singletons(&self, positions: &[usize]) -> Vec<usize> {
        let key_cmp = |a: &usize, b: &usize| -> Ordering {
            let (x, y) = (self.solutions[*a].entries(), self.solutions[*b].entries());
            positions
                .iter()
                .map(|&p| x[p].cmp(&y[p]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        let mut order: Vec<usize> = (0..self.solutions.len()).collect();
        order.sort_by(key_cmp);
        order
            .chunk_by(|a, b| key_cmp(a, b).is_eq())
            .filter(|group| group.len() == 1)
            .map(|group| group[0])
            .collect()
    }

    /// Is there a uniquifying clue of size at most `k`? The witness is the
    /// first one in (size, position set, solution index) order.
    pub fn decide(&self, k: usize) -> FcpAnswer {
        let witness = (0..=k.min(self.length)).find_map(|size| {
            self.first_uniquifying(size).map(|(sol, positions)| {
                self.solutions[sol]
                    .project_slice(&positions)
                    .expect("positions are in range")
            })
        });
        FcpAnswer {
            decision: witness.is_some(),
            witness,
            solutions_found: self.solutions.len(),
        }
    }

    /// Minimum clue number with its witness; `None` when there are no
    /// solutions.
    pub fn min_clue(&self) -> Option<MinClue> {
        self.decide(self.length).witness.map(|witness| MinClue {
            k: witness.size(),
            witness,
        })
    }

    /// Every uniquifying clue with at most `max_size` given positions,
    /// ordered by size, then position set, then solution index.
    pub fn uniquifying_clues(&self, max_size: usize) -> Vec<Clue> {
        let mut out = Vec::new();
        for size in 0..=max_size.min(self.length) {
            for positions in (0..self.length).combinations(size) {
                let mut sols = self.singletons(&positions);
                sols.sort_unstable();
                out.extend(sols.into_iter().map(|s| {
                    self.solutions[s]
                        .project_slice(&positions)
                        .expect("positions are in range")
                }));
            }
        }
        out
    }
}

pub fn consistent_count<P: Problem + ?Sized>(
    problem: &P,
    clue: &Clue,
    cap: usize,
    limits: &Limits,
) -> Result<usize> {
    FcpSolver::new(problem, limits)?.consistent_count(clue, cap)
}

pub fn is_uniquifying<P: Problem + ?Sized>(
    problem: &P,
    clue: &Clue,
    limits: &Limits,
) -> Result<bool> {
    FcpSolver::new(problem, limits)?.is_uniquifying(clue)
}

pub fn decide_fcp<P: Problem + ?Sized>(
    problem: &P,
    k: usize,
    limits: &Limits,
) -> Result<FcpAnswer> {
    Ok(FcpSolver::new(problem, limits)?.decide(k))
}

pub fn min_clue_number<P: Problem + ?Sized>(
    problem: &P,
    limits: &Limits,
) -> Result<Option<MinClue>> {
    Ok(FcpSolver::new(problem, limits)?.min_clue())
}
