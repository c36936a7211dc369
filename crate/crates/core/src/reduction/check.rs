//! Parsimony and per-index condition checks.
//!
//! Both checks are falsifiers: a pass speaks only about the enumerated
//! solution sets, which is recorded in every report's `scope` field.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{Reduction, StructuralCertificateMap};
use crate::certificate::{CertificateString, Symbol};
use crate::error::{Error, Result};
use crate::problems::{enumerate_solutions, Limits, Problem};

pub const REPORT_FORMAT: &str = "fcp-check-report";
pub const REPORT_VERSION: u32 = 1;
const SCOPE: &str = "enumerated-solutions";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A solution cap was hit; nothing can be concluded.
    Inconclusive,
    /// No solutions on either side; the conditions hold trivially and the
    /// check says nothing.
    Vacuous,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Inconclusive => "inconclusive",
            CheckStatus::Vacuous => "vacuous",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    /// Compare observed solution pairs against the declared map.
    Declared,
    /// Infer candidate dependencies from observed solution pairs.
    Infer,
}

impl FromStr for CheckMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "declared" => Ok(CheckMode::Declared),
            "infer" => Ok(CheckMode::Infer),
            other => Err(Error::InvalidArgument(format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Declared => "declared",
            CheckMode::Infer => "infer",
        })
    }
}

/// How source and target solutions were put in correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pairing {
    /// Through the declared map, which was verified to be a bijection
    /// between the solution sets.
    Map,
    /// By position in lexicographic order.
    Rank,
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pairing::Map => "map",
            Pairing::Rank => "rank",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionPair {
    pub source: CertificateString,
    pub target: CertificateString,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParsimonyReport {
    pub status: CheckStatus,
    pub source_count: usize,
    pub target_count: usize,
    pub equal: bool,
    pub truncated: bool,
    pub map_declared: bool,
    /// Every source solution maps to an accepted target certificate.
    pub mapped_solutions_verified: Option<bool>,
    /// No two source solutions share an image.
    pub mapping_injective: Option<bool>,
    /// First source solution whose image the target verifier rejects.
    pub rejected_image: Option<SolutionPair>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RefutationKind {
    /// Observed target symbol differs from the declared dependency.
    DeclaredMismatch,
    /// Same source symbol, different target symbols.
    NotFunctional,
    /// Different source symbols, same target symbol.
    NotInjective,
    /// The source alphabet is larger than the target alphabet.
    NoInjectiveTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub source_index: Option<usize>,
    pub kind: RefutationKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Symbol>,
    pub first: Option<SolutionPair>,
    pub second: Option<SolutionPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub target_index: usize,
    pub refutations: Vec<Refutation>,
}

impl Violation {
    /// The first concrete witness pair, if any.
    pub fn witness(&self) -> Option<(&SolutionPair, Option<&SolutionPair>)> {
        self.refutations
            .iter()
            .find_map(|r| r.first.as_ref().map(|f| (f, r.second.as_ref())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IndexVerdict {
    DependentOk { source: usize },
    ConstantOk { value: Symbol },
    Violation,
}

/// An observed source position consistent with an injective table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InferredCandidate {
    pub source: usize,
    /// Observed part of the table, indexed by source symbol.
    pub table: Vec<Option<Symbol>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub target_index: usize,
    #[serde(flatten)]
    pub verdict: IndexVerdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<InferredCandidate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub format: &'static str,
    pub version: u32,
    pub reduction: String,
    pub mode: CheckMode,
    pub status: CheckStatus,
    pub scope: &'static str,
    pub source_length: usize,
    pub target_length: usize,
    pub parsimony: ParsimonyReport,
    pub pairing: Option<Pairing>,
    pub indices: Vec<IndexReport>,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn violation_at(&self, target_index: usize) -> Option<&Violation> {
        self.violations
            .iter()
            .find(|v| v.target_index == target_index)
    }
}

struct Enumerated {
    map: Option<StructuralCertificateMap>,
    source_solutions: Vec<CertificateString>,
    target_solutions: Vec<CertificateString>,
    source_length: usize,
    target_length: usize,
    parsimony: ParsimonyReport,
}

impl Enumerated {
    fn map_is_bijection(&self) -> bool {
        self.map.is_some()
            && self.parsimony.equal
            && self.parsimony.mapped_solutions_verified == Some(true)
            && self.parsimony.mapping_injective == Some(true)
    }
}

fn enumerate_both<R: Reduction>(
    reduction: &R,
    source: &R::Source,
    limits: &Limits,
) -> Result<Enumerated> {
    let target = reduction.transform(source);
    let map = reduction.certificate_map(source);
    if let Some(map) = &map {
        if map.source_length() != source.certificate_length()
            || map.target_length() != target.certificate_length()
            || *map.source_alphabet() != source.alphabet()
            || *map.target_alphabet() != target.alphabet()
        {
            return Err(Error::InvalidMap(format!(
                "map shape {}→{} does not match instances {}→{}",
                map.source_length(),
                map.target_length(),
                source.certificate_length(),
                target.certificate_length()
            )));
        }
    }

    let src = enumerate_solutions(source, limits.max_solutions, limits.max_candidates)?;
    let tgt = enumerate_solutions(&target, limits.max_solutions, limits.max_candidates)?;
    let truncated = src.truncated || tgt.truncated;
    let equal = !truncated && src.solutions.len() == tgt.solutions.len();

    let (mut verified, mut injective, mut rejected) = (None, None, None);
    if let (Some(map), false) = (&map, truncated) {
        let mut images = HashSet::with_capacity(src.solutions.len());
        let mut all_accepted = true;
        for x in &src.solutions {
            let y = map.apply(x)?;
            if all_accepted && !target.accepts(y.entries()) {
                all_accepted = false;
                rejected = Some(SolutionPair {
                    source: x.clone(),
                    target: y.clone(),
                });
            }
            images.insert(y);
        }
        verified = Some(all_accepted);
        injective = Some(images.len() == src.solutions.len());
    }

    let status = if truncated {
        CheckStatus::Inconclusive
    } else if equal && verified != Some(false) && injective != Some(false) {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };

    Ok(Enumerated {
        parsimony: ParsimonyReport {
            status,
            source_count: src.solutions.len(),
            target_count: tgt.solutions.len(),
            equal,
            truncated,
            map_declared: map.is_some(),
            mapped_solutions_verified: verified,
            mapping_injective: injective,
            rejected_image: rejected,
        },
        map,
        source_length: source.certificate_length(),
        target_length: target.certificate_length(),
        source_solutions: src.solutions,
        target_solutions: tgt.solutions,
    })
}

/// Counts solutions on both sides and, when a map is declared, checks that
/// it sends source solutions injectively to accepted target certificates.
pub fn check_parsimony<R: Reduction>(
    reduction: &R,
    source: &R::Source,
    limits: &Limits,
) -> Result<ParsimonyReport> {
    Ok(enumerate_both(reduction, source, limits)?.parsimony)
}

/// Runs the parsimony check and then classifies every target index.
pub fn check_conditions<R: Reduction>(
    reduction: &R,
    source: &R::Source,
    mode: CheckMode,
    limits: &Limits,
) -> Result<CheckReport> {
    let e = enumerate_both(reduction, source, limits)?;
    if mode == CheckMode::Declared && e.map.is_none() {
        return Err(Error::NoDeclaredMap(reduction.name().to_string()));
    }

    let mut report = CheckReport {
        format: REPORT_FORMAT,
        version: REPORT_VERSION,
        reduction: reduction.name().to_string(),
        mode,
        status: CheckStatus::Inconclusive,
        scope: SCOPE,
        source_length: e.source_length,
        target_length: e.target_length,
        parsimony: e.parsimony.clone(),
        pairing: None,
        indices: Vec::new(),
        violations: Vec::new(),
        notes: Vec::new(),
    };

    if e.parsimony.truncated {
        report
            .notes
            .push("solution cap reached; raise --cap-solutions".into());
        return Ok(report);
    }
    if !e.parsimony.equal {
        report.status = CheckStatus::Fail;
        report.notes.push(format!(
            "solution counts differ ({} vs {}); solutions cannot be paired",
            e.parsimony.source_count, e.parsimony.target_count
        ));
        return Ok(report);
    }
    if e.source_solutions.is_empty() {
        report.status = CheckStatus::Vacuous;
        report
            .notes
            .push("no solutions: conditions hold vacuously".into());
        return Ok(report);
    }

    let (pairing, pairs) = pair_solutions(&e);
    if pairing == Pairing::Rank && e.map.is_some() {
        report
            .notes
            .push("declared map is not a bijection of solutions; paired by rank".into());
    }
    report.pairing = Some(pairing);

    for j in 0..e.target_length {
        let (index, violation) = match mode {
            CheckMode::Declared => {
                classify_declared(e.map.as_ref().expect("checked above"), j, &pairs)
            }
            CheckMode::Infer => classify_inferred(j, e.source_length, &pairs),
        };
        report.indices.push(index);
        report.violations.extend(violation);
    }

    report.status = if report.violations.is_empty() && e.parsimony.status == CheckStatus::Pass {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    Ok(report)
}

fn pair_solutions(e: &Enumerated) -> (Pairing, Vec<SolutionPair>) {
    if e.map_is_bijection() {
        let map = e.map.as_ref().expect("bijection implies a map");
        let pairs = e
            .source_solutions
            .iter()
            .map(|x| SolutionPair {
                source: x.clone(),
                target: map.apply(x).expect("shape checked"),
            })
            .collect();
        (Pairing::Map, pairs)
    } else {
        let pairs = e
            .source_solutions
            .iter()
            .zip(&e.target_solutions)
            .map(|(x, y)| SolutionPair {
                source: x.clone(),
                target: y.clone(),
            })
            .collect();
        (Pairing::Rank, pairs)
    }
}

fn classify_declared(
    map: &StructuralCertificateMap,
    j: usize,
    pairs: &[SolutionPair],
) -> (IndexReport, Option<Violation>) {
    let dep = map.dependency(j);
    let mismatch = pairs.iter().find_map(|p| {
        let expected = dep.eval(p.source.entries());
        (p.target.entries()[j] != expected).then(|| Refutation {
            source_index: dep.source(),
            kind: RefutationKind::DeclaredMismatch,
            expected: Some(expected),
            first: Some(p.clone()),
            second: None,
        })
    });
    let verdict = match (&mismatch, dep) {
        (Some(_), _) => IndexVerdict::Violation,
        (None, super::IndexDependency::Dependent { source, .. }) => {
            IndexVerdict::DependentOk { source: *source }
        }
        (None, super::IndexDependency::Constant { value }) => {
            IndexVerdict::ConstantOk { value: *value }
        }
    };
    let report = IndexReport {
        target_index: j,
        verdict,
        candidates: Vec::new(),
    };
    let violation = mismatch.map(|r| Violation {
        target_index: j,
        refutations: vec![r],
    });
    (report, violation)
}

/// Tries every source index as the origin of target index `j`.
fn classify_inferred(
    j: usize,
    source_length: usize,
    pairs: &[SolutionPair],
) -> (IndexReport, Option<Violation>) {
    let first = &pairs[0];
    let source_size = first.source.alphabet().len();
    let target_size = first.target.alphabet().len();

    let constant = {
        let v = first.target.entries()[j];
        pairs
            .iter()
            .all(|p| p.target.entries()[j] == v)
            .then_some(v)
    };

    let mut candidates = Vec::new();
    let mut refutations = Vec::new();
    for i in 0..source_length {
        if source_size > target_size {
            refutations.push(Refutation {
                source_index: Some(i),
                kind: RefutationKind::NoInjectiveTable,
                expected: None,
                first: None,
                second: None,
            });
            continue;
        }
        match infer_table(i, j, source_size, target_size, pairs) {
            Ok(table) => candidates.push(InferredCandidate { source: i, table }),
            Err(r) => refutations.push(*r),
        }
    }

    let verdict = match (constant, candidates.first()) {
        (Some(value), _) => IndexVerdict::ConstantOk { value },
        (None, Some(c)) => IndexVerdict::DependentOk { source: c.source },
        (None, None) => IndexVerdict::Violation,
    };
    let violation = (verdict == IndexVerdict::Violation).then_some(Violation {
        target_index: j,
        refutations,
    });
    (
        IndexReport {
            target_index: j,
            verdict,
            candidates,
        },
        violation,
    )
}

fn infer_table(
    i: usize,
    j: usize,
    source_size: usize,
    target_size: usize,
    pairs: &[SolutionPair],
) -> std::result::Result<Vec<Option<Symbol>>, Box<Refutation>> {
    // each slot remembers the pair that filled it
    let mut forward: Vec<Option<(Symbol, usize)>> = vec![None; source_size];
    let mut backward: Vec<Option<(Symbol, usize)>> = vec![None; target_size];
    for (k, p) in pairs.iter().enumerate() {
        let a = p.source.entries()[i];
        let b = p.target.entries()[j];
        let conflict = match (forward[a.index()], backward[b.index()]) {
            (Some((seen, prev)), _) if seen != b => Some((RefutationKind::NotFunctional, prev)),
            (_, Some((seen, prev))) if seen != a => Some((RefutationKind::NotInjective, prev)),
            _ => None,
        };
        if let Some((kind, prev)) = conflict {
            return Err(Box::new(Refutation {
                source_index: Some(i),
                kind,
                expected: None,
                first: Some(pairs[prev].clone()),
                second: Some(p.clone()),
            }));
        }
        forward[a.index()] = Some((b, k));
        backward[b.index()] = Some((a, k));
    }
    Ok(forward.into_iter().map(|e| e.map(|(s, _)| s)).collect())
}
