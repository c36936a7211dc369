//! Report records and their text rendering. JSON output serializes the same
//! records, so key order follows field order.

use std::fmt::Write;

use fcp_core::experiment::ExperimentSummary;
use fcp_core::problems::{Instance, Problem};
use fcp_core::reduction::{CheckReport, IndexVerdict, RefutationKind};
use fcp_core::transfer::TransferResult;
use fcp_core::{Clue, FcpAnswer, MinClue};
use serde::Serialize;

const VERSION: u32 = 1;

#[derive(Serialize)]
pub struct SolveReport {
    pub format: &'static str,
    pub version: u32,
    pub kind: &'static str,
    pub certificate_length: usize,
    pub k: usize,
    #[serde(flatten)]
    pub answer: FcpAnswer,
}

impl SolveReport {
    pub fn new(inst: &Instance, k: usize, answer: FcpAnswer) -> Self {
        SolveReport {
            format: "fcp-solve-report",
            version: VERSION,
            kind: inst.kind(),
            certificate_length: inst.certificate_length(),
            k,
            answer,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let decision = if self.answer.decision { "YES" } else { "NO" };
        writeln!(s, "decision: {decision}").unwrap();
        writeln!(s, "k: {}", self.k).unwrap();
        if let Some(w) = &self.answer.witness {
            writeln!(s, "witness: {w}").unwrap();
            writeln!(s, "witness_size: {}", w.size()).unwrap();
        }
        writeln!(s, "solutions: {}", self.answer.solutions_found).unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct MinClueReport {
    pub format: &'static str,
    pub version: u32,
    pub kind: &'static str,
    pub certificate_length: usize,
    pub solutions: usize,
    pub min_clue: Option<usize>,
    pub witness: Option<Clue>,
}

impl MinClueReport {
    pub fn new(inst: &Instance, solutions: usize, min: Option<MinClue>) -> Self {
        let (min_clue, witness) = match min {
            Some(m) => (Some(m.k), Some(m.witness)),
            None => (None, None),
        };
        MinClueReport {
            format: "fcp-minclue-report",
            version: VERSION,
            kind: inst.kind(),
            certificate_length: inst.certificate_length(),
            solutions,
            min_clue,
            witness,
        }
    }

    pub fn to_text(&self) -> String {
        match (&self.min_clue, &self.witness) {
            (Some(k), Some(w)) => format!(
                "min_clue: {k}\nwitness: {w}\nsolutions: {}\n",
                self.solutions
            ),
            _ => "no solutions\n".to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct TransferReport {
    pub format: &'static str,
    pub version: u32,
    pub direction: &'static str,
    pub input: Clue,
    pub input_size: usize,
    pub output: Clue,
    pub output_size: usize,
    pub dropped_sources: Vec<usize>,
    pub warnings: Vec<String>,
}

impl From<TransferResult> for TransferReport {
    fn from(r: TransferResult) -> Self {
        TransferReport {
            format: "fcp-transfer-report",
            version: VERSION,
            direction: "forward",
            input_size: r.input.size(),
            input: r.input,
            output_size: r.clue.size(),
            output: r.clue,
            dropped_sources: r.dropped_sources,
            warnings: r.warnings,
        }
    }
}

impl TransferReport {
    pub fn backward(input: Clue, output: Clue) -> Self {
        TransferReport {
            format: "fcp-transfer-report",
            version: VERSION,
            direction: "backward",
            input_size: input.size(),
            input,
            output_size: output.size(),
            output,
            dropped_sources: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "direction: {}", self.direction).unwrap();
        writeln!(s, "input: {} (size {})", self.input, self.input_size).unwrap();
        writeln!(s, "output: {} (size {})", self.output, self.output_size).unwrap();
        if !self.dropped_sources.is_empty() {
            writeln!(s, "dropped_sources: {:?}", self.dropped_sources).unwrap();
        }
        for w in &self.warnings {
            writeln!(s, "warning: {w}").unwrap();
        }
        s
    }
}

fn kind_name(kind: RefutationKind) -> &'static str {
    match kind {
        RefutationKind::DeclaredMismatch => "declared mismatch",
        RefutationKind::NotFunctional => "not functional",
        RefutationKind::NotInjective => "not injective",
        RefutationKind::NoInjectiveTable => "no injective table",
    }
}

pub fn check_text(r: &CheckReport) -> String {
    let mut s = String::new();
    let p = &r.parsimony;
    writeln!(s, "reduction: {}", r.reduction).unwrap();
    writeln!(s, "mode: {}", r.mode).unwrap();
    writeln!(s, "status: {}", r.status).unwrap();
    writeln!(
        s,
        "parsimony: {} {} {} ({})",
        p.source_count,
        if p.equal { "=" } else { "vs" },
        p.target_count,
        p.status
    )
    .unwrap();
    if let Some(v) = p.mapped_solutions_verified {
        writeln!(s, "mapped solutions accepted: {v}").unwrap();
    }
    if let Some(pairing) = r.pairing {
        writeln!(s, "pairing: {pairing}").unwrap();
    }
    for idx in &r.indices {
        let what = match &idx.verdict {
            IndexVerdict::DependentOk { source } => format!("depends on source {source}"),
            IndexVerdict::ConstantOk { value } => format!("constant {}", value.index()),
            IndexVerdict::Violation => "VIOLATION".to_string(),
        };
        writeln!(s, "index {}: {what}", idx.target_index).unwrap();
    }
    for v in &r.violations {
        writeln!(s, "violation at index {}:", v.target_index).unwrap();
        for rf in &v.refutations {
            let src = rf.source_index.map_or("-".to_string(), |i| i.to_string());
            write!(s, "  source {src}: {}", kind_name(rf.kind)).unwrap();
            if let Some(e) = rf.expected {
                write!(s, ", expected {}", e.index()).unwrap();
            }
            for pair in rf.first.iter().chain(rf.second.iter()) {
                write!(s, "; {} -> {}", pair.source, pair.target).unwrap();
            }
            writeln!(s).unwrap();
        }
    }
    for n in &r.notes {
        writeln!(s, "note: {n}").unwrap();
    }
    s
}

pub fn experiment_text(summary: &ExperimentSummary) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "seed {}: {}/{} trials passed",
        summary.seed, summary.passes, summary.trials
    )
    .unwrap();
    for f in &summary.failures {
        writeln!(
            s,
            "FAIL trial {} (seed {}): {}",
            f.trial,
            f.seed,
            f.failed_checks.join(", ")
        )
        .unwrap();
        writeln!(s, "  reproduce: {}", f.reproduce).unwrap();
    }
    s
}
