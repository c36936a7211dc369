//! Seeded property suite: random 1-in-3 SAT instances pushed through the
//! `dup-pad` reduction and checked against the exhaustive solver.
//!
//! Trial `t` of a run seeded with `s` uses instance seed `s + t` (wrapping),
//! so any failing trial can be replayed alone as trial 0 of seed `s + t`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::{Alphabet, Clue, Symbol};
use crate::error::{Error, Result};
use crate::problems::{all_solutions, random_instance, Limits, OneInThreeInstance};
use crate::reduction::{
    build_duplicate_and_pad, check_conditions, check_parsimony, CheckMode, CheckStatus,
    DuplicateAndPad,
};
use crate::solver::FcpSolver;
use crate::transfer::{backward_transfer, forward_transfer};

pub const SUMMARY_FORMAT: &str = "fcp-experiment-summary";
pub const SUMMARY_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub max_vars: usize,
    pub max_clauses: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_vars: 6,
            max_clauses: 4,
        }
    }
}

const MAX_DRAWS: usize = 10_000;

/// Draws instances from `seed` until one has a solution. Variable count is
/// uniform in `1..=max_vars`, clause count uniform in `0..=max_clauses`.
pub fn corpus_instance(seed: u64, config: &CorpusConfig) -> Result<OneInThreeInstance> {
    if config.max_vars == 0 {
        return Err(Error::InvalidArgument("max_vars must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let vars = rng.random_range(1..=config.max_vars);
        let clauses = rng.random_range(0..=config.max_clauses);
        let inst = random_instance(vars, clauses, rng.random())?;
        if !all_solutions(&inst, &Limits::default())?.is_empty() {
            return Ok(inst);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no satisfiable instance after {MAX_DRAWS} draws"
    )))
}

/// `(instance seed, instance)` for trials `0..count`.
pub fn corpus(
    seed: u64,
    count: usize,
    config: &CorpusConfig,
) -> Result<Vec<(u64, OneInThreeInstance)>> {
    (0..count as u64)
        .map(|t| {
            let s = seed.wrapping_add(t);
            corpus_instance(s, config).map(|i| (s, i))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub trials: usize,
    pub corpus: CorpusConfig,
    /// Largest clue size enumerated for the transfer checks.
    pub transfer_clue_size: usize,
    /// Random source clues per trial for the round-trip check.
    pub round_trip_samples: usize,
}

impl ExperimentConfig {
    pub fn new(seed: u64, trials: usize) -> Self {
        ExperimentConfig {
            seed,
            trials,
            corpus: CorpusConfig::default(),
            transfer_clue_size: 2,
            round_trip_samples: 32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str, cases: usize, failure: Option<String>) -> Self {
        CheckOutcome {
            name,
            passed: failure.is_none(),
            cases,
            detail: failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub trial: usize,
    pub seed: u64,
    pub num_vars: usize,
    pub num_clauses: usize,
    pub source_solutions: usize,
    pub min_clue_source: Option<usize>,
    pub min_clue_target: Option<usize>,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl TrialReport {
    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub seed: u64,
    pub failed_checks: Vec<&'static str>,
    pub reproduce: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentSummary {
    pub format: &'static str,
    pub version: u32,
    pub seed: u64,
    pub trials: usize,
    pub passes: usize,
    pub failures: Vec<TrialFailure>,
    pub results: Vec<TrialReport>,
    /// Wall time; kept out of the serialized form so reports stay
    /// byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
}

pub const CHECK_NAMES: [&str; 7] = [
    "min_clue_preserved",
    "forward_transfer_sound",
    "backward_transfer_sound",
    "parsimony",
    "declared_conditions",
    "fcp_basics",
    "round_trip",
];

pub fn run_experiment(config: &ExperimentConfig, limits: &Limits) -> Result<ExperimentSummary> {
    if config.trials == 0 {
        return Err(Error::InvalidArgument("trials must be positive".into()));
    }
    let start = Instant::now();
    let mut results = Vec::with_capacity(config.trials);
    let mut failures = Vec::new();
    for (trial, (seed, instance)) in corpus(config.seed, config.trials, &config.corpus)?
        .into_iter()
        .enumerate()
    {
        let report = run_trial(trial, seed, &instance, config, limits);
        if !report.passed {
            failures.push(TrialFailure {
                trial,
                seed,
                failed_checks: report
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name)
                    .collect(),
                reproduce: format!("fcp experiment --seed {seed} --trials 1"),
            });
        }
        results.push(report);
    }
    Ok(ExperimentSummary {
        format: SUMMARY_FORMAT,
        version: SUMMARY_VERSION,
        seed: config.seed,
        trials: config.trials,
        passes: config.trials - failures.len(),
        failures,
        results,
        elapsed: start.elapsed(),
    })
}

/// Runs every property on one instance. Errors are recorded as failed
/// checks rather than aborting the run.
pub fn run_trial(
    trial: usize,
    seed: u64,
    instance: &OneInThreeInstance,
    config: &ExperimentConfig,
    limits: &Limits,
) -> TrialReport {
    let (target, map) = build_duplicate_and_pad(instance);
    let solvers =
        FcpSolver::new(instance, limits).and_then(|s| Ok((s, FcpSolver::new(&target, limits)?)));

    let mut report = TrialReport {
        trial,
        seed,
        num_vars: instance.num_vars(),
        num_clauses: instance.clauses().len(),
        source_solutions: 0,
        min_clue_source: None,
        min_clue_target: None,
        passed: false,
        checks: Vec::new(),
    };
    let (source_solver, target_solver) = match solvers {
        Ok(s) => s,
        Err(e) => {
            report.checks = CHECK_NAMES
                .iter()
                .map(|&n| CheckOutcome::new(n, 0, Some(e.to_string())))
                .collect();
            return report;
        }
    };
    report.source_solutions = source_solver.solutions().len();
    report.min_clue_source = source_solver.min_clue().map(|m| m.k);
    report.min_clue_target = target_solver.min_clue().map(|m| m.k);

    let guard = |name, r: Result<CheckOutcome>| {
        r.unwrap_or_else(|e| CheckOutcome::new(name, 0, Some(e.to_string())))
    };

    // min clue number preserved
    report.checks.push(CheckOutcome::new(
        CHECK_NAMES[0],
        1,
        (report.min_clue_source != report.min_clue_target).then(|| {
            format!(
                "source {:?} vs target {:?}",
                report.min_clue_source, report.min_clue_target
            )
        }),
    ));

    // forward transfer of every small uniquifying source clue
    report.checks.push(guard(
        CHECK_NAMES[1],
        (|| {
            let clues = source_solver.uniquifying_clues(config.transfer_clue_size);
            for c in &clues {
                let out = forward_transfer(&map, c)?;
                if out.clue.size() > c.size() || !target_solver.is_uniquifying(&out.clue)? {
                    return Ok(CheckOutcome::new(
                        CHECK_NAMES[1],
                        clues.len(),
                        Some(format!("{c} -> {} does not uniquify", out.clue)),
                    ));
                }
            }
            Ok(CheckOutcome::new(CHECK_NAMES[1], clues.len(), None))
        })(),
    ));

    // backward transfer of every small uniquifying target clue
    report.checks.push(guard(
        CHECK_NAMES[2],
        (|| {
            let clues = target_solver.uniquifying_clues(config.transfer_clue_size);
            for c in &clues {
                let out = backward_transfer(&map, c)?;
                if out.size() > c.size() || !source_solver.is_uniquifying(&out)? {
                    return Ok(CheckOutcome::new(
                        CHECK_NAMES[2],
                        clues.len(),
                        Some(format!("{c} -> {out} does not uniquify")),
                    ));
                }
            }
            Ok(CheckOutcome::new(CHECK_NAMES[2], clues.len(), None))
        })(),
    ));

    report.checks.push(guard(
        CHECK_NAMES[3],
        (|| {
            let p = check_parsimony(&DuplicateAndPad, instance, limits)?;
            Ok(CheckOutcome::new(
                CHECK_NAMES[3],
                1,
                (p.status != CheckStatus::Pass)
                    .then(|| format!("{} vs {} ({})", p.source_count, p.target_count, p.status)),
            ))
        })(),
    ));

    report.checks.push(guard(
        CHECK_NAMES[4],
        (|| {
            let r = check_conditions(&DuplicateAndPad, instance, CheckMode::Declared, limits)?;
            Ok(CheckOutcome::new(
                CHECK_NAMES[4],
                r.indices.len(),
                (r.status != CheckStatus::Pass).then(|| format!("status {}", r.status)),
            ))
        })(),
    ));

    report.checks.push(fcp_basics(&source_solver));

    report.checks.push(guard(
        CHECK_NAMES[6],
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
            let m = instance.num_vars();
            for _ in 0..config.round_trip_samples {
                let entries = (0..m)
                    .map(|_| rng.random_bool(0.5).then(|| Symbol(rng.random_range(0..2))))
                    .collect();
                let c = Clue::new(Alphabet::binary(), entries)?;
                let fwd = forward_transfer(&map, &c)?;
                if !fwd.dropped_sources.is_empty() {
                    continue;
                }
                let back = backward_transfer(&map, &fwd.clue)?;
                if back != c {
                    return Ok(CheckOutcome::new(
                        CHECK_NAMES[6],
                        config.round_trip_samples,
                        Some(format!("{c} -> {} -> {back}", fwd.clue)),
                    ));
                }
            }
            Ok(CheckOutcome::new(
                CHECK_NAMES[6],
                config.round_trip_samples,
                None,
            ))
        })(),
    ));

    report.passed = report.checks.iter().all(|c| c.passed);
    report
}

/// Monotonicity in `k`, full-length clues exist iff solutions exist, and
/// minimum clue 0 iff the solution is unique.
fn fcp_basics(solver: &FcpSolver) -> CheckOutcome {
    let n = solver.certificate_length();
    let count = solver.solutions().len();
    let decisions: Vec<bool> = (0..=n).map(|k| solver.decide(k).decision).collect();
    let failure = if let Some(k) = decisions.windows(2).position(|w| w[0] && !w[1]) {
        Some(format!("FCP(k={k}) yes but FCP(k={}) no", k + 1))
    } else if decisions[n] != (count >= 1) {
        Some(format!(
            "FCP(k={n}) = {} with {count} solutions",
            decisions[n]
        ))
    } else if (solver.min_clue().map(|m| m.k) == Some(0)) != (count == 1) {
        Some(format!("minimum clue 0 mismatch with {count} solutions"))
    } else {
        None
    };
    CheckOutcome::new(CHECK_NAMES[5], n + 1, failure)
}
