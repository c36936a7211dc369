use std::error::Error as StdError;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use fcp_core::experiment::{run_experiment, ExperimentConfig};
use fcp_core::problems::{
    parse_instance, random_instance, Instance, OneInThreeInstance, ParityOneInThreeInstance,
};
use fcp_core::reduction::{
    build_duplicate_and_pad, check_conditions, BuiltinReduction, CheckMode, CheckStatus,
    DuplicateAndPad, ParityExtension,
};
use fcp_core::transfer::{backward_transfer, forward_transfer};
use fcp_core::{Clue, Error, FcpSolver};

use crate::render::{self, MinClueReport, SolveReport, TransferReport};
use crate::{Command, CommonArgs, DirectionArg, Format, ModeArg, ReductionArg};

pub const EXIT_OK: ExitCode = ExitCode::SUCCESS;
pub const EXIT_NO: ExitCode = ExitCode::FAILURE;

pub fn exit_error() -> ExitCode {
    ExitCode::from(2)
}

type CliResult<T> = Result<T, Box<dyn StdError>>;

pub fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Solve { input, k, common } => solve(&input.instance, k, common),
        Command::Minclue { input, common } => minclue(&input.instance, common),
        Command::CheckReduction {
            input,
            reduction,
            mode,
            common,
        } => check_reduction(&input.instance, reduction, mode, common),
        Command::Transfer {
            input,
            reduction,
            direction,
            clue,
            clue_file,
            common,
        } => {
            let clue_text = match (clue, clue_file) {
                (Some(text), _) => text,
                (None, Some(path)) => read(&path)?,
                (None, None) => unreachable!("clap requires one of --clue/--clue-file"),
            };
            transfer(&input.instance, reduction, direction, &clue_text, common)
        }
        Command::Experiment {
            seed,
            trials,
            common,
        } => experiment(seed, trials, common),
        Command::Generate {
            vars,
            clauses,
            seed,
            parity,
        } => {
            let formula = random_instance(vars, clauses, seed)?;
            let inst = if parity {
                Instance::Parity(ParityOneInThreeInstance::new(formula))
            } else {
                Instance::OneInThree(formula)
            };
            print!("{inst}");
            Ok(EXIT_OK)
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_instance(path: &Path) -> CliResult<Instance> {
    parse_instance(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_formula(path: &Path) -> CliResult<OneInThreeInstance> {
    match load_instance(path)? {
        Instance::OneInThree(f) => Ok(f),
        Instance::Parity(_) => Err(format!(
            "{}: reductions take a `p 1in3` source instance",
            path.display()
        )
        .into()),
    }
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
        Format::Text => print!("{}", text()),
    }
}

fn solve(path: &Path, k: usize, common: CommonArgs) -> CliResult<ExitCode> {
    let inst = load_instance(path)?;
    let answer = FcpSolver::new(&inst, &common.limits())?.decide(k);
    let report = SolveReport::new(&inst, k, answer);
    emit(common.format, &report, || report.to_text());
    Ok(if report.answer.decision {
        EXIT_OK
    } else {
        EXIT_NO
    })
}

fn minclue(path: &Path, common: CommonArgs) -> CliResult<ExitCode> {
    let inst = load_instance(path)?;
    let solver = FcpSolver::new(&inst, &common.limits())?;
    let report = MinClueReport::new(&inst, solver.solutions().len(), solver.min_clue());
    emit(common.format, &report, || report.to_text());
    Ok(if report.min_clue.is_some() {
        EXIT_OK
    } else {
        EXIT_NO
    })
}

fn check_reduction(
    path: &Path,
    reduction: ReductionArg,
    mode: Option<ModeArg>,
    common: CommonArgs,
) -> CliResult<ExitCode> {
    let source = load_formula(path)?;
    let limits = common.limits();
    let report = match reduction {
        ReductionArg::DupPad => {
            let mode = match mode {
                Some(ModeArg::Infer) => CheckMode::Infer,
                _ => CheckMode::Declared,
            };
            check_conditions(&DuplicateAndPad, &source, mode, &limits)?
        }
        ReductionArg::Parity => {
            let mode = match mode {
                Some(ModeArg::Declared) => CheckMode::Declared,
                _ => CheckMode::Infer,
            };
            check_conditions(&ParityExtension, &source, mode, &limits)?
        }
    };
    emit(common.format, &report, || render::check_text(&report));
    Ok(match report.status {
        CheckStatus::Pass => EXIT_OK,
        CheckStatus::Fail | CheckStatus::Vacuous => EXIT_NO,
        CheckStatus::Inconclusive => exit_error(),
    })
}

fn transfer(
    path: &Path,
    reduction: ReductionArg,
    direction: DirectionArg,
    clue_text: &str,
    common: CommonArgs,
) -> CliResult<ExitCode> {
    let source = load_formula(path)?;
    let map = match reduction {
        ReductionArg::DupPad => build_duplicate_and_pad(&source).1,
        ReductionArg::Parity => {
            return Err(Error::NoDeclaredMap(BuiltinReduction::Parity.name().into()).into())
        }
    };
    let report = match direction {
        DirectionArg::Forward => {
            let input = Clue::parse(clue_text, map.source_alphabet())?;
            TransferReport::from(forward_transfer(&map, &input)?)
        }
        DirectionArg::Backward => {
            let input = Clue::parse(clue_text, map.target_alphabet())?;
            let output = backward_transfer(&map, &input)?;
            TransferReport::backward(input, output)
        }
    };
    emit(common.format, &report, || report.to_text());
    Ok(EXIT_OK)
}

fn experiment(seed: u64, trials: usize, common: CommonArgs) -> CliResult<ExitCode> {
    let summary = run_experiment(&ExperimentConfig::new(seed, trials), &common.limits())?;
    emit(common.format, &summary, || {
        render::experiment_text(&summary)
    });
    eprintln!("elapsed: {:.3}s", summary.elapsed.as_secs_f64());
    if !summary.failures.is_empty() {
        for f in &summary.failures {
            eprintln!("reproduce trial {}: {}", f.trial, f.reproduce);
        }
        return Ok(EXIT_NO);
    }
    Ok(EXIT_OK)
}
