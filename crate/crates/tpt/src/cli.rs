//! Argument grammar and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use tpt_core::analytic::g1_coefficients;
use tpt_core::simulator::{
    compare_report, empirical_distribution, sample_chain, ComparisonOptions,
};
use tpt_core::solvers::{fixed_point_iterate, root_scan, IterationOptions, RootScanOptions};
use tpt_core::{
    classify, enumerate_stationary, SymmetricFamily2, TransitionModel, TransitionTensor,
};

use crate::format::{format_trace, parse_decimal, parse_input, Input};
use crate::report::{self, ClassificationDto, ComparisonDto, GeneralDto, IterationDto, ReportDto};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when `validate` finds constraint violations.
pub const EXIT_VIOLATIONS: i32 = 1;
/// Exit status for usage, parse and parameter errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tpt",
    version,
    about = "Stationary vectors of higher-order transition probability tensors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a TPT1 file for column sums and entry ranges.
    Validate { file: PathBuf },
    /// Case analysis and every stationary vector of a family member.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Root scan of g1(x) − x on [0, 1], next to the analytic roots.
    Roots {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 100_001)]
        grid: usize,
        #[arg(long, default_value = "1e-12", value_parser = decimal)]
        tol: f64,
    },
    /// Fixed-point iteration x <- P x^(m-1).
    Solve {
        #[command(flatten)]
        source: Source,
        /// Start vector, comma separated; defaults to uniform.
        #[arg(long, value_delimiter = ',', value_parser = decimal)]
        x0: Option<Vec<f64>>,
        #[arg(long, default_value = "1e-10", value_parser = decimal)]
        tol: f64,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
        #[arg(long, default_value = "0", value_parser = decimal)]
        damping: f64,
    },
    /// Sample the chain and report empirical state frequencies.
    Simulate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        /// Defaults to 10% of the steps.
        #[arg(long)]
        burn_in: Option<usize>,
        /// Initial window, oldest state first, 1-based; defaults to all 1.
        #[arg(long, value_delimiter = ',', value_parser = one_based_state)]
        window: Option<Vec<usize>>,
        /// Write the generated states to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Classification plus fixed-point, lifted-chain and empirical views.
    Report {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 100_000)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct Source {
    /// TPT1 or SYM2 file.
    #[arg(long, conflicts_with_all = ["m", "a"])]
    file: Option<PathBuf>,
    #[arg(long, requires = "a")]
    m: Option<usize>,
    #[arg(long, requires = "m", value_parser = decimal)]
    a: Option<f64>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, value_parser = decimal)]
    a: f64,
}

fn decimal(s: &str) -> Result<f64, String> {
    parse_decimal(s, 0).map_err(|_| format!("`{s}` is not a finite decimal number"))
}

fn one_based_state(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(format!("`{s}` is not a 1-based state")),
    }
}

/// A resolved input: a family member or a general dense tensor.
enum Model {
    Family(SymmetricFamily2),
    General(TransitionTensor),
}

fn family(m: usize, a: f64) -> anyhow::Result<SymmetricFamily2> {
    SymmetricFamily2::new(m, a).map_err(|e| anyhow!("--m {m} --a {a}: {e}"))
}

fn read_model(path: &Path) -> anyhow::Result<Model> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read `{}`", path.display()))?;
    match parse_input(&text).with_context(|| format!("`{}`", path.display()))? {
        Input::Family(f) => Ok(Model::Family(f)),
        Input::Tensor(t) => {
            let report = t.validate();
            if !report.is_valid() {
                bail!(
                    "`{}` is not a transition probability tensor ({} violation(s)); run `validate` for details",
                    path.display(),
                    report.columns.len() + report.ranges.len()
                );
            }
            Ok(match SymmetricFamily2::recognize(&t) {
                Some(f) => Model::Family(f),
                None => Model::General(t),
            })
        }
    }
}

fn resolve(source: &Source) -> anyhow::Result<Model> {
    match (&source.file, source.m, source.a) {
        (Some(path), _, _) => read_model(path),
        (None, Some(m), Some(a)) => Ok(Model::Family(family(m, a)?)),
        _ => bail!("an input is required: --file F or --m M --a A"),
    }
}

fn general_dto(
    t: &TransitionTensor,
    options: IterationOptions,
    x0: &[f64],
) -> anyhow::Result<GeneralDto> {
    let witness = t.is_reducible();
    let r = fixed_point_iterate(t, x0, options)?;
    Ok(GeneralDto {
        order: t.order(),
        dim: t.dim(),
        symmetric: t.is_symmetric(),
        irreducible: witness.is_none(),
        reducibility_witness: witness.map(|w| w.iter().map(|s| s + 1).collect()),
        notice: report::NON_UNIQUENESS_NOTICE,
        fixed_point: IterationDto::new(x0, &r),
    })
}

fn execute(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("cannot read `{}`", file.display()))?;
            let tensor =
                match parse_input(&text).with_context(|| format!("`{}`", file.display()))? {
                    Input::Tensor(t) => t,
                    Input::Family(_) => {
                        writeln!(
                            out,
                            "valid transition probability tensor (SYM2 family member)"
                        )?;
                        return Ok(EXIT_OK);
                    }
                };
            let report = tensor.validate();
            out.write_all(report::validation_text(&report).as_bytes())?;
            Ok(if report.is_valid() {
                EXIT_OK
            } else {
                EXIT_VIOLATIONS
            })
        }
        Command::Classify { source, json } => {
            match resolve(&source)? {
                Model::Family(f) => {
                    let r = classify(&f);
                    if json {
                        out.write_all(report::to_json(&ClassificationDto::from(&r)).as_bytes())?;
                    } else {
                        out.write_all(report::classification_text(&r).as_bytes())?;
                    }
                }
                Model::General(t) => {
                    let x0 = vec![1.0 / t.dim() as f64; t.dim()];
                    let d = general_dto(&t, IterationOptions::default(), &x0)?;
                    if json {
                        out.write_all(report::to_json(&d).as_bytes())?;
                    } else {
                        out.write_all(report::general_text(&d).as_bytes())?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Roots {
            family: args,
            grid,
            tol,
        } => {
            let f = family(args.m, args.a)?;
            let poly = g1_coefficients(&f)?;
            let options = RootScanOptions {
                grid_points: grid,
                tol,
            };
            let roots = root_scan(|x| poly.eval(x) - x, options)
                .map_err(|e| anyhow!("--grid/--tol: {e}"))?;
            out.write_all(report::roots_text(&roots, &enumerate_stationary(&f), grid).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            source,
            x0,
            tol,
            max_iter,
            damping,
        } => {
            if tol <= 0.0 {
                bail!("--tol {tol}: must be positive");
            }
            let options = IterationOptions {
                tol,
                max_iter,
                damping,
            };
            let model = resolve(&source)?;
            let dim = match &model {
                Model::Family(_) => 2,
                Model::General(t) => t.dim(),
            };
            let x0 = x0.unwrap_or_else(|| vec![1.0 / dim as f64; dim]);
            let text = match &model {
                Model::Family(f) => {
                    let r = fixed_point_iterate(f, &x0, options)
                        .map_err(|e| anyhow!("--x0/--damping/--max-iter: {e}"))?;
                    let mut s = format!("family            m={} a={}\n", f.order(), f.a());
                    s.push_str(&report::iteration_text(&IterationDto::new(&x0, &r)));
                    s
                }
                Model::General(t) => report::general_text(
                    &general_dto(t, options, &x0)
                        .map_err(|e| anyhow!("--x0/--damping/--max-iter: {e}"))?,
                ),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Simulate {
            family: args,
            steps,
            seed,
            burn_in,
            window,
            trace,
        } => {
            let f = family(args.m, args.a)?;
            let window = window.unwrap_or_else(|| vec![0; f.order() - 1]);
            let t = sample_chain(&f, &window, steps, seed)
                .map_err(|e| anyhow!("--steps/--window: {e}"))?;
            let burn_in = burn_in.unwrap_or(steps / 10);
            let e = empirical_distribution(&t, burn_in)
                .map_err(|e| anyhow!("--burn-in {burn_in}: {e}"))?;
            if let Some(path) = trace {
                std::fs::write(&path, format_trace(&t, &f))
                    .with_context(|| format!("cannot write `{}`", path.display()))?;
            }
            let freq: Vec<String> = e.frequencies().iter().map(ToString::to_string).collect();
            let counts: Vec<String> = e.counts.iter().map(ToString::to_string).collect();
            writeln!(out, "family            m={} a={}", f.order(), f.a())?;
            writeln!(
                out,
                "steps             {steps} (seed {seed}, burn-in {burn_in})"
            )?;
            writeln!(out, "counts            {}", counts.join(" "))?;
            writeln!(out, "empirical         ({})", freq.join(", "))?;
            Ok(EXIT_OK)
        }
        Command::Report {
            family: args,
            steps,
            seed,
            json,
        } => {
            let f = family(args.m, args.a)?;
            let options = ComparisonOptions {
                steps,
                seed,
                ..Default::default()
            };
            let comparison =
                compare_report(&f, &options).map_err(|e| anyhow!("--steps/--seed: {e}"))?;
            let dto = ReportDto {
                classification: ClassificationDto::from(&classify(&f)),
                comparison: ComparisonDto::new(&comparison, steps, seed, &options.x0),
            };
            if json {
                out.write_all(report::to_json(&dto).as_bytes())?;
            } else {
                out.write_all(report::classification_text(&classify(&f)).as_bytes())?;
                out.write_all(report::comparison_text(&dto.comparison).as_bytes())?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs one invocation. `args` includes the program name. Reports go to
/// `out`, diagnostics to `err`; the return value is the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}
