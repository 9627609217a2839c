use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use dendrotensor::lurie::Defect;
use dendrotensor_cli::commands::{cmd_free_algebra, cmd_hom, cmd_omega, cmd_shuffles, cmd_tensor_hom, Output};
use dendrotensor_cli::suites::{run_defect, run_suites, Report, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "dendrotensor", version, about = "Exact enumeration of dendroidal and level-forest combinatorics")]
struct Cli {
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Upper bound on edges of random trees and forests.
    #[arg(long, global = true)]
    max_edges: Option<usize>,
    /// Upper bound on the width of random simplices.
    #[arg(long, global = true)]
    max_levels: Option<usize>,
    #[arg(long, global = true, default_value_t = 4)]
    truncation: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Level forest of a simplex given as JSON (inline, a file path, or - for stdin).
    Omega { simplex: String },
    /// Operad maps between free operads on forests.
    Hom { source: String, target: String },
    /// Shuffles of trees.
    Shuffles {
        #[arg(required = true)]
        trees: Vec<String>,
    },
    /// Maps from o(F) into a tensor product of free operads on trees.
    TensorHom {
        source: String,
        #[arg(required = true)]
        trees: Vec<String>,
    },
    /// Free algebra over o(F) with one generator set per color.
    FreeAlgebra {
        forest: String,
        /// Generator count for a color, as NAME=N.
        #[arg(long = "size", value_parser = parse_size)]
        sizes: Vec<(String, usize)>,
        /// Only list this color.
        #[arg(long)]
        color: Option<String>,
    },
    /// Run a seeded property suite.
    Check {
        suite: SuiteArg,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long, default_value_t = dendrotensor::random::DEFAULT_STUMP_PROBABILITY)]
        stump_probability: f64,
        /// Check a deliberately broken fibration instead.
        #[arg(long, value_enum)]
        defect: Option<DefectArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Functoriality,
    Retract,
    Segal,
    D3,
    Nerve,
    Fibrous,
    Shuffles,
    Assoc,
    Interior,
    Freealg,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum DefectArg {
    DropMultiComponentFamily,
    DuplicateFiberMorphisms,
    DropObject,
    ExtraMorphismToZero,
    DropSwap,
}

impl From<DefectArg> for Defect {
    fn from(d: DefectArg) -> Defect {
        match d {
            DefectArg::DropMultiComponentFamily => Defect::DropMultiComponentFamily,
            DefectArg::DuplicateFiberMorphisms => Defect::DuplicateFiberMorphisms,
            DefectArg::DropObject => Defect::DropObject,
            DefectArg::ExtraMorphismToZero => Defect::ExtraMorphismToZero,
            DefectArg::DropSwap => Defect::DropSwap,
        }
    }
}

fn parse_size(s: &str) -> Result<(String, usize), String> {
    let (name, n) = s.split_once('=').ok_or("expected NAME=N")?;
    Ok((name.to_string(), n.parse().map_err(|e| format!("{e}"))?))
}

fn read_input(arg: &str) -> anyhow::Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if !arg.trim_start().starts_with('{') && Path::new(arg).exists() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(output: &Output, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&output.json)? + "\n",
        Format::Text => output.text.clone(),
        Format::Dot => match &output.dot {
            Some(d) => d.clone(),
            None => bail!("this command has no DOT rendering"),
        },
    })
}

fn render_report(report: &Report, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(report)? + "\n",
        Format::Text => report.to_text(),
        Format::Dot => bail!("check reports have no DOT rendering"),
    })
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let output = match &cli.command {
        Command::Omega { simplex } => cmd_omega(&read_input(simplex)?)?,
        Command::Hom { source, target } => cmd_hom(source, target)?,
        Command::Shuffles { trees } => cmd_shuffles(trees)?,
        Command::TensorHom { source, trees } => cmd_tensor_hom(source, trees)?,
        Command::FreeAlgebra { forest, sizes, color } => cmd_free_algebra(forest, sizes, color.as_deref())?,
        Command::Check { suite, instances, max_length, stump_probability, defect } => {
            let config = SuiteConfig {
                seed: cli.seed,
                max_edges: cli.max_edges,
                max_levels: cli.max_levels,
                max_length: *max_length,
                truncation: cli.truncation,
                stump_probability: *stump_probability,
                instances: *instances,
            };
            if let Err(msg) = config.validate() {
                bail!(msg);
            }
            let report = match (defect, suite) {
                (Some(d), _) => Report::new(config.clone(), vec![run_defect((*d).into(), &config)]),
                (None, SuiteArg::All) => run_suites(&Suite::ALL, &config),
                (None, s) => {
                    let name = s.to_possible_value().expect("not skipped").get_name().to_string();
                    run_suites(&[Suite::from_name(&name).expect("suite names agree")], &config)
                }
            };
            for s in &report.suites {
                eprintln!("{}: {:.2?}", s.suite, s.wall_time);
            }
            eprintln!("total: {:.2?}", report.wall_time());
            emit(&cli.out, &render_report(&report, cli.format)?)?;
            return Ok(report.passed());
        }
    };
    emit(&cli.out, &render(&output, cli.format)?)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
