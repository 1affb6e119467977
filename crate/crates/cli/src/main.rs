mod commands;
mod demo;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Local invariants, coefficient ideals and blowups of ideals over Q.
#[derive(Parser, Debug)]
#[command(name = "desing", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; the exit code carries the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Transform {
    Total,
    Weak,
    Strict,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scenario {
    Ex61,
    Ex62,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order of the ideal at the origin.
    Order { file: PathBuf },
    /// Reduced standard basis under the file's ordering.
    Sb { file: PathBuf },
    /// Ideal of the locus of order at least c (c = 2 gives Δ(I)).
    Delta {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        iterate: u32,
    },
    /// Hilbert-Samuel values up to a degree.
    Hs {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// Comma-separated rational coordinates, e.g. 0,1/2,0.
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        cumulative: bool,
    },
    /// Villamayor coefficient ideal with respect to a variable.
    Coeff {
        file: PathBuf,
        #[arg(long)]
        var: String,
        /// Defaults to the order of the ideal.
        #[arg(long)]
        order: Option<u32>,
    },
    /// Staged construction of J_k, the modified coefficient ideal and the
    /// suggested center.
    Hybrid {
        file: PathBuf,
        #[arg(long)]
        center_only: bool,
    },
    /// Transforms under the blowup at a coordinate center.
    Blowup {
        file: PathBuf,
        /// Comma-separated variable names.
        #[arg(long)]
        center: String,
        /// Only this chart.
        #[arg(long)]
        chart: Option<String>,
        #[arg(long, value_enum)]
        transform: Transform,
        /// Strict transform through a standard basis.
        #[arg(long)]
        via_sb: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Leading part of the invariant.
    Invariant {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_depth: usize,
    },
    /// Full report on a worked example.
    Demo {
        #[arg(value_enum)]
        name: Scenario,
    },
}

pub enum Failure {
    Input(String),
    Domain(String),
    Usage(String),
}

impl From<input::InputError> for Failure {
    fn from(e: input::InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<desing_core::Error> for Failure {
    fn from(e: desing_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Text lines and the JSON value of one command.
pub struct Output {
    pub text: Vec<String>,
    pub json: serde_json::Value,
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    use commands::*;
    match &cli.command {
        Command::Order { file } => order(&input::load(file)?),
        Command::Sb { file } => sb(&input::load(file)?),
        Command::Delta { file, iterate } => delta(&input::load(file)?, *iterate),
        Command::Hs { file, max_degree, point, cumulative } => {
            hs(&input::load(file)?, *max_degree, point.as_deref(), *cumulative)
        }
        Command::Coeff { file, var, order } => coeff(&input::load(file)?, var, *order),
        Command::Hybrid { file, center_only } => hybrid(&input::load(file)?, *center_only),
        Command::Blowup { file, center, chart, transform, via_sb, max_degree } => {
            let kind = match transform {
                Transform::Total => desing_core::blowup::TransformKind::Total,
                Transform::Weak => desing_core::blowup::TransformKind::Weak,
                Transform::Strict => desing_core::blowup::TransformKind::Strict,
            };
            blowup(&input::load(file)?, center, chart.as_deref(), kind, *via_sb, *max_degree)
        }
        Command::Invariant { file, max_depth } => invariant(&input::load(file)?, *max_depth),
        Command::Demo { name } => match name {
            Scenario::Ex61 => demo::run("ex61"),
            Scenario::Ex62 => demo::run("ex62"),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if !cli.quiet {
                if cli.json {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
                } else {
                    for line in out.text {
                        println!("{line}");
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(64)
        }
    }
}
