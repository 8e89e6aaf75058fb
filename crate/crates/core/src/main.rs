use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use greyrank::pipeline::{self, OutputFormat, ParamOverrides, RunConfig, RunOptions};
use greyrank::report::to_json;
use greyrank::{Error, Method, Override, Stage};

#[derive(Parser)]
#[command(name = "greyrank", version, about = "Grey interval relation decision making")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline on a problem file (or an earlier stage's JSON report).
    Rank {
        file: PathBuf,
        /// normalize | weights | rank | all
        #[arg(long, default_value = "all")]
        stage: Stage,
        #[command(flatten)]
        common: Common,
    },
    /// Compare rankings before and after replacing input values.
    Whatif {
        file: PathBuf,
        /// PLAN.ATTR=[lo,hi], q.PLAN=[lo,hi] or alpha.K=[w1,...,wm]; repeatable.
        #[arg(long = "set", required = true)]
        set: Vec<Override>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// text | json
    #[arg(long, default_value = "json")]
    format: OutputFormat,
    #[arg(long)]
    rho: Option<f64>,
    /// theta_minus is set to 1 - theta_plus.
    #[arg(long)]
    theta_plus: Option<f64>,
    /// Comma-separated weights for topsis, incidence, entropy.
    #[arg(long, value_parser = parse_triple)]
    borda_weights: Option<[f64; 3]>,
    /// Comma-separated subset of topsis, incidence, entropy.
    #[arg(long, value_delimiter = ',')]
    methods: Option<Vec<Method>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn config(&self, input: PathBuf, stage: Stage, overrides: Vec<Override>) -> RunConfig {
        RunConfig {
            input,
            format: self.format,
            options: RunOptions {
                stage,
                methods: self.methods.clone().unwrap_or_else(|| Method::ALL.to_vec()),
                params: ParamOverrides {
                    rho: self.rho,
                    theta_plus: self.theta_plus,
                    borda_weights: self.borda_weights,
                },
            },
            overrides,
        }
    }
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let values = s
        .split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    <[f64; 3]>::try_from(values).map_err(|v| format!("expected 3 comma-separated weights, got {}", v.len()))
}

fn emit(text: String, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main_inner(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Rank { file, stage, common } => {
            let config = common.config(file, stage, Vec::new());
            let report = pipeline::run(&config)?;
            let text = match config.format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(),
            };
            emit(text, common.out.as_ref())
        }
        Command::Whatif { file, set, common } => {
            let config = common.config(file, Stage::All, set);
            let result = pipeline::run_whatif(&config)?;
            let text = match config.format {
                OutputFormat::Json => to_json(&result),
                OutputFormat::Text => {
                    let mut s = format!("Overrides: {}\n\n", result.overrides.join(", "));
                    s.push_str("== baseline ==\n");
                    s.push_str(&result.baseline.to_text());
                    s.push_str("\n== perturbed ==\n");
                    s.push_str(&result.perturbed.to_text());
                    s.push_str("\n== rank changes ==\n");
                    if result.diff.changed.is_empty() {
                        s.push_str("  none\n");
                    }
                    for c in &result.diff.changed {
                        s.push_str(&format!("  {}: {} -> {}\n", c.plan, c.before, c.after));
                    }
                    s
                }
            };
            emit(text, common.out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input validation failures
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match main_inner(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
