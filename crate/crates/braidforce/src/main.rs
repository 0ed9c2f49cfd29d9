use std::process::ExitCode;
use std::time::Duration;

use braidforce::{exit, run, to_json, to_text, RenderOptions, RunOptions};
use braidforce_core::pipeline::ForcingOptions;
use braidforce_core::{SummitConfig, SummitKind};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "braidforce", version, about = "Forced extensions of braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Summit {
    Super,
    Ultra,
}

#[derive(Subcommand)]
enum Command {
    /// Trace of ζ_{n,m}(β), merged by conjugacy class and classified.
    Trace {
        /// Strands of β.
        #[arg(long)]
        n: usize,
        /// Extra strands of the extensions.
        #[arg(long)]
        m: usize,
        /// β as generator indices, e.g. "1 -2" or "s1 s2^-1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Drop terms whose extra strands do not form a single cycle.
        #[arg(long)]
        elementary_only: bool,
        /// Print terms as `β · w`.
        #[arg(long)]
        factor_beta: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Element budget for each summit set computation.
        #[arg(long, value_name = "K", default_value_t = SummitConfig::default().budget)]
        budget_summit: usize,
        #[arg(long, value_enum, default_value = "ultra")]
        summit: Summit,
        /// Skip the Thurston-type classification.
        #[arg(long)]
        no_classify: bool,
        /// Exit with status 4 unless β is pseudo-Anosov and terms get classified.
        #[arg(long)]
        require_classification: bool,
        /// Also report coefficients multiplied by (-1)^m.
        #[arg(long)]
        lefschetz_signs: bool,
        /// Per-stage time limit in seconds.
        #[arg(long, value_name = "SECONDS")]
        timeout: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Trace {
        n,
        m,
        word,
        elementary_only,
        factor_beta,
        format,
        budget_summit,
        summit,
        no_classify,
        require_classification,
        lefschetz_signs,
        timeout,
    } = cli.command;
    let kind = match summit {
        Summit::Super => SummitKind::Super,
        Summit::Ultra => SummitKind::Ultra,
    };
    let stage_timeout = match timeout {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            eprintln!("error: --timeout must be a positive number of seconds");
            return ExitCode::from(exit::INVALID as u8);
        }
        t => t.map(Duration::from_secs_f64),
    };
    let opts = RunOptions {
        n,
        m,
        word,
        forcing: ForcingOptions {
            elementary_only,
            classify: !no_classify,
            summit: SummitConfig { kind, budget: budget_summit },
        },
        require_classification,
        stage_timeout,
    };
    let render = RenderOptions { factor_beta, lefschetz_signs };
    match run(&opts) {
        Ok(result) => {
            match format {
                Format::Text => print!("{}", to_text(&result, &render)),
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&to_json(&result, &render)).expect("json"))
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
