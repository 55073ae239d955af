use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use sirali::linearizer::{GroundMode, PlacementPolicy};
use sirali::pipeline::{run_pipeline, run_stats, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(name = "sirali", version, about = "Context-driven word order planning")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plan and linearize a document sentence by sentence.
    Plan {
        /// Document of interlingua sentence records.
        #[arg(long)]
        doc: PathBuf,
        /// Knowledge base of semantic types and inferability links.
        #[arg(long)]
        kb: PathBuf,
        /// Lexicon of inflected surface forms.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// Where ground material goes.
        #[arg(long, value_enum, default_value_t = GroundArg::Interpose)]
        ground: GroundArg,
        /// Allow salience mode to drop very salient ground items.
        #[arg(long)]
        drop: bool,
        /// Mark a focused verb with a trailing `*` in the gloss.
        #[arg(long)]
        mark_stress: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Append a diagnostic dump of the discourse model.
        #[arg(long)]
        dump_model: bool,
        /// Emit per-sentence planning traces.
        #[arg(long)]
        trace: bool,
    },
    /// Print the built-in corpus analyses.
    Stats,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroundArg {
    Interpose,
    Postpose,
    Salience,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Tsv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };

    match cli.command {
        Command::Plan {
            doc,
            kb,
            lexicon,
            ground,
            drop,
            mark_stress,
            format,
            dump_model,
            trace,
        } => {
            let config = RunConfig {
                doc,
                kb,
                lexicon,
                policy: PlacementPolicy {
                    ground_mode: match ground {
                        GroundArg::Interpose => GroundMode::Interpose,
                        GroundArg::Postpose => GroundMode::Postpose,
                        GroundArg::Salience => GroundMode::Salience,
                    },
                    drop_enabled: drop,
                },
                mark_stress,
                format: match format {
                    FormatArg::Text => OutputFormat::Text,
                    FormatArg::Tsv => OutputFormat::Tsv,
                },
                dump_model,
                trace,
            };
            match run_pipeline(&config) {
                Ok(report) => {
                    print!("{report}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
        Command::Stats => {
            print!("{}", run_stats());
            ExitCode::SUCCESS
        }
    }
}
