use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coupled_layers::commands::{graph_export_command, run_command, sweep_command};

#[derive(Parser)]
#[command(version, about = "Coupled circuit / network / agent simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Directory receiving the output files.
    #[arg(long, global = true, default_value = ".")]
    out_dir: PathBuf,
    /// Worker threads for sweeps; defaults to the number of CPUs.
    #[arg(long, global = true)]
    parallelism: Option<usize>,
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run one simulation and write raster, summary, metrics and resolved config.
    Run { config: PathBuf },
    /// Run a parameter sweep and write sweep.csv.
    Sweep { config: PathBuf },
    /// Write the communication graph as an edge list.
    GraphExport { config: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    let result = match &cli.command {
        Command::Run { config } => run_command(config, &cli.out_dir).map(|out| {
            if !quiet {
                let m = &out.report;
                println!(
                    "c_avg={} P_util={} gini={} a_avg_mean={}",
                    m.c_avg, m.p_util, m.gini, m.a_avg_mean
                );
                println!("wrote {}", out.raster.display());
            }
        }),
        Command::Sweep { config } => {
            let parallelism = cli
                .parallelism
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            sweep_command(config, &cli.out_dir, parallelism, |o| {
                if !quiet {
                    let status = match &o.result {
                        Ok(m) => format!("c_avg={:.4}", m.c_avg),
                        Err(e) => format!("error: {e}"),
                    };
                    eprintln!("{} seed={} {status}", o.value, o.params.seed);
                }
            })
            .map(|path| {
                if !quiet {
                    println!("wrote {}", path.display());
                }
            })
        }
        Command::GraphExport { config } => graph_export_command(config, &cli.out_dir).map(|path| {
            if !quiet {
                println!("wrote {}", path.display());
            }
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
