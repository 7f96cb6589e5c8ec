//! One run with the default parameters. Prints the metrics and a coarse
//! text raster (`#` cooperate, `.` ignore, `+` defect); pass a directory to
//! also write the output files there.
//!
//! cargo run --release --example single_run -- [out_dir]

use coupled_layers::engine;
use coupled_layers::metrics::MetricsReport;
use coupled_layers::output::{write_metrics, write_raster, write_summary};
use coupled_layers::{Strategy, SystemParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = SystemParams { seed: 1, burn_in: 500, ..SystemParams::default() }.validate()?;
    let run = engine::run(&params)?;
    let report = MetricsReport::from_run(&run, 500)?;
    println!(
        "c_avg {:.4}  P_util {:.4}  gini {:.4}  a_avg_mean {:.2}",
        report.c_avg, report.p_util, report.gini, report.a_avg_mean
    );

    for frame in run.frames.iter().step_by(100) {
        let row: String = frame
            .strategies
            .iter()
            .map(|s| match s {
                Strategy::Cooperate => '#',
                Strategy::Ignore => '.',
                Strategy::Defect => '+',
            })
            .collect();
        println!("{:>5} {row}", frame.t);
    }

    if let Some(dir) = std::env::args().nth(1) {
        let dir = std::path::PathBuf::from(dir);
        std::fs::create_dir_all(&dir)?;
        write_raster(&run.frames, std::fs::File::create(dir.join("raster.txt"))?)?;
        write_summary(&run.frames, std::fs::File::create(dir.join("summary.csv"))?)?;
        write_metrics(params.params(), &report, std::fs::File::create(dir.join("metrics.csv"))?)?;
        println!("wrote {}", dir.display());
    }
    Ok(())
}
