//! Average cooperation against system size on a ring.
//!
//! cargo run --release --example size_sweep -- [seeds]

use coupled_layers::sweep::{run_sweep, AxisValue, SweepAxis, SweepSpec};
use coupled_layers::SystemParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seeds: u64 = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let base = SystemParams { burn_in: 500, ..SystemParams::default() };
    let sizes = [10, 50, 100, 500, 1000];
    let spec = SweepSpec::new(base, SweepAxis::SystemSize, sizes.map(AxisValue::Size).to_vec(), (1..=seeds).collect())?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_sweep(&spec, workers)?;
    println!("{:>6} {:>16} {:>16}", "N", "c_avg", "a_avg_mean");
    for v in report.values() {
        let agg = report.aggregate(v);
        println!("{:>6} {:>8.4} ± {:<6.4} {:>8.1} ± {:<6.1}", v.to_string(), agg.c_avg.0, agg.c_avg.1, agg.a_avg_mean.0, agg.a_avg_mean.1);
    }
    Ok(())
}
