//! Average cooperation against the link error probability, N = 500.
//!
//! cargo run --release --example error_sweep -- [seeds]

use coupled_layers::sweep::{run_sweep, AxisValue, SweepAxis, SweepSpec};
use coupled_layers::SystemParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seeds: u64 = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let base = SystemParams { n_agents: 500, lambda_min: 0.005, burn_in: 500, ..SystemParams::default() };
    let errors = [0.0, 0.001, 0.01, 0.1, 0.5];
    let spec = SweepSpec::new(base, SweepAxis::ErrorProb, errors.map(AxisValue::Real).to_vec(), (1..=seeds).collect())?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_sweep(&spec, workers)?;
    println!("{:>6} {:>16}", "p_err", "c_avg");
    for v in report.values() {
        let agg = report.aggregate(v);
        println!("{:>6} {:>8.4} ± {:<6.4}", v.to_string(), agg.c_avg.0, agg.c_avg.1);
    }
    Ok(())
}
