//! Average cooperation against the minimum gain an agent demands before it
//! reconsiders its strategy.
//!
//! cargo run --release --example lambda_sweep -- [seeds]

use coupled_layers::sweep::{run_sweep, AxisValue, SweepAxis, SweepSpec};
use coupled_layers::SystemParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seeds: u64 = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let base = SystemParams { burn_in: 500, ..SystemParams::default() };
    let lambdas = [0.00005, 0.0001, 0.0005, 0.001, 0.005, 0.01];
    let spec = SweepSpec::new(base, SweepAxis::LambdaMin, lambdas.map(AxisValue::Real).to_vec(), (1..=seeds).collect())?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_sweep(&spec, workers)?;
    println!("{:>10} {:>16} {:>16}", "lambda_min", "c_avg", "P_util");
    for v in report.values() {
        let agg = report.aggregate(v);
        println!("{:>10} {:>8.4} ± {:<6.4} {:>8.4} ± {:<6.4}", v.to_string(), agg.c_avg.0, agg.c_avg.1, agg.p_util.0, agg.p_util.1);
    }
    Ok(())
}
