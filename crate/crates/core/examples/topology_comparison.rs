//! Power utilisation and Gini index of the time-averaged power per agent,
//! for each communication topology.
//!
//! cargo run --release --example topology_comparison -- [N] [seeds]

use coupled_layers::sweep::{run_sweep, AxisValue, SweepAxis, SweepSpec};
use coupled_layers::{SystemParams, Topology};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(1000), |s| s.parse())?;
    let seeds: u64 = args.next().map_or(Ok(3), |s| s.parse())?;
    let base = SystemParams { n_agents: n, lambda_min: 0.005, burn_in: 500, ..SystemParams::default() };
    let topologies = [
        Topology::Ring,
        Topology::WattsStrogatz { k: 4, beta: 0.1 },
        Topology::WattsStrogatz { k: 4, beta: 0.5 },
        Topology::BarabasiAlbert { m: 1 },
        Topology::BarabasiAlbert { m: 4 },
    ];
    let spec = SweepSpec::new(base, SweepAxis::Topology, topologies.map(AxisValue::Topology).to_vec(), (1..=seeds).collect())?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_sweep(&spec, workers)?;
    println!("{:<14} {:>16} {:>16}", "topology", "P_util", "gini");
    for v in report.values() {
        let agg = report.aggregate(v);
        println!("{:<14} {:>8.4} ± {:<6.4} {:>8.4} ± {:<6.4}", v.to_string(), agg.p_util.0, agg.p_util.1, agg.gini.0, agg.gini.1);
    }
    Ok(())
}
