//! Time series of the average resistor count and the cooperator share for
//! systems of 5, 10, 100 and 1000 agents, printed every 200 steps.

use coupled_layers::engine::Simulation;
use coupled_layers::{Strategy, SystemParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sizes = [5, 10, 100, 1000];
    let mut sims = Vec::new();
    for n in sizes {
        let params = SystemParams { n_agents: n, lambda_min: 0.005, seed: 2, ..SystemParams::default() }.validate()?;
        sims.push(Simulation::new(&params)?);
    }
    print!("{:>5}", "t");
    for n in sizes {
        print!(" {:>16}", format!("N={n} a_avg/c"));
    }
    println!();
    for t in 0..=4000 {
        let frames: Vec<_> = sims.iter_mut().map(|s| if t == 0 { s.frame() } else { s.step() }).collect();
        if t % 200 == 0 {
            print!("{t:>5}");
            for f in &frames {
                let c = f.count(Strategy::Cooperate) as f64 / f.strategies.len() as f64;
                print!(" {:>10.1} {c:>5.2}", f.a_avg);
            }
            println!();
        }
    }
    Ok(())
}
