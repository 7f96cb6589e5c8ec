//! Power curve of the physical layer: per-agent and total power as the
//! average resistor count moves through the optimum, and where adding one
//! more resistor stops paying off.

use coupled_layers::physical::{exact_gain, tipping_point, Circuit};

fn main() {
    let n_agents = 100;
    let circuit = Circuit::from_resistances(n_agents, 2.0, 200.0, 1.0);
    println!("mu = {}, P_typ = {} W, optimum n = {}", circuit.mu(), circuit.p_typ(), circuit.optimal_total());

    println!("\n{:>8} {:>12} {:>10}", "a_avg", "P_all [W]", "P_all/max");
    let best = n_agents as f64 * circuit.p_typ() / 4.0;
    for a_avg in [1u64, 10, 25, 50, 100, 200, 400, 1000] {
        let total = circuit.total_power_at(a_avg * n_agents as u64);
        println!("{a_avg:>8} {total:>12.6} {:>10.4}", total / best);
    }

    // one agent grows while the other 99 sit at the optimum
    let others = 99 * 100;
    println!("\n{:>8} {:>14}", "a_i", "gain of +1");
    for a_i in [1u64, 10, 100, 1000, 2000, 5000] {
        let p0 = circuit.power(a_i, others + a_i).unwrap();
        let p1 = circuit.power(a_i + 1, others + a_i + 1).unwrap();
        println!("{a_i:>8} {:>14.6e}", exact_gain(p1, p0).unwrap());
    }
    println!("\ntipping point for lambda_min = 0.0005: a_i = {}", tipping_point(0.0005).unwrap());
}
