//! Build the three communication graphs and compare their degree structure.

use coupled_layers::network::{self, CommGraph};
use coupled_layers::rng::{substream, Stream};
use coupled_layers::Topology;

fn describe(name: &str, g: &CommGraph) {
    let degrees = g.degrees();
    let max = degrees.iter().max().unwrap();
    let min = degrees.iter().min().unwrap();
    let mean = 2.0 * g.edge_count() as f64 / g.len() as f64;
    println!("{name:<22} edges {:>5}  degree min {min:>3} mean {mean:>5.2} max {max:>3}", g.edge_count());
}

fn main() {
    let n = 1000;
    for topology in [
        Topology::Ring,
        Topology::WattsStrogatz { k: 4, beta: 0.1 },
        Topology::WattsStrogatz { k: 4, beta: 1.0 },
        Topology::BarabasiAlbert { m: 1 },
        Topology::BarabasiAlbert { m: 4 },
    ] {
        let g = network::build(topology, n, &mut substream(1, Stream::Graph)).unwrap();
        describe(&topology.label(), &g);
    }

    let small = network::ring(6).unwrap();
    let mut out = Vec::new();
    small.write_edge_list(&mut out).unwrap();
    println!("\nring of six as an edge list:\n{}", String::from_utf8(out).unwrap());
}
