//! What a receiver hears when every link flips the symbol with probability
//! p_err, and how that shifts the neighbourhood vote.

use coupled_layers::network::{broadcast, ring, transmit};
use coupled_layers::rng::{substream, Stream};
use coupled_layers::Strategy;

fn main() {
    let mut rng = substream(7, Stream::Dynamics);
    let trials = 100_000;
    for p_err in [0.0, 0.01, 0.1, 0.5] {
        let mut heard = [0usize; 3];
        for _ in 0..trials {
            let s = transmit(Strategy::Cooperate, p_err, &mut rng);
            heard[(s.value() + 1) as usize] += 1;
        }
        let f = |k: usize| heard[k] as f64 / trials as f64;
        println!("p_err {p_err:<5} sent C -> heard C {:.4}  I {:.4}  D {:.4}", f(0), f(1), f(2));
    }

    // a fully cooperative ring: how often does an agent miss the majority?
    let g = ring(1000).unwrap();
    let states = vec![Strategy::Cooperate; 1000];
    for p_err in [0.01, 0.1, 0.5] {
        let mut missed = 0;
        for _ in 0..100 {
            let inbox = broadcast(&states, &g, p_err, &mut rng);
            missed += (0..1000).filter(|&i| inbox.sum(i) >= 0).count();
        }
        println!("p_err {p_err:<5} cooperative majority lost in {:.4} of inboxes", missed as f64 / 100_000.0);
    }
}
