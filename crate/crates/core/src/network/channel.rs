use rand::Rng;

use super::graph::CommGraph;
use crate::params::Strategy;

/// Send one strategy symbol over a noisy link. With probability `p_err` the
/// receiver reads one of the two other symbols, each with probability 1/2.
///
/// Always consumes one uniform draw, plus one more when corruption happens.
pub fn transmit<R: Rng + ?Sized>(state: Strategy, p_err: f64, rng: &mut R) -> Strategy {
    if rng.gen::<f64>() < p_err {
        state.others()[rng.gen::<bool>() as usize]
    } else {
        state
    }
}

/// Messages received by every agent in one step, grouped by receiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inbox {
    offsets: Vec<usize>,
    messages: Vec<(usize, Strategy)>,
}

impl Inbox {
    /// `(sender, received symbol)` pairs for receiver `i`, senders ascending.
    pub fn received(&self, i: usize) -> &[(usize, Strategy)] {
        &self.messages[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Sum of received symbols at `i`; negative means a cooperative majority.
    pub fn sum(&self, i: usize) -> i64 {
        self.received(i).iter().map(|&(_, s)| s.value() as i64).sum()
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Every agent sends its state to every neighbour. Each directed link draws its
/// own corruption; links are visited receiver-major, senders ascending.
pub fn broadcast<R: Rng + ?Sized>(
    states: &[Strategy],
    graph: &CommGraph,
    p_err: f64,
    rng: &mut R,
) -> Inbox {
    assert_eq!(states.len(), graph.len(), "one state per graph node");
    let mut offsets = Vec::with_capacity(graph.len() + 1);
    let mut messages = Vec::with_capacity(2 * graph.edge_count());
    offsets.push(0);
    for i in 0..graph.len() {
        for &j in graph.neighbors(i) {
            messages.push((j, transmit(states[j], p_err, rng)));
        }
        offsets.push(messages.len());
    }
    Inbox { offsets, messages }
}
