//! Communication layer: graph construction and the noisy state channel.

mod channel;
mod graph;

pub use channel::{broadcast, transmit, Inbox};
pub use graph::{barabasi_albert, build, ring, watts_strogatz, CommGraph};
