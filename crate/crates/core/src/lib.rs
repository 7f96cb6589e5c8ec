//! Agent-based simulation of a system built from three coupled layers.
//!
//! * **Physical** ([`physical`]): a voltage source with inner resistance feeds
//!   a bank of identical parallel resistors. Each agent controls some of them
//!   and receives power in proportion to its share.
//! * **Communication** ([`network`]): agents tell their neighbours on a ring,
//!   Watts-Strogatz or Barabasi-Albert graph what they did last step, over
//!   links that corrupt symbols with probability `p_err`.
//! * **Decision** ([`decision`]): an agent repeats its last action if it paid
//!   off by at least `lambda_min`, follows a cooperative neighbourhood, or
//!   otherwise acts on a private selfishness gene.
//!
//! [`engine`] runs the three layers in lock-step from a single seed,
//! [`metrics`] summarises a trace and [`sweep`] repeats runs over a parameter
//! axis.
//!
//! ```
//! use coupled_layers::{engine, metrics::MetricsReport, SystemParams};
//!
//! let params = SystemParams { n_agents: 20, steps: 200, seed: 1, ..Default::default() }
//!     .validate()
//!     .unwrap();
//! let run = engine::run(&params).unwrap();
//! let report = MetricsReport::from_run(&run, 0).unwrap();
//! assert!((0.0..=1.0).contains(&report.c_avg));
//! ```

pub mod commands;
pub mod config;
pub mod decision;
pub mod engine;
pub mod error;
pub mod metrics;
pub mod network;
pub mod output;
pub mod params;
pub mod physical;
pub mod rng;
pub mod sweep;

pub use error::{Error, Result};
pub use params::{Strategy, SystemParams, Topology, ValidatedParams};
