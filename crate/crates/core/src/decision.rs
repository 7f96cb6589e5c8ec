//! Agent decision rule and resistor bookkeeping.
//!
//! An agent whose last gain met the threshold repeats its strategy. Otherwise
//! it cooperates if its neighbours report a cooperative majority, and failing
//! that it consults its selfishness gene `s` twice: cooperate with probability
//! `1 - s`, then defect with probability `s` or stay idle.

use rand::Rng;

use crate::params::Strategy;

/// Which rule produced a decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Gain met the threshold; strategy repeated.
    Persist,
    /// Neighbour messages summed below zero.
    NeighbourMajority,
    /// First gene draw exceeded the gene.
    GeneCooperate,
    /// Second gene draw fell below the gene.
    GeneDefect,
    /// Second gene draw did not fall below the gene.
    GeneIgnore,
}

/// Mutable state of one agent.
#[derive(Debug, Clone, PartialEq)]
pub struct AgentRecord {
    pub id: usize,
    /// Active resistors, never below one.
    pub a: u64,
    pub strategy: Strategy,
    /// Selfishness in [0, 1), fixed for the run.
    pub gene: f64,
    pub last_power: f64,
    /// Relative power change realised over the last completed step.
    pub last_gain: f64,
}

impl AgentRecord {
    /// Fresh agent: idle, with a gain below any threshold.
    pub fn new(id: usize, a: u64, gene: f64, power: f64) -> Self {
        AgentRecord {
            id,
            a: a.max(1),
            strategy: Strategy::Ignore,
            gene,
            last_power: power,
            last_gain: f64::NEG_INFINITY,
        }
    }

    pub fn decide<R: Rng + ?Sized>(&self, inbox_sum: i64, lambda_min: f64, rng: &mut R) -> Strategy {
        self.decide_with_branch(inbox_sum, lambda_min, rng).0
    }

    /// Consumes no draw on the first two branches, one on gene cooperation and
    /// two otherwise. Draws are uniform on [0, 1).
    pub fn decide_with_branch<R: Rng + ?Sized>(
        &self,
        inbox_sum: i64,
        lambda_min: f64,
        rng: &mut R,
    ) -> (Strategy, Branch) {
        if self.last_gain >= lambda_min {
            return (self.strategy, Branch::Persist);
        }
        if inbox_sum < 0 {
            return (Strategy::Cooperate, Branch::NeighbourMajority);
        }
        if rng.gen::<f64>() > self.gene {
            return (Strategy::Cooperate, Branch::GeneCooperate);
        }
        if rng.gen::<f64>() < self.gene {
            (Strategy::Defect, Branch::GeneDefect)
        } else {
            (Strategy::Ignore, Branch::GeneIgnore)
        }
    }

    /// Apply a decision to the resistor count. Cooperation at one resistor is
    /// a physical no-op but the agent still reports cooperation.
    pub fn apply(&mut self, decision: Strategy) {
        match decision {
            Strategy::Defect => self.a += 1,
            Strategy::Cooperate => self.a = self.a.saturating_sub(1).max(1),
            Strategy::Ignore => {}
        }
        self.strategy = decision;
    }
}

/// Independent uniform genes on [0, 1), one per agent.
pub fn init_genes<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| rng.gen::<f64>()).collect()
}
