//! Circuit mathematics for the physical layer.
//!
//! A source of voltage `V * sqrt(N)` with inner resistance `R_V` feeds `n`
//! identical resistors of `R = N * R_0` in parallel. Agent `i` owns `a_i` of
//! them. Solving the circuit and substituting `mu = R_0 / R_V` gives the
//! mean-field form
//!
//! ```text
//! P_i = P_typ * a_i * mu / (a_avg + mu)^2,   a_avg = n / N,   P_typ = V^2 / R_V
//! ```
//!
//! which depends on the other agents only through the total count `n`.

use crate::error::{Error, Result};

/// The constants that fix the power curve of a system of `n_agents` agents.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circuit {
    n_agents: usize,
    mu: f64,
    p_typ: f64,
}

/// Resistor allocation and the resulting per-agent powers for one step.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerState {
    pub a: Vec<u64>,
    pub n: u64,
    pub a_avg: f64,
    pub power: Vec<f64>,
}

impl Circuit {
    /// Build from already-derived constants. `n_agents` may be 1 here; the
    /// single-agent circuit is useful for analysis even though runs need two.
    pub fn new(n_agents: usize, mu: f64, p_typ: f64) -> Self {
        Circuit {
            n_agents,
            mu,
            p_typ,
        }
    }

    pub fn from_resistances(n_agents: usize, r_source: f64, r_unit: f64, voltage: f64) -> Self {
        Circuit::new(n_agents, r_unit / r_source, voltage * voltage / r_source)
    }

    pub fn n_agents(&self) -> usize {
        self.n_agents
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn p_typ(&self) -> f64 {
        self.p_typ
    }

    /// Power delivered to an agent holding `a_i` of the `n` active resistors.
    pub fn power(&self, a_i: u64, n: u64) -> Result<f64> {
        if a_i < 1 {
            return Err(Error::domain("an agent holds at least one resistor"));
        }
        if n < a_i {
            return Err(Error::domain(format!(
                "total resistor count {n} is below the agent's own {a_i}"
            )));
        }
        if n < self.n_agents as u64 {
            return Err(Error::domain(format!(
                "total resistor count {n} is below the agent count {}",
                self.n_agents
            )));
        }
        Ok(self.power_unchecked(a_i, n))
    }

    #[inline]
    pub(crate) fn power_unchecked(&self, a_i: u64, n: u64) -> f64 {
        let a_avg = n as f64 / self.n_agents as f64;
        let denom = a_avg + self.mu;
        self.p_typ * a_i as f64 * self.mu / (denom * denom)
    }

    /// Evaluate every agent's power for the allocation `a`.
    pub fn state(&self, a: Vec<u64>) -> Result<PowerState> {
        if a.len() != self.n_agents {
            return Err(Error::domain(format!(
                "allocation has {} entries for {} agents",
                a.len(),
                self.n_agents
            )));
        }
        if let Some(i) = a.iter().position(|&ai| ai == 0) {
            return Err(Error::domain(format!("agent {i} holds no resistor")));
        }
        let n: u64 = a.iter().sum();
        let power = a.iter().map(|&ai| self.power_unchecked(ai, n)).collect();
        Ok(PowerState {
            a_avg: n as f64 / self.n_agents as f64,
            n,
            a,
            power,
        })
    }

    /// Closed-form total power when `n` resistors are active in total.
    pub fn total_power_at(&self, n: u64) -> f64 {
        let a_avg = n as f64 / self.n_agents as f64;
        let denom = a_avg + self.mu;
        self.p_typ * self.mu * self.n_agents as f64 * a_avg / (denom * denom)
    }

    /// Resistor count that maximises the total power, N * mu.
    pub fn optimal_total(&self) -> f64 {
        self.n_agents as f64 * self.mu
    }

    /// First-order estimate of an agent's gain from its own change `delta_a`
    /// and the others' change `delta_r`, evaluated at the new state.
    pub fn approx_gain(&self, a_i: u64, delta_a: i64, delta_r: i64, a_avg: f64) -> f64 {
        let own = delta_a as f64 / a_i as f64;
        let feedback =
            2.0 / self.n_agents as f64 * (delta_r + delta_a) as f64 / (a_avg + self.mu);
        own - feedback
    }
}

impl PowerState {
    pub fn total_power(&self) -> f64 {
        self.power.iter().sum()
    }
}

/// Relative power change between two consecutive steps.
pub fn exact_gain(p_now: f64, p_prev: f64) -> Result<f64> {
    if !(p_prev > 0.0) {
        return Err(Error::domain(format!("previous power must be > 0, got {p_prev}")));
    }
    Ok((p_now - p_prev) / p_prev)
}

/// Own-resistor count beyond which adding one more yields less than
/// `lambda_min` in the large-system limit.
pub fn tipping_point(lambda_min: f64) -> Result<f64> {
    if !(lambda_min > 0.0) {
        return Err(Error::domain(format!("lambda_min must be > 0, got {lambda_min}")));
    }
    Ok(1.0 / lambda_min)
}
