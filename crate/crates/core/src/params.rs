//! Run parameters, the strategy alphabet and derived circuit constants.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::physical::Circuit;

/// Behaviour class of an agent in one step. The integer encoding is part of
/// every exported file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Strategy {
    /// Removed a resistor.
    Cooperate = -1,
    /// Did nothing.
    Ignore = 0,
    /// Added a resistor.
    Defect = 1,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Cooperate, Strategy::Ignore, Strategy::Defect];

    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            -1 => Some(Strategy::Cooperate),
            0 => Some(Strategy::Ignore),
            1 => Some(Strategy::Defect),
            _ => None,
        }
    }

    /// The two symbols a corrupted transmission of `self` may turn into.
    pub fn others(self) -> [Strategy; 2] {
        match self {
            Strategy::Cooperate => [Strategy::Ignore, Strategy::Defect],
            Strategy::Ignore => [Strategy::Cooperate, Strategy::Defect],
            Strategy::Defect => [Strategy::Cooperate, Strategy::Ignore],
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Communication graph family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Topology {
    Ring,
    /// Ring lattice of mean degree `k`, each lattice edge rewired with probability `beta`.
    WattsStrogatz { k: usize, beta: f64 },
    /// Preferential attachment with `m` links per new node.
    BarabasiAlbert { m: usize },
}

impl Topology {
    /// Name used for the `topology` config key.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Topology::Ring => "ring",
            Topology::WattsStrogatz { .. } => "watts_strogatz",
            Topology::BarabasiAlbert { .. } => "barabasi_albert",
        }
    }

    /// Compact label used in CSV output and sweep configs: `ring`, `ws:K:beta`, `ba:m`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Topology::Ring => write!(f, "ring"),
            Topology::WattsStrogatz { k, beta } => write!(f, "ws:{k}:{beta}"),
            Topology::BarabasiAlbert { m } => write!(f, "ba:{m}"),
        }
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::param("topology", format!("cannot parse topology label {s:?}"));
        let mut parts = s.trim().split(':');
        match parts.next() {
            Some("ring") if parts.clone().next().is_none() => Ok(Topology::Ring),
            Some("ws") => {
                let k = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                let beta = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if parts.next().is_some() {
                    return Err(bad());
                }
                Ok(Topology::WattsStrogatz { k, beta })
            }
            Some("ba") => {
                let m = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if parts.next().is_some() {
                    return Err(bad());
                }
                Ok(Topology::BarabasiAlbert { m })
            }
            _ => Err(bad()),
        }
    }
}

/// Everything needed to define one simulation run.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    /// Number of agents N.
    pub n_agents: usize,
    /// Source resistance R_V in ohms.
    pub r_source: f64,
    /// Per-unit load constant R_0 in ohms; each resistor is R = N * R_0.
    pub r_unit: f64,
    /// Base source voltage in volts, before the sqrt(N) scaling.
    pub voltage: f64,
    pub lambda_min: f64,
    /// Per directed edge, per step symbol error probability.
    pub p_err: f64,
    pub topology: Topology,
    /// Number of simulated steps T.
    pub steps: usize,
    /// Leading frames excluded from the summary metrics.
    pub burn_in: usize,
    pub seed: u64,
}

impl Default for SystemParams {
    /// Reference setting: N = 100, R_V = 2 ohm, R_0 = 200 ohm, V = 1 V,
    /// lambda_min = 0.0005, p_err = 0.01 on a ring.
    fn default() -> Self {
        SystemParams {
            n_agents: 100,
            r_source: 2.0,
            r_unit: 200.0,
            voltage: 1.0,
            lambda_min: 0.0005,
            p_err: 0.01,
            topology: Topology::Ring,
            steps: 4000,
            burn_in: 0,
            seed: 0,
        }
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<ValidatedParams> {
        let n = self.n_agents;
        if n < 2 {
            return Err(Error::param("N", format!("need at least 2 agents, got {n}")));
        }
        for (field, v) in [
            ("R_V_ohm", self.r_source),
            ("R0_ohm", self.r_unit),
            ("V_volt", self.voltage),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::param(field, format!("must be finite and > 0, got {v}")));
            }
        }
        if !self.lambda_min.is_finite() {
            return Err(Error::param("lambda_min", "must be finite"));
        }
        if !(0.0..=1.0).contains(&self.p_err) {
            return Err(Error::param(
                "p_err",
                format!("must lie in [0, 1], got {}", self.p_err),
            ));
        }
        if self.steps == 0 {
            return Err(Error::param("steps", "must be positive"));
        }
        if self.burn_in >= self.steps {
            return Err(Error::param(
                "burn_in",
                format!("must be < steps ({}), got {}", self.steps, self.burn_in),
            ));
        }
        match self.topology {
            Topology::Ring => {
                if n < 3 {
                    return Err(Error::param("N", format!("ring needs N >= 3, got {n}")));
                }
            }
            Topology::WattsStrogatz { k, beta } => {
                if k == 0 || k % 2 != 0 {
                    return Err(Error::param("ws_K", format!("must be even and positive, got {k}")));
                }
                if k >= n {
                    return Err(Error::param("ws_K", format!("must be < N ({n}), got {k}")));
                }
                if !(0.0..=1.0).contains(&beta) {
                    return Err(Error::param("ws_beta", format!("must lie in [0, 1], got {beta}")));
                }
            }
            Topology::BarabasiAlbert { m } => {
                if m == 0 || m >= n {
                    return Err(Error::param("ba_m", format!("must satisfy 1 <= m < N ({n}), got {m}")));
                }
            }
        }
        let mu = self.r_unit / self.r_source;
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::param("R0_ohm", format!("ratio R0/R_V = {mu} is not finite and positive")));
        }
        Ok(ValidatedParams {
            params: self.clone(),
            mu,
            r_load: n as f64 * self.r_unit,
            v_scaled: self.voltage * (n as f64).sqrt(),
            p_typ: self.voltage * self.voltage / self.r_source,
        })
    }
}

/// Parameters that passed validation, with the derived circuit constants.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidatedParams {
    params: SystemParams,
    mu: f64,
    r_load: f64,
    v_scaled: f64,
    p_typ: f64,
}

impl ValidatedParams {
    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn n_agents(&self) -> usize {
        self.params.n_agents
    }

    /// mu = R_0 / R_V, the optimal mean resistor count per agent.
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Value R = N * R_0 of a single resistor.
    pub fn r_load(&self) -> f64 {
        self.r_load
    }

    /// Source voltage after sqrt(N) scaling.
    pub fn v_scaled(&self) -> f64 {
        self.v_scaled
    }

    /// P_typ = V^2 / R_V with the unscaled voltage.
    pub fn p_typ(&self) -> f64 {
        self.p_typ
    }

    pub fn circuit(&self) -> Circuit {
        Circuit::new(self.params.n_agents, self.mu, self.p_typ)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_constants() {
        let p = SystemParams::default().validate().unwrap();
        assert_eq!(p.mu(), 100.0);
        assert_eq!(p.r_load(), 20000.0);
        assert_eq!(p.v_scaled(), 10.0);
        assert_eq!(p.p_typ(), 0.5);
    }

    #[test]
    fn identity_scale() {
        let p = SystemParams {
            n_agents: 2,
            r_source: 1.0,
            r_unit: 1.0,
            voltage: 1.0,
            topology: Topology::BarabasiAlbert { m: 1 },
            ..SystemParams::default()
        }
        .validate()
        .unwrap();
        assert_eq!(p.mu(), 1.0);
        assert_eq!(p.r_load(), 2.0);
    }

    #[test]
    fn rejects_out_of_range_error_probability() {
        let err = SystemParams {
            p_err: 1.5,
            ..SystemParams::default()
        }
        .validate()
        .unwrap_err();
        assert!(matches!(err, Error::InvalidParam { field: "p_err", .. }), "{err}");
    }

    #[test]
    fn rejects_bad_fields() {
        let cases: Vec<(SystemParams, &str)> = vec![
            (SystemParams { n_agents: 1, ..Default::default() }, "N"),
            (SystemParams { n_agents: 2, ..Default::default() }, "N"),
            (SystemParams { r_source: 0.0, ..Default::default() }, "R_V_ohm"),
            (SystemParams { r_unit: -1.0, ..Default::default() }, "R0_ohm"),
            (SystemParams { voltage: f64::NAN, ..Default::default() }, "V_volt"),
            (SystemParams { steps: 0, ..Default::default() }, "steps"),
            (SystemParams { steps: 10, burn_in: 10, ..Default::default() }, "burn_in"),
            (
                SystemParams { topology: Topology::WattsStrogatz { k: 3, beta: 0.5 }, ..Default::default() },
                "ws_K",
            ),
            (
                SystemParams { n_agents: 4, topology: Topology::WattsStrogatz { k: 4, beta: 0.5 }, ..Default::default() },
                "ws_K",
            ),
            (
                SystemParams { topology: Topology::WattsStrogatz { k: 4, beta: 1.5 }, ..Default::default() },
                "ws_beta",
            ),
            (
                SystemParams { topology: Topology::BarabasiAlbert { m: 100 }, ..Default::default() },
                "ba_m",
            ),
        ];
        for (p, field) in cases {
            match p.validate() {
                Err(Error::InvalidParam { field: f, .. }) => assert_eq!(f, field, "{p:?}"),
                other => panic!("expected error on {field}, got {other:?}"),
            }
        }
    }

    #[test]
    fn validation_is_pure() {
        let p = SystemParams::default();
        assert_eq!(p.validate().unwrap(), p.validate().unwrap());
    }

    #[test]
    fn topology_labels_parse_back() {
        for t in [
            Topology::Ring,
            Topology::WattsStrogatz { k: 4, beta: 0.5 },
            Topology::BarabasiAlbert { m: 4 },
        ] {
            assert_eq!(t.label().parse::<Topology>().unwrap(), t);
        }
        assert!("ring:2".parse::<Topology>().is_err());
        assert!("ws:4".parse::<Topology>().is_err());
        assert!("star".parse::<Topology>().is_err());
    }

    #[test]
    fn strategy_encoding() {
        for s in Strategy::ALL {
            assert_eq!(Strategy::from_value(s.value() as i64), Some(s));
            assert!(!s.others().contains(&s));
        }
        assert_eq!(Strategy::from_value(2), None);
    }
}
