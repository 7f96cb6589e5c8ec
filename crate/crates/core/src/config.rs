//! TOML configuration files for single runs and sweeps.
//!
//! A run config is a flat table:
//!
//! ```toml
//! N = 100
//! R_V_ohm = 2.0
//! R0_ohm = 200.0
//! V_volt = 1.0
//! lambda_min = 0.0005
//! p_err = 0.01
//! topology = "ring"          # or "watts_strogatz" (ws_K, ws_beta) / "barabasi_albert" (ba_m)
//! steps = 4000
//! burn_in = 0                # optional
//! seed = 1
//! ```
//!
//! The resolved copy written next to run outputs adds a `[derived]` table,
//! which is ignored when read back.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{SystemParams, Topology, ValidatedParams};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRunConfig {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "R_V_ohm")]
    r_v_ohm: f64,
    #[serde(rename = "R0_ohm")]
    r0_ohm: f64,
    #[serde(rename = "V_volt")]
    v_volt: f64,
    lambda_min: f64,
    p_err: f64,
    topology: String,
    #[serde(rename = "ws_K", default, skip_serializing_if = "Option::is_none")]
    ws_k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ws_beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ba_m: Option<usize>,
    steps: usize,
    #[serde(default)]
    burn_in: usize,
    seed: u64,
    #[serde(rename = "derived", default, skip_serializing)]
    _derived: Option<toml::Table>,
}

#[derive(Debug, Serialize)]
struct Derived {
    mu: f64,
    #[serde(rename = "R_ohm")]
    r_ohm: f64,
    #[serde(rename = "V_scaled_volt")]
    v_scaled: f64,
    #[serde(rename = "P_typ_watt")]
    p_typ: f64,
}

#[derive(Debug, Serialize)]
struct Resolved {
    #[serde(flatten)]
    run: RawRunConfig,
    derived: Derived,
}

impl RawRunConfig {
    fn into_params(self) -> Result<SystemParams> {
        let topology = match self.topology.as_str() {
            "ring" => Topology::Ring,
            "watts_strogatz" => Topology::WattsStrogatz {
                k: self
                    .ws_k
                    .ok_or_else(|| Error::param("ws_K", "required when topology = \"watts_strogatz\""))?,
                beta: self
                    .ws_beta
                    .ok_or_else(|| Error::param("ws_beta", "required when topology = \"watts_strogatz\""))?,
            },
            "barabasi_albert" => Topology::BarabasiAlbert {
                m: self
                    .ba_m
                    .ok_or_else(|| Error::param("ba_m", "required when topology = \"barabasi_albert\""))?,
            },
            other => {
                return Err(Error::param(
                    "topology",
                    format!("expected ring, watts_strogatz or barabasi_albert, got {other:?}"),
                ))
            }
        };
        Ok(SystemParams {
            n_agents: self.n,
            r_source: self.r_v_ohm,
            r_unit: self.r0_ohm,
            voltage: self.v_volt,
            lambda_min: self.lambda_min,
            p_err: self.p_err,
            topology,
            steps: self.steps,
            burn_in: self.burn_in,
            seed: self.seed,
        })
    }

    fn from_params(p: &SystemParams) -> Self {
        let (ws_k, ws_beta, ba_m) = match p.topology {
            Topology::Ring => (None, None, None),
            Topology::WattsStrogatz { k, beta } => (Some(k), Some(beta), None),
            Topology::BarabasiAlbert { m } => (None, None, Some(m)),
        };
        RawRunConfig {
            n: p.n_agents,
            r_v_ohm: p.r_source,
            r0_ohm: p.r_unit,
            v_volt: p.voltage,
            lambda_min: p.lambda_min,
            p_err: p.p_err,
            topology: p.topology.kind_name().to_string(),
            ws_k,
            ws_beta,
            ba_m,
            steps: p.steps,
            burn_in: p.burn_in,
            seed: p.seed,
            _derived: None,
        }
    }
}

fn parse_error(e: toml::de::Error) -> Error {
    Error::Config(e.to_string())
}

/// Parse a run config. Does not validate the resulting parameters.
pub fn parse_run_config(text: &str) -> Result<SystemParams> {
    toml::from_str::<RawRunConfig>(text)
        .map_err(parse_error)?
        .into_params()
}

pub(crate) fn params_from_table(table: toml::Table) -> Result<SystemParams> {
    RawRunConfig::deserialize(table)
        .map_err(parse_error)?
        .into_params()
}

pub fn load_run_config(path: &Path) -> Result<SystemParams> {
    let text = fs::read_to_string(path)?;
    parse_run_config(&text).map_err(|e| match e {
        Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Serialise parameters as a run config.
pub fn render_run_config(params: &SystemParams) -> Result<String> {
    toml::to_string(&RawRunConfig::from_params(params))
        .map_err(|e| Error::Config(format!("cannot serialise config: {e}")))
}

/// Run config plus a `[derived]` table with mu, R, the scaled voltage and P_typ.
pub fn render_resolved_config(params: &ValidatedParams) -> Result<String> {
    let resolved = Resolved {
        run: RawRunConfig::from_params(params.params()),
        derived: Derived {
            mu: params.mu(),
            r_ohm: params.r_load(),
            v_scaled: params.v_scaled(),
            p_typ: params.p_typ(),
        },
    };
    toml::to_string(&resolved).map_err(|e| Error::Config(format!("cannot serialise config: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE: &str = r#"
N = 100
R_V_ohm = 2.0
R0_ohm = 200.0
V_volt = 1.0
lambda_min = 0.0005
p_err = 0.01
topology = "ring"
steps = 4000
seed = 7
"#;

    #[test]
    fn parses_reference_config() {
        let p = parse_run_config(REFERENCE).unwrap();
        assert_eq!(
            p,
            SystemParams {
                seed: 7,
                ..SystemParams::default()
            }
        );
    }

    #[test]
    fn missing_key_is_named() {
        let text = REFERENCE.replace("lambda_min = 0.0005\n", "");
        let err = parse_run_config(&text).unwrap_err().to_string();
        assert!(err.contains("lambda_min"), "{err}");
    }

    #[test]
    fn unknown_key_is_rejected_with_line() {
        let text = format!("{REFERENCE}bogus = 1\n");
        let err = parse_run_config(&text).unwrap_err().to_string();
        assert!(err.contains("bogus") && err.contains("line"), "{err}");
    }

    #[test]
    fn topology_specific_keys_are_required() {
        let text = REFERENCE.replace("\"ring\"", "\"watts_strogatz\"");
        let err = parse_run_config(&text).unwrap_err();
        assert!(matches!(err, Error::InvalidParam { field: "ws_K", .. }));
        let text = REFERENCE.replace("\"ring\"", "\"barabasi_albert\"");
        let err = parse_run_config(&text).unwrap_err();
        assert!(matches!(err, Error::InvalidParam { field: "ba_m", .. }));
        let text = REFERENCE.replace("\"ring\"", "\"star\"");
        assert!(parse_run_config(&text).is_err());
    }

    #[test]
    fn resolved_config_reads_back() {
        for topology in [
            Topology::Ring,
            Topology::WattsStrogatz { k: 4, beta: 0.5 },
            Topology::BarabasiAlbert { m: 4 },
        ] {
            let p = SystemParams {
                topology,
                lambda_min: 0.1 + 0.2,
                p_err: 1.0 / 3.0,
                burn_in: 17,
                ..SystemParams::default()
            };
            let text = render_resolved_config(&p.validate().unwrap()).unwrap();
            assert!(text.contains("[derived]"));
            assert!(text.contains("mu = 100.0"));
            assert_eq!(parse_run_config(&text).unwrap(), p);
            assert_eq!(parse_run_config(&render_run_config(&p).unwrap()).unwrap(), p);
        }
    }
}
