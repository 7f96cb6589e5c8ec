//! Parameter sweeps over one axis and several seeds.
//!
//! Sweep config layout:
//!
//! ```toml
//! axis = "system_size"        # system_size | lambda_min | p_err | topology
//! values = [10, 100, 1000]    # topology values are labels: "ring", "ws:4:0.5", "ba:4"
//! seeds = [1, 2, 3, 4, 5]
//!
//! [base]                      # a run config; `seed` may be omitted
//! N = 100
//! # ...
//! ```
//!
//! Output rows are ordered by axis value, then seed. Each value gets one row
//! per seed followed by an aggregate row holding the mean and sample standard
//! deviation over the successful runs. Failed points become `error` rows.

use std::cmp::Ordering;
use std::fmt;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;

use crate::config::params_from_table;
use crate::engine;
use crate::error::{Error, Result};
use crate::metrics::MetricsReport;
use crate::output::{csv_err, metrics_fields, METRICS_HEADER};
use crate::params::{SystemParams, Topology};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    SystemSize,
    LambdaMin,
    ErrorProb,
    Topology,
}

impl SweepAxis {
    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::SystemSize => "system_size",
            SweepAxis::LambdaMin => "lambda_min",
            SweepAxis::ErrorProb => "p_err",
            SweepAxis::Topology => "topology",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "system_size" => SweepAxis::SystemSize,
            "lambda_min" => SweepAxis::LambdaMin,
            "p_err" => SweepAxis::ErrorProb,
            "topology" => SweepAxis::Topology,
            other => {
                return Err(Error::Config(format!(
                    "unknown sweep axis {other:?}; expected system_size, lambda_min, p_err or topology"
                )))
            }
        })
    }
}

/// One coordinate along the sweep axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AxisValue {
    Size(usize),
    Real(f64),
    Topology(Topology),
}

impl AxisValue {
    fn cmp_key(&self, other: &Self) -> Ordering {
        match (self, other) {
            (AxisValue::Size(a), AxisValue::Size(b)) => a.cmp(b),
            (AxisValue::Real(a), AxisValue::Real(b)) => a.total_cmp(b),
            (AxisValue::Topology(a), AxisValue::Topology(b)) => a.label().cmp(&b.label()),
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for AxisValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisValue::Size(n) => write!(f, "{n}"),
            AxisValue::Real(x) => write!(f, "{x}"),
            AxisValue::Topology(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: SystemParams,
    pub axis: SweepAxis,
    pub values: Vec<AxisValue>,
    pub seeds: Vec<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    axis: String,
    values: Vec<toml::Value>,
    seeds: Vec<u64>,
    base: toml::Table,
}

impl SweepSpec {
    /// Sorts and deduplicates values and seeds. Individual points are only
    /// validated when they run.
    pub fn new(base: SystemParams, axis: SweepAxis, mut values: Vec<AxisValue>, mut seeds: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Config("sweep needs at least one value".into()));
        }
        if seeds.is_empty() {
            return Err(Error::Config("sweep needs at least one seed".into()));
        }
        for v in &values {
            let ok = matches!(
                (axis, v),
                (SweepAxis::SystemSize, AxisValue::Size(_))
                    | (SweepAxis::LambdaMin | SweepAxis::ErrorProb, AxisValue::Real(_))
                    | (SweepAxis::Topology, AxisValue::Topology(_))
            );
            if !ok {
                return Err(Error::Config(format!("value {v} does not fit axis {}", axis.name())));
            }
        }
        values.sort_by(AxisValue::cmp_key);
        values.dedup();
        seeds.sort_unstable();
        seeds.dedup();
        Ok(SweepSpec {
            base,
            axis,
            values,
            seeds,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawSweep = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let axis = SweepAxis::parse(&raw.axis)?;
        let mut base = raw.base;
        base.entry("seed").or_insert(toml::Value::Integer(0));
        let base = params_from_table(base)?;
        let values = raw
            .values
            .iter()
            .map(|v| parse_value(axis, v))
            .collect::<Result<Vec<_>>>()?;
        SweepSpec::new(base, axis, values, raw.seeds)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        SweepSpec::parse(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Parameters for one (value, seed) point.
    pub fn point(&self, value: AxisValue, seed: u64) -> SystemParams {
        let mut p = self.base.clone();
        p.seed = seed;
        match value {
            AxisValue::Size(n) => p.n_agents = n,
            AxisValue::Real(x) => match self.axis {
                SweepAxis::LambdaMin => p.lambda_min = x,
                _ => p.p_err = x,
            },
            AxisValue::Topology(t) => p.topology = t,
        }
        p
    }
}

fn parse_value(axis: SweepAxis, v: &toml::Value) -> Result<AxisValue> {
    let bad = || Error::Config(format!("value {v} does not fit axis {}", axis.name()));
    match axis {
        SweepAxis::SystemSize => v
            .as_integer()
            .and_then(|n| usize::try_from(n).ok())
            .map(AxisValue::Size)
            .ok_or_else(bad),
        SweepAxis::LambdaMin | SweepAxis::ErrorProb => v
            .as_float()
            .or_else(|| v.as_integer().map(|i| i as f64))
            .map(AxisValue::Real)
            .ok_or_else(bad),
        SweepAxis::Topology => v
            .as_str()
            .ok_or_else(bad)?
            .parse()
            .map(AxisValue::Topology),
    }
}

/// Result of one sweep point.
#[derive(Debug, Clone)]
pub struct PointOutcome {
    pub value: AxisValue,
    pub params: SystemParams,
    pub result: std::result::Result<MetricsReport, String>,
}

/// Mean and sample standard deviation of the metrics over one value's runs.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub value: AxisValue,
    pub runs: usize,
    pub c_avg: (f64, f64),
    pub p_util: (f64, f64),
    pub gini: (f64, f64),
    pub a_avg_mean: (f64, f64),
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub axis: SweepAxis,
    /// Value-major, seed-minor.
    pub outcomes: Vec<PointOutcome>,
}

/// Mean and sample standard deviation (zero for a single sample).
pub fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

impl SweepReport {
    pub fn outcomes_for(&self, value: AxisValue) -> impl Iterator<Item = &PointOutcome> {
        self.outcomes.iter().filter(move |o| o.value == value)
    }

    pub fn aggregate(&self, value: AxisValue) -> Aggregate {
        let ok: Vec<&MetricsReport> = self
            .outcomes_for(value)
            .filter_map(|o| o.result.as_ref().ok())
            .collect();
        let stat = |f: fn(&MetricsReport) -> f64| mean_std(&ok.iter().map(|m| f(m)).collect::<Vec<_>>());
        Aggregate {
            value,
            runs: ok.len(),
            c_avg: stat(|m| m.c_avg),
            p_util: stat(|m| m.p_util),
            gini: stat(|m| m.gini),
            a_avg_mean: stat(|m| m.a_avg_mean),
        }
    }

    /// Distinct axis values in output order.
    pub fn values(&self) -> Vec<AxisValue> {
        let mut out: Vec<AxisValue> = Vec::new();
        for o in &self.outcomes {
            if out.last() != Some(&o.value) {
                out.push(o.value);
            }
        }
        out
    }

    /// Columns: `kind,axis,axis_value`, the nine metrics columns, then
    /// `c_avg_std,P_util_std,gini_std,a_avg_mean_std,runs,error`. For
    /// aggregate rows the metric columns hold means and `seed` is empty.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["kind", "axis", "axis_value"];
        header.extend(METRICS_HEADER);
        header.extend(["c_avg_std", "P_util_std", "gini_std", "a_avg_mean_std", "runs", "error"]);
        w.write_record(&header).map_err(csv_err)?;

        let axis = self.axis.name();
        for value in self.values() {
            let mut first: Option<&SystemParams> = None;
            for o in self.outcomes_for(value) {
                first.get_or_insert(&o.params);
                let mut row = vec!["run".to_string(), axis.to_string(), value.to_string()];
                match &o.result {
                    Ok(m) => {
                        row.extend(metrics_fields(&o.params, m));
                        row.extend(std::iter::repeat(String::new()).take(4));
                        row.push("1".into());
                        row.push(String::new());
                    }
                    Err(msg) => {
                        row[0] = "error".into();
                        row.extend([
                            o.params.seed.to_string(),
                            o.params.n_agents.to_string(),
                            o.params.topology.label(),
                            o.params.lambda_min.to_string(),
                            o.params.p_err.to_string(),
                        ]);
                        row.extend(std::iter::repeat(String::new()).take(8));
                        row.push("0".into());
                        row.push(msg.clone());
                    }
                }
                w.write_record(&row).map_err(csv_err)?;
            }
            let agg = self.aggregate(value);
            let p = first.expect("every value has at least one seed");
            let num = |x: f64| if agg.runs == 0 { String::new() } else { x.to_string() };
            let row = vec![
                "aggregate".to_string(),
                axis.to_string(),
                value.to_string(),
                String::new(),
                p.n_agents.to_string(),
                p.topology.label(),
                p.lambda_min.to_string(),
                p.p_err.to_string(),
                num(agg.c_avg.0),
                num(agg.p_util.0),
                num(agg.gini.0),
                num(agg.a_avg_mean.0),
                num(agg.c_avg.1),
                num(agg.p_util.1),
                num(agg.gini.1),
                num(agg.a_avg_mean.1),
                agg.runs.to_string(),
                String::new(),
            ];
            w.write_record(&row).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn run_point(params: &SystemParams) -> std::result::Result<MetricsReport, String> {
    let validated = params.validate().map_err(|e| e.to_string())?;
    let run = engine::run(&validated).map_err(|e| e.to_string())?;
    MetricsReport::from_run(&run, params.burn_in).map_err(|e| e.to_string())
}

/// Run every point on a pool of `parallelism` workers. Output order and
/// content do not depend on `parallelism`.
pub fn run_sweep(spec: &SweepSpec, parallelism: usize) -> Result<SweepReport> {
    run_sweep_with(spec, parallelism, |_| {})
}

/// As [`run_sweep`], calling `progress` after each finished point.
pub fn run_sweep_with<F>(spec: &SweepSpec, parallelism: usize, progress: F) -> Result<SweepReport>
where
    F: Fn(&PointOutcome) + Sync,
{
    let points: Vec<(AxisValue, SystemParams)> = spec
        .values
        .iter()
        .flat_map(|&v| spec.seeds.iter().map(move |&s| (v, s)))
        .map(|(v, s)| (v, spec.point(v, s)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let outcomes = pool.install(|| {
        points
            .into_par_iter()
            .map(|(value, params)| {
                let outcome = PointOutcome {
                    value,
                    result: run_point(&params),
                    params,
                };
                progress(&outcome);
                outcome
            })
            .collect()
    });
    Ok(SweepReport {
        axis: spec.axis,
        outcomes,
    })
}
