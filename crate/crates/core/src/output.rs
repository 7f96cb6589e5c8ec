//! File formats for traces and metrics.
//!
//! * raster: one line per frame, N space-separated symbols in {-1, 0, 1};
//! * summary CSV: `t,n,a_avg,P_all,cooperator_count,defector_count,ignore_count`;
//! * metrics CSV: `seed,N,topology,lambda_min,p_err,c_avg,P_util,gini,a_avg_mean`.

use std::io::{BufRead, Write};

use crate::engine::StepFrame;
use crate::error::{Error, Result};
use crate::metrics::MetricsReport;
use crate::params::{Strategy, SystemParams};

pub const RASTER_FILE: &str = "raster.txt";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const METRICS_FILE: &str = "metrics.csv";
pub const RESOLVED_CONFIG_FILE: &str = "resolved_config.toml";
pub const SWEEP_FILE: &str = "sweep.csv";
pub const GRAPH_FILE: &str = "graph.txt";

pub const SUMMARY_HEADER: [&str; 7] = [
    "t",
    "n",
    "a_avg",
    "P_all",
    "cooperator_count",
    "defector_count",
    "ignore_count",
];

pub const METRICS_HEADER: [&str; 9] = [
    "seed",
    "N",
    "topology",
    "lambda_min",
    "p_err",
    "c_avg",
    "P_util",
    "gini",
    "a_avg_mean",
];

pub fn write_raster<W: Write>(frames: &[StepFrame], mut out: W) -> Result<()> {
    let mut line = String::new();
    for f in frames {
        line.clear();
        for (i, s) in f.strategies.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            line.push_str(match s {
                Strategy::Cooperate => "-1",
                Strategy::Ignore => "0",
                Strategy::Defect => "1",
            });
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}

/// Parse a raster file; every row must have the same width.
pub fn read_raster<R: BufRead>(input: R) -> Result<Vec<Vec<Strategy>>> {
    let mut rows: Vec<Vec<Strategy>> = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .ok()
                    .and_then(Strategy::from_value)
                    .ok_or_else(|| Error::Config(format!("raster line {lineno}: bad symbol {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Config(format!(
                    "raster line {lineno}: {} symbols, expected {}",
                    row.len(),
                    first.len()
                )));
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn write_summary<W: Write>(frames: &[StepFrame], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SUMMARY_HEADER).map_err(csv_err)?;
    for f in frames {
        w.write_record([
            f.t.to_string(),
            f.n.to_string(),
            f.a_avg.to_string(),
            f.total_power().to_string(),
            f.count(Strategy::Cooperate).to_string(),
            f.count(Strategy::Defect).to_string(),
            f.count(Strategy::Ignore).to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// The nine metrics columns for one run.
pub fn metrics_fields(params: &SystemParams, report: &MetricsReport) -> [String; 9] {
    [
        params.seed.to_string(),
        params.n_agents.to_string(),
        params.topology.label(),
        params.lambda_min.to_string(),
        params.p_err.to_string(),
        report.c_avg.to_string(),
        report.p_util.to_string(),
        report.gini.to_string(),
        report.a_avg_mean.to_string(),
    ]
}

pub fn write_metrics<W: Write>(params: &SystemParams, report: &MetricsReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(METRICS_HEADER).map_err(csv_err)?;
    w.write_record(metrics_fields(params, report)).map_err(csv_err)?;
    w.flush()?;
    Ok(())
}

pub(crate) fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Config(format!("csv: {other:?}")),
    }
}
