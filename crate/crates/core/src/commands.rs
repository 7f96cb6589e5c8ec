//! File-producing entry points behind the command-line tool.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use crate::config::{load_run_config, render_resolved_config};
use crate::engine;
use crate::error::Result;
use crate::metrics::MetricsReport;
use crate::network;
use crate::output::{
    write_metrics, write_raster, write_summary, GRAPH_FILE, METRICS_FILE, RASTER_FILE,
    RESOLVED_CONFIG_FILE, SUMMARY_FILE, SWEEP_FILE,
};
use crate::rng::{substream, Stream};
use crate::sweep::{run_sweep_with, PointOutcome, SweepSpec};

/// Paths written by [`run_command`].
#[derive(Debug, Clone)]
pub struct RunOutputs {
    pub raster: PathBuf,
    pub summary: PathBuf,
    pub metrics: PathBuf,
    pub resolved_config: PathBuf,
    pub report: MetricsReport,
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

/// Execute one configured run and write raster, summary, metrics and the
/// resolved config into `out_dir`.
pub fn run_command(config: &Path, out_dir: &Path) -> Result<RunOutputs> {
    let params = load_run_config(config)?.validate()?;
    let run = engine::run(&params)?;
    let report = MetricsReport::from_run(&run, params.params().burn_in)?;

    fs::create_dir_all(out_dir)?;
    let outputs = RunOutputs {
        raster: out_dir.join(RASTER_FILE),
        summary: out_dir.join(SUMMARY_FILE),
        metrics: out_dir.join(METRICS_FILE),
        resolved_config: out_dir.join(RESOLVED_CONFIG_FILE),
        report,
    };
    write_raster(&run.frames, create(&outputs.raster)?)?;
    write_summary(&run.frames, create(&outputs.summary)?)?;
    write_metrics(params.params(), &outputs.report, create(&outputs.metrics)?)?;
    fs::write(&outputs.resolved_config, render_resolved_config(&params)?)?;
    Ok(outputs)
}

/// Run every sweep point and write the aggregated CSV.
pub fn sweep_command<F>(config: &Path, out_dir: &Path, parallelism: usize, progress: F) -> Result<PathBuf>
where
    F: Fn(&PointOutcome) + Sync,
{
    let spec = SweepSpec::load(config)?;
    let report = run_sweep_with(&spec, parallelism, progress)?;
    fs::create_dir_all(out_dir)?;
    let path = out_dir.join(SWEEP_FILE);
    report.write_csv(create(&path)?)?;
    Ok(path)
}

/// Build the configured communication graph and write it as an edge list.
pub fn graph_export_command(config: &Path, out_dir: &Path) -> Result<PathBuf> {
    let params = load_run_config(config)?.validate()?;
    let p = params.params();
    let graph = network::build(p.topology, p.n_agents, &mut substream(p.seed, Stream::Graph))?;
    fs::create_dir_all(out_dir)?;
    let path = out_dir.join(GRAPH_FILE);
    graph.write_edge_list(create(&path)?)?;
    Ok(path)
}
