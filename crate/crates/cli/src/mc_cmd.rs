//! `mc` subcommand: Monte Carlo estimation with optional CSV histogram.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use hyperslice::{estimate_expected_vertices, Error, EstimateReport, Result, SimulationConfig};

use crate::manifest::RunManifest;

#[derive(Debug, Serialize)]
pub struct McReport {
    pub manifest: RunManifest,
    pub report: EstimateReport,
}

pub fn run(config: &SimulationConfig, manifest: RunManifest) -> Result<McReport> {
    let report = estimate_expected_vertices(config)?;
    Ok(McReport { manifest, report })
}

/// Writes `count,frequency` rows sorted by count.
pub fn write_histogram_csv(path: &Path, report: &EstimateReport) -> Result<()> {
    let mut out = String::from("count,frequency\n");
    for (count, freq) in &report.histogram {
        out.push_str(&format!("{count},{freq}\n"));
    }
    let mut file = std::fs::File::create(path)
        .map_err(|e| Error::InvalidInput(format!("cannot create {}: {e}", path.display())))?;
    file.write_all(out.as_bytes())
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}
