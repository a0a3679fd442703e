//! `exact` subcommand: per-orientation expectation and probability table.

use serde::Serialize;

use hyperslice::{
    expected_vertices_exact, probability_table, telescoping_check, Body, FlatOrientation, Result,
    SubsetProbability,
};

use crate::manifest::RunManifest;

#[derive(Debug, Serialize)]
pub struct TelescopingReport {
    pub face_volume_sum: f64,
    pub projection_volume: f64,
    pub relative_error: f64,
}

#[derive(Debug, Serialize)]
pub struct ExactReport {
    pub manifest: RunManifest,
    pub n: usize,
    pub k: usize,
    /// The identity value the expectation is checked against: 2^k.
    pub theorem_value: f64,
    pub expectation: f64,
    /// |expectation - theorem_value|.
    pub deviation: f64,
    pub projected_body_volume: f64,
    pub orientation: Vec<Vec<f64>>,
    pub table: Vec<SubsetProbability>,
    pub telescoping: TelescopingReport,
}

pub fn run(body: &Body, orientation: &FlatOrientation, manifest: RunManifest) -> Result<ExactReport> {
    let table = probability_table(body, orientation)?;
    let expectation = expected_vertices_exact(body, orientation)?;
    let telescoping = telescoping_check(body, orientation)?;
    let k = orientation.k();
    let theorem_value = (1u64 << k) as f64;
    Ok(ExactReport {
        manifest,
        n: body.n(),
        k,
        theorem_value,
        expectation,
        deviation: (expectation - theorem_value).abs(),
        projected_body_volume: table.projected_body_volume,
        orientation: orientation
            .spans()
            .iter()
            .map(|v| v.coords().to_vec())
            .collect(),
        table: table.entries,
        telescoping: TelescopingReport {
            face_volume_sum: telescoping.face_volume_sum,
            projection_volume: telescoping.projection_volume,
            relative_error: telescoping.relative_error(),
        },
    })
}
