//! Exact per-orientation face-intersection probabilities and the expected
//! vertex count of a uniformly translated slice.
//!
//! For a fixed orientation, the probability that the slice meets a given
//! (n-k)-face is the ratio of the normal-space volumes of the projected face
//! and the projected body. All 2^k faces sharing one free-index subset have
//! equal probability, so the expectation is assembled per subset with
//! multiplicity 2^k. The computed sum always lands on 2^k; the code returns
//! the sum itself so that identity stays a check rather than an assumption.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::NormalBasis;
use crate::slice::{face_zonotope, Body, Face, FlatOrientation};
use crate::subsets::combinations;

/// Hard cap on the ambient dimension; keeps the subset enumeration
/// (C(n, n-k) terms) interactive.
pub const MAX_DIMENSION: usize = 20;

/// Probability entry for one free-index subset: shared by all `multiplicity`
/// faces that fix the complementary coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct SubsetProbability {
    pub free_indices: Vec<usize>,
    pub probability: f64,
    pub multiplicity: u64,
}

/// Per-orientation probability table and its total expectation.
#[derive(Debug, Clone, Serialize)]
pub struct FaceProbabilityTable {
    pub n: usize,
    pub k: usize,
    pub orientation: FlatOrientation,
    /// (n-k)-volume of the body's normal-space projection.
    pub projected_body_volume: f64,
    pub entries: Vec<SubsetProbability>,
    /// Sum of multiplicity times probability over all entries.
    pub total_expectation: f64,
}

/// Two routes to the same normal-space volume sum.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TelescopingCheck {
    /// Sum over free-index subsets of the projected face volumes.
    pub face_volume_sum: f64,
    /// Volume of the projected body, via the subset-sum volume formula
    /// applied to all n projected generators at once.
    pub projection_volume: f64,
}

impl TelescopingCheck {
    pub fn relative_error(&self) -> f64 {
        if self.projection_volume == 0.0 {
            return f64::INFINITY;
        }
        (self.face_volume_sum - self.projection_volume).abs() / self.projection_volume
    }
}

fn validate(body: &Body, orientation: &FlatOrientation) -> Result<()> {
    if body.n() > MAX_DIMENSION {
        return Err(Error::InvalidInput(format!(
            "dimension {} exceeds the supported maximum {}",
            body.n(),
            MAX_DIMENSION
        )));
    }
    if orientation.ambient_dim() != body.n() {
        return Err(Error::InvalidInput(format!(
            "orientation in R^{} against a body in R^{}",
            orientation.ambient_dim(),
            body.n()
        )));
    }
    Ok(())
}

/// Normal-space volume of the face with the given free indices, computed
/// through the face machinery on the all-positive representative (the volume
/// is translation-invariant, so the representative stands for all 2^k).
fn subset_face_volume(body: &Body, basis: &NormalBasis, free_indices: &[usize]) -> Result<f64> {
    let face = Face::representative(body.n(), free_indices)?;
    let zonotope = face_zonotope(body, &face, basis)?;
    zonotope.volume(basis.subspace_dim())
}

/// Probability that a uniformly translated slice of the given orientation
/// meets a face with the given free-index subset.
pub fn face_probability(
    body: &Body,
    orientation: &FlatOrientation,
    free_indices: &[usize],
) -> Result<f64> {
    validate(body, orientation)?;
    let n = body.n();
    let k = orientation.k();
    if free_indices.len() != n - k {
        return Err(Error::InvalidInput(format!(
            "expected {} free indices, got {}",
            n - k,
            free_indices.len()
        )));
    }
    let basis = orientation.normal_basis()?;
    let projected_body_volume = body.zonotope().project(&basis)?.volume(n - k)?;
    if projected_body_volume <= 0.0 {
        return Err(Error::Internal(
            "projected body volume vanished for a full-rank orientation".into(),
        ));
    }
    Ok(subset_face_volume(body, &basis, free_indices)? / projected_body_volume)
}

/// Full probability table: one entry per (n-k)-subset of free indices, each
/// carrying multiplicity 2^k.
pub fn probability_table(body: &Body, orientation: &FlatOrientation) -> Result<FaceProbabilityTable> {
    validate(body, orientation)?;
    let n = body.n();
    let k = orientation.k();
    let basis = orientation.normal_basis()?;
    let projected_body_volume = body.zonotope().project(&basis)?.volume(n - k)?;
    if projected_body_volume <= 0.0 {
        return Err(Error::Internal(
            "projected body volume vanished for a full-rank orientation".into(),
        ));
    }
    let multiplicity = 1u64 << k;
    let mut entries = Vec::new();
    let mut total = 0.0;
    for free_indices in combinations(n, n - k) {
        let probability =
            subset_face_volume(body, &basis, &free_indices)? / projected_body_volume;
        total += multiplicity as f64 * probability;
        entries.push(SubsetProbability {
            free_indices,
            probability,
            multiplicity,
        });
    }
    Ok(FaceProbabilityTable {
        n,
        k,
        orientation: orientation.clone(),
        projected_body_volume,
        entries,
        total_expectation: total,
    })
}

/// Expected number of slice vertices for a uniformly translated flat of the
/// given orientation: the sum over free-index subsets of 2^k times the
/// subset's face probability. Mathematically this telescopes to exactly 2^k;
/// the computed sum is returned so the identity remains a numerical check.
pub fn expected_vertices_exact(body: &Body, orientation: &FlatOrientation) -> Result<f64> {
    Ok(probability_table(body, orientation)?.total_expectation)
}

/// Evaluates the volume sum on both sides of the telescoping step: the
/// numerator summed face-by-face versus the projected body volume expanded by
/// the subset-sum formula. The two must agree to ~1e-9 relative.
pub fn telescoping_check(body: &Body, orientation: &FlatOrientation) -> Result<TelescopingCheck> {
    validate(body, orientation)?;
    let n = body.n();
    let k = orientation.k();
    let basis = orientation.normal_basis()?;
    let mut face_volume_sum = 0.0;
    for free_indices in combinations(n, n - k) {
        face_volume_sum += subset_face_volume(body, &basis, &free_indices)?;
    }
    let projection_volume = body.zonotope().project(&basis)?.volume(n - k)?;
    Ok(TelescopingCheck {
        face_volume_sum,
        projection_volume,
    })
}
