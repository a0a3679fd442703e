//! Monte Carlo pipeline for random slices: isotropic orientation sampling,
//! uniform translation sampling inside the body's normal-space projection,
//! vertex-count statistics, and per-subset face-hit frequencies.
//!
//! Sampling is embarrassingly parallel. Samples are partitioned into chunks
//! of a fixed size; chunk `c` draws from its own generator seeded by
//! [`chunk_seed`](crate::rng::chunk_seed)`(seed, c)`, and chunk results are
//! reduced in chunk order. Reports are therefore bit-identical across runs
//! regardless of the worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank_default, sample_unit_sphere, Vector, VectorList};
use crate::rng::{chunk_seed, SeededRng, RNG_ALGORITHM};
use crate::slice::{
    enumerate_faces, slice_vertices_with_diagnostics, Body, Flat, FlatOrientation,
};
use crate::subsets::combinations;
use crate::zonotope::{HalfspaceSet, UniformSampler, Zonotope, MEMBERSHIP_TOL};

/// Samples per parallel chunk (scaled up to whole orientation groups when
/// translations are resampled per orientation).
const SAMPLES_PER_CHUNK: u64 = 4096;

/// Redraw limit for rank-deficient orientation draws before concluding the
/// generator is broken.
const ORIENTATION_REDRAW_CAP: u64 = 100;

/// How slice orientations are chosen.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum OrientationMode {
    /// Orientation vectors drawn i.i.d. uniformly from the unit sphere.
    Isotropic,
    /// The first k standard basis vectors.
    AxisAligned,
    /// A caller-supplied fixed orientation.
    Fixed { orientation: FlatOrientation },
}

/// Configuration of one simulation run.
#[derive(Debug, Clone, Serialize)]
pub struct SimulationConfig {
    pub n: usize,
    pub k: usize,
    pub samples: u64,
    pub seed: u64,
    pub orientation_mode: OrientationMode,
    pub body: Body,
    /// Translations drawn per orientation before the orientation is redrawn.
    pub translation_resample_per_orientation: u64,
}

impl SimulationConfig {
    pub fn new(
        n: usize,
        k: usize,
        samples: u64,
        seed: u64,
        orientation_mode: OrientationMode,
        body: Body,
    ) -> Result<Self> {
        let config = Self {
            n,
            k,
            samples,
            seed,
            orientation_mode,
            body,
            translation_resample_per_orientation: 1,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_translation_resample(mut self, per_orientation: u64) -> Result<Self> {
        self.translation_resample_per_orientation = per_orientation;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k > self.n {
            return Err(Error::InvalidInput(format!(
                "slice dimension must satisfy 1 <= k <= n, got k={}, n={}",
                self.k, self.n
            )));
        }
        if self.samples == 0 {
            return Err(Error::InvalidInput("sample count must be >= 1".into()));
        }
        if self.translation_resample_per_orientation == 0 {
            return Err(Error::InvalidInput(
                "translation resample count must be >= 1".into(),
            ));
        }
        if self.body.n() != self.n {
            return Err(Error::InvalidInput(format!(
                "body dimension {} does not match n={}",
                self.body.n(),
                self.n
            )));
        }
        if let OrientationMode::Fixed { orientation } = &self.orientation_mode {
            if orientation.ambient_dim() != self.n || orientation.k() != self.k {
                return Err(Error::InvalidInput(format!(
                    "fixed orientation is {}-dimensional in R^{}, expected k={} in R^{}",
                    orientation.k(),
                    orientation.ambient_dim(),
                    self.k,
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// Result of a vertex-count estimation run.
#[derive(Debug, Clone, Serialize)]
pub struct EstimateReport {
    pub mean: f64,
    /// Sample standard deviation divided by sqrt(samples_used).
    pub std_error: f64,
    /// Vertex count -> number of samples attaining it.
    pub histogram: BTreeMap<usize, u64>,
    pub samples_used: u64,
    /// Samples whose nonzero vertex count fell below k+1.
    pub degenerate_count: u64,
    /// Samples with at least one near-boundary vertex solve.
    pub near_boundary_count: u64,
    /// Histogram restricted to flagged samples (degenerate or near-boundary).
    pub flagged_histogram: BTreeMap<usize, u64>,
    /// Accepted translation draws over rejection proposals.
    pub rejection_acceptance_rate: f64,
    /// Orientation draws discarded for rank deficiency (expected: 0).
    pub orientation_redraws: u64,
    pub seed: u64,
    pub rng_algorithm: String,
    pub config: SimulationConfig,
}

/// Draws k independent uniform sphere vectors, redrawing the whole set in the
/// measure-zero event that they are rank-deficient.
pub fn sample_orientation(rng: &mut SeededRng, n: usize, k: usize) -> Result<FlatOrientation> {
    Ok(sample_orientation_counted(rng, n, k)?.0)
}

fn sample_orientation_counted(
    rng: &mut SeededRng,
    n: usize,
    k: usize,
) -> Result<(FlatOrientation, u64)> {
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!(
            "orientation needs 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let mut redraws = 0;
    loop {
        let spans = VectorList::new(n, (0..k).map(|_| sample_unit_sphere(rng, n)).collect())?;
        if rank_default(&spans) == k {
            return Ok((FlatOrientation::new(spans)?, redraws));
        }
        redraws += 1;
        if redraws > ORIENTATION_REDRAW_CAP {
            return Err(Error::Internal(format!(
                "{redraws} consecutive rank-deficient orientation draws; generator is broken"
            )));
        }
    }
}

/// Uniform translation over the body's normal-space projection, in normal
/// coordinates. Every returned translation keeps the flat in contact with
/// the body.
pub fn sample_translation(
    rng: &mut SeededRng,
    body: &Body,
    orientation: &FlatOrientation,
) -> Result<Vector> {
    let basis = orientation.normal_basis()?;
    let projected = body.zonotope().project(&basis)?;
    UniformSampler::new(&projected)?.sample(rng)
}

#[derive(Default)]
struct ChunkAccumulator {
    sum: u128,
    sum_squares: u128,
    histogram: BTreeMap<usize, u64>,
    degenerate_count: u64,
    near_boundary_count: u64,
    flagged_histogram: BTreeMap<usize, u64>,
    proposals: u64,
    accepted: u64,
    orientation_redraws: u64,
}

impl ChunkAccumulator {
    fn merge(mut self, other: ChunkAccumulator) -> ChunkAccumulator {
        self.sum += other.sum;
        self.sum_squares += other.sum_squares;
        for (count, freq) in other.histogram {
            *self.histogram.entry(count).or_insert(0) += freq;
        }
        self.degenerate_count += other.degenerate_count;
        self.near_boundary_count += other.near_boundary_count;
        for (count, freq) in other.flagged_histogram {
            *self.flagged_histogram.entry(count).or_insert(0) += freq;
        }
        self.proposals += other.proposals;
        self.accepted += other.accepted;
        self.orientation_redraws += other.orientation_redraws;
        self
    }
}

/// Chunk layout: whole orientation groups per chunk so results do not depend
/// on worker scheduling.
fn chunk_layout(samples: u64, per_orientation: u64) -> (u64, u64) {
    let groups = samples.div_ceil(per_orientation);
    let groups_per_chunk = (SAMPLES_PER_CHUNK / per_orientation).max(1);
    let chunks = groups.div_ceil(groups_per_chunk);
    (chunks, groups_per_chunk)
}

/// Estimates the expected vertex count by simulating random slices.
///
/// Deterministic for a fixed config and seed, independent of thread count.
/// Degenerate slices (nonzero count below k+1) are included in the mean and
/// reported separately.
pub fn estimate_expected_vertices(config: &SimulationConfig) -> Result<EstimateReport> {
    config.validate()?;
    let per_orientation = config.translation_resample_per_orientation;
    let (chunks, groups_per_chunk) = chunk_layout(config.samples, per_orientation);

    let results: Vec<Result<ChunkAccumulator>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| run_estimate_chunk(config, chunk, groups_per_chunk))
        .collect();

    let mut accumulator = ChunkAccumulator::default();
    for chunk_result in results {
        accumulator = accumulator.merge(chunk_result?);
    }

    let n = config.samples;
    let sum = accumulator.sum as f64;
    let sum_squares = accumulator.sum_squares as f64;
    let mean = sum / n as f64;
    let std_error = if n > 1 {
        let variance = ((sum_squares - sum * sum / n as f64) / (n - 1) as f64).max(0.0);
        (variance / n as f64).sqrt()
    } else {
        0.0
    };

    Ok(EstimateReport {
        mean,
        std_error,
        histogram: accumulator.histogram,
        samples_used: n,
        degenerate_count: accumulator.degenerate_count,
        near_boundary_count: accumulator.near_boundary_count,
        flagged_histogram: accumulator.flagged_histogram,
        rejection_acceptance_rate: if accumulator.proposals == 0 {
            1.0
        } else {
            accumulator.accepted as f64 / accumulator.proposals as f64
        },
        orientation_redraws: accumulator.orientation_redraws,
        seed: config.seed,
        rng_algorithm: RNG_ALGORITHM.to_string(),
        config: config.clone(),
    })
}

fn orientation_for_group(
    config: &SimulationConfig,
    rng: &mut SeededRng,
    redraws: &mut u64,
) -> Result<FlatOrientation> {
    match &config.orientation_mode {
        OrientationMode::Isotropic => {
            let (orientation, r) = sample_orientation_counted(rng, config.n, config.k)?;
            *redraws += r;
            Ok(orientation)
        }
        OrientationMode::AxisAligned => FlatOrientation::axis_aligned(config.n, config.k),
        OrientationMode::Fixed { orientation } => Ok(orientation.clone()),
    }
}

fn run_estimate_chunk(
    config: &SimulationConfig,
    chunk: u64,
    groups_per_chunk: u64,
) -> Result<ChunkAccumulator> {
    let per_orientation = config.translation_resample_per_orientation;
    let groups_total = config.samples.div_ceil(per_orientation);
    let group_begin = chunk * groups_per_chunk;
    let group_end = (group_begin + groups_per_chunk).min(groups_total);

    let mut rng = SeededRng::from_seed(chunk_seed(config.seed, chunk));
    let mut acc = ChunkAccumulator::default();

    for group in group_begin..group_end {
        let orientation = orientation_for_group(config, &mut rng, &mut acc.orientation_redraws)?;
        let basis = orientation.normal_basis()?;
        let projected = config.body.zonotope().project(&basis)?;
        let mut sampler = UniformSampler::new(&projected)?;

        let sample_begin = group * per_orientation;
        let sample_end = (sample_begin + per_orientation).min(config.samples);
        for sample_index in sample_begin..sample_end {
            let translation = sampler.sample(&mut rng).map_err(|e| match e {
                Error::SamplingFailure {
                    proposals, floor, ..
                } => Error::SamplingFailure {
                    proposals,
                    floor,
                    context: format!(" at sample {sample_index}"),
                },
                other => other,
            })?;
            let flat = Flat::new(orientation.clone(), translation)?;
            let (vertices, diagnostics) = slice_vertices_with_diagnostics(&config.body, &flat)?;
            let count = vertices.len();

            acc.sum += count as u128;
            acc.sum_squares += (count as u128) * (count as u128);
            *acc.histogram.entry(count).or_insert(0) += 1;
            let degenerate = count > 0 && count < config.k + 1;
            let near_boundary = diagnostics.near_boundary_vertices > 0;
            if degenerate {
                acc.degenerate_count += 1;
            }
            if near_boundary {
                acc.near_boundary_count += 1;
            }
            if degenerate || near_boundary {
                *acc.flagged_histogram.entry(count).or_insert(0) += 1;
            }
        }
        acc.proposals += sampler.proposals();
        acc.accepted += sampler.accepted();
    }
    Ok(acc)
}

/// Empirical face-hit frequency for one free-index subset, averaged over its
/// 2^k faces.
#[derive(Debug, Clone, Serialize)]
pub struct SubsetFrequency {
    pub free_indices: Vec<usize>,
    pub hits: u64,
    pub frequency: f64,
}

/// Face-hit frequencies for a fixed orientation, directly comparable to the
/// exact probability table.
#[derive(Debug, Clone, Serialize)]
pub struct FaceHitReport {
    pub entries: Vec<SubsetFrequency>,
    pub samples: u64,
    /// Total face intersections over all samples; equals
    /// `total_vertex_count` for almost every translation.
    pub total_face_hits: u64,
    /// Total vertex count over all samples (solver path).
    pub total_vertex_count: u64,
    pub mean_vertex_count: f64,
    pub seed: u64,
    pub rng_algorithm: String,
}

enum FaceTest {
    Halfspaces(HalfspaceSet),
    General(Zonotope),
}

impl FaceTest {
    fn for_zonotope(zonotope: Zonotope) -> Result<FaceTest> {
        if zonotope.dim() > 0 && rank_default(zonotope.generators()) == zonotope.dim() {
            Ok(FaceTest::Halfspaces(zonotope.halfspaces()?))
        } else {
            Ok(FaceTest::General(zonotope))
        }
    }

    fn contains(&self, x: &Vector) -> Result<bool> {
        match self {
            FaceTest::Halfspaces(hs) => Ok(hs.contains(x, MEMBERSHIP_TOL)),
            FaceTest::General(z) => z.contains(x, MEMBERSHIP_TOL),
        }
    }
}

/// Estimates per-subset face-hit probabilities for a fixed orientation by
/// counting, per translation sample, which faces the slice intersects.
pub fn face_hit_frequencies(config: &SimulationConfig) -> Result<FaceHitReport> {
    config.validate()?;
    let orientation = match &config.orientation_mode {
        OrientationMode::Fixed { orientation } => orientation.clone(),
        _ => {
            return Err(Error::InvalidInput(
                "face-hit frequencies require a fixed orientation".into(),
            ))
        }
    };
    let n = config.n;
    let k = config.k;
    let basis = orientation.normal_basis()?;
    let projected = config.body.zonotope().project(&basis)?;

    // Face zonotopes are constant for a fixed orientation: precompute one
    // membership test per face, grouped by free-index subset.
    let subsets: Vec<Vec<usize>> = combinations(n, n - k).collect();
    let subset_rank: BTreeMap<Vec<usize>, usize> = subsets
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut face_tests: Vec<(usize, FaceTest)> = Vec::new();
    for face in enumerate_faces(n, k)? {
        let subset_index = subset_rank[face.free_indices()];
        let zonotope = crate::slice::face_zonotope(&config.body, &face, &basis)?;
        face_tests.push((subset_index, FaceTest::for_zonotope(zonotope)?));
    }

    let (chunks, groups_per_chunk) = chunk_layout(config.samples, 1);
    let results: Vec<Result<(Vec<u64>, u64)>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let begin = chunk * groups_per_chunk;
            let end = (begin + groups_per_chunk).min(config.samples);
            let mut rng = SeededRng::from_seed(chunk_seed(config.seed, chunk));
            let mut hits = vec![0u64; subsets.len()];
            let mut vertex_total: u64 = 0;
            let mut sampler = UniformSampler::new(&projected)?;
            for _ in begin..end {
                let translation = sampler.sample(&mut rng)?;
                let flat = Flat::new(orientation.clone(), translation)?;
                for (subset_index, test) in &face_tests {
                    if test.contains(flat.translation())? {
                        hits[*subset_index] += 1;
                    }
                }
                let (vertices, _) = slice_vertices_with_diagnostics(&config.body, &flat)?;
                vertex_total += vertices.len() as u64;
            }
            Ok((hits, vertex_total))
        })
        .collect();

    let mut hits = vec![0u64; subsets.len()];
    let mut total_vertex_count: u64 = 0;
    for chunk_result in results {
        let (chunk_hits, chunk_vertices) = chunk_result?;
        for (h, c) in hits.iter_mut().zip(chunk_hits) {
            *h += c;
        }
        total_vertex_count += chunk_vertices;
    }

    let faces_per_subset = 1u64 << k;
    let entries: Vec<SubsetFrequency> = subsets
        .into_iter()
        .zip(&hits)
        .map(|(free_indices, &h)| SubsetFrequency {
            free_indices,
            hits: h,
            frequency: h as f64 / (config.samples * faces_per_subset) as f64,
        })
        .collect();
    let total_face_hits: u64 = hits.iter().sum();

    Ok(FaceHitReport {
        entries,
        samples: config.samples,
        total_face_hits,
        total_vertex_count,
        mean_vertex_count: total_vertex_count as f64 / config.samples as f64,
        seed: config.seed,
        rng_algorithm: RNG_ALGORITHM.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientations_are_unit_and_full_rank() {
        let mut rng = SeededRng::from_seed(1);
        for _ in 0..100 {
            let orientation = sample_orientation(&mut rng, 4, 2).unwrap();
            for v in orientation.spans().iter() {
                assert!((v.norm() - 1.0).abs() < 1e-12);
            }
            assert_eq!(rank_default(orientation.spans()), 2);
        }
        let single = sample_orientation(&mut rng, 3, 1).unwrap();
        assert_eq!(single.k(), 1);
    }

    #[test]
    fn pairwise_alignment_matches_sphere_integral() {
        // Oracle: E|cos(angle)| for independent uniform directions on S^2 is
        // the integral of |cos t| (1/2) sin t over [0, pi]; evaluate it by
        // Simpson quadrature rather than trusting the closed form.
        let integrand = |t: f64| t.cos().abs() * 0.5 * t.sin();
        let steps = 10_000;
        let h = std::f64::consts::PI / steps as f64;
        let mut oracle = integrand(0.0) + integrand(std::f64::consts::PI);
        for i in 1..steps {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            oracle += w * integrand(i as f64 * h);
        }
        oracle *= h / 3.0;
        assert!((oracle - 0.5).abs() < 1e-9);

        let mut rng = SeededRng::from_seed(40);
        let draws = 10_000;
        let mut total = 0.0;
        for _ in 0..draws {
            let orientation = sample_orientation(&mut rng, 3, 2).unwrap();
            total += orientation
                .spans()
                .get(0)
                .dot(orientation.spans().get(1))
                .abs();
        }
        assert!((total / draws as f64 - oracle).abs() < 0.02);
    }

    #[test]
    fn axis_translations_are_uniform_on_segment() {
        let body = Body::cube(3).unwrap();
        let orientation = FlatOrientation::axis_aligned(3, 2).unwrap();
        let mut rng = SeededRng::from_seed(9);
        let draws = 10_000;
        let mut sum = 0.0;
        for _ in 0..draws {
            let t = sample_translation(&mut rng, &body, &orientation).unwrap();
            assert_eq!(t.dim(), 1);
            assert!(t[0].abs() <= 1.0);
            sum += t[0];
        }
        assert!((sum / draws as f64).abs() < 0.02);
    }

    #[test]
    fn diagonal_translations_reach_the_support_bound() {
        // N spanned by (1,1,1)/sqrt(3): support half-width is sqrt(3).
        let body = Body::cube(3).unwrap();
        let spans = VectorList::from_vectors(vec![
            Vector::new(vec![1.0, -1.0, 0.0])
                .unwrap()
                .scaled(1.0 / 2.0_f64.sqrt()),
            Vector::new(vec![1.0, 1.0, -2.0])
                .unwrap()
                .scaled(1.0 / 6.0_f64.sqrt()),
        ])
        .unwrap();
        let orientation = FlatOrientation::new(spans).unwrap();
        let mut rng = SeededRng::from_seed(13);
        let sqrt3 = 3.0_f64.sqrt();
        let mut max_abs: f64 = 0.0;
        for _ in 0..10_000 {
            let t = sample_translation(&mut rng, &body, &orientation).unwrap();
            max_abs = max_abs.max(t[0].abs());
        }
        assert!(max_abs <= sqrt3 + 1e-9);
        assert!(max_abs >= sqrt3 - 0.05);
    }

    #[test]
    fn whole_body_slice_is_deterministic() {
        let body = Body::cube(3).unwrap();
        let config = SimulationConfig::new(
            3,
            3,
            1,
            5,
            OrientationMode::AxisAligned,
            body,
        )
        .unwrap();
        let report = estimate_expected_vertices(&config).unwrap();
        assert_eq!(report.mean, 8.0);
        assert_eq!(report.std_error, 0.0);
        assert_eq!(report.histogram, BTreeMap::from([(8usize, 1u64)]));
        assert_eq!(report.degenerate_count, 0);
    }

    #[test]
    fn line_slices_average_two_vertices() {
        let body = Body::cube(3).unwrap();
        let config = SimulationConfig::new(
            3,
            1,
            20_000,
            77,
            OrientationMode::Isotropic,
            body,
        )
        .unwrap();
        let report = estimate_expected_vertices(&config).unwrap();
        assert!(
            (report.mean - 2.0).abs() <= 3.0 * report.std_error.max(1e-12),
            "mean={} se={}",
            report.mean,
            report.std_error
        );
    }

    #[test]
    fn report_is_bit_identical_across_runs_and_thread_counts() {
        let body = Body::cube(4).unwrap();
        let config = SimulationConfig::new(
            4,
            2,
            10_000,
            123,
            OrientationMode::Isotropic,
            body,
        )
        .unwrap();
        let a = estimate_expected_vertices(&config).unwrap();
        let b = estimate_expected_vertices(&config).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let c = pool.install(|| estimate_expected_vertices(&config)).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&c).unwrap()
        );
    }

    #[test]
    fn disjoint_seeds_agree_within_combined_error() {
        let body = Body::cube(4).unwrap();
        let run = |seed: u64| {
            let config = SimulationConfig::new(
                4,
                2,
                20_000,
                seed,
                OrientationMode::Isotropic,
                body.clone(),
            )
            .unwrap();
            estimate_expected_vertices(&config).unwrap()
        };
        let a = run(1001);
        let b = run(9999);
        let combined = (a.std_error * a.std_error + b.std_error * b.std_error).sqrt();
        assert!((a.mean - b.mean).abs() <= 6.0 * combined);
    }

    #[test]
    fn resampled_translations_share_orientations() {
        let body = Body::cube(3).unwrap();
        let config = SimulationConfig::new(
            3,
            2,
            5_000,
            42,
            OrientationMode::Isotropic,
            body,
        )
        .unwrap()
        .with_translation_resample(10)
        .unwrap();
        let report = estimate_expected_vertices(&config).unwrap();
        assert_eq!(report.samples_used, 5_000);
        assert!((report.mean - 4.0).abs() < 0.2, "mean={}", report.mean);
    }

    #[test]
    fn fixed_orientation_frequencies_match_axis_table() {
        let body = Body::cube(3).unwrap();
        let orientation = FlatOrientation::axis_aligned(3, 2).unwrap();
        let config = SimulationConfig::new(
            3,
            2,
            2_000,
            7,
            OrientationMode::Fixed { orientation },
            body,
        )
        .unwrap();
        let report = face_hit_frequencies(&config).unwrap();
        let by_subset: BTreeMap<_, _> = report
            .entries
            .iter()
            .map(|e| (e.free_indices.clone(), e.frequency))
            .collect();
        assert_eq!(by_subset[&vec![2usize]], 1.0);
        assert_eq!(by_subset[&vec![0usize]], 0.0);
        assert_eq!(by_subset[&vec![1usize]], 0.0);
        // Counting identity, exact in integers.
        assert_eq!(report.total_face_hits, report.total_vertex_count);
    }

    #[test]
    fn frequencies_require_fixed_mode() {
        let body = Body::cube(3).unwrap();
        let config =
            SimulationConfig::new(3, 2, 10, 7, OrientationMode::Isotropic, body).unwrap();
        assert!(matches!(
            face_hit_frequencies(&config),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let body = Body::cube(3).unwrap();
        assert!(SimulationConfig::new(
            3,
            0,
            10,
            1,
            OrientationMode::Isotropic,
            body.clone()
        )
        .is_err());
        assert!(SimulationConfig::new(
            3,
            4,
            10,
            1,
            OrientationMode::Isotropic,
            body.clone()
        )
        .is_err());
        assert!(
            SimulationConfig::new(3, 2, 0, 1, OrientationMode::Isotropic, body.clone()).is_err()
        );
        assert!(SimulationConfig::new(
            4,
            2,
            10,
            1,
            OrientationMode::Isotropic,
            body
        )
        .is_err());
    }
}
