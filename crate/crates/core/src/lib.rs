//! Vertex statistics of k-dimensional slices of n-dimensional hypercubes and
//! parallelotopes.
//!
//! For any fixed full-rank orientation, the expected number of vertices of a
//! uniformly translated slice equals 2^k, independent of n. This crate
//! computes that expectation two independent ways:
//!
//! - exactly, from ratios of normal-space zonotope volumes
//!   ([`expectation::expected_vertices_exact`]), and
//! - empirically, by simulating random flats and enumerating each slice's
//!   vertices face by face ([`mc::estimate_expected_vertices`]).
//!
//! The building blocks are exposed as modules: [`linalg`] for the
//! floating-point primitives, [`zonotope`] for generator-representation
//! zonotopes (volume, projection, membership, uniform sampling), [`slice`]
//! for bodies, flats, faces, and explicit slice vertices, [`expectation`]
//! for the exact engine, and [`mc`] for the simulation pipeline.
//!
//! ```
//! use hyperslice::{expected_vertices_exact, sample_orientation, Body, SeededRng};
//!
//! let body = Body::cube(6)?;
//! let mut rng = SeededRng::from_seed(7);
//! let orientation = sample_orientation(&mut rng, 6, 2)?;
//! let expectation = expected_vertices_exact(&body, &orientation)?;
//! assert!((expectation - 4.0).abs() < 1e-9);
//! # Ok::<(), hyperslice::Error>(())
//! ```

pub mod error;
pub mod expectation;
pub mod linalg;
pub mod mc;
pub mod rng;
pub mod slice;
mod subsets;
pub mod zonotope;

pub use error::{Error, Result};
pub use expectation::{
    expected_vertices_exact, face_probability, probability_table, telescoping_check,
    FaceProbabilityTable, SubsetProbability, TelescopingCheck, MAX_DIMENSION,
};
pub use linalg::{
    gram_volume, null_normal, orthonormal_complement, rank, sample_unit_sphere, NormalBasis,
    Vector, VectorList, DEFAULT_RANK_TOL,
};
pub use mc::{
    estimate_expected_vertices, face_hit_frequencies, sample_orientation, sample_translation,
    EstimateReport, FaceHitReport, OrientationMode, SimulationConfig, SubsetFrequency,
};
pub use rng::{chunk_seed, SeededRng, RNG_ALGORITHM};
pub use slice::{
    enumerate_faces, face_intersects, face_zonotope, slice_vertices,
    slice_vertices_with_diagnostics, solve_face_vertex, vertex_count, Body, Face, Flat,
    FlatOrientation, SliceDiagnostics,
};
pub use zonotope::{HalfspaceSet, Slab, UniformSampler, Zonotope, MEMBERSHIP_TOL};
