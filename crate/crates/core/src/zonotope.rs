//! Zonotopes: generator representation, volume by summing parallelotope
//! volumes over generator subsets, projection, half-space description,
//! membership, and uniform rejection sampling.
//!
//! A zonotope here is `base + { l_1 v_1 + .. + l_m v_m : l_i in [0,1] }`. The
//! base point is explicit: projected faces of a body sit at genuine offsets
//! inside the projected body, and membership tests need absolute position.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    gram_volume, null_normal, rank_default, span_basis, NormalBasis, Vector, VectorList,
};
use crate::rng::SeededRng;
use crate::subsets::combinations;

/// Default membership tolerance for half-space tests.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Default cap on rejection proposals for a single accepted sample.
pub const DEFAULT_PROPOSAL_CAP: u64 = 1_000_000;

/// Angular tolerance for merging facet normals that agree up to sign.
const NORMAL_DEDUP_TOL: f64 = 1e-9;

/// A zonotope in generator representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Zonotope {
    base: Vector,
    generators: VectorList,
}

impl Zonotope {
    pub fn new(base: Vector, generators: VectorList) -> Result<Self> {
        if base.dim() != generators.dim() {
            return Err(Error::InvalidInput(format!(
                "zonotope base has dimension {}, generators {}",
                base.dim(),
                generators.dim()
            )));
        }
        Ok(Self { base, generators })
    }

    /// Zonotope anchored at the origin.
    pub fn from_generators(generators: VectorList) -> Self {
        Self {
            base: Vector::zeros(generators.dim()),
            generators,
        }
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn base(&self) -> &Vector {
        &self.base
    }

    pub fn generators(&self) -> &VectorList {
        &self.generators
    }

    /// Center of symmetry: `base + (v_1 + .. + v_m) / 2`.
    pub fn center(&self) -> Vector {
        let mut c = self.base.clone();
        for g in self.generators.iter() {
            c.axpy(0.5, g);
        }
        c
    }

    /// d-dimensional volume: the sum over all d-element generator subsets of
    /// their parallelotope volumes. Equals the zonotope's d-volume whenever
    /// its affine hull has dimension d. `d = 0` returns 1 by convention.
    pub fn volume(&self, d: usize) -> Result<f64> {
        if d > self.dim() {
            return Err(Error::InvalidInput(format!(
                "requested {}-volume in ambient dimension {}",
                d,
                self.dim()
            )));
        }
        if d == 0 {
            return Ok(1.0);
        }
        let mut total = 0.0;
        for subset in combinations(self.generator_count(), d) {
            total += gram_volume(&self.generators.select(&subset))?;
        }
        Ok(total)
    }

    /// Projection onto the subspace of `basis`, expressed in basis
    /// coordinates. The image of a zonotope under a linear map is again a
    /// zonotope, with projected base and generators.
    pub fn project(&self, basis: &NormalBasis) -> Result<Zonotope> {
        let base = basis.project(&self.base)?;
        let generators = VectorList::new(
            basis.subspace_dim(),
            self.generators
                .iter()
                .map(|g| basis.project(g))
                .collect::<Result<Vec<_>>>()?,
        )?;
        Ok(Zonotope { base, generators })
    }

    /// Half-space description: one slab per facet direction, each obtained as
    /// the normalized null normal of a (d-1)-subset of generators, with
    /// half-width given by the support function. Requires full-rank
    /// generators; a zero-dimensional zonotope yields an empty slab set.
    pub fn halfspaces(&self) -> Result<HalfspaceSet> {
        let d = self.dim();
        let center = self.center();
        if d == 0 {
            return Ok(HalfspaceSet {
                center,
                slabs: Vec::new(),
            });
        }
        let r = rank_default(&self.generators);
        if r < d {
            return Err(Error::DegenerateZonotope(format!(
                "generators have rank {r} < ambient dimension {d}; no full-dimensional \
                 half-space description"
            )));
        }
        let mut slabs: Vec<Slab> = Vec::new();
        for subset in combinations(self.generator_count(), d - 1) {
            let picked = self.generators.select(&subset);
            let normal = null_normal(&picked)?;
            let scale: f64 = picked.iter().map(|v| v.norm().max(1.0)).product();
            let norm = normal.norm();
            if norm <= 1e-12 * scale {
                continue; // dependent subset, no facet direction
            }
            let unit = normal.scaled(1.0 / norm);
            if slabs.iter().any(|s| parallel_up_to_sign(&s.normal, &unit)) {
                continue;
            }
            let half_width: f64 =
                0.5 * self.generators.iter().map(|g| unit.dot(g).abs()).sum::<f64>();
            slabs.push(Slab {
                normal: unit,
                lower: -half_width,
                upper: half_width,
            });
        }
        Ok(HalfspaceSet { center, slabs })
    }

    /// Membership test with tolerance `tol` on each slab.
    ///
    /// Rank-deficient zonotopes are handled by restriction: `x` must lie
    /// within `tol` of the generator span through `base`, and its in-span
    /// coordinates must pass the membership test of the restricted zonotope.
    pub fn contains(&self, x: &Vector, tol: f64) -> Result<bool> {
        if x.dim() != self.dim() {
            return Err(Error::InvalidInput(format!(
                "membership query of dimension {} against a zonotope in R^{}",
                x.dim(),
                self.dim()
            )));
        }
        let d = self.dim();
        if d == 0 {
            return Ok(true);
        }
        let r = rank_default(&self.generators);
        if r == d {
            return Ok(self.halfspaces()?.contains(x, tol));
        }
        // Restrict to the affine hull.
        let offset = x.sub(&self.base);
        if r == 0 {
            return Ok(offset.norm() <= tol);
        }
        let hull = span_basis(&self.generators);
        let mut residual = offset.clone();
        let mut coords = Vec::with_capacity(r);
        for b in &hull {
            let c = offset.dot(b);
            coords.push(c);
            residual.axpy(-c, b);
        }
        if residual.norm() > tol {
            return Ok(false);
        }
        let restricted_generators = VectorList::new(
            r,
            self.generators
                .iter()
                .map(|g| Vector::new(hull.iter().map(|b| g.dot(b)).collect()))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let restricted = Zonotope {
            base: Vector::zeros(r),
            generators: restricted_generators,
        };
        restricted.contains(&Vector::new(coords)?, tol)
    }

    /// Tight axis-aligned bounding box `(lower, upper)`: along axis j the
    /// support half-width is half the sum of |generator_j|.
    pub fn bounding_box(&self) -> (Vector, Vector) {
        let center = self.center();
        let d = self.dim();
        let mut lower = Vec::with_capacity(d);
        let mut upper = Vec::with_capacity(d);
        for j in 0..d {
            let half: f64 = 0.5
                * self
                    .generators
                    .iter()
                    .map(|g| g.coords()[j].abs())
                    .sum::<f64>();
            lower.push(center[j] - half);
            upper.push(center[j] + half);
        }
        (
            Vector::new(lower).expect("finite box"),
            Vector::new(upper).expect("finite box"),
        )
    }

    /// One uniform sample via rejection from the bounding box.
    ///
    /// For repeated draws use [`UniformSampler`], which reuses the half-space
    /// description and tracks acceptance statistics.
    pub fn sample_uniform(&self, rng: &mut SeededRng) -> Result<Vector> {
        UniformSampler::new(self)?.sample(rng)
    }

    /// Monte Carlo volume estimate: bounding-box volume times the acceptance
    /// fraction of `samples` membership trials. Independent of the subset-sum
    /// volume formula, so it can serve as its oracle.
    pub fn volume_oracle_mc(&self, rng: &mut SeededRng, samples: u64) -> Result<f64> {
        if self.dim() == 0 {
            return Ok(1.0);
        }
        let halfspaces = self.halfspaces()?;
        let (lower, upper) = self.bounding_box();
        let box_volume: f64 = lower
            .coords()
            .iter()
            .zip(upper.coords())
            .map(|(lo, hi)| hi - lo)
            .product();
        let mut hits: u64 = 0;
        let mut proposal = vec![0.0; self.dim()];
        for _ in 0..samples {
            for (p, (lo, hi)) in proposal
                .iter_mut()
                .zip(lower.coords().iter().zip(upper.coords()))
            {
                *p = rng.uniform_in(*lo, *hi);
            }
            if halfspaces.contains_slice(&proposal, 0.0) {
                hits += 1;
            }
        }
        Ok(box_volume * hits as f64 / samples as f64)
    }
}

fn parallel_up_to_sign(a: &Vector, b: &Vector) -> bool {
    let mut diff: f64 = 0.0;
    let mut sum: f64 = 0.0;
    for (x, y) in a.coords().iter().zip(b.coords()) {
        diff = diff.max((x - y).abs());
        sum = sum.max((x + y).abs());
    }
    diff.min(sum) <= NORMAL_DEDUP_TOL
}

/// Symmetric slab `lower <= <normal, x - center> <= upper` with
/// `lower = -upper`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Slab {
    pub normal: Vector,
    pub lower: f64,
    pub upper: f64,
}

/// Intersection of slabs centered on the zonotope's center of symmetry;
/// equals the zonotope for full-rank generators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfspaceSet {
    center: Vector,
    slabs: Vec<Slab>,
}

impl HalfspaceSet {
    pub fn center(&self) -> &Vector {
        &self.center
    }

    pub fn slabs(&self) -> &[Slab] {
        &self.slabs
    }

    /// True iff `x` satisfies every slab inflated by `tol`.
    pub fn contains(&self, x: &Vector, tol: f64) -> bool {
        self.contains_slice(x.coords(), tol)
    }

    fn contains_slice(&self, x: &[f64], tol: f64) -> bool {
        self.slabs.iter().all(|slab| {
            let v: f64 = slab
                .normal
                .coords()
                .iter()
                .zip(x.iter().zip(self.center.coords()))
                .map(|(n, (xi, ci))| n * (xi - ci))
                .sum();
            v >= slab.lower - tol && v <= slab.upper + tol
        })
    }
}

/// Rejection sampler for the uniform distribution on a full-rank zonotope,
/// with acceptance bookkeeping.
#[derive(Debug, Clone)]
pub struct UniformSampler {
    halfspaces: HalfspaceSet,
    lower: Vector,
    upper: Vector,
    proposal_cap: u64,
    proposals: u64,
    accepted: u64,
}

impl UniformSampler {
    pub fn new(zonotope: &Zonotope) -> Result<Self> {
        let halfspaces = zonotope.halfspaces()?;
        let (lower, upper) = zonotope.bounding_box();
        Ok(Self {
            halfspaces,
            lower,
            upper,
            proposal_cap: DEFAULT_PROPOSAL_CAP,
            proposals: 0,
            accepted: 0,
        })
    }

    pub fn with_proposal_cap(mut self, cap: u64) -> Self {
        self.proposal_cap = cap.max(1);
        self
    }

    /// Draws one uniform point. Fails if the per-call proposal cap is
    /// exhausted without an acceptance.
    pub fn sample(&mut self, rng: &mut SeededRng) -> Result<Vector> {
        let d = self.lower.dim();
        if d == 0 {
            self.proposals += 1;
            self.accepted += 1;
            return Ok(Vector::zeros(0));
        }
        let mut proposal = vec![0.0; d];
        for _ in 0..self.proposal_cap {
            self.proposals += 1;
            for (p, (lo, hi)) in proposal
                .iter_mut()
                .zip(self.lower.coords().iter().zip(self.upper.coords()))
            {
                *p = rng.uniform_in(*lo, *hi);
            }
            if self.halfspaces.contains_slice(&proposal, 0.0) {
                self.accepted += 1;
                return Vector::new(proposal);
            }
        }
        Err(Error::SamplingFailure {
            proposals: self.proposal_cap,
            floor: 1.0 / self.proposal_cap as f64,
            context: String::new(),
        })
    }

    pub fn proposals(&self) -> u64 {
        self.proposals
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }

    pub fn acceptance_rate(&self) -> f64 {
        if self.proposals == 0 {
            return 1.0;
        }
        self.accepted as f64 / self.proposals as f64
    }
}
