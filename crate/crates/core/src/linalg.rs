//! Double-precision linear algebra primitives: Gram volumes, numerical rank,
//! orthonormal complements, generalized cross products, and uniform sphere
//! sampling.
//!
//! Everything here works on plain `f64` coordinates. Tolerances are explicit
//! per operation; the default rank tolerance is [`DEFAULT_RANK_TOL`] relative
//! to the largest pivot.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SeededRng;

/// Default relative tolerance for numerical rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Orthonormality tolerance guaranteed by basis constructions.
pub const ORTHONORMALITY_TOL: f64 = 1e-12;

/// A point or direction in R^d, d >= 0.
///
/// Zero-dimensional vectors are legal: they carry the coordinates of objects
/// living in the normal space of a full-dimensional flat (k = n), where that
/// space collapses to a single point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<f64>);

impl Vector {
    /// Builds a vector, rejecting non-finite coordinates.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(
                "vector coordinates must be finite".into(),
            ));
        }
        Ok(Self(coords))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![0.0; dim])
    }

    /// The i-th standard basis vector of R^dim.
    pub fn standard_basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut coords = vec![0.0; dim];
        coords[i] = 1.0;
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, c: f64) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    /// In-place `self += c * other`.
    pub fn axpy(&mut self, c: f64, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        self.sub(other).norm()
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// An ordered list of vectors sharing one ambient dimension.
///
/// The dimension is stored explicitly so it stays queryable when the list is
/// empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorList {
    dim: usize,
    vectors: Vec<Vector>,
}

impl VectorList {
    pub fn new(dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
            return Err(Error::InvalidInput(format!(
                "vector of dimension {} in a list of dimension {}",
                v.dim(),
                dim
            )));
        }
        Ok(Self { dim, vectors })
    }

    /// Builds a list from a non-empty set of uniform-dimension vectors.
    pub fn from_vectors(vectors: Vec<Vector>) -> Result<Self> {
        let dim = vectors
            .first()
            .map(Vector::dim)
            .ok_or_else(|| Error::InvalidInput("cannot infer dimension of empty list".into()))?;
        Self::new(dim, vectors)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vector> {
        self.vectors.iter()
    }

    pub fn get(&self, i: usize) -> &Vector {
        &self.vectors[i]
    }

    pub fn as_slice(&self) -> &[Vector] {
        &self.vectors
    }

    /// Sub-list at the given indices, preserving order.
    pub fn select(&self, indices: &[usize]) -> VectorList {
        VectorList {
            dim: self.dim,
            vectors: indices.iter().map(|&i| self.vectors[i].clone()).collect(),
        }
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
///
/// `a` is a square matrix as rows. The matrices here are `m x m` Gram matrices
/// or cofactor minors with m <= ~20, where this is plenty accurate.
fn determinant(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot_row][col] == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            a.swap(pivot_row, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor != 0.0 {
                let (pivot_part, rest) = a.split_at_mut(row);
                for (dst, src) in rest[0].iter_mut().zip(&pivot_part[col]).skip(col) {
                    *dst -= factor * src;
                }
            }
        }
    }
    det
}

/// The |vs|-dimensional volume of the parallelotope spanned by `vs`, via
/// sqrt(det(G^T G)). Returns 0 for linearly dependent inputs.
pub fn gram_volume(vs: &VectorList) -> Result<f64> {
    let m = vs.len();
    if m == 0 {
        return Err(Error::InvalidInput(
            "gram_volume requires at least one vector".into(),
        ));
    }
    if vs.dim() < m {
        return Err(Error::InvalidInput(format!(
            "gram_volume of {} vectors needs ambient dimension >= {}, got {}",
            m,
            m,
            vs.dim()
        )));
    }
    let gram: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| vs.get(i).dot(vs.get(j))).collect())
        .collect();
    // Rounding can push the determinant of a degenerate Gram matrix slightly
    // negative; clamp before the square root.
    Ok(determinant(gram).max(0.0).sqrt())
}

/// Pivoted modified Gram-Schmidt with one re-orthogonalization pass.
///
/// Returns the orthonormal vectors produced and the pivot magnitudes (residual
/// norms at selection time, one per input vector, in selection order).
fn pivoted_mgs(vectors: &[Vector]) -> (Vec<Vector>, Vec<f64>) {
    let mut residuals: Vec<Vector> = vectors.to_vec();
    let mut used = vec![false; residuals.len()];
    let mut basis: Vec<Vector> = Vec::new();
    let mut pivots: Vec<f64> = Vec::new();

    for _ in 0..residuals.len() {
        let pick = (0..residuals.len())
            .filter(|&i| !used[i])
            .max_by(|&i, &j| residuals[i].norm().total_cmp(&residuals[j].norm()))
            .unwrap();
        used[pick] = true;
        let pivot = residuals[pick].norm();
        pivots.push(pivot);
        if pivot == 0.0 || basis.len() == residuals[pick].dim() {
            continue;
        }
        let mut q = residuals[pick].scaled(1.0 / pivot);
        // Re-orthogonalize once against the accepted basis.
        for b in &basis {
            let c = q.dot(b);
            q.axpy(-c, b);
        }
        let norm = q.norm();
        if norm == 0.0 {
            continue;
        }
        let q = q.scaled(1.0 / norm);
        for (i, r) in residuals.iter_mut().enumerate() {
            if !used[i] {
                let c = r.dot(&q);
                r.axpy(-c, &q);
            }
        }
        basis.push(q);
    }
    (basis, pivots)
}

fn rank_from_pivots(pivots: &[f64], tol: f64) -> usize {
    let largest = pivots.iter().cloned().fold(0.0_f64, f64::max);
    let threshold = tol * if largest > 0.0 { largest } else { 1.0 };
    pivots.iter().filter(|&&p| p > threshold).count()
}

/// Numerical rank via pivoted orthogonal elimination: a pivot counts iff its
/// magnitude exceeds `tol` times the largest pivot (or `tol` itself when all
/// pivots vanish).
pub fn rank(vs: &VectorList, tol: f64) -> Result<usize> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "rank tolerance must be positive, got {tol}"
        )));
    }
    let (_, pivots) = pivoted_mgs(vs.as_slice());
    Ok(rank_from_pivots(&pivots, tol))
}

/// Rank under [`DEFAULT_RANK_TOL`].
pub(crate) fn rank_default(vs: &VectorList) -> usize {
    let (_, pivots) = pivoted_mgs(vs.as_slice());
    rank_from_pivots(&pivots, DEFAULT_RANK_TOL)
}

/// Orthonormal basis of the span of `vs`, retaining only directions whose
/// pivot clears the default rank tolerance.
pub(crate) fn span_basis(vs: &VectorList) -> Vec<Vector> {
    let (basis, pivots) = pivoted_mgs(vs.as_slice());
    let keep = rank_from_pivots(&pivots, DEFAULT_RANK_TOL);
    basis.into_iter().take(keep).collect()
}

/// Orthonormal basis of a subspace, used as a coordinate frame.
///
/// For a slice orientation this is the normal space N: the orthogonal
/// complement of the orientation span. Vectors are pairwise orthonormal
/// within [`ORTHONORMALITY_TOL`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalBasis {
    ambient_dim: usize,
    vectors: VectorList,
}

impl NormalBasis {
    /// Validates and wraps an explicit orthonormal set.
    pub fn from_vectors(vectors: VectorList) -> Result<Self> {
        for i in 0..vectors.len() {
            for j in i..vectors.len() {
                let d = vectors.get(i).dot(vectors.get(j));
                let expected = if i == j { 1.0 } else { 0.0 };
                if (d - expected).abs() > ORTHONORMALITY_TOL {
                    return Err(Error::InvalidInput(format!(
                        "basis vectors {i},{j} fail orthonormality: inner product {d}"
                    )));
                }
            }
        }
        Ok(Self {
            ambient_dim: vectors.dim(),
            vectors,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the spanned subspace.
    pub fn subspace_dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &VectorList {
        &self.vectors
    }

    /// Coordinates of `x` in this basis: `(<x,b_1>, .., <x,b_r>)`.
    ///
    /// Composed with [`NormalBasis::reconstruct`] this is the Euclidean
    /// projection onto the subspace.
    pub fn project(&self, x: &Vector) -> Result<Vector> {
        if x.dim() != self.ambient_dim {
            return Err(Error::InvalidInput(format!(
                "cannot project a {}-dimensional vector with a basis of R^{}",
                x.dim(),
                self.ambient_dim
            )));
        }
        Ok(Vector(self.vectors.iter().map(|b| x.dot(b)).collect()))
    }

    /// Ambient-space point with the given basis coordinates.
    pub fn reconstruct(&self, coords: &Vector) -> Result<Vector> {
        if coords.dim() != self.subspace_dim() {
            return Err(Error::InvalidInput(format!(
                "expected {} basis coordinates, got {}",
                self.subspace_dim(),
                coords.dim()
            )));
        }
        let mut out = Vector::zeros(self.ambient_dim);
        for (c, b) in coords.coords().iter().zip(self.vectors.iter()) {
            out.axpy(*c, b);
        }
        Ok(out)
    }
}

/// Orthonormal basis of the (n-k)-dimensional subspace orthogonal to the k
/// given orientation vectors.
///
/// Uses pivoted modified Gram-Schmidt with one re-orthogonalization pass,
/// extending the orientation span by greedily chosen standard basis vectors.
pub fn orthonormal_complement(orientation: &VectorList) -> Result<NormalBasis> {
    let n = orientation.dim();
    let k = orientation.len();
    if rank_default(orientation) < k {
        return Err(Error::DegenerateOrientation(format!(
            "orientation vectors are rank-deficient ({} vectors, rank {})",
            k,
            rank_default(orientation)
        )));
    }
    let mut frame = span_basis(orientation);
    debug_assert_eq!(frame.len(), k);

    let mut complement: Vec<Vector> = Vec::with_capacity(n - k);
    let mut residuals: Vec<Vector> = (0..n).map(|i| Vector::standard_basis(n, i)).collect();
    for _ in 0..n - k {
        for r in residuals.iter_mut() {
            for b in &frame {
                let c = r.dot(b);
                r.axpy(-c, b);
            }
        }
        let pick = (0..residuals.len())
            .max_by(|&i, &j| residuals[i].norm().total_cmp(&residuals[j].norm()))
            .unwrap();
        let mut q = residuals.swap_remove(pick);
        let norm = q.norm();
        if norm == 0.0 {
            return Err(Error::Internal(
                "ran out of complement directions for a full-rank orientation".into(),
            ));
        }
        q = q.scaled(1.0 / norm);
        // One re-orthogonalization pass.
        for b in &frame {
            let c = q.dot(b);
            q.axpy(-c, b);
        }
        let q = q.scaled(1.0 / q.norm());
        frame.push(q.clone());
        complement.push(q);
    }
    NormalBasis::from_vectors(VectorList::new(n, complement)?)
}

/// Generalized cross product: the vector orthogonal to the d-1 inputs whose
/// norm equals their (d-1)-volume, by cofactor expansion along a symbolic
/// last row. Zero iff the inputs are dependent.
pub fn null_normal(vs: &VectorList) -> Result<Vector> {
    let d = vs.dim();
    if d == 0 || vs.len() != d - 1 {
        return Err(Error::InvalidInput(format!(
            "null_normal in R^{} needs exactly {} vectors, got {}",
            d,
            d.saturating_sub(1),
            vs.len()
        )));
    }
    if d == 1 {
        // No constraints: the empty product has unit volume.
        return Ok(Vector(vec![1.0]));
    }
    let rows: Vec<&[f64]> = vs.iter().map(Vector::coords).collect();
    let mut out = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<f64>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if (d - 1 + j).is_multiple_of(2) { 1.0 } else { -1.0 };
        out.push(sign * determinant(minor));
    }
    Ok(Vector(out))
}

/// Uniform draw from the unit sphere S^{n-1}, via normalized Gaussian
/// coordinates. Deterministic given the generator state.
pub fn sample_unit_sphere(rng: &mut SeededRng, n: usize) -> Vector {
    assert!(n >= 1, "sphere dimension must be at least 1");
    loop {
        let coords: Vec<f64> = (0..n).map(|_| rng.standard_normal()).collect();
        let v = Vector(coords);
        let norm = v.norm();
        // The all-zeros draw has measure zero; redraw if it ever appears.
        if norm > 1e-12 {
            return v.scaled(1.0 / norm);
        }
    }
}
