//! Slice geometry: hypercube and parallelotope bodies, flats, codimension-k
//! face enumeration, the face-intersection predicate, and explicit
//! slice-vertex computation.
//!
//! A vertex of a k-dimensional slice arises where the flat crosses an
//! (n-k)-dimensional face of the body, so vertices are computed face-first:
//! one k-by-k linear solve per face, followed by a range check on the free
//! coordinates. The flat meets a face exactly when its translation lies in
//! the face's projection onto the flat's normal space, which gives an
//! independent predicate for cross-checking the solver.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{orthonormal_complement, rank_default, NormalBasis, Vector, VectorList};
use crate::subsets::combinations;
use crate::zonotope::{Zonotope, MEMBERSHIP_TOL};

/// Unit-norm tolerance for orientation vectors.
pub const UNIT_TOL: f64 = 1e-12;

/// Tolerance on free coordinates (in unit-cube coordinates) when accepting a
/// face-solve as a vertex.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Accepted vertices with a free coordinate within this multiple of
/// [`BOUNDARY_TOL`] of the face boundary are counted but flagged.
const NEAR_BOUNDARY_FACTOR: f64 = 10.0;

/// Distance below which two computed vertices are considered one.
const VERTEX_DEDUP_TOL: f64 = 1e-9;

/// Relative pivot threshold for declaring a face system singular.
const SOLVE_PIVOT_TOL: f64 = 1e-12;

/// An n-dimensional parallelotope body `base + { sum l_i g_i : l_i in [0,1] }`
/// with independent edge generators. The standard cube `[-1,1]^n` has
/// generators `2 e_i` and base `(-1, .., -1)`.
#[derive(Debug, Clone, Serialize)]
pub struct Body {
    n: usize,
    base: Vector,
    edge_generators: VectorList,
    #[serde(skip)]
    inverse_rows: Vec<Vec<f64>>,
}

impl Body {
    /// The standard cube `[-1, 1]^n`.
    pub fn cube(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("body dimension must be >= 1".into()));
        }
        let generators = VectorList::new(
            n,
            (0..n)
                .map(|i| Vector::standard_basis(n, i).scaled(2.0))
                .collect(),
        )?;
        Self::parallelotope(Vector::new(vec![-1.0; n])?, generators)
    }

    /// An arbitrary parallelotope with the given base point and n independent
    /// edge generators.
    pub fn parallelotope(base: Vector, edge_generators: VectorList) -> Result<Self> {
        let n = base.dim();
        if n == 0 {
            return Err(Error::InvalidInput("body dimension must be >= 1".into()));
        }
        if edge_generators.dim() != n || edge_generators.len() != n {
            return Err(Error::InvalidInput(format!(
                "body in R^{} needs exactly {} generators of that dimension, got {} in R^{}",
                n,
                n,
                edge_generators.len(),
                edge_generators.dim()
            )));
        }
        let r = rank_default(&edge_generators);
        if r < n {
            return Err(Error::InvalidInput(format!(
                "body generators are singular: rank {r} < {n}"
            )));
        }
        let inverse_rows = invert(&edge_generators).ok_or_else(|| {
            Error::InvalidInput(format!("body generators are singular: rank {r} < {n}"))
        })?;
        Ok(Self {
            n,
            base,
            edge_generators,
            inverse_rows,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &Vector {
        &self.base
    }

    pub fn edge_generators(&self) -> &VectorList {
        &self.edge_generators
    }

    /// The body as a zonotope.
    pub fn zonotope(&self) -> Zonotope {
        Zonotope::new(self.base.clone(), self.edge_generators.clone())
            .expect("body dimensions are consistent")
    }

    /// Maps an ambient point to unit-cube coordinates `u in [-1,1]^n`
    /// (u = 2 G^{-1} (p - base) - 1).
    pub fn to_cube_coords(&self, p: &Vector) -> Result<Vector> {
        if p.dim() != self.n {
            return Err(Error::InvalidInput(format!(
                "point of dimension {} in a body of dimension {}",
                p.dim(),
                self.n
            )));
        }
        let offset = p.sub(&self.base);
        Vector::new(
            self.inverse_rows
                .iter()
                .map(|row| {
                    2.0 * row
                        .iter()
                        .zip(offset.coords())
                        .map(|(a, b)| a * b)
                        .sum::<f64>()
                        - 1.0
                })
                .collect(),
        )
    }

    /// The linear part of [`Body::to_cube_coords`] applied to a direction.
    fn cube_direction(&self, d: &Vector) -> Vector {
        Vector::new(
            self.inverse_rows
                .iter()
                .map(|row| {
                    2.0 * row
                        .iter()
                        .zip(d.coords())
                        .map(|(a, b)| a * b)
                        .sum::<f64>()
                })
                .collect(),
        )
        .expect("finite direction")
    }

    /// Inverse of [`Body::to_cube_coords`].
    pub fn from_cube_coords(&self, u: &Vector) -> Result<Vector> {
        if u.dim() != self.n {
            return Err(Error::InvalidInput(format!(
                "cube coordinates of dimension {} for a body of dimension {}",
                u.dim(),
                self.n
            )));
        }
        let mut p = self.base.clone();
        for (ui, g) in u.coords().iter().zip(self.edge_generators.iter()) {
            p.axpy(0.5 * (ui + 1.0), g);
        }
        Ok(p)
    }
}

/// Inverse of the column matrix formed by `generators`, as rows, by
/// Gauss-Jordan elimination with partial pivoting. `None` when singular.
fn invert(generators: &VectorList) -> Option<Vec<Vec<f64>>> {
    let n = generators.dim();
    // a = [G | I], with G's columns being the generators.
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row: Vec<f64> = (0..n).map(|j| generators.get(j)[i]).collect();
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot_row][col] == 0.0 {
            return None;
        }
        a.swap(pivot_row, col);
        let pivot = a[col][col];
        for v in a[col].iter_mut() {
            *v /= pivot;
        }
        for row in 0..n {
            if row != col {
                let factor = a[row][col];
                if factor != 0.0 {
                    let (src, dst) = if row < col {
                        let (lo, hi) = a.split_at_mut(col);
                        (&hi[0], &mut lo[row])
                    } else {
                        let (lo, hi) = a.split_at_mut(row);
                        (&lo[col], &mut hi[0])
                    };
                    for (d, s) in dst.iter_mut().zip(src.iter()) {
                        *d -= factor * s;
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Direction of a k-dimensional slice: k unit vectors spanning the flat.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlatOrientation {
    spans: VectorList,
}

impl FlatOrientation {
    pub fn new(spans: VectorList) -> Result<Self> {
        let k = spans.len();
        let n = spans.dim();
        if k == 0 || k > n {
            return Err(Error::InvalidInput(format!(
                "orientation needs 1 <= k <= n, got k={k}, n={n}"
            )));
        }
        for (i, v) in spans.iter().enumerate() {
            if (v.norm() - 1.0).abs() > UNIT_TOL {
                return Err(Error::InvalidInput(format!(
                    "orientation vector {} has norm {}, expected 1",
                    i,
                    v.norm()
                )));
            }
        }
        let r = rank_default(&spans);
        if r < k {
            return Err(Error::DegenerateOrientation(format!(
                "orientation spans have rank {r} < k={k}"
            )));
        }
        Ok(Self { spans })
    }

    /// The first k standard basis vectors.
    pub fn axis_aligned(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidInput(format!(
                "orientation needs 1 <= k <= n, got k={k}, n={n}"
            )));
        }
        Self::new(VectorList::new(
            n,
            (0..k).map(|i| Vector::standard_basis(n, i)).collect(),
        )?)
    }

    pub fn k(&self) -> usize {
        self.spans.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.spans.dim()
    }

    pub fn spans(&self) -> &VectorList {
        &self.spans
    }

    /// Orthonormal basis of the normal space N.
    pub fn normal_basis(&self) -> Result<NormalBasis> {
        orthonormal_complement(&self.spans)
    }
}

/// A k-flat: orientation plus a translation expressed in normal-space
/// coordinates, which makes the translation perpendicular to the flat by
/// construction.
#[derive(Debug, Clone, Serialize)]
pub struct Flat {
    orientation: FlatOrientation,
    normal_basis: NormalBasis,
    translation: Vector,
}

impl Flat {
    pub fn new(orientation: FlatOrientation, translation: Vector) -> Result<Self> {
        let normal_basis = orientation.normal_basis()?;
        if translation.dim() != normal_basis.subspace_dim() {
            return Err(Error::InvalidInput(format!(
                "translation has {} coordinates, normal space has dimension {}",
                translation.dim(),
                normal_basis.subspace_dim()
            )));
        }
        Ok(Self {
            orientation,
            normal_basis,
            translation,
        })
    }

    /// The flat through the body center (zero translation).
    pub fn through_origin(orientation: FlatOrientation) -> Result<Self> {
        let dim = orientation.ambient_dim() - orientation.k();
        Self::new(orientation, Vector::zeros(dim))
    }

    pub fn orientation(&self) -> &FlatOrientation {
        &self.orientation
    }

    pub fn normal_basis(&self) -> &NormalBasis {
        &self.normal_basis
    }

    /// Translation in normal-space coordinates.
    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    /// Translation as an ambient-space point.
    pub fn translation_ambient(&self) -> Vector {
        self.normal_basis
            .reconstruct(&self.translation)
            .expect("translation dimension validated at construction")
    }
}

/// An (n-k)-dimensional face of the body: k coordinates fixed at +1 or -1 (in
/// unit-cube coordinates), the rest free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    fixed_indices: Vec<usize>,
    signs: Vec<i8>,
    free_indices: Vec<usize>,
}

impl Face {
    pub fn new(n: usize, fixed_indices: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        if fixed_indices.len() != signs.len() {
            return Err(Error::InvalidInput(
                "one sign per fixed coordinate required".into(),
            ));
        }
        if fixed_indices.windows(2).any(|w| w[0] >= w[1])
            || fixed_indices.iter().any(|&i| i >= n)
        {
            return Err(Error::InvalidInput(
                "fixed indices must be strictly increasing and below n".into(),
            ));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidInput("signs must be +1 or -1".into()));
        }
        let free_indices = (0..n).filter(|i| !fixed_indices.contains(i)).collect();
        Ok(Self {
            fixed_indices,
            signs,
            free_indices,
        })
    }

    /// All-positive representative face for a given free-index subset.
    pub fn representative(n: usize, free_indices: &[usize]) -> Result<Self> {
        let fixed: Vec<usize> = (0..n).filter(|i| !free_indices.contains(i)).collect();
        let signs = vec![1; fixed.len()];
        Self::new(n, fixed, signs)
    }

    pub fn codimension(&self) -> usize {
        self.fixed_indices.len()
    }

    pub fn dimension(&self) -> usize {
        self.free_indices.len()
    }

    pub fn fixed_indices(&self) -> &[usize] {
        &self.fixed_indices
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn free_indices(&self) -> &[usize] {
        &self.free_indices
    }
}

/// All codimension-k faces of an n-dimensional body: every k-subset of fixed
/// coordinates with every sign pattern, C(n,k) * 2^k faces in total.
pub fn enumerate_faces(n: usize, k: usize) -> Result<Vec<Face>> {
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!(
            "face codimension must satisfy 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let mut faces = Vec::new();
    for fixed in combinations(n, k) {
        for mask in 0u32..(1u32 << k) {
            let signs = (0..k)
                .map(|j| if mask & (1 << j) != 0 { 1 } else { -1 })
                .collect();
            faces.push(Face::new(n, fixed.clone(), signs)?);
        }
    }
    Ok(faces)
}

/// The projection of a face onto the normal space, as a zonotope in basis
/// coordinates. The base comes from the face's true corner (fixed generators
/// taken at their signed ends, free generators at their lower ends), so the
/// absolute offset inside the projected body is preserved.
pub fn face_zonotope(body: &Body, face: &Face, basis: &NormalBasis) -> Result<Zonotope> {
    if basis.ambient_dim() != body.n() {
        return Err(Error::InvalidInput(format!(
            "basis of R^{} for a body in R^{}",
            basis.ambient_dim(),
            body.n()
        )));
    }
    if face.codimension() + face.dimension() != body.n() {
        return Err(Error::InvalidInput(format!(
            "face of an {}-dimensional body applied to a body in R^{}",
            face.codimension() + face.dimension(),
            body.n()
        )));
    }
    let mut corner = body.base().clone();
    for (&i, &s) in face.fixed_indices().iter().zip(face.signs()) {
        if s > 0 {
            corner.axpy(1.0, body.edge_generators().get(i));
        }
    }
    let generators = VectorList::new(
        basis.subspace_dim(),
        face.free_indices()
            .iter()
            .map(|&i| basis.project(body.edge_generators().get(i)))
            .collect::<Result<Vec<_>>>()?,
    )?;
    Zonotope::new(basis.project(&corner)?, generators)
}

/// Whether the flat meets the face: true iff the flat's translation lies in
/// the face's normal-space projection (within [`MEMBERSHIP_TOL`]).
pub fn face_intersects(body: &Body, flat: &Flat, face: &Face) -> Result<bool> {
    let zonotope = face_zonotope(body, face, flat.normal_basis())?;
    zonotope.contains(flat.translation(), MEMBERSHIP_TOL)
}

/// Counters for measure-zero events met while solving a slice.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SliceDiagnostics {
    /// Face systems that were numerically singular (flat parallel to the
    /// face's fixed directions); such faces contribute no vertex.
    pub singular_face_systems: usize,
    /// Accepted vertices with a free coordinate within 10x the boundary
    /// tolerance of the face's edge.
    pub near_boundary_vertices: usize,
}

/// The vertex contributed by one face, if any: the point of the flat whose
/// fixed cube coordinates equal the face's signs, accepted when its free
/// cube coordinates stay within `[-1 - tol, 1 + tol]`.
pub fn solve_face_vertex(body: &Body, flat: &Flat, face: &Face) -> Result<Option<Vector>> {
    let mut diagnostics = SliceDiagnostics::default();
    solve_face_vertex_tracked(body, flat, face, &mut diagnostics)
}

fn solve_face_vertex_tracked(
    body: &Body,
    flat: &Flat,
    face: &Face,
    diagnostics: &mut SliceDiagnostics,
) -> Result<Option<Vector>> {
    let n = body.n();
    if flat.orientation().ambient_dim() != n {
        return Err(Error::InvalidInput(format!(
            "flat in R^{} sliced against a body in R^{}",
            flat.orientation().ambient_dim(),
            n
        )));
    }
    if face.codimension() + face.dimension() != n {
        return Err(Error::InvalidInput(
            "face does not match the body dimension".into(),
        ));
    }
    let k = flat.orientation().k();
    if face.codimension() != k {
        return Err(Error::InvalidInput(format!(
            "face codimension {} does not match slice dimension {}",
            face.codimension(),
            k
        )));
    }

    // Work in unit-cube coordinates: u(t) = u0 + sum_j t_j dir_j.
    let anchor = flat.translation_ambient();
    let u0 = body.to_cube_coords(&anchor)?;
    let dirs: Vec<Vector> = flat
        .orientation()
        .spans()
        .iter()
        .map(|d| body.cube_direction(d))
        .collect();

    // k x k system over the fixed coordinates.
    let mut matrix: Vec<Vec<f64>> = face
        .fixed_indices()
        .iter()
        .map(|&i| dirs.iter().map(|d| d[i]).collect())
        .collect();
    let mut rhs: Vec<f64> = face
        .fixed_indices()
        .iter()
        .zip(face.signs())
        .map(|(&i, &s)| f64::from(s) - u0[i])
        .collect();

    let scale = matrix
        .iter()
        .flat_map(|row| row.iter().map(|v| v.abs()))
        .fold(0.0_f64, f64::max)
        .max(1.0);
    let t = match solve_linear(&mut matrix, &mut rhs, SOLVE_PIVOT_TOL * scale) {
        Some(t) => t,
        None => {
            diagnostics.singular_face_systems += 1;
            return Ok(None);
        }
    };

    let mut u = u0.clone();
    for (tj, d) in t.iter().zip(&dirs) {
        u.axpy(*tj, d);
    }
    let mut near_boundary = false;
    for &i in face.free_indices() {
        let excess = u[i].abs() - 1.0;
        if excess > BOUNDARY_TOL {
            return Ok(None);
        }
        if excess.abs() <= NEAR_BOUNDARY_FACTOR * BOUNDARY_TOL {
            near_boundary = true;
        }
    }
    if near_boundary {
        diagnostics.near_boundary_vertices += 1;
    }

    let mut p = anchor;
    for (tj, d) in t.iter().zip(flat.orientation().spans().iter()) {
        p.axpy(*tj, d);
    }
    Ok(Some(p))
}

/// Gaussian elimination with partial pivoting; `None` when a pivot falls
/// below `pivot_floor`.
fn solve_linear(matrix: &mut [Vec<f64>], rhs: &mut [f64], pivot_floor: f64) -> Option<Vec<f64>> {
    let k = rhs.len();
    for col in 0..k {
        let pivot_row = (col..k)
            .max_by(|&i, &j| matrix[i][col].abs().total_cmp(&matrix[j][col].abs()))?;
        if matrix[pivot_row][col].abs() <= pivot_floor {
            return None;
        }
        matrix.swap(pivot_row, col);
        rhs.swap(pivot_row, col);
        for row in col + 1..k {
            let factor = matrix[row][col] / matrix[col][col];
            if factor != 0.0 {
                let (pivot_part, rest) = matrix.split_at_mut(row);
                for (dst, src) in rest[0].iter_mut().zip(&pivot_part[col]).skip(col) {
                    *dst -= factor * src;
                }
                rhs[row] -= factor * rhs[col];
            }
        }
    }
    let mut t = vec![0.0; k];
    for row in (0..k).rev() {
        let mut acc = rhs[row];
        for col in row + 1..k {
            acc -= matrix[row][col] * t[col];
        }
        t[row] = acc / matrix[row][row];
    }
    Some(t)
}

/// All vertices of the slice `body intersect flat`, deduplicated.
pub fn slice_vertices(body: &Body, flat: &Flat) -> Result<Vec<Vector>> {
    Ok(slice_vertices_with_diagnostics(body, flat)?.0)
}

/// Vertices plus the degeneracy counters accumulated while solving.
pub fn slice_vertices_with_diagnostics(
    body: &Body,
    flat: &Flat,
) -> Result<(Vec<Vector>, SliceDiagnostics)> {
    let k = flat.orientation().k();
    let mut vertices: Vec<Vector> = Vec::new();
    let mut diagnostics = SliceDiagnostics::default();
    for face in enumerate_faces(body.n(), k)? {
        if let Some(p) = solve_face_vertex_tracked(body, flat, &face, &mut diagnostics)? {
            if vertices
                .iter()
                .all(|q| q.distance(&p) > VERTEX_DEDUP_TOL)
            {
                vertices.push(p);
            }
        }
    }
    Ok((vertices, diagnostics))
}

/// The slice's vertex count; 0 when the flat misses the body.
pub fn vertex_count(body: &Body, flat: &Flat) -> Result<usize> {
    Ok(slice_vertices(body, flat)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sample_unit_sphere;
    use crate::rng::SeededRng;

    fn unit(coords: &[f64]) -> Vector {
        let v = Vector::new(coords.to_vec()).unwrap();
        v.scaled(1.0 / v.norm())
    }

    /// Orientation spanning the plane x + y + z = 0.
    fn hexagon_flat() -> Flat {
        let spans = VectorList::from_vectors(vec![
            unit(&[1.0, -1.0, 0.0]),
            unit(&[1.0, 1.0, -2.0]),
        ])
        .unwrap();
        Flat::through_origin(FlatOrientation::new(spans).unwrap()).unwrap()
    }

    #[test]
    fn face_counts() {
        assert_eq!(enumerate_faces(3, 2).unwrap().len(), 12);
        assert_eq!(enumerate_faces(3, 1).unwrap().len(), 6);
        assert_eq!(enumerate_faces(4, 2).unwrap().len(), 24);
        assert!(enumerate_faces(3, 0).is_err());
        assert!(enumerate_faces(3, 4).is_err());
    }

    #[test]
    fn faces_are_distinct() {
        let faces = enumerate_faces(4, 2).unwrap();
        for i in 0..faces.len() {
            for j in i + 1..faces.len() {
                assert_ne!(faces[i], faces[j]);
            }
        }
    }

    #[test]
    fn axis_face_zonotope_is_segment() {
        let body = Body::cube(3).unwrap();
        let orientation = FlatOrientation::axis_aligned(3, 2).unwrap();
        let basis = orientation.normal_basis().unwrap();
        // Edge parallel to e_3: fixed x_1 = +1, x_2 = -1.
        let face = Face::new(3, vec![0, 1], vec![1, -1]).unwrap();
        let z = face_zonotope(&body, &face, &basis).unwrap();
        assert_eq!(z.dim(), 1);
        let (lo, hi) = z.bounding_box();
        assert!((lo[0] + 1.0).abs() < 1e-12 && (hi[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_face_zonotope_length_and_offset() {
        let body = Body::cube(3).unwrap();
        let flat = hexagon_flat();
        let basis = flat.normal_basis();
        let sqrt3 = 3.0_f64.sqrt();
        for face in enumerate_faces(3, 2).unwrap() {
            let z = face_zonotope(&body, &face, basis).unwrap();
            assert!((z.volume(1).unwrap() - 2.0 / sqrt3).abs() < 1e-12);
            // Offset: projection of the two fixed signed coordinates.
            let expected: f64 = face
                .fixed_indices()
                .iter()
                .zip(face.signs())
                .map(|(_, &s)| f64::from(s) / sqrt3)
                .sum();
            let center = z.center();
            assert!((center[0] - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn vertex_face_zonotope_is_point() {
        let body = Body::cube(2).unwrap();
        let orientation = FlatOrientation::axis_aligned(2, 2).unwrap();
        let basis = orientation.normal_basis().unwrap();
        let face = Face::new(2, vec![0, 1], vec![1, 1]).unwrap();
        let z = face_zonotope(&body, &face, &basis).unwrap();
        assert_eq!(z.dim(), 0);
        assert_eq!(z.generator_count(), 0);
        assert_eq!(z.volume(0).unwrap(), 1.0);
    }

    #[test]
    fn axis_slice_intersects_only_parallel_edges() {
        let body = Body::cube(3).unwrap();
        let flat =
            Flat::through_origin(FlatOrientation::axis_aligned(3, 2).unwrap()).unwrap();
        let mut hits = 0;
        for face in enumerate_faces(3, 2).unwrap() {
            let hit = face_intersects(&body, &flat, &face).unwrap();
            let parallel_to_e3 = face.free_indices() == [2];
            assert_eq!(hit, parallel_to_e3);
            hits += usize::from(hit);
        }
        assert_eq!(hits, 4);
    }

    #[test]
    fn central_diagonal_slice_hits_six_edges() {
        let body = Body::cube(3).unwrap();
        let flat = hexagon_flat();
        let mut hits = 0;
        for face in enumerate_faces(3, 2).unwrap() {
            let predicate = face_intersects(&body, &flat, &face).unwrap();
            let solved = solve_face_vertex(&body, &flat, &face).unwrap().is_some();
            assert_eq!(predicate, solved, "face {face:?}");
            hits += usize::from(predicate);
        }
        assert_eq!(hits, 6);
    }

    #[test]
    fn translation_outside_projection_misses_every_face() {
        let body = Body::cube(3).unwrap();
        let orientation = FlatOrientation::new(
            VectorList::from_vectors(vec![unit(&[1.0, -1.0, 0.0]), unit(&[1.0, 1.0, -2.0])])
                .unwrap(),
        )
        .unwrap();
        let flat = Flat::new(orientation, Vector::new(vec![10.0]).unwrap()).unwrap();
        for face in enumerate_faces(3, 2).unwrap() {
            assert!(!face_intersects(&body, &flat, &face).unwrap());
            assert!(solve_face_vertex(&body, &flat, &face).unwrap().is_none());
        }
        assert_eq!(vertex_count(&body, &flat).unwrap(), 0);
    }

    #[test]
    fn solve_examples() {
        // n=2, k=1, flat along e_1 through the origin, face x_1 = +1.
        let body = Body::cube(2).unwrap();
        let flat =
            Flat::through_origin(FlatOrientation::axis_aligned(2, 1).unwrap()).unwrap();
        let face = Face::new(2, vec![0], vec![1]).unwrap();
        let p = solve_face_vertex(&body, &flat, &face).unwrap().unwrap();
        assert!(p.distance(&Vector::new(vec![1.0, 0.0]).unwrap()) < 1e-12);

        // Plane x+y+z = 0: face (x_1=1, x_2=-1) gives (1,-1,0).
        let body = Body::cube(3).unwrap();
        let flat = hexagon_flat();
        let face = Face::new(3, vec![0, 1], vec![1, -1]).unwrap();
        let p = solve_face_vertex(&body, &flat, &face).unwrap().unwrap();
        assert!(p.distance(&Vector::new(vec![1.0, -1.0, 0.0]).unwrap()) < 1e-9);

        // Face (x_1=1, x_2=1) solves to free coordinate -2: rejected.
        let face = Face::new(3, vec![0, 1], vec![1, 1]).unwrap();
        assert!(solve_face_vertex(&body, &flat, &face).unwrap().is_none());
    }

    #[test]
    fn singular_face_system_is_counted() {
        let body = Body::cube(3).unwrap();
        let flat =
            Flat::through_origin(FlatOrientation::axis_aligned(3, 2).unwrap()).unwrap();
        // Face fixing x_1 and x_3: the flat's directions cannot move x_3.
        let face = Face::new(3, vec![0, 2], vec![1, 1]).unwrap();
        let mut diag = SliceDiagnostics::default();
        assert!(
            solve_face_vertex_tracked(&body, &flat, &face, &mut diag)
                .unwrap()
                .is_none()
        );
        assert_eq!(diag.singular_face_systems, 1);
    }

    #[test]
    fn hexagonal_central_section() {
        let body = Body::cube(3).unwrap();
        let flat = hexagon_flat();
        let vertices = slice_vertices(&body, &flat).unwrap();
        assert_eq!(vertices.len(), 6);
        let mut expected: Vec<Vector> = vec![
            Vector::new(vec![1.0, -1.0, 0.0]).unwrap(),
            Vector::new(vec![-1.0, 1.0, 0.0]).unwrap(),
            Vector::new(vec![1.0, 0.0, -1.0]).unwrap(),
            Vector::new(vec![-1.0, 0.0, 1.0]).unwrap(),
            Vector::new(vec![0.0, 1.0, -1.0]).unwrap(),
            Vector::new(vec![0.0, -1.0, 1.0]).unwrap(),
        ];
        for v in &vertices {
            let at = expected
                .iter()
                .position(|e| e.distance(v) < 1e-9)
                .unwrap_or_else(|| panic!("unexpected vertex {v:?}"));
            expected.remove(at);
        }
        assert!(expected.is_empty());
    }

    #[test]
    fn axis_slice_is_a_square() {
        for n in 3..=6 {
            let body = Body::cube(n).unwrap();
            let flat =
                Flat::through_origin(FlatOrientation::axis_aligned(n, 2).unwrap()).unwrap();
            let vertices = slice_vertices(&body, &flat).unwrap();
            assert_eq!(vertices.len(), 4, "n={n}");
            for v in &vertices {
                assert!((v[0].abs() - 1.0).abs() < 1e-12);
                assert!((v[1].abs() - 1.0).abs() < 1e-12);
                for i in 2..n {
                    assert!(v[i].abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn full_dimensional_slice_returns_all_body_vertices() {
        for n in 1..=4 {
            let body = Body::cube(n).unwrap();
            let orientation = FlatOrientation::axis_aligned(n, n).unwrap();
            let flat = Flat::through_origin(orientation).unwrap();
            assert_eq!(vertex_count(&body, &flat).unwrap(), 1 << n);
        }
    }

    #[test]
    fn random_slices_respect_vertex_bounds() {
        // Nonzero 2-slice counts of an n-cube lie in [3, 2n].
        let n = 5;
        let body = Body::cube(n).unwrap();
        let mut rng = SeededRng::from_seed(4242);
        let mut nonzero = 0;
        for _ in 0..1000 {
            let orientation = loop {
                let spans = VectorList::from_vectors(vec![
                    sample_unit_sphere(&mut rng, n),
                    sample_unit_sphere(&mut rng, n),
                ])
                .unwrap();
                if let Ok(o) = FlatOrientation::new(spans) {
                    break o;
                }
            };
            let basis = orientation.normal_basis().unwrap();
            let projected = body.zonotope().project(&basis).unwrap();
            let translation = projected.sample_uniform(&mut rng).unwrap();
            let flat = Flat::new(orientation, translation).unwrap();
            let count = vertex_count(&body, &flat).unwrap();
            if count > 0 {
                nonzero += 1;
                assert!((3..=2 * n).contains(&count), "count={count}");
            }
        }
        assert!(nonzero >= 990);
    }

    #[test]
    fn vertices_lie_on_flat_and_in_cube() {
        let n = 4;
        let body = Body::cube(n).unwrap();
        let mut rng = SeededRng::from_seed(99);
        for _ in 0..50 {
            let spans = VectorList::from_vectors(vec![
                sample_unit_sphere(&mut rng, n),
                sample_unit_sphere(&mut rng, n),
            ])
            .unwrap();
            let orientation = match FlatOrientation::new(spans) {
                Ok(o) => o,
                Err(_) => continue,
            };
            let basis = orientation.normal_basis().unwrap();
            let projected = body.zonotope().project(&basis).unwrap();
            let translation = projected.sample_uniform(&mut rng).unwrap();
            let flat = Flat::new(orientation, translation).unwrap();
            let vertices = slice_vertices(&body, &flat).unwrap();
            let face_bound = crate::subsets::binomial(n, 2) * 4;
            assert!((vertices.len() as u128) <= face_bound);
            for v in vertices {
                for c in v.coords() {
                    assert!(c.abs() <= 1.0 + 1e-9);
                }
                let coords = flat.normal_basis().project(&v).unwrap();
                assert!(coords.distance(flat.translation()) < 1e-9);
            }
        }
    }

    #[test]
    fn count_is_invariant_under_axis_permutation_and_flip() {
        let n = 4;
        let body = Body::cube(n).unwrap();
        let mut rng = SeededRng::from_seed(314);
        // Coordinate map: permute axes then flip the sign of axis 2.
        let perm = [2usize, 0, 3, 1];
        let transform = |v: &Vector| -> Vector {
            let mut out = vec![0.0; n];
            for (from, &to) in perm.iter().enumerate() {
                out[to] = v[from] * if to == 2 { -1.0 } else { 1.0 };
            }
            Vector::new(out).unwrap()
        };
        for _ in 0..20 {
            let spans = VectorList::from_vectors(vec![
                sample_unit_sphere(&mut rng, n),
                sample_unit_sphere(&mut rng, n),
            ])
            .unwrap();
            let orientation = match FlatOrientation::new(spans.clone()) {
                Ok(o) => o,
                Err(_) => continue,
            };
            let basis = orientation.normal_basis().unwrap();
            let projected = body.zonotope().project(&basis).unwrap();
            let translation = projected.sample_uniform(&mut rng).unwrap();
            let flat = Flat::new(orientation, translation).unwrap();

            let mapped_spans = VectorList::from_vectors(
                spans.iter().map(&transform).collect(),
            )
            .unwrap();
            let mapped_orientation = FlatOrientation::new(mapped_spans).unwrap();
            let mapped_ambient = transform(&flat.translation_ambient());
            let mapped_basis = mapped_orientation.normal_basis().unwrap();
            let mapped_translation = mapped_basis.project(&mapped_ambient).unwrap();
            let mapped_flat = Flat::new(mapped_orientation, mapped_translation).unwrap();

            assert_eq!(
                vertex_count(&body, &flat).unwrap(),
                vertex_count(&body, &mapped_flat).unwrap()
            );
        }
    }

    #[test]
    fn parallelotope_body_roundtrips_coordinates() {
        let generators = VectorList::from_vectors(vec![
            Vector::new(vec![1.0, 0.2, 0.0]).unwrap(),
            Vector::new(vec![-0.1, 1.3, 0.4]).unwrap(),
            Vector::new(vec![0.3, 0.0, 0.9]).unwrap(),
        ])
        .unwrap();
        let body =
            Body::parallelotope(Vector::new(vec![0.5, -0.5, 0.25]).unwrap(), generators).unwrap();
        let mut rng = SeededRng::from_seed(6);
        for _ in 0..100 {
            let u = Vector::new((0..3).map(|_| rng.uniform_in(-1.0, 1.0)).collect()).unwrap();
            let p = body.from_cube_coords(&u).unwrap();
            let back = body.to_cube_coords(&p).unwrap();
            assert!(back.distance(&u) < 1e-12);
        }
    }

    #[test]
    fn singular_body_is_rejected_with_rank() {
        let generators = VectorList::from_vectors(vec![
            Vector::new(vec![1.0, 0.0]).unwrap(),
            Vector::new(vec![2.0, 0.0]).unwrap(),
        ])
        .unwrap();
        let err = Body::parallelotope(Vector::zeros(2), generators).unwrap_err();
        assert!(err.to_string().contains("rank 1"));
    }
}
