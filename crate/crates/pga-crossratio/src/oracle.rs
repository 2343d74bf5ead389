//! Independent classical-geometry ground truth and a brute-force blade
//! product, used by tests and the `verify` command.
//!
//! Nothing here goes through the dual/commutator machinery being verified:
//! cross-ratios come from 2×2 determinants or sines of angles, and the blade
//! product works on explicit ordered factor lists with a bubble sort.

use crate::ga::Signature;
use crate::objects::{euclidean_split, point_coords, GeometricObject, Role};
use crate::xreal::ExtendedReal;

#[derive(Clone, Debug, thiserror::Error, PartialEq)]
pub enum OracleError {
    #[error("indeterminate 0/0 cross-ratio")]
    Indeterminate,
    #[error("homogeneous point (0, 0) is not a projective point")]
    ZeroPoint,
    #[error("points are not collinear (deviation {deviation:.3e})")]
    NotCollinear { deviation: f64 },
    #[error("objects do not form an angular pencil: {0}")]
    NotAngular(&'static str),
    #[error("{0}")]
    Object(#[from] crate::objects::ObjectError),
}

/// A point of the projective line in homogeneous coordinates (x, w).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Homog2 {
    pub x: f64,
    pub w: f64,
}

impl Homog2 {
    pub fn new(x: f64, w: f64) -> Result<Homog2, OracleError> {
        if x == 0.0 && w == 0.0 {
            return Err(OracleError::ZeroPoint);
        }
        Ok(Homog2 { x, w })
    }

    /// Finite point with w = 1.
    pub fn affine(x: f64) -> Homog2 {
        Homog2 { x, w: 1.0 }
    }

    /// The point at infinity of the line.
    pub fn infinity() -> Homog2 {
        Homog2 { x: 1.0, w: 0.0 }
    }
}

/// The 2×2 determinant |x_i x_j| = x_i w_j − x_j w_i.
pub fn det2(a: Homog2, b: Homog2) -> f64 {
    a.x * b.w - b.x * a.w
}

/// Cross-ratio of four projective-line points via determinants:
/// (|13||24|) / (|14||23|). Independent of the homogeneous representatives.
pub fn classical_cr_determinant(p: &[Homog2; 4]) -> Result<ExtendedReal, OracleError> {
    let num = det2(p[0], p[2]) * det2(p[1], p[3]);
    let den = det2(p[0], p[3]) * det2(p[1], p[2]);
    ExtendedReal::ratio(num, den).ok_or(OracleError::Indeterminate)
}

/// Cross-ratio of four affine parameters:
/// ((t_1−t_3)(t_2−t_4)) / ((t_1−t_4)(t_2−t_3)).
pub fn classical_cr_affine(t: &[f64; 4]) -> Result<ExtendedReal, OracleError> {
    let num = (t[0] - t[2]) * (t[1] - t[3]);
    let den = (t[0] - t[3]) * (t[1] - t[2]);
    ExtendedReal::ratio(num, den).ok_or(OracleError::Indeterminate)
}

/// The simple (affine) ratio |x_1 x_3| / |x_2 x_3| of a triple.
///
/// This is the limit of the cross-ratio as the fourth point goes to
/// infinity. Unlike the full cross-ratio it is NOT independent of the
/// homogeneous representatives: it equals the ratio of signed distances
/// (x̂_1 − x̂_3)/(x̂_2 − x̂_3) only when the points are normalized to w = 1.
pub fn simple_ratio(p1: Homog2, p2: Homog2, p3: Homog2) -> Result<ExtendedReal, OracleError> {
    ExtendedReal::ratio(det2(p1, p3), det2(p2, p3)).ok_or(OracleError::Indeterminate)
}

/// Four pencil angles in radians, pairwise distinct modulo π.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PencilAngles(pub [f64; 4]);

/// Sine cross-ratio: sin(α_13) sin(α_24) / (sin(α_14) sin(α_23)) with
/// α_ij = α_i − α_j. Invariant under a common rotation of all four angles
/// and under a π shift of any single angle.
pub fn sine_cr(a: &PencilAngles) -> Result<ExtendedReal, OracleError> {
    let s = |i: usize, j: usize| (a.0[i] - a.0[j]).sin();
    let num = s(0, 2) * s(1, 3);
    let den = s(0, 3) * s(1, 2);
    ExtendedReal::ratio(num, den).ok_or(OracleError::Indeterminate)
}

/// Affine parameters of four collinear finite points: pick the support
/// direction from the first two, take point 1 as the reference, and project.
/// Any valid choice of direction and reference yields the same cross-ratio.
pub fn line_parameters(objs: &[GeometricObject; 4], tol: f64) -> Result<[f64; 4], OracleError> {
    let mut coords = Vec::with_capacity(4);
    for o in objs {
        coords.push(point_coords(o)?.0);
    }
    let n = coords[0].len();
    let x0 = coords[0].clone();
    let mut d: Vec<f64> = (0..n).map(|i| coords[1][i] - x0[i]).collect();
    let len = d.iter().map(|v| v * v).sum::<f64>().sqrt();
    if len == 0.0 {
        return Err(OracleError::NotCollinear { deviation: f64::INFINITY });
    }
    for v in &mut d {
        *v /= len;
    }
    let mut t = [0.0; 4];
    let mut scale: f64 = 1.0;
    for (k, c) in coords.iter().enumerate() {
        let rel: Vec<f64> = (0..n).map(|i| c[i] - x0[i]).collect();
        t[k] = rel.iter().zip(&d).map(|(r, di)| r * di).sum();
        scale = scale.max(rel.iter().map(|v| v.abs()).fold(0.0, f64::max));
        // off-line component must vanish
        let deviation = rel
            .iter()
            .zip(&d)
            .map(|(r, di)| r - t[k] * di)
            .map(|v| v.abs())
            .fold(0.0, f64::max);
        if deviation > tol * scale.max(1.0) {
            return Err(OracleError::NotCollinear { deviation });
        }
    }
    Ok(t)
}

/// Angles of an angular pencil, measured in the 2-plane spanned by the
/// objects' rotating parts.
///
/// Each object contributes one coefficient vector: the Euclidean part for
/// finite objects, the ideal part for ideal ones. In a pencil those vectors
/// sweep a circle in coefficient space, so a Gram–Schmidt basis of their
/// common 2-plane turns each into an angle. The angles are determined up to
/// a common offset and per-object π shifts, both of which the sine
/// cross-ratio ignores.
pub fn pencil_angles(objs: &[GeometricObject; 4], tol: f64) -> Result<PencilAngles, OracleError> {
    let vectors: Vec<Vec<f64>> = objs
        .iter()
        .map(|o| {
            let split = euclidean_split(o.mv());
            let part = if o.is_finite(tol) { split.euclid } else { split.ideal };
            let norm = part.norm2();
            o.sig()
                .blades()
                .map(|b| part.coeff(b) / norm)
                .collect()
        })
        .collect();

    let dot = |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };

    let u = vectors[0].clone();
    // second basis vector: the component of the most independent partner
    let mut v: Option<Vec<f64>> = None;
    let mut best = 0.0;
    for cand in &vectors[1..] {
        let proj = dot(cand, &u);
        let rest: Vec<f64> = cand.iter().zip(&u).map(|(c, ui)| c - proj * ui).collect();
        let norm = dot(&rest, &rest).sqrt();
        if norm > best {
            best = norm;
            v = Some(rest.iter().map(|r| r / norm).collect());
        }
    }
    let v = v.filter(|_| best > tol).ok_or(OracleError::NotAngular(
        "rotating parts are mutually proportional",
    ))?;

    let mut angles = [0.0; 4];
    for (k, vec) in vectors.iter().enumerate() {
        let cu = dot(vec, &u);
        let cv = dot(vec, &v);
        let off_plane = vec
            .iter()
            .zip(u.iter().zip(&v))
            .map(|(c, (ui, vi))| c - cu * ui - cv * vi)
            .map(|r| r.abs())
            .fold(0.0, f64::max);
        if off_plane > tol {
            return Err(OracleError::NotAngular("rotating parts do not share a 2-plane"));
        }
        angles[k] = cv.atan2(cu);
    }
    Ok(PencilAngles(angles))
}

/// Four concurrent 2-D lines (as angles through a random vertex) and the
/// homogeneous parameters of their intersections with a random transversal.
///
/// Draws are rejected when two lines nearly coincide modulo π, when a line
/// runs nearly parallel to the transversal, or when an intersection
/// parameter exceeds 1e6 (conditioning guard), so callers simply retry on
/// `None`. The sine cross-ratio of the angles equals the determinant
/// cross-ratio of the returned points.
pub fn sample_transversal(rng: &mut impl rand::Rng) -> Option<(PencilAngles, [Homog2; 4])> {
    use std::f64::consts::PI;
    let vertex = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
    let mut angles = [0.0; 4];
    for a in &mut angles {
        *a = rng.gen_range(0.0..PI);
    }
    for i in 0..4 {
        for j in 0..i {
            let d = (angles[i] - angles[j]).rem_euclid(PI);
            if d.min(PI - d) < 0.05 {
                return None;
            }
        }
    }
    let q = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
    let beta = rng.gen_range(0.0..PI);
    let e = [beta.cos(), beta.sin()];
    let mut params = [Homog2::affine(0.0); 4];
    for (i, &alpha) in angles.iter().enumerate() {
        let d = [alpha.cos(), alpha.sin()];
        // vertex + s d = q + t e
        let det = d[0] * (-e[1]) + e[0] * d[1];
        if det.abs() < 1e-6 {
            return None;
        }
        let rhs = [q[0] - vertex[0], q[1] - vertex[1]];
        let t = (d[0] * rhs[1] - d[1] * rhs[0]) / det;
        if t.abs() > 1e6 {
            return None;
        }
        params[i] = Homog2::affine(t);
    }
    Some((PencilAngles(angles), params))
}

/// Ordered-factor-list blade product: concatenate, bubble-sort with a sign
/// flip per adjacent transposition, and contract equal adjacent generators
/// through the metric. The independent check for the bitmask Cayley rule.
pub fn naive_blade_product(j: &[usize], k: &[usize], sig: Signature) -> (i32, Vec<usize>) {
    debug_assert!(j.windows(2).all(|w| w[0] < w[1]), "factors must ascend");
    debug_assert!(k.windows(2).all(|w| w[0] < w[1]), "factors must ascend");
    let mut factors: Vec<usize> = j.iter().chain(k.iter()).copied().collect();
    let mut sign = 1i32;
    // bubble sort, one adjacent swap at a time
    loop {
        let mut swapped = false;
        for i in 1..factors.len() {
            if factors[i - 1] > factors[i] {
                factors.swap(i - 1, i);
                sign = -sign;
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    // contract equal adjacent generators
    let mut out: Vec<usize> = Vec::with_capacity(factors.len());
    for f in factors {
        if out.last() == Some(&f) {
            out.pop();
            let metric = sig.metric(f, f);
            if metric == 0.0 {
                return (0, Vec::new());
            }
            // metric is 1 for Euclidean generators: no sign contribution
        } else {
            out.push(f);
        }
    }
    (sign, out)
}

/// Check that four objects are points and split them by finiteness.
pub fn split_by_finiteness(
    objs: &[GeometricObject; 4],
    tol: f64,
) -> Result<(Vec<usize>, Vec<usize>), OracleError> {
    for o in objs {
        if o.role() != Role::Point {
            return Err(OracleError::Object(crate::objects::ObjectError::RoleMismatch {
                expected: "Point",
                found: o.role(),
            }));
        }
    }
    let mut finite = Vec::new();
    let mut ideal = Vec::new();
    for (i, o) in objs.iter().enumerate() {
        if o.is_finite(tol) {
            finite.push(i);
        } else {
            ideal.push(i);
        }
    }
    Ok((finite, ideal))
}
