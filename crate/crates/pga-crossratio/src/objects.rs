//! Geometric objects: points, hyperplanes, intermediate flats, and the
//! Euclidean/ideal split.
//!
//! A hyperplane is a 1-vector a_1 e_1 + … + a_n e_n + a_0 e_0 (normal plus
//! offset). A point is the Hodge dual of a 1-vector, hence an n-vector; its
//! e_0 coefficient before dualizing is the weight and position = a_i / a_0.
//! Flats of grade k (1 < k < n) sit in between. Every object here is a
//! homogeneous blade.
//!
//! Finite/ideal classification follows the split A = A_E + e_0 A_I: an
//! object is finite iff its Euclidean part A_E is nonzero, and passes
//! through the origin iff its ideal part A_I vanishes.

use crate::dual::{hodge_dual, hodge_undual};
use crate::ga::{BladeIndex, Multivector, Signature};

/// Default relative tolerance used when no explicit tolerance is given.
/// Double precision with the condition numbers that arise from four-object
/// configurations of moderate anisotropy leaves plenty of headroom at 1e-9.
pub const DEFAULT_TOL: f64 = 1e-9;

/// What a blade's grade says it is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    /// Grade n.
    Point,
    /// Grade 1.
    Hyperplane,
    /// Grade k with 1 < k < n.
    Flat(usize),
}

impl Role {
    pub fn of_grade(grade: usize, sig: Signature) -> Result<Role, ObjectError> {
        let n = sig.dim();
        if grade == n {
            Ok(Role::Point)
        } else if grade == 1 {
            Ok(Role::Hyperplane)
        } else if grade > 1 && grade < n {
            Ok(Role::Flat(grade))
        } else {
            Err(ObjectError::GradeOutOfRange { grade, n })
        }
    }
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Role::Point => write!(f, "Point"),
            Role::Hyperplane => write!(f, "Hyperplane"),
            Role::Flat(k) => write!(f, "Flat({k})"),
        }
    }
}

#[derive(Clone, Debug, thiserror::Error, PartialEq)]
pub enum ObjectError {
    #[error("zero {0} is not a valid input")]
    ZeroInput(&'static str),
    #[error("object is not grade-homogeneous")]
    NotHomogeneous,
    #[error("grade {grade} does not name an object in dimension {n}")]
    GradeOutOfRange { grade: usize, n: usize },
    #[error("multivector is not a blade (self-wedge residual {residual:.3e})")]
    NotABlade { residual: f64 },
    #[error("expected {expected} coordinates, got {got}")]
    WrongCoordinateCount { expected: usize, got: usize },
    #[error("{op} of dependent objects produced the zero blade")]
    Degenerate { op: &'static str },
    #[error("operation requires a {expected}, found a {found}")]
    RoleMismatch { expected: &'static str, found: Role },
    #[error("object is ideal; it has a direction, not coordinates")]
    IdealObject,
}

/// The unique decomposition A = A_E + e_0 A_I.
///
/// Both parts are e_0-free; `ideal` is the cofactor of e_0. Since bit 0 is
/// the lowest generator, factoring e_0 out on the left carries sign +1.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitPair {
    pub euclid: Multivector,
    pub ideal: Multivector,
}

impl SplitPair {
    /// euclid + e_0 · ideal, which equals the original exactly.
    pub fn reassemble(&self) -> Multivector {
        let e0 = Multivector::basis(self.euclid.sig(), BladeIndex(1));
        &self.euclid + &e0.gp(&self.ideal)
    }
}

/// Split a multivector into its Euclidean and ideal parts.
pub fn euclidean_split(a: &Multivector) -> SplitPair {
    let sig = a.sig();
    let mut euclid = Vec::new();
    let mut ideal = Vec::new();
    for (blade, coeff) in a.terms() {
        if blade.has_e0() {
            ideal.push((BladeIndex(blade.bits() & !1), coeff));
        } else {
            euclid.push((blade, coeff));
        }
    }
    SplitPair {
        euclid: Multivector::from_terms(sig, euclid),
        ideal: Multivector::from_terms(sig, ideal),
    }
}

/// Finite/ideal and origin-incidence status of an object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ObjectClass {
    pub finite: bool,
    pub through_origin: bool,
}

/// Classify a nonzero multivector by the relative magnitudes of its split
/// parts: finite ⇔ ‖A_E‖∞ > tol·‖A‖∞, through the origin ⇔ ‖A_I‖∞ ≤ tol·‖A‖∞.
pub fn classify_mv(a: &Multivector, tol: f64) -> Result<ObjectClass, ObjectError> {
    if a.is_zero() {
        return Err(ObjectError::ZeroInput("object"));
    }
    let split = euclidean_split(a);
    let scale = a.norm_inf();
    Ok(ObjectClass {
        finite: split.euclid.norm_inf() > tol * scale,
        through_origin: split.ideal.norm_inf() <= tol * scale,
    })
}

/// A homogeneous blade together with its role.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricObject {
    mv: Multivector,
    role: Role,
}

impl GeometricObject {
    /// Wrap a multivector as an object, inferring the role from its grade.
    ///
    /// Validates grade homogeneity and, for grades 2 and n−1, bladehood via
    /// the self-wedge test B ∧ B = 0 (up to `tol`, relative to ‖B‖∞²).
    /// Other grades are accepted as constructed; arbitrary-grade blade
    /// factorization is deliberately out of scope.
    pub fn new(mv: Multivector, tol: f64) -> Result<GeometricObject, ObjectError> {
        if mv.is_zero() {
            return Err(ObjectError::ZeroInput("object"));
        }
        let grade = mv.homogeneous_grade().ok_or(ObjectError::NotHomogeneous)?;
        let role = Role::of_grade(grade, mv.sig())?;
        let n = mv.sig().dim();
        if grade == 2 || grade + 1 == n {
            let sq = mv.wedge(&mv);
            let residual = sq.norm_inf() / (mv.norm_inf() * mv.norm_inf());
            if residual > tol {
                return Err(ObjectError::NotABlade { residual });
            }
        }
        Ok(GeometricObject { mv, role })
    }

    pub fn mv(&self) -> &Multivector {
        &self.mv
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn grade(&self) -> usize {
        self.mv.homogeneous_grade().expect("objects are homogeneous")
    }

    pub fn sig(&self) -> Signature {
        self.mv.sig()
    }

    pub fn classify(&self, tol: f64) -> ObjectClass {
        classify_mv(&self.mv, tol).expect("objects are nonzero")
    }

    pub fn is_finite(&self, tol: f64) -> bool {
        self.classify(tol).finite
    }

    pub fn is_ideal(&self, tol: f64) -> bool {
        !self.is_finite(tol)
    }

    pub fn through_origin(&self, tol: f64) -> bool {
        self.classify(tol).through_origin
    }

    /// Same object under a different homogeneous representative.
    pub fn rescale(&self, s: f64) -> GeometricObject {
        assert!(s != 0.0 && s.is_finite(), "representative scale must be finite and nonzero");
        GeometricObject { mv: self.mv.scale(s), role: self.role }
    }

    /// Hodge dual as an object: Point ↔ Hyperplane, Flat(k) ↔ Flat(n+1−k).
    pub fn dual(&self) -> GeometricObject {
        let mv = hodge_dual(&self.mv);
        let grade = mv.homogeneous_grade().expect("dual of a blade is a blade");
        let role = Role::of_grade(grade, mv.sig()).expect("dual grade stays in object range");
        GeometricObject { mv, role }
    }

    /// Canonical representative: unit Euclidean part for finite objects,
    /// unit ideal part for ideal ones (coefficient 2-norms), with the sign
    /// fixed by making the first nonzero coefficient (ascending blade order)
    /// positive. Idempotent, and identical for A and −A.
    pub fn unitize(&self) -> GeometricObject {
        GeometricObject { mv: unitize_mv(&self.mv, DEFAULT_TOL), role: self.role }
    }
}

impl std::fmt::Display for GeometricObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[{}]", self.role, self.mv)
    }
}

/// Normalization behind [`GeometricObject::unitize`], usable on any nonzero
/// multivector (pair measures in particular).
pub fn unitize_mv(a: &Multivector, tol: f64) -> Multivector {
    assert!(!a.is_zero(), "cannot unitize the zero multivector");
    let split = euclidean_split(a);
    let class = classify_mv(a, tol).expect("nonzero");
    let norm = if class.finite { split.euclid.norm2() } else { split.ideal.norm2() };
    let scaled = a.scale(1.0 / norm);
    let leading = scaled.terms().next().map(|(_, c)| c).unwrap_or(0.0);
    if leading < 0.0 {
        scaled.scale(-1.0)
    } else {
        scaled
    }
}

fn euclidean_vector(sig: Signature, coords: &[f64]) -> Result<Vec<(BladeIndex, f64)>, ObjectError> {
    if coords.len() != sig.dim() {
        return Err(ObjectError::WrongCoordinateCount { expected: sig.dim(), got: coords.len() });
    }
    Ok(coords.iter().enumerate().map(|(i, &c)| (BladeIndex(1 << (i + 1)), c)).collect())
}

/// Finite point at `coords` with homogeneous weight `weight`:
/// the dual of weight·(x_1 e_1 + … + x_n e_n + e_0).
pub fn point(sig: Signature, coords: &[f64], weight: f64) -> Result<GeometricObject, ObjectError> {
    let mut terms = euclidean_vector(sig, coords)?;
    for t in &mut terms {
        t.1 *= weight;
    }
    terms.push((BladeIndex(1), weight));
    let v = Multivector::from_terms(sig, terms);
    if v.is_zero() {
        return Err(ObjectError::ZeroInput("point (weight is zero)"));
    }
    GeometricObject::new(hodge_dual(&v), DEFAULT_TOL)
}

/// Ideal point (direction): the dual of d_1 e_1 + … + d_n e_n.
pub fn ideal_point(sig: Signature, direction: &[f64]) -> Result<GeometricObject, ObjectError> {
    let terms = euclidean_vector(sig, direction)?;
    let v = Multivector::from_terms(sig, terms);
    if v.is_zero() {
        return Err(ObjectError::ZeroInput("direction"));
    }
    GeometricObject::new(hodge_dual(&v), DEFAULT_TOL)
}

/// Hyperplane with the given normal and offset: n_1 e_1 + … + n_n e_n + offset·e_0.
/// A finite point x lies on it iff n·x + offset = 0.
pub fn hyperplane(sig: Signature, normal: &[f64], offset: f64) -> Result<GeometricObject, ObjectError> {
    let mut terms = euclidean_vector(sig, normal)?;
    if terms.iter().all(|&(_, c)| c == 0.0) {
        return Err(ObjectError::ZeroInput("normal"));
    }
    terms.push((BladeIndex(1), offset));
    GeometricObject::new(Multivector::from_terms(sig, terms), DEFAULT_TOL)
}

/// The unique ideal hyperplane e_0.
pub fn ideal_hyperplane(sig: Signature) -> GeometricObject {
    GeometricObject::new(Multivector::basis(sig, BladeIndex(1)), DEFAULT_TOL)
        .expect("e_0 is a valid grade-1 object")
}

/// Join points into the flat they span, by iterated regressive product.
/// Two points give the grade-(n−1) line through both.
pub fn flat_from_join(points: &[GeometricObject]) -> Result<GeometricObject, ObjectError> {
    if points.len() < 2 {
        return Err(ObjectError::Degenerate { op: "join" });
    }
    for p in points {
        if p.role() != Role::Point {
            return Err(ObjectError::RoleMismatch { expected: "Point", found: p.role() });
        }
    }
    let mut acc = points[0].mv().clone();
    for p in &points[1..] {
        acc = crate::dual::regressive(&acc, p.mv());
        if acc.is_zero() {
            return Err(ObjectError::Degenerate { op: "join" });
        }
    }
    GeometricObject::new(acc, DEFAULT_TOL)
}

/// Intersect hyperplanes into the flat they carve out, by iterated wedge.
pub fn flat_from_meet(hyperplanes: &[GeometricObject]) -> Result<GeometricObject, ObjectError> {
    if hyperplanes.len() < 2 {
        return Err(ObjectError::Degenerate { op: "meet" });
    }
    for h in hyperplanes {
        if h.role() != Role::Hyperplane {
            return Err(ObjectError::RoleMismatch { expected: "Hyperplane", found: h.role() });
        }
    }
    let mut acc = hyperplanes[0].mv().clone();
    for h in &hyperplanes[1..] {
        acc = acc.wedge(h.mv());
        if acc.is_zero() {
            return Err(ObjectError::Degenerate { op: "meet" });
        }
    }
    GeometricObject::new(acc, DEFAULT_TOL)
}

/// Position and weight of a finite point: undual back to the 1-vector and
/// read position = a_i / a_0, weight = a_0.
pub fn point_coords(p: &GeometricObject) -> Result<(Vec<f64>, f64), ObjectError> {
    if p.role() != Role::Point {
        return Err(ObjectError::RoleMismatch { expected: "Point", found: p.role() });
    }
    let v = hodge_undual(p.mv());
    let weight = v.coeff(BladeIndex(1));
    if weight == 0.0 {
        return Err(ObjectError::IdealObject);
    }
    let n = p.sig().dim();
    let coords = (1..=n).map(|i| v.coeff(BladeIndex(1 << i)) / weight).collect();
    Ok((coords, weight))
}

/// Direction vector of an ideal point.
pub fn ideal_direction(p: &GeometricObject) -> Result<Vec<f64>, ObjectError> {
    if p.role() != Role::Point {
        return Err(ObjectError::RoleMismatch { expected: "Point", found: p.role() });
    }
    let v = hodge_undual(p.mv());
    let n = p.sig().dim();
    Ok((1..=n).map(|i| v.coeff(BladeIndex(1 << i))).collect())
}

/// Least-squares proportionality factor and residual for B ≈ λA.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Proportionality {
    pub factor: f64,
    /// ‖B − λA‖∞ / ‖B‖∞ (zero when B is zero).
    pub residual: f64,
}

impl Proportionality {
    pub fn within(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

/// Fit λ minimizing ‖λA − B‖₂ over the shared coefficient space.
/// Errors when A is zero; a zero B is proportional with λ = 0.
pub fn proportionality(a: &Multivector, b: &Multivector) -> Result<Proportionality, ObjectError> {
    if a.is_zero() {
        return Err(ObjectError::ZeroInput("reference multivector"));
    }
    let mut dot = 0.0;
    let mut aa = 0.0;
    for (blade, ca) in a.terms() {
        dot += ca * b.coeff(blade);
        aa += ca * ca;
    }
    let factor = dot / aa;
    let bnorm = b.norm_inf();
    let residual = if bnorm == 0.0 {
        0.0
    } else {
        (b - &a.scale(factor)).norm_inf() / bnorm
    };
    Ok(Proportionality { factor, residual })
}

/// Convenience wrapper: `Some(λ)` iff B ≈ λA within `tol`.
pub fn proportional(a: &Multivector, b: &Multivector, tol: f64) -> Option<f64> {
    proportionality(a, b).ok().filter(|p| p.within(tol)).map(|p| p.factor)
}
