//! Configuration classification and the eight cross-ratio formulas.
//!
//! Four objects of a common grade that share a pencil fall into one of eight
//! configurations, each with its own pairwise measurement operator. After
//! the wedge–commutator and regressive–commutator-dual collapses, every
//! operator is either the commutator × or the commutator dual ×⋆, applied
//! to the operands as given or to their Hodge duals:
//!
//! | configuration                | operand dual | product |
//! |------------------------------|--------------|---------|
//! | FinitePointsCollinear        | no           | ×⋆      |
//! | IdealPointsOnIdealLine       | yes          | ×       |
//! | HyperplanesMeetOffOrigin     | yes          | ×⋆      |
//! | HyperplanesMeetThroughOrigin | no           | ×       |
//! | FlatsMeetOffOrigin           | yes          | ×⋆      |
//! | FlatsThroughOrigin           | no           | ×       |
//! | FiniteFlatsParallel          | no           | ×⋆      |
//! | IdealFlatsSecant             | yes          | ×       |
//!
//! All six pairwise measures of a valid configuration are proportional to
//! one common blade; that proportionality is the pencil test, and its worst
//! residual is reported as a diagnostic. The cross-ratio itself is the
//! ratio of grade-0 parts of measure products, so it is an exact ratio of
//! the scalar factors carried by the common blade.

use std::fmt;
use std::str::FromStr;

use crate::dual::{commutator_dual, hodge_dual, regressive};
use crate::ga::Multivector;
use crate::objects::{
    classify_mv, proportionality, unitize_mv, GeometricObject, ObjectClass, ObjectError, Role,
};
use crate::xreal::ExtendedReal;

macro_rules! fmt_operator {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.dualize_operands {
                write!(f, "{} on dualized operands", self.product)
            } else {
                write!(f, "{} (no operand dual)", self.product)
            }
        }
    };
}

/// One of the eight pencil configurations.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Configuration {
    FinitePointsCollinear,
    IdealPointsOnIdealLine,
    HyperplanesMeetOffOrigin,
    HyperplanesMeetThroughOrigin,
    FlatsMeetOffOrigin,
    FlatsThroughOrigin,
    FiniteFlatsParallel,
    IdealFlatsSecant,
}

/// Which product a measurement operator applies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairProduct {
    Commutator,
    CommutatorDual,
}

impl fmt::Display for PairProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairProduct::Commutator => write!(f, "×"),
            PairProduct::CommutatorDual => write!(f, "×⋆"),
        }
    }
}

/// Unified measurement operator: an optional operand dualization followed by
/// × or ×⋆.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OperatorDescriptor {
    pub dualize_operands: bool,
    pub product: PairProduct,
}

impl fmt::Display for OperatorDescriptor {
    fmt_operator!();
}

/// The per-object-type product before the collapse to commutators: wedge and
/// regressive for grade-1 and grade-n objects, commutators for flats.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassicalProduct {
    Wedge,
    Regressive,
    Commutator,
    CommutatorDual,
}

impl fmt::Display for ClassicalProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalProduct::Wedge => write!(f, "∧"),
            ClassicalProduct::Regressive => write!(f, "∨"),
            ClassicalProduct::Commutator => write!(f, "×"),
            ClassicalProduct::CommutatorDual => write!(f, "×⋆"),
        }
    }
}

/// Per-object-type measurement operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassicalOperator {
    pub dualize_operands: bool,
    pub product: ClassicalProduct,
}

impl fmt::Display for ClassicalOperator {
    fmt_operator!();
}

impl Configuration {
    pub const ALL: [Configuration; 8] = [
        Configuration::FinitePointsCollinear,
        Configuration::IdealPointsOnIdealLine,
        Configuration::HyperplanesMeetOffOrigin,
        Configuration::HyperplanesMeetThroughOrigin,
        Configuration::FlatsMeetOffOrigin,
        Configuration::FlatsThroughOrigin,
        Configuration::FiniteFlatsParallel,
        Configuration::IdealFlatsSecant,
    ];

    /// The unified measurement operator for this configuration.
    pub fn operator(&self) -> OperatorDescriptor {
        use Configuration::*;
        use PairProduct::*;
        let (dualize_operands, product) = match self {
            FinitePointsCollinear => (false, CommutatorDual),
            IdealPointsOnIdealLine => (true, Commutator),
            HyperplanesMeetOffOrigin => (true, CommutatorDual),
            HyperplanesMeetThroughOrigin => (false, Commutator),
            FlatsMeetOffOrigin => (true, CommutatorDual),
            FlatsThroughOrigin => (false, Commutator),
            FiniteFlatsParallel => (false, CommutatorDual),
            IdealFlatsSecant => (true, Commutator),
        };
        OperatorDescriptor { dualize_operands, product }
    }

    /// The per-object-type operator before the commutator collapse. For the
    /// four flat rows the two tables already coincide.
    pub fn classical_operator(&self) -> ClassicalOperator {
        use ClassicalProduct::*;
        use Configuration::*;
        let (dualize_operands, product) = match self {
            FinitePointsCollinear => (false, Regressive),
            IdealPointsOnIdealLine => (true, Wedge),
            HyperplanesMeetOffOrigin => (true, Regressive),
            HyperplanesMeetThroughOrigin => (false, Wedge),
            FlatsMeetOffOrigin => (true, CommutatorDual),
            FlatsThroughOrigin => (false, Commutator),
            FiniteFlatsParallel => (false, CommutatorDual),
            IdealFlatsSecant => (true, Commutator),
        };
        ClassicalOperator { dualize_operands, product }
    }

    /// The configuration the Hodge dual of a pencil lands in. The four pairs
    /// partition the eight rows; applying it twice is the identity.
    pub fn dual_partner(&self) -> Configuration {
        use Configuration::*;
        match self {
            FinitePointsCollinear => HyperplanesMeetOffOrigin,
            HyperplanesMeetOffOrigin => FinitePointsCollinear,
            IdealPointsOnIdealLine => HyperplanesMeetThroughOrigin,
            HyperplanesMeetThroughOrigin => IdealPointsOnIdealLine,
            FlatsMeetOffOrigin => FiniteFlatsParallel,
            FiniteFlatsParallel => FlatsMeetOffOrigin,
            FlatsThroughOrigin => IdealFlatsSecant,
            IdealFlatsSecant => FlatsThroughOrigin,
        }
    }

    /// Object-type column for the operator table.
    pub fn object_label(&self) -> &'static str {
        use Configuration::*;
        match self {
            FinitePointsCollinear => "Finite points",
            IdealPointsOnIdealLine => "Ideal points",
            HyperplanesMeetOffOrigin | HyperplanesMeetThroughOrigin => "Hyperplanes",
            FlatsMeetOffOrigin | FlatsThroughOrigin => "Flats",
            FiniteFlatsParallel => "Finite flats",
            IdealFlatsSecant => "Ideal flats",
        }
    }

    /// Grade column for the operator table.
    pub fn grade_label(&self) -> &'static str {
        use Configuration::*;
        match self {
            FinitePointsCollinear | IdealPointsOnIdealLine => "n",
            HyperplanesMeetOffOrigin | HyperplanesMeetThroughOrigin => "1",
            _ => "k",
        }
    }

    /// Support/configuration column for the operator table.
    pub fn support_label(&self) -> &'static str {
        use Configuration::*;
        match self {
            FinitePointsCollinear => "finite support line",
            IdealPointsOnIdealLine => "ideal support line",
            HyperplanesMeetOffOrigin => "intersection not through origin",
            HyperplanesMeetThroughOrigin => "intersection through origin",
            FlatsMeetOffOrigin => "finite intersection not through origin",
            FlatsThroughOrigin => "intersection through origin",
            FiniteFlatsParallel => "ideal intersection (parallel)",
            IdealFlatsSecant => "ideal intersection (secant)",
        }
    }

    pub fn name(&self) -> &'static str {
        use Configuration::*;
        match self {
            FinitePointsCollinear => "FinitePointsCollinear",
            IdealPointsOnIdealLine => "IdealPointsOnIdealLine",
            HyperplanesMeetOffOrigin => "HyperplanesMeetOffOrigin",
            HyperplanesMeetThroughOrigin => "HyperplanesMeetThroughOrigin",
            FlatsMeetOffOrigin => "FlatsMeetOffOrigin",
            FlatsThroughOrigin => "FlatsThroughOrigin",
            FiniteFlatsParallel => "FiniteFlatsParallel",
            IdealFlatsSecant => "IdealFlatsSecant",
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Configuration {
    type Err = String;

    fn from_str(s: &str) -> Result<Configuration, String> {
        Configuration::ALL
            .iter()
            .find(|c| c.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown configuration {s:?}"))
    }
}

#[derive(Clone, Debug, thiserror::Error, PartialEq)]
pub enum CrossRatioError {
    #[error("objects do not share a single grade")]
    MixedGrades,
    #[error("objects {i} and {j} are proportional (not distinct)")]
    NotDistinct { i: usize, j: usize },
    #[error("pairwise measures share no common blade (worst residual {residual:.3e})")]
    NoCommonPencil { residual: f64 },
    #[error("objects {i} and {j} are distinct but their measure vanishes; no supported pencil")]
    ZeroMeasure { i: usize, j: usize },
    #[error("origin-incidence pattern admits no configuration (two or three members through the origin)")]
    AmbiguousConfiguration,
    #[error("indeterminate 0/0 cross-ratio; coincident objects slipped past distinctness")]
    Indeterminate,
    #[error("expected {expected}")]
    WrongConfiguration { expected: &'static str },
    #[error("{0}")]
    Object(#[from] ObjectError),
}

/// Apply a measurement operator to two multivectors.
fn apply_operator(
    a: &Multivector,
    b: &Multivector,
    dualize_operands: bool,
    product: PairProduct,
) -> Multivector {
    let (x, y) = if dualize_operands { (hodge_dual(a), hodge_dual(b)) } else { (a.clone(), b.clone()) };
    match product {
        PairProduct::Commutator => x.commutator(&y),
        PairProduct::CommutatorDual => commutator_dual(&x, &y),
    }
}

/// Pairwise measure of two objects under a configuration's unified operator.
/// For a valid pencil the result is proportional to the configuration's
/// common blade; a zero measure for distinct objects signals
/// misclassification.
pub fn pair_measure(a: &GeometricObject, b: &GeometricObject, cfg: Configuration) -> Multivector {
    let op = cfg.operator();
    apply_operator(a.mv(), b.mv(), op.dualize_operands, op.product)
}

/// Pairwise measure under the per-object-type operator (wedge/regressive
/// forms). Coefficient-identical to [`pair_measure`] on every configuration.
pub fn classical_pair_measure(
    a: &GeometricObject,
    b: &GeometricObject,
    cfg: Configuration,
) -> Multivector {
    let op = cfg.classical_operator();
    let (x, y) = if op.dualize_operands {
        (hodge_dual(a.mv()), hodge_dual(b.mv()))
    } else {
        (a.mv().clone(), b.mv().clone())
    };
    match op.product {
        ClassicalProduct::Wedge => x.wedge(&y),
        ClassicalProduct::Regressive => regressive(&x, &y),
        ClassicalProduct::Commutator => x.commutator(&y),
        ClassicalProduct::CommutatorDual => commutator_dual(&x, &y),
    }
}

/// Configuration plus the pencil diagnostics the classifier gathered.
#[derive(Clone, Debug)]
pub struct Classification {
    pub configuration: Configuration,
    /// Unitized blade every pairwise measure is proportional to.
    pub common_blade: Multivector,
    /// Worst proportionality residual among the six pairwise measures.
    pub max_residual: f64,
}

/// Cross-ratio value with diagnostics.
#[derive(Clone, Debug)]
pub struct CrossRatioResult {
    pub value: ExtendedReal,
    pub configuration: Configuration,
    pub common_blade: Multivector,
    pub max_residual: f64,
    /// Input order actually evaluated: entry k is the index of the original
    /// object placed in slot k. Identity except on the affine path.
    pub permutation: [usize; 4],
}

struct Analysis {
    configuration: Configuration,
    /// Measures for pairs (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
    measures: Vec<Multivector>,
    common_blade: Multivector,
    max_residual: f64,
}

fn pair_slot(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 4);
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Decide the configuration from grades, finite/ideal/origin statuses, and
/// (for finite flats) the status of the plain commutator, which encodes the
/// pencil generator.
fn dispatch(
    objs: &[GeometricObject; 4],
    classes: &[ObjectClass; 4],
    coincident: &[bool; 6],
    tol: f64,
) -> Result<Configuration, CrossRatioError> {
    let n = objs[0].sig().dim();
    let grade = objs[0].grade();
    let finite = classes.iter().filter(|c| c.finite).count();
    let origin = classes.iter().filter(|c| c.through_origin).count();

    if grade == n {
        return Ok(if finite == 0 {
            Configuration::IdealPointsOnIdealLine
        } else {
            Configuration::FinitePointsCollinear
        });
    }
    if grade == 1 {
        return match origin {
            4 => Ok(Configuration::HyperplanesMeetThroughOrigin),
            0 | 1 => Ok(Configuration::HyperplanesMeetOffOrigin),
            _ => Err(CrossRatioError::AmbiguousConfiguration),
        };
    }
    // intermediate flats
    if finite == 0 {
        return Ok(Configuration::IdealFlatsSecant);
    }
    if finite < 4 {
        // a mix of finite and ideal flats matches no configuration
        return Err(CrossRatioError::NoCommonPencil { residual: f64::INFINITY });
    }
    // probe the pencil generator: the plain commutator of any distinct pair
    let probe = PAIRS
        .iter()
        .enumerate()
        .filter(|&(slot, _)| !coincident[slot])
        .map(|(_, &(i, j))| objs[i].mv().commutator(objs[j].mv()))
        .find(|m| !m.is_zero());
    let Some(probe) = probe else {
        return Err(CrossRatioError::ZeroMeasure { i: 0, j: 1 });
    };
    let probe_class = classify_mv(&probe, tol).expect("probe is nonzero");
    if !probe_class.finite {
        return Ok(Configuration::FiniteFlatsParallel);
    }
    match origin {
        4 => Ok(Configuration::FlatsThroughOrigin),
        0 | 1 => Ok(Configuration::FlatsMeetOffOrigin),
        _ => Err(CrossRatioError::AmbiguousConfiguration),
    }
}

/// Full pencil analysis. With `allow_coincident`, proportional object pairs
/// are tolerated (their measures vanish by antisymmetry) so the value layer
/// can report 0, ∞, or an indeterminate form.
fn analyze(
    objs: &[GeometricObject; 4],
    tol: f64,
    allow_coincident: bool,
) -> Result<Analysis, CrossRatioError> {
    let sig = objs[0].sig();
    for o in objs {
        assert!(o.sig() == sig, "objects must share one signature");
    }
    let grade = objs[0].grade();
    if objs.iter().any(|o| o.grade() != grade) {
        return Err(CrossRatioError::MixedGrades);
    }

    let mut coincident = [false; 6];
    for &(i, j) in &PAIRS {
        let prop = proportionality(objs[i].mv(), objs[j].mv())?;
        if prop.within(tol) {
            if !allow_coincident {
                return Err(CrossRatioError::NotDistinct { i, j });
            }
            coincident[pair_slot(i, j)] = true;
        }
    }

    let classes: [ObjectClass; 4] = std::array::from_fn(|i| objs[i].classify(tol));
    let configuration = dispatch(objs, &classes, &coincident, tol)?;

    let measures: Vec<Multivector> =
        PAIRS.iter().map(|&(i, j)| pair_measure(&objs[i], &objs[j], configuration)).collect();

    // the common blade: unitize the strongest measure, then demand every
    // other measure be proportional to it
    let mut reference: Option<usize> = None;
    for (slot, m) in measures.iter().enumerate() {
        if m.is_zero() {
            if !coincident[slot] {
                let (i, j) = PAIRS[slot];
                return Err(CrossRatioError::ZeroMeasure { i, j });
            }
        } else if reference.map(|r| measures[r].norm_inf() < m.norm_inf()).unwrap_or(true) {
            reference = Some(slot);
        }
    }
    let Some(reference) = reference else {
        // every measure vanished: fully coincident input
        return Err(CrossRatioError::Indeterminate);
    };
    let common_blade = unitize_mv(&measures[reference], tol);

    let mut max_residual: f64 = 0.0;
    for m in &measures {
        let prop = proportionality(&common_blade, m)?;
        max_residual = max_residual.max(prop.residual);
    }
    if max_residual > tol {
        return Err(CrossRatioError::NoCommonPencil { residual: max_residual });
    }

    Ok(Analysis { configuration, measures, common_blade, max_residual })
}

/// Classify four objects into their configuration. Objects must be pairwise
/// non-proportional; the six pairwise measures must share a common blade
/// within `tol`.
pub fn classify(objs: &[GeometricObject; 4], tol: f64) -> Result<Classification, CrossRatioError> {
    let analysis = analyze(objs, tol, false)?;
    Ok(Classification {
        configuration: analysis.configuration,
        common_blade: analysis.common_blade,
        max_residual: analysis.max_residual,
    })
}

fn value_from(analysis: &Analysis, scalar_of: impl Fn(&Multivector, &Multivector) -> f64) -> Result<ExtendedReal, CrossRatioError> {
    let m = |i: usize, j: usize| &analysis.measures[pair_slot(i, j)];
    let num = scalar_of(m(0, 2), m(1, 3));
    let den = scalar_of(m(0, 3), m(1, 2));
    ExtendedReal::ratio(num, den).ok_or(CrossRatioError::Indeterminate)
}

/// The cross-ratio {A_1, A_2; A_3, A_4} of four objects in a pencil:
/// with M_ij the pairwise measures, the ratio of grade-0 parts
/// ⟨M_13 M_24⟩₀ / ⟨M_14 M_23⟩₀.
///
/// A zero denominator with nonzero numerator yields a signed infinity.
/// Coincident objects are tolerated; if they drive the ratio to 0/0 the
/// result is [`CrossRatioError::Indeterminate`].
pub fn cross_ratio(objs: &[GeometricObject; 4], tol: f64) -> Result<CrossRatioResult, CrossRatioError> {
    let analysis = analyze(objs, tol, true)?;
    let value = value_from(&analysis, |a, b| a.gp(b).scalar_part())?;
    Ok(CrossRatioResult {
        value,
        configuration: analysis.configuration,
        common_blade: analysis.common_blade,
        max_residual: analysis.max_residual,
        permutation: [0, 1, 2, 3],
    })
}

/// The degenerate cross-ratio {P_1, P_2; P_3, V_4} of three finite points
/// and one ideal point whose direction lies along their support line.
///
/// The ideal point is moved to slot 4 before evaluating (the applied
/// permutation is reported in the result), where the two measures involving
/// it reduce to weight-times-direction multiples of the support line, so the
/// value is the affine ratio (t_1 − t_3)/(t_2 − t_3) of the finite triple.
/// Unlike the full cross-ratio this quantity is only an affine invariant.
pub fn affine_ratio(objs: &[GeometricObject; 4], tol: f64) -> Result<CrossRatioResult, CrossRatioError> {
    for o in objs {
        if o.role() != Role::Point {
            return Err(CrossRatioError::Object(ObjectError::RoleMismatch {
                expected: "Point",
                found: o.role(),
            }));
        }
    }
    let ideal: Vec<usize> = (0..4).filter(|&i| objs[i].is_ideal(tol)).collect();
    match ideal.len() {
        0 => return Err(CrossRatioError::WrongConfiguration { expected: "exactly one ideal point" }),
        1 => {}
        _ => return Err(CrossRatioError::NoCommonPencil { residual: f64::INFINITY }),
    }
    let mut permutation = [0usize; 4];
    let mut slot = 0;
    for i in 0..4 {
        if i != ideal[0] {
            permutation[slot] = i;
            slot += 1;
        }
    }
    permutation[3] = ideal[0];
    let reordered: [GeometricObject; 4] = std::array::from_fn(|k| objs[permutation[k]].clone());
    let mut result = cross_ratio(&reordered, tol)?;
    result.permutation = permutation;
    Ok(result)
}

/// The finite-point cross-ratio with the geometric products of measures
/// replaced by inner products. All measures are proportional to one blade,
/// so their geometric product already reduces to a scalar and both routes
/// agree to machine precision.
pub fn inner_product_variant(objs: &[GeometricObject; 4], tol: f64) -> Result<ExtendedReal, CrossRatioError> {
    let analysis = analyze(objs, tol, true)?;
    if analysis.configuration != Configuration::FinitePointsCollinear {
        return Err(CrossRatioError::WrongConfiguration { expected: "FinitePointsCollinear" });
    }
    value_from(&analysis, |a, b| a.inner(b).scalar_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::Signature;
    use crate::objects::{
        flat_from_join, flat_from_meet, hyperplane, ideal_point, point, DEFAULT_TOL,
    };
    use crate::oracle::{classical_cr_affine, line_parameters, pencil_angles, sine_cr};

    fn collinear_points(sig: Signature, t: &[f64; 4]) -> [GeometricObject; 4] {
        let x0 = [1.0, -0.5, 2.0];
        let d = [2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0];
        std::array::from_fn(|i| {
            let coords: Vec<f64> =
                (0..sig.dim()).map(|k| x0[k] + t[i] * d[k]).collect();
            point(sig, &coords, 1.0).unwrap()
        })
    }

    #[test]
    fn collinear_points_reduce_to_classical() {
        let sig = Signature::new(3);
        let objs = collinear_points(sig, &[0.0, 1.0, 2.0, 3.0]);
        let r = cross_ratio(&objs, DEFAULT_TOL).unwrap();
        assert_eq!(r.configuration, Configuration::FinitePointsCollinear);
        assert!(r.value.approx_eq(&ExtendedReal::Finite(4.0 / 3.0), 1e-12));
        assert!(r.max_residual <= DEFAULT_TOL);
        assert_eq!(r.permutation, [0, 1, 2, 3]);

        // against the parameter extraction route
        let t = line_parameters(&objs, DEFAULT_TOL).unwrap();
        assert!(r.value.approx_eq(&classical_cr_affine(&t).unwrap(), 1e-12));
    }

    #[test]
    fn concurrent_origin_lines_give_harmonic_ratio() {
        use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
        let sig = Signature::new(2);
        let line = |alpha: f64| hyperplane(sig, &[alpha.cos(), alpha.sin()], 0.0).unwrap();
        let objs = [line(0.0), line(FRAC_PI_2), line(FRAC_PI_4), line(3.0 * FRAC_PI_4)];
        let r = cross_ratio(&objs, DEFAULT_TOL).unwrap();
        assert_eq!(r.configuration, Configuration::HyperplanesMeetThroughOrigin);
        assert!(r.value.approx_eq(&ExtendedReal::Finite(-1.0), 1e-12));

        let angles = pencil_angles(&objs, DEFAULT_TOL).unwrap();
        assert!(r.value.approx_eq(&sine_cr(&angles).unwrap(), 1e-12));
    }

    #[test]
    fn four_parallel_lines_in_3d() {
        let sig = Signature::new(3);
        let b = [0.0, 1.0, 2.0, 3.5];
        let objs: [GeometricObject; 4] = std::array::from_fn(|i| {
            flat_from_meet(&[
                hyperplane(sig, &[0.0, 0.0, 1.0], 0.0).unwrap(),
                hyperplane(sig, &[1.0, 0.0, 0.0], b[i]).unwrap(),
            ])
            .unwrap()
        });
        let r = cross_ratio(&objs, DEFAULT_TOL).unwrap();
        assert_eq!(r.configuration, Configuration::FiniteFlatsParallel);
        assert!(r.value.approx_eq(&classical_cr_affine(&b).unwrap(), 1e-12));
    }

    #[test]
    fn planes_sharing_an_origin_line() {
        let sig = Signature::new(3);
        let a: [f64; 4] = [0.1, 0.9, 1.7, 2.4];
        let objs: [GeometricObject; 4] = std::array::from_fn(|i| {
            hyperplane(sig, &[a[i].cos(), a[i].sin(), 0.0], 0.0).unwrap()
        });
        let r = cross_ratio(&objs, DEFAULT_TOL).unwrap();
        assert_eq!(r.configuration, Configuration::HyperplanesMeetThroughOrigin);
        assert!(r
            .value
            .approx_eq(&sine_cr(&crate::oracle::PencilAngles(a)).unwrap(), 1e-12));
    }

    #[test]
    fn repeated_objects_degenerate_gracefully() {
        let sig = Signature::new(3);
        let p = collinear_points(sig, &[0.0, 1.0, 2.0, 3.0]);
        // {A, B; A, B} → 0
        let r = cross_ratio(&[p[0].clone(), p[1].clone(), p[0].clone(), p[1].clone()], DEFAULT_TOL)
            .unwrap();
        assert_eq!(r.value, ExtendedReal::Finite(0.0));
        // {A, B; B, A} → infinity
        let r = cross_ratio(&[p[0].clone(), p[1].clone(), p[1].clone(), p[0].clone()], DEFAULT_TOL)
            .unwrap();
        assert!(!r.value.is_finite());
        // {A, B; A, C} → 0
        let r = cross_ratio(&[p[0].clone(), p[1].clone(), p[0].clone(), p[2].clone()], DEFAULT_TOL)
            .unwrap();
        assert_eq!(r.value, ExtendedReal::Finite(0.0));
        // all four coincident: indeterminate
        let r = cross_ratio(&[p[0].clone(), p[0].clone(), p[0].clone(), p[0].clone()], DEFAULT_TOL);
        assert_eq!(r.unwrap_err(), CrossRatioError::Indeterminate);
    }

    #[test]
    fn classify_is_strict_about_distinctness() {
        let sig = Signature::new(3);
        let p = collinear_points(sig, &[0.0, 1.0, 2.0, 3.0]);
        let dup = [p[0].clone(), p[1].clone(), p[0].rescale(2.0), p[3].clone()];
        assert_eq!(classify(&dup, DEFAULT_TOL).unwrap_err(), CrossRatioError::NotDistinct { i: 0, j: 2 });
    }

    #[test]
    fn classify_rejects_non_pencils() {
        let sig = Signature::new(3);
        // four planes with no common line
        let objs = [
            hyperplane(sig, &[1.0, 0.0, 0.0], 1.0).unwrap(),
            hyperplane(sig, &[0.0, 1.0, 0.0], 2.0).unwrap(),
            hyperplane(sig, &[0.0, 0.0, 1.0], -1.0).unwrap(),
            hyperplane(sig, &[1.0, 1.0, 1.0], 1.0).unwrap(),
        ];
        match classify(&objs, DEFAULT_TOL) {
            Err(CrossRatioError::NoCommonPencil { .. }) => {}
            other => panic!("expected NoCommonPencil, got {other:?}"),
        }

        // two or three origin-passing members cannot share an off-origin
        // pencil; the classifier rejects the pattern outright
        let impossible = [
            hyperplane(sig, &[1.0, 0.0, 0.0], 0.0).unwrap(),
            hyperplane(sig, &[0.0, 1.0, 0.0], 0.0).unwrap(),
            hyperplane(sig, &[0.0, 0.0, 1.0], 0.0).unwrap(),
            hyperplane(sig, &[1.0, 1.0, 1.0], 1.0).unwrap(),
        ];
        assert_eq!(
            classify(&impossible, DEFAULT_TOL).unwrap_err(),
            CrossRatioError::AmbiguousConfiguration
        );

        // mixed grades
        let mixed = [
            objs[0].clone(),
            objs[1].clone(),
            objs[2].clone(),
            point(sig, &[1.0, 0.0, 0.0], 1.0).unwrap(),
        ];
        assert_eq!(classify(&mixed, DEFAULT_TOL).unwrap_err(), CrossRatioError::MixedGrades);

        // commuting, pencil-free flats in 4-d: zero measure for distinct objects
        let sig4 = Signature::new(4);
        let f = |ns: [[f64; 4]; 2]| {
            flat_from_meet(&[
                hyperplane(sig4, &ns[0], 0.0).unwrap(),
                hyperplane(sig4, &ns[1], 0.0).unwrap(),
            ])
            .unwrap()
        };
        let e12 = f([[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0]]);
        let e34 = f([[0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]]);
        let e13 = f([[1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0]]);
        let e24 = f([[0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0]]);
        match classify(&[e12, e34, e13, e24], DEFAULT_TOL) {
            Err(CrossRatioError::ZeroMeasure { .. }) | Err(CrossRatioError::NoCommonPencil { .. }) => {}
            other => panic!("expected a pencil failure, got {other:?}"),
        }
    }

    #[test]
    fn four_concurrent_coplanar_lines_through_origin() {
        let sig = Signature::new(3);
        let a: [f64; 4] = [0.2, 0.9, 1.6, 2.8];
        let origin = point(sig, &[0.0; 3], 1.0).unwrap();
        let objs: [GeometricObject; 4] = std::array::from_fn(|i| {
            let dir = ideal_point(sig, &[a[i].cos(), a[i].sin(), 0.0]).unwrap();
            flat_from_join(&[origin.clone(), dir]).unwrap()
        });
        let r = cross_ratio(&objs, DEFAULT_TOL).unwrap();
        assert_eq!(r.configuration, Configuration::FlatsThroughOrigin);
        assert!(r
            .value
            .approx_eq(&sine_cr(&crate::oracle::PencilAngles(a)).unwrap(), 1e-9));
    }

    #[test]
    fn affine_path_reorders_and_matches_simple_ratio() {
        let sig = Signature::new(3);
        // harmonic triple: t = (−1, 1, 0) with the ideal point on the line
        let d = [2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0];
        let x0 = [1.0, -0.5, 2.0];
        let at = |t: f64| {
            let coords: Vec<f64> = (0..3).map(|k| x0[k] + t * d[k]).collect();
            point(sig, &coords, 1.0).unwrap()
        };
        let v = ideal_point(sig, &d).unwrap();
        let objs = [at(-1.0), at(1.0), at(0.0), v.clone()];
        let r = affine_ratio(&objs, DEFAULT_TOL).unwrap();
        assert_eq!(r.permutation, [0, 1, 2, 3]);
        assert!(r.value.approx_eq(&ExtendedReal::Finite(-1.0), 1e-12));

        // t = (0, 1, 2) → (0 − 2)/(1 − 2) = 2
        let objs = [at(0.0), at(1.0), at(2.0), v.clone()];
        let r = affine_ratio(&objs, DEFAULT_TOL).unwrap();
        assert!(r.value.approx_eq(&ExtendedReal::Finite(2.0), 1e-12));

        // the ideal point is moved to slot 4 and the permutation reported
        let shuffled = [objs[0].clone(), v.clone(), objs[1].clone(), objs[2].clone()];
        let r = affine_ratio(&shuffled, DEFAULT_TOL).unwrap();
        assert_eq!(r.permutation, [0, 2, 3, 1]);
        assert!(r.value.approx_eq(&ExtendedReal::Finite(2.0), 1e-12));

        // t = (a, b, a) → 0
        let objs = [at(0.5), at(1.0), at(0.5 + 1e-30), v.clone()];
        // exactly coincident instead: numerator vanishes
        let objs = [objs[0].clone(), objs[1].clone(), at(0.5), v.clone()];
        let r = affine_ratio(&objs, DEFAULT_TOL).unwrap();
        assert_eq!(r.value, ExtendedReal::Finite(0.0));

        // two ideal points is not an affine configuration
        let bad = [at(0.0), at(1.0), v.clone(), ideal_point(sig, &[0.0, 0.0, 1.0]).unwrap()];
        match affine_ratio(&bad, DEFAULT_TOL) {
            Err(CrossRatioError::NoCommonPencil { .. }) => {}
            other => panic!("expected NoCommonPencil, got {other:?}"),
        }
        // no ideal point at all
        let none = [at(0.0), at(1.0), at(2.0), at(3.0)];
        assert!(matches!(
            affine_ratio(&none, DEFAULT_TOL),
            Err(CrossRatioError::WrongConfiguration { .. })
        ));
    }

    #[test]
    fn affine_value_ignores_representative_weights() {
        // the four-factor ratio cancels every weight, so the degenerate
        // cross-ratio is still representative-independent; only the
        // classical three-point simple ratio needs normalized points
        let sig = Signature::new(2);
        let at = |t: f64, w: f64| point(sig, &[t, 1.0], w).unwrap();
        let v = ideal_point(sig, &[1.0, 0.0]).unwrap();
        let base = affine_ratio(&[at(0.0, 1.0), at(1.0, 1.0), at(2.0, 1.0), v.clone()], DEFAULT_TOL)
            .unwrap();
        let scaled = affine_ratio(
            &[at(0.0, 3.0), at(1.0, 0.25), at(2.0, 2.0), v.rescale(-1.5)],
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(base.value.approx_eq(&scaled.value, 1e-12));
        assert!(base.value.approx_eq(&ExtendedReal::Finite(2.0), 1e-12));
    }

    #[test]
    fn inner_product_variant_agrees() {
        let sig = Signature::new(3);
        let objs = collinear_points(sig, &[0.0, 1.0, 2.0, 3.0]);
        let gp_value = cross_ratio(&objs, DEFAULT_TOL).unwrap().value;
        let inner_value = inner_product_variant(&objs, DEFAULT_TOL).unwrap();
        assert!(gp_value.approx_eq(&ExtendedReal::Finite(4.0 / 3.0), 1e-12));
        match (gp_value, inner_value) {
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => {
                assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
            }
            other => panic!("expected finite values, got {other:?}"),
        }

        // rejected off the finite-point configuration
        let sig2 = Signature::new(2);
        let lines = [
            hyperplane(sig2, &[1.0, 0.0], 0.0).unwrap(),
            hyperplane(sig2, &[0.0, 1.0], 0.0).unwrap(),
            hyperplane(sig2, &[1.0, 1.0], 0.0).unwrap(),
            hyperplane(sig2, &[1.0, -1.0], 0.0).unwrap(),
        ];
        assert!(matches!(
            inner_product_variant(&lines, DEFAULT_TOL),
            Err(CrossRatioError::WrongConfiguration { .. })
        ));
    }

    #[test]
    fn pair_measure_is_antisymmetric() {
        let sig = Signature::new(3);
        let objs = collinear_points(sig, &[0.0, 1.0, 2.0, 3.0]);
        let cfg = Configuration::FinitePointsCollinear;
        assert!(pair_measure(&objs[0], &objs[0], cfg).is_zero());
        let ab = pair_measure(&objs[0], &objs[1], cfg);
        let ba = pair_measure(&objs[1], &objs[0], cfg);
        assert_eq!(ab, ba.scale(-1.0));
    }

    #[test]
    fn operator_table_rows() {
        use Configuration::*;
        let t2: Vec<(bool, PairProduct)> = Configuration::ALL
            .iter()
            .map(|c| (c.operator().dualize_operands, c.operator().product))
            .collect();
        assert_eq!(
            t2,
            vec![
                (false, PairProduct::CommutatorDual),
                (true, PairProduct::Commutator),
                (true, PairProduct::CommutatorDual),
                (false, PairProduct::Commutator),
                (true, PairProduct::CommutatorDual),
                (false, PairProduct::Commutator),
                (false, PairProduct::CommutatorDual),
                (true, PairProduct::Commutator),
            ]
        );
        // dual partners pair up and involute
        for c in Configuration::ALL {
            assert_eq!(c.dual_partner().dual_partner(), c);
        }
        assert_eq!(FinitePointsCollinear.dual_partner(), HyperplanesMeetOffOrigin);
        assert_eq!(IdealPointsOnIdealLine.dual_partner(), HyperplanesMeetThroughOrigin);
        assert_eq!(FlatsMeetOffOrigin.dual_partner(), FiniteFlatsParallel);
        assert_eq!(FlatsThroughOrigin.dual_partner(), IdealFlatsSecant);

        assert_eq!(FinitePointsCollinear.operator().to_string(), "×⋆ (no operand dual)");
        assert_eq!(IdealFlatsSecant.operator().to_string(), "× on dualized operands");
        assert_eq!("FlatsThroughOrigin".parse::<Configuration>(), Ok(FlatsThroughOrigin));
        assert!("NotAConfig".parse::<Configuration>().is_err());
    }

    #[test]
    fn classical_and_unified_measures_collapse() {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(77);
        for cfg in Configuration::ALL {
            for n in 2..=4 {
                if n < crate::pencils::min_dim(cfg) {
                    continue;
                }
                let sig = Signature::new(n);
                for _ in 0..10 {
                    let s = crate::pencils::sample(cfg, sig, &mut rng);
                    for i in 0..4 {
                        for j in (i + 1)..4 {
                            let unified = pair_measure(&s.objects[i], &s.objects[j], cfg);
                            let classical = classical_pair_measure(&s.objects[i], &s.objects[j], cfg);
                            assert!(
                                unified.approx_eq(&classical, 1e-12),
                                "collapse failed for {cfg} at n={n}"
                            );
                        }
                    }
                }
            }
        }
    }
}
