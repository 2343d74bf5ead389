//! Seeded random pencil configurations with their classically computed
//! cross-ratios, for the verification suites.
//!
//! Every generator draws well-separated parameters (signed offsets or
//! angles), builds four objects in the requested configuration, and returns
//! the expected invariant straight from the drawn parameters via the
//! classical formulas — never through the algebra being verified.

use rand::Rng;

use crate::crossratio::Configuration;
use crate::ga::{BladeIndex, Multivector, Signature};
use crate::objects::{flat_from_meet, hyperplane, ideal_point, point, GeometricObject};
use crate::oracle::{classical_cr_affine, sine_cr, PencilAngles};
use crate::transforms::{random_unit, random_unit_orthogonal};
use crate::xreal::ExtendedReal;

/// Four objects in a known configuration plus the classically expected
/// cross-ratio.
#[derive(Clone, Debug)]
pub struct PencilSample {
    pub objects: [GeometricObject; 4],
    pub expected: ExtendedReal,
    pub configuration: Configuration,
}

/// Smallest Euclidean dimension in which a configuration exists.
pub fn min_dim(cfg: Configuration) -> usize {
    use Configuration::*;
    match cfg {
        FinitePointsCollinear | IdealPointsOnIdealLine | HyperplanesMeetOffOrigin
        | HyperplanesMeetThroughOrigin => 2,
        _ => 3,
    }
}

/// Signed parameters in [−3, 3], pairwise at least `min_sep` apart.
fn separated_params(rng: &mut impl Rng, min_sep: f64) -> [f64; 4] {
    loop {
        let t: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        let ok = (0..4).all(|i| (0..i).all(|j| (t[i] - t[j]).abs() >= min_sep));
        if ok {
            return t;
        }
    }
}

/// Angles in [0, π), pairwise at least `min_sep` apart modulo π.
fn separated_angles(rng: &mut impl Rng, min_sep: f64) -> [f64; 4] {
    loop {
        let a: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..std::f64::consts::PI));
        let ok = (0..4).all(|i| {
            (0..i).all(|j| {
                let d = (a[i] - a[j]).rem_euclid(std::f64::consts::PI);
                d.min(std::f64::consts::PI - d) >= min_sep
            })
        });
        if ok {
            return a;
        }
    }
}

fn random_weight(rng: &mut impl Rng) -> f64 {
    rng.gen_range(0.2..5.0)
}

fn combine(u: &[f64], v: &[f64], cu: f64, cv: f64) -> Vec<f64> {
    u.iter().zip(v).map(|(a, b)| cu * a + cv * b).collect()
}

fn euclid_vector_mv(sig: Signature, coords: &[f64]) -> Multivector {
    Multivector::from_terms(
        sig,
        coords.iter().enumerate().map(|(i, &c)| (BladeIndex(1 << (i + 1)), c)),
    )
}

/// Draw a random configuration of the requested kind. Flat configurations
/// pick a uniform intermediate grade; [`min_dim`] gives the dimension floor.
pub fn sample(cfg: Configuration, sig: Signature, rng: &mut impl Rng) -> PencilSample {
    assert!(
        sig.dim() >= min_dim(cfg),
        "{cfg} needs dimension >= {}, got {}",
        min_dim(cfg),
        sig.dim()
    );
    let n = sig.dim();
    const SEP: f64 = 0.15;
    match cfg {
        Configuration::FinitePointsCollinear => {
            let x0: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let d = random_unit(rng, n);
            let t = separated_params(rng, SEP);
            let objects = std::array::from_fn(|i| {
                let coords: Vec<f64> = x0.iter().zip(&d).map(|(x, di)| x + t[i] * di).collect();
                point(sig, &coords, random_weight(rng)).expect("finite point")
            });
            PencilSample { objects, expected: classical_cr_affine(&t).expect("separated"), configuration: cfg }
        }
        Configuration::IdealPointsOnIdealLine => {
            let u = random_unit(rng, n);
            let v = random_unit_orthogonal(rng, std::slice::from_ref(&u), n);
            let a = separated_angles(rng, SEP);
            let objects = std::array::from_fn(|i| {
                let dir = combine(&u, &v, a[i].cos(), a[i].sin());
                let s = random_weight(rng);
                let scaled: Vec<f64> = dir.iter().map(|x| s * x).collect();
                ideal_point(sig, &scaled).expect("nonzero direction")
            });
            PencilSample { objects, expected: sine_cr(&PencilAngles(a)).expect("separated"), configuration: cfg }
        }
        Configuration::HyperplanesMeetThroughOrigin => {
            let u = random_unit(rng, n);
            let v = random_unit_orthogonal(rng, std::slice::from_ref(&u), n);
            let a = separated_angles(rng, SEP);
            let objects = std::array::from_fn(|i| {
                let normal = combine(&u, &v, a[i].cos(), a[i].sin());
                let s = random_weight(rng);
                let scaled: Vec<f64> = normal.iter().map(|x| s * x).collect();
                hyperplane(sig, &scaled, 0.0).expect("nonzero normal")
            });
            PencilSample { objects, expected: sine_cr(&PencilAngles(a)).expect("separated"), configuration: cfg }
        }
        Configuration::HyperplanesMeetOffOrigin => {
            let u = random_unit(rng, n);
            let v = random_unit_orthogonal(rng, std::slice::from_ref(&u), n);
            let (a, c) = loop {
                let a = separated_angles(rng, SEP);
                // common point of the pencil, kept inside the normal plane
                // and away from the origin and from every hyperplane
                let r = rng.gen_range(0.5..2.5);
                let phi = rng.gen_range(0.0..std::f64::consts::TAU);
                let c = combine(&u, &v, r * phi.cos(), r * phi.sin());
                if a.iter().all(|ai| (ai.cos() * (r * phi.cos()) + ai.sin() * (r * phi.sin())).abs() > 0.05) {
                    break (a, c);
                }
            };
            let objects = std::array::from_fn(|i| {
                let normal = combine(&u, &v, a[i].cos(), a[i].sin());
                let offset = -normal.iter().zip(&c).map(|(x, y)| x * y).sum::<f64>();
                let s = random_weight(rng);
                let scaled: Vec<f64> = normal.iter().map(|x| s * x).collect();
                hyperplane(sig, &scaled, s * offset).expect("nonzero normal")
            });
            PencilSample { objects, expected: sine_cr(&PencilAngles(a)).expect("separated"), configuration: cfg }
        }
        Configuration::FlatsThroughOrigin => {
            let (core, u, v) = flat_frame(rng, sig);
            let a = separated_angles(rng, SEP);
            let objects = std::array::from_fn(|i| {
                let planes: Vec<GeometricObject> = core
                    .iter()
                    .map(|w| hyperplane(sig, w, 0.0).expect("unit normal"))
                    .chain([hyperplane(sig, &combine(&u, &v, a[i].cos(), a[i].sin()), 0.0)
                        .expect("unit normal")])
                    .collect();
                scale_object(flat_from_meet(&planes).expect("independent planes"), random_weight(rng))
            });
            PencilSample { objects, expected: sine_cr(&PencilAngles(a)).expect("separated"), configuration: cfg }
        }
        Configuration::FlatsMeetOffOrigin => {
            let (core, u, v) = flat_frame(rng, sig);
            let (a, cu, cv) = loop {
                let a = separated_angles(rng, SEP);
                let r = rng.gen_range(0.5..2.5);
                let phi = rng.gen_range(0.0..std::f64::consts::TAU);
                let (cu, cv) = (r * phi.cos(), r * phi.sin());
                // keep every member clear of the origin
                if a.iter().all(|ai| (ai.cos() * cu + ai.sin() * cv).abs() > 0.05) {
                    break (a, cu, cv);
                }
            };
            let objects = std::array::from_fn(|i| {
                let normal = combine(&u, &v, a[i].cos(), a[i].sin());
                let offset = -(a[i].cos() * cu + a[i].sin() * cv);
                let planes: Vec<GeometricObject> = core
                    .iter()
                    .map(|w| hyperplane(sig, w, 0.0).expect("unit normal"))
                    .chain([hyperplane(sig, &normal, offset).expect("unit normal")])
                    .collect();
                scale_object(flat_from_meet(&planes).expect("independent planes"), random_weight(rng))
            });
            PencilSample { objects, expected: sine_cr(&PencilAngles(a)).expect("separated"), configuration: cfg }
        }
        Configuration::FiniteFlatsParallel => {
            // the carrier (the meet of the core hyperplanes) is kept off the
            // origin; an origin-passing carrier is the self-dual special
            // case whose Hodge dual is parallel again instead of secant
            let (core, u, _v) = flat_frame(rng, sig);
            let core_offsets: Vec<f64> = core.iter().map(|_| rng.gen_range(0.5..2.5)).collect();
            let b = separated_params(rng, SEP);
            let objects = std::array::from_fn(|i| {
                let planes: Vec<GeometricObject> = core
                    .iter()
                    .zip(&core_offsets)
                    .map(|(w, &off)| hyperplane(sig, w, off).expect("unit normal"))
                    .chain([hyperplane(sig, &u, b[i]).expect("unit normal")])
                    .collect();
                scale_object(flat_from_meet(&planes).expect("independent planes"), random_weight(rng))
            });
            PencilSample { objects, expected: classical_cr_affine(&b).expect("separated"), configuration: cfg }
        }
        Configuration::IdealFlatsSecant => {
            let grade = random_flat_grade(rng, sig);
            // e_0 ∧ w_1 ∧ … ∧ w_(k−2) ∧ n(α): ideal grade-k blades rotating
            // in the (u, v) plane
            let mut frame: Vec<Vec<f64>> = Vec::new();
            for _ in 0..grade - 2 {
                frame.push(random_unit_orthogonal(rng, &frame, n));
            }
            let u = random_unit_orthogonal(rng, &frame, n);
            let mut uv = frame.clone();
            uv.push(u.clone());
            let v = random_unit_orthogonal(rng, &uv, n);
            let a = separated_angles(rng, SEP);
            let e0 = Multivector::basis(sig, BladeIndex(1));
            let objects = std::array::from_fn(|i| {
                let mut acc = e0.clone();
                for w in &frame {
                    acc = acc.wedge(&euclid_vector_mv(sig, w));
                }
                acc = acc.wedge(&euclid_vector_mv(sig, &combine(&u, &v, a[i].cos(), a[i].sin())));
                GeometricObject::new(acc.scale(random_weight(rng)), crate::objects::DEFAULT_TOL)
                    .expect("ideal flat")
            });
            PencilSample { objects, expected: sine_cr(&PencilAngles(a)).expect("separated"), configuration: cfg }
        }
    }
}

fn scale_object(obj: GeometricObject, s: f64) -> GeometricObject {
    obj.rescale(s)
}

fn random_flat_grade(rng: &mut impl Rng, sig: Signature) -> usize {
    rng.gen_range(2..sig.dim())
}

/// Orthonormal core of k−1 vectors plus the rotation pair (u, v): the flats
/// C ∧ n(α) with n(α) = cos α · u + sin α · v share the core C and sweep the
/// (u, v) plane.
fn flat_frame(rng: &mut impl Rng, sig: Signature) -> (Vec<Vec<f64>>, Vec<f64>, Vec<f64>) {
    let n = sig.dim();
    let grade = random_flat_grade(rng, sig);
    let mut core: Vec<Vec<f64>> = Vec::new();
    for _ in 0..grade - 1 {
        core.push(random_unit_orthogonal(rng, &core, n));
    }
    let u = random_unit_orthogonal(rng, &core, n);
    let mut all = core.clone();
    all.push(u.clone());
    let v = random_unit_orthogonal(rng, &all, n);
    (core, u, v)
}
