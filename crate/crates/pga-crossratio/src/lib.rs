//! Plane-based geometric algebra ℝ_{n,0,1} for arbitrary n ≥ 1, with the
//! complete cross-ratio family for points, hyperplanes, and intermediate
//! flats, verified against classical projective-geometry oracles.
//!
//! Start with the runnable examples in `examples/`; each one walks through a
//! capability end to end. The `pga-crossratio` binary exposes the same
//! machinery as `compute`, `classify`, `verify`, and `table` subcommands.

pub mod cli;
pub mod crossratio;
pub mod dual;
pub mod ga;
pub mod objects;
pub mod oracle;
pub mod pencils;
pub mod transforms;
pub mod xreal;

pub use crossratio::{
    affine_ratio, classify, cross_ratio, inner_product_variant, Configuration, CrossRatioResult,
};
pub use ga::{blade_geometric_product, pseudoscalars, BladeIndex, Multivector, Signature};
pub use objects::{
    euclidean_split, flat_from_join, flat_from_meet, hyperplane, ideal_hyperplane, ideal_point,
    point, GeometricObject, Role, DEFAULT_TOL,
};
pub use xreal::ExtendedReal;
