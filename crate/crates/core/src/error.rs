//! Error type shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value has a non-finite component: {0}")]
    NonFiniteValue(Complex64),

    #[error("constant {0} is not unimodular")]
    NonUnimodularConstant(Complex64),

    #[error("zero {0} is not strictly inside the unit disk")]
    ZeroOutsideDisk(Complex64),

    #[error("a Blaschke product needs at least one zero")]
    EmptyZeroSet,

    #[error("evaluation point {z} is within {dist:e} of a pole")]
    PoleProximity { z: Complex64, dist: f64 },

    #[error("polynomial root finder failed to converge")]
    RootFindingDivergence,

    #[error("fiber root {root} lies {dist:e} away from the unit circle")]
    OffCircleRoot { root: Complex64, dist: f64 },

    #[error("n-th roots of zero are undefined")]
    ZeroInput,

    #[error("string length {string_length} does not exceed the focal distance {focal_distance}")]
    DegenerateEllipse {
        string_length: f64,
        focal_distance: f64,
    },

    #[error("chord is not tangent to the ellipse (gap {gap:e})")]
    NotTangent { gap: f64 },

    #[error("chord endpoint {0} is not on the unit circle")]
    ChordOffCircle(Complex64),

    #[error("points coincide; no unique geodesic through them")]
    CoincidentPoints,

    #[error("arc geodesic (center {center}, radius {radius}) is not orthogonal to the unit circle")]
    GeodesicNotOrthogonal { center: Complex64, radius: f64 },

    #[error("geodesics do not intersect inside the unit disk")]
    NoIntersectionInDisk,

    #[error("geodesics are identical")]
    IdenticalGeodesics,

    #[error("point {point} does not lie on the geodesic (residual {residual:e})")]
    PointNotOnGeodesic { point: Complex64, residual: f64 },

    #[error("defining points are collinear; no circle through them")]
    CollinearPoints,

    #[error("fiber points coalesce near a critical value (gap {gap:e})")]
    CoalescedFiber { gap: f64 },

    #[error("{skipped} of {samples} sweep samples were skipped")]
    TooManySkips { skipped: usize, samples: usize },

    #[error("opposite-pair geodesics need an even degree, got {0}")]
    OddDegree(usize),

    #[error("denominator of the boundary-value formula is within {0:e} of zero")]
    NearSingularDenominator(f64),

    #[error("node arguments do not interleave as required")]
    InterleavingViolated,

    #[error("z = 1 is a pole of the half-plane transfer map")]
    PoleAtOne,

    #[error("designated zero {0} is not a zero of the product")]
    DesignatedZeroMissing(Complex64),
}

pub type Result<T> = std::result::Result<T, Error>;
