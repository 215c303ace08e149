//! Finite Blaschke products and their Poncelet geometry.
//!
//! The crate evaluates finite Blaschke products and solves for their preimage
//! fibers on the unit circle, builds the Poncelet triangles and quadrilaterals
//! those fibers form, measures the power circles of the triangles against the
//! closed-form total-area invariant, constructs the inscribed 3- and
//! 4-ellipses with curvature analysis, decides reducibility of products via
//! critical points and hyperbolic geodesics, and builds boundary interpolants
//! through the upper-half-plane transfer.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so the whole API is safe to use from concurrent workers.

pub mod blaschke;
pub mod error;
pub mod geometry;
pub mod interp;
pub mod poncelet;
pub mod reducible;
pub mod roots;

mod poly;

pub use blaschke::{nth_roots, principal_arg, BlaschkeProduct, DiskAutomorphism, PreimageFiber};
pub use error::{Error, Result};
pub use geometry::{
    chord_tangency_gap, ellipse_from_foci, fit_circle, geodesic_angle_at, geodesic_intersection,
    geodesic_through, tangency_point, Chord, CircleFit, Eccentricity, EllipseParams,
    HyperbolicGeodesic,
};
pub use interp::{build_interpolant, HalfPlaneMap, InterleavedSpec, Interpolant};
pub use poncelet::{
    blaschke3_ellipse, blaschke4_ellipse, closed_form_area, invariant_total_area, power_circles,
    quadrilateral_at, sweep, sweep_schedule, total_area_at, triangle_at, Ellipse3Spec,
    Ellipse4Spec, PonceletTriangle, PowerCircle, PowerCircleSet, QuadrilateralFiber, SweepReport,
};
pub use reducible::{
    conjugate_power, conjugate_power_expanded, delta_xi, fixed_point_check, is_reducible,
    opposite_pair_geodesics, OppositePairGeodesics, ReducibilityFailure, ReducibilityVerdict,
};

pub use num_complex::Complex64;
