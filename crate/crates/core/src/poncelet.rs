//! Poncelet triangles and quadrilaterals from Blaschke preimage fibers,
//! inscribed ellipses, power circles, and the total-area invariant.
//!
//! For a degree-3 product with zeros `0, a, b` every unimodular fiber is a
//! triangle inscribed in the unit circle whose sides are tangent to the
//! ellipse `|w - a| + |w - b| = |1 - conj(a) b|`. The three circles centered
//! at the side midpoints through the opposite vertices have a total area that
//! does not depend on the fiber when the ellipse is centered at the origin;
//! the closed form for foci at `+-a` is `pi (9/2 - 3/4 (a^4 - 3))`.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use std::f64::consts::{PI, TAU};

use crate::blaschke::{principal_arg, BlaschkeProduct};
use crate::error::{Error, Result};
use crate::geometry::{chord_tangency_gap, ellipse_from_foci, tangency_point, Chord, EllipseParams};

/// Two fiber points closer than this indicate a coalesced (critical) fiber.
const FIBER_GAP_TOL: f64 = 1e-8;
/// A product "has a zero at the origin" within this radius.
const ORIGIN_ZERO_TOL: f64 = 1e-9;
/// Pattern-matching tolerance for detecting zeros `{0, a, -a}` with real `a`.
const CLOSED_FORM_TOL: f64 = 1e-10;

/// The inscribed ellipse of a degree-3 product with zeros `0, a, b`:
/// foci `a, b` and string length `|1 - conj(a) b|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse3Spec {
    pub zero_a: Complex64,
    pub zero_b: Complex64,
    pub ellipse: EllipseParams,
}

/// Builds the degree-3 Blaschke ellipse for the non-origin zeros `a, b`.
pub fn blaschke3_ellipse(a: Complex64, b: Complex64) -> Result<Ellipse3Spec> {
    let s = (Complex64::new(1.0, 0.0) - a.conj() * b).norm();
    Ok(Ellipse3Spec {
        zero_a: a,
        zero_b: b,
        ellipse: ellipse_from_foci(a, b, s)?,
    })
}

/// The inscribed ellipse of a decomposable degree-4 product `z * B3` where
/// `B3` has zeros `a, b, c` and `a` is the zero of `D(z)/z` in the
/// decomposition: foci `b, c` and string length
/// `|1 - conj(b) c| sqrt((2 - |b|^2 - |c|^2) / (1 - |b|^2 |c|^2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse4Spec {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub ellipse: EllipseParams,
}

/// Builds the degree-4 Blaschke ellipse. Decomposability of `z * B3` is the
/// caller's responsibility; the tangency of quadrilateral fibers is checked
/// downstream where fibers are available.
pub fn blaschke4_ellipse(a: Complex64, b: Complex64, c: Complex64) -> Result<Ellipse4Spec> {
    let base = (Complex64::new(1.0, 0.0) - b.conj() * c).norm();
    let ratio = (2.0 - b.norm_sqr() - c.norm_sqr()) / (1.0 - b.norm_sqr() * c.norm_sqr());
    let s = base * ratio.sqrt();
    Ok(Ellipse4Spec {
        a,
        b,
        c,
        ellipse: ellipse_from_foci(b, c, s)?,
    })
}

/// One Poncelet triangle: a degree-3 fiber with side midpoints and, when the
/// product has a zero at the origin, the tangency points against the
/// inscribed ellipse.
#[derive(Debug, Clone, PartialEq)]
pub struct PonceletTriangle {
    pub lambda: Complex64,
    /// Fiber points sorted by principal argument.
    pub vertices: [Complex64; 3],
    /// `tangency_points[j]` is where the side opposite `vertices[j]` touches
    /// the inscribed ellipse; absent when no zero sits at the origin.
    pub tangency_points: Option<[Complex64; 3]>,
    /// `midpoints[j]` is the midpoint of the side opposite `vertices[j]`.
    pub midpoints: [Complex64; 3],
}

fn check_fiber_gaps(points: &[Complex64]) -> Result<()> {
    let n = points.len();
    for i in 0..n {
        let gap = (points[i] - points[(i + 1) % n]).norm();
        if gap < FIBER_GAP_TOL {
            return Err(Error::CoalescedFiber { gap });
        }
    }
    Ok(())
}

/// The Poncelet triangle of `b` over the unimodular target `lambda`.
pub fn triangle_at(b: &BlaschkeProduct, lambda: Complex64) -> Result<PonceletTriangle> {
    assert_eq!(b.degree(), 3, "Poncelet triangles need a degree-3 product");
    let fiber = b.preimages(lambda)?;
    let v: [Complex64; 3] = [fiber.points[0], fiber.points[1], fiber.points[2]];
    check_fiber_gaps(&v)?;
    let midpoints = [
        (v[1] + v[2]) / 2.0,
        (v[0] + v[2]) / 2.0,
        (v[0] + v[1]) / 2.0,
    ];

    let origin_index = b
        .zeros()
        .iter()
        .position(|z| z.norm() <= ORIGIN_ZERO_TOL);
    let tangency_points = match origin_index {
        None => None,
        Some(idx) => {
            let others: Vec<Complex64> = b
                .zeros()
                .iter()
                .enumerate()
                .filter_map(|(k, &z)| (k != idx).then_some(z))
                .collect();
            let spec = blaschke3_ellipse(others[0], others[1])?;
            let mut touches = [Complex64::new(0.0, 0.0); 3];
            for j in 0..3 {
                let chord = Chord::new(v[(j + 1) % 3], v[(j + 2) % 3])?;
                touches[j] = tangency_point(&spec.ellipse, &chord)?;
            }
            Some(touches)
        }
    };

    Ok(PonceletTriangle {
        lambda,
        vertices: v,
        tangency_points,
        midpoints,
    })
}

/// A power circle: centered at a side midpoint, passing through the opposite
/// vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerCircle {
    pub center: Complex64,
    pub radius: f64,
}

/// The three power circles of a triangle and their total area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerCircleSet {
    pub circles: [PowerCircle; 3],
    pub total_area: f64,
}

/// Builds the power circles of a Poncelet triangle.
///
/// The direct sum `pi (r1^2 + r2^2 + r3^2)` is cross-checked against the
/// algebraic expansion `9/2 - 3/4 (2 Re(conj(z1) z2 + conj(z2) z3 + conj(z1) z3))`
/// valid for unit-circle vertices.
pub fn power_circles(t: &PonceletTriangle) -> PowerCircleSet {
    let v = &t.vertices;
    let circles = [0, 1, 2].map(|j| PowerCircle {
        center: t.midpoints[j],
        radius: (v[j] - t.midpoints[j]).norm(),
    });
    let sum_sq: f64 = circles.iter().map(|c| c.radius * c.radius).sum();
    let cross = (v[0].conj() * v[1] + v[1].conj() * v[2] + v[0].conj() * v[2]).re;
    let expanded = 4.5 - 1.5 * cross;
    assert!(
        (sum_sq - expanded).abs() <= 1e-10 * (1.0 + sum_sq.abs()),
        "power-circle identity violated: {sum_sq} vs {expanded}"
    );
    PowerCircleSet {
        circles,
        total_area: PI * sum_sq,
    }
}

/// Closed form of the invariant total area for foci `+-a1` on the real axis.
pub fn invariant_total_area(a1: f64) -> f64 {
    PI * (4.5 - 0.75 * (a1.powi(4) - 3.0))
}

/// Detects the zero pattern `{0, a, -a}` with real `a` (up to 1e-10) and
/// returns the closed-form invariant area for it.
pub fn closed_form_area(b: &BlaschkeProduct) -> Option<f64> {
    if b.degree() != 3 {
        return None;
    }
    let z = b.zeros();
    for origin in 0..3 {
        if z[origin].norm() > CLOSED_FORM_TOL {
            continue;
        }
        let rest: Vec<Complex64> = (0..3).filter(|&k| k != origin).map(|k| z[k]).collect();
        let symmetric = (rest[0] + rest[1]).norm() <= CLOSED_FORM_TOL;
        let real = rest[0].im.abs() <= CLOSED_FORM_TOL && rest[1].im.abs() <= CLOSED_FORM_TOL;
        if symmetric && real {
            return Some(invariant_total_area(rest[0].re.abs()));
        }
    }
    None
}

/// Total power-circle area of the fiber over `e^{i theta}`.
pub fn total_area_at(b: &BlaschkeProduct, theta: f64) -> Result<f64> {
    let lambda = Complex64::from_polar(1.0, theta);
    Ok(power_circles(&triangle_at(b, lambda)?).total_area)
}

/// The fiber targets of a sweep: a deterministic grid on even multiples of
/// `2 pi / n_samples` covering the full circle, topped up with seeded uniform
/// draws. Deterministic for a given `(n_samples, seed)`.
pub fn sweep_schedule(n_samples: usize, seed: u64) -> Vec<f64> {
    let grid = n_samples - n_samples / 2;
    let mut thetas = Vec::with_capacity(n_samples);
    for k in 0..grid {
        thetas.push(TAU * (2 * k) as f64 / n_samples as f64);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in grid..n_samples {
        thetas.push(rng.gen_range(0.0..TAU));
    }
    thetas
}

/// Summary of a total-area sweep over unimodular fiber targets.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    /// Requested sample count.
    pub samples: usize,
    /// Samples skipped because the fiber coalesced near a critical value.
    pub skipped: usize,
    /// Total area per evaluated sample, in schedule order.
    pub areas: Vec<f64>,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    /// `max - min`.
    pub spread: f64,
    /// Closed-form invariant when the zeros match `{0, a, -a}` with real `a`.
    pub closed_form: Option<f64>,
}

impl SweepReport {
    /// Aggregates per-sample areas. Fails when more than 10% of the samples
    /// were skipped.
    pub fn from_areas(
        samples: usize,
        skipped: usize,
        areas: Vec<f64>,
        closed_form: Option<f64>,
    ) -> Result<Self> {
        if skipped * 10 > samples {
            return Err(Error::TooManySkips { skipped, samples });
        }
        let min = areas.iter().copied().fold(f64::INFINITY, f64::min);
        let max = areas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = areas.iter().sum::<f64>() / areas.len() as f64;
        Ok(SweepReport {
            samples,
            skipped,
            areas,
            min,
            max,
            mean,
            spread: max - min,
            closed_form,
        })
    }
}

/// Sweeps the total power-circle area over `n_samples` unimodular targets.
pub fn sweep(b: &BlaschkeProduct, n_samples: usize, seed: u64) -> Result<SweepReport> {
    assert!(n_samples >= 1);
    assert_eq!(b.degree(), 3, "area sweeps need a degree-3 product");
    let mut areas = Vec::with_capacity(n_samples);
    let mut skipped = 0usize;
    for theta in sweep_schedule(n_samples, seed) {
        match total_area_at(b, theta) {
            Ok(area) => areas.push(area),
            Err(Error::CoalescedFiber { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    SweepReport::from_areas(n_samples, skipped, areas, closed_form_area(b))
}

/// A quadrilateral fiber of the degree-4 product `z * B3`, with the tangency
/// gap of each consecutive side against the degree-4 Blaschke ellipse.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadrilateralFiber {
    pub lambda: Complex64,
    /// Fiber of `z * B3` over `lambda`, sorted by principal argument.
    pub vertices: [Complex64; 4],
    /// `gaps[j]` is the tangency gap of the side from `vertices[j]` to
    /// `vertices[(j + 1) % 4]`.
    pub gaps: [f64; 4],
    pub ellipse: Ellipse4Spec,
}

/// Builds the quadrilateral fiber of `z * B3` over `lambda` and measures the
/// side tangency against the degree-4 ellipse. `designated` selects the zero
/// of `B3` playing the role of `a` (the zero of `D(z)/z`); the remaining two
/// zeros become the foci.
pub fn quadrilateral_at(
    b3: &BlaschkeProduct,
    designated: Complex64,
    lambda: Complex64,
) -> Result<QuadrilateralFiber> {
    assert_eq!(b3.degree(), 3, "quadrilateral fibers start from degree 3");
    let idx = b3
        .zeros()
        .iter()
        .position(|&z| (z - designated).norm() <= 1e-12)
        .ok_or(Error::DesignatedZeroMissing(designated))?;
    let rest: Vec<Complex64> = b3
        .zeros()
        .iter()
        .enumerate()
        .filter_map(|(k, &z)| (k != idx).then_some(z))
        .collect();
    let spec = blaschke4_ellipse(designated, rest[0], rest[1])?;

    let mut zeros = vec![Complex64::new(0.0, 0.0)];
    zeros.extend_from_slice(b3.zeros());
    let b4 = BlaschkeProduct::new(b3.mu(), zeros)?;
    let fiber = b4.preimages(lambda)?;
    let v: [Complex64; 4] = [
        fiber.points[0],
        fiber.points[1],
        fiber.points[2],
        fiber.points[3],
    ];
    check_fiber_gaps(&v)?;

    let mut gaps = [0.0; 4];
    for j in 0..4 {
        let chord = Chord::new(v[j], v[(j + 1) % 4])?;
        gaps[j] = chord_tangency_gap(&spec.ellipse, &chord);
    }
    Ok(QuadrilateralFiber {
        lambda,
        vertices: v,
        gaps,
        ellipse: spec,
    })
}

/// Sorted fiber arguments, useful for orientation checks in callers.
pub fn fiber_arguments(points: &[Complex64]) -> Vec<f64> {
    points.iter().map(|p| principal_arg(*p)).collect()
}
