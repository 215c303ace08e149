//! Euclidean and hyperbolic primitives: ellipses by the string construction,
//! chord tangency, curvature, circle fitting, and Poincaré-disk geodesics.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// How far a chord endpoint may sit from the unit circle.
const CHORD_CIRCLE_TOL: f64 = 1e-10;
/// Orthogonality slack for arc geodesics: | |c|^2 - r^2 - 1 |.
const ORTHOGONALITY_TOL: f64 = 1e-10;
/// Scaled cutoff for the diameter/arc dichotomy.
const COLLINEARITY_TOL: f64 = 1e-12;
/// A chord counts as tangent when the string gap is inside this band.
const TANGENCY_TOL: f64 = 1e-8;

/// An ellipse described by its two foci and the constant distance sum
/// `|w - f1| + |w - f2| = string_length`.
///
/// `major_len` and `minor_len` are full axis lengths (the semi-axes are half
/// of them), so `major_len == string_length`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseParams {
    pub focus1: Complex64,
    pub focus2: Complex64,
    pub string_length: f64,
    pub center: Complex64,
    pub major_len: f64,
    pub minor_len: f64,
    /// Angle of the major axis against the x-axis, in `[0, pi)`; zero for
    /// coincident foci.
    pub tilt: f64,
}

/// Builds the ellipse with the given foci and string length.
pub fn ellipse_from_foci(f1: Complex64, f2: Complex64, s: f64) -> Result<EllipseParams> {
    let focal_distance = (f2 - f1).norm();
    if !(s.is_finite() && s > focal_distance + 1e-12) {
        return Err(Error::DegenerateEllipse {
            string_length: s,
            focal_distance,
        });
    }
    let tilt = if focal_distance == 0.0 {
        0.0
    } else {
        let mut t = (f2 - f1).arg();
        if t < 0.0 {
            t += PI;
        }
        if t >= PI {
            t -= PI;
        }
        t
    };
    Ok(EllipseParams {
        focus1: f1,
        focus2: f2,
        string_length: s,
        center: (f1 + f2) / 2.0,
        major_len: s,
        minor_len: (s * s - focal_distance * focal_distance).sqrt(),
        tilt,
    })
}

/// Both eccentricity conventions for an ellipse: the standard focal ratio
/// `c/a` and its complement `sqrt(1 - (c/a)^2) = m/M`; the two squares sum
/// to one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eccentricity {
    pub standard: f64,
    pub complementary: f64,
}

impl EllipseParams {
    /// Curvature of the ellipse at parameter `t` of the usual trigonometric
    /// parametrization (rotated by the tilt).
    pub fn curvature(&self, t: f64) -> f64 {
        let big = self.major_len;
        let small = self.minor_len;
        let s = (t + self.tilt).sin();
        let c = (t + self.tilt).cos();
        let denom = (big * big / 4.0 * s * s + small * small / 4.0 * c * c).powf(1.5);
        big * small / (4.0 * denom)
    }

    /// The attainable curvature range `(2m/M^2, 2M/m^2)`.
    pub fn curvature_bounds(&self) -> (f64, f64) {
        let big = self.major_len;
        let small = self.minor_len;
        (2.0 * small / (big * big), 2.0 * big / (small * small))
    }

    pub fn eccentricity(&self) -> Eccentricity {
        let focal = (self.focus2 - self.focus1).norm();
        let standard = focal / self.major_len;
        Eccentricity {
            standard,
            complementary: (1.0 - standard * standard).max(0.0).sqrt(),
        }
    }

    /// Distance sum to the two foci, minus the string length.
    pub fn string_gap(&self, w: Complex64) -> f64 {
        (w - self.focus1).norm() + (w - self.focus2).norm() - self.string_length
    }
}

/// A chord of the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub p: Complex64,
    pub q: Complex64,
}

impl Chord {
    pub fn new(p: Complex64, q: Complex64) -> Result<Self> {
        for e in [p, q] {
            if (e.norm() - 1.0).abs() > CHORD_CIRCLE_TOL {
                return Err(Error::ChordOffCircle(e));
            }
        }
        if (p - q).norm() <= 1e-12 {
            return Err(Error::CoincidentPoints);
        }
        Ok(Chord { p, q })
    }

    fn at(&self, t: f64) -> Complex64 {
        self.p + (self.q - self.p) * t
    }
}

/// Minimizes the string sum along the chord.
///
/// The sum of distances to the two foci is convex along a segment, so its
/// derivative is nondecreasing; a sign bisection locates the minimizer to
/// machine precision, which a plain value-comparison search cannot do once
/// the value differences fall below rounding noise.
fn minimize_string_sum(e: &EllipseParams, c: &Chord) -> (f64, Complex64, f64) {
    let dir = c.q - c.p;
    let slope = |t: f64| -> f64 {
        let w = c.at(t);
        let mut g = 0.0;
        for f in [e.focus1, e.focus2] {
            let d = w - f;
            let n = d.norm();
            if n > 1e-300 {
                g += (dir.conj() * d).re / n;
            }
        }
        g
    };
    let t_star = if slope(0.0) >= 0.0 {
        0.0
    } else if slope(1.0) <= 0.0 {
        1.0
    } else {
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        while hi - lo > 1e-15 {
            let mid = 0.5 * (lo + hi);
            if slope(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    let w = c.at(t_star);
    (t_star, w, e.string_gap(w))
}

/// Signed gap between the chord and the ellipse: zero (within tolerance) for
/// a tangent chord, positive when the chord misses the ellipse, negative when
/// it crosses.
pub fn chord_tangency_gap(e: &EllipseParams, c: &Chord) -> f64 {
    minimize_string_sum(e, c).2
}

/// The point where a tangent chord touches the ellipse.
pub fn tangency_point(e: &EllipseParams, c: &Chord) -> Result<Complex64> {
    let (_, w, gap) = minimize_string_sum(e, c);
    if gap.abs() > TANGENCY_TOL {
        return Err(Error::NotTangent { gap });
    }
    Ok(w)
}

/// A geodesic of the Poincaré disk: a diameter, or a circular arc orthogonal
/// to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HyperbolicGeodesic {
    Diameter { direction: Complex64 },
    Arc { center: Complex64, radius: f64 },
}

impl HyperbolicGeodesic {
    pub fn diameter(direction: Complex64) -> Result<Self> {
        if direction.norm() == 0.0 {
            return Err(Error::CoincidentPoints);
        }
        Ok(HyperbolicGeodesic::Diameter {
            direction: canonical_direction(direction / direction.norm()),
        })
    }

    pub fn arc(center: Complex64, radius: f64) -> Result<Self> {
        if (center.norm_sqr() - radius * radius - 1.0).abs() > ORTHOGONALITY_TOL {
            return Err(Error::GeodesicNotOrthogonal { center, radius });
        }
        Ok(HyperbolicGeodesic::Arc { center, radius })
    }

    /// Distance-like residual of `p` against the geodesic.
    pub fn residual(&self, p: Complex64) -> f64 {
        match self {
            HyperbolicGeodesic::Diameter { direction } => (direction.conj() * p).im.abs(),
            HyperbolicGeodesic::Arc { center, radius } => ((p - center).norm() - radius).abs(),
        }
    }

    /// Unit tangent direction at a point of the geodesic.
    fn tangent_at(&self, p: Complex64) -> Complex64 {
        match self {
            HyperbolicGeodesic::Diameter { direction } => *direction,
            HyperbolicGeodesic::Arc { center, .. } => {
                let radial = p - center;
                Complex64::new(0.0, 1.0) * radial / radial.norm()
            }
        }
    }

    /// Euclidean projection of `p` onto the geodesic.
    pub fn closest_point(&self, p: Complex64) -> Complex64 {
        match self {
            HyperbolicGeodesic::Diameter { direction } => {
                *direction * (direction.conj() * p).re
            }
            HyperbolicGeodesic::Arc { center, radius } => {
                let radial = p - center;
                *center + radial / radial.norm() * *radius
            }
        }
    }
}

// Lines have no orientation; fold the direction into the upper half so equal
// geodesics compare equal.
fn canonical_direction(d: Complex64) -> Complex64 {
    if d.im < 0.0 || (d.im == 0.0 && d.re < 0.0) {
        -d
    } else {
        d
    }
}

/// The geodesic through two points of the closed unit disk.
pub fn geodesic_through(p: Complex64, q: Complex64) -> Result<HyperbolicGeodesic> {
    if (p - q).norm() <= 1e-12 {
        return Err(Error::CoincidentPoints);
    }
    // p, q, 0 collinear <=> Im(conj(p) q) = 0: the geodesic is a diameter
    let cross = (p.conj() * q).im;
    if cross.abs() <= COLLINEARITY_TOL * (1.0 + p.norm() * q.norm()) {
        let dir = if p.norm() >= q.norm() { p } else { q };
        return HyperbolicGeodesic::diameter(dir);
    }
    // center c of the orthogonal circle satisfies 2 Re(conj(c) p) = |p|^2 + 1
    // and the same for q; a 2x2 real system with determinant 4 Im(conj(p) q)
    let rhs_p = p.norm_sqr() + 1.0;
    let rhs_q = q.norm_sqr() + 1.0;
    let det = 4.0 * cross;
    let center_re = (rhs_p * 2.0 * q.im - rhs_q * 2.0 * p.im) / det;
    let center_im = (rhs_q * 2.0 * p.re - rhs_p * 2.0 * q.re) / det;
    let center = Complex64::new(center_re, center_im);
    let radius = (center.norm_sqr() - 1.0).sqrt();
    HyperbolicGeodesic::arc(center, radius)
}

/// Both intersection parameters of the line `t * dir` with an orthogonal
/// circle come as a reciprocal pair `t, 1/t`; at most one lies inside the
/// disk.
fn diameter_arc_intersection(direction: Complex64, center: Complex64) -> Result<Complex64> {
    let alpha = (direction.conj() * center).re;
    let disc = alpha * alpha - 1.0;
    if disc <= 0.0 {
        return Err(Error::NoIntersectionInDisk);
    }
    let t = alpha - alpha.signum() * disc.sqrt();
    Ok(direction * t)
}

/// The unique intersection point of two distinct geodesics inside the open
/// disk.
pub fn geodesic_intersection(
    g1: &HyperbolicGeodesic,
    g2: &HyperbolicGeodesic,
) -> Result<Complex64> {
    use HyperbolicGeodesic::{Arc, Diameter};
    match (g1, g2) {
        (Diameter { direction: d1 }, Diameter { direction: d2 }) => {
            if (d1.conj() * d2).im.abs() <= 1e-12 {
                return Err(Error::IdenticalGeodesics);
            }
            Ok(Complex64::new(0.0, 0.0))
        }
        (Diameter { direction }, Arc { center, .. })
        | (Arc { center, .. }, Diameter { direction }) => {
            diameter_arc_intersection(*direction, *center)
        }
        (
            Arc {
                center: c1,
                radius: r1,
            },
            Arc {
                center: c2,
                radius: r2,
            },
        ) => {
            let delta = *c1 - *c2;
            if delta.norm() <= 1e-12 {
                if (r1 - r2).abs() <= 1e-12 {
                    return Err(Error::IdenticalGeodesics);
                }
                return Err(Error::NoIntersectionInDisk);
            }
            // the radical axis of two circles orthogonal to the unit circle
            // passes through the origin, perpendicular to the center line
            let dir = Complex64::new(0.0, 1.0) * delta / delta.norm();
            diameter_arc_intersection(dir, *c1)
        }
    }
}

/// Unsigned angle in `[0, pi/2]` between two geodesics at a common point `p`.
pub fn geodesic_angle_at(
    g1: &HyperbolicGeodesic,
    g2: &HyperbolicGeodesic,
    p: Complex64,
) -> Result<f64> {
    for g in [g1, g2] {
        let residual = g.residual(p);
        if residual > 1e-9 {
            return Err(Error::PointNotOnGeodesic { point: p, residual });
        }
    }
    let t1 = g1.tangent_at(p);
    let t2 = g2.tangent_at(p);
    let cos = (t1.conj() * t2).re.abs().clamp(0.0, 1.0);
    Ok(cos.acos())
}

/// Circle through the first three points, with the worst distance residual
/// over all supplied points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleFit {
    pub center: Complex64,
    pub radius: f64,
    pub max_residual: f64,
}

/// Fits the circumcircle of the first three points and reports how well the
/// remaining points lie on it.
pub fn fit_circle(points: &[Complex64]) -> Result<CircleFit> {
    assert!(points.len() >= 3, "circle fit needs at least three points");
    let (a, b, c) = (points[0], points[1], points[2]);
    let u = b - a;
    let v = c - a;
    let cross = (u.conj() * v).im;
    let scale = u.norm().max(v.norm());
    if cross.abs() <= 1e-12 * scale * scale {
        return Err(Error::CollinearPoints);
    }
    // perpendicular-bisector system: 2 Re(conj(u) z) = |b|^2 - |a|^2, etc.
    let rhs_u = b.norm_sqr() - a.norm_sqr();
    let rhs_v = c.norm_sqr() - a.norm_sqr();
    let det = 4.0 * cross;
    let center = Complex64::new(
        (rhs_u * 2.0 * v.im - rhs_v * 2.0 * u.im) / det,
        (rhs_v * 2.0 * u.re - rhs_u * 2.0 * v.re) / det,
    );
    let radius = (a - center).norm();
    let max_residual = points
        .iter()
        .map(|p| ((p - center).norm() - radius).abs())
        .fold(0.0, f64::max);
    Ok(CircleFit {
        center,
        radius,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, SQRT_2};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn ellipse_from_half_focus() {
        let e = ellipse_from_foci(c(0.0, 0.0), c(0.5, 0.0), 1.0).unwrap();
        assert!((e.major_len - 1.0).abs() < 1e-15);
        assert!((e.minor_len - 3.0_f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(e.tilt, 0.0);
        assert!((e.center - c(0.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn ellipse_with_coincident_foci_is_a_circle() {
        let e = ellipse_from_foci(c(0.0, 0.0), c(0.0, 0.0), 0.8).unwrap();
        assert!((e.major_len - e.minor_len).abs() < 1e-15);
        assert!((e.minor_len / 2.0 - 0.4).abs() < 1e-15);
        assert_eq!(e.tilt, 0.0);
    }

    #[test]
    fn ellipse_offset_complex_foci() {
        let f1 = c(2.0_f64.sqrt() / 3.0, -1.0 / 3.0);
        let f2 = c(-(2.0_f64.sqrt()) / 3.0, -1.0 / 3.0);
        let s = 2.0 / 3.0_f64.sqrt();
        // cross-check: |1 - conj(f1) f2| equals the string length here
        let string = (Complex64::new(1.0, 0.0) - f1.conj() * f2).norm();
        assert!((string - s).abs() < 1e-15);
        let e = ellipse_from_foci(f1, f2, s).unwrap();
        assert!((e.major_len - s).abs() < 1e-15);
        let minor_expected = (4.0_f64 / 3.0 - 8.0 / 9.0).sqrt();
        assert!((e.minor_len - minor_expected).abs() < 1e-15);
        assert_eq!(e.tilt, 0.0);
    }

    #[test]
    fn degenerate_string_is_rejected() {
        assert!(matches!(
            ellipse_from_foci(c(0.0, 0.0), c(0.5, 0.0), 0.5),
            Err(Error::DegenerateEllipse { .. })
        ));
    }

    #[test]
    fn curvature_extremes_match_bounds() {
        let e = ellipse_from_foci(c(0.0, 0.0), c(0.5, 0.0), 1.0).unwrap();
        let (lo, hi) = e.curvature_bounds();
        assert!((lo - 3.0_f64.sqrt()).abs() < 1e-14);
        assert!((hi - 8.0 / 3.0).abs() < 1e-14);
        let mut min = f64::INFINITY;
        let mut max = 0.0_f64;
        let n = 10_000;
        for k in 0..n {
            let kappa = e.curvature(std::f64::consts::TAU * k as f64 / n as f64);
            min = min.min(kappa);
            max = max.max(kappa);
        }
        assert!((min - lo).abs() < 1e-6);
        assert!((max - hi).abs() < 1e-6);
    }

    #[test]
    fn circle_has_constant_curvature() {
        let e = ellipse_from_foci(c(0.1, 0.2), c(0.1, 0.2), 0.6).unwrap();
        for k in 0..32 {
            assert!((e.curvature(0.2 * k as f64) - 1.0 / 0.3).abs() < 1e-12);
        }
        let (lo, hi) = e.curvature_bounds();
        assert!((lo - hi).abs() < 1e-12);
    }

    #[test]
    fn curvature_bounds_for_quarter_string() {
        let e = ellipse_from_foci(c(0.0, 0.0), c(0.5, 0.0), 7.0_f64.sqrt() / 4.0).unwrap();
        assert!((e.minor_len - 3.0_f64.sqrt() / 4.0).abs() < 1e-15);
        let (lo, hi) = e.curvature_bounds();
        assert!((lo - 8.0 * 3.0_f64.sqrt() / 7.0).abs() < 1e-12);
        assert!((hi - 8.0 * 7.0_f64.sqrt() / 3.0).abs() < 1e-12);
    }

    #[test]
    fn eccentricity_conventions() {
        let circle = ellipse_from_foci(c(0.2, 0.0), c(0.2, 0.0), 0.5).unwrap();
        let ecc = circle.eccentricity();
        assert_eq!(ecc.standard, 0.0);
        assert!((ecc.complementary - 1.0).abs() < 1e-15);

        let e = ellipse_from_foci(c(0.0, 0.0), c(0.5, 0.0), 1.0).unwrap();
        let ecc = e.eccentricity();
        assert!((ecc.standard - 0.5).abs() < 1e-15);
        assert!((ecc.complementary - 3.0_f64.sqrt() / 2.0).abs() < 1e-15);

        let e = ellipse_from_foci(c(0.0, 0.0), c(0.5, 0.0), 7.0_f64.sqrt() / 4.0).unwrap();
        assert!((e.eccentricity().standard - 2.0 / 7.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn equilateral_side_is_tangent_to_incircle() {
        let circle = ellipse_from_foci(c(0.0, 0.0), c(0.0, 0.0), 1.0).unwrap();
        let w = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
        let chord = Chord::new(w, w.conj()).unwrap();
        assert!(chord_tangency_gap(&circle, &chord).abs() < 1e-12);
        let touch = tangency_point(&circle, &chord).unwrap();
        assert!((touch - c(-0.5, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn diameter_chord_crosses_incircle() {
        let circle = ellipse_from_foci(c(0.0, 0.0), c(0.0, 0.0), 1.0).unwrap();
        let chord = Chord::new(c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        let gap = chord_tangency_gap(&circle, &chord);
        assert!((gap + 1.0).abs() < 1e-12, "gap {gap}");
        assert!(matches!(
            tangency_point(&circle, &chord),
            Err(Error::NotTangent { .. })
        ));
    }

    #[test]
    fn symmetric_fiber_side_touches_on_the_real_axis() {
        // fiber of z sigma_{1/2} sigma_{-1/2} over 1: the vertical side joins
        // -0.625 +/- i sqrt(2.4375)/2 and touches |w-1/2|+|w+1/2| = 1.25 at
        // w = -0.625
        let e = ellipse_from_foci(c(0.5, 0.0), c(-0.5, 0.0), 1.25).unwrap();
        let y = 2.4375_f64.sqrt() / 2.0;
        let chord = Chord::new(c(-0.625, y), c(-0.625, -y)).unwrap();
        assert!(chord_tangency_gap(&e, &chord).abs() < 1e-8);
        let touch = tangency_point(&e, &chord).unwrap();
        assert!(touch.im.abs() < 1e-9, "touch point {touch}");
        assert!((touch.re + 0.625).abs() < 1e-9);
    }

    #[test]
    fn tangency_point_is_rotation_equivariant() {
        let e = ellipse_from_foci(c(0.0, 0.0), c(0.0, 0.0), 1.0).unwrap();
        let w = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
        let chord = Chord::new(w, w.conj()).unwrap();
        let touch = tangency_point(&e, &chord).unwrap();

        let rot = Complex64::from_polar(1.0, 0.77);
        let chord_rot = Chord::new(rot * w, rot * w.conj()).unwrap();
        let touch_rot = tangency_point(&e, &chord_rot).unwrap();
        assert!((touch_rot - rot * touch).norm() < 1e-9);
    }

    #[test]
    fn geodesic_between_collinear_points_is_a_diameter() {
        let g = geodesic_through(c(0.5, 0.0), c(-0.5, 0.0)).unwrap();
        match g {
            HyperbolicGeodesic::Diameter { direction } => {
                assert!((direction - c(1.0, 0.0)).norm() < 1e-12)
            }
            _ => panic!("expected diameter"),
        }

        let g = geodesic_through(c(0.6, 0.8), c(-0.6, -0.8)).unwrap();
        assert!(matches!(g, HyperbolicGeodesic::Diameter { .. }));
    }

    #[test]
    fn geodesic_arc_is_orthogonal() {
        let p = c(0.0, 0.5);
        let q = c(0.5, 0.0);
        let g = geodesic_through(p, q).unwrap();
        match g {
            HyperbolicGeodesic::Arc { center, radius } => {
                assert!((center.norm_sqr() - radius * radius - 1.0).abs() < 1e-12);
                assert!(g.residual(p) < 1e-12);
                assert!(g.residual(q) < 1e-12);
                assert!((center - c(1.25, 1.25)).norm() < 1e-12);
            }
            _ => panic!("expected arc"),
        }
    }

    #[test]
    fn diameters_intersect_at_origin() {
        let g1 = geodesic_through(c(0.5, 0.0), c(-0.5, 0.0)).unwrap();
        let g2 = geodesic_through(c(0.0, 0.5), c(0.0, -0.5)).unwrap();
        let p = geodesic_intersection(&g1, &g2).unwrap();
        assert!(p.norm() < 1e-14);
        assert!(matches!(
            geodesic_intersection(&g1, &g1),
            Err(Error::IdenticalGeodesics)
        ));
    }

    #[test]
    fn diameter_meets_arc_inside_disk() {
        let real_axis = geodesic_through(c(0.5, 0.0), c(-0.5, 0.0)).unwrap();
        let arc = geodesic_through(c(0.0, 0.5), c(0.1, -0.5)).unwrap();
        let p = geodesic_intersection(&real_axis, &arc).unwrap();
        assert!(p.norm() < 1.0);
        assert!(real_axis.residual(p) < 1e-10);
        assert!(arc.residual(p) < 1e-10);
    }

    #[test]
    fn perpendicular_diameters_meet_at_right_angle() {
        let g1 = geodesic_through(c(0.5, 0.0), c(-0.5, 0.0)).unwrap();
        let g2 = geodesic_through(c(0.0, 0.5), c(0.0, -0.5)).unwrap();
        let angle = geodesic_angle_at(&g1, &g2, c(0.0, 0.0)).unwrap();
        assert!((angle - FRAC_PI_2).abs() < 1e-14);
        let self_angle = geodesic_angle_at(&g1, &g1, c(0.0, 0.0)).unwrap();
        assert!(self_angle.abs() < 1e-14);
    }

    #[test]
    fn angle_requires_incidence() {
        let g1 = geodesic_through(c(0.5, 0.0), c(-0.5, 0.0)).unwrap();
        let g2 = geodesic_through(c(0.0, 0.5), c(0.0, -0.5)).unwrap();
        assert!(matches!(
            geodesic_angle_at(&g1, &g2, c(0.3, 0.4)),
            Err(Error::PointNotOnGeodesic { .. })
        ));
    }

    #[test]
    fn fit_circle_on_roots_of_unity() {
        let pts = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        let fit = fit_circle(&pts).unwrap();
        assert!(fit.center.norm() < 1e-14);
        assert!((fit.radius - 1.0).abs() < 1e-14);
        assert!(fit.max_residual < 1e-14);
    }

    #[test]
    fn fit_circle_reports_outlier() {
        let pts = [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.9, 0.9)];
        let fit = fit_circle(&pts).unwrap();
        assert!((fit.center - c(0.5, 0.5)).norm() < 1e-14);
        assert!((fit.radius - SQRT_2 / 2.0).abs() < 1e-14);
        assert!(fit.max_residual >= 0.1, "residual {}", fit.max_residual);
        assert!((fit.max_residual - 0.1414).abs() < 1e-3);
    }

    #[test]
    fn fit_circle_rejects_collinear_triples() {
        let pts = [c(0.0, 0.0), c(0.5, 0.0), c(1.0, 0.0)];
        assert!(matches!(fit_circle(&pts), Err(Error::CollinearPoints)));
    }
}
