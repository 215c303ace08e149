//! Reducible Blaschke products: conjugations of the power map by a disk
//! automorphism, the boundary value they are forced to take at 1, and the
//! four-condition reducibility decision.
//!
//! A degree-n product is reducible when `B = sigma_a . z^n . sigma_a^{-1}`
//! for some normalized automorphism `sigma_a`. Its zeros are the images under
//! `sigma_a` of the n-th roots of `a`, its only critical point in the disk is
//! `-a` (with multiplicity n-1), `-a` is a fixed point, and `B(1)` equals the
//! explicit unimodular constant `delta_xi(a, n)`.

use num_complex::Complex64;

use crate::blaschke::{nth_roots, principal_arg, BlaschkeProduct, DiskAutomorphism};
use crate::error::{Error, Result};
use crate::geometry::{geodesic_intersection, geodesic_through, HyperbolicGeodesic};

/// Zeros closer than this are treated as one zero with multiplicity.
const MULTIPLICITY_TOL: f64 = 1e-9;
/// Critical points must collapse to a single location within this radius.
const CRITICAL_COLLAPSE_TOL: f64 = 1e-8;
/// Entrywise tolerance for matching the pulled-back zero set against the
/// root set.
const ROOT_SET_TOL: f64 = 1e-8;
/// Tolerance on the boundary-value condition `B(1) = delta`.
const BOUNDARY_VALUE_TOL: f64 = 1e-8;

/// The reducible product `sigma_a . z^n . sigma_a^{-1}` in product form.
///
/// Its zero set is `sigma_a` applied to the n-th roots of `a`; the unimodular
/// constant is fixed by matching the conjugated evaluation, and the match is
/// verified on 16 circle points before returning.
pub fn conjugate_power(a: Complex64, n: u32) -> Result<BlaschkeProduct> {
    assert!(n >= 1);
    if a.norm() == 0.0 {
        return Ok(BlaschkeProduct::power(n as usize));
    }
    let sigma = DiskAutomorphism::normalized(a)?;
    let zeros: Vec<Complex64> = nth_roots(a, n)?
        .into_iter()
        .map(|w| sigma.apply(w))
        .collect();
    let raw = BlaschkeProduct::from_zeros(zeros)?;
    let one = Complex64::new(1.0, 0.0);
    let conjugated = |z: Complex64| sigma.apply(sigma.apply_inverse(z).powu(n));
    let mut mu = conjugated(one) / raw.evaluate(one)?;
    mu /= mu.norm();
    let product = BlaschkeProduct::new(mu, raw.zeros().to_vec())?;
    for k in 0..16 {
        let z = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 16.0);
        let diff = (product.evaluate(z)? - conjugated(z)).norm();
        assert!(
            diff <= 1e-10,
            "conjugated power map mismatch at {z}: {diff:e}"
        );
    }
    Ok(product)
}

/// The same product built from the zero-set expansion
/// `delta * prod_w ((1 - conj(w))^2 / |1 - w|^2) sigma_w(z)`,
/// an independent route used to cross-check [`conjugate_power`].
pub fn conjugate_power_expanded(a: Complex64, n: u32) -> Result<BlaschkeProduct> {
    assert!(n >= 1);
    if a.norm() == 0.0 {
        return Ok(BlaschkeProduct::power(n as usize));
    }
    let sigma = DiskAutomorphism::normalized(a)?;
    let zeros: Vec<Complex64> = nth_roots(a, n)?
        .into_iter()
        .map(|w| sigma.apply(w))
        .collect();
    let one = Complex64::new(1.0, 0.0);
    let mut mu = delta_xi(a, n)?;
    for &w in &zeros {
        mu *= (one - w.conj()) * (one - w.conj()) / (one - w).norm_sqr();
    }
    mu /= mu.norm();
    BlaschkeProduct::new(mu, zeros)
}

/// The unimodular value every reducible product with conjugate point `xi`
/// takes at 1:
/// `((1 + xi)^n - xi (1 + conj(xi))^n) / ((1 + conj(xi))^n - conj(xi) (1 + xi)^n)`.
///
/// The denominator is the conjugate of the numerator, which is what direct
/// evaluation `sigma_xi((sigma_xi^{-1}(1))^n)` produces and what forces
/// `|delta| = 1`.
pub fn delta_xi(xi: Complex64, n: u32) -> Result<Complex64> {
    assert!(xi.norm() < 1.0, "conjugate point must lie inside the disk");
    let one = Complex64::new(1.0, 0.0);
    let plain = (one + xi).powu(n);
    let conj = (one + xi.conj()).powu(n);
    let denom = conj - xi.conj() * plain;
    if denom.norm() < 1e-14 {
        return Err(Error::NearSingularDenominator(denom.norm()));
    }
    let delta = (plain - xi * conj) / denom;
    assert!(
        (delta.norm() - 1.0).abs() <= 1e-10,
        "boundary value must be unimodular, got |delta| = {}",
        delta.norm()
    );
    Ok(delta)
}

/// Which of the four reducibility conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducibilityFailure {
    /// Zero multiplicities are neither all one nor a single n-fold zero.
    Multiplicity,
    /// The in-disk critical points do not collapse to a single point.
    UniqueCriticalPoint,
    /// The pulled-back zero set does not match the n-th roots of the
    /// candidate conjugate point.
    RootSetMatch,
    /// `B(1)` differs from the forced boundary value.
    UnimodularConstant,
}

impl ReducibilityFailure {
    pub fn name(&self) -> &'static str {
        match self {
            ReducibilityFailure::Multiplicity => "Multiplicity",
            ReducibilityFailure::UniqueCriticalPoint => "UniqueCriticalPoint",
            ReducibilityFailure::RootSetMatch => "RootSetMatch",
            ReducibilityFailure::UnimodularConstant => "UnimodularConstant",
        }
    }
}

/// Outcome of the reducibility decision.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducibilityVerdict {
    pub reducible: bool,
    /// The recovered conjugate point when the product is reducible.
    pub conjugate_point: Option<Complex64>,
    pub failed_conditions: Vec<ReducibilityFailure>,
    /// In-disk critical points, exposed for reporting.
    pub critical_points: Vec<Complex64>,
}

fn multiplicity_profile(zeros: &[Complex64]) -> Vec<usize> {
    let n = zeros.len();
    let mut assigned = vec![false; n];
    let mut sizes = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        // grow the cluster transitively
        let mut stack = vec![i];
        assigned[i] = true;
        let mut size = 0;
        while let Some(k) = stack.pop() {
            size += 1;
            for j in 0..n {
                if !assigned[j] && (zeros[k] - zeros[j]).norm() <= MULTIPLICITY_TOL {
                    assigned[j] = true;
                    stack.push(j);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Matches two argument-sorted sets entrywise, trying every cyclic alignment.
fn sets_match(left: &[Complex64], right: &[Complex64], tol: f64) -> bool {
    if left.len() != right.len() {
        return false;
    }
    let n = left.len();
    (0..n).any(|shift| {
        (0..n).all(|k| (left[(k + shift) % n] - right[k]).norm() <= tol)
    })
}

/// Decides reducibility by the four-condition characterization and recovers
/// the conjugate point from the unique critical point.
pub fn is_reducible(b: &BlaschkeProduct) -> Result<ReducibilityVerdict> {
    assert!(b.degree() >= 2, "reducibility needs degree >= 2");
    let n = b.degree();
    let mut failed = Vec::new();

    // (1) multiplicities all one, or one zero of full multiplicity
    let profile = multiplicity_profile(b.zeros());
    let simple = profile.iter().all(|&m| m == 1);
    let single = profile.len() == 1 && profile[0] == n;
    if !(simple || single) {
        failed.push(ReducibilityFailure::Multiplicity);
    }

    // (2) a unique in-disk critical point -xi of multiplicity n-1
    let critical_points = b.critical_points()?;
    let centroid =
        critical_points.iter().sum::<Complex64>() / critical_points.len().max(1) as f64;
    let collapsed = !critical_points.is_empty()
        && critical_points
            .iter()
            .all(|z| (z - centroid).norm() <= CRITICAL_COLLAPSE_TOL);
    let xi = if collapsed {
        -centroid
    } else {
        failed.push(ReducibilityFailure::UniqueCriticalPoint);
        return Ok(ReducibilityVerdict {
            reducible: false,
            conjugate_point: None,
            failed_conditions: failed,
            critical_points,
        });
    };

    if xi.norm() <= 1e-10 {
        // degenerate conjugate point: reducible iff B is exactly z^n
        let all_origin = b.zeros().iter().all(|z| z.norm() <= ROOT_SET_TOL);
        if !all_origin {
            failed.push(ReducibilityFailure::RootSetMatch);
        }
        let one = Complex64::new(1.0, 0.0);
        if (b.evaluate(one)? - one).norm() > BOUNDARY_VALUE_TOL {
            failed.push(ReducibilityFailure::UnimodularConstant);
        }
        let reducible = failed.is_empty();
        return Ok(ReducibilityVerdict {
            reducible,
            conjugate_point: reducible.then_some(Complex64::new(0.0, 0.0)),
            failed_conditions: failed,
            critical_points,
        });
    }

    // (3) sigma_xi^{-1}(zeros) equals the n-th roots of xi as a set
    let sigma = DiskAutomorphism::normalized(xi)?;
    let mut pulled: Vec<Complex64> = b.zeros().iter().map(|&z| sigma.apply_inverse(z)).collect();
    pulled.sort_by(|a, b| principal_arg(*a).partial_cmp(&principal_arg(*b)).unwrap());
    let roots = nth_roots(xi, n as u32)?;
    if !sets_match(&pulled, &roots, ROOT_SET_TOL) {
        failed.push(ReducibilityFailure::RootSetMatch);
    }

    // (4) B(1) agrees with the forced boundary value
    let delta = delta_xi(xi, n as u32)?;
    if (b.evaluate(Complex64::new(1.0, 0.0))? - delta).norm() > BOUNDARY_VALUE_TOL {
        failed.push(ReducibilityFailure::UnimodularConstant);
    }

    let reducible = failed.is_empty();
    Ok(ReducibilityVerdict {
        reducible,
        conjugate_point: reducible.then_some(xi),
        failed_conditions: failed,
        critical_points,
    })
}

/// `|B(-a) - (-a)|`: zero for a genuine reducible product with conjugate
/// point `a`, since `-a` is then a fixed point.
pub fn fixed_point_check(b: &BlaschkeProduct, a: Complex64) -> Result<f64> {
    Ok((b.evaluate(-a)? + a).norm())
}

/// The geodesics through opposite zero pairs of an even-degree reducible
/// product, together with their common intersection.
#[derive(Debug, Clone, PartialEq)]
pub struct OppositePairGeodesics {
    pub geodesics: Vec<HyperbolicGeodesic>,
    /// Common intersection point of the family (equals `-a` up to numerics).
    pub intersection: Complex64,
    /// Worst distance of any pairwise intersection from `-a`; for a single
    /// geodesic, the residual of `-a` against it.
    pub max_deviation: f64,
}

/// For `B = conjugate_power(a, 2k)`, pairs each zero with the zero whose
/// pullback is antipodal and draws the geodesic through every such pair. All
/// these geodesics pass through `-a`.
pub fn opposite_pair_geodesics(
    b: &BlaschkeProduct,
    a: Complex64,
) -> Result<OppositePairGeodesics> {
    let n = b.degree();
    if n % 2 != 0 {
        return Err(Error::OddDegree(n));
    }
    if a.norm() == 0.0 {
        // all zeros coincide at the origin; no geodesic is determined
        return Err(Error::CoincidentPoints);
    }
    let k = n / 2;
    let sigma = DiskAutomorphism::normalized(a)?;
    // sort zeros by the argument of their pullback; antipodal pullbacks are
    // then k indices apart
    let mut keyed: Vec<(f64, Complex64)> = b
        .zeros()
        .iter()
        .map(|&z| (principal_arg(sigma.apply_inverse(z)), z))
        .collect();
    keyed.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

    let mut geodesics = Vec::with_capacity(k);
    for j in 0..k {
        geodesics.push(geodesic_through(keyed[j].1, keyed[j + k].1)?);
    }

    let minus_a = -a;
    let mut max_deviation = 0.0_f64;
    let mut crossings = Vec::new();
    for i in 0..geodesics.len() {
        for j in (i + 1)..geodesics.len() {
            let p = geodesic_intersection(&geodesics[i], &geodesics[j])?;
            max_deviation = max_deviation.max((p - minus_a).norm());
            crossings.push(p);
        }
    }
    let intersection = if crossings.is_empty() {
        // single geodesic: report its closest approach to -a
        let p = geodesics[0].closest_point(minus_a);
        max_deviation = (p - minus_a).norm();
        p
    } else {
        crossings.iter().sum::<Complex64>() / crossings.len() as f64
    };
    Ok(OppositePairGeodesics {
        geodesics,
        intersection,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn conjugate_power_at_origin_is_power() {
        let b = conjugate_power(c(0.0, 0.0), 5).unwrap();
        assert_eq!(b.degree(), 5);
        assert!(b.zeros().iter().all(|z| z.norm() == 0.0));
        assert!((b.evaluate(c(0.0, 1.0)).unwrap() - c(0.0, 1.0).powu(5)).norm() < 1e-15);
    }

    #[test]
    fn conjugate_power_zeros_are_concyclic() {
        let b = conjugate_power(c(0.2, 0.3), 6).unwrap();
        let fit = crate::geometry::fit_circle(b.zeros()).unwrap();
        assert!(fit.max_residual <= 1e-10, "residual {}", fit.max_residual);
    }

    #[test]
    fn conjugate_power_real_quadratic_zeros() {
        let b = conjugate_power(c(0.5, 0.0), 2).unwrap();
        let sigma = DiskAutomorphism::normalized(c(0.5, 0.0)).unwrap();
        let root = 0.5_f64.sqrt();
        let expected = [sigma.apply(c(root, 0.0)), sigma.apply(c(-root, 0.0))];
        for e in &expected {
            assert!(b.zeros().iter().any(|z| (z - e).norm() < 1e-12));
        }
    }

    #[test]
    fn expanded_constructor_agrees_pointwise() {
        for (a, n) in [(c(0.2, 0.3), 6), (c(-0.4, 0.1), 4), (c(0.5, 0.0), 3)] {
            let direct = conjugate_power(a, n).unwrap();
            let expanded = conjugate_power_expanded(a, n).unwrap();
            for k in 0..16 {
                let z = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 16.0);
                let diff =
                    (direct.evaluate(z).unwrap() - expanded.evaluate(z).unwrap()).norm();
                assert!(diff <= 1e-9, "mismatch {diff:e} at {z} for a={a}, n={n}");
            }
        }
    }

    #[test]
    fn delta_is_one_for_real_conjugate_points() {
        assert!((delta_xi(c(0.0, 0.0), 4).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert!((delta_xi(c(0.6, 0.0), 5).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
        assert!((delta_xi(c(-0.3, 0.0), 2).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn delta_matches_direct_evaluation() {
        let xi = c(0.2, 0.3);
        let b = conjugate_power(xi, 6).unwrap();
        let delta = delta_xi(xi, 6).unwrap();
        let at_one = b.evaluate(c(1.0, 0.0)).unwrap();
        assert!((delta - at_one).norm() <= 1e-10);
    }

    #[test]
    fn round_trip_recovers_conjugate_point() {
        let a = c(0.2, 0.3);
        let verdict = is_reducible(&conjugate_power(a, 6).unwrap()).unwrap();
        assert!(verdict.reducible);
        assert!((verdict.conjugate_point.unwrap() - a).norm() <= 1e-9);
        assert!(verdict.failed_conditions.is_empty());
    }

    #[test]
    fn scaled_product_fails_only_the_boundary_value() {
        let a = c(0.2, 0.3);
        let b = conjugate_power(a, 6).unwrap();
        let scaled = BlaschkeProduct::new(c(0.0, 1.0) * b.mu(), b.zeros().to_vec()).unwrap();
        let verdict = is_reducible(&scaled).unwrap();
        assert!(!verdict.reducible);
        assert_eq!(
            verdict.failed_conditions,
            vec![ReducibilityFailure::UnimodularConstant]
        );
    }

    #[test]
    fn pure_power_is_reducible_with_zero_point() {
        let verdict = is_reducible(&BlaschkeProduct::power(4)).unwrap();
        assert!(verdict.reducible);
        assert!(verdict.conjugate_point.unwrap().norm() <= 1e-12);
    }

    #[test]
    fn rotated_power_is_not_reducible() {
        let b = BlaschkeProduct::new(c(0.0, 1.0), vec![c(0.0, 0.0); 3]).unwrap();
        let verdict = is_reducible(&b).unwrap();
        assert!(!verdict.reducible);
        assert_eq!(
            verdict.failed_conditions,
            vec![ReducibilityFailure::UnimodularConstant]
        );
    }

    #[test]
    fn repeated_offcenter_zero_is_not_reducible() {
        let b = BlaschkeProduct::from_zeros(vec![c(0.3, 0.0); 3]).unwrap();
        let verdict = is_reducible(&b).unwrap();
        assert!(!verdict.reducible);
        assert!(verdict
            .failed_conditions
            .contains(&ReducibilityFailure::RootSetMatch));
    }

    #[test]
    fn fixed_point_of_reducible_product() {
        assert!(fixed_point_check(&BlaschkeProduct::power(3), c(0.0, 0.0)).unwrap() < 1e-15);
        let a = c(0.2, 0.3);
        let b = conjugate_power(a, 6).unwrap();
        assert!(fixed_point_check(&b, a).unwrap() <= 1e-10);
    }

    #[test]
    fn fixed_point_alone_does_not_imply_reducibility() {
        // 0 is a fixed point of any product with a zero at the origin, yet
        // this one is not reducible
        let b = BlaschkeProduct::from_zeros(vec![c(0.0, 0.0), c(0.5, 0.0), c(-0.5, 0.0)]).unwrap();
        assert!(fixed_point_check(&b, c(0.0, 0.0)).unwrap() < 1e-15);
        assert!(!is_reducible(&b).unwrap().reducible);
    }

    #[test]
    fn opposite_pairs_meet_at_minus_a() {
        let a = c(0.2, 0.3);
        let b = conjugate_power(a, 6).unwrap();
        let bundle = opposite_pair_geodesics(&b, a).unwrap();
        assert_eq!(bundle.geodesics.len(), 3);
        assert!(bundle.max_deviation <= 1e-9, "dev {}", bundle.max_deviation);
        assert!((bundle.intersection + a).norm() <= 1e-9);
    }

    #[test]
    fn real_quadratic_gives_single_diameter() {
        let a = c(0.4, 0.0);
        let b = conjugate_power(a, 2).unwrap();
        let bundle = opposite_pair_geodesics(&b, a).unwrap();
        assert_eq!(bundle.geodesics.len(), 1);
        assert!(matches!(
            bundle.geodesics[0],
            HyperbolicGeodesic::Diameter { .. }
        ));
        assert!(bundle.max_deviation <= 1e-12);
    }

    #[test]
    fn degenerate_and_odd_cases_error() {
        let b = BlaschkeProduct::power(4);
        assert!(matches!(
            opposite_pair_geodesics(&b, c(0.0, 0.0)),
            Err(Error::CoincidentPoints)
        ));
        let b = conjugate_power(c(0.3, 0.0), 3).unwrap();
        assert!(matches!(
            opposite_pair_geodesics(&b, c(0.3, 0.0)),
            Err(Error::OddDegree(3))
        ));
    }
}
