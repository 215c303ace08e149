//! Finite Blaschke products and disk automorphisms.
//!
//! A finite Blaschke product of degree n is
//!
//! ```text
//! B(z) = mu * prod_{j=1..n} (z - a_j) / (1 - conj(a_j) z)
//! ```
//!
//! with `|mu| = 1` and every zero `a_j` strictly inside the unit disk. Such a
//! product maps the unit circle onto itself, and every unimodular value has
//! exactly n preimages on the circle. Those preimage fibers are the raw
//! material for the Poncelet constructions in the rest of the crate.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::poly;
use crate::roots::{refine_clusters, AberthSolver};

/// Unimodularity slack accepted for the leading constant.
pub const MU_TOLERANCE: f64 = 1e-12;
/// Zeros must satisfy |a| < 1 - ZERO_MARGIN.
pub const ZERO_MARGIN: f64 = 1e-12;
/// Guard distance to the poles 1/conj(a_j) during evaluation.
const POLE_GUARD: f64 = 1e-14;
/// Fiber roots farther than this from the unit circle signal solver failure.
const OFF_CIRCLE_LIMIT: f64 = 1e-8;
/// Linking radius used to decide when raw critical-point roots form one cluster.
const CLUSTER_LINK_RADIUS: f64 = 0.05;
/// Relative tolerance for verifying a cluster as a genuine multiple root.
const CLUSTER_VERIFY_TOL: f64 = 1e-7;

fn ensure_finite(z: Complex64) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFiniteValue(z))
    }
}

/// Principal argument normalized to `[0, 2*pi)`.
pub fn principal_arg(z: Complex64) -> f64 {
    let mut a = z.arg();
    if a < 0.0 {
        a += TAU;
    }
    if a >= TAU {
        a -= TAU;
    }
    a
}

pub(crate) fn sort_by_principal_arg(points: &mut [Complex64]) {
    points.sort_by(|a, b| {
        principal_arg(*a)
            .partial_cmp(&principal_arg(*b))
            .expect("finite arguments")
    });
}

/// The n distinct n-th roots of `a`, using the principal branch of the n-th
/// root (with `arg(a) = pi` on the negative real axis), sorted by principal
/// argument.
pub fn nth_roots(a: Complex64, n: u32) -> Result<Vec<Complex64>> {
    ensure_finite(a)?;
    if a.norm() == 0.0 {
        return Err(Error::ZeroInput);
    }
    let n = n.max(1);
    let modulus = a.norm().powf(1.0 / n as f64);
    let mut base_arg = a.arg();
    if base_arg <= -std::f64::consts::PI {
        base_arg = std::f64::consts::PI;
    }
    let mut out: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(modulus, (base_arg + TAU * j as f64) / n as f64))
        .collect();
    sort_by_principal_arg(&mut out);
    Ok(out)
}

/// The rotated disk automorphism `z -> e^{i theta} (z - a) / (1 - conj(a) z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskAutomorphism {
    a: Complex64,
    theta: f64,
}

impl DiskAutomorphism {
    pub fn new(a: Complex64, theta: f64) -> Result<Self> {
        ensure_finite(a)?;
        if a.norm() >= 1.0 - ZERO_MARGIN {
            return Err(Error::ZeroOutsideDisk(a));
        }
        Ok(DiskAutomorphism {
            a,
            theta: theta.rem_euclid(TAU),
        })
    }

    /// The normalized automorphism `sigma_a` (no rotation).
    pub fn normalized(a: Complex64) -> Result<Self> {
        DiskAutomorphism::new(a, 0.0)
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        let rot = Complex64::from_polar(1.0, self.theta);
        rot * (z - self.a) / (Complex64::new(1.0, 0.0) - self.a.conj() * z)
    }

    pub fn apply_inverse(&self, w: Complex64) -> Complex64 {
        let unrot = Complex64::from_polar(1.0, -self.theta) * w;
        (unrot + self.a) / (Complex64::new(1.0, 0.0) + self.a.conj() * unrot)
    }

    /// This automorphism as a degree-1 Blaschke product.
    pub fn as_product(&self) -> BlaschkeProduct {
        BlaschkeProduct::new(Complex64::from_polar(1.0, self.theta), vec![self.a])
            .expect("automorphism data already validated")
    }
}

/// A finite Blaschke product: unimodular constant plus zero multiset in the
/// open unit disk.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    mu: Complex64,
    zeros: Vec<Complex64>,
}

/// One fiber `B^{-1}(lambda)` for a unimodular target, radially projected onto
/// the unit circle and sorted by principal argument.
#[derive(Debug, Clone, PartialEq)]
pub struct PreimageFiber {
    pub lambda: Complex64,
    pub points: Vec<Complex64>,
    /// Largest distance of a raw solver root from the unit circle, before the
    /// radial projection.
    pub max_radial_deviation: f64,
}

impl BlaschkeProduct {
    pub fn new(mu: Complex64, zeros: Vec<Complex64>) -> Result<Self> {
        ensure_finite(mu)?;
        if (mu.norm() - 1.0).abs() > MU_TOLERANCE {
            return Err(Error::NonUnimodularConstant(mu));
        }
        if zeros.is_empty() {
            return Err(Error::EmptyZeroSet);
        }
        for &a in &zeros {
            ensure_finite(a)?;
            if a.norm() >= 1.0 - ZERO_MARGIN {
                return Err(Error::ZeroOutsideDisk(a));
            }
        }
        Ok(BlaschkeProduct { mu, zeros })
    }

    /// Product with constant 1 and the given zeros.
    pub fn from_zeros(zeros: Vec<Complex64>) -> Result<Self> {
        BlaschkeProduct::new(Complex64::new(1.0, 0.0), zeros)
    }

    /// The monomial `z^n`.
    pub fn power(n: usize) -> Self {
        BlaschkeProduct {
            mu: Complex64::new(1.0, 0.0),
            zeros: vec![Complex64::new(0.0, 0.0); n.max(1)],
        }
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn mu(&self) -> Complex64 {
        self.mu
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    /// Largest zero modulus; the fiber polynomial roots all lie outside this
    /// radius.
    pub fn max_zero_modulus(&self) -> f64 {
        self.zeros.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Evaluates the product at `z`.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        ensure_finite(z)?;
        let one = Complex64::new(1.0, 0.0);
        let mut acc = self.mu;
        for &a in &self.zeros {
            let denom = one - a.conj() * z;
            if denom.norm() < POLE_GUARD {
                return Err(Error::PoleProximity {
                    z,
                    dist: denom.norm(),
                });
            }
            acc *= (z - a) / denom;
        }
        Ok(acc)
    }

    /// Evaluates `B'(z)` by the product rule,
    /// `mu * sum_j sigma'_{a_j}(z) prod_{k != j} sigma_{a_k}(z)`,
    /// which stays well defined at the zeros themselves.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        ensure_finite(z)?;
        let one = Complex64::new(1.0, 0.0);
        let n = self.zeros.len();
        let mut factors = Vec::with_capacity(n);
        let mut factor_derivs = Vec::with_capacity(n);
        for &a in &self.zeros {
            let denom = one - a.conj() * z;
            if denom.norm() < POLE_GUARD {
                return Err(Error::PoleProximity {
                    z,
                    dist: denom.norm(),
                });
            }
            factors.push((z - a) / denom);
            factor_derivs.push(Complex64::new(1.0 - a.norm_sqr(), 0.0) / (denom * denom));
        }
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..n {
            let mut term = factor_derivs[j];
            for (k, &f) in factors.iter().enumerate() {
                if k != j {
                    term *= f;
                }
            }
            sum += term;
        }
        Ok(self.mu * sum)
    }

    /// Ascending coefficients of the numerator polynomial of `B'`,
    /// `mu * sum_j (1 - |a_j|^2) prod_{k != j} (z - a_k)(1 - conj(a_k) z)`,
    /// of degree at most `2n - 2`.
    fn derivative_numerator(&self) -> Vec<Complex64> {
        let n = self.zeros.len();
        let mut acc = vec![Complex64::new(0.0, 0.0); 2 * n - 1];
        for j in 0..n {
            let others: Vec<Complex64> = self
                .zeros
                .iter()
                .enumerate()
                .filter_map(|(k, &a)| (k != j).then_some(a))
                .collect();
            let numer = poly::from_roots(&others);
            let recip = poly::conjugate_reciprocal(&others);
            let term = poly::multiply(&numer, &recip);
            let weight = self.mu * (1.0 - self.zeros[j].norm_sqr());
            for (k, &c) in term.iter().enumerate() {
                acc[k] += weight * c;
            }
        }
        acc
    }

    /// All roots of `B'` inside the open unit disk, with multiplicity.
    ///
    /// Multiple critical points (conjugated power maps have one of
    /// multiplicity n-1) are collapsed to a single refined location, so the
    /// returned copies agree to near machine precision.
    pub fn critical_points(&self) -> Result<Vec<Complex64>> {
        assert!(self.degree() >= 2, "critical points need degree >= 2");
        let numerator = self.derivative_numerator();
        let raw = AberthSolver::default().find_roots(&numerator)?;
        let refined = refine_clusters(&numerator, &raw, CLUSTER_LINK_RADIUS, CLUSTER_VERIFY_TOL);
        let mut inside: Vec<Complex64> = refined.into_iter().filter(|z| z.norm() < 1.0).collect();
        sort_by_principal_arg(&mut inside);
        Ok(inside)
    }

    /// Ascending coefficients of `mu * N(z) - t * D(z)` whose roots are the
    /// preimages of `t`.
    fn fiber_polynomial(&self, t: Complex64) -> Vec<Complex64> {
        let numer = poly::from_roots(&self.zeros);
        let recip = poly::conjugate_reciprocal(&self.zeros);
        let coeffs = poly::linear_combination(self.mu, &numer, -t, &recip);
        // |lead| >= 1 - |t| * prod |a_j| > 0 whenever |t| <= 1, so the fiber
        // polynomial always has full degree
        let lead = coeffs[self.degree()].norm();
        assert!(
            lead > 1e-14,
            "degenerate leading coefficient {lead:e} cannot occur for |t| <= 1"
        );
        coeffs
    }

    fn fiber_solver(&self) -> AberthSolver {
        AberthSolver {
            // start the iteration just outside the annulus that contains the
            // zeros; every fiber root lies beyond max |a_j|
            initial_radius: Some((1.0 + self.max_zero_modulus()) / 2.0),
            ..AberthSolver::default()
        }
    }

    /// The n preimages of a unimodular `lambda`, projected onto the unit
    /// circle and sorted by principal argument.
    pub fn preimages(&self, lambda: Complex64) -> Result<PreimageFiber> {
        ensure_finite(lambda)?;
        assert!(
            (lambda.norm() - 1.0).abs() <= MU_TOLERANCE,
            "preimage target must be unimodular, got |lambda| = {}",
            lambda.norm()
        );
        let coeffs = self.fiber_polynomial(lambda);
        let roots = self.fiber_solver().find_roots(&coeffs)?;
        let mut max_radial_deviation = 0.0_f64;
        let mut points = Vec::with_capacity(roots.len());
        for root in roots {
            let dist = (root.norm() - 1.0).abs();
            if dist > OFF_CIRCLE_LIMIT {
                return Err(Error::OffCircleRoot { root, dist });
            }
            max_radial_deviation = max_radial_deviation.max(dist);
            points.push(root / root.norm());
        }
        sort_by_principal_arg(&mut points);
        for &p in &points {
            let residual = (self.evaluate(p)? - lambda).norm();
            if residual > 1e-10 {
                return Err(Error::RootFindingDivergence);
            }
        }
        Ok(PreimageFiber {
            lambda,
            points,
            max_radial_deviation,
        })
    }

    /// The n preimages of a target anywhere in the closed disk, without the
    /// on-circle projection. Used for composition and concyclicity checks.
    pub fn preimages_interior(&self, target: Complex64) -> Result<Vec<Complex64>> {
        ensure_finite(target)?;
        let coeffs = self.fiber_polynomial(target);
        let mut roots = self.fiber_solver().find_roots(&coeffs)?;
        sort_by_principal_arg(&mut roots);
        Ok(roots)
    }

    /// The composition `outer(inner(z))` as a Blaschke product.
    ///
    /// Its zeros are the preimages under `inner` of the zeros of `outer`; the
    /// constant is fixed by matching values at z = 1.
    pub fn compose(outer: &BlaschkeProduct, inner: &BlaschkeProduct) -> Result<BlaschkeProduct> {
        let mut zeros = Vec::with_capacity(outer.degree() * inner.degree());
        for &w in outer.zeros() {
            zeros.extend(inner.preimages_interior(w)?);
        }
        let one = Complex64::new(1.0, 0.0);
        let raw = BlaschkeProduct::new(one, zeros)?;
        let at_one = outer.evaluate(inner.evaluate(one)?)?;
        let mut mu = at_one / raw.evaluate(one)?;
        mu /= mu.norm();
        BlaschkeProduct::new(mu, raw.zeros)
    }
}
