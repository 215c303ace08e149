//! Boundary interpolation through the upper-half-plane model.
//!
//! Given two interleaved n-tuples on the unit circle, a degree-n Blaschke
//! product exists that sends each tuple to a single common value. The
//! construction transfers the circle to the real line with
//! `phi(z) = i (1 + z) / (1 - z)`, forms the real rational map
//! `F(x) = prod (x - phi(w_j)) / prod (x - phi(z_j))`, and conjugates back:
//! `B = phi^{-1} . F . phi`. Then every `w_j` maps to `phi^{-1}(0) = -1` and
//! every `z_j` maps to `phi^{-1}(inf) = 1`.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::blaschke::{principal_arg, sort_by_principal_arg};
use crate::error::{Error, Result};
use crate::poly;
use crate::roots::AberthSolver;

/// Inputs this close to the pole at z = 1 are rejected.
const POLE_AT_ONE_TOL: f64 = 1e-12;
/// Nodes must sit on the unit circle within this tolerance.
const NODE_CIRCLE_TOL: f64 = 1e-9;

/// The fixed Cayley-type transfer between the disk and the upper half plane.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HalfPlaneMap;

impl HalfPlaneMap {
    /// `phi(z) = i (1 + z) / (1 - z)`; maps the disk to the upper half plane
    /// and the circle minus {1} to the real line.
    pub fn to_half_plane(z: Complex64) -> Result<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        if (one - z).norm() < POLE_AT_ONE_TOL {
            return Err(Error::PoleAtOne);
        }
        Ok(Complex64::new(0.0, 1.0) * (one + z) / (one - z))
    }

    /// `phi^{-1}(w) = (w - i) / (w + i)`.
    pub fn to_disk(w: Complex64) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        (w - i) / (w + i)
    }
}

/// Two n-tuples on the unit circle whose principal arguments strictly
/// interleave: `arg z_1 < arg w_1 < arg z_2 < ... < arg z_n < arg w_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct InterleavedSpec {
    zs: Vec<Complex64>,
    ws: Vec<Complex64>,
}

impl InterleavedSpec {
    pub fn new(mut zs: Vec<Complex64>, mut ws: Vec<Complex64>) -> Result<Self> {
        if zs.len() != ws.len() || zs.is_empty() {
            return Err(Error::InterleavingViolated);
        }
        let one = Complex64::new(1.0, 0.0);
        for &p in zs.iter().chain(ws.iter()) {
            if (p.norm() - 1.0).abs() > NODE_CIRCLE_TOL {
                return Err(Error::ChordOffCircle(p));
            }
            if (p - one).norm() < POLE_AT_ONE_TOL {
                return Err(Error::PoleAtOne);
            }
        }
        sort_by_principal_arg(&mut zs);
        sort_by_principal_arg(&mut ws);
        let mut merged = Vec::with_capacity(2 * zs.len());
        for (z, w) in zs.iter().zip(ws.iter()) {
            merged.push(principal_arg(*z));
            merged.push(principal_arg(*w));
        }
        if !merged.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::InterleavingViolated);
        }
        Ok(InterleavedSpec { zs, ws })
    }

    pub fn zs(&self) -> &[Complex64] {
        &self.zs
    }

    pub fn ws(&self) -> &[Complex64] {
        &self.ws
    }

    pub fn degree(&self) -> usize {
        self.zs.len()
    }
}

impl Default for InterleavedSpec {
    /// The built-in example: z-nodes `zeta_8 * zeta_3^k` and w-nodes
    /// `{i, -1, zeta_8^7}`, interleaved triples built from eighth and third
    /// roots of unity.
    fn default() -> Self {
        let zeta8 = Complex64::from_polar(1.0, TAU / 8.0);
        let zeta3 = Complex64::from_polar(1.0, TAU / 3.0);
        InterleavedSpec::new(
            vec![zeta8, zeta8 * zeta3, zeta8 * zeta3 * zeta3],
            vec![
                Complex64::new(0.0, 1.0),
                Complex64::new(-1.0, 0.0),
                Complex64::from_polar(1.0, 7.0 * TAU / 8.0),
            ],
        )
        .expect("built-in nodes interleave")
    }
}

/// The interpolating map `B = phi^{-1} . F . phi` as an evaluator, together
/// with the real nodes of the rational map `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpolant {
    spec: InterleavedSpec,
    /// `phi` images of the z-nodes; poles of `F`.
    pole_nodes: Vec<f64>,
    /// `phi` images of the w-nodes; zeros of `F`.
    zero_nodes: Vec<f64>,
}

/// Builds the interpolant for the given interleaved spec.
pub fn build_interpolant(spec: InterleavedSpec) -> Result<Interpolant> {
    let pole_nodes = spec
        .zs
        .iter()
        .map(|&z| HalfPlaneMap::to_half_plane(z).map(|w| w.re))
        .collect::<Result<Vec<f64>>>()?;
    let zero_nodes = spec
        .ws
        .iter()
        .map(|&w| HalfPlaneMap::to_half_plane(w).map(|v| v.re))
        .collect::<Result<Vec<f64>>>()?;
    Ok(Interpolant {
        spec,
        pole_nodes,
        zero_nodes,
    })
}

impl Interpolant {
    pub fn spec(&self) -> &InterleavedSpec {
        &self.spec
    }

    pub fn degree(&self) -> usize {
        self.spec.degree()
    }

    /// Evaluates `B(z)`.
    ///
    /// The composite `phi^{-1}(F(x))` is computed projectively as
    /// `(num - i den) / (num + i den)` with `num = prod (x - beta_j)` and
    /// `den = prod (x - alpha_j)`, so the poles of `F` (where `B = 1`) never
    /// produce an actual division by zero. The pole of `phi` at z = 1 is
    /// removable for the composite (`F` is monic over monic), so
    /// `B(1) = phi^{-1}(1) = -i`.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        if (one - z).norm() < POLE_AT_ONE_TOL {
            return Ok(Complex64::new(0.0, -1.0));
        }
        let x = HalfPlaneMap::to_half_plane(z)?;
        let mut num = Complex64::new(1.0, 0.0);
        let mut den = Complex64::new(1.0, 0.0);
        for &beta in &self.zero_nodes {
            num *= x - beta;
        }
        for &alpha in &self.pole_nodes {
            den *= x - alpha;
        }
        let i = Complex64::new(0.0, 1.0);
        Ok((num - i * den) / (num + i * den))
    }

    /// `B(0)`, the image of the disk center.
    pub fn origin_image(&self) -> Complex64 {
        self.evaluate(Complex64::new(0.0, 0.0))
            .expect("origin is not a pole")
    }

    /// Ascending coefficients of the polynomial whose roots are the solutions
    /// of `B(z) = t`, obtained by clearing denominators in
    /// `F(phi(z)) = phi(t)`:
    /// `prod ((beta_j + i) z + (i - beta_j)) - phi(t) prod ((alpha_j + i) z + (i - alpha_j))`.
    fn fiber_polynomial(&self, target_image: Complex64) -> Vec<Complex64> {
        let i = Complex64::new(0.0, 1.0);
        let linear = |node: f64| -> Vec<Complex64> {
            let node = Complex64::new(node, 0.0);
            vec![i - node, node + i]
        };
        let mut num = vec![Complex64::new(1.0, 0.0)];
        for &beta in &self.zero_nodes {
            num = poly::multiply(&num, &linear(beta));
        }
        let mut den = vec![Complex64::new(1.0, 0.0)];
        for &alpha in &self.pole_nodes {
            den = poly::multiply(&den, &linear(alpha));
        }
        poly::linear_combination(
            Complex64::new(1.0, 0.0),
            &num,
            -target_image,
            &den,
        )
    }

    /// The n solutions of `B(z) = t` for a target in the closed disk with
    /// `t != 1`, sorted by principal argument.
    pub fn preimages(&self, t: Complex64) -> Result<Vec<Complex64>> {
        let image = HalfPlaneMap::to_half_plane(t)?;
        let coeffs = self.fiber_polynomial(image);
        let mut roots = AberthSolver::default().find_roots(&coeffs)?;
        sort_by_principal_arg(&mut roots);
        Ok(roots)
    }

    /// The zero set of `B`, recovered by solving `B(z) = 0`.
    pub fn zeros(&self) -> Result<Vec<Complex64>> {
        self.preimages(Complex64::new(0.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn transfer_round_trip() {
        for k in 0..40 {
            let z = Complex64::from_polar(0.02 * k as f64, 0.7 * k as f64);
            let w = HalfPlaneMap::to_half_plane(z).unwrap();
            assert!((HalfPlaneMap::to_disk(w) - z).norm() < 1e-12);
            assert!(w.im > 0.0 || z.norm() < 1e-12 && (w - c(0.0, 1.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn transfer_sends_circle_to_reals() {
        for k in 1..32 {
            let z = Complex64::from_polar(1.0, TAU * k as f64 / 32.0);
            let w = HalfPlaneMap::to_half_plane(z).unwrap();
            assert!(w.im.abs() < 1e-12, "phi({z}) = {w}");
        }
        assert!(matches!(
            HalfPlaneMap::to_half_plane(c(1.0, 0.0)),
            Err(Error::PoleAtOne)
        ));
    }

    #[test]
    fn builtin_nodes_order_on_the_real_line() {
        let spec = InterleavedSpec::default();
        let phi =
            |z: Complex64| HalfPlaneMap::to_half_plane(z).unwrap().re;
        let ordered = [
            phi(spec.zs()[0]),
            phi(spec.ws()[0]),
            phi(spec.zs()[1]),
            phi(spec.ws()[1]),
            phi(spec.zs()[2]),
            phi(spec.ws()[2]),
        ];
        assert!(ordered.windows(2).all(|p| p[0] < p[1]), "{ordered:?}");
    }

    #[test]
    fn interpolant_sends_tuples_to_common_values() {
        let interp = build_interpolant(InterleavedSpec::default()).unwrap();
        let z_images: Vec<Complex64> = interp
            .spec()
            .zs()
            .iter()
            .map(|&z| interp.evaluate(z).unwrap())
            .collect();
        let w_images: Vec<Complex64> = interp
            .spec()
            .ws()
            .iter()
            .map(|&w| interp.evaluate(w).unwrap())
            .collect();
        for img in &z_images {
            assert!((img - c(1.0, 0.0)).norm() <= 1e-9, "z image {img}");
        }
        for img in &w_images {
            assert!((img - c(-1.0, 0.0)).norm() <= 1e-9, "w image {img}");
        }
    }

    #[test]
    fn cube_separates_the_w_tuple() {
        let spec = InterleavedSpec::default();
        let cubed: Vec<Complex64> = spec.ws().iter().map(|w| w.powu(3)).collect();
        for i in 0..cubed.len() {
            for j in (i + 1)..cubed.len() {
                assert!((cubed[i] - cubed[j]).norm() >= 0.1);
            }
        }
        // while the z tuple collapses: all three cubes coincide
        let z_cubed: Vec<Complex64> = spec.zs().iter().map(|z| z.powu(3)).collect();
        for i in 1..z_cubed.len() {
            assert!((z_cubed[0] - z_cubed[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn interpolant_is_unimodular_on_the_circle() {
        let interp = build_interpolant(InterleavedSpec::default()).unwrap();
        for k in 1..100 {
            let z = Complex64::from_polar(1.0, TAU * k as f64 / 101.0);
            let image = interp.evaluate(z).unwrap();
            assert!((image.norm() - 1.0).abs() <= 1e-9, "at {z}: |B| = {}", image.norm());
        }
    }

    #[test]
    fn fibers_have_full_degree() {
        let interp = build_interpolant(InterleavedSpec::default()).unwrap();
        for k in 0..10 {
            let t = Complex64::from_polar(1.0, 0.37 + TAU * k as f64 / 10.0);
            let fiber = interp.preimages(t).unwrap();
            assert_eq!(fiber.len(), 3);
            for z in &fiber {
                assert!((interp.evaluate(*z).unwrap() - t).norm() <= 1e-8);
            }
        }
    }

    #[test]
    fn zeros_live_inside_the_disk() {
        let interp = build_interpolant(InterleavedSpec::default()).unwrap();
        let zeros = interp.zeros().unwrap();
        assert_eq!(zeros.len(), 3);
        for z in &zeros {
            assert!(z.norm() < 1.0);
            assert!(interp.evaluate(*z).unwrap().norm() <= 1e-9);
        }
    }

    #[test]
    fn swapped_roles_need_relabeling() {
        // a literal role swap puts a w-node first in argument, which breaks
        // the half-plane orientation; the spec constructor rejects it and the
        // caller is expected to swap the labels back
        let spec = InterleavedSpec::default();
        let swapped = InterleavedSpec::new(spec.ws().to_vec(), spec.zs().to_vec());
        assert!(matches!(swapped, Err(Error::InterleavingViolated)));
        let relabeled =
            InterleavedSpec::new(spec.zs().to_vec(), spec.ws().to_vec()).unwrap();
        assert_eq!(&relabeled, &spec);
    }

    #[test]
    fn non_interleaved_nodes_are_rejected() {
        // after sorting: z = 0.3, 0.5, 3.0 and w = 0.4, 0.45, 5.0, so the
        // second w-node precedes the second z-node
        let bad = InterleavedSpec::new(
            vec![
                Complex64::from_polar(1.0, 0.3),
                Complex64::from_polar(1.0, 0.5),
                Complex64::from_polar(1.0, 3.0),
            ],
            vec![
                Complex64::from_polar(1.0, 0.4),
                Complex64::from_polar(1.0, 0.45),
                Complex64::from_polar(1.0, 5.0),
            ],
        );
        assert!(matches!(bad, Err(Error::InterleavingViolated)));
    }

    #[test]
    fn node_at_one_is_rejected() {
        let bad = InterleavedSpec::new(
            vec![c(1.0, 0.0), Complex64::from_polar(1.0, 2.0)],
            vec![
                Complex64::from_polar(1.0, 1.0),
                Complex64::from_polar(1.0, 3.0),
            ],
        );
        assert!(matches!(bad, Err(Error::PoleAtOne)));
    }

    #[test]
    fn origin_image_is_reported_not_asserted() {
        let interp = build_interpolant(InterleavedSpec::default()).unwrap();
        let b0 = interp.origin_image();
        assert!(b0.norm() < 1.0, "B(0) = {b0} must stay in the disk");
    }
}
