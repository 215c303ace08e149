//! Simultaneous polynomial root finding (Aberth–Ehrlich iteration).
//!
//! The solver returns every complex root at once, which is what the fiber and
//! critical-point computations need. Multiple roots come out of the raw
//! iteration as a cluster smeared over a radius of roughly `eps^(1/m)`;
//! [`refine_clusters`] collapses such a cluster back to a single point by
//! running Newton on the (m-1)-th derivative, where the root is simple again.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly;

/// Aberth–Ehrlich solver for dense complex polynomials.
#[derive(Debug, Clone)]
pub struct AberthSolver {
    /// Iteration cap before reporting divergence.
    pub max_iterations: usize,
    /// Convergence threshold on the per-root correction step.
    pub step_tolerance: f64,
    /// Radius of the circle the initial guesses are placed on. When absent, a
    /// geometric-mean estimate from the extreme coefficients is used.
    pub initial_radius: Option<f64>,
}

impl Default for AberthSolver {
    fn default() -> Self {
        AberthSolver {
            max_iterations: 200,
            step_tolerance: 1e-13,
            initial_radius: None,
        }
    }
}

impl AberthSolver {
    /// Finds all roots of the polynomial with ascending coefficients `coeffs`.
    ///
    /// Exact zero trailing coefficients are deflated into roots at the origin
    /// first, so monomial-heavy inputs keep their multiplicity exactly.
    pub fn find_roots(&self, coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
        let len = poly::trimmed_len(coeffs);
        if len <= 1 {
            // constant polynomial: no roots (the zero polynomial never reaches
            // this point in practice and has no meaningful root set either)
            return Ok(Vec::new());
        }
        let coeffs = &coeffs[..len];

        // deflate exact roots at the origin
        let mut at_origin = 0;
        while at_origin < coeffs.len() - 1 && coeffs[at_origin].norm() == 0.0 {
            at_origin += 1;
        }
        let mut roots = vec![Complex64::new(0.0, 0.0); at_origin];
        let reduced = &coeffs[at_origin..];
        if reduced.len() > 1 {
            roots.extend(self.solve_reduced(reduced)?);
        }
        Ok(roots)
    }

    fn solve_reduced(&self, coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
        let degree = coeffs.len() - 1;
        if degree == 1 {
            return Ok(vec![-coeffs[0] / coeffs[1]]);
        }

        let deriv = poly::derivative(coeffs);
        let radius = self.initial_radius.unwrap_or_else(|| {
            let ratio = (coeffs[0].norm() / coeffs[degree].norm()).powf(1.0 / degree as f64);
            ratio.clamp(1e-3, 1e3)
        });

        // distinct start angles with an offset so real-axis symmetry cannot
        // stall the iteration
        let mut z: Vec<Complex64> = (0..degree)
            .map(|k| {
                let angle = std::f64::consts::TAU * k as f64 / degree as f64 + 0.43;
                Complex64::from_polar(radius, angle)
            })
            .collect();
        let mut frozen = vec![false; degree];

        for _ in 0..self.max_iterations {
            let mut all_frozen = true;
            for i in 0..degree {
                if frozen[i] {
                    continue;
                }
                let p = poly::eval(coeffs, z[i]);
                // backward-error floor: the root is as good as exact once the
                // residual drops to coefficient rounding level
                let floor = 4.0 * degree as f64 * f64::EPSILON * poly::eval_magnitude(coeffs, z[i].norm());
                if p.norm() <= floor {
                    frozen[i] = true;
                    continue;
                }
                let dp = poly::eval(&deriv, z[i]);
                let newton = if dp.norm() == 0.0 {
                    // exactly at a critical point of the polynomial: nudge off
                    Complex64::new(self.step_tolerance, self.step_tolerance)
                } else {
                    p / dp
                };
                let mut repulsion = Complex64::new(0.0, 0.0);
                for j in 0..degree {
                    if j != i {
                        let diff = z[i] - z[j];
                        if diff.norm() > 0.0 {
                            repulsion += diff.inv();
                        }
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
                let correction = if denom.norm() < 1e-290 { newton } else { newton / denom };
                z[i] -= correction;
                if correction.norm() <= self.step_tolerance * (1.0 + z[i].norm()) {
                    frozen[i] = true;
                } else {
                    all_frozen = false;
                }
            }
            if all_frozen {
                for zi in z.iter_mut() {
                    *zi = polish(coeffs, &deriv, *zi);
                }
                return Ok(z);
            }
        }
        Err(Error::RootFindingDivergence)
    }
}

/// A few Newton steps, each kept only if it reduces the residual.
fn polish(coeffs: &[Complex64], deriv: &[Complex64], mut z: Complex64) -> Complex64 {
    let mut best = poly::eval(coeffs, z).norm();
    for _ in 0..3 {
        let dp = poly::eval(deriv, z);
        if dp.norm() == 0.0 {
            break;
        }
        let candidate = z - poly::eval(coeffs, z) / dp;
        let residual = poly::eval(coeffs, candidate).norm();
        if residual < best {
            z = candidate;
            best = residual;
        } else {
            break;
        }
    }
    z
}

/// Collapses root clusters that represent genuine multiple roots.
///
/// Roots within `link_radius` of each other (transitively) form a candidate
/// cluster of size m. The cluster is accepted as an m-fold root only if, after
/// Newton refinement on the (m-1)-th derivative, all lower derivatives vanish
/// to within `verify_rel_tol` of their magnitude scale; otherwise the raw
/// cluster members are kept unchanged.
pub fn refine_clusters(
    coeffs: &[Complex64],
    roots: &[Complex64],
    link_radius: f64,
    verify_rel_tol: f64,
) -> Vec<Complex64> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (roots[i] - roots[j]).norm() <= link_radius {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }

    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut cluster_of = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if cluster_of[r] == usize::MAX {
            cluster_of[r] = clusters.len();
            clusters.push(Vec::new());
        }
        clusters[cluster_of[r]].push(i);
    }

    // derivative ladder up to the largest cluster size
    let max_m = clusters.iter().map(|c| c.len()).max().unwrap_or(1);
    let mut ladder: Vec<Vec<Complex64>> = vec![coeffs.to_vec()];
    for _ in 0..max_m {
        let next = poly::derivative(ladder.last().unwrap());
        ladder.push(next);
    }

    let mut out = roots.to_vec();
    for cluster in &clusters {
        let m = cluster.len();
        if m < 2 {
            continue;
        }
        let centroid = cluster.iter().map(|&i| roots[i]).sum::<Complex64>() / m as f64;
        if let Some(refined) = refine_multiple(&ladder, centroid, m, verify_rel_tol) {
            for &i in cluster {
                out[i] = refined;
            }
        }
    }
    out
}

fn refine_multiple(
    ladder: &[Vec<Complex64>],
    start: Complex64,
    m: usize,
    verify_rel_tol: f64,
) -> Option<Complex64> {
    // the m-fold root is a simple, well-conditioned root of the (m-1)-th
    // derivative; plain Newton converges quadratically there
    let target = &ladder[m - 1];
    let target_deriv = &ladder[m];
    let mut z = start;
    for _ in 0..60 {
        let d = poly::eval(target_deriv, z);
        if d.norm() == 0.0 {
            return None;
        }
        let step = poly::eval(target, z) / d;
        z -= step;
        if step.norm() <= 1e-15 * (1.0 + z.norm()) {
            break;
        }
    }
    // all derivatives below order m must vanish at a genuine m-fold root
    for level in ladder.iter().take(m) {
        let scale = poly::eval_magnitude(level, z.norm()).max(f64::MIN_POSITIVE);
        if poly::eval(level, z).norm() > verify_rel_tol * scale {
            return None;
        }
    }
    Some(z)
}
