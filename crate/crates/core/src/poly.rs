//! Dense polynomial helpers over complex coefficients.
//!
//! Coefficients are stored in ascending order: `c[k]` multiplies `z^k`.

use num_complex::Complex64;

/// Coefficients of the monic polynomial with the given roots.
pub(crate) fn from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        // multiply by (z - r)
        coeffs.push(Complex64::new(0.0, 0.0));
        for k in (0..coeffs.len()).rev() {
            let lower = if k == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                coeffs[k - 1]
            };
            coeffs[k] = lower - r * coeffs[k];
        }
    }
    coeffs
}

/// Coefficients of `prod_j (1 - conj(a_j) z)`.
pub(crate) fn conjugate_reciprocal(zeros: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &a in zeros {
        let w = a.conj();
        // multiply by (1 - w z)
        coeffs.push(Complex64::new(0.0, 0.0));
        for k in (0..coeffs.len()).rev() {
            let lower = if k == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                coeffs[k - 1]
            };
            coeffs[k] = coeffs[k] - w * lower;
        }
    }
    coeffs
}

/// `alpha * p + beta * q`, padded to the longer length.
pub(crate) fn linear_combination(
    alpha: Complex64,
    p: &[Complex64],
    beta: Complex64,
    q: &[Complex64],
) -> Vec<Complex64> {
    let len = p.len().max(q.len());
    let mut out = vec![Complex64::new(0.0, 0.0); len];
    for (k, c) in out.iter_mut().enumerate() {
        let a = p.get(k).copied().unwrap_or_default();
        let b = q.get(k).copied().unwrap_or_default();
        *c = alpha * a + beta * b;
    }
    out
}

pub(crate) fn multiply(p: &[Complex64], q: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); p.len() + q.len() - 1];
    for (i, &a) in p.iter().enumerate() {
        for (j, &b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

pub(crate) fn derivative(p: &[Complex64]) -> Vec<Complex64> {
    if p.len() <= 1 {
        return vec![Complex64::new(0.0, 0.0)];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

/// Horner evaluation.
pub(crate) fn eval(p: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in p.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// `sum_k |c_k| r^k`; the natural scale for evaluation-error bounds at |z| = r.
pub(crate) fn eval_magnitude(p: &[Complex64], r: f64) -> f64 {
    let mut acc = 0.0;
    for &c in p.iter().rev() {
        acc = acc * r + c.norm();
    }
    acc
}

/// Drops leading (high-order) coefficients that are negligible relative to the
/// largest coefficient. Returns the number of retained coefficients.
pub(crate) fn trimmed_len(p: &[Complex64]) -> usize {
    let max_mag = p.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    if max_mag == 0.0 {
        return 0;
    }
    let cut = max_mag * 1e-14;
    let mut len = p.len();
    while len > 0 && p[len - 1].norm() <= cut {
        len -= 1;
    }
    len
}
