//! Continuous weights with truncated infinite products.
//!
//! `(b; q)_∞` stops at the first `K` with `q^K < 1e-18`; later factors differ
//! from 1 by less than binary64 resolution for the `|b| <= 1` used here.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{invalid, Result};

use super::finite;

const CUTOFF: f64 = 1e-18;

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0 && q < 1.0) {
        return invalid(format!("q = {q} must lie in (0, 1)"));
    }
    Ok(())
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta < PI) {
        return invalid(format!("theta = {theta} must lie strictly inside (0, π)"));
    }
    Ok(())
}

/// `(b; q)_∞` truncated as described in the module docs.
pub fn qproduct_inf(b: Complex64, q: f64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut qk = 1.0;
    while qk >= CUTOFF {
        acc *= Complex64::new(1.0, 0.0) - b * qk;
        qk *= q;
    }
    acc
}

fn real_qproduct_inf(bs: &[f64], q: f64) -> f64 {
    bs.iter().map(|&b| qproduct_inf(Complex64::new(b, 0.0), q).re).product()
}

/// `w_{β,q}(cos θ) = (1 - x²)^{-1/2} |(e^{2iθ}; q)_∞ / (q^{1/2}β e^{2iθ}; q)_∞|²`.
pub fn cqu_weight(q: f64, beta: f64, theta: f64) -> Result<f64> {
    check_q(q)?;
    check_theta(theta)?;
    let c = q.sqrt() * beta;
    let f = |z2: Complex64| qproduct_inf(z2, q) / qproduct_inf(z2 * c, q);
    let z2 = Complex64::from_polar(1.0, 2.0 * theta);
    let modsq = (f(z2) * f(z2.conj())).re;
    finite(modsq / theta.sin(), "cqu weight")
}

/// `w[e^{iθ}] = |(z²; q)_∞ / (az, bz, cz, dz; q)_∞|²`, a weight for `dθ`.
pub fn aw_weight(params: &[f64; 4], q: f64, theta: f64) -> Result<f64> {
    check_q(q)?;
    check_theta(theta)?;
    let f = |z: Complex64| {
        params
            .iter()
            .fold(qproduct_inf(z * z, q), |acc, &a| acc / qproduct_inf(z * a, q))
    };
    let z = Complex64::from_polar(1.0, theta);
    finite((f(z) * f(z.conj())).re, "askey-wilson weight")
}

/// `h_0 = 4π (abcd; q)_∞ / (q, ab, ac, ad, bc, bd, cd; q)_∞`.
pub fn aw_h0(params: &[f64; 4], q: f64) -> Result<f64> {
    check_q(q)?;
    let [a, b, c, d] = *params;
    let num = real_qproduct_inf(&[a * b * c * d], q);
    let den = real_qproduct_inf(&[q, a * b, a * c, a * d, b * c, b * d, c * d], q);
    finite(4.0 * PI * num / den, "askey-wilson h_0")
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: f64 = 1.0 / 16.0;
    const BETA: f64 = 4.0 / 9.0;

    fn thetas() -> impl Iterator<Item = f64> {
        (1..12).map(|i| i as f64 * PI / 12.0 + 0.01)
    }

    #[test]
    fn weight_ratio_matches_exact_factor() {
        for th in thetas() {
            let x = th.cos();
            let c = Q.sqrt() * BETA;
            let exact = (1.0 + c).powi(2) - 4.0 * c * x * x;
            let ratio = cqu_weight(Q, Q * BETA, th).unwrap() / cqu_weight(Q, BETA, th).unwrap();
            assert!((ratio - exact).abs() < 1e-10, "{th}: {ratio} vs {exact}");
        }
    }

    #[test]
    fn cqu_weight_is_even() {
        for th in thetas() {
            let a = cqu_weight(Q, BETA, th).unwrap();
            let b = cqu_weight(Q, BETA, PI - th).unwrap();
            assert!((a - b).abs() < 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn aw_specialization_differs_by_sine() {
        let (t, s) = (Q.powf(0.25), BETA.sqrt());
        let params = [t * s, t.powi(3) * s, -t * s, -t.powi(3) * s];
        let ratios: Vec<f64> = thetas()
            .map(|th| aw_weight(&params, Q, th).unwrap() / (cqu_weight(Q, BETA, th).unwrap() * th.sin()))
            .collect();
        for r in &ratios {
            assert!((r - ratios[0]).abs() < 1e-10, "{ratios:?}");
        }
        assert!(ratios[0] > 0.0);
    }

    #[test]
    fn endpoints_rejected() {
        assert!(cqu_weight(Q, BETA, 0.0).is_err());
        assert!(cqu_weight(Q, BETA, PI).is_err());
        assert!(cqu_weight(1.5, BETA, 1.0).is_err());
    }
}
