//! Orthogonality by quadrature in `θ`, where `x = cos θ` removes the
//! `(1-x²)^{-1/2}` endpoint singularity.
//!
//! Composite trapezoid on `[0, π]` with node doubling. Both integrands used
//! here vanish at `θ = 0, π` (the factor `(e^{2iθ}; q)_∞`), and are smooth
//! and even in `θ`, so the rule converges geometrically.

use std::f64::consts::PI;

use crate::error::{invalid, Error, Result};
use crate::families::{cqu_params, cqu_r};
use crate::laurent::SymmetricLaurent;
use crate::params::QParams;

use super::weights::{aw_h0, aw_weight, cqu_weight};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    /// Initial number of subintervals, at least 64.
    pub min_points: usize,
    /// Successive refinements must agree to `tol` times `∫|f|`.
    pub tol: f64,
    pub max_points: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature { min_points: 64, tol: 1e-9, max_points: 1 << 20 }
    }
}

impl Quadrature {
    pub fn with_points(min_points: usize) -> Result<Self> {
        if min_points < 64 {
            return invalid(format!("quadrature needs at least 64 points (got {min_points})"));
        }
        Ok(Quadrature { min_points, ..Quadrature::default() })
    }

    /// `∫_0^π f(θ) dθ` for `f` vanishing at both ends.
    pub fn integrate(&self, f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
        let mut n = self.min_points.max(2);
        let mut h = PI / n as f64;
        let (mut sum, mut abs) = (0.0, 0.0);
        for i in 1..n {
            let v = f(i as f64 * h)?;
            sum += v;
            abs += v.abs();
        }
        let mut prev = sum * h;
        while n < self.max_points {
            n *= 2;
            h /= 2.0;
            for i in (1..n).step_by(2) {
                let v = f(i as f64 * h)?;
                sum += v;
                abs += v.abs();
            }
            let cur = sum * h;
            if (cur - prev).abs() <= self.tol * (abs * h) {
                return Ok(cur);
            }
            prev = cur;
        }
        Err(Error::NonConvergence(format!("quadrature exceeded {} nodes", self.max_points)))
    }
}

/// `∫ R_m R_n w_{β,q} dx` over `[-1, 1]`, written in `θ`.
pub fn cqu_gram_entry(
    rm: &SymmetricLaurent,
    rn: &SymmetricLaurent,
    q: f64,
    beta: f64,
    quad: &Quadrature,
) -> Result<f64> {
    quad.integrate(|th| Ok(rm.eval_cos(th) * rn.eval_cos(th) * cqu_weight(q, beta, th)? * th.sin()))
}

/// `|I_{mn}| / sqrt(I_{mm} I_{nn})` for the continuous q-ultraspherical
/// weight; vanishes up to quadrature error when `m != n`.
pub fn cqu_orthogonality_residual(qp: &QParams, m: usize, n: usize, quad: &Quadrature) -> Result<f64> {
    let (q, beta) = (qp.q().to_f64(), qp.beta().to_f64());
    let rm = cqu_r(m, qp)?;
    let rn = cqu_r(n, qp)?;
    let imn = cqu_gram_entry(&rm, &rn, q, beta, quad)?;
    let imm = cqu_gram_entry(&rm, &rm, q, beta, quad)?;
    let inn = cqu_gram_entry(&rn, &rn, q, beta, quad)?;
    Ok(imn.abs() / (imm * inn).sqrt())
}

/// Relative deviation of `∫_{|z|=1} w dz/(iz)` from the closed-form `h_0`,
/// for the Askey-Wilson parameters of the continuous q-ultraspherical family.
pub fn aw_h0_deviation(qp: &QParams, quad: &Quadrature) -> Result<f64> {
    let awp = cqu_params(qp);
    let params = [awp.a.to_f64(), awp.b.to_f64(), awp.c.to_f64(), awp.d.to_f64()];
    let q = awp.q.to_f64();
    // the weight is even in θ, so the full circle is twice the half
    let integral = 2.0 * quad.integrate(|th| aw_weight(&params, q, th))?;
    let exact = aw_h0(&params, q)?;
    Ok((integral - exact).abs() / exact.abs())
}
