//! Jacobi/ultraspherical polynomials and the finite discrete families
//! Krawtchouk, Hahn and dual Hahn.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::laurent::LaurentPoly;
use crate::rat::Rat;
use crate::series::{hyper_sum, pochhammer, Base};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobiParams {
    pub alpha: Rat,
    pub beta: Rat,
}

impl JacobiParams {
    pub fn new(alpha: Rat, beta: Rat) -> Result<Self> {
        if !(alpha > -1 && beta > -1) {
            return invalid(format!("Jacobi needs alpha, beta > -1 (got {alpha}, {beta})"));
        }
        Ok(JacobiParams { alpha, beta })
    }

    pub fn ultraspherical(alpha: Rat) -> Result<Self> {
        JacobiParams::new(alpha.clone(), alpha)
    }
}

/// Coefficients `c_k` of `R_n^{(α,β)}(x) = Σ c_k ((1-x)/2)^k`.
fn jacobi_shifted_coeffs(n: usize, jp: &JacobiParams) -> Vec<Rat> {
    let nn = Rat::from_int(n as i64);
    let top = &nn + &jp.alpha + &jp.beta + 1;
    let bottom = &jp.alpha + 1;
    let mut out = Vec::with_capacity(n + 1);
    let mut c = Rat::one();
    out.push(c.clone());
    for k in 0..n {
        let kk = Rat::from_int(k as i64);
        c = c * (&kk - &nn) * (&top + &kk) / ((&bottom + &kk) * (&kk + 1));
        out.push(c.clone());
    }
    out
}

/// `R_n^{(α,β)}(x) = P_n^{(α,β)}(x) / P_n^{(α,β)}(1)`.
pub fn jacobi_r(n: usize, jp: &JacobiParams, x: &Rat) -> Result<Rat> {
    let nn = Rat::from_int(n as i64);
    let arg = (Rat::one() - x) / 2;
    hyper_sum(
        &[-nn.clone(), &nn + &jp.alpha + &jp.beta + 1],
        &[&jp.alpha + 1],
        &arg,
        &Base::Unit,
        n,
    )
}

/// `R_n^{(α,β)}` as an ordinary polynomial in `x`.
pub fn jacobi_poly(n: usize, jp: &JacobiParams) -> LaurentPoly {
    let shifted = LaurentPoly::from_coeffs(&[Rat::new(1, 2), Rat::new(-1, 2)]);
    LaurentPoly::from_coeffs(&jacobi_shifted_coeffs(n, jp))
        .compose(&shifted)
        .expect("ordinary polynomial")
}

/// `R_n^α(x) = R_n^{(α,α)}(x)`.
pub fn ultraspherical_r(n: usize, alpha: &Rat, x: &Rat) -> Result<Rat> {
    jacobi_r(n, &JacobiParams::ultraspherical(alpha.clone())?, x)
}

/// Coefficients of `R_n^α` in powers of `x`, lowest first.
pub fn ultraspherical_coeffs(n: usize, alpha: &Rat) -> Result<Vec<Rat>> {
    let mut c = ultraspherical_poly(n, alpha)?.to_coeffs();
    c.resize(n + 1, Rat::zero());
    Ok(c)
}

pub fn ultraspherical_poly(n: usize, alpha: &Rat) -> Result<LaurentPoly> {
    Ok(jacobi_poly(n, &JacobiParams::ultraspherical(alpha.clone())?))
}

/// Legendre `P_n = R_n^0`.
pub fn legendre_poly(n: usize) -> LaurentPoly {
    jacobi_poly(n, &JacobiParams { alpha: Rat::zero(), beta: Rat::zero() })
}

/// Usual-normalization Jacobi `P_n^{(α,β)} = (α+1)_n / n! · R_n^{(α,β)}`.
pub fn jacobi_p_poly(n: usize, jp: &JacobiParams) -> LaurentPoly {
    let scale = pochhammer(&(&jp.alpha + 1), n) / pochhammer(&Rat::one(), n);
    jacobi_poly(n, jp).scale(&scale)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KrawtchoukParams {
    pub p: Rat,
    #[serde(rename = "N")]
    pub n_max: usize,
}

impl KrawtchoukParams {
    pub fn new(p: Rat, n_max: usize) -> Result<Self> {
        if !(p.is_positive() && p < 1) {
            return invalid(format!("Krawtchouk needs 0 < p < 1 (got {p})"));
        }
        if n_max < 1 {
            return invalid("Krawtchouk needs N >= 1");
        }
        Ok(KrawtchoukParams { p, n_max })
    }
}

fn check_grid(n: usize, x: usize, n_max: usize) -> Result<()> {
    if n > n_max || x > n_max {
        return invalid(format!("n = {n}, x = {x} must lie in 0..={n_max}"));
    }
    Ok(())
}

/// `K_n(x; p, N) = 2F1(-n, -x; -N; 1/p)`.
pub fn krawtchouk(n: usize, x: usize, kp: &KrawtchoukParams) -> Result<Rat> {
    check_grid(n, x, kp.n_max)?;
    hyper_sum(
        &[Rat::from_int(-(n as i64)), Rat::from_int(-(x as i64))],
        &[Rat::from_int(-(kp.n_max as i64))],
        &kp.p.recip(),
        &Base::Unit,
        n,
    )
}

fn binomial(n: usize, k: usize) -> Rat {
    pochhammer(&Rat::from_int((n - k) as i64 + 1), k) / pochhammer(&Rat::one(), k)
}

/// `w(x) = C(N, x) p^x (1-p)^{N-x}`.
pub fn krawtchouk_weight(x: usize, kp: &KrawtchoukParams) -> Result<Rat> {
    check_grid(0, x, kp.n_max)?;
    Ok(binomial(kp.n_max, x) * kp.p.pow(x as i64) * (Rat::one() - &kp.p).pow((kp.n_max - x) as i64))
}

/// `h_n = (1-p)^N / w(n)`.
pub fn krawtchouk_norm(n: usize, kp: &KrawtchoukParams) -> Result<Rat> {
    Ok((Rat::one() - &kp.p).pow(kp.n_max as i64) / krawtchouk_weight(n, kp)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HahnParams {
    pub alpha: Rat,
    pub beta: Rat,
    #[serde(rename = "N")]
    pub n_max: usize,
}

impl HahnParams {
    pub fn new(alpha: Rat, beta: Rat, n_max: usize) -> Result<Self> {
        if !(alpha > -1 && beta > -1) {
            return invalid(format!("Hahn needs alpha, beta > -1 (got {alpha}, {beta})"));
        }
        if n_max < 1 {
            return invalid("Hahn needs N >= 1");
        }
        Ok(HahnParams { alpha, beta, n_max })
    }
}

/// `Q_n(x; α, β, N) = 3F2(-n, n+α+β+1, -x; α+1, -N; 1)`.
pub fn hahn(n: usize, x: usize, hp: &HahnParams) -> Result<Rat> {
    check_grid(n, x, hp.n_max)?;
    let nn = Rat::from_int(n as i64);
    hyper_sum(
        &[-nn.clone(), &nn + &hp.alpha + &hp.beta + 1, Rat::from_int(-(x as i64))],
        &[&hp.alpha + 1, Rat::from_int(-(hp.n_max as i64))],
        &Rat::one(),
        &Base::Unit,
        n,
    )
}

/// `R_n(λ(x); α, β, N) = 3F2(-n, -x, x+α+β+1; α+1, -N; 1)`.
pub fn dual_hahn(n: usize, x: usize, hp: &HahnParams) -> Result<Rat> {
    check_grid(n, x, hp.n_max)?;
    let xx = Rat::from_int(x as i64);
    hyper_sum(
        &[Rat::from_int(-(n as i64)), -xx.clone(), &xx + &hp.alpha + &hp.beta + 1],
        &[&hp.alpha + 1, Rat::from_int(-(hp.n_max as i64))],
        &Rat::one(),
        &Base::Unit,
        n,
    )
}

/// `w(x) = (α+1)_x (β+1)_{N-x} / (x! (N-x)!)`.
pub fn hahn_weight(x: usize, hp: &HahnParams) -> Result<Rat> {
    check_grid(0, x, hp.n_max)?;
    let n = hp.n_max;
    Ok(pochhammer(&(&hp.alpha + 1), x) * pochhammer(&(&hp.beta + 1), n - x)
        / (pochhammer(&Rat::one(), x) * pochhammer(&Rat::one(), n - x)))
}
