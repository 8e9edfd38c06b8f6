//! Leading coefficient, weight recurrence, difference formula, and the
//! q-Racah evaluation at `x = N`, backward shift and summation by parts.

use crate::error::Result;
use crate::families::{cqu_r, qracah, qracah_at_top, qracah_weight, QRacahParams};
use crate::laurent::{LaurentPoly, SymmetricLaurent};
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::qpochhammer;

use super::Checker;

/// `2^n (q^{1/2}β)^{n/2} (q^{1/2}β; q)_n / (qβ²; q)_n`, the `x^n` coefficient.
pub fn cqu_x_leading(n: usize, qp: &QParams) -> Rat {
    let c = qp.qhalf() * qp.beta();
    Rat::from_int(2).pow(n as i64) * qp.a().pow(n as i64) * qpochhammer(&c, &qp.q(), n)
        / qpochhammer(&(qp.q() * qp.beta() * qp.beta()), &qp.q(), n)
}

pub fn leading_coefficient(ck: &mut Checker, qp: &QParams, nmax: usize) -> Result<()> {
    for n in 0..=nmax {
        let coeffs = cqu_r(n, qp)?.to_x_coeffs();
        ck.eq_rat(format!("x^{n} in R_{n}"), &coeffs[n], &cqu_x_leading(n, qp));
    }
    Ok(())
}

/// `x²` as a symmetric Laurent polynomial.
fn x_squared() -> SymmetricLaurent {
    let x = SymmetricLaurent::x();
    &x * &x
}

/// `(½(ts + 1/(ts)))²`.
fn special_point_squared(qp: &QParams) -> Rat {
    let a = (qp.a() + qp.a().recip()) / 2;
    &a * &a
}

/// `(1 - c z²)(1 - c z⁻²) = (1 + c)² - 4c x² = 4c(A² - x²)` with `c = q^{1/2}β`.
pub fn weight_ratio(ck: &mut Checker, qp: &QParams) -> Result<()> {
    let c = qp.qhalf() * qp.beta();
    let one = Rat::one();
    let lhs = LaurentPoly::from_terms([(2, -c.clone()), (0, &one + &c * &c), (-2, -c.clone())])
        * LaurentPoly::one();
    let x2 = x_squared();
    let four_c = &c * Rat::from_int(4);
    let first = &SymmetricLaurent::constant((&one + &c).pow(2)) - &x2.scale(&four_c);
    let second = (&SymmetricLaurent::constant(special_point_squared(qp)) - &x2).scale(&four_c);
    ck.eq_poly("first form", &lhs, first.as_poly());
    ck.eq_poly("second form", &lhs, second.as_poly());
    Ok(())
}

/// Prefactor `4q^{-n/2+3/2}β (1 - q^{n-1/2}β) / ((1 + q^{1/2}β)(1 + qβ)(1 - qβ))`.
pub fn difference_prefactor(n: usize, qp: &QParams) -> Rat {
    let t = qp.t();
    let b = qp.beta();
    let one = Rat::one();
    Rat::from_int(4) * t.pow(6 - 2 * n as i64) * &b * (&one - t.pow(4 * n as i64 - 2) * &b)
        / ((&one + qp.qhalf() * &b) * (&one + qp.q() * &b) * (&one - qp.q() * &b))
}

/// `R_n - R_{n-2} = prefactor · (x² - A²) · R^{qβ}_{n-2}` for `2 <= n <= nmax`,
/// the vanishing of the left side at `z = ts, 1/(ts)`, and the prefactor
/// as the ratio of leading coefficients.
pub fn difference(ck: &mut Checker, qp: &QParams, nmax: usize) -> Result<()> {
    let up = qp.shifted(1);
    let factor = &x_squared() - &SymmetricLaurent::constant(special_point_squared(qp));
    let family: Vec<SymmetricLaurent> = (0..=nmax).map(|n| cqu_r(n, qp)).collect::<Result<_>>()?;
    for n in 2..=nmax {
        let lhs = &family[n] - &family[n - 2];
        let pre = difference_prefactor(n, qp);
        let rhs = (&factor * &cqu_r(n - 2, &up)?).scale(&pre);
        ck.eq_sym(format!("n = {n}"), &lhs, &rhs);
        for z in [qp.a(), qp.a().recip()] {
            ck.eq_rat(format!("n = {n}, vanishing at z = {z}"), &lhs.eval_at(&z)?, &Rat::zero());
        }
        let ratio = cqu_x_leading(n, qp) / cqu_x_leading(n - 2, &up);
        ck.eq_rat(format!("n = {n}, k_n / k'_(n-2)"), &ratio, &pre);
    }
    Ok(())
}

/// `R_n(x = N)` against its closed form, `0 <= n <= N`.
pub fn qracah_top(ck: &mut Checker, qrp: &QRacahParams) -> Result<()> {
    for n in 0..=qrp.n_max {
        ck.eq_rat(
            format!("n = {n}"),
            &qracah(n, qrp.n_max, qrp)?,
            &qracah_at_top(n, qrp)?,
        );
    }
    Ok(())
}

/// `(1 - q²γδ) / (q^{-x} - γδ q^{x+2})`.
fn shift_factor(x: usize, qrp: &QRacahParams) -> Rat {
    let q = &qrp.q;
    let gd = qrp.gamma() * &qrp.delta;
    (Rat::one() - q * q * &gd) / (q.pow(-(x as i64)) - &gd * q.pow(x as i64 + 2))
}

/// `w(x) R_n(x)` expressed through the shifted family, pointwise.
pub fn backward_shift(ck: &mut Checker, qrp: &QRacahParams) -> Result<()> {
    let big_n = qrp.n_max;
    let up = qrp.shifted()?;
    let q = &qrp.q;
    // the first term at x = N carries (q·qγ; q)_N from the shifted weight
    let top_factor = qpochhammer(&(q * q * qrp.gamma()), q, big_n);
    ck.eq_rat("first term at x = N", &top_factor, &Rat::zero());
    for n in 1..=big_n {
        for x in 0..=big_n {
            let lhs = qracah_weight(x, qrp)? * qracah(n, x, qrp)?;
            let mut rhs = Rat::zero();
            if x < big_n {
                rhs += shift_factor(x, qrp) * qracah_weight(x, &up)? * qracah(n - 1, x, &up)?;
            }
            if x > 0 {
                rhs -= shift_factor(x - 1, qrp) * qracah_weight(x - 1, &up)? * qracah(n - 1, x - 1, &up)?;
            }
            ck.eq_rat(format!("n = {n}, x = {x}"), &lhs, &rhs);
        }
    }
    Ok(())
}

/// Summed form for `f(x) = x`, `q^x` and `1`.
pub fn summation_by_parts(ck: &mut Checker, qrp: &QRacahParams) -> Result<()> {
    let big_n = qrp.n_max;
    let up = qrp.shifted()?;
    let q = qrp.q.clone();
    let tests: [(&str, Box<dyn Fn(usize) -> Rat>); 3] = [
        ("x", Box::new(|x| Rat::from_int(x as i64))),
        ("q^x", Box::new(move |x| q.pow(x as i64))),
        ("1", Box::new(|_| Rat::one())),
    ];
    for n in 1..=big_n {
        for (name, f) in &tests {
            let lhs: Rat = (0..=big_n)
                .map(|x| Ok(qracah_weight(x, qrp)? * qracah(n, x, qrp)? * f(x)))
                .sum::<Result<Rat>>()?;
            let rhs: Rat = (0..big_n)
                .map(|x| {
                    Ok(shift_factor(x, qrp)
                        * qracah_weight(x, &up)?
                        * qracah(n - 1, x, &up)?
                        * (f(x) - f(x + 1)))
                })
                .sum::<Result<Rat>>()?;
            ck.eq_rat(format!("n = {n}, f = {name}"), &lhs, &rhs);
        }
    }
    Ok(())
}
