//! Askey-Wilson polynomials `R_n[z; a, b, c, d | q]` and the continuous
//! q-ultraspherical subfamily `R_n^{β;q}`.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::laurent::{LaurentPoly, SymmetricLaurent};
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::{hyper_sum, sum_by_ratio, Base, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AWParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub q: Rat,
}

impl AWParams {
    /// Requires `0 < q < 1` and no pairwise product of `a, b, c, d` equal to 1.
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat, q: Rat) -> Result<Self> {
        let p = AWParams::discrete(a, b, c, d, q)?;
        let all = [&p.a, &p.b, &p.c, &p.d];
        for i in 0..4 {
            for j in i + 1..4 {
                if (all[i] * all[j]).is_one() {
                    return invalid(format!("pairwise product {} * {} equals 1", all[i], all[j]));
                }
            }
        }
        Ok(p)
    }

    /// Only checks the base. Discrete specializations (q-Racah as an
    /// Askey-Wilson polynomial) have `ac = q^{-N}` by design; the series then
    /// terminates before any vanishing denominator is reached.
    pub fn discrete(a: Rat, b: Rat, c: Rat, d: Rat, q: Rat) -> Result<Self> {
        if !(q.is_positive() && q < 1) {
            return invalid(format!("q = {q} must lie in (0, 1)"));
        }
        Ok(AWParams { a, b, c, d, q })
    }

    pub fn abcd(&self) -> Rat {
        &self.a * &self.b * &self.c * &self.d
    }
}

/// `Σ_k c_k (pair·z, pair/z; qbase)_k` where `c_k` is the scalar part of a
/// terminating `4φ3` whose first numerator is `qbase^{-n}`.
fn symmetric_series(
    numerators: &[Rat],
    pair: &Rat,
    denominators: &[Rat],
    argument: &Rat,
    qbase: &Rat,
    n: usize,
) -> Result<SymmetricLaurent> {
    let mut acc = LaurentPoly::zero();
    let mut coef = Rat::one();
    let mut factors = LaurentPoly::one();
    let mut qk = Rat::one();
    for k in 0..=n {
        acc = &acc + &factors.scale(&coef);
        if k == n {
            break;
        }
        let num = numerators
            .iter()
            .fold(argument.clone(), |acc, a| acc * (Rat::one() - a * &qk));
        if num.is_zero() {
            break;
        }
        let qk1 = &qk * qbase;
        let den = denominators
            .iter()
            .fold(Rat::one() - &qk1, |acc, b| acc * (Rat::one() - b * &qk));
        if den.is_zero() {
            return Err(Error::DenominatorVanished(k));
        }
        coef = coef * num / den;
        let c = pair * &qk;
        factors = &factors
            * &LaurentPoly::from_terms([(0, Rat::one() + &c * &c), (1, -&c), (-1, -c)]);
        qk = qk1;
    }
    SymmetricLaurent::new(acc)
}

/// `4φ3(q^{-n}, q^{n-1}abcd, az, a/z; ab, ac, ad; q, q)` as a symmetric
/// Laurent polynomial in `z`.
pub fn askey_wilson_r(n: usize, awp: &AWParams) -> Result<SymmetricLaurent> {
    let q = &awp.q;
    symmetric_series(
        &[q.pow(-(n as i64)), q.pow(n as i64 - 1) * awp.abcd()],
        &awp.a,
        &[&awp.a * &awp.b, &awp.a * &awp.c, &awp.a * &awp.d],
        q,
        q,
        n,
    )
}

/// `R_n[z0]` summed as a scalar series; terminates early when some
/// `a z0 q^j` or `a q^j / z0` equals 1.
pub fn askey_wilson_at(n: usize, awp: &AWParams, z0: &Rat) -> Result<Rat> {
    if z0.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let q = &awp.q;
    hyper_sum(
        &[
            q.pow(-(n as i64)),
            q.pow(n as i64 - 1) * awp.abcd(),
            &awp.a * z0,
            &awp.a / z0,
        ],
        &[&awp.a * &awp.b, &awp.a * &awp.c, &awp.a * &awp.d],
        q,
        &Base::Q(q.clone()),
        n,
    )
}

/// `R_n` at `x = (z + 1/z)/2`, using `(az, a/z; q)_k = ∏ (1 - 2a q^j x + a^2 q^{2j})`.
/// Works for real `x` in any scalar type.
pub fn askey_wilson_x<T: Scalar>(n: usize, params: &[T; 4], q: &T, x: &T) -> Result<T> {
    let [a, b, c, d] = params;
    let two = T::from_i64(2);
    let abcd = a.clone() * b.clone() * c.clone() * d.clone();
    let qn_inv = T::one() / crate::series::powi(q, n as i64);
    let qn1 = crate::series::powi(q, n as i64 - 1);
    let mut qk = T::one();
    let mut qks = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        qks.push(qk.clone());
        qk = qk * q.clone();
    }
    sum_by_ratio(
        n,
        |k| {
            let qk = qks[k].clone();
            let aq = a.clone() * qk.clone();
            q.clone()
                * (T::one() - qn_inv.clone() * qk.clone())
                * (T::one() - qn1.clone() * abcd.clone() * qk.clone())
                * (T::one() - two.clone() * aq.clone() * x.clone() + aq.clone() * aq)
        },
        |k| {
            let qk = qks[k].clone();
            (T::one() - qks[k + 1].clone())
                * (T::one() - a.clone() * b.clone() * qk.clone())
                * (T::one() - a.clone() * c.clone() * qk.clone())
                * (T::one() - a.clone() * d.clone() * qk)
        },
    )
}

/// Askey-Wilson parameters `(ts, t³s, -ts, -t³s)` in base `q = t⁴` that give
/// `R_n^{β;q}`.
pub fn cqu_params(qp: &QParams) -> AWParams {
    let ts = qp.a();
    let t3s = &ts * qp.qhalf();
    AWParams::new(ts.clone(), t3s.clone(), -ts, -t3s, qp.q()).expect("admissible by QParams invariants")
}

/// `R_n^{β;q}` through the Askey-Wilson specialization.
pub fn cqu_r(n: usize, qp: &QParams) -> Result<SymmetricLaurent> {
    askey_wilson_r(n, &cqu_params(qp))
}

/// `R_n^{β;q}` through the `4φ3` in base `q^{1/2}`.
pub fn cqu_r_alt(n: usize, qp: &QParams) -> Result<SymmetricLaurent> {
    let t2 = qp.qhalf();
    let s = qp.s();
    let s2 = qp.beta();
    symmetric_series(
        &[t2.pow(-(n as i64)), t2.pow(n as i64 + 1) * &s2],
        &qp.a(),
        &[-(&t2 * &s2), &t2 * s, -(&t2 * s)],
        &t2,
        &t2,
        n,
    )
}

/// `R_n^{β;q}[z0]` as a scalar.
pub fn cqu_at(n: usize, qp: &QParams, z0: &Rat) -> Result<Rat> {
    askey_wilson_at(n, &cqu_params(qp), z0)
}

/// The duality lattice point `z = q^{-m/2-1/4} β^{-1/2} = t^{-2m-1} s^{-1}`.
pub fn cqu_dual_point(m: usize, qp: &QParams) -> Rat {
    qp.t().pow(-2 * m as i64 - 1) / qp.s()
}

/// Coefficient of `z^n` in `R_n^{β;q}`:
/// `(ts)^n (t²s²; t⁴)_n / (t⁴s⁴; t⁴)_n`.
pub fn cqu_leading_coeff(n: usize, qp: &QParams) -> Rat {
    let q = qp.q();
    let qb = qp.qhalf() * qp.beta();
    qp.a().pow(n as i64) * crate::series::qpochhammer(&qb, &q, n)
        / crate::series::qpochhammer(&(&qb * &qb), &q, n)
}

/// `R_n^{β;q}(x)` in floating point, `β > 0`, `0 < q < 1`. The series
/// alternates, so expect full accuracy only for `q` near 1.
pub fn cqu_f64(n: usize, q: f64, beta: f64, x: f64) -> Result<f64> {
    let a = q.powf(0.25) * beta.sqrt();
    let b = q.powf(0.75) * beta.sqrt();
    askey_wilson_x(n, &[a, b, -a, -b], &q, &x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn qp() -> QParams {
        QParams::new(rat(1, 2), rat(2, 3)).unwrap()
    }

    #[test]
    fn value_at_a_is_one() {
        let awp = AWParams::new(rat(1, 3), rat(1, 5), rat(-1, 2), rat(2, 7), rat(1, 4)).unwrap();
        for n in 0..=6 {
            let r = askey_wilson_r(n, &awp).unwrap();
            assert_eq!(r.degree(), Some(n as i64));
            assert_eq!(r.eval_at(&awp.a).unwrap(), Rat::one());
            assert_eq!(askey_wilson_at(n, &awp, &rat(3, 2)).unwrap(), r.eval_at(&rat(3, 2)).unwrap());
        }
    }

    #[test]
    fn two_representations_agree() {
        for qp in [qp(), QParams::new(rat(2, 3), rat(1, 2)).unwrap()] {
            for n in 0..=8 {
                let r = cqu_r(n, &qp).unwrap();
                assert_eq!(r, cqu_r_alt(n, &qp).unwrap(), "n = {n}");
                assert_eq!(r.eval_at(&qp.a()).unwrap(), Rat::one());
                assert_eq!(r.as_poly().coeff(n as i64), cqu_leading_coeff(n, &qp));
                let sign = if n % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
                assert_eq!(r.as_poly().negate_variable(), r.as_poly().scale(&sign));
            }
        }
    }

    #[test]
    fn scalar_and_float_paths_agree() {
        let qp = qp();
        for n in 0..=6 {
            let z = rat(7, 5);
            assert_eq!(cqu_at(n, &qp, &z).unwrap(), cqu_r(n, &qp).unwrap().eval_at(&z).unwrap());
        }
        // the alternating float series is only well conditioned for q near 1
        for qp in [QParams::from_pair((9, 10), (1, 1)).unwrap(), QParams::from_pair((19, 20), (1, 2)).unwrap()] {
            for n in 0..=8 {
                let r = cqu_r(n, &qp).unwrap();
                for z in [rat(7, 5), rat(3, 1), rat(11, 10)] {
                    let x = (&z + z.recip()) / 2;
                    let exact = r.eval_at(&z).unwrap().to_f64();
                    let float = cqu_f64(n, qp.q().to_f64(), qp.beta().to_f64(), x.to_f64()).unwrap();
                    assert!((exact - float).abs() <= 1e-12 * exact.abs(), "{n}: {exact} {float}");
                }
            }
        }
    }

    #[test]
    fn pairwise_products_rejected() {
        assert!(AWParams::new(rat(2, 1), rat(1, 2), rat(0, 1), rat(1, 3), rat(1, 2)).is_err());
        assert!(AWParams::new(rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 9), rat(3, 2)).is_err());
    }
}
