//! The dual addition formula and the q-addition formula restricted to the
//! duality lattice, where they become the same finite sum.
//!
//! With `a = ts`, `z = q^{-(ℓ+m-2j)/2}/a`, `u = q^{-ℓ/2}/a`, `v = q^{-m/2}/a`
//! and the dual addition formula evaluated at `q^{-n/2}/a`, every term is a
//! rational number.

use crate::error::Result;
use crate::families::{askey_wilson_at, cqu_at, qracah, AWParams, QRacahParams};
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::{qpochhammer, qpochhammer_many};

use super::Checker;

fn sign(k: usize) -> Rat {
    if k.is_multiple_of(2) {
        Rat::one()
    } else {
        Rat::from_int(-1)
    }
}

/// `(-1)^k q^{k(k+ℓ+m+1)/2} a^{2k} (1 - a⁴q^{2k-1})/(1 - a⁴q^{k-1})
/// (q^{-ℓ}, q^{-m}, a⁴; q)_k / ((q^{1/2}a², q^{1/2}a², q; q)_k (-a²; q^{1/2})_{2k}²)`.
fn dual_scalar(qp: &QParams, l: usize, m: usize, k: usize) -> Rat {
    let (t, q, a) = (qp.t(), qp.q(), qp.a());
    let a2 = a.pow(2);
    let a4 = a2.pow(2);
    let ratio = if k == 0 {
        Rat::one()
    } else {
        (Rat::one() - &a4 * q.pow(2 * k as i64 - 1)) / (Rat::one() - &a4 * q.pow(k as i64 - 1))
    };
    let sq = qpochhammer(&-a2.clone(), &qp.qhalf(), 2 * k);
    sign(k) * t.pow(2 * (k * (k + l + m + 1)) as i64) * a2.pow(k as i64) * ratio
        * qpochhammer_many(&[q.pow(-(l as i64)), q.pow(-(m as i64)), a4], &q, k)
        / (qpochhammer(&(qp.qhalf() * &a2), &q, k).pow(2) * qpochhammer(&q, &q, k) * sq.pow(2))
}

/// Coefficient of the `k`-th term on the addition-formula side, with
/// `(q^{-1}a⁴; q)_k / (q^{-1}a⁴; q)_{2k}` cancelled to `1/(q^{k-1}a⁴; q)_k`.
fn addition_scalar(qp: &QParams, l: usize, m: usize, n: usize, k: usize) -> Rat {
    let (t, q, a) = (qp.t(), qp.q(), qp.a());
    let a2 = a.pow(2);
    let a4 = a2.pow(2);
    let qh = qp.qhalf();
    sign(k) * t.pow(2 * (k * (k + l + m + 1)) as i64) * a2.pow(k as i64)
        * qpochhammer_many(
            &[
                q.pow(-(n as i64)),
                q.pow(-(l as i64)),
                q.pow(-(m as i64)),
                a2.clone(),
                q.pow(n as i64) * &a4,
            ],
            &q,
            k,
        )
        / (qpochhammer_many(&[q.clone(), &qh * &a2, -(&qh * &a2), -a2], &q, k)
            * qpochhammer(&(q.pow(k as i64 - 1) * a4), &q, k))
}

/// Kernel parameters `(q^{-(ℓ+m)/2}/a, q^{(ℓ+m)/2}a³, q^{(ℓ-m)/2}a, q^{(m-ℓ)/2}a)`.
fn kernel_params(qp: &QParams, l: usize, m: usize) -> Result<AWParams> {
    let (t, a) = (qp.t(), qp.a());
    let lm = (l + m) as i64;
    let d = l as i64 - m as i64;
    AWParams::discrete(
        t.pow(-2 * lm) / &a,
        t.pow(2 * lm) * a.pow(3),
        t.pow(2 * d) * &a,
        t.pow(-2 * d) * &a,
        qp.q(),
    )
}

/// Requires `j <= m <= ℓ` and `m <= n`.
pub fn restriction(ck: &mut Checker, qp: &QParams, l: usize, m: usize, j: usize, n: usize) -> Result<()> {
    if !(j <= m && m <= l && m <= n) {
        return Err(crate::error::Error::InvalidParams(format!(
            "need j <= m <= l and m <= n (got l = {l}, m = {m}, j = {j}, n = {n})"
        )));
    }
    let (t, q, a) = (qp.t(), qp.q(), qp.a());
    let z = t.pow(-2 * (l + m - 2 * j) as i64) / &a;
    let u = t.pow(-2 * l as i64) / &a;
    let v = t.pow(-2 * m as i64) / &a;
    let w = t.pow(-2 * n as i64) / &a;
    let kernel = kernel_params(qp, l, m)?;
    let qrp = QRacahParams::cqu_linearization(qp, l, m)?;
    let a2 = a.pow(2);
    let (mut dual_sum, mut add_sum, mut point_sum) = (Rat::zero(), Rat::zero(), Rat::zero());
    // (q^{-m}; q)_k kills every term with k > m
    for k in 0..=n.min(m) {
        let shifted = qp.shifted(k);
        let shared = cqu_at(n - k, &shifted, &u)?
            * cqu_at(n - k, &shifted, &v)?
            * askey_wilson_at(k, &kernel, &z)?;
        let dual = dual_scalar(qp, l, m, k)
            * qpochhammer_many(&[q.pow(-(n as i64)), q.pow(n as i64) * a2.pow(2)], &q, k)
            * &shared;
        let add = addition_scalar(qp, l, m, n, k) * &shared;
        ck.eq_rat(format!("term k = {k}"), &dual, &add);
        // the same term before the duality substitutions
        let point = dual_scalar(qp, l, m, k)
            * qpochhammer_many(&[&a2 * &w * &w, &a2 / (&w * &w)], &q, k)
            * cqu_at(l - k, &shifted, &w)?
            * cqu_at(m - k, &shifted, &w)?
            * qracah(k, j, &qrp)?;
        ck.eq_rat(format!("term k = {k} at z = q^(-n/2)/a"), &point, &dual);
        dual_sum += dual;
        add_sum += add;
        point_sum += point;
    }
    let target = cqu_at(n, qp, &z)?;
    ck.eq_rat("dual side total", &dual_sum, &target);
    ck.eq_rat("addition side total", &add_sum, &target);
    ck.eq_rat("duality transport", &target, &cqu_at(l + m - 2 * j, qp, &w)?);
    ck.eq_rat("dual addition at z = q^(-n/2)/a", &point_sum, &cqu_at(l + m - 2 * j, qp, &w)?);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::run_check;
    use crate::rat::rat;

    #[test]
    fn spec_examples() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        for (l, m, j, n) in [(2, 1, 0, 1), (3, 2, 1, 2), (0, 0, 0, 0), (3, 3, 3, 4)] {
            let r = run_check("r", Default::default(), None, |ck| restriction(ck, &qp, l, m, j, n));
            assert!(r.passed(), "{l} {m} {j} {n}: {r:?}");
        }
    }
}
