//! Expansion of `R_{ℓ+m-2j}` in (q-)Racah polynomials of `j`.

use crate::error::Result;
use crate::families::{
    qracah, qracah_norms, racah, ultraspherical_poly, QRacahParams, RacahParams,
};
use crate::laurent::{LaurentPoly, SymmetricLaurent};
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::{pochhammer, powi, qpochhammer, qpochhammer_many, Scalar};

use super::theorem::{compute_s, CquTable, Mode};
use super::Checker;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualMode {
    /// Closed-form coefficients summed against q-Racah polynomials.
    Direct,
    /// Coefficients recovered as `S_k / h_k` from the brute-force sum.
    Inversion,
}

/// Scalar factor of the `k`-th term:
/// `q^{k(k+ℓ+m+2)/2} β^k (1-β²q^{2k})/(1-β²q^k) (q^{-ℓ}, q^{-m}, qβ²; q)_k
/// / ((qβ, qβ, q; q)_k (-q^{1/2}β; q^{1/2})_{2k}²)`.
pub fn dual_coefficient(qp: &QParams, l: usize, m: usize, k: usize) -> Rat {
    dual_coefficient_in(&qp.qhalf(), &qp.beta(), l, m, k)
}

/// [`dual_coefficient`] in any scalar type, from `q^{1/2}` and `β`.
pub fn dual_coefficient_in<T: Scalar>(qhalf: &T, b: &T, l: usize, m: usize, k: usize) -> T {
    let q = qhalf.clone() * qhalf.clone();
    let b2 = b.clone() * b.clone();
    let one = T::one();
    let qb = q.clone() * b.clone();
    let sq = qpochhammer(&-(qhalf.clone() * b.clone()), qhalf, 2 * k);
    let qqb = qpochhammer(&qb, &q, k);
    powi(qhalf, (k * (k + l + m + 2)) as i64)
        * powi(b, k as i64)
        * (one.clone() - b2.clone() * powi(&q, 2 * k as i64))
        / (one - b2.clone() * powi(&q, k as i64))
        * qpochhammer_many(&[powi(&q, -(l as i64)), powi(&q, -(m as i64)), q.clone() * b2], &q, k)
        / (qqb.clone() * qqb * qpochhammer(&q, &q, k) * sq.clone() * sq)
}

/// `∏_{i<k} (4q^{i+1/2}β x² - (1 + q^{i+1/2}β)²)`.
pub fn x_product(qp: &QParams, k: usize) -> SymmetricLaurent {
    let x = SymmetricLaurent::x();
    let x2 = &x * &x;
    let q = qp.q();
    let mut c = qp.qhalf() * qp.beta();
    let mut acc = SymmetricLaurent::one();
    for _ in 0..k {
        let factor = &x2.scale(&(&c * Rat::from_int(4))) - &SymmetricLaurent::constant((Rat::one() + &c).pow(2));
        acc = &acc * &factor;
        c *= &q;
    }
    acc
}

/// The full Laurent coefficient of the `k`-th q-Racah polynomial.
pub fn dual_term(table: &mut CquTable, l: usize, m: usize, k: usize) -> Result<SymmetricLaurent> {
    let qp = table.qparams().clone();
    let rr = table.product(k, l - k, m - k)?;
    Ok((&x_product(&qp, k) * &rr).scale(&dual_coefficient(&qp, l, m, k)))
}

/// All `0 <= j <= m` for one `(ℓ, m)`. Inversion mode also compares each
/// closed coefficient times `h_k` with the brute-force `S_k`.
pub fn q_dual_addition(
    ck: &mut Checker,
    table: &mut CquTable,
    l: usize,
    m: usize,
    mode: DualMode,
) -> Result<()> {
    let qp = table.qparams().clone();
    let qrp = QRacahParams::cqu_linearization(&qp, l, m)?;
    let mut coeffs = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let closed = dual_term(table, l, m, k)?;
        match mode {
            DualMode::Direct => coeffs.push(closed),
            DualMode::Inversion => {
                let hk = qracah_norms(k, &qrp)?.hn();
                let s = compute_s(table, k, l, m, Mode::Brute)?;
                ck.eq_sym(format!("coefficient k = {k} times h_k"), &closed.scale(&hk), &s);
                coeffs.push(s.scale(&hk.recip()));
            }
        }
    }
    for j in 0..=m {
        let mut rhs = SymmetricLaurent::zero();
        for (k, c) in coeffs.iter().enumerate() {
            rhs = &rhs + &c.scale(&qracah(k, j, &qrp)?);
        }
        ck.eq_sym(format!("(l, m, j) = ({l}, {m}, {j})"), table.get(0, l + m - 2 * j)?, &rhs);
    }
    Ok(())
}

/// `(α+k)/(α+k/2) (-ℓ)_k (-m)_k (2α+1)_k / (2^{2k} (α+1)_k² k!)`.
pub fn classical_dual_coefficient(alpha: &Rat, l: usize, m: usize, k: usize) -> Rat {
    let kk = Rat::from_int(k as i64);
    let ratio = if k == 0 { Rat::one() } else { (alpha + &kk) / (alpha + &kk / 2) };
    ratio
        * pochhammer(&Rat::from_int(-(l as i64)), k)
        * pochhammer(&Rat::from_int(-(m as i64)), k)
        * pochhammer(&(alpha * Rat::from_int(2) + 1), k)
        / (Rat::from_int(4).pow(k as i64) * pochhammer(&(alpha + 1), k).pow(2) * pochhammer(&Rat::one(), k))
}

pub fn classical_dual_addition(ck: &mut Checker, alpha: &Rat, l: usize, m: usize) -> Result<()> {
    let rp = RacahParams::gegenbauer_linearization(alpha, l, m)?;
    let x2m1 = LaurentPoly::from_terms([(2, Rat::one()), (0, Rat::from_int(-1))]);
    let mut terms = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let ak = alpha + Rat::from_int(k as i64);
        let p = &(&x2m1.pow(k as u32) * &ultraspherical_poly(l - k, &ak)?) * &ultraspherical_poly(m - k, &ak)?;
        terms.push(p.scale(&classical_dual_coefficient(alpha, l, m, k)));
    }
    for j in 0..=m {
        let mut rhs = LaurentPoly::zero();
        for (k, p) in terms.iter().enumerate() {
            rhs = &rhs + &p.scale(&racah(k, j, &rp)?);
        }
        ck.eq_poly(
            format!("(l, m, j) = ({l}, {m}, {j})"),
            &ultraspherical_poly(l + m - 2 * j, alpha)?,
            &rhs,
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::run_check;
    use crate::rat::rat;

    #[test]
    fn q_both_modes() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        let mut table = CquTable::new(&qp);
        for mode in [DualMode::Direct, DualMode::Inversion] {
            for (l, m) in [(2, 1), (3, 3), (1, 0)] {
                let r = run_check("d", Default::default(), None, |ck| {
                    q_dual_addition(ck, &mut table, l, m, mode)
                });
                assert!(r.passed(), "{mode:?} {l} {m}: {r:?}");
            }
        }
    }

    #[test]
    fn classical() {
        for alpha in [rat(1, 2), rat(0, 1), rat(1, 4)] {
            let r = run_check("c", Default::default(), None, |ck| classical_dual_addition(ck, &alpha, 2, 2));
            assert!(r.passed(), "{alpha}: {r:?}");
        }
    }
}
