//! Linearization of products `R_ℓ R_m`, with the coefficients read both from
//! the explicit formula and from q-Racah / Racah weights.

use crate::error::{Error, Result};
use crate::families::{
    legendre_poly, qracah_norms, qracah_weight, racah_norms, racah_weight, ultraspherical_poly,
    QRacahParams, RacahParams,
};
use crate::laurent::{LaurentPoly, SymmetricLaurent};
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::{pochhammer, qpochhammer};

use super::theorem::CquTable;
use super::Checker;

/// The `j`-dependent part shared by the Rogers coefficient and the weight.
fn rogers_j_part(qp: &QParams, l: usize, m: usize, j: usize) -> Rat {
    let q = qp.q();
    let hb = qp.qhalf() * qp.beta();
    let b2 = &q * qp.beta() * qp.beta();
    let qq = |b: &Rat, k: usize| qpochhammer(b, &q, k);
    (Rat::one() - q.pow((l + m - 2 * j) as i64) * &hb) / (Rat::one() - &hb)
        * qq(&hb, j) / qq(&q, j)
        * qq(&hb, l - j) / qq(&q, l - j)
        * qq(&hb, m - j) / qq(&q, m - j)
        * qq(&b2, l + m - j) / qq(&(&q * &hb), l + m - j)
        * hb.pow(j as i64)
}

/// Coefficient of `R_{ℓ+m-2j}` in the explicit product expansion.
pub fn rogers_coefficient(qp: &QParams, l: usize, m: usize, j: usize) -> Rat {
    let q = qp.q();
    let b2 = &q * qp.beta() * qp.beta();
    qpochhammer(&q, &q, l) * qpochhammer(&q, &q, m)
        / (qpochhammer(&b2, &q, l) * qpochhammer(&b2, &q, m))
        * rogers_j_part(qp, l, m, j)
}

/// The linearization weight in its specialized closed form.
pub fn linearization_weight(qp: &QParams, l: usize, m: usize, j: usize) -> Rat {
    let q = qp.q();
    let hb = qp.qhalf() * qp.beta();
    let b2 = &q * qp.beta() * qp.beta();
    qpochhammer(&hb, &q, l + m) / qpochhammer(&b2, &q, l + m)
        * qpochhammer(&q, &q, l) / qpochhammer(&hb, &q, l)
        * qpochhammer(&q, &q, m) / qpochhammer(&hb, &q, m)
        * rogers_j_part(qp, l, m, j)
}

/// Both expansions of `R_ℓ R_m` (`ℓ >= m`), termwise agreement of their
/// coefficients, the specialized weight, and nonnegativity.
pub fn q_side(ck: &mut Checker, table: &mut CquTable, l: usize, m: usize) -> Result<()> {
    let qp = table.qparams().clone();
    let qrp = QRacahParams::cqu_linearization(&qp, l, m)?;
    let h0 = qracah_norms(0, &qrp)?.h0;
    let lhs = table.product(0, l, m)?;
    let mut explicit = SymmetricLaurent::zero();
    let mut weighted = SymmetricLaurent::zero();
    for j in 0..=m {
        let c = rogers_coefficient(&qp, l, m, j);
        let w = qracah_weight(j, &qrp)?;
        let r = table.get(0, l + m - 2 * j)?;
        explicit = &explicit + &r.scale(&c);
        weighted = &weighted + &r.scale(&(&w / &h0));
        ck.eq_rat(format!("coefficient j = {j}"), &c, &(&w / &h0));
        ck.eq_rat(format!("weight j = {j}"), &linearization_weight(&qp, l, m, j), &w);
        ck.nonnegative(format!("sign j = {j}"), &c);
    }
    ck.eq_sym("explicit expansion", &lhs, &explicit);
    ck.eq_sym("weight expansion", &lhs, &weighted);
    Ok(())
}

/// Gegenbauer linearization coefficient.
pub fn gegenbauer_coefficient(alpha: &Rat, l: usize, m: usize, j: usize) -> Rat {
    let half = Rat::new(1, 2);
    let ah = alpha + &half;
    let a2 = alpha * Rat::from_int(2) + 1;
    let fact = |k: usize| pochhammer(&Rat::one(), k);
    fact(l) * fact(m) / (pochhammer(&a2, l) * pochhammer(&a2, m))
        * (Rat::from_int((l + m) as i64) + &ah - Rat::from_int(2 * j as i64)) / &ah
        * pochhammer(&ah, j) * pochhammer(&ah, l - j) * pochhammer(&ah, m - j)
        * pochhammer(&a2, l + m - j)
        / (fact(j) * fact(l - j) * fact(m - j) * pochhammer(&(alpha + Rat::new(3, 2)), l + m - j))
}

pub fn classical(ck: &mut Checker, alpha: &Rat, l: usize, m: usize) -> Result<()> {
    if *alpha <= Rat::new(-1, 2) {
        return Err(Error::InvalidParams(format!("linearization needs α > -1/2 (got {alpha})")));
    }
    let rp = RacahParams::gegenbauer_linearization(alpha, l, m)?;
    let h0 = racah_norms(0, &rp)?.h0;
    let lhs = &ultraspherical_poly(l, alpha)? * &ultraspherical_poly(m, alpha)?;
    let mut explicit = LaurentPoly::zero();
    let mut weighted = LaurentPoly::zero();
    for j in 0..=m {
        let c = gegenbauer_coefficient(alpha, l, m, j);
        let w = racah_weight(j, &rp)? / &h0;
        let r = ultraspherical_poly(l + m - 2 * j, alpha)?;
        explicit = &explicit + &r.scale(&c);
        weighted = &weighted + &r.scale(&w);
        ck.eq_rat(format!("coefficient j = {j}"), &c, &w);
        ck.nonnegative(format!("sign j = {j}"), &c);
    }
    ck.eq_poly("explicit expansion", &lhs, &explicit);
    ck.eq_poly("weight expansion", &lhs, &weighted);
    Ok(())
}

pub fn legendre_coefficient(l: usize, m: usize, j: usize) -> Rat {
    let half = Rat::new(1, 2);
    let fact = |k: usize| pochhammer(&Rat::one(), k);
    pochhammer(&half, j) * pochhammer(&half, l - j) * pochhammer(&half, m - j) * fact(l + m - j)
        / (fact(j) * fact(l - j) * fact(m - j) * pochhammer(&Rat::new(3, 2), l + m - j))
        * Rat::from_int(2 * (l + m - 2 * j) as i64 + 1)
}

pub fn legendre(ck: &mut Checker, l: usize, m: usize) -> Result<()> {
    let lhs = &legendre_poly(l) * &legendre_poly(m);
    let mut rhs = LaurentPoly::zero();
    for j in 0..=l.min(m) {
        let c = legendre_coefficient(l, m, j);
        ck.nonnegative(format!("sign j = {j}"), &c);
        ck.eq_rat(
            format!("against Gegenbauer at α = 0, j = {j}"),
            &c,
            &gegenbauer_coefficient(&Rat::zero(), l.max(m), l.min(m), j),
        );
        rhs = &rhs + &legendre_poly(l + m - 2 * j).scale(&c);
    }
    ck.eq_poly("expansion", &lhs, &rhs);
    if (l, m) == (1, 1) {
        ck.eq_rat("P_0 coefficient of P_1²", &legendre_coefficient(1, 1, 1), &Rat::new(1, 3));
        ck.eq_rat("P_2 coefficient of P_1²", &legendre_coefficient(1, 1, 0), &Rat::new(2, 3));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::run_check;
    use crate::rat::rat;

    #[test]
    fn q_side_three_two() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        let mut table = CquTable::new(&qp);
        let r = run_check("l", Default::default(), None, |ck| q_side(ck, &mut table, 3, 2));
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn classical_and_legendre() {
        for alpha in [rat(0, 1), rat(1, 2), rat(1, 4)] {
            let r = run_check("c", Default::default(), None, |ck| classical(ck, &alpha, 3, 3));
            assert!(r.passed(), "{alpha}: {r:?}");
        }
        let r = run_check("p", Default::default(), None, |ck| legendre(ck, 1, 1));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.comparisons, 7);
    }

    #[test]
    fn m_zero_is_trivial() {
        assert_eq!(gegenbauer_coefficient(&rat(1, 2), 4, 0, 0), Rat::one());
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        assert_eq!(rogers_coefficient(&qp, 4, 0, 0), Rat::one());
    }
}
