//! Duality between degree and lattice point.

use crate::error::Result;
use crate::families::{
    cqu_at, cqu_dual_point, cqu_r, cqu_r_alt, dual_hahn, hahn, krawtchouk, racah, wilson_dual_phi,
    HahnParams, KrawtchoukParams, RacahParams, WilsonParams,
};
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::{hyper_sum, Base};

use super::{params, run_check, CheckReport, Checker};

/// `R_n[z_m] = R_m[z_n]` with `z_m = q^{-m/2-1/4} β^{-1/2}`, plus the
/// symmetric `4φ3` in base `q^{1/2}` both sides reduce to.
pub fn cqu(ck: &mut Checker, qp: &QParams, mmax: usize) -> Result<()> {
    let t2 = qp.qhalf();
    let s = qp.s();
    let values: Vec<Vec<Rat>> = (0..=mmax)
        .map(|n| (0..=mmax).map(|m| cqu_at(n, qp, &cqu_dual_point(m, qp))).collect())
        .collect::<Result<_>>()?;
    for n in 0..=mmax {
        for m in 0..=mmax {
            ck.eq_rat(format!("(m, n) = ({m}, {n})"), &values[n][m], &values[m][n]);
            // 4φ3(q^{-n/2}, q^{n/2+1/2}β, q^{-m/2}, q^{m/2+1/2}β; -q^{1/2}β, ±(qβ)^{1/2}; q^{1/2}, q^{1/2})
            let sym = hyper_sum(
                &[
                    t2.pow(-(n as i64)),
                    t2.pow(n as i64 + 1) * qp.beta(),
                    t2.pow(-(m as i64)),
                    t2.pow(m as i64 + 1) * qp.beta(),
                ],
                &[-(&t2 * qp.beta()), &t2 * s, -(&t2 * s)],
                &t2,
                &Base::Q(t2.clone()),
                n.min(m),
            )?;
            ck.eq_rat(format!("symmetric form at (m, n) = ({m}, {n})"), &values[n][m], &sym);
        }
    }
    Ok(())
}

/// The Askey-Wilson and base-`q^{1/2}` representations agree coefficientwise.
pub fn cqu_representations(ck: &mut Checker, qp: &QParams, nmax: usize) -> Result<()> {
    for n in 0..=nmax {
        ck.eq_sym(format!("n = {n}"), &cqu_r(n, qp)?, &cqu_r_alt(n, qp)?);
    }
    Ok(())
}

pub fn krawtchouk_self(ck: &mut Checker, kp: &KrawtchoukParams) -> Result<()> {
    for n in 0..=kp.n_max {
        for x in 0..=kp.n_max {
            ck.eq_rat(format!("(n, x) = ({n}, {x})"), &krawtchouk(n, x, kp)?, &krawtchouk(x, n, kp)?);
        }
    }
    Ok(())
}

pub fn hahn_dual_hahn(ck: &mut Checker, hp: &HahnParams) -> Result<()> {
    for n in 0..=hp.n_max {
        for x in 0..=hp.n_max {
            ck.eq_rat(format!("(n, x) = ({n}, {x})"), &dual_hahn(n, x, hp)?, &hahn(x, n, hp)?);
        }
    }
    Ok(())
}

pub fn racah_swap(ck: &mut Checker, rp: &RacahParams) -> Result<()> {
    let big_n = rp.n_max().unwrap_or(0);
    let dual = rp.dual();
    for n in 0..=big_n {
        for x in 0..=big_n {
            ck.eq_rat(format!("(n, x) = ({n}, {x})"), &racah(n, x, rp)?, &racah(x, n, &dual)?);
        }
    }
    Ok(())
}

pub fn wilson(ck: &mut Checker, wp: &WilsonParams, nmax: usize) -> Result<()> {
    let dual = wp.dual();
    for n in 0..=nmax {
        for m in 0..=nmax {
            ck.eq_rat(
                format!("(n, m) = ({n}, {m})"),
                &wilson_dual_phi(n, m, wp)?,
                &wilson_dual_phi(m, n, &dual)?,
            );
        }
    }
    Ok(())
}

/// Convenience wrapper producing a report for the continuous q-ultraspherical duality.
pub fn check_duality_cqu(qp: &QParams, mmax: usize) -> CheckReport {
    run_check(
        "duality.cqu",
        params([("qparams", qp.to_string()), ("mmax", mmax.to_string())]),
        None,
        |ck| cqu(ck, qp, mmax),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn cqu_duality_passes() {
        let r = check_duality_cqu(&QParams::new(rat(1, 2), rat(2, 3)).unwrap(), 5);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.comparisons, 72);
    }

    #[test]
    fn probe_localizes_pair() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        let r = run_check("d", Default::default(), Some(14), |ck| cqu(ck, &qp, 3));
        assert!(!r.passed());
        assert_eq!(r.witness.unwrap().location, "(m, n) = (3, 1)");
    }

    #[test]
    fn discrete_dualities() {
        let kp = KrawtchoukParams::new(rat(1, 3), 3).unwrap();
        assert!(run_check("k", Default::default(), None, |ck| krawtchouk_self(ck, &kp)).passed());
        let rp = RacahParams::finite(rat(1, 2), rat(1, 3), 3, rat(1, 5));
        assert!(run_check("r", Default::default(), None, |ck| racah_swap(ck, &rp)).passed());
    }
}
