//! The weighted sum `S_{k,ℓ,m}` of continuous q-ultraspherical polynomials
//! against q-Racah polynomials, summed directly and in product form.

use std::collections::HashMap;

use crate::error::Result;
use crate::families::{cqu_r, qracah, qracah_norms, qracah_weight, QRacahParams};
use crate::laurent::{qpoch_laurent_pair, SymmetricLaurent};
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::{pm_qpochhammer, qpochhammer};

use super::Checker;

/// Memoized `R_n^{q^kβ;q}` for one base parameter set.
#[derive(Debug)]
pub struct CquTable {
    qp: QParams,
    cache: HashMap<(usize, usize), SymmetricLaurent>,
}

impl CquTable {
    pub fn new(qp: &QParams) -> Self {
        CquTable { qp: qp.clone(), cache: HashMap::new() }
    }

    pub fn qparams(&self) -> &QParams {
        &self.qp
    }

    /// `R_n` of the family shifted by `q^k` in `β`.
    pub fn get(&mut self, shift: usize, n: usize) -> Result<&SymmetricLaurent> {
        if !self.cache.contains_key(&(shift, n)) {
            let r = cqu_r(n, &self.qp.shifted(shift))?;
            self.cache.insert((shift, n), r);
        }
        Ok(&self.cache[&(shift, n)])
    }

    /// `R_a R_b`, both shifted by `q^shift`.
    pub fn product(&mut self, shift: usize, a: usize, b: usize) -> Result<SymmetricLaurent> {
        self.get(shift, b)?;
        let rb = self.cache[&(shift, b)].clone();
        Ok(self.get(shift, a)? * &rb)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Brute,
    Closed,
}

/// `h_0` of the linearization q-Racah family, in the product form
/// `(qβ²;q)_ℓ (qβ²;q)_m (q^{1/2}β;q)_{ℓ+m} / ((qβ²;q)_{ℓ+m} (q^{1/2}β;q)_ℓ (q^{1/2}β;q)_m)`.
pub fn linearization_h0(qp: &QParams, l: usize, m: usize) -> Rat {
    let q = qp.q();
    let b2 = &q * qp.beta() * qp.beta();
    let hb = qp.qhalf() * qp.beta();
    qpochhammer(&b2, &q, l) * qpochhammer(&b2, &q, m) * qpochhammer(&hb, &q, l + m)
        / (qpochhammer(&b2, &q, l + m) * qpochhammer(&hb, &q, l) * qpochhammer(&hb, &q, m))
}

/// Scalar prefactor of the product form:
/// `(q^{(ℓ+m+1)/2}β)^k (β^{-1}q^{-ℓ-m+1/2}; q)_k / (-q^{1/2}β, ±qβ; q)_k`.
pub fn closed_prefactor(qp: &QParams, k: usize, l: usize, m: usize) -> Rat {
    let (t, q, b) = (qp.t(), qp.q(), qp.beta());
    let lm = (l + m) as i64;
    let lead = (t.pow(2 * (lm + 1)) * &b).pow(k as i64);
    let num = qpochhammer(&(t.pow(2 - 4 * lm) / &b), &q, k);
    let den = qpochhammer(&-(qp.qhalf() * &b), &q, k) * pm_qpochhammer(&(&q * &b), &q, k);
    lead * num / den
}

/// `(±q^{1/4}β^{1/2}z, ±q^{1/4}β^{1/2}z⁻¹; q^{1/2})_k`.
pub fn pm_laurent(qp: &QParams, k: usize) -> SymmetricLaurent {
    let t2 = qp.qhalf();
    &qpoch_laurent_pair(&qp.a(), &t2, k) * &qpoch_laurent_pair(&-qp.a(), &t2, k)
}

pub fn compute_s(
    table: &mut CquTable,
    k: usize,
    l: usize,
    m: usize,
    mode: Mode,
) -> Result<SymmetricLaurent> {
    let qp = table.qparams().clone();
    match mode {
        Mode::Brute => {
            let qrp = QRacahParams::cqu_linearization(&qp, l, m)?;
            let mut acc = SymmetricLaurent::zero();
            for j in 0..=m {
                let c = qracah_weight(j, &qrp)? * qracah(k, j, &qrp)?;
                acc = &acc + &table.get(0, l + m - 2 * j)?.scale(&c);
            }
            Ok(acc)
        }
        Mode::Closed => {
            let c = closed_prefactor(&qp, k, l, m) * linearization_h0(&qp.shifted(k), l - k, m - k);
            let product = table.product(k, l - k, m - k)?;
            Ok((&pm_laurent(&qp, k) * &product).scale(&c))
        }
    }
}

/// Both modes of `S_{k,ℓ,m}` for `k <= m <= min(ℓ, mmax)`, the `k = 0`
/// reduction to `h_0 R_ℓ R_m`, and the product-form `h_0` against the
/// weight sum.
pub fn theorem(ck: &mut Checker, table: &mut CquTable, l: usize, mmax: usize) -> Result<()> {
    let qp = table.qparams().clone();
    for m in 0..=l.min(mmax) {
        let h0 = linearization_h0(&qp, l, m);
        let qrp = QRacahParams::cqu_linearization(&qp, l, m)?;
        ck.eq_rat(format!("h_0 at (l, m) = ({l}, {m})"), &h0, &qracah_norms(0, &qrp)?.h0);
        for k in 0..=m {
            let brute = compute_s(table, k, l, m, Mode::Brute)?;
            let closed = compute_s(table, k, l, m, Mode::Closed)?;
            ck.eq_sym(format!("(k, l, m) = ({k}, {l}, {m})"), &brute, &closed);
            if k == 0 {
                let product = table.product(0, l, m)?.scale(&h0);
                ck.eq_sym(format!("k = 0 reduction at (l, m) = ({l}, {m})"), &closed, &product);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::run_check;
    use crate::rat::rat;

    #[test]
    fn small_cases() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        let mut table = CquTable::new(&qp);
        let brute = compute_s(&mut table, 1, 2, 1, Mode::Brute).unwrap();
        let closed = compute_s(&mut table, 1, 2, 1, Mode::Closed).unwrap();
        assert_eq!(brute, closed);
        let s000 = compute_s(&mut table, 0, 0, 0, Mode::Closed).unwrap();
        assert_eq!(s000, SymmetricLaurent::one());
    }

    #[test]
    fn theorem_for_l_three() {
        let qp = QParams::new(rat(2, 3), rat(1, 2)).unwrap();
        let mut table = CquTable::new(&qp);
        let r = run_check("t", Default::default(), None, |ck| theorem(ck, &mut table, 3, 3));
        assert!(r.passed(), "{r:?}");
    }
}
