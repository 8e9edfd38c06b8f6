//! Gram matrices of the finite discrete families.

use crate::error::{Error, Result};
use crate::families::{
    hahn, hahn_weight, krawtchouk, krawtchouk_norm, krawtchouk_weight, qracah, qracah_norms,
    qracah_weight, racah, racah_norms, racah_weight, HahnParams, KrawtchoukParams, QRacahParams,
    RacahParams,
};
use crate::rat::Rat;

use super::Checker;

type Eval<'a> = Box<dyn Fn(usize, usize) -> Result<Rat> + 'a>;
type Norm<'a> = Box<dyn Fn(usize) -> Result<Rat> + 'a>;

/// `Σ_x p_m(x) p_n(x) w(x) = h_n δ_{mn}`; with `norm = None` only the
/// off-diagonal entries are compared.
fn gram(
    ck: &mut Checker,
    big_n: usize,
    poly: Eval<'_>,
    weight: impl Fn(usize) -> Result<Rat>,
    norm: Option<Norm<'_>>,
) -> Result<()> {
    let w: Vec<Rat> = (0..=big_n).map(&weight).collect::<Result<_>>()?;
    if let Some(x) = w.iter().position(|w| !w.is_positive()) {
        return Err(Error::NonPositiveWeight(x));
    }
    let table: Vec<Vec<Rat>> = (0..=big_n)
        .map(|n| (0..=big_n).map(|x| poly(n, x)).collect())
        .collect::<Result<_>>()?;
    for m in 0..=big_n {
        for n in m..=big_n {
            let sum: Rat = (0..=big_n).map(|x| &table[m][x] * &table[n][x] * &w[x]).sum();
            let expected = if m != n {
                Rat::zero()
            } else if let Some(h) = &norm {
                h(n)?
            } else {
                continue;
            };
            ck.eq_rat(format!("(m, n) = ({m}, {n})"), &sum, &expected);
        }
    }
    Ok(())
}

pub fn krawtchouk_gram(ck: &mut Checker, kp: &KrawtchoukParams) -> Result<()> {
    gram(
        ck,
        kp.n_max,
        Box::new(|n, x| krawtchouk(n, x, kp)),
        |x| krawtchouk_weight(x, kp),
        Some(Box::new(|n| krawtchouk_norm(n, kp))),
    )
}

/// Off-diagonal only; no norm is stated for Hahn.
pub fn hahn_gram(ck: &mut Checker, hp: &HahnParams) -> Result<()> {
    gram(ck, hp.n_max, Box::new(|n, x| hahn(n, x, hp)), |x| hahn_weight(x, hp), None)
}

pub fn racah_gram(ck: &mut Checker, rp: &RacahParams) -> Result<()> {
    let big_n = rp
        .n_max()
        .ok_or_else(|| Error::InvalidParams("Racah orthogonality needs γ = -N-1".into()))?;
    gram(
        ck,
        big_n,
        Box::new(|n, x| racah(n, x, rp)),
        |x| racah_weight(x, rp),
        Some(Box::new(|n| racah_norms(n, rp).map(|h| h.hn()))),
    )
}

pub fn qracah_gram(ck: &mut Checker, qrp: &QRacahParams) -> Result<()> {
    gram(
        ck,
        qrp.n_max,
        Box::new(|n, x| qracah(n, x, qrp)),
        |x| qracah_weight(x, qrp),
        Some(Box::new(|n| qracah_norms(n, qrp).map(|h| h.hn()))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::run_check;
    use crate::params::QParams;
    use crate::rat::rat;

    #[test]
    fn families_are_orthogonal() {
        let kp = KrawtchoukParams::new(rat(1, 3), 4).unwrap();
        assert!(run_check("k", Default::default(), None, |ck| krawtchouk_gram(ck, &kp)).passed());
        let hp = HahnParams::new(rat(1, 2), rat(3, 2), 4).unwrap();
        assert!(run_check("h", Default::default(), None, |ck| hahn_gram(ck, &hp)).passed());
        let rp = RacahParams::finite(rat(1, 2), rat(1, 3), 4, rat(11, 2));
        assert!(run_check("r", Default::default(), None, |ck| racah_gram(ck, &rp)).passed());
        let qrp = QRacahParams::new(rat(1, 3), rat(1, 2), 4, rat(-4, 1), rat(1, 4)).unwrap();
        assert!(run_check("q", Default::default(), None, |ck| qracah_gram(ck, &qrp)).passed());
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        let lin = QRacahParams::cqu_linearization(&qp, 5, 4).unwrap();
        let r = run_check("q", Default::default(), None, |ck| qracah_gram(ck, &lin));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.comparisons, 15);
    }

    #[test]
    fn negative_weight_is_an_error() {
        let rp = RacahParams::finite(rat(1, 2), rat(1, 3), 3, rat(1, 5));
        let r = run_check("r", Default::default(), None, |ck| racah_gram(ck, &rp));
        assert_eq!(r.verdict, crate::identities::Verdict::Error);
    }
}
