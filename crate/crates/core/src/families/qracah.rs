//! q-Racah polynomials on the q-quadratic lattice `q^{-x} + γδ q^{x+1}`.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::families::askey_wilson::AWParams;
use crate::families::racah::Norms;
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::{hyper_sum, qpochhammer, qpochhammer_many, Base};

/// q-Racah parameters with `γ = q^{-N-1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QRacahParams {
    pub alpha: Rat,
    pub beta: Rat,
    pub delta: Rat,
    #[serde(rename = "N")]
    pub n_max: usize,
    pub q: Rat,
}

impl QRacahParams {
    /// Validates `0 < q < 1`, nonzero `α, β` and every weight denominator on
    /// `x = 0..=N`. `N = 0` is accepted as the one-point lattice.
    pub fn new(alpha: Rat, beta: Rat, n_max: usize, delta: Rat, q: Rat) -> Result<Self> {
        if !(q.is_positive() && q < 1) {
            return invalid(format!("q = {q} must lie in (0, 1)"));
        }
        if alpha.is_zero() || beta.is_zero() || delta.is_zero() {
            return invalid("q-Racah needs nonzero alpha, beta, delta");
        }
        let p = QRacahParams { alpha, beta, delta, n_max, q };
        let gd = p.gamma() * &p.delta;
        if (Rat::one() - &gd * &p.q).is_zero() {
            return Err(Error::VanishingDenominator { what: "q-racah weight", index: 0 });
        }
        let den_params = p.weight_den_params();
        for x in 0..=n_max {
            if qpochhammer_many(&den_params, &p.q, x).is_zero() {
                return Err(Error::VanishingDenominator { what: "q-racah weight", index: x });
            }
        }
        Ok(p)
    }

    /// `(βq^{-1/2}, βq^{-1/2}, q^{-m-1}, β^{-1}q^{-ℓ-1/2})`, whose weights
    /// are the linearization coefficients of `R_ℓ^{β;q} R_m^{β;q}`.
    pub fn cqu_linearization(qp: &QParams, l: usize, m: usize) -> Result<Self> {
        if l < m {
            return invalid(format!("need l >= m (got l = {l}, m = {m})"));
        }
        let ab = qp.beta() / qp.qhalf();
        let delta = (qp.beta() * qp.t().pow(4 * l as i64 + 2)).recip();
        QRacahParams::new(ab.clone(), ab, m, delta, qp.q())
    }

    pub fn gamma(&self) -> Rat {
        self.q.pow(-(self.n_max as i64) - 1)
    }

    /// `(qα, qβ, qγ, δ)`: the family appearing in the backward shift.
    pub fn shifted(&self) -> Result<Self> {
        if self.n_max == 0 {
            return invalid("cannot shift a q-Racah family with N = 0");
        }
        QRacahParams::new(
            &self.q * &self.alpha,
            &self.q * &self.beta,
            self.n_max - 1,
            self.delta.clone(),
            self.q.clone(),
        )
    }

    /// Lattice value `q^{-x} + γδ q^{x+1}`.
    pub fn lattice(&self, x: usize) -> Rat {
        self.q.pow(-(x as i64)) + self.gamma() * &self.delta * self.q.pow(x as i64 + 1)
    }

    fn weight_den_params(&self) -> [Rat; 4] {
        let (q, g) = (&self.q, self.gamma());
        [
            q.clone(),
            &g * &self.delta * q / &self.alpha,
            &g * q / &self.beta,
            &self.delta * q,
        ]
    }

    /// When `qγδ` is a rational square, the Askey-Wilson parameters
    /// `(a, qα/a, qγ/a, qβδ/a)` with `a² = qγδ` and the map `x ↦ z = a q^x`
    /// under which `R_n(x) = R_n[z]`.
    pub fn as_askey_wilson(&self, a: Rat) -> Result<AWParams> {
        if &a * &a != &self.q * self.gamma() * &self.delta {
            return invalid(format!("a = {a} does not satisfy a^2 = q γ δ"));
        }
        let q = &self.q;
        AWParams::discrete(
            a.clone(),
            q * &self.alpha / &a,
            q * self.gamma() / &a,
            q * &self.beta * &self.delta / &a,
            q.clone(),
        )
    }

    fn check_index(&self, i: usize, name: &str) -> Result<()> {
        if i > self.n_max {
            return invalid(format!("{name} = {i} must lie in 0..={}", self.n_max));
        }
        Ok(())
    }
}

/// `4φ3(q^{-n}, q^{n+1}αβ, q^{-x}, q^{x+1}γδ; qα, qβδ, qγ; q, q)`.
pub fn qracah(n: usize, x: usize, qrp: &QRacahParams) -> Result<Rat> {
    qrp.check_index(n, "n")?;
    qrp.check_index(x, "x")?;
    let q = &qrp.q;
    let g = qrp.gamma();
    hyper_sum(
        &[
            q.pow(-(n as i64)),
            q.pow(n as i64 + 1) * &qrp.alpha * &qrp.beta,
            q.pow(-(x as i64)),
            q.pow(x as i64 + 1) * &g * &qrp.delta,
        ],
        &[q * &qrp.alpha, q * &qrp.beta * &qrp.delta, q * &g],
        q,
        &Base::Q(q.clone()),
        n,
    )
}

/// Orthogonality weight `w(x)`.
pub fn qracah_weight(x: usize, qrp: &QRacahParams) -> Result<Rat> {
    qrp.check_index(x, "x")?;
    let (a, b, d, q) = (&qrp.alpha, &qrp.beta, &qrp.delta, &qrp.q);
    let g = qrp.gamma();
    let gd = &g * d;
    let num = (Rat::one() - &gd * q.pow(2 * x as i64 + 1))
        * qpochhammer_many(&[a * q, b * d * q, &g * q, &gd * q], q, x);
    let den = (a * b * q).pow(x as i64)
        * (Rat::one() - &gd * q)
        * qpochhammer_many(&qrp.weight_den_params(), q, x);
    if den.is_zero() {
        return Err(Error::VanishingDenominator { what: "q-racah weight", index: x });
    }
    Ok(num / den)
}

/// `h_n / h_0` and `h_0 = Σ_x w(x)` in closed form.
pub fn qracah_norms(n: usize, qrp: &QRacahParams) -> Result<Norms> {
    qrp.check_index(n, "n")?;
    let (a, b, d, q) = (&qrp.alpha, &qrp.beta, &qrp.delta, &qrp.q);
    let g = qrp.gamma();
    let ab = a * b;
    let ratio_num = (Rat::one() - &ab * q)
        * (q * &g * d).pow(n as i64)
        * qpochhammer_many(&[q.clone(), q * b, q * &ab / &g, q * a / d], q, n);
    let ratio_den = (Rat::one() - &ab * q.pow(2 * n as i64 + 1))
        * qpochhammer_many(&[q * a, q * &ab, q * &g, q * b * d], q, n);
    if ratio_den.is_zero() {
        return Err(Error::VanishingDenominator { what: "q-racah norm ratio", index: n });
    }
    let big_n = qrp.n_max;
    let h0_num = qpochhammer(&(q * q * &ab), q, big_n) * qpochhammer(&d.recip(), q, big_n);
    let h0_den = qpochhammer(&(q * a / d), q, big_n) * qpochhammer(&(q * b), q, big_n);
    if h0_den.is_zero() {
        return Err(Error::VanishingDenominator { what: "q-racah h0", index: big_n });
    }
    Ok(Norms { ratio: ratio_num / ratio_den, h0: h0_num / h0_den })
}

/// Closed form of `R_n` at `x = N`: `(qβ, qα/δ; q)_n / (qα, qβδ; q)_n · δ^n`.
pub fn qracah_at_top(n: usize, qrp: &QRacahParams) -> Result<Rat> {
    qrp.check_index(n, "n")?;
    let (a, b, d, q) = (&qrp.alpha, &qrp.beta, &qrp.delta, &qrp.q);
    let num = qpochhammer_many(&[q * b, q * a / d], q, n);
    let den = qpochhammer_many(&[q * a, q * b * d], q, n);
    if den.is_zero() {
        return Err(Error::VanishingDenominator { what: "q-racah value at x = N", index: n });
    }
    Ok(num / den * d.pow(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::askey_wilson::askey_wilson_at;
    use crate::rat::rat;

    fn generic() -> QRacahParams {
        QRacahParams::new(rat(1, 3), rat(1, 2), 3, rat(1, 5), rat(1, 4)).unwrap()
    }

    #[test]
    fn trivial_values() {
        let p = generic();
        for n in 0..=3 {
            assert_eq!(qracah(n, 0, &p).unwrap(), Rat::one());
            assert_eq!(qracah(0, n, &p).unwrap(), Rat::one());
            assert_eq!(qracah(n, 3, &p).unwrap(), qracah_at_top(n, &p).unwrap());
        }
        assert_eq!(qracah_weight(0, &p).unwrap(), Rat::one());
        assert_eq!(qracah_norms(0, &p).unwrap().ratio, Rat::one());
    }

    #[test]
    fn weights_sum_to_h0() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        for p in [generic(), QRacahParams::cqu_linearization(&qp, 4, 3).unwrap()] {
            let total: Rat = (0..=p.n_max).map(|x| qracah_weight(x, &p).unwrap()).sum();
            assert_eq!(total, qracah_norms(0, &p).unwrap().h0);
        }
    }

    #[test]
    fn matches_askey_wilson_on_lattice() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        let (l, m) = (3, 2);
        let p = QRacahParams::cqu_linearization(&qp, l, m).unwrap();
        let a = (qp.t().pow(2 * (l + m) as i64 + 1) * qp.s()).recip();
        let aw = p.as_askey_wilson(a.clone()).unwrap();
        for n in 0..=m {
            for x in 0..=m {
                let z = &a * p.q.pow(x as i64);
                assert_eq!(qracah(n, x, &p).unwrap(), askey_wilson_at(n, &aw, &z).unwrap());
            }
        }
    }

    #[test]
    fn inadmissible_rejected() {
        assert!(QRacahParams::new(rat(1, 3), rat(1, 2), 3, rat(1, 5), rat(5, 4)).is_err());
        // δq = 1 makes (δq; q)_1 vanish
        assert!(QRacahParams::new(rat(1, 3), rat(1, 2), 3, rat(4, 1), rat(1, 4)).is_err());
    }
}
