//! Racah polynomials on the quadratic lattice `x(x + γ + δ + 1)`.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::rat::Rat;
use crate::series::{hyper_sum, pochhammer, Base};

/// Racah parameters. `gamma` is kept general so the dual family (whose third
/// parameter is the original `α`) fits the same type; weights and norms need
/// the finite case `γ = -N-1`, see [`RacahParams::finite`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RacahParams {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub delta: Rat,
}

/// `h_n / h_0` and `h_0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Norms {
    pub ratio: Rat,
    pub h0: Rat,
}

impl Norms {
    pub fn hn(&self) -> Rat {
        &self.ratio * &self.h0
    }
}

impl RacahParams {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat, delta: Rat) -> Self {
        RacahParams { alpha, beta, gamma, delta }
    }

    /// `γ = -N-1`. `N = 0` is allowed; it is the degenerate one-point lattice.
    pub fn finite(alpha: Rat, beta: Rat, n_max: usize, delta: Rat) -> Self {
        RacahParams::new(alpha, beta, Rat::from_int(-(n_max as i64) - 1), delta)
    }

    /// The specialization `(α-½, α-½, -m-1, -ℓ-α-½)` whose weights are the
    /// Gegenbauer linearization coefficients.
    pub fn gegenbauer_linearization(alpha: &Rat, l: usize, m: usize) -> Result<Self> {
        if l < m {
            return invalid(format!("need l >= m (got l = {l}, m = {m})"));
        }
        let half = Rat::new(1, 2);
        let a = alpha - &half;
        Ok(RacahParams::finite(
            a.clone(),
            a,
            m,
            -Rat::from_int(l as i64) - alpha - half,
        ))
    }

    /// `N` when `γ = -N-1`.
    pub fn n_max(&self) -> Option<usize> {
        (&self.gamma + 1).as_neg_natural()
    }

    fn require_finite(&self) -> Result<usize> {
        self.n_max()
            .ok_or_else(|| Error::InvalidParams(format!("γ = {} is not of the form -N-1", self.gamma)))
    }

    /// Parameters of the dual family `(γ, δ, α, β)`.
    pub fn dual(&self) -> RacahParams {
        RacahParams::new(
            self.gamma.clone(),
            self.delta.clone(),
            self.alpha.clone(),
            self.beta.clone(),
        )
    }
}

/// `4F3(-n, n+α+β+1, -x, x+γ+δ+1; α+1, β+δ+1, γ+1; 1)` at lattice index `x`.
pub fn racah(n: usize, x: usize, rp: &RacahParams) -> Result<Rat> {
    if let Some(big_n) = rp.n_max() {
        if n > big_n || x > big_n {
            return invalid(format!("n = {n}, x = {x} must lie in 0..={big_n}"));
        }
    }
    let nn = Rat::from_int(n as i64);
    let xx = Rat::from_int(x as i64);
    hyper_sum(
        &[
            -nn.clone(),
            &nn + &rp.alpha + &rp.beta + 1,
            -xx.clone(),
            &xx + &rp.gamma + &rp.delta + 1,
        ],
        &[&rp.alpha + 1, &rp.beta + &rp.delta + 1, &rp.gamma + 1],
        &Rat::one(),
        &Base::Unit,
        n,
    )
}

fn checked_div(num: Rat, den: Rat, what: &'static str, index: usize) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::VanishingDenominator { what, index });
    }
    Ok(num / den)
}

/// Orthogonality weight `w(x)`.
pub fn racah_weight(x: usize, rp: &RacahParams) -> Result<Rat> {
    let big_n = rp.require_finite()?;
    if x > big_n {
        return invalid(format!("x = {x} must lie in 0..={big_n}"));
    }
    let (a, b, g, d) = (&rp.alpha, &rp.beta, &rp.gamma, &rp.delta);
    let gd1 = g + d + 1;
    let num = pochhammer(&(a + 1), x)
        * pochhammer(&(b + d + 1), x)
        * pochhammer(&(g + 1), x)
        * pochhammer(&gd1, x)
        * (&gd1 + Rat::from_int(2 * x as i64));
    let den = pochhammer(&(-a + &gd1), x)
        * pochhammer(&(-b + g + 1), x)
        * pochhammer(&(d + 1), x)
        * pochhammer(&Rat::one(), x)
        * &gd1;
    checked_div(num, den, "racah weight", x)
}

/// `h_n / h_0` and `h_0 = Σ_x w(x)` in closed form.
pub fn racah_norms(n: usize, rp: &RacahParams) -> Result<Norms> {
    let big_n = rp.require_finite()?;
    if n > big_n {
        return invalid(format!("n = {n} must lie in 0..={big_n}"));
    }
    let (a, b, g, d) = (&rp.alpha, &rp.beta, &rp.gamma, &rp.delta);
    let ratio = if n == 0 {
        Rat::one()
    } else {
        // (α+β+1)/(α+β+1)_n = 1/(α+β+2)_{n-1}, which stays finite at α+β+1 = 0.
        let num = pochhammer(&(b + 1), n)
            * pochhammer(&(a + b - g + 1), n)
            * pochhammer(&(a - d + 1), n)
            * pochhammer(&Rat::one(), n);
        let den = (a + b + Rat::from_int(2 * n as i64 + 1))
            * pochhammer(&(a + b + 2), n - 1)
            * pochhammer(&(a + 1), n)
            * pochhammer(&(b + d + 1), n)
            * pochhammer(&(g + 1), n);
        checked_div(num, den, "racah norm ratio", n)?
    };
    let h0 = checked_div(
        pochhammer(&(a + b + 2), big_n) * pochhammer(&-d, big_n),
        pochhammer(&(a - d + 1), big_n) * pochhammer(&(b + 1), big_n),
        "racah h0",
        big_n,
    )?;
    Ok(Norms { ratio, h0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn sample() -> RacahParams {
        RacahParams::finite(rat(1, 2), rat(1, 3), 3, rat(1, 5))
    }

    #[test]
    fn trivial_values() {
        let rp = sample();
        for k in 0..=3 {
            assert_eq!(racah(0, k, &rp).unwrap(), Rat::one());
            assert_eq!(racah(k, 0, &rp).unwrap(), Rat::one());
        }
        assert_eq!(racah_weight(0, &rp).unwrap(), Rat::one());
        assert_eq!(racah_norms(0, &rp).unwrap().ratio, Rat::one());
    }

    #[test]
    fn duality_swap() {
        let rp = sample();
        let dual = rp.dual();
        for n in 0..=3 {
            for x in 0..=3 {
                assert_eq!(racah(n, x, &rp).unwrap(), racah(x, n, &dual).unwrap());
            }
        }
    }

    #[test]
    fn weights_sum_to_h0() {
        for rp in [
            sample(),
            RacahParams::finite(rat(1, 2), rat(1, 3), 3, rat(9, 2)),
            RacahParams::finite(rat(2, 3), rat(-1, 4), 3, rat(-17, 3)),
        ] {
            let total: Rat = (0..=3).map(|x| racah_weight(x, &rp).unwrap()).sum();
            assert_eq!(total, racah_norms(0, &rp).unwrap().h0);
        }
    }

    #[test]
    fn legendre_specialization_has_finite_norms() {
        let rp = RacahParams::gegenbauer_linearization(&Rat::zero(), 3, 2).unwrap();
        for n in 0..=2 {
            racah_norms(n, &rp).unwrap();
        }
    }
}
