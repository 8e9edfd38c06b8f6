//! `𝒥_α(x) = Σ_k (-x²/4)^k / ((α+1)_k k!)`.

use crate::error::{invalid, Error, Result};
use crate::rat::Rat;

use super::finite;

const MAX_TERMS: usize = 1000;

/// Sums the `0F1` series until a term drops below `tol` times the partial
/// sum. The partial sums are exact rationals in the (dyadic) inputs, so the
/// cancellation between alternating terms for `|x|` of order 10 costs
/// nothing; only the final conversion rounds.
pub fn bessel_script_j(alpha: f64, x: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return invalid(format!("tolerance must be positive (got {tol})"));
    }
    if !(alpha > -1.0) {
        return invalid(format!("need alpha > -1 (got {alpha})"));
    }
    let (a, xr) = match (Rat::from_f64(alpha), Rat::from_f64(x)) {
        (Some(a), Some(xr)) => (a, xr),
        _ => return Err(Error::NonFinite("bessel argument".into())),
    };
    let step = -(&xr * &xr) / 4;
    let mut term = Rat::one();
    let mut sum = Rat::one();
    for k in 0..MAX_TERMS {
        let kk = Rat::from_int(k as i64);
        term = term * &step / ((&a + 1 + &kk) * (kk + 1));
        sum += &term;
        if term.to_f64().abs() < tol * sum.to_f64().abs() || term.is_zero() {
            return finite(sum.to_f64(), "bessel series");
        }
    }
    Err(Error::NonConvergence(format!("bessel series at x = {x} exceeded {MAX_TERMS} terms")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const POINTS: [f64; 5] = [0.5, 1.0, 2.0, 5.0, 10.0];

    #[test]
    fn half_integer_cases() {
        for x in POINTS {
            let c = bessel_script_j(-0.5, x, 1e-17).unwrap();
            let s = bessel_script_j(0.5, x, 1e-17).unwrap();
            assert!((c - x.cos()).abs() < 1e-12, "{x}: {c}");
            assert!((s - x.sin() / x).abs() < 1e-12, "{x}: {s}");
        }
    }

    #[test]
    fn even_and_normalized() {
        assert_eq!(bessel_script_j(1.5, 0.0, 1e-16).unwrap(), 1.0);
        for x in POINTS {
            assert_eq!(bessel_script_j(0.25, x, 1e-16).unwrap(), bessel_script_j(0.25, -x, 1e-16).unwrap());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(bessel_script_j(-1.0, 1.0, 1e-12).is_err());
        assert!(bessel_script_j(0.0, f64::NAN, 1e-12).is_err());
        assert!(bessel_script_j(0.0, 1.0, 0.0).is_err());
    }
}
