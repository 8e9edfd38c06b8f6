//! Shifted factorials and terminating (q-)hypergeometric series.
//!
//! Series are summed by term ratio: `term[k+1] = term[k] * num(k) / den(k)`.
//! Summation stops at the first index where a numerator factor vanishes, so a
//! denominator parameter `-N` (or `q^{-N}`) with `N >= n` is never divided by.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Field operations shared by the exact and floating-point evaluation paths.
pub trait Scalar:
    Clone
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
}

impl Scalar for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn from_i64(n: i64) -> Self {
        Rat::from_int(n)
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

/// Integer power for any scalar (negative exponents invert).
pub fn powi<T: Scalar>(base: &T, exp: i64) -> T {
    let mut acc = T::one();
    for _ in 0..exp.unsigned_abs() {
        acc = acc * base.clone();
    }
    if exp < 0 {
        T::one() / acc
    } else {
        acc
    }
}

/// `[1, b, b^2, ..., b^len]`.
pub fn powers<T: Scalar>(b: &T, len: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(len + 1);
    let mut acc = T::one();
    for _ in 0..=len {
        out.push(acc.clone());
        acc = acc * b.clone();
    }
    out
}

/// Pochhammer symbol `(b)_k = b (b+1) ... (b+k-1)`.
pub fn pochhammer<T: Scalar>(b: &T, k: usize) -> T {
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * (b.clone() + T::from_i64(i as i64));
    }
    acc
}

/// q-shifted factorial `(b; q)_k = (1-b)(1-qb)...(1-q^{k-1} b)`.
pub fn qpochhammer<T: Scalar>(b: &T, qbase: &T, k: usize) -> T {
    let mut acc = T::one();
    let mut factor = b.clone();
    for _ in 0..k {
        acc = acc * (T::one() - factor.clone());
        factor = factor * qbase.clone();
    }
    acc
}

/// `(±a; q)_k = (a; q)_k (-a; q)_k`.
pub fn pm_qpochhammer<T: Scalar>(a: &T, qbase: &T, k: usize) -> T {
    qpochhammer(a, qbase, k) * qpochhammer(&-a.clone(), qbase, k)
}

/// Product of several q-shifted factorials with a common base and length.
pub fn qpochhammer_many<T: Scalar>(bs: &[T], qbase: &T, k: usize) -> T {
    bs.iter()
        .fold(T::one(), |acc, b| acc * qpochhammer(b, qbase, k))
}

/// Sums `Σ_{k=0}^{n} term_k` with `term_0 = 1` and
/// `term_{k+1} = term_k · num(k) / den(k)`.
///
/// Stops after the first `k` with `num(k) = 0`. A zero `den(k)` before that
/// point is reported as [`Error::DenominatorVanished`].
pub fn sum_by_ratio<T: Scalar>(
    n: usize,
    mut num: impl FnMut(usize) -> T,
    mut den: impl FnMut(usize) -> T,
) -> Result<T> {
    let mut term = T::one();
    let mut sum = T::one();
    for k in 0..n {
        let nk = num(k);
        if nk.is_zero() {
            break;
        }
        let dk = den(k);
        if dk.is_zero() {
            return Err(Error::DenominatorVanished(k));
        }
        term = term * nk / dk;
        sum = sum + term.clone();
    }
    Ok(sum)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Base<T> {
    /// Ordinary series, Pochhammer symbols `(a)_k`.
    Unit,
    /// Basic series in base `b`, q-shifted factorials `(a; b)_k`.
    Q(T),
}

/// Generic terminating series: `r F s` (unit base) or `s+1 φ s` (q base) where
/// `numerators` includes the terminating parameter.
pub fn hyper_sum<T: Scalar>(
    numerators: &[T],
    denominators: &[T],
    argument: &T,
    base: &Base<T>,
    n: usize,
) -> Result<T> {
    match base {
        Base::Unit => sum_by_ratio(
            n,
            |k| {
                let kk = T::from_i64(k as i64);
                numerators
                    .iter()
                    .fold(argument.clone(), |acc, a| acc * (a.clone() + kk.clone()))
            },
            |k| {
                let kk = T::from_i64(k as i64);
                denominators
                    .iter()
                    .fold(T::from_i64(k as i64 + 1), |acc, b| {
                        acc * (b.clone() + kk.clone())
                    })
            },
        ),
        Base::Q(qb) => {
            let pows = powers(qb, n + 1);
            sum_by_ratio(
                n,
                |k| {
                    numerators.iter().fold(argument.clone(), |acc, a| {
                        acc * (T::one() - a.clone() * pows[k].clone())
                    })
                },
                |k| {
                    denominators
                        .iter()
                        .fold(T::one() - pows[k + 1].clone(), |acc, b| {
                            acc * (T::one() - b.clone() * pows[k].clone())
                        })
                },
            )
        }
    }
}

/// Exact description of a terminating (q-)hypergeometric series.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperSeriesSpec {
    numerators: Vec<Rat>,
    denominators: Vec<Rat>,
    argument: Rat,
    base: Base<Rat>,
    termination: usize,
}

impl HyperSeriesSpec {
    /// Validates that some numerator equals `-n` (unit base) or `b^{-n}`
    /// (q base), and that no denominator factor vanishes before the series
    /// terminates.
    pub fn new(
        numerators: Vec<Rat>,
        denominators: Vec<Rat>,
        argument: Rat,
        base: Base<Rat>,
        termination: usize,
    ) -> Result<Self> {
        let leading = match &base {
            Base::Unit => Rat::from_int(-(termination as i64)),
            Base::Q(b) => {
                if !(b.is_positive() && *b < 1) {
                    return Err(Error::InvalidParams(format!(
                        "q base must lie in (0, 1), got {b}"
                    )));
                }
                b.pow(-(termination as i64))
            }
        };
        if !numerators.contains(&leading) {
            return Err(Error::InvalidParams(format!(
                "no numerator parameter equals {leading} (termination index {termination})"
            )));
        }
        let spec = HyperSeriesSpec {
            numerators,
            denominators,
            argument,
            base,
            termination,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let stop = self.effective_termination();
        for k in 0..stop {
            for b in &self.denominators {
                if self.factor(b, k).is_zero() {
                    return Err(Error::DenominatorVanished(k));
                }
            }
        }
        Ok(())
    }

    fn factor(&self, a: &Rat, k: usize) -> Rat {
        match &self.base {
            Base::Unit => a + Rat::from_int(k as i64),
            Base::Q(b) => Rat::one() - a * b.pow(k as i64),
        }
    }

    /// Index of the last possibly nonzero term.
    pub fn effective_termination(&self) -> usize {
        (0..self.termination)
            .find(|&k| self.numerators.iter().any(|a| self.factor(a, k).is_zero()))
            .unwrap_or(self.termination)
    }

    pub fn termination(&self) -> usize {
        self.termination
    }

    pub fn numerators(&self) -> &[Rat] {
        &self.numerators
    }

    pub fn denominators(&self) -> &[Rat] {
        &self.denominators
    }

    pub fn argument(&self) -> &Rat {
        &self.argument
    }

    pub fn base(&self) -> &Base<Rat> {
        &self.base
    }
}

/// Exact value of a validated terminating series.
pub fn terminating_hyper(spec: &HyperSeriesSpec) -> Result<Rat> {
    hyper_sum(
        &spec.numerators,
        &spec.denominators,
        &spec.argument,
        &spec.base,
        spec.termination,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&Rat::from_int(2), 3), Rat::from_int(24));
        assert_eq!(pochhammer(&rat(7, 3), 0), Rat::one());
        assert_eq!(pochhammer(&Rat::from_int(-2), 4), Rat::zero());
    }

    #[test]
    fn qpochhammer_examples() {
        assert_eq!(qpochhammer(&rat(1, 2), &rat(1, 4), 2), rat(7, 16));
        assert_eq!(qpochhammer(&rat(3, 5), &rat(1, 4), 0), Rat::one());
        assert_eq!(qpochhammer(&Rat::from_int(4), &rat(1, 4), 2), Rat::zero());
    }

    #[test]
    fn pm_qpochhammer_examples() {
        assert_eq!(pm_qpochhammer(&rat(2, 7), &rat(1, 3), 0), Rat::one());
        assert_eq!(pm_qpochhammer(&rat(1, 2), &rat(1, 4), 1), rat(3, 4));
        for k in 1..4 {
            assert!(pm_qpochhammer(&Rat::one(), &rat(1, 3), k).is_zero());
        }
    }

    #[test]
    fn two_term_gauss_sum() {
        let spec = HyperSeriesSpec::new(
            vec![Rat::from_int(-1), Rat::from_int(2)],
            vec![Rat::from_int(3)],
            Rat::one(),
            Base::Unit,
            1,
        )
        .unwrap();
        assert_eq!(terminating_hyper(&spec).unwrap(), rat(1, 3));
    }

    #[test]
    fn zero_termination_is_one() {
        let spec = HyperSeriesSpec::new(
            vec![Rat::zero(), rat(5, 2)],
            vec![rat(-7, 3)],
            rat(9, 2),
            Base::Unit,
            0,
        )
        .unwrap();
        assert_eq!(terminating_hyper(&spec).unwrap(), Rat::one());
        let q = rat(1, 3);
        let spec = HyperSeriesSpec::new(
            vec![Rat::one(), rat(2, 5)],
            vec![rat(1, 7)],
            q.clone(),
            Base::Q(q),
            0,
        )
        .unwrap();
        assert_eq!(terminating_hyper(&spec).unwrap(), Rat::one());
    }

    #[test]
    fn zero_numerator_kills_tail() {
        for n in 0..6i64 {
            let alpha = rat(1, 3);
            let spec = HyperSeriesSpec::new(
                vec![
                    Rat::from_int(-n),
                    Rat::from_int(n) + alpha.clone() * 2,
                    Rat::zero(),
                    rat(3, 2),
                ],
                vec![rat(4, 3), rat(5, 7), Rat::from_int(-9)],
                Rat::one(),
                Base::Unit,
                n as usize,
            )
            .unwrap();
            assert_eq!(terminating_hyper(&spec).unwrap(), Rat::one());
        }
    }

    #[test]
    fn denominator_beyond_termination_is_allowed() {
        // 2F1(-2, 1; -3; 1): (-3)_k never vanishes for k <= 2
        let spec = HyperSeriesSpec::new(
            vec![Rat::from_int(-2), Rat::one()],
            vec![Rat::from_int(-3)],
            Rat::one(),
            Base::Unit,
            2,
        )
        .unwrap();
        // 1 + (-2)(1)/(-3) + (-2)(-1)(1)(2)/((-3)(-2) 2) = 1 + 2/3 + 1/3
        assert_eq!(terminating_hyper(&spec).unwrap(), Rat::from_int(2));
    }

    #[test]
    fn vanishing_denominator_rejected() {
        let err = HyperSeriesSpec::new(
            vec![Rat::from_int(-3), Rat::one()],
            vec![Rat::from_int(-1)],
            Rat::one(),
            Base::Unit,
            3,
        )
        .unwrap_err();
        assert_eq!(err, Error::DenominatorVanished(1));
    }

    #[test]
    fn missing_leading_parameter_rejected() {
        assert!(matches!(
            HyperSeriesSpec::new(vec![rat(1, 2)], vec![], Rat::one(), Base::Unit, 2),
            Err(Error::InvalidParams(_))
        ));
        let q = rat(1, 2);
        assert!(HyperSeriesSpec::new(
            vec![Rat::from_int(8)],
            vec![rat(1, 3)],
            q.clone(),
            Base::Q(q),
            3
        )
        .is_ok());
    }

    #[test]
    fn float_and_exact_agree() {
        let q = rat(1, 3);
        let nums = [q.pow(-3), rat(2, 5), rat(-3, 7)];
        let dens = [rat(1, 5), rat(-1, 2)];
        let exact = hyper_sum(&nums, &dens, &q, &Base::Q(q.clone()), 3).unwrap();
        let fnums: Vec<f64> = nums.iter().map(Rat::to_f64).collect();
        let fdens: Vec<f64> = dens.iter().map(Rat::to_f64).collect();
        let float = hyper_sum(&fnums, &fdens, &(1.0 / 3.0), &Base::Q(1.0 / 3.0), 3).unwrap();
        assert!((exact.to_f64() - float).abs() < 1e-12 * exact.to_f64().abs().max(1.0));
    }
}
