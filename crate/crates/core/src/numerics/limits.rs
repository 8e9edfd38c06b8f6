//! Limit transitions checked numerically along dyadic schedules.
//!
//! Every limit is measured as the sup-norm distance between the pre-limit and
//! limit expressions over a fixed point set. No rates are claimed anywhere in
//! the theory; the first-order band used for the verdict is an empirical
//! property of these particular transitions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::families::{cqu_f64, racah, RacahParams};
use crate::identities::dual_addition::{classical_dual_coefficient, dual_coefficient_in};
use crate::identities::Verdict;
use crate::rat::Rat;
use crate::series::{hyper_sum, Base};

use super::bessel::bessel_script_j;
use super::finite;

/// Accepted band for the last successive error ratio of a first-order limit.
pub const RATIO_BAND: (f64, f64) = (0.35, 0.65);
/// Final error required for the Jacobi to Bessel limit.
pub const BESSEL_FINAL: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LimitKind {
    CquToUltra,
    HahnToJacobi,
    JacobiToBessel,
    DualAdditionQTo1,
}

impl LimitKind {
    pub const ALL: [LimitKind; 4] = [
        LimitKind::CquToUltra,
        LimitKind::HahnToJacobi,
        LimitKind::JacobiToBessel,
        LimitKind::DualAdditionQTo1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LimitKind::CquToUltra => "cqu-to-ultra",
            LimitKind::HahnToJacobi => "hahn-to-jacobi",
            LimitKind::JacobiToBessel => "jacobi-to-bessel",
            LimitKind::DualAdditionQTo1 => "dual-addition-q-to-1",
        }
    }

    /// Whether the schedule runs over `q = 1 - 2^{-j}` (otherwise `2^j`).
    pub fn is_q_limit(self) -> bool {
        matches!(self, LimitKind::CquToUltra | LimitKind::DualAdditionQTo1)
    }
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LimitKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LimitKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown limit kind '{s}'")))
    }
}

impl Serialize for LimitKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// What to compare, with its test points.
#[derive(Clone, Debug, PartialEq)]
pub enum LimitSpec {
    /// `R_n^{q^α;q}(x) → R_n^α(x)`.
    CquToUltra { n: usize, alpha: Rat, points: Vec<f64> },
    /// `Q_n(Nx; α, β, N) → 2F1(-n, n+α+β+1; α+1; x)`.
    HahnToJacobi { n: usize, alpha: Rat, beta: Rat, points: Vec<f64> },
    /// `R_n^{(α,β)}(cos(x/n)) → 𝒥_α(x)`.
    JacobiToBessel { alpha: Rat, beta: Rat, points: Vec<f64> },
    /// Each `k`-term of the q dual addition formula at `β = q^α` against the
    /// corresponding classical term, for every `0 <= j <= m`.
    DualAddition { alpha: Rat, l: usize, m: usize, points: Vec<f64> },
}

impl LimitSpec {
    /// The parameter choices used by the `limits` suite.
    pub fn standard(kind: LimitKind) -> LimitSpec {
        let sym = vec![0.0, 0.3, -0.3, 0.7, -0.7];
        match kind {
            LimitKind::CquToUltra => LimitSpec::CquToUltra { n: 3, alpha: Rat::new(1, 2), points: sym },
            LimitKind::HahnToJacobi => LimitSpec::HahnToJacobi {
                n: 2,
                alpha: Rat::zero(),
                beta: Rat::zero(),
                points: vec![0.1, 0.5, 0.9],
            },
            LimitKind::JacobiToBessel => LimitSpec::JacobiToBessel {
                alpha: Rat::new(1, 2),
                beta: Rat::zero(),
                points: vec![0.5, 1.0, 2.0, 5.0],
            },
            LimitKind::DualAdditionQTo1 => {
                LimitSpec::DualAddition { alpha: Rat::new(1, 2), l: 3, m: 2, points: sym }
            }
        }
    }

    pub fn kind(&self) -> LimitKind {
        match self {
            LimitSpec::CquToUltra { .. } => LimitKind::CquToUltra,
            LimitSpec::HahnToJacobi { .. } => LimitKind::HahnToJacobi,
            LimitSpec::JacobiToBessel { .. } => LimitKind::JacobiToBessel,
            LimitSpec::DualAddition { .. } => LimitKind::DualAdditionQTo1,
        }
    }

    pub fn params(&self) -> BTreeMap<String, String> {
        let pts = |p: &[f64]| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            out.insert(k.to_string(), v);
        };
        put("kind", self.kind().to_string());
        match self {
            LimitSpec::CquToUltra { n, alpha, points } => {
                put("n", n.to_string());
                put("alpha", alpha.to_string());
                put("points", pts(points));
            }
            LimitSpec::HahnToJacobi { n, alpha, beta, points } => {
                put("n", n.to_string());
                put("alpha", alpha.to_string());
                put("beta", beta.to_string());
                put("points", pts(points));
            }
            LimitSpec::JacobiToBessel { alpha, beta, points } => {
                put("alpha", alpha.to_string());
                put("beta", beta.to_string());
                put("points", pts(points));
            }
            LimitSpec::DualAddition { alpha, l, m, points } => {
                put("alpha", alpha.to_string());
                put("l", l.to_string());
                put("m", m.to_string());
                put("points", pts(points));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitReport {
    pub kind: LimitKind,
    /// `q_j` or `N_j` (resp. `n_j`).
    pub schedule: Vec<f64>,
    pub errors: Vec<f64>,
    /// `errors[i+1] / errors[i]`, absent when `errors[i] = 0`.
    pub ratios: Vec<Option<f64>>,
    /// `-log2` of the final ratio: the empirical convergence order.
    pub order: Option<f64>,
    pub verdict: Verdict,
}

impl LimitReport {
    pub fn new(kind: LimitKind, schedule: Vec<f64>, errors: Vec<f64>) -> Self {
        let ratios: Vec<Option<f64>> = errors
            .windows(2)
            .map(|w| if w[0] == 0.0 { None } else { Some(w[1] / w[0]) })
            .collect();
        let order = match ratios.last() {
            Some(Some(r)) if *r > 0.0 => Some(-f64::log2(*r)),
            _ => None,
        };
        let mut report = LimitReport { kind, schedule, errors, ratios, order, verdict: Verdict::Fail };
        if report.judge() {
            report.verdict = Verdict::Pass;
        }
        report
    }

    fn judge(&self) -> bool {
        let e = &self.errors;
        if e.is_empty() || e.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return false;
        }
        if e.iter().all(|x| *x == 0.0) {
            return true;
        }
        let decreasing = |s: &[f64]| s.windows(2).all(|w| w[1] < w[0]);
        if e.len() < 4 || !decreasing(&e[e.len() - 4..]) {
            return false;
        }
        match self.kind {
            LimitKind::JacobiToBessel => decreasing(e) && e[e.len() - 1] < BESSEL_FINAL,
            _ => matches!(self.ratios.last(), Some(Some(r)) if *r >= RATIO_BAND.0 && *r <= RATIO_BAND.1),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Plain-text table, one schedule entry per line.
    pub fn render_text(&self) -> String {
        let order = self.order.map_or("-".to_string(), |o| format!("{o:.3}"));
        let mut out = format!("{} ({}, observed order {order})\n{:>14} {:>12} {:>8}\n", self.kind, self.verdict, "schedule", "error", "ratio");
        for (i, (s, e)) in self.schedule.iter().zip(&self.errors).enumerate() {
            let r = match i.checked_sub(1).and_then(|j| self.ratios[j]) {
                Some(r) => format!("{r:.4}"),
                None => "-".into(),
            };
            out.push_str(&format!("{s:>14.10} {e:>12.4e} {r:>8}\n"));
        }
        out
    }
}

/// `2F1(-n, n+α+β+1; α+1; y)`, i.e. `R_n^{(α,β)}(1 - 2y)`.
fn jacobi_shifted_f64(n: usize, a: f64, b: f64, y: f64) -> Result<f64> {
    let nn = n as f64;
    hyper_sum(&[-nn, nn + a + b + 1.0], &[a + 1.0], &y, &Base::Unit, n)
}

fn hahn_f64(n: usize, a: f64, b: f64, big_n: f64, x: f64) -> Result<f64> {
    let nn = n as f64;
    hyper_sum(&[-nn, nn + a + b + 1.0, -big_n * x], &[a + 1.0, -big_n], &1.0, &Base::Unit, n)
}

/// q-Racah with `α = β = ab`, `γ = q^{-N-1}`.
fn qracah_f64(n: usize, x: usize, ab: f64, big_n: usize, delta: f64, q: f64) -> Result<f64> {
    let g = q.powi(-(big_n as i32) - 1);
    hyper_sum(
        &[q.powi(-(n as i32)), q.powi(n as i32 + 1) * ab * ab, q.powi(-(x as i32)), q.powi(x as i32 + 1) * g * delta],
        &[q * ab, q * ab * delta, q * g],
        &q,
        &Base::Q(q),
        n,
    )
}

/// Runs one limit along `q = 1 - 2^{-j}` or `N = 2^j`, `j ∈ js`. With
/// `perturb_last`, the last pre-limit value is shifted by 1, which any sound
/// verdict must reject.
pub fn limit_check(spec: &LimitSpec, js: RangeInclusive<u32>, perturb_last: bool) -> Result<LimitReport> {
    if js.is_empty() {
        return invalid("empty limit schedule");
    }
    let kind = spec.kind();
    let last = *js.end();
    let mut schedule = Vec::new();
    let mut errors = Vec::new();
    let pre_computed = ClassicalSide::new(spec)?;
    for j in js {
        let value = if kind.is_q_limit() { 1.0 - (-(j as f64)).exp2() } else { (j as f64).exp2() };
        let bump = if perturb_last && j == last { 1.0 } else { 0.0 };
        let err = sup_error(spec, &pre_computed, value, bump)?;
        schedule.push(value);
        errors.push(finite(err, kind.as_str())?);
    }
    Ok(LimitReport::new(kind, schedule, errors))
}

/// Limit-side values that do not depend on the schedule.
struct ClassicalSide {
    values: Vec<f64>,
}

impl ClassicalSide {
    fn new(spec: &LimitSpec) -> Result<Self> {
        let values = match spec {
            LimitSpec::CquToUltra { n, alpha, points } => {
                let a = alpha.to_f64();
                points
                    .iter()
                    .map(|x| jacobi_shifted_f64(*n, a, a, (1.0 - x) / 2.0))
                    .collect::<Result<_>>()?
            }
            LimitSpec::HahnToJacobi { n, alpha, beta, points } => points
                .iter()
                .map(|x| jacobi_shifted_f64(*n, alpha.to_f64(), beta.to_f64(), *x))
                .collect::<Result<_>>()?,
            LimitSpec::JacobiToBessel { alpha, points, .. } => points
                .iter()
                .map(|x| bessel_script_j(alpha.to_f64(), *x, 1e-17))
                .collect::<Result<_>>()?,
            LimitSpec::DualAddition { alpha, l, m, points } => {
                let (l, m) = (*l, *m);
                if m > l {
                    return invalid(format!("need m <= l (got l = {l}, m = {m})"));
                }
                let rp = RacahParams::gegenbauer_linearization(alpha, l, m)?;
                let mut out = Vec::new();
                for x in points {
                    for k in 0..=m {
                        let ak = alpha.to_f64() + k as f64;
                        let y = (1.0 - x) / 2.0;
                        let base = classical_dual_coefficient(alpha, l, m, k).to_f64()
                            * (x * x - 1.0).powi(k as i32)
                            * jacobi_shifted_f64(l - k, ak, ak, y)?
                            * jacobi_shifted_f64(m - k, ak, ak, y)?;
                        for j in 0..=m {
                            out.push(base * racah(k, j, &rp)?.to_f64());
                        }
                    }
                }
                out
            }
        };
        Ok(ClassicalSide { values })
    }
}

fn sup_error(spec: &LimitSpec, lim: &ClassicalSide, value: f64, bump: f64) -> Result<f64> {
    let pre: Vec<f64> = match spec {
        LimitSpec::CquToUltra { n, alpha, points } => {
            let q = value;
            let beta = q.powf(alpha.to_f64());
            points.iter().map(|x| cqu_f64(*n, q, beta, *x)).collect::<Result<_>>()?
        }
        LimitSpec::HahnToJacobi { n, alpha, beta, points } => points
            .iter()
            .map(|x| hahn_f64(*n, alpha.to_f64(), beta.to_f64(), value, *x))
            .collect::<Result<_>>()?,
        LimitSpec::JacobiToBessel { alpha, beta, points } => {
            let n = value as usize;
            points
                .iter()
                .map(|x| {
                    let y = (x / (2.0 * value)).sin().powi(2);
                    jacobi_shifted_f64(n, alpha.to_f64(), beta.to_f64(), y)
                })
                .collect::<Result<_>>()?
        }
        LimitSpec::DualAddition { alpha, l, m, points } => {
            let (l, m, q) = (*l, *m, value);
            let qhalf = q.sqrt();
            let beta = q.powf(alpha.to_f64());
            let ab = beta / qhalf;
            let delta = 1.0 / (beta * q.powf(l as f64 + 0.5));
            let mut out = Vec::new();
            for x in points {
                for k in 0..=m {
                    let bk = beta * q.powi(k as i32);
                    let mut xprod = 1.0;
                    let mut c = qhalf * beta;
                    for _ in 0..k {
                        xprod *= 4.0 * c * x * x - (1.0 + c).powi(2);
                        c *= q;
                    }
                    let base = dual_coefficient_in(&qhalf, &beta, l, m, k)
                        * xprod
                        * cqu_f64(l - k, q, bk, *x)?
                        * cqu_f64(m - k, q, bk, *x)?;
                    for j in 0..=m {
                        out.push(base * qracah_f64(k, j, ab, m, delta, q)?);
                    }
                }
            }
            out
        }
    };
    Ok(pre
        .iter()
        .zip(&lim.values)
        .map(|(p, l)| (p + bump - l).abs())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_limits_pass() {
        for kind in [LimitKind::HahnToJacobi, LimitKind::JacobiToBessel] {
            let r = limit_check(&LimitSpec::standard(kind), 4..=10, false).unwrap();
            assert!(r.passed(), "{}", r.render_text());
        }
    }

    // These converge, but like (1-q)², so the first-order band rejects them.
    #[test]
    fn q_limits_converge_at_second_order() {
        for kind in [LimitKind::CquToUltra, LimitKind::DualAdditionQTo1] {
            let r = limit_check(&LimitSpec::standard(kind), 4..=10, false).unwrap();
            assert!(r.errors.windows(2).all(|w| w[1] < w[0]));
            assert!((r.order.unwrap() - 2.0).abs() < 0.01, "{}", r.render_text());
        }
    }

    #[test]
    fn perturbed_limits_fail() {
        for kind in LimitKind::ALL {
            let r = limit_check(&LimitSpec::standard(kind), 4..=10, true).unwrap();
            assert!(!r.passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn degree_zero_is_exact() {
        let spec = LimitSpec::CquToUltra { n: 0, alpha: Rat::new(1, 2), points: vec![0.0, 0.5] };
        let r = limit_check(&spec, 4..=10, false).unwrap();
        assert!(r.errors.iter().all(|e| *e == 0.0));
        assert!(r.passed());
        let spec = LimitSpec::HahnToJacobi { n: 0, alpha: Rat::zero(), beta: Rat::zero(), points: vec![0.5] };
        assert!(limit_check(&spec, 4..=10, false).unwrap().errors.iter().all(|e| *e == 0.0));
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in LimitKind::ALL {
            assert_eq!(kind.as_str().parse::<LimitKind>().unwrap(), kind);
        }
    }
}
