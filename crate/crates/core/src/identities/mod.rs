//! Exact identity checks.
//!
//! A check runs a sequence of comparisons through a [`Checker`]. The first
//! mismatch becomes the report's [`Witness`]. A checker built with
//! [`Checker::probing`] deliberately corrupts the right-hand side of one
//! comparison, which is how the suites prove they can fail.

pub mod addition;
pub mod dual_addition;
pub mod duality;
pub mod linearization;
pub mod orthogonality;
pub mod restriction;
pub mod structural;
pub mod theorem;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, SymmetricLaurent};
use crate::numerics::limits::LimitReport;
use crate::params::QParams;
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        })
    }
}

/// A compared quantity. Exact values serialize as text, floats as numbers.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rat(Rat),
    Laurent(LaurentPoly),
    Float(f64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rat(r) => write!(f, "{r}"),
            Value::Laurent(p) => write!(f, "{p}"),
            Value::Float(x) => write!(f, "{x:e}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Float(x) => serializer.serialize_f64(*x),
            other => serializer.collect_str(other),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub location: String,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Value>,
    pub comparisons: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<LimitReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Location of the injected mutation, if this run was a probe.
    #[serde(skip)]
    pub probed: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Records comparisons, keeps the first failure, optionally corrupts one.
#[derive(Debug, Default)]
pub struct Checker {
    probe: Option<usize>,
    count: usize,
    failure: Option<(Witness, Value)>,
    probed: Option<String>,
    limit: Option<LimitReport>,
    measured: Option<f64>,
}

impl Checker {
    pub fn new() -> Self {
        Checker::default()
    }

    /// Corrupts the right-hand side of comparison number `index` (0-based).
    pub fn probing(index: usize) -> Self {
        Checker { probe: Some(index), ..Checker::default() }
    }

    pub fn comparisons(&self) -> usize {
        self.count
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn hit(&mut self, location: &str) -> bool {
        let hit = self.probe == Some(self.count);
        if hit {
            self.probed = Some(location.to_string());
        }
        self.count += 1;
        hit
    }

    fn record(&mut self, location: String, lhs: Value, rhs: Value, residual: Value) {
        if self.failure.is_none() {
            self.failure = Some((Witness { location, lhs, rhs }, residual));
        }
    }

    pub fn eq_rat(&mut self, location: impl Into<String>, lhs: &Rat, rhs: &Rat) -> bool {
        let location = location.into();
        let rhs = if self.hit(&location) { rhs + 1 } else { rhs.clone() };
        if *lhs == rhs {
            return true;
        }
        let residual = Value::Rat(lhs - &rhs);
        self.record(location, Value::Rat(lhs.clone()), Value::Rat(rhs), residual);
        false
    }

    pub fn eq_poly(&mut self, location: impl Into<String>, lhs: &LaurentPoly, rhs: &LaurentPoly) -> bool {
        let location = location.into();
        let rhs = if self.hit(&location) {
            let top = rhs.degree().unwrap_or(0);
            rhs + &LaurentPoly::monomial(Rat::one(), top)
        } else {
            rhs.clone()
        };
        let diff = lhs - &rhs;
        if diff.is_zero() {
            return true;
        }
        let e = diff.degree().expect("nonzero");
        self.record(
            format!("{location}, coefficient of z^{e}"),
            Value::Laurent(lhs.clone()),
            Value::Laurent(rhs),
            Value::Laurent(diff),
        );
        false
    }

    pub fn eq_sym(&mut self, location: impl Into<String>, lhs: &SymmetricLaurent, rhs: &SymmetricLaurent) -> bool {
        self.eq_poly(location, lhs.as_poly(), rhs.as_poly())
    }

    /// `value >= 0`.
    pub fn nonnegative(&mut self, location: impl Into<String>, value: &Rat) -> bool {
        let location = location.into();
        let v = if self.hit(&location) { value - value.abs() - 1 } else { value.clone() };
        if !v.is_negative() {
            return true;
        }
        self.record(location, Value::Rat(v.clone()), Value::Rat(Rat::zero()), Value::Rat(v));
        false
    }

    /// `|lhs - rhs| <= tol`.
    pub fn close(&mut self, location: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> bool {
        let location = location.into();
        let rhs = if self.hit(&location) { rhs + 1.0 } else { rhs };
        self.measured = Some(self.measured.map_or((lhs - rhs).abs(), |m: f64| m.max((lhs - rhs).abs())));
        if (lhs - rhs).abs() <= tol {
            return true;
        }
        self.record(location, Value::Float(lhs), Value::Float(rhs), Value::Float(lhs - rhs));
        false
    }

    /// Whether the next comparison is the probed one; used by float suites
    /// that corrupt their input data rather than a compared value.
    pub fn probe_next(&self) -> bool {
        self.probe == Some(self.count)
    }

    /// Accepts a limit report as one comparison.
    pub fn limit(&mut self, location: impl Into<String>, report: LimitReport) -> bool {
        let location = location.into();
        self.hit(&location);
        let ok = report.passed();
        if !ok {
            let last = report.errors.last().copied().unwrap_or(f64::NAN);
            self.record(location, Value::Float(last), Value::Float(0.0), Value::Float(last));
        }
        self.limit = Some(report);
        ok
    }

    fn finish(self, id: String, params: BTreeMap<String, String>, outcome: Result<()>) -> CheckReport {
        let mut report = CheckReport {
            id,
            params,
            verdict: Verdict::Pass,
            witness: None,
            residual: None,
            comparisons: self.count,
            limit: self.limit,
            measured: self.measured,
            error: None,
            probed: self.probed,
        };
        if let Err(e) = outcome {
            report.verdict = Verdict::Error;
            report.error = Some(e.to_string());
        } else if let Some((w, r)) = self.failure {
            report.verdict = Verdict::Fail;
            report.witness = Some(w);
            report.residual = Some(r);
        }
        report
    }
}

/// Runs `body` with a fresh checker and packages the result.
pub fn run_check(
    id: impl Into<String>,
    params: BTreeMap<String, String>,
    probe: Option<usize>,
    body: impl FnOnce(&mut Checker) -> Result<()>,
) -> CheckReport {
    let mut ck = match probe {
        Some(i) => Checker::probing(i),
        None => Checker::new(),
    };
    let outcome = body(&mut ck);
    ck.finish(id.into(), params, outcome)
}

/// Builds a parameter record from `(key, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Index ranges and parameter lists the suites sweep over.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParamGrid {
    /// `0 <= m <= ℓ <= lmax` on the q side.
    pub lmax: usize,
    /// Optional separate bound on `m`.
    pub mmax: Option<usize>,
    /// Bound on `ℓ, m, n` for classical (q = 1) checks.
    pub classical_lmax: usize,
    /// Degree bound for structural formulas.
    pub nmax: usize,
    /// Largest `N` for the finite discrete families.
    pub discrete_nmax: usize,
    pub qparams: Vec<QParams>,
    pub alphas: Vec<Rat>,
}

impl Default for ParamGrid {
    fn default() -> Self {
        ParamGrid {
            lmax: 5,
            mmax: None,
            classical_lmax: 6,
            nmax: 8,
            discrete_nmax: 5,
            qparams: vec![
                QParams::from_pair((1, 2), (2, 3)).expect("valid"),
                QParams::from_pair((2, 3), (1, 2)).expect("valid"),
                QParams::from_pair((1, 2), (1, 3)).expect("valid"),
            ],
            alphas: vec![
                Rat::zero(),
                Rat::new(1, 2),
                Rat::one(),
                Rat::new(3, 2),
                Rat::new(1, 4),
            ],
        }
    }
}

impl ParamGrid {
    pub fn m_bound(&self) -> usize {
        self.mmax.unwrap_or(self.lmax).min(self.lmax)
    }

    /// All `(ℓ, m)` with `0 <= m <= ℓ <= lmax`, `m <= mmax`.
    pub fn lm_pairs(&self) -> Vec<(usize, usize)> {
        let mb = self.m_bound();
        (0..=self.lmax)
            .flat_map(|l| (0..=l.min(mb)).map(move |m| (l, m)))
            .collect()
    }
}

/// A rational point `(x, r)` on the unit circle, standing in for
/// `(cos θ, sin θ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pythagorean {
    pub cos: Rat,
    pub sin: Rat,
}

impl Pythagorean {
    pub fn new(cos: Rat, sin: Rat) -> Result<Self> {
        if &cos * &cos + &sin * &sin != Rat::one() {
            return Err(Error::InadmissiblePoint(format!("{cos}^2 + {sin}^2 != 1")));
        }
        Ok(Pythagorean { cos, sin })
    }

    /// `(3/5, 4/5)`, `(5/13, 12/13)`, `(8/17, 15/17)`, `(7/25, 24/25)`.
    pub fn standard() -> Vec<Pythagorean> {
        [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)]
            .into_iter()
            .map(|(a, b, c)| Pythagorean::new(Rat::new(a, c), Rat::new(b, c)).expect("triple"))
            .collect()
    }
}

impl fmt::Display for Pythagorean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.cos, self.sin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checker_records_first_failure_only() {
        let report = run_check("t", BTreeMap::new(), None, |ck| {
            ck.eq_rat("a", &Rat::one(), &Rat::one());
            ck.eq_rat("b", &Rat::one(), &Rat::zero());
            ck.eq_rat("c", &Rat::one(), &Rat::from_int(5));
            Ok(())
        });
        assert_eq!(report.verdict, Verdict::Fail);
        assert_eq!(report.witness.unwrap().location, "b");
        assert_eq!(report.residual, Some(Value::Rat(Rat::one())));
        assert_eq!(report.comparisons, 3);
    }

    #[test]
    fn probe_hits_requested_comparison() {
        let p = LaurentPoly::from_terms([(2, Rat::one()), (-2, Rat::one())]);
        let report = run_check("t", BTreeMap::new(), Some(1), |ck| {
            ck.eq_rat("a", &Rat::one(), &Rat::one());
            ck.eq_poly("b", &p, &p);
            Ok(())
        });
        assert_eq!(report.verdict, Verdict::Fail);
        assert_eq!(report.probed.as_deref(), Some("b"));
        assert_eq!(report.witness.unwrap().location, "b, coefficient of z^2");
    }

    #[test]
    fn pythagorean_validation() {
        assert!(Pythagorean::new(Rat::new(1, 2), Rat::new(1, 2)).is_err());
        assert_eq!(Pythagorean::standard().len(), 4);
    }

    #[test]
    fn default_grid_pairs() {
        let g = ParamGrid::default();
        assert_eq!(g.lm_pairs().len(), 21);
        assert!(g.lm_pairs().contains(&(5, 5)));
    }
}
