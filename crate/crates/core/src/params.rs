use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Base and parameter of the continuous q-ultraspherical family, stored as
/// `t = q^{1/4}` and `s = β^{1/2}` so that every quarter and half power used
/// by the formulas is an exact rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QParams {
    t: Rat,
    s: Rat,
}

impl QParams {
    /// Requires `0 < t < 1`, `s > 0` and `s·t < 1` (i.e. `0 < β < q^{-1/2}`).
    pub fn new(t: Rat, s: Rat) -> Result<Self> {
        if !(t.is_positive() && t < 1) {
            return Err(Error::InvalidParams(format!("t = {t} must lie in (0, 1)")));
        }
        if !s.is_positive() {
            return Err(Error::InvalidParams(format!("s = {s} must be positive")));
        }
        if !(&s * &t < 1) {
            return Err(Error::InvalidParams(format!(
                "s·t = {} must be < 1 (β < q^(-1/2))",
                &s * &t
            )));
        }
        Ok(QParams { t, s })
    }

    pub fn from_pair(t: (i64, i64), s: (i64, i64)) -> Result<Self> {
        QParams::new(Rat::new(t.0, t.1), Rat::new(s.0, s.1))
    }

    /// `q^{1/4}`
    pub fn t(&self) -> &Rat {
        &self.t
    }

    /// `β^{1/2}`
    pub fn s(&self) -> &Rat {
        &self.s
    }

    pub fn q(&self) -> Rat {
        self.t.pow(4)
    }

    pub fn qhalf(&self) -> Rat {
        self.t.pow(2)
    }

    pub fn qquarter(&self) -> Rat {
        self.t.clone()
    }

    pub fn beta(&self) -> Rat {
        self.s.pow(2)
    }

    pub fn betahalf(&self) -> Rat {
        self.s.clone()
    }

    /// `a = q^{1/4} β^{1/2}`, the parameter of the Rahman–Verma normalization.
    pub fn a(&self) -> Rat {
        &self.t * &self.s
    }

    /// Parameters for `β ↦ q^k β`, i.e. `s ↦ t^{2k} s`.
    pub fn shifted(&self, k: usize) -> QParams {
        QParams {
            t: self.t.clone(),
            s: &self.s * self.t.pow(2 * k as i64),
        }
    }
}

impl fmt::Display for QParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.t, self.s)
    }
}

impl FromStr for QParams {
    type Err = Error;

    /// Parses `"t,s"`.
    fn from_str(s: &str) -> Result<Self> {
        let (t, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected \"t,s\", got {s:?}")))?;
        QParams::new(t.parse()?, b.parse()?)
    }
}

impl Serialize for QParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn derived_accessors() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        assert_eq!(qp.q(), rat(1, 16));
        assert_eq!(qp.qhalf(), rat(1, 4));
        assert_eq!(qp.beta(), rat(4, 9));
        assert_eq!(qp.a(), rat(1, 3));
        assert_eq!(qp.shifted(1).beta(), qp.q() * qp.beta());
    }

    #[test]
    fn invariants_rejected() {
        assert!(QParams::new(rat(3, 2), Rat::one()).is_err());
        assert!(QParams::new(Rat::zero(), Rat::one()).is_err());
        assert!(QParams::new(rat(1, 2), rat(-1, 2)).is_err());
        assert!(QParams::new(rat(1, 2), Rat::from_int(2)).is_err());
        assert!("3/2,1".parse::<QParams>().is_err());
        assert_eq!(
            "1/2,2/3".parse::<QParams>().unwrap(),
            QParams::new(rat(1, 2), rat(2, 3)).unwrap()
        );
    }
}
