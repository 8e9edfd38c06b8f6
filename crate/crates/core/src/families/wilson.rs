//! Wilson polynomials in the real-rational duality form.
//!
//! With `a + ix = -m` the `4F3` of a Wilson polynomial has only rational
//! parameters, and the self-duality becomes an identity between two
//! terminating series.

use serde::Serialize;

use crate::error::Result;
use crate::rat::Rat;
use crate::series::{hyper_sum, Base};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WilsonParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl WilsonParams {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        WilsonParams { a, b, c, d }
    }

    /// `a' = (a+b+c+d-1)/2`, `a'+b' = a+b`, `a'+c' = a+c`, `a'+d' = a+d`.
    pub fn dual(&self) -> WilsonParams {
        let a1 = (&self.a + &self.b + &self.c + &self.d - 1) / 2;
        WilsonParams {
            b: &self.a + &self.b - &a1,
            c: &self.a + &self.c - &a1,
            d: &self.a + &self.d - &a1,
            a: a1,
        }
    }
}

/// `4F3(-n, n+a+b+c+d-1, -m, 2a+m; a+b, a+c, a+d; 1)`.
pub fn wilson_dual_phi(n: usize, m: usize, wp: &WilsonParams) -> Result<Rat> {
    let nn = Rat::from_int(n as i64);
    let mm = Rat::from_int(m as i64);
    let WilsonParams { a, b, c, d } = wp;
    hyper_sum(
        &[-nn.clone(), &nn + a + b + c + d - 1, -mm.clone(), a * Rat::from_int(2) + &mm],
        &[a + b, a + c, a + d],
        &Rat::one(),
        &Base::Unit,
        n,
    )
}
