//! Polynomial families, their weights and norms.

pub mod askey_wilson;
pub mod classical;
pub mod qracah;
pub mod racah;
pub mod wilson;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub use askey_wilson::{
    askey_wilson_at, askey_wilson_r, askey_wilson_x, cqu_at, cqu_dual_point, cqu_f64,
    cqu_leading_coeff, cqu_params, cqu_r, cqu_r_alt, AWParams,
};
pub use classical::{
    dual_hahn, hahn, hahn_weight, jacobi_p_poly, jacobi_poly, jacobi_r, krawtchouk,
    krawtchouk_norm, krawtchouk_weight, legendre_poly, ultraspherical_coeffs, ultraspherical_poly,
    ultraspherical_r, HahnParams, JacobiParams, KrawtchoukParams,
};
pub use qracah::{qracah, qracah_at_top, qracah_norms, qracah_weight, QRacahParams};
pub use racah::{racah, racah_norms, racah_weight, Norms, RacahParams};
pub use wilson::{wilson_dual_phi, WilsonParams};

/// Stable identifiers used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Jacobi,
    Ultraspherical,
    Krawtchouk,
    Hahn,
    DualHahn,
    Racah,
    WilsonDual,
    AskeyWilson,
    Cqu,
    CquAlt,
    QRacah,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::Jacobi,
        FamilyId::Ultraspherical,
        FamilyId::Krawtchouk,
        FamilyId::Hahn,
        FamilyId::DualHahn,
        FamilyId::Racah,
        FamilyId::WilsonDual,
        FamilyId::AskeyWilson,
        FamilyId::Cqu,
        FamilyId::CquAlt,
        FamilyId::QRacah,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::Jacobi => "jacobi",
            FamilyId::Ultraspherical => "ultraspherical",
            FamilyId::Krawtchouk => "krawtchouk",
            FamilyId::Hahn => "hahn",
            FamilyId::DualHahn => "dual-hahn",
            FamilyId::Racah => "racah",
            FamilyId::WilsonDual => "wilson-dual",
            FamilyId::AskeyWilson => "askey-wilson",
            FamilyId::Cqu => "cqu",
            FamilyId::CquAlt => "cqu-alt",
            FamilyId::QRacah => "q-racah",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}
