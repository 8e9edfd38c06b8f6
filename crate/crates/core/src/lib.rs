//! Exact evaluation of (q-)Askey scheme polynomials and machine checks of
//! their duality, linearization and (dual) addition formulas.
//!
//! Every scalar is a [`Rat`]. The q-side parameters are carried by
//! [`QParams`] as `t = q^{1/4}` and `s = β^{1/2}`, so all the quarter and
//! half powers that appear in the formulas stay rational.

pub mod cli;
pub mod error;
pub mod families;
pub mod identities;
pub mod laurent;
pub mod numerics;
pub mod params;
pub mod rat;
pub mod series;
pub mod suites;

pub use error::{Error, Result};
pub use laurent::{x_embed, LaurentPoly, SymmetricLaurent};
pub use params::QParams;
pub use rat::{rat, Rat};
