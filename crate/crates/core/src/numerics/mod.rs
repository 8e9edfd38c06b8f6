//! Floating-point companions to the exact checks: the Bessel series, limit
//! transitions with their convergence reports, truncated infinite-product
//! weights and quadrature.

pub mod bessel;
pub mod limits;
pub mod quadrature;
pub mod weights;

use crate::error::{Error, Result};

pub use bessel::bessel_script_j;
pub use limits::{limit_check, LimitKind, LimitReport, LimitSpec};
pub use quadrature::{aw_h0_deviation, cqu_gram_entry, cqu_orthogonality_residual, Quadrature};
pub use weights::{aw_h0, aw_weight, cqu_weight, qproduct_inf};

pub(crate) fn finite(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}
