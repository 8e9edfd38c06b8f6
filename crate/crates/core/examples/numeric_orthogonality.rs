//! Quadrature against the continuous weight, and the Bessel limit function.

use qaskey::numerics::{aw_h0_deviation, bessel_script_j, cqu_orthogonality_residual, Quadrature};
use qaskey::{rat, QParams};

fn main() -> qaskey::Result<()> {
    let qp = QParams::new(rat(1, 2), rat(2, 3))?;
    let quad = Quadrature::default();
    for (m, n) in [(0, 1), (1, 3), (2, 4), (3, 3)] {
        println!("<R_{m}, R_{n}> normalized: {:.3e}", cqu_orthogonality_residual(&qp, m, n, &quad)?);
    }
    println!("weight integral relative deviation: {:.3e}", aw_h0_deviation(&qp, &quad)?);
    for x in [0.5, 2.0, 10.0] {
        println!("J_(1/2)({x}) = {:.15}  sin(x)/x = {:.15}", bessel_script_j(0.5, x, 1e-16)?, x.sin() / x);
    }
    Ok(())
}
