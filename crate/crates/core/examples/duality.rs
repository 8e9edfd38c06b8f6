//! The continuous q-ultraspherical duality `R_n(x_m) = R_m(x_n)` on the dual
//! lattice, run through the checker.

use qaskey::families::{cqu_dual_point, cqu_r};
use qaskey::identities::duality::check_duality_cqu;
use qaskey::{rat, QParams};

fn main() -> qaskey::Result<()> {
    let qp = QParams::new(rat(1, 2), rat(2, 3))?;
    for (n, m) in [(1, 2), (2, 3), (3, 1)] {
        let a = cqu_r(n, &qp)?.eval_at(&cqu_dual_point(m, &qp))?;
        let b = cqu_r(m, &qp)?.eval_at(&cqu_dual_point(n, &qp))?;
        println!("R_{n}(x_{m}) = {a}\nR_{m}(x_{n}) = {b}\n");
    }
    let report = check_duality_cqu(&qp, 5);
    println!("{} over m, n <= 5: {:?} ({} comparisons)", report.id, report.verdict, report.comparisons);
    Ok(())
}
