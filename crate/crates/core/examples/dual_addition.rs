//! The dual addition formula: `R_{l+m-2j}` expanded in q-Racah polynomials
//! with coefficients that are Laurent polynomials themselves.

use qaskey::identities::dual_addition::{dual_coefficient, q_dual_addition, DualMode};
use qaskey::identities::theorem::CquTable;
use qaskey::identities::{params, run_check};
use qaskey::{rat, QParams};

fn main() -> qaskey::Result<()> {
    let qp = QParams::new(rat(1, 2), rat(2, 3))?;
    let (l, m) = (3, 2);
    for k in 0..=m {
        println!("coefficient k = {k}: {}", dual_coefficient(&qp, l, m, k));
    }
    for mode in [DualMode::Direct, DualMode::Inversion] {
        let mut table = CquTable::new(&qp);
        let report = run_check("dual-addition", params([("mode", format!("{mode:?}"))]), None, |ck| {
            q_dual_addition(ck, &mut table, l, m, mode)
        });
        println!("{mode:?}: {:?} after {} comparisons", report.verdict, report.comparisons);
    }
    Ok(())
}
