//! Addition formulas: the q version as an identity in `z`, and the classical
//! Gegenbauer one.

use qaskey::identities::addition::{classical_addition, q_addition};
use qaskey::identities::theorem::CquTable;
use qaskey::identities::{params, run_check, Pythagorean};
use qaskey::{rat, QParams};

fn main() -> qaskey::Result<()> {
    let qp = QParams::new(rat(1, 2), rat(2, 3))?;
    let mut table = CquTable::new(&qp);
    for n in 0..=4 {
        let report = run_check("addition.q", params([("n", n.to_string())]), None, |ck| {
            q_addition(ck, &mut table, n, &rat(2, 1), &rat(3, 1))
        });
        println!("q addition, n = {n}: {:?}", report.verdict);
    }
    // cosines and sines taken from Pythagorean triples keep everything rational
    let t = Pythagorean::standard();
    let report = run_check("addition.classical", params([("alpha", "1/2".into())]), None, |ck| {
        classical_addition(ck, &rat(1, 2), 3, &t[0], &t[1], &t[2])
    });
    println!("Gegenbauer addition, n = 3: {:?} ({} comparisons)", report.verdict, report.comparisons);
    Ok(())
}
