//! Runs a suite programmatically and prints a one-line tally.

use qaskey::identities::{ParamGrid, Verdict};
use qaskey::suites::{run_suite, Suite};

fn main() -> qaskey::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("restriction").parse()?;
    let reports = run_suite(suite, &ParamGrid::default(), 0)?;
    for r in reports.iter().filter(|r| r.verdict != Verdict::Pass) {
        println!("{:?} {} {:?}", r.verdict, r.id, r.params);
    }
    let passed = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    println!("{suite}: {passed}/{} checks pass", reports.len());
    Ok(())
}
