//! Convergence tables for the limit transitions.

use qaskey::numerics::{limit_check, LimitKind, LimitSpec};

fn main() -> qaskey::Result<()> {
    for kind in LimitKind::ALL {
        let report = limit_check(&LimitSpec::standard(kind), 4..=10, false)?;
        println!("{}", report.render_text());
    }
    Ok(())
}
