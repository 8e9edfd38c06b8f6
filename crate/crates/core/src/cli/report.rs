//! The report document and its three renderings.

use std::time::Duration;

use serde::Serialize;

use crate::identities::{CheckReport, ParamGrid, Verdict};
use crate::suites::Suite;

use super::Format;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

impl Summary {
    pub fn tally(checks: &[CheckReport]) -> Self {
        checks.iter().fold(Summary::default(), |mut s, c| {
            match c.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Error => s.error += 1,
            }
            s
        })
    }

    pub fn exit_code(&self) -> i32 {
        if self.fail + self.error == 0 {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub version: &'static str,
    pub suite: Suite,
    pub grid: ParamGrid,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
    /// The only field that varies between identical runs.
    pub wall_time_ms: u128,
}

fn params_text(c: &CheckReport) -> String {
    c.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

impl ReportDocument {
    pub fn new(suite: Suite, grid: ParamGrid, checks: Vec<CheckReport>, elapsed: Duration) -> Self {
        let summary = Summary::tally(&checks);
        ReportDocument {
            version: env!("CARGO_PKG_VERSION"),
            suite,
            grid,
            checks,
            summary,
            wall_time_ms: elapsed.as_millis(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String, Box<dyn std::error::Error>> {
        Ok(match format {
            Format::Json => serde_json::to_string_pretty(self)? + "\n",
            Format::Text => self.render_text(),
            Format::Csv => self.render_csv()?,
        })
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<5} {} [{}] ({} comparisons)\n",
                c.verdict.to_string().to_uppercase(),
                c.id,
                params_text(c),
                c.comparisons
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("      at {}: lhs = {}, rhs = {}\n", w.location, w.lhs, w.rhs));
            }
            if let Some(e) = &c.error {
                out.push_str(&format!("      error: {e}\n"));
            }
            if let Some(l) = &c.limit {
                for line in l.render_text().lines() {
                    out.push_str(&format!("      {line}\n"));
                }
            }
        }
        out.push_str(&format!(
            "suite {}: {} pass, {} fail, {} error ({} ms)\n",
            self.suite, self.summary.pass, self.summary.fail, self.summary.error, self.wall_time_ms
        ));
        out
    }

    fn render_csv(&self) -> Result<String, Box<dyn std::error::Error>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "params", "verdict", "comparisons", "location", "residual", "error"])?;
        for c in &self.checks {
            w.write_record([
                c.id.clone(),
                params_text(c),
                c.verdict.to_string(),
                c.comparisons.to_string(),
                c.witness.as_ref().map(|w| w.location.clone()).unwrap_or_default(),
                c.residual.as_ref().map(|r| r.to_string()).unwrap_or_default(),
                c.error.clone().unwrap_or_default(),
            ])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}
