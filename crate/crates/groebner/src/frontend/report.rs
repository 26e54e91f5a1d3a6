//! Run reports and the flat stats JSON schema.

use serde::Serialize;

use crate::algebra::Polynomial;
use crate::engine::RunStats;
use crate::frontend::{format_basis, SystemDescription};

/// Flat JSON view of the run counters. `wall_time` is in seconds and is the
/// only field allowed to differ between identical runs.
#[derive(Serialize)]
struct StatsJson {
    iterations: u64,
    pairs_generated: u64,
    pairs_pruned: u64,
    zero_reductions: u64,
    reduction_steps: u64,
    basis_size_raw: u64,
    basis_size_reduced: u64,
    wall_time: f64,
}

pub fn stats_json(stats: &RunStats) -> String {
    let view = StatsJson {
        iterations: stats.iterations,
        pairs_generated: stats.pairs_generated,
        pairs_pruned: stats.pairs_pruned,
        zero_reductions: stats.zero_reductions,
        reduction_steps: stats.reduction_steps,
        basis_size_raw: stats.basis_size_raw,
        basis_size_reduced: stats.basis_size_reduced,
        wall_time: stats.wall_time.as_secs_f64(),
    };
    let mut out = serde_json::to_string_pretty(&view).expect("stats serialize");
    out.push('\n');
    out
}

/// Everything a `gb` invocation reports: the basis, counters, and the
/// verdicts of whichever checks were requested. A verdict is present
/// exactly when its flag was set.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub basis: Vec<Polynomial>,
    pub stats: RunStats,
    pub algorithm: String,
    pub gb_check: Option<bool>,
    pub ideal_equality: Option<bool>,
    pub certified: Option<bool>,
}

impl RunReport {
    /// Basis text plus verdict lines. Verdicts are emitted as comments so
    /// the output stays valid parser input.
    pub fn render(&self, desc: &SystemDescription) -> String {
        let mut out = format_basis(desc, &self.basis);
        for (name, verdict) in [
            ("gb-check", self.gb_check),
            ("ideal-equality", self.ideal_equality),
            ("certify", self.certified),
        ] {
            if let Some(ok) = verdict {
                out.push_str(&format!("# {name}: {}\n", if ok { "pass" } else { "fail" }));
            }
        }
        out
    }

    pub fn all_verdicts_pass(&self) -> bool {
        [self.gb_check, self.ideal_equality, self.certified]
            .iter()
            .all(|v| v.unwrap_or(true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_json_has_exactly_the_schema_keys() {
        let json = stats_json(&RunStats::default());
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let obj = value.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(|s| s.as_str()).collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            vec![
                "basis_size_raw",
                "basis_size_reduced",
                "iterations",
                "pairs_generated",
                "pairs_pruned",
                "reduction_steps",
                "wall_time",
                "zero_reductions",
            ]
        );
        assert!(obj["wall_time"].is_f64());
    }

    #[test]
    fn verdict_lines_match_flags() {
        let report = RunReport {
            basis: vec![],
            stats: RunStats::default(),
            algorithm: "ssg".into(),
            gb_check: Some(true),
            ideal_equality: None,
            certified: Some(false),
        };
        let desc = crate::frontend::parse_system("ring 7 grevlex x\nx\n").unwrap();
        let text = report.render(&desc);
        assert!(text.contains("# gb-check: pass"));
        assert!(!text.contains("ideal-equality"));
        assert!(text.contains("# certify: fail"));
        assert!(!report.all_verdicts_pass());
    }
}
