//! Verification reports: deterministic, machine-checkable summaries of
//! exhaustive sweeps, with replayable violation records.

use std::time::Duration;

/// One failing instance of a verification sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationRecord {
    /// Short human-readable instance name.
    pub instance_label: String,
    /// Canonical-key digest of the instance (empty for non-matroid
    /// instances such as clutters).
    pub instance_key: String,
    /// Replayable instance text in the standard input grammar.
    pub instance_encoding: String,
    /// What went wrong, with witness data.
    pub detail: String,
}

/// Outcome of one verification check over a catalog or enumeration.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// Stable check name, e.g. `theorem1`.
    pub check: String,
    /// The parameters the sweep ran with, as ordered key/value pairs.
    pub params: Vec<(String, String)>,
    /// Instances on which the hypothesis applied and the check ran.
    pub instances_tested: usize,
    /// Instances skipped because the hypothesis did not apply.
    pub not_applicable: usize,
    /// Capped list of violation records.
    pub violations: Vec<ViolationRecord>,
    /// Total violations found (the record list may be truncated).
    pub violations_total: usize,
    /// Additional measured values, as ordered key/value pairs.
    pub metrics: Vec<(String, String)>,
    /// Wall-clock time of the sweep.
    pub elapsed: Duration,
}

impl VerificationReport {
    /// A sweep passes exactly when it found no violations.
    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }

    /// One-line summary, e.g.
    /// `theorem1: pass (214 tested, 3 n/a, 0 violations, 1.2s)`.
    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} ({} tested, {} n/a, {} violations, {:.1?})",
            self.check,
            if self.passed() { "pass" } else { "FAIL" },
            self.instances_tested,
            self.not_applicable,
            self.violations_total,
            self.elapsed
        )
    }
}

/// Incremental builder used by the sweep drivers.
#[derive(Debug)]
pub(crate) struct ReportBuilder {
    check: String,
    params: Vec<(String, String)>,
    instances_tested: usize,
    not_applicable: usize,
    violations: Vec<ViolationRecord>,
    violations_total: usize,
    metrics: Vec<(String, String)>,
    cap: usize,
    started: std::time::Instant,
}

impl ReportBuilder {
    pub(crate) fn new(check: &str, cap: usize) -> ReportBuilder {
        ReportBuilder {
            check: check.to_string(),
            params: Vec::new(),
            instances_tested: 0,
            not_applicable: 0,
            violations: Vec::new(),
            violations_total: 0,
            metrics: Vec::new(),
            cap,
            started: std::time::Instant::now(),
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub(crate) fn metric(&mut self, key: &str, value: impl ToString) {
        self.metrics.push((key.to_string(), value.to_string()));
    }

    pub(crate) fn tested(&mut self) {
        self.instances_tested += 1;
    }

    pub(crate) fn skipped(&mut self) {
        self.not_applicable += 1;
    }

    pub(crate) fn violation(&mut self, record: ViolationRecord) {
        self.violations_total += 1;
        if self.violations.len() < self.cap {
            self.violations.push(record);
        }
    }

    pub(crate) fn finish(self) -> VerificationReport {
        VerificationReport {
            check: self.check,
            params: self.params,
            instances_tested: self.instances_tested,
            not_applicable: self.not_applicable,
            violations: self.violations,
            violations_total: self.violations_total,
            metrics: self.metrics,
            elapsed: self.started.elapsed(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_counts_and_caps() {
        let mut b = ReportBuilder::new("demo", 2);
        b.param("bound", 5);
        b.tested();
        b.tested();
        b.skipped();
        for i in 0..4 {
            b.violation(ViolationRecord {
                instance_label: format!("x{i}"),
                instance_key: String::new(),
                instance_encoding: String::new(),
                detail: "boom".to_string(),
            });
        }
        b.metric("count", 7);
        let report = b.finish();
        assert!(!report.passed());
        assert_eq!(report.instances_tested, 2);
        assert_eq!(report.not_applicable, 1);
        assert_eq!(report.violations.len(), 2);
        assert_eq!(report.violations_total, 4);
        assert!(report.summary_line().contains("FAIL"));
        assert!(report.summary_line().contains("4 violations"));
    }

    #[test]
    fn empty_report_passes() {
        let report = ReportBuilder::new("demo", 10).finish();
        assert!(report.passed());
        assert!(report.summary_line().starts_with("demo: pass"));
    }
}
