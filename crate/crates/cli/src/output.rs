//! Rendering of command results as text or NDJSON.
//!
//! Every command reports through one or more *records*. In JSON mode each
//! record is one line with the fixed shape
//! `{"check": …, "instance": …, "verdict": …, "witnesses": […], "params": {…}}`;
//! in text mode the same record is rendered as a short human-readable block.

use matroid_core::verify::VerificationReport;
use matroid_core::Subset;
use serde_json::{json, Map, Value};
use std::io::Write;

/// Output settings shared by all commands.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Emit one JSON object per record instead of text.
    pub json: bool,
    /// Cap on witnesses listed per record.
    pub max_witnesses: usize,
}

/// One reportable result.
pub struct Record {
    pub check: String,
    pub instance: String,
    pub verdict: String,
    /// Witness objects (already JSON values; text mode renders their
    /// `"text"` field when present).
    pub witnesses: Vec<Value>,
    /// Total number of witnesses found, before capping.
    pub witnesses_total: usize,
    pub params: Map<String, Value>,
}

impl Record {
    pub fn new(check: impl Into<String>, instance: impl Into<String>, verdict: impl Into<String>) -> Record {
        Record {
            check: check.into(),
            instance: instance.into(),
            verdict: verdict.into(),
            witnesses: Vec::new(),
            witnesses_total: 0,
            params: Map::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Append witnesses, keeping at most `cap` and recording the true total.
    pub fn witnesses(&mut self, all: Vec<Value>, cap: usize) -> &mut Self {
        self.witnesses_total = all.len();
        self.witnesses = all.into_iter().take(cap).collect();
        self
    }
}

/// Render one record to the writer per the output options.
pub fn emit(out: &mut dyn Write, opts: &Options, record: &Record) -> std::io::Result<()> {
    if opts.json {
        let mut params = record.params.clone();
        params.insert(
            "witnesses_total".to_string(),
            Value::from(record.witnesses_total as u64),
        );
        let value = json!({
            "check": record.check,
            "instance": record.instance,
            "verdict": record.verdict,
            "witnesses": record.witnesses,
            "params": params,
        });
        writeln!(out, "{value}")
    } else {
        writeln!(
            out,
            "{} on {}: {}",
            record.check, record.instance, record.verdict
        )?;
        for (key, value) in &record.params {
            writeln!(out, "  {key}: {}", render_value(value))?;
        }
        for w in &record.witnesses {
            writeln!(out, "  witness: {}", witness_text(w))?;
        }
        let shown = record.witnesses.len();
        if record.witnesses_total > shown {
            writeln!(
                out,
                "  … and {} more witnesses (raise --max-witnesses to list them)",
                record.witnesses_total - shown
            )?;
        }
        Ok(())
    }
}

fn render_value(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn witness_text(w: &Value) -> String {
    match w.get("text") {
        Some(Value::String(s)) => s.clone(),
        _ => w.to_string(),
    }
}

/// Format a subset as `{0,1,2}` for witness text.
pub fn set_text(s: Subset) -> String {
    format!("{s}")
}

/// JSON array of the elements of a subset.
pub fn set_json(s: Subset) -> Value {
    Value::Array(s.iter().map(|e| Value::from(e as u64)).collect())
}

/// Render one verification report.
///
/// Text mode prints the summary line, the sweep parameters and metrics, and
/// (up to the witness cap) each violation with its replayable encoding. JSON
/// mode emits a single record whose witnesses are the violation records.
pub fn emit_report(
    out: &mut dyn Write,
    opts: &Options,
    report: &VerificationReport,
) -> std::io::Result<()> {
    let params_text = report
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    if opts.json {
        let mut params = Map::new();
        for (k, v) in &report.params {
            params.insert(k.clone(), Value::String(v.clone()));
        }
        let mut metrics = Map::new();
        for (k, v) in &report.metrics {
            metrics.insert(k.clone(), Value::String(v.clone()));
        }
        let witnesses: Vec<Value> = report
            .violations
            .iter()
            .take(opts.max_witnesses)
            .map(|v| {
                json!({
                    "instance": v.instance_label,
                    "key": v.instance_key,
                    "detail": v.detail,
                    "encoding": v.instance_encoding,
                })
            })
            .collect();
        let value = json!({
            "check": report.check,
            "instance": params_text,
            "verdict": if report.passed() { "pass" } else { "fail" },
            "witnesses": witnesses,
            "params": {
                "bounds": params,
                "metrics": metrics,
                "tested": report.instances_tested,
                "not_applicable": report.not_applicable,
                "violations_total": report.violations_total,
                "elapsed_ms": report.elapsed.as_millis() as u64,
            },
        });
        writeln!(out, "{value}")
    } else {
        writeln!(out, "{}", report.summary_line())?;
        if !params_text.is_empty() {
            writeln!(out, "  params: {params_text}")?;
        }
        if !report.metrics.is_empty() {
            let metrics_text = report
                .metrics
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(out, "  metrics: {metrics_text}")?;
        }
        for v in report.violations.iter().take(opts.max_witnesses) {
            writeln!(out, "  violation: {} [{}]", v.instance_label, v.instance_key)?;
            writeln!(out, "    {}", v.detail)?;
            for line in v.instance_encoding.lines() {
                writeln!(out, "    | {line}")?;
            }
        }
        let shown = report.violations.len().min(opts.max_witnesses);
        if report.violations_total > shown {
            writeln!(
                out,
                "  … and {} more violations",
                report.violations_total - shown
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_record_has_the_fixed_shape() {
        let mut r = Record::new("ssce", "foo.matroid", "fails");
        r.param("n", 5);
        r.witnesses(vec![json!({"text": "w1", "e": 0})], 10);
        let mut buf = Vec::new();
        emit(
            &mut buf,
            &Options {
                json: true,
                max_witnesses: 10,
            },
            &r,
        )
        .unwrap();
        let line = String::from_utf8(buf).unwrap();
        let v: Value = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(v["check"], "ssce");
        assert_eq!(v["instance"], "foo.matroid");
        assert_eq!(v["verdict"], "fails");
        assert_eq!(v["witnesses"][0]["e"], 0);
        assert_eq!(v["params"]["n"], 5);
        assert_eq!(v["params"]["witnesses_total"], 1);
    }

    #[test]
    fn text_record_prints_witness_text_and_truncation() {
        let mut r = Record::new("skew", "bar.matroid", "holds");
        r.witnesses(
            vec![json!({"text": "a"}), json!({"text": "b"}), json!({"text": "c"})],
            2,
        );
        let mut buf = Vec::new();
        emit(
            &mut buf,
            &Options {
                json: false,
                max_witnesses: 2,
            },
            &r,
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("skew on bar.matroid: holds"));
        assert!(text.contains("witness: a"));
        assert!(text.contains("witness: b"));
        assert!(!text.contains("witness: c"));
        assert!(text.contains("1 more"));
    }
}
