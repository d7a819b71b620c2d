//! Report rendering for scenario runs.
//!
//! The JSON layout is a stable external interface:
//! `{"scenarios": [{"name", "paper_ref", "status", "witness", "flags", "ms"}]}`
//! with `status` either `"PASS"` or `"FAIL"`.  The markdown renderer carries
//! the same records plus the per-scenario notes for human readers.

use serde_json::{json, Value};

use crate::scenarios::ScenarioRecord;

/// The JSON report object.
pub fn to_json(records: &[ScenarioRecord]) -> Value {
    let scenarios: Vec<Value> = records
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "paper_ref": r.paper_ref,
                "status": if r.passed { "PASS" } else { "FAIL" },
                "witness": r.witness,
                "flags": r.flags,
                "ms": r.ms,
            })
        })
        .collect();
    json!({ "scenarios": scenarios })
}

/// Pretty-printed JSON report.
pub fn render_json(records: &[ScenarioRecord]) -> String {
    serde_json::to_string_pretty(&to_json(records)).expect("report serializes")
}

/// Markdown report: a summary table followed by one section per scenario.
pub fn render_markdown(records: &[ScenarioRecord]) -> String {
    let mut out = String::new();
    out.push_str("# Invariant-ring scenario report\n\n");
    let passed = records.iter().filter(|r| r.passed).count();
    out.push_str(&format!(
        "{passed}/{} scenarios passed.\n\n",
        records.len()
    ));
    out.push_str("| scenario | reference | status | time (ms) |\n");
    out.push_str("|---|---|---|---:|\n");
    for r in records {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            r.name,
            r.paper_ref,
            if r.passed { "PASS" } else { "FAIL" },
            r.ms
        ));
    }
    for r in records {
        out.push_str(&format!(
            "\n## {} — {}\n\n",
            r.name,
            if r.passed { "PASS" } else { "FAIL" }
        ));
        out.push_str(&format!("Reference: {}.\n", r.paper_ref));
        if !r.witness.is_null() {
            out.push_str(&format!(
                "\nWitness:\n\n```json\n{}\n```\n",
                serde_json::to_string_pretty(&r.witness).expect("witness serializes")
            ));
        }
        if !r.flags.is_empty() {
            out.push_str("\nFlags (divergences from the printed source):\n\n");
            for f in &r.flags {
                out.push_str(&format!("- {f}\n"));
            }
        }
        if !r.notes.is_empty() {
            out.push_str("\nChecks:\n\n");
            for n in &r.notes {
                out.push_str(&format!("- {n}\n"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<ScenarioRecord> {
        vec![
            ScenarioRecord {
                name: "a",
                paper_ref: "Theorem 1",
                passed: true,
                witness: json!({"k": 1}),
                flags: vec!["printed sign flipped".into()],
                notes: vec!["ok: identity".into()],
                ms: 12,
            },
            ScenarioRecord {
                name: "b",
                paper_ref: "Theorem 2",
                passed: false,
                witness: Value::Null,
                flags: vec![],
                notes: vec![],
                ms: 3,
            },
        ]
    }

    #[test]
    fn json_schema_has_exactly_the_contract_fields() {
        let v = to_json(&sample());
        let arr = v["scenarios"].as_array().unwrap();
        assert_eq!(arr.len(), 2);
        for s in arr {
            let obj = s.as_object().unwrap();
            let mut keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
            keys.sort_unstable();
            assert_eq!(
                keys,
                ["flags", "ms", "name", "paper_ref", "status", "witness"]
            );
        }
        assert_eq!(arr[0]["status"], "PASS");
        assert_eq!(arr[1]["status"], "FAIL");
    }

    #[test]
    fn empty_run_is_valid() {
        assert_eq!(to_json(&[])["scenarios"].as_array().unwrap().len(), 0);
        assert!(render_markdown(&[]).contains("0/0"));
    }

    #[test]
    fn markdown_lists_every_record() {
        let md = render_markdown(&sample());
        assert!(md.contains("| a | Theorem 1 | PASS | 12 |"));
        assert!(md.contains("| b | Theorem 2 | FAIL | 3 |"));
        assert!(md.contains("printed sign flipped"));
        let json = render_json(&sample());
        assert!(json.contains("\"name\": \"a\"") && json.contains("\"ms\": 12"));
    }
}
