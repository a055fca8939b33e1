//! Verification reports: per-axiom pass/fail with deterministic witnesses.

use std::fmt;

use crate::tensor::Index;

/// Outcome of one identity check. The witness is the lexicographically first
/// failing basis tuple, so reports are stable snapshots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub label: String,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomResult {
    pub fn pass(label: impl Into<String>) -> Self {
        AxiomResult { label: label.into(), pass: true, witness: None }
    }

    pub fn fail(label: impl Into<String>, witness: Index) -> Self {
        AxiomResult {
            label: label.into(),
            pass: false,
            witness: Some(witness.iter().map(|&i| i as usize).collect()),
        }
    }

    pub fn from_witness(label: impl Into<String>, witness: Option<Index>) -> Self {
        match witness {
            None => AxiomResult::pass(label),
            Some(w) => AxiomResult::fail(label, w),
        }
    }
}

impl fmt::Display for AxiomResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "  [pass] {}", self.label)
        } else {
            write!(
                f,
                "  [FAIL] {} at basis tuple {:?}",
                self.label,
                self.witness.as_deref().unwrap_or(&[])
            )
        }
    }
}

/// A full suite run over one structure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub results: Vec<AxiomResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), results: Vec::new() }
    }

    pub fn push(&mut self, r: AxiomResult) {
        self.results.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.results.extend(other.results);
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.results.iter().filter(|r| !r.pass).collect()
    }

    pub fn get(&self, label: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.label == label)
    }

    /// Deterministic human-readable rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{}: {}\n",
            self.subject,
            if self.all_pass() { "all checks pass" } else { "FAILURES" }
        ));
        for r in &self.results {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// Deterministic machine-readable rendering (JSON).
    pub fn render_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\"subject\":");
        out.push_str(&json_str(&self.subject));
        out.push_str(",\"pass\":");
        out.push_str(if self.all_pass() { "true" } else { "false" });
        out.push_str(",\"checks\":[");
        for (k, r) in self.results.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str("{\"label\":");
            out.push_str(&json_str(&r.label));
            out.push_str(",\"pass\":");
            out.push_str(if r.pass { "true" } else { "false" });
            if let Some(w) = &r.witness {
                out.push_str(",\"witness\":[");
                for (m, i) in w.iter().enumerate() {
                    if m > 0 {
                        out.push(',');
                    }
                    out.push_str(&i.to_string());
                }
                out.push(']');
            }
            out.push('}');
        }
        out.push_str("]}");
        out
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
