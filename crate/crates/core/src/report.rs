//! Verification report entries and their text / line-delimited JSON forms.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// How a check was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EngineLabel {
    /// An identity decided exactly in B₆.
    #[serde(rename = "exact-B6")]
    ExactB6,
    /// An identity checked on the image in Sp₄ (or Sp₄ over Z/m).
    #[serde(rename = "matrix-shadow")]
    MatrixShadow,
    #[serde(rename = "both")]
    Both,
    /// Not trivial in B₆, but equal there to an explicit product of
    /// conjugates of the relator β^{±1}.
    #[serde(rename = "mod-N-witness")]
    ModNWitness,
}

impl EngineLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            EngineLabel::ExactB6 => "exact-B6",
            EngineLabel::MatrixShadow => "matrix-shadow",
            EngineLabel::Both => "both",
            EngineLabel::ModNWitness => "mod-N-witness",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub engine: EngineLabel,
    pub counterexample: Option<String>,
}

impl Entry {
    pub fn new(check_id: impl Into<String>, anchor: impl Into<String>, engine: EngineLabel) -> Self {
        Self { check_id: check_id.into(), anchor: anchor.into(), status: Status::Pass, engine, counterexample: None }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn fail(mut self, counterexample: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.counterexample = Some(counterexample.into());
        self
    }

    /// Marks the entry failed unless `ok`; the message is built lazily.
    pub fn require(self, ok: bool, counterexample: impl FnOnce() -> String) -> Self {
        if ok || !self.passed() {
            self
        } else {
            self.fail(counterexample())
        }
    }
}

/// Run metadata recorded at the top of every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Header {
    pub suite: String,
    pub strands: usize,
    pub rings: Vec<String>,
    pub samples: usize,
    pub seed: u64,
    pub engine: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub header: Header,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(Entry::passed)
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.passed()).count()
    }

    /// One JSON object per line: the header first, then one record per entry.
    pub fn to_structured(&self) -> String {
        let mut out = String::new();
        let header = serde_json::json!({ "header": &self.header });
        out.push_str(&header.to_string());
        out.push('\n');
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("entries serialize"));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let h = &self.header;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} | strands {} | rings {} | samples {} | seed {} | engine {}",
            h.suite,
            h.strands,
            h.rings.join(","),
            h.samples,
            h.seed,
            h.engine
        );
        for e in &self.entries {
            let status = if e.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {:<32} {:<14} {}", e.check_id, e.engine.as_str(), e.anchor);
            if let Some(c) = &e.counterexample {
                for line in c.lines() {
                    let _ = writeln!(out, "      {line}");
                }
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.entries.len(),
            self.entries.len() - self.failures(),
            self.failures()
        );
        out
    }
}
