//! The report envelope every subcommand prints.
//!
//! Text mode is for people; JSON mode has a stable schema (field order fixed
//! by the structs here, lists in the order the library produced them, which
//! is canonical).

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Property holds / witness produced: exit 0.
    Holds,
    /// Property fails / refutation certificate: exit 1.
    Fails,
}

#[derive(Debug, Clone, Serialize)]
pub struct Assertion {
    pub name: String,
    /// Where the expected value comes from: a worked example transcribed
    /// from the source material ("worked-example") or an independent
    /// brute-force computation ("derived").
    pub provenance: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub outcome: Outcome,
    pub summary: String,
    pub lines: Vec<String>,
    pub assertions: Vec<Assertion>,
    /// A witness document, when the command synthesized one.
    pub witness: Option<String>,
}

impl Report {
    pub fn new(command: &str, outcome: Outcome, summary: impl Into<String>) -> Self {
        Report {
            command: command.to_owned(),
            outcome,
            summary: summary.into(),
            lines: Vec::new(),
            assertions: Vec::new(),
            witness: None,
        }
    }

    pub fn line(&mut self, line: impl Into<String>) -> &mut Self {
        self.lines.push(line.into());
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Holds => 0,
            Outcome::Fails => 1,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!(
            "outcome: {}\n",
            match self.outcome {
                Outcome::Holds => "holds",
                Outcome::Fails => "fails",
            }
        ));
        out.push_str(&format!("summary: {}\n", self.summary));
        for line in &self.lines {
            out.push_str(&format!("  {line}\n"));
        }
        if !self.assertions.is_empty() {
            out.push_str("assertions:\n");
            for a in &self.assertions {
                out.push_str(&format!(
                    "  [{}] {} ({}): {}\n",
                    if a.passed { "pass" } else { "FAIL" },
                    a.name,
                    a.provenance,
                    a.detail
                ));
            }
        }
        if let Some(witness) = &self.witness {
            out.push_str("witness:\n");
            out.push_str(witness);
        }
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.render_text()
        }
    }
}
