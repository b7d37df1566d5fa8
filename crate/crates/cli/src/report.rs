use std::fmt::Display;
use std::process::ExitCode;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

/// Line-oriented report with a summary block. Any `fail` makes the exit
/// status nonzero.
pub struct Report {
    command: &'static str,
    lines: Vec<String>,
    failures: Vec<String>,
    summary: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            lines: Vec::new(),
            failures: Vec::new(),
            summary: Map::new(),
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn fail(&mut self, text: impl Display) {
        let text = text.to_string();
        self.lines.push(format!("FAIL {text}"));
        self.failures.push(text);
    }

    pub fn stat(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.into(), value.into());
    }

    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                out.push_str("summary:\n");
                out.push_str(&format!("  command: {}\n", self.command));
                for (k, v) in &self.summary {
                    let v = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("  {k}: {v}\n"));
                }
                out.push_str(&format!("  failures: {}\n", self.failures.len()));
                out
            }
            Format::Machine => {
                let mut obj = self.summary.clone();
                obj.insert("command".into(), self.command.into());
                obj.insert("failures".into(), self.failures.clone().into());
                obj.insert("passed".into(), (!self.failed()).into());
                format!("{}\n", Value::Object(obj))
            }
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        if self.failed() {
            ExitCode::FAILURE
        } else {
            ExitCode::SUCCESS
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_marked_and_counted() {
        let mut r = Report::new("validate");
        r.line("checked 3");
        r.fail("square does not commute at (0, 0)");
        r.stat("violations", 1);
        let text = r.render(Format::Text);
        assert!(text.contains("\nFAIL square does not commute at (0, 0)\n"));
        assert!(text.ends_with("  failures: 1\n"));
        let json: Value = serde_json::from_str(&r.render(Format::Machine)).unwrap();
        assert_eq!(json["passed"], false);
        assert_eq!(json["violations"], 1);
        assert!(r.failed());
    }
}
