use std::fmt;

use rolecolor::{SolveError, Violation};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Budget(u64),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(msg) => write!(f, "{msg}"),
            Failure::Budget(b) => write!(f, "search budget of {b} nodes exceeded"),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { budget } => Failure::Budget(budget),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Input problems (unreadable files, parse errors, failed preconditions).
pub fn input<E: fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

/// The outcome of one subcommand. `text` is the human-readable form; the
/// JSON form carries the same information.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub answer: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    /// Subcommand-specific payload.
    #[serde(flatten)]
    pub extra: Map<String, Value>,
    pub stats: Map<String, Value>,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(answer: bool) -> Self {
        Report {
            answer,
            ..Default::default()
        }
    }

    pub fn line(&mut self, line: impl AsRef<str>) -> &mut Self {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
        self
    }

    pub fn stat(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.stats.insert(key.to_string(), value.into());
        self
    }

    pub fn extra(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.extra.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }

    pub fn emit(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string(self).expect("serializable"));
        } else {
            print!("{}", self.text);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_errors_keep_their_own_class() {
        assert!(matches!(
            Failure::from(SolveError::BudgetExceeded { budget: 7 }),
            Failure::Budget(7)
        ));
        assert!(matches!(
            Failure::from(SolveError::ZeroColors),
            Failure::Input(_)
        ));
    }

    #[test]
    fn json_omits_absent_fields() {
        let mut r = Report::new(false);
        r.line("no").stat("n", 4);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"answer":false,"stats":{"n":4}}"#
        );
    }
}
