use serde::{Deserialize, Serialize};
use serde_json::Value;
use stringy_core::RationalFunction;

/// What every computing subcommand prints, as JSON or as text.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub input: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_function: Option<RationalFunction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_function_display: Option<String>,
    pub e_number: String,
    pub index: String,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub details: Value,
    pub verification: Vec<Verification>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

impl Verification {
    pub fn new(check: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self { check: check.to_string(), passed, detail: detail.into() }
    }
}

impl OutputRecord {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| out.push_str(&format!("{k:<16}{v}\n"));
        line("command", &self.command);
        if let Value::Object(map) = &self.input {
            for (k, v) in map {
                line(k, &plain(v));
            }
        }
        if let Some(display) = &self.e_function_display {
            line("E_str(w)", display);
        }
        line("e_str", &self.e_number);
        line("index", &self.index);
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                line(k, &plain(v));
            }
        }
        for v in &self.verification {
            let verdict = if v.passed { "PASS" } else { "FAIL" };
            line("check", &format!("{verdict} {} ({})", v.check, v.detail));
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
