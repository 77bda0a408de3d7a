use serde::Serialize;
use serde_json::Value;

/// `{"check": name, "result": bool, "witness": ...}` with fixed field order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub result: bool,
    pub witness: Value,
}

impl Report {
    pub fn new(check: impl Into<String>, result: bool, witness: Value) -> Self {
        Report {
            check: check.into(),
            result,
            witness,
        }
    }

    pub fn passed(check: impl Into<String>) -> Self {
        Report::new(check, true, Value::Null)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
