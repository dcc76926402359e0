use serde_json::{json, Map, Value};

/// One named check with its outcome and supporting evidence.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub witness: Value,
}

/// Command output: echoed inputs, results and verdicts, in a fixed field order.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: Map::new(),
            results: Map::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn verdict(&mut self, check: impl Into<String>, pass: bool, witness: impl Into<Value>) -> &mut Self {
        self.verdicts.push(Verdict {
            check: check.into(),
            pass,
            witness: witness.into(),
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "verdicts": self
                .verdicts
                .iter()
                .map(|v| json!({ "check": v.check, "pass": v.pass, "witness": v.witness }))
                .collect::<Vec<_>>(),
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
        s.push('\n');
        s
    }
}
