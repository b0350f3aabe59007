use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// The result of one command. Everything except `timings` is a pure function of the inputs and flags.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub pass: bool,
    pub verdicts: BTreeMap<String, bool>,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl RunReport {
    pub fn new(command: &str, inputs: &Value, field: Option<String>) -> Self {
        RunReport {
            command: command.into(),
            inputs_digest: digest(command, inputs),
            field,
            pass: true,
            verdicts: BTreeMap::new(),
            data: Value::Null,
            timings: None,
        }
    }

    pub fn verdict(&mut self, name: &str, ok: bool) {
        self.pass &= ok;
        self.verdicts.insert(name.into(), ok);
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn render(&self, pretty: bool) -> String {
        let mut s = if pretty {
            serde_json::to_string_pretty(self).expect("serializable")
        } else {
            serde_json::to_string(self).expect("serializable")
        };
        s.push('\n');
        s
    }
}

/// SHA-256 over the command name and the canonical JSON of its inputs.
pub fn digest(command: &str, inputs: &Value) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    h.update([0]);
    h.update(serde_json::to_vec(inputs).expect("serializable"));
    hex::encode(h.finalize())
}
