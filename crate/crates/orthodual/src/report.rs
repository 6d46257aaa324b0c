use serde_json::{Map, Value};

pub enum Failure {
    /// Bad arguments, unreadable or unparsable input: exit 2.
    Usage(String),
    /// A mathematical check failed before a report could be built: exit 1.
    Math { message: String, witness: Value },
}

impl From<orthoduality::Error> for Failure {
    fn from(e: orthoduality::Error) -> Failure {
        use orthoduality::Error::*;
        let witness = match &e {
            Validation(v) => serde_json::json!({ "law": v.law(), "elements": v.witness() }),
            NotOrthomodular(a, b) => serde_json::json!({ "law": "NotOrthomodular", "elements": [a, b] }),
            _ => Value::Null,
        };
        match e {
            UnknownName(_) => Failure::Usage(e.to_string()),
            SizeCapExceeded { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Math { message: e.to_string(), witness },
        }
    }
}

/// A command result: JSON fields, human-readable lines, and an optional raw payload.
pub struct Report {
    pub ok: bool,
    pub fields: Map<String, Value>,
    pub text: Vec<String>,
    pub raw: Option<String>,
}

impl Report {
    pub fn new() -> Report {
        Report { ok: true, fields: Map::new(), text: Vec::new(), raw: None }
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Report {
        self.fields.insert(key.to_string(), v.into());
        self
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Report {
        self.text.push(s.into());
        self
    }

    /// Records a check; a failure makes the command exit 1.
    pub fn require(&mut self, ok: bool, failure: impl FnOnce() -> String) -> bool {
        if !ok {
            self.ok = false;
            self.text.push(format!("FAIL: {}", failure()));
        }
        ok
    }
}

pub fn render_json(command: &str, r: &Report) -> String {
    let mut m = Map::new();
    m.insert("command".into(), command.into());
    m.insert("ok".into(), r.ok.into());
    for (k, v) in &r.fields {
        m.insert(k.clone(), v.clone());
    }
    if let Some(raw) = &r.raw {
        m.entry("output").or_insert_with(|| raw.clone().into());
    }
    serde_json::to_string_pretty(&Value::Object(m)).unwrap() + "\n"
}

pub fn render_text(r: &Report) -> String {
    if let Some(raw) = &r.raw {
        return raw.clone();
    }
    let mut s = r.text.join("\n");
    s.push('\n');
    s
}

pub fn render_failure_json(command: &str, message: &str, witness: &Value) -> String {
    let v = serde_json::json!({ "command": command, "ok": false, "error": message, "witness": witness });
    serde_json::to_string_pretty(&v).unwrap() + "\n"
}
