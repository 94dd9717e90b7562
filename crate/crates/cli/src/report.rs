use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub key: String,
    pub value: String,
}

/// Output of one subcommand: ordered `key = value` facts, or a whole
/// document (a presentation or poset file) for the commands that emit one.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub field: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub records: Vec<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub document: Option<String>,
    /// Set when a verified identity failed; the report is still printed.
    #[serde(skip)]
    pub failed: bool,
}

impl Report {
    pub fn new(command: &str, field: String) -> Self {
        Report {
            command: command.to_string(),
            field,
            records: Vec::new(),
            document: None,
            failed: false,
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.records.push(Record {
            key: key.into(),
            value: value.to_string(),
        });
    }

    pub fn flag(&mut self, key: impl Into<String>, value: bool) {
        self.push(key, yes_no(value));
    }

    pub fn text(&self) -> String {
        if let Some(doc) = &self.document {
            return doc.clone();
        }
        self.records.iter().map(|r| format!("{} = {}\n", r.key, r.value)).collect()
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
