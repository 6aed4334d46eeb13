//! Flat key-value text blocks with a stable field order.

use std::fmt::Write as _;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Record {
    pub fields: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Record {
        Record::default()
    }

    pub fn push(&mut self, key: &str, value: impl Into<String>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// `key: value` lines; newlines inside values are escaped.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k}: {}", v.replace('\\', "\\\\").replace('\n', "\\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Record {
        let mut r = Record::new();
        for line in text.lines() {
            if let Some((k, v)) = line.split_once(": ") {
                r.push(k, v.replace("\\n", "\n").replace("\\\\", "\\"));
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = Record::new();
        r.push("name", "x");
        r.push("multi", "a\nb");
        assert_eq!(Record::parse(&r.to_text()), r);
        assert_eq!(r.get("name"), Some("x"));
    }
}
