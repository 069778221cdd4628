//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded for information; never affects the outcome.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub window: i64,
    pub params: BTreeMap<String, String>,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(suite: impl Into<String>, window: i64) -> Self {
        Self { suite: suite.into(), window, params: BTreeMap::new(), entries: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl Into<String>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, id: impl Into<String>, anchor: &str, status: Status, witness: Option<String>) {
        self.entries.push(Entry { id: id.into(), anchor: anchor.to_string(), status, witness });
    }

    /// Records a pass when `failure` is `None`, otherwise a failure with that witness.
    pub fn check(&mut self, id: impl Into<String>, anchor: &str, failure: Option<String>) {
        let status = if failure.is_none() { Status::Pass } else { Status::Fail };
        self.push(id, anchor, status, failure);
    }

    pub fn info(&mut self, id: impl Into<String>, anchor: &str, note: String) {
        self.push(id, anchor, Status::Info, Some(note));
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// Appends another report's entries, prefixing their ids with its suite name.
    pub fn absorb(&mut self, other: Report) {
        for mut e in other.entries {
            e.id = format!("{}/{}", other.suite, e.id);
            self.entries.push(e);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (window {})", self.suite, self.window)?;
        for e in &self.entries {
            write!(f, "  [{}] {}", e.status, e.id)?;
            if let Some(w) = &e.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.entries.len(), failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_entries_do_not_fail() {
        let mut r = Report::new("demo", 2);
        r.check("a", "x", None);
        r.info("b", "y", "note".into());
        assert!(r.passed());
        r.check("c", "z", Some("bad".into()));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }
}
