//! Deterministic command reports, rendered as a table or as JSON.

use std::collections::BTreeMap;
use std::fmt::Write;

use descent_core::report::CheckReport;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub name: String,
    pub value: String,
}

/// Groups appear as invariant-factor strings. Witnesses explain failures;
/// notes carry everything else worth printing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub verdicts: Vec<Verdict>,
    pub groups: Vec<Entry>,
    pub witnesses: Vec<Entry>,
    pub notes: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

impl Report {
    pub fn new(command: &str, inputs: BTreeMap<String, String>) -> Self {
        Report { command: command.to_string(), inputs, ..Default::default() }
    }

    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn verdict(&mut self, name: impl Into<String>, holds: bool) {
        self.verdicts.push(Verdict { name: name.into(), holds });
    }

    pub fn group(&mut self, name: impl Into<String>, value: impl ToString) {
        self.groups.push(Entry { name: name.into(), value: value.to_string() });
    }

    pub fn witness(&mut self, name: impl Into<String>, value: impl ToString) {
        self.witnesses.push(Entry { name: name.into(), value: value.to_string() });
    }

    pub fn note(&mut self, name: impl Into<String>, value: impl ToString) {
        self.notes.push(Entry { name: name.into(), value: value.to_string() });
    }

    /// One verdict per check, with failure details as witnesses.
    pub fn checks(&mut self, prefix: &str, r: &CheckReport) {
        for c in &r.checks {
            let name = if prefix.is_empty() { c.name.clone() } else { format!("{}: {}", prefix, c.name) };
            if let (false, Some(d)) = (c.holds, &c.detail) {
                self.witness(name.clone(), d);
            }
            self.verdict(name, c.holds);
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        writeln!(out, "{} {}", self.command, inputs.join(" ")).unwrap();
        let section = |out: &mut String, title: &str, rows: &[Entry]| {
            if rows.is_empty() {
                return;
            }
            writeln!(out, "{}:", title).unwrap();
            let width = rows.iter().map(|e| e.name.chars().count()).max().unwrap_or(0);
            for e in rows {
                let pad = width - e.name.chars().count();
                writeln!(out, "  {}{}  {}", e.name, " ".repeat(pad), e.value).unwrap();
            }
        };
        section(&mut out, "groups", &self.groups);
        section(&mut out, "notes", &self.notes);
        if !self.verdicts.is_empty() {
            writeln!(out, "verdicts:").unwrap();
            for v in &self.verdicts {
                writeln!(out, "  {}  {}", if v.holds { "holds  " } else { "REFUTED" }, v.name).unwrap();
            }
        }
        section(&mut out, "witnesses", &self.witnesses);
        writeln!(out, "result: {}", if self.holds() { "all verdicts hold" } else { "refuted" }).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_lists_refutations() {
        let mut r = Report::new("demo", BTreeMap::from([("m".to_string(), "Z".to_string())]));
        r.group("H^0", "Z");
        r.verdict("first", true);
        r.verdict("second", false);
        let t = r.render(Format::Table);
        assert!(t.starts_with("demo m=Z\n"));
        assert!(t.contains("REFUTED  second"));
        assert!(t.ends_with("result: refuted\n"));
    }
}
