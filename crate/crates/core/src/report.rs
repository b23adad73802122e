//! Verification reports shared by all checks.

use std::fmt;

use serde::Serialize;

/// One disagreement between two independently computed quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Monomial (type vector text form) or object the disagreement is about.
    pub subject: String,
    pub left: String,
    pub right: String,
}

/// A group of comparisons of the same kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub label: String,
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Section {
    pub fn new(label: impl Into<String>) -> Self {
        Section { label: label.into(), compared: 0, mismatches: Vec::new() }
    }

    /// Records one comparison; a mismatch is stored when `left != right`.
    pub fn compare<T: PartialEq + fmt::Debug>(&mut self, subject: impl fmt::Display, left: &T, right: &T) {
        self.compared += 1;
        if left != right {
            self.mismatches.push(Mismatch {
                subject: subject.to_string(),
                left: format!("{left:?}"),
                right: format!("{right:?}"),
            });
        }
    }

    /// Records a boolean condition.
    pub fn expect(&mut self, subject: impl fmt::Display, ok: bool, detail: impl fmt::Display) {
        self.compared += 1;
        if !ok {
            self.mismatches.push(Mismatch {
                subject: subject.to_string(),
                left: detail.to_string(),
                right: String::new(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Outcome of one named verification run. A failed verification is data,
/// not an error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub max_weight: usize,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(check: impl Into<String>, max_weight: usize) -> Self {
        Report { check: check.into(), max_weight, sections: Vec::new() }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn compared(&self) -> usize {
        self.sections.iter().map(|s| s.compared).sum()
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Mismatch> {
        self.sections.iter().flat_map(|s| s.mismatches.iter())
    }

    pub fn section(&self, label: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.label == label)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{} (max weight {}): {verdict}", self.check, self.max_weight)?;
        for s in &self.sections {
            writeln!(f, "  {}: {} compared, {} mismatched", s.label, s.compared, s.mismatches.len())?;
            for m in &s.mismatches {
                if m.right.is_empty() {
                    writeln!(f, "    [{}] {}", m.subject, m.left)?;
                } else {
                    writeln!(f, "    [{}] {} != {}", m.subject, m.left, m.right)?;
                }
            }
        }
        Ok(())
    }
}
