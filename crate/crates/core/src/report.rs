//! Verification reports with exact counterexample witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A failing index tuple together with both sides of the violated identity.
///
/// Indices are stored 1-based, matching the external basis labels `e_1..e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    /// Takes 0-based indices.
    pub fn new(indices: &[usize], lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness {
            indices: indices.iter().map(|i| i + 1).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at (")?;
        for (n, i) in self.indices.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "): {} != {}", self.lhs, self.rhs)
    }
}

/// Outcome of one check: `None` means it holds.
pub type Check = Option<Witness>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Item {
    pub name: String,
    pub tag: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Item {
    pub fn new(name: impl Into<String>, tag: impl Into<String>, check: Check) -> Self {
        Item {
            name: name.into(),
            tag: tag.into(),
            verdict: Verdict::from_bool(check.is_none()),
            witness: check,
        }
    }

    pub fn from_bool(name: impl Into<String>, tag: impl Into<String>, ok: bool) -> Self {
        Item {
            name: name.into(),
            tag: tag.into(),
            verdict: Verdict::from_bool(ok),
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }
}

/// Itemized report; the verdict is the conjunction of the items.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub subject: String,
    pub verdict: Verdict,
    pub items: Vec<Item>,
}

impl Report {
    pub fn new(subject: impl Into<String>, items: Vec<Item>) -> Self {
        let verdict = Verdict::from_bool(items.iter().all(Item::passed));
        Report {
            subject: subject.into(),
            verdict,
            items,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn item(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| !i.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, self.verdict)?;
        for item in &self.items {
            write!(f, "  [{}] {} ({})", item.verdict, item.name, item.tag)?;
            if let Some(w) = &item.witness {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
