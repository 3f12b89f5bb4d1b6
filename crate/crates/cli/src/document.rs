//! Line-oriented relation files.
//!
//! ```text
//! # comment
//! universe: 1 2 3
//! @reflexive
//! 1: 1 2 3
//! 2: 2
//! 3: 1 3
//! ```
//!
//! The `universe:` line comes before any adjacency line, and every label
//! has exactly one line of its own. `@reflexive` adds the missing loops.

use std::fmt;
use std::sync::Arc;

use roughdm::relations::Relation;
use roughdm::set::Universe;

use crate::error::{CliError, Result};

const REFLEXIVE_DIRECTIVE: &str = "@reflexive";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationDocument {
    pub labels: Vec<String>,
    /// Targets of each label, in universe order.
    pub rows: Vec<Vec<String>>,
    pub reflexive_close: bool,
}

fn valid_label(l: &str) -> bool {
    !l.is_empty()
        && !l.starts_with('@')
        && !l.contains([':', '#'])
        && !l.contains(char::is_whitespace)
}

impl RelationDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Option<Vec<String>> = None;
        let mut rows: Vec<Option<Vec<String>>> = Vec::new();
        let mut reflexive_close = false;
        let mut last_line = 0;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line == REFLEXIVE_DIRECTIVE {
                reflexive_close = true;
                continue;
            }
            if line.starts_with('@') {
                return Err(CliError::parse(
                    line_no,
                    format!("unknown directive `{line}`"),
                ));
            }
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| CliError::parse(line_no, "expected `label: targets`"))?;
            let head = head.trim();
            let targets: Vec<String> = tail.split_whitespace().map(str::to_string).collect();

            let Some(universe) = &labels else {
                if head != "universe" {
                    return Err(CliError::parse(
                        line_no,
                        "the `universe:` line must come first",
                    ));
                }
                if targets.is_empty() {
                    return Err(CliError::parse(line_no, "universe is empty"));
                }
                for (k, t) in targets.iter().enumerate() {
                    if !valid_label(t) {
                        return Err(CliError::parse(line_no, format!("invalid label `{t}`")));
                    }
                    if targets[..k].contains(t) {
                        return Err(CliError::parse(
                            line_no,
                            format!("duplicate universe label `{t}`"),
                        ));
                    }
                }
                rows = vec![None; targets.len()];
                labels = Some(targets);
                continue;
            };

            let find = |l: &str| {
                universe
                    .iter()
                    .position(|u| u == l)
                    .ok_or_else(|| CliError::parse(line_no, format!("unknown label `{l}`")))
            };
            let subject = find(head)?;
            for t in &targets {
                find(t)?;
            }
            if rows[subject].is_some() {
                return Err(CliError::parse(
                    line_no,
                    format!("duplicate line for `{head}`"),
                ));
            }
            rows[subject] = Some(targets);
        }

        let labels =
            labels.ok_or_else(|| CliError::parse(last_line.max(1), "missing `universe:` line"))?;
        let rows = rows
            .into_iter()
            .zip(&labels)
            .map(|(row, l)| {
                row.ok_or_else(|| CliError::parse(last_line, format!("no line for `{l}`")))
            })
            .collect::<Result<_>>()?;
        Ok(RelationDocument {
            labels,
            rows,
            reflexive_close,
        })
    }

    pub fn from_relation(r: &Relation) -> Self {
        let u = r.universe();
        RelationDocument {
            labels: u.labels().to_vec(),
            rows: (0..r.size())
                .map(|x| u.labels_of(r.neighborhood(x)))
                .collect(),
            reflexive_close: false,
        }
    }

    /// The relation, with loops added when `@reflexive` was given.
    pub fn to_relation(&self) -> Result<Relation> {
        let universe = Arc::new(Universe::new(self.labels.iter().cloned())?);
        let mut pairs = Vec::new();
        for (x, row) in self.rows.iter().enumerate() {
            for t in row {
                pairs.push((x, universe.index_of(t)?));
            }
        }
        let r = Relation::from_pairs(universe, pairs)?;
        Ok(if self.reflexive_close {
            r.reflexive_closure()
        } else {
            r
        })
    }
}

impl fmt::Display for RelationDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "universe: {}", self.labels.join(" "))?;
        if self.reflexive_close {
            writeln!(f, "{REFLEXIVE_DIRECTIVE}")?;
        }
        for (l, row) in self.labels.iter().zip(&self.rows) {
            if row.is_empty() {
                writeln!(f, "{l}:")?;
            } else {
                writeln!(f, "{l}: {}", row.join(" "))?;
            }
        }
        Ok(())
    }
}
