//! The semigroup file format.
//!
//! Text form, line oriented, `#` starts a comment:
//!
//! ```text
//! elements: e a b c
//! table:
//!   e a b c
//!   a e c b
//!   b c e a
//!   c b a e
//! subset H: e a
//! ```
//!
//! `elements:` must come first. `table:` is followed by exactly one row per
//! element, each a whitespace-separated list of labels. Any number of
//! `subset <name>: <labels>` lines may follow. Labels are arbitrary
//! non-whitespace tokens without `#`.
//!
//! The JSON mirror uses the same field names:
//! `{"elements": [...], "table": [[...]], "subsets": {"H": [...]}}`, where
//! table entries may be labels (strings) or indices (numbers).

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupFile {
    pub elements: Vec<String>,
    /// Rows of element indices.
    pub table: Vec<Vec<usize>>,
    pub subsets: IndexMap<String, Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonEntry {
    Index(usize),
    Label(String),
}

#[derive(Serialize, Deserialize)]
struct JsonFile {
    elements: Vec<String>,
    table: Vec<Vec<JsonEntry>>,
    #[serde(default)]
    subsets: IndexMap<String, Vec<String>>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, column, message: message.into() }
}

/// Tokens of a line with their 1-based columns, comment stripped.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &content[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &content[s..]));
    }
    out
}

impl SemigroupFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        if text.trim_start().starts_with('{') {
            return Self::parse_json(text);
        }
        let mut elements: Option<Vec<String>> = None;
        let mut table: Vec<Vec<usize>> = Vec::new();
        let mut rows_pending = 0usize;
        let mut table_seen = false;
        let mut subsets = IndexMap::new();

        for (lineno, line) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let toks = tokens(line);
            let Some(&(col, first)) = toks.first() else { continue };

            if rows_pending > 0 {
                let labels = elements.as_ref().expect("rows follow elements");
                if toks.len() != labels.len() {
                    return Err(parse_error(
                        lineno,
                        col,
                        format!("table row has {} entries, expected {}", toks.len(), labels.len()),
                    ));
                }
                let row = toks
                    .iter()
                    .map(|&(c, t)| {
                        labels
                            .iter()
                            .position(|l| l == t)
                            .ok_or_else(|| parse_error(lineno, c, format!("unknown label {t:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                table.push(row);
                rows_pending -= 1;
                continue;
            }

            if first == "elements:" {
                if elements.is_some() {
                    return Err(parse_error(lineno, col, "duplicate elements line"));
                }
                let labels: Vec<String> = toks[1..].iter().map(|(_, t)| t.to_string()).collect();
                if labels.is_empty() {
                    return Err(parse_error(lineno, col, "no elements"));
                }
                for (i, (c, t)) in toks[1..].iter().enumerate() {
                    if labels[..i].iter().any(|l| l == t) {
                        return Err(parse_error(lineno, *c, format!("duplicate label {t:?}")));
                    }
                }
                elements = Some(labels);
            } else if first == "table:" {
                let Some(labels) = &elements else {
                    return Err(parse_error(lineno, col, "table before elements"));
                };
                if table_seen {
                    return Err(parse_error(lineno, col, "duplicate table"));
                }
                if toks.len() > 1 {
                    return Err(parse_error(lineno, toks[1].0, "rows start on the next line"));
                }
                table_seen = true;
                rows_pending = labels.len();
            } else if first == "subset" {
                let Some(labels) = &elements else {
                    return Err(parse_error(lineno, col, "subset before elements"));
                };
                let Some(&(ncol, name)) = toks.get(1) else {
                    return Err(parse_error(lineno, col, "missing subset name"));
                };
                let Some(name) = name.strip_suffix(':') else {
                    return Err(parse_error(lineno, ncol, "expected `subset <name>: <labels>`"));
                };
                if name.is_empty() {
                    return Err(parse_error(lineno, ncol, "empty subset name"));
                }
                if subsets.contains_key(name) {
                    return Err(parse_error(lineno, ncol, format!("duplicate subset {name:?}")));
                }
                let mut members = Vec::new();
                for &(c, t) in &toks[2..] {
                    if !labels.iter().any(|l| l == t) {
                        return Err(parse_error(lineno, c, format!("unknown label {t:?}")));
                    }
                    members.push(t.to_string());
                }
                subsets.insert(name.to_string(), members);
            } else {
                return Err(parse_error(lineno, col, format!("unexpected token {first:?}")));
            }
        }
        let Some(elements) = elements else {
            return Err(parse_error(1, 1, "missing elements line"));
        };
        if !table_seen {
            return Err(parse_error(text.lines().count().max(1), 1, "missing table"));
        }
        if rows_pending > 0 {
            return Err(parse_error(
                text.lines().count().max(1),
                1,
                format!("table has {} rows, expected {}", table.len(), elements.len()),
            ));
        }
        Ok(SemigroupFile { elements, table, subsets })
    }

    fn parse_json(text: &str) -> Result<Self, CliError> {
        let raw: JsonFile = serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
        let n = raw.elements.len();
        let json_err = |m: String| parse_error(0, 0, m);
        let mut table = Vec::with_capacity(n);
        for (r, row) in raw.table.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for entry in row {
                out.push(match entry {
                    JsonEntry::Index(i) if *i < n => *i,
                    JsonEntry::Index(i) => return Err(json_err(format!("row {r}: index {i} out of range"))),
                    JsonEntry::Label(l) => raw
                        .elements
                        .iter()
                        .position(|e| e == l)
                        .ok_or_else(|| json_err(format!("row {r}: unknown label {l:?}")))?,
                });
            }
            table.push(out);
        }
        for (name, members) in &raw.subsets {
            if let Some(l) = members.iter().find(|l| !raw.elements.contains(l)) {
                return Err(json_err(format!("subset {name}: unknown label {l:?}")));
            }
        }
        Ok(SemigroupFile { elements: raw.elements, table, subsets: raw.subsets })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("elements: ");
        out.push_str(&self.elements.join(" "));
        out.push_str("\ntable:\n");
        let width = self.elements.iter().map(|l| l.chars().count()).max().unwrap_or(1);
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|&i| format!("{:<width$}", self.elements[i])).collect();
            out.push_str("  ");
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        for (name, members) in &self.subsets {
            out.push_str("subset ");
            out.push_str(name);
            out.push(':');
            for m in members {
                out.push(' ');
                out.push_str(m);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let raw = JsonFile {
            elements: self.elements.clone(),
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|&i| JsonEntry::Label(self.elements[i].clone())).collect())
                .collect(),
            subsets: self.subsets.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable") + "\n"
    }

    pub fn from_semigroup(s: &Semigroup) -> Self {
        SemigroupFile {
            elements: (0..s.order()).map(|x| s.label(x)).collect(),
            table: s.rows(),
            subsets: IndexMap::new(),
        }
    }

    pub fn add_subset(&mut self, name: &str, s: &Semigroup, set: &ElemSet) {
        self.subsets.insert(name.to_string(), set.iter().map(|x| s.label(x)).collect());
    }

    /// The validated semigroup (associativity is checked here).
    pub fn semigroup(&self) -> Result<Semigroup, CliError> {
        Semigroup::new(self.table.clone(), Some(self.elements.clone())).map_err(|e| match e {
            Error::NotAssociative { a, b, c } => {
                let [a, b, c] = [a, b, c].map(|x| self.elements[x].as_str());
                CliError::Invalid(format!("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})"))
            }
            e => e.into(),
        })
    }

    pub fn subset(&self, name: &str) -> Result<ElemSet, CliError> {
        let members = self.subsets.get(name).ok_or_else(|| CliError::UnknownSubset(name.to_string()))?;
        let idx = members.iter().map(|l| self.elements.iter().position(|e| e == l).expect("validated label"));
        Ok(ElemSet::from_elements(self.elements.len(), idx)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KLEIN: &str = "\
# Klein four group
elements: e a b c
table:
  e a b c
  a e c b
  b c e a   # row for b
  c b a e
subset H: e a
subset Empty:
";

    #[test]
    fn parses_text() {
        let f = SemigroupFile::parse(KLEIN).unwrap();
        assert_eq!(f.elements, ["e", "a", "b", "c"]);
        assert_eq!(f.table[2], vec![2, 3, 0, 1]);
        assert_eq!(f.subset("H").unwrap(), ElemSet::of(4, &[0, 1]));
        assert!(f.subset("Empty").unwrap().is_empty());
        assert!(matches!(f.subset("K"), Err(CliError::UnknownSubset(_))));
        assert!(f.semigroup().is_ok());
    }

    #[test]
    fn round_trips() {
        let f = SemigroupFile::parse(KLEIN).unwrap();
        assert_eq!(SemigroupFile::parse(&f.to_text()).unwrap(), f);
        assert_eq!(SemigroupFile::parse(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn json_accepts_indices() {
        let f = SemigroupFile::parse(r#"{"elements": ["x", "y"], "table": [[0, "x"], ["y", 1]]}"#).unwrap();
        assert_eq!(f.table, vec![vec![0, 0], vec![1, 1]]);
        assert!(SemigroupFile::parse(r#"{"elements": ["x"], "table": [[3]]}"#).is_err());
    }

    #[test]
    fn reports_locations() {
        let bad = "elements: e a\ntable:\n  e a\n  a e e\n";
        match SemigroupFile::parse(bad) {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (4, 3)),
            other => panic!("unexpected {other:?}"),
        }
        let bad = "elements: e a\ntable:\n  e a\n  a q\n";
        match SemigroupFile::parse(bad) {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (4, 5)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(SemigroupFile::parse("table:\n"), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(SemigroupFile::parse("elements: a\ntable:\n"), Err(CliError::Parse { .. })));
        assert!(matches!(SemigroupFile::parse("elements: a a\n"), Err(CliError::Parse { column: 13, .. })));
    }
}
