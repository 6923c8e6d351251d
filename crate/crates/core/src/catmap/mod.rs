//! Lexicon categories and the tables mapping analyzer categories onto them.

mod inventory;

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::featstruct::{Avm, FeatureStructure, FeatureValue};

pub use inventory::{in_inventory, inventory};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate key {key}")]
    Duplicate { line: usize, key: String },
    #[error("line {line}: category {cat} is not in the inventory")]
    UnknownCategory { line: usize, cat: Cat5 },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

pub const CAT_SLOTS: [&str; 5] = ["maj", "min", "sub", "ssub", "sssub"];

/// Five-slot lexicon category. Unused trailing slots hold `none`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cat5 {
    slots: [String; 5],
}

impl Cat5 {
    pub fn new(parts: &[&str]) -> Self {
        let mut slots: [String; 5] = Default::default();
        for (i, s) in slots.iter_mut().enumerate() {
            *s = parts.get(i).copied().filter(|p| !p.is_empty()).unwrap_or("none").to_string();
        }
        Cat5 { slots }
    }

    pub fn slots(&self) -> &[String; 5] {
        &self.slots
    }

    pub fn maj(&self) -> &str {
        &self.slots[0]
    }

    pub fn min(&self) -> &str {
        &self.slots[1]
    }

    /// `cat` matrix with all five slots.
    pub fn to_avm(&self) -> Avm {
        CAT_SLOTS
            .iter()
            .zip(&self.slots)
            .map(|(n, v)| (n.to_string(), FeatureValue::atom(v.clone())))
            .collect::<Avm>()
    }

    /// Reads the `cat` feature of a structure; missing slots count as `none`.
    pub fn from_fs(fs: &FeatureStructure) -> Option<Cat5> {
        let cat = fs.get("cat")?.as_fs()?;
        let mut parts = Vec::new();
        for n in CAT_SLOTS {
            match cat.get(n).map(|v| fs.resolve(v)) {
                Some(FeatureValue::Atom(a)) => parts.push(a.as_str()),
                None => parts.push("none"),
                Some(_) => return None,
            }
        }
        Some(Cat5::new(&parts))
    }

    /// Prefix match where `none` slots of `self` accept anything.
    pub fn matches(&self, other: &Cat5) -> bool {
        self.slots.iter().zip(&other.slots).all(|(p, o)| p == "none" || p == o)
    }
}

impl fmt::Display for Cat5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.slots.join(","))
    }
}

impl FromStr for Cat5 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.is_empty() || parts.len() > 5 || parts[0].is_empty() {
            return Err(format!("bad category '{s}'"));
        }
        Ok(Cat5::new(&parts))
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim_end();
        if l.trim().is_empty() || l.trim_start().starts_with('#') {
            None
        } else {
            Some((i + 1, l.split('\t').map(str::trim).collect()))
        }
    })
}

fn parse_cat(line: usize, s: &str) -> Result<Cat5, TableError> {
    let cat: Cat5 = s.parse().map_err(|msg| TableError::Syntax { line, msg })?;
    if !in_inventory(&cat) {
        return Err(TableError::UnknownCategory { line, cat });
    }
    Ok(cat)
}

fn read(path: &Path) -> Result<String, TableError> {
    std::fs::read_to_string(path).map_err(|e| TableError::Io { path: path.display().to_string(), msg: e.to_string() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootRow {
    pub proc_cat: String,
    pub proc_type: String,
    pub root: String,
    pub cat: Cat5,
}

/// Maps `(analyzer category, analyzer type, root)` to a lexicon category.
#[derive(Clone, Debug, Default)]
pub struct RootMapTable {
    rows: Vec<RootRow>,
    index: HashMap<(String, String, String), usize>,
}

impl RootMapTable {
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut t = RootMapTable::default();
        for (line, f) in data_lines(text) {
            let [pc, pt, root, cat] = f.as_slice() else {
                return Err(TableError::Syntax { line, msg: "expected 4 tab-separated fields".into() });
            };
            let key = (pc.to_string(), pt.to_string(), root.to_string());
            if t.index.contains_key(&key) {
                return Err(TableError::Duplicate { line, key: format!("{pc}, {pt}, {root}") });
            }
            let cat = parse_cat(line, cat)?;
            t.index.insert(key, t.rows.len());
            t.rows.push(RootRow { proc_cat: pc.to_string(), proc_type: pt.to_string(), root: root.to_string(), cat });
        }
        Ok(t)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, TableError> {
        Self::parse(&read(path.as_ref())?)
    }

    pub fn map_root(&self, proc_cat: &str, proc_type: &str, root: &str) -> Option<&Cat5> {
        let key = (proc_cat.to_string(), proc_type.to_string(), root.to_string());
        self.index.get(&key).map(|&i| &self.rows[i].cat)
    }

    pub fn rows(&self) -> &[RootRow] {
        &self.rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivRow {
    pub proc_cat: String,
    pub suffix: String,
    pub cat: Cat5,
}

/// Maps `(analyzer category after derivation, suffix)` to a lexicon category.
#[derive(Clone, Debug, Default)]
pub struct DerivMapTable {
    rows: Vec<DerivRow>,
    index: HashMap<(String, String), usize>,
}

impl DerivMapTable {
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut t = DerivMapTable::default();
        for (line, f) in data_lines(text) {
            let [pc, suffix, cat] = f.as_slice() else {
                return Err(TableError::Syntax { line, msg: "expected 3 tab-separated fields".into() });
            };
            let key = (pc.to_string(), suffix.to_string());
            if t.index.contains_key(&key) {
                return Err(TableError::Duplicate { line, key: format!("{pc}, {suffix}") });
            }
            let cat = parse_cat(line, cat)?;
            t.index.insert(key, t.rows.len());
            t.rows.push(DerivRow { proc_cat: pc.to_string(), suffix: suffix.to_string(), cat });
        }
        Ok(t)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, TableError> {
        Self::parse(&read(path.as_ref())?)
    }

    pub fn map_derivation(&self, proc_cat: &str, suffix: &str) -> Option<&Cat5> {
        self.index.get(&(proc_cat.to_string(), suffix.to_string())).map(|&i| &self.rows[i].cat)
    }

    pub fn rows(&self) -> &[DerivRow] {
        &self.rows
    }
}
