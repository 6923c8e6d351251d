//! Lexicon database: root entries keyed by category and root, templates for
//! derived categories, and per-category defaults.

mod entry;
mod file;

use std::collections::HashMap;
use std::path::Path;

use indexmap::IndexMap;
use thiserror::Error;

use crate::catmap::Cat5;
use crate::featstruct::{FsError, Schema};

pub use entry::{DefaultsEntry, LexiconEntry, TemplateEntry};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DbError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Fs { line: usize, source: FsError },
    #[error("entry {root}: {msg}")]
    Invariant { root: String, msg: String },
    #[error("line {line}: second template for {cat}")]
    DuplicateTemplate { line: usize, cat: Cat5 },
    #[error("no sense {index} of {root} under {cat}")]
    NoSuchEntry { cat: Cat5, root: String, index: usize },
    #[error("cannot access {path}: {msg}")]
    Io { path: String, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Item {
    Entry(LexiconEntry),
    Template(Cat5),
    Defaults(DefaultsEntry),
    Features { names: Vec<String>, comments: Vec<String> },
}

/// Filter for [`Database::browse`].
#[derive(Clone, Debug, Default)]
pub struct Browse {
    /// Category prefix; `none` slots match anything.
    pub cat: Option<Cat5>,
    /// Substring the root must contain.
    pub root: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Database {
    header: Vec<String>,
    footer: Vec<String>,
    items: Vec<Item>,
    templates: IndexMap<Cat5, TemplateEntry>,
    index: HashMap<(Cat5, String), Vec<usize>>,
}

impl Database {
    pub fn new() -> Self {
        Database::default()
    }

    pub fn parse(text: &str) -> Result<Self, DbError> {
        file::parse(text)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, DbError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| DbError::Io { path: path.display().to_string(), msg: e.to_string() })?;
        Self::parse(&text)
    }

    pub fn to_text(&self) -> String {
        file::render(self)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), DbError> {
        let path = path.as_ref();
        std::fs::write(path, self.to_text()).map_err(|e| DbError::Io { path: path.display().to_string(), msg: e.to_string() })
    }

    fn reindex(&mut self) {
        self.index.clear();
        for (i, item) in self.items.iter().enumerate() {
            if let Item::Entry(e) = item {
                self.index.entry((e.cat.clone(), e.root.clone())).or_default().push(i);
            }
        }
    }

    fn defaults(&self) -> impl Iterator<Item = &DefaultsEntry> {
        self.items.iter().filter_map(|i| match i {
            Item::Defaults(d) => Some(d),
            _ => None,
        })
    }

    /// All senses of `root` under `cat`, in file order.
    pub fn lookup(&self, cat: &Cat5, root: &str) -> Vec<&LexiconEntry> {
        self.index
            .get(&(cat.clone(), root.to_string()))
            .map(|ids| {
                ids.iter()
                    .filter_map(|&i| match &self.items[i] {
                        Item::Entry(e) => Some(e),
                        _ => None,
                    })
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn lookup_template(&self, cat: &Cat5) -> Option<&TemplateEntry> {
        self.templates.get(cat)
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.items.iter().filter_map(|i| match i {
            Item::Entry(e) => Some(e),
            _ => None,
        })
    }

    pub fn templates(&self) -> impl Iterator<Item = &TemplateEntry> {
        self.templates.values()
    }

    /// Feature names declared by the database in addition to the built-in ones.
    pub fn schema(&self) -> Schema {
        let mut s = Schema::default();
        for i in &self.items {
            if let Item::Features { names, .. } = i {
                names.iter().for_each(|n| s.declare(n.clone()));
            }
        }
        s
    }

    /// Appends a new sense after any existing ones. Category defaults are
    /// applied before storing.
    pub fn add_entry(&mut self, mut entry: LexiconEntry) -> Result<(), DbError> {
        entry = LexiconEntry::new(entry.cat, entry.root, entry.fs).map(|e| LexiconEntry { comments: entry.comments, ..e })?;
        for d in self.defaults() {
            entry.apply_defaults(d);
        }
        self.items.push(Item::Entry(entry));
        self.reindex();
        Ok(())
    }

    /// Removes sense `index` (0-based, file order) of `root` under `cat`.
    pub fn delete_entry(&mut self, cat: &Cat5, root: &str, index: usize) -> Result<LexiconEntry, DbError> {
        let pos = self
            .index
            .get(&(cat.clone(), root.to_string()))
            .and_then(|ids| ids.get(index))
            .copied()
            .ok_or_else(|| DbError::NoSuchEntry { cat: cat.clone(), root: root.to_string(), index })?;
        let removed = match self.items.remove(pos) {
            Item::Entry(e) => e,
            _ => unreachable!("index points at entries"),
        };
        self.reindex();
        Ok(removed)
    }

    pub fn add_template(&mut self, t: TemplateEntry) -> Result<(), DbError> {
        if self.templates.contains_key(&t.cat) {
            return Err(DbError::DuplicateTemplate { line: 0, cat: t.cat });
        }
        self.items.push(Item::Template(t.cat.clone()));
        self.templates.insert(t.cat.clone(), t);
        Ok(())
    }

    pub fn browse(&self, filter: &Browse) -> Vec<&LexiconEntry> {
        self.entries()
            .filter(|e| filter.cat.as_ref().is_none_or(|c| c.matches(&e.cat)))
            .filter(|e| filter.root.as_ref().is_none_or(|r| e.root.contains(r.as_str())))
            .collect()
    }
}
