use crate::catmap::Cat5;
use crate::featstruct::{Avm, FeatureStructure, FeatureValue};

use super::DbError;

/// One sense of a root word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexiconEntry {
    pub cat: Cat5,
    pub root: String,
    pub fs: FeatureStructure,
    /// Comment lines kept with the entry when the file is saved.
    pub comments: Vec<String>,
}

/// Skeleton structure for words of a derived category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateEntry {
    pub cat: Cat5,
    pub fs: FeatureStructure,
    pub comments: Vec<String>,
}

/// Values filled into every entry whose category matches `pattern`
/// (`none` slots match anything) and that lacks them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefaultsEntry {
    pub pattern: Cat5,
    pub fs: FeatureStructure,
    pub comments: Vec<String>,
}

/// Morphology a root entry may carry: its key plus inflectional features
/// the analyzer reports, which then restrict the parses the sense accepts.
const ENTRY_MORPH: &[&str] = &[
    "stem", "form", "case", "agr", "poss", "sense", "tam1", "tam2", "copula", "comp", "passive", "reciprocal",
    "reflexive", "causative",
];

fn invariant(root: &str, msg: impl Into<String>) -> DbError {
    DbError::Invariant { root: root.to_string(), msg: msg.into() }
}

/// Puts a complete `cat` matrix first, checking any slots already present.
fn fill_cat(root: &mut Avm, fs: &FeatureStructure, cat: &Cat5, who: &str) -> Result<(), DbError> {
    if root.contains("cat") {
        match Cat5::from_fs(fs) {
            Some(c) if &c == cat => {}
            Some(c) => return Err(invariant(who, format!("cat {c} does not match key {cat}"))),
            None => return Err(invariant(who, "cat slots must be atoms")),
        }
    }
    root.remove("cat");
    root.pairs.insert(0, ("cat".into(), FeatureValue::Fs(cat.to_avm().opened())));
    Ok(())
}

impl LexiconEntry {
    /// Builds an entry, filling `cat`, `morph|stem` and `morph|form` when
    /// absent and rejecting structures that contradict the key.
    pub fn new(cat: Cat5, root: impl Into<String>, fs: FeatureStructure) -> Result<Self, DbError> {
        let root_word: String = root.into();
        let fs = fs.opened();
        let mut top = fs.root.clone();
        fill_cat(&mut top, &fs, &cat, &root_word)?;

        let mut morph = match top.get("morph").map(|v| fs.resolve(v)) {
            None => Avm::open(),
            Some(FeatureValue::Fs(m)) => m.clone(),
            Some(_) => return Err(invariant(&root_word, "morph must be a structure")),
        };
        if let Some(extra) = morph.names().find(|n| !ENTRY_MORPH.contains(n)) {
            return Err(invariant(&root_word, format!("morph|{extra} is not allowed in a root entry")));
        }
        match morph.get("stem").map(|v| fs.resolve(v)) {
            None => morph.set("stem", FeatureValue::atom(root_word.clone())),
            Some(FeatureValue::Atom(s)) if *s == root_word => {}
            Some(other) => return Err(invariant(&root_word, format!("morph|stem is {other:?}, expected the root"))),
        }
        match morph.get("form").map(|v| fs.resolve(v)) {
            None => morph.set("form", FeatureValue::atom("lexical")),
            Some(FeatureValue::Atom(f)) if f == "lexical" => {}
            Some(_) => return Err(invariant(&root_word, "morph|form must be lexical")),
        }
        if top.contains("morph") {
            top.set("morph", FeatureValue::Fs(morph));
        } else {
            top.pairs.insert(1, ("morph".into(), FeatureValue::Fs(morph)));
        }

        let fs = FeatureStructure::from_parts(top, fs.tags.clone()).map_err(|e| invariant(&root_word, e.to_string()))?;
        if !matches!(fs.get("sem|concept"), Some(FeatureValue::Concept(_))) {
            return Err(invariant(&root_word, "sem|concept is missing"));
        }
        Ok(LexiconEntry { cat, root: root_word, fs, comments: Vec::new() })
    }

    /// Copies in every default leaf the entry does not already have.
    pub(crate) fn apply_defaults(&mut self, d: &DefaultsEntry) {
        if !d.pattern.matches(&self.cat) {
            return;
        }
        let mut top = self.fs.root.clone();
        let mut changed = false;
        for (path, value) in d.fs.leaf_paths() {
            changed |= insert_missing(&mut top, &path, value);
        }
        if changed {
            self.fs = FeatureStructure::from_parts(top, self.fs.tags.clone()).expect("defaults keep validity");
        }
    }
}

fn insert_missing(avm: &mut Avm, path: &[String], value: FeatureValue) -> bool {
    let (first, rest) = path.split_first().expect("leaf paths are non-empty");
    if rest.is_empty() {
        if avm.contains(first) {
            return false;
        }
        avm.set(first.clone(), value);
        return true;
    }
    if !avm.contains(first) {
        avm.set(first.clone(), FeatureValue::Fs(Avm::open()));
    }
    match avm.get_mut(first) {
        Some(FeatureValue::Fs(inner)) => insert_missing(inner, rest, value),
        _ => false,
    }
}

impl TemplateEntry {
    pub fn new(cat: Cat5, fs: FeatureStructure) -> Result<Self, DbError> {
        let fs = fs.opened();
        let mut top = fs.root.clone();
        fill_cat(&mut top, &fs, &cat, &format!("template {cat}"))?;
        let fs = FeatureStructure::from_parts(top, fs.tags.clone())
            .map_err(|e| invariant(&format!("template {cat}"), e.to_string()))?;
        Ok(TemplateEntry { cat, fs, comments: Vec::new() })
    }
}

impl DefaultsEntry {
    pub fn new(pattern: Cat5, fs: FeatureStructure) -> Result<Self, DbError> {
        if let Some(bad) = fs.root.names().find(|n| *n == "cat" || *n == "morph") {
            return Err(invariant(&format!("defaults {pattern}"), format!("defaults may not set {bad}")));
        }
        Ok(DefaultsEntry { pattern, fs: fs.opened(), comments: Vec::new() })
    }
}
