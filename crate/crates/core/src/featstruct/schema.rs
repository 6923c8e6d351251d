use std::collections::BTreeSet;

use super::FeatureStructure;

const BUILTIN: &[&str] = &[
    // top level
    "cat", "morph", "syn", "sem", "phon",
    // category
    "maj", "min", "sub", "ssub", "sssub",
    // morphology
    "stem", "form", "derv_suffix", "case", "agr", "poss", "sense", "tam1", "tam2", "copula", "comp",
    "passive", "reciprocal", "reflexive", "causative",
    // syntax
    "subcat", "modifies", "syn-role", "occurrence", "constraints",
    // semantics
    "concept", "roles", "agent", "theme", "experiencer", "instrument", "source", "goal",
    "material", "unit", "container", "countable", "spatial", "temporal", "animate", "human", "edible",
    "definite", "gradable", "questional", "polarity", "connection",
];

/// Inventory of known feature names. Structures using other names are still
/// accepted; callers report them as warnings.
#[derive(Clone, Debug)]
pub struct Schema {
    names: BTreeSet<String>,
}

impl Default for Schema {
    fn default() -> Self {
        Schema { names: BTreeSet::from_iter(BUILTIN.iter().map(|s| s.to_string())) }
    }
}

impl Schema {
    /// Adds names listed one per line; `#` starts a comment.
    pub fn extend_from_text(&mut self, text: &str) {
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                self.names.insert(line.to_string());
            }
        }
    }

    pub fn declare(&mut self, name: impl Into<String>) {
        self.names.insert(name.into());
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.contains(name)
    }

    pub fn unknown_names(&self, fs: &FeatureStructure) -> Vec<String> {
        fs.feature_names().into_iter().filter(|n| !self.contains(n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_fs;
    use super::*;

    #[test]
    fn reports_unknown_names() {
        let mut s = Schema::default();
        let fs = parse_fs("[cat:[maj:verb], head:[x:y]]").unwrap();
        assert_eq!(s.unknown_names(&fs), ["head", "x"]);
        s.extend_from_text("# extensions\nhead\nx  # trailing\n");
        assert!(s.unknown_names(&fs).is_empty());
    }
}
