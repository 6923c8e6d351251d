//! Morphological parses as produced by the analyzer, and their split into
//! a lexical level followed by derivational levels.

mod analyzer;
mod values;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::featstruct::{Avm, FeatureValue};
use crate::orthography::normalize_root;

pub use analyzer::{Analyzer, AnalyzerTable};
pub use values::lower_value;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphError {
    #[error("malformed parse string at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("parse must start with CAT")]
    MissingCat,
    #[error("parse has no ROOT")]
    MissingRoot,
    #[error("CONV appears before ROOT")]
    ConvBeforeRoot,
    #[error("feature {0} repeated within one level")]
    Repeated(String),
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<MorphError> },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphItem {
    Pair { key: String, value: String },
    /// Category change: the word continues as `target` through `suffix`.
    Conv { target: String, suffix: String },
}

/// One analysis of a surface word, e.g. `[[CAT=NOUN][ROOT=at][AGR=3SG][POSS=1SG][CASE=NOM]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphParse {
    items: Vec<MorphItem>,
}

impl MorphParse {
    pub fn new(items: Vec<MorphItem>) -> Result<Self, MorphError> {
        match items.first() {
            Some(MorphItem::Pair { key, .. }) if key == "CAT" => {}
            _ => return Err(MorphError::MissingCat),
        }
        let root = items.iter().position(|i| matches!(i, MorphItem::Pair { key, .. } if key == "ROOT"));
        let conv = items.iter().position(|i| matches!(i, MorphItem::Conv { .. }));
        match (root, conv) {
            (None, Some(_)) => Err(MorphError::ConvBeforeRoot),
            (None, None) => Err(MorphError::MissingRoot),
            (Some(r), Some(c)) if c < r => Err(MorphError::ConvBeforeRoot),
            _ => Ok(MorphParse { items }),
        }
    }

    pub fn items(&self) -> &[MorphItem] {
        &self.items
    }

    pub fn root(&self) -> &str {
        self.items
            .iter()
            .find_map(|i| match i {
                MorphItem::Pair { key, value } if key == "ROOT" => Some(value.as_str()),
                _ => None,
            })
            .expect("validated on construction")
    }

    /// Number of levels: the lexical one plus one per category change.
    pub fn level_count(&self) -> usize {
        1 + self.items.iter().filter(|i| matches!(i, MorphItem::Conv { .. })).count()
    }
}

impl fmt::Display for MorphParse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in &self.items {
            match i {
                MorphItem::Pair { key, value } => write!(f, "[{key}={value}]")?,
                MorphItem::Conv { target, suffix } => write!(f, "[CONV={target}={suffix}]")?,
            }
        }
        f.write_str("]")
    }
}

impl FromStr for MorphParse {
    type Err = MorphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let offset = s.len() - s.trim_start().len();
        let err = |pos: usize, msg: &str| MorphError::Syntax { pos: pos + offset, msg: msg.into() };
        let body = t
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| err(0, "expected [[...]...]"))?;
        let mut items = Vec::new();
        let mut pos = 1;
        let mut rest = body;
        while !rest.is_empty() {
            let inner = rest.strip_prefix('[').ok_or_else(|| err(pos, "expected '['"))?;
            let end = inner.find(']').ok_or_else(|| err(pos, "unterminated item"))?;
            let item = &inner[..end];
            let fields: Vec<&str> = item.split('=').collect();
            let bad = || err(pos, &format!("bad item [{item}]"));
            if fields.iter().any(|f| f.is_empty()) {
                return Err(bad());
            }
            items.push(match fields.as_slice() {
                ["CONV", target, suffix] => MorphItem::Conv { target: target.to_string(), suffix: suffix.to_string() },
                [key, value] if *key != "CONV" => MorphItem::Pair { key: key.to_string(), value: value.to_string() },
                _ => return Err(bad()),
            });
            pos += end + 2;
            rest = &inner[end + 1..];
        }
        MorphParse::new(items)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelKind {
    Lexical { root: String },
    Derivational { suffix: String },
}

/// One level of a parse with lexicon-style lowercase values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub kind: LevelKind,
    pub category: String,
    pub proc_type: String,
    /// Inflectional features of this level as an open structure.
    pub inflections: Avm,
}

impl Level {
    pub fn is_lexical(&self) -> bool {
        matches!(self.kind, LevelKind::Lexical { .. })
    }
}

/// Splits a parse into its lexical level followed by one derivational level
/// per category change. Values are lowercased; roots keep the Turkish-letter
/// capitals and lose analyzer markers.
pub fn split_levels(p: &MorphParse) -> Result<Vec<Level>, MorphError> {
    let mut levels = Vec::with_capacity(p.level_count());
    let mut cur = Level {
        kind: LevelKind::Lexical { root: normalize_root(p.root()) },
        category: String::new(),
        proc_type: "none".into(),
        inflections: Avm::open(),
    };
    for item in &p.items {
        match item {
            MorphItem::Conv { target, suffix } => {
                let next = Level {
                    kind: LevelKind::Derivational { suffix: lower_value(suffix) },
                    category: lower_value(target),
                    proc_type: "none".into(),
                    inflections: Avm::open(),
                };
                levels.push(std::mem::replace(&mut cur, next));
            }
            MorphItem::Pair { key, value } => match key.as_str() {
                "CAT" => cur.category = lower_value(value),
                "ROOT" => {}
                "TYPE" => cur.proc_type = lower_value(value),
                _ => {
                    let name = key.to_ascii_lowercase();
                    if cur.inflections.contains(&name) {
                        return Err(MorphError::Repeated(key.clone()));
                    }
                    cur.inflections.set(name, FeatureValue::Atom(lower_value(value)));
                }
            },
        }
    }
    levels.push(cur);
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> MorphParse {
        s.parse().unwrap()
    }

    #[test]
    fn round_trips_text() {
        let s = "[[CAT=NOUN][ROOT=at][AGR=3SG][POSS=NONE][CASE=NOM][CONV=VERB=NONE][TAM2=PRES][AGR=1SG]]";
        assert_eq!(parse(s).to_string(), s);
    }

    #[test]
    fn splits_levels() {
        let p = parse("[[CAT=NOUN][ROOT=at][AGR=3SG][POSS=NONE][CASE=NOM][CONV=VERB=NONE][TAM2=PRES][AGR=1SG]]");
        let levels = split_levels(&p).unwrap();
        assert_eq!(levels.len(), 2);
        assert_eq!(levels[0].kind, LevelKind::Lexical { root: "at".into() });
        assert_eq!(levels[0].category, "noun");
        assert_eq!(levels[0].inflections.get("poss"), Some(&FeatureValue::atom("none")));
        assert_eq!(levels[1].kind, LevelKind::Derivational { suffix: "none".into() });
        assert_eq!(levels[1].category, "verb");
        assert_eq!(levels[1].inflections.get("agr"), Some(&FeatureValue::atom("1sg")));
        assert!(levels[1].inflections.get("poss").is_none());
    }

    #[test]
    fn type_and_sense() {
        let p = parse("[[CAT=VERB][ROOT=kaz][SENSE=POS][CONV=NOUN=MA][TYPE=INFINITIVE][AGR=3SG][POSS=NONE][CASE=NOM]]");
        let levels = split_levels(&p).unwrap();
        assert_eq!(levels[0].inflections.get("sense"), Some(&FeatureValue::atom("pos")));
        assert_eq!(levels[1].proc_type, "infinitive");
        assert_eq!(levels[1].kind, LevelKind::Derivational { suffix: "ma".into() });
        let rproper = parse("[[CAT=NOUN][ROOT=memnun][TYPE=RPROPER][AGR=3SG]]");
        assert_eq!(split_levels(&rproper).unwrap()[0].proc_type, "rproper");
    }

    #[test]
    fn suffix_spelling_keeps_dotless_i() {
        let p = parse("[[CAT=NOUN][ROOT=akIl][CONV=ADJ=LI][CONV=ADVERB=CA][TYPE=MANNER]]");
        let levels = split_levels(&p).unwrap();
        assert_eq!(levels.len(), 3);
        assert_eq!(levels[1].kind, LevelKind::Derivational { suffix: "lI".into() });
        assert_eq!(levels[2].kind, LevelKind::Derivational { suffix: "ca".into() });
        assert_eq!(levels[2].proc_type, "manner");
    }

    #[test]
    fn analyzer_marker_removed_from_root() {
        let p = parse("[[CAT=NOUN][ROOT=eK][AGR=3SG][POSS=1SG][CASE=NOM]]");
        assert_eq!(split_levels(&p).unwrap()[0].kind, LevelKind::Lexical { root: "ek".into() });
    }

    #[test]
    fn rejects_bad_parses() {
        assert_eq!("[[CAT=NOUN][CONV=VERB=NONE][ROOT=x]]".parse::<MorphParse>(), Err(MorphError::ConvBeforeRoot));
        assert_eq!("[[ROOT=x]]".parse::<MorphParse>(), Err(MorphError::MissingCat));
        assert_eq!("[[CAT=NOUN]]".parse::<MorphParse>(), Err(MorphError::MissingRoot));
        assert!(matches!("[[CAT=NOUN][ROOT]]".parse::<MorphParse>(), Err(MorphError::Syntax { .. })));
        assert!(matches!("[[CAT=NOUN][ROOT=a][CONV=X]]".parse::<MorphParse>(), Err(MorphError::Syntax { .. })));
        assert_eq!(
            split_levels(&parse("[[CAT=NOUN][ROOT=a][AGR=3SG][AGR=1SG]]")),
            Err(MorphError::Repeated("AGR".into()))
        );
    }

    #[test]
    fn level_count_matches_split() {
        for s in [
            "[[CAT=ADJ][ROOT=memnun][CONV=VERB=NONE][TAM2=PRES][AGR=1SG]]",
            "[[CAT=NOUN][ROOT=akIl][CONV=ADJ=LI][CONV=ADVERB=CA][TYPE=MANNER]]",
            "[[CAT=NOUN][ROOT=gece][AGR=3SG][POSS=NONE][CASE=NOM]]",
        ] {
            let p = parse(s);
            assert_eq!(split_levels(&p).unwrap().len(), p.level_count());
        }
    }
}
