use std::fmt::{self, Write};

use crate::catmap::Cat5;
use crate::featstruct::{FeatureStructure, Renderer};
use crate::morph::MorphParse;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MappingKey {
    Root { proc_cat: String, proc_type: String, root: String },
    Derivation { proc_cat: String, proc_type: String, suffix: String },
}

impl fmt::Display for MappingKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingKey::Root { proc_cat, proc_type, root } => write!(f, "{proc_cat}, {proc_type} and {root}"),
            MappingKey::Derivation { proc_cat, proc_type, suffix } => write!(f, "{proc_cat}, {proc_type} and {suffix}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mapping {
    pub parse: usize,
    pub key: MappingKey,
    pub cat: Cat5,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkipReason {
    RootNotMapped(MappingKey),
    DerivationNotMapped(MappingKey),
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skip {
    pub parse: usize,
    pub reason: SkipReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub parse: usize,
    /// Partial structure of the outermost level that failed the restrictions.
    pub last_level: FeatureStructure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsdbAccess {
    pub parse: usize,
    pub cat: Cat5,
    pub root: String,
    pub entries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TfsdbAccess {
    pub parse: usize,
    pub cat: Cat5,
    pub found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dropped {
    pub parse: usize,
    pub sense: Option<usize>,
    pub reason: String,
}

/// What happened to each parse of a query, phase by phase. Parse numbers
/// are 1-based positions in analyzer order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QueryTrace {
    pub surface: String,
    pub parses: Vec<MorphParse>,
    pub mappings: Vec<Mapping>,
    pub skipped: Vec<Skip>,
    pub eliminated: Vec<Elimination>,
    pub fsdb: Vec<FsdbAccess>,
    pub tfsdb: Vec<TfsdbAccess>,
    pub dropped: Vec<Dropped>,
    /// Structures built before the final filter.
    pub retrieved: usize,
    pub final_count: usize,
}

impl QueryTrace {
    pub fn transformed(&self) -> usize {
        self.parses.len() - self.skipped.len()
    }

    pub fn kept(&self) -> usize {
        self.transformed() - self.eliminated.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Verbosity {
    #[default]
    Silent,
    Counts,
    Full,
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

pub fn render_trace(t: &QueryTrace, v: Verbosity, r: &Renderer) -> String {
    let mut out = String::new();
    match v {
        Verbosity::Silent => {}
        Verbosity::Counts => {
            let _ = writeln!(out, "parses found: {}", t.parses.len());
            let _ = writeln!(out, "parses skipped: {}", t.skipped.len());
            let _ = writeln!(out, "parses transformed: {}", t.transformed());
            let _ = writeln!(out, "parses eliminated early: {}", t.eliminated.len());
            let _ = writeln!(out, "structures retrieved: {}", t.retrieved);
            let _ = writeln!(out, "structures dropped: {}", t.dropped.len());
            let _ = writeln!(out, "structures after final filter: {}", t.final_count);
        }
        Verbosity::Full => full(t, r, &mut out),
    }
    out
}

fn full(t: &QueryTrace, r: &Renderer, out: &mut String) {
    let _ = writeln!(out, "Processing {}...", t.surface);
    let _ = writeln!(out, "{} found:", plural(t.parses.len(), "morphological parse"));
    for (i, p) in t.parses.iter().enumerate() {
        let _ = writeln!(out, "  {}. {p}", i + 1);
    }
    for m in &t.mappings {
        let _ = writeln!(out, "Category mapping for parse {}: {} -> {}", m.parse, m.key, m.cat);
    }
    for s in &t.skipped {
        match &s.reason {
            SkipReason::RootNotMapped(k) => {
                let _ = writeln!(out, "Root mapping table has no entry for: {k}; parse {} is skipped", s.parse);
            }
            SkipReason::DerivationNotMapped(k) => {
                let _ = writeln!(out, "Derivation mapping table has no entry for: {k}; parse {} is skipped", s.parse);
            }
            SkipReason::Malformed(msg) => {
                let _ = writeln!(out, "Parse {} is malformed ({msg}) and is skipped", s.parse);
            }
        }
    }
    let _ = writeln!(out, "{} transformed", plural(t.transformed(), "parse"));
    let _ = writeln!(out, "Eliminating parses not satisfying the restrictions:");
    if t.eliminated.is_empty() {
        let _ = writeln!(out, "  none");
    }
    for e in &t.eliminated {
        let _ = writeln!(out, "  parse {} eliminated; last level:", e.parse);
        for line in r.render(&e.last_level).lines() {
            let _ = writeln!(out, "    {line}");
        }
    }
    let _ = writeln!(out, "Parses satisfying the restrictions: {}", t.kept());
    for a in &t.fsdb {
        let n = if a.entries == 1 { "1 entry".to_string() } else { format!("{} entries", a.entries) };
        let _ = writeln!(out, "FSDB access for parse {}: {} {} ({n})", a.parse, a.cat, a.root);
    }
    for a in &t.tfsdb {
        let found = if a.found { "" } else { " (no template)" };
        let _ = writeln!(out, "TFSDB access for parse {}: {}{found}", a.parse, a.cat);
    }
    for d in &t.dropped {
        match d.sense {
            Some(s) => {
                let _ = writeln!(out, "Parse {} sense {} dropped: {}", d.parse, s + 1, d.reason);
            }
            None => {
                let _ = writeln!(out, "Parse {} dropped: {}", d.parse, d.reason);
            }
        }
    }
    let _ = writeln!(out, "Applying the restrictions to {}: {} remain", plural(t.retrieved, "retrieved structure"), t.final_count);
}
