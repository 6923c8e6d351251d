//! Query pipeline: analyze the surface form, map categories, filter parses
//! early on category and morphology, assemble structures, filter again.

mod check;
mod trace;

use thiserror::Error;

use crate::catmap::{Cat5, DerivMapTable, RootMapTable};
use crate::featstruct::{parse_fs, subsumes, unify, Avm, Concept, Dag, FeatureStructure, FeatureValue, FsError};
use crate::fsdb::{Database, TemplateEntry};
use crate::morph::{split_levels, Analyzer, Level, LevelKind, MorphParse};
use crate::orthography;

pub use crate::featstruct::check_constraint;
pub use check::{check, CheckReport};
pub use trace::{
    render_trace, Dropped, Elimination, FsdbAccess, Mapping, MappingKey, QueryTrace, Skip, SkipReason, TfsdbAccess,
    Verbosity,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QueryError {
    #[error("query: {0}")]
    Syntax(#[from] FsError),
    #[error("query has no phon feature")]
    MissingPhon,
    #[error("query phon must be a single atom")]
    PhonNotAtomic,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("stem has no concept")]
    NoConcept,
    #[error("template for {0} has no morph structure")]
    BadTemplate(Cat5),
    #[error("derived structure would be cyclic")]
    Cyclic,
}

/// A request: a structure whose `phon` names the surface word and whose
/// other features restrict the answers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryForm {
    fs: FeatureStructure,
    phon: String,
}

impl QueryForm {
    pub fn new(fs: FeatureStructure) -> Result<Self, QueryError> {
        let phon = match fs.get("phon") {
            None => return Err(QueryError::MissingPhon),
            Some(FeatureValue::Atom(a)) => a.clone(),
            Some(_) => return Err(QueryError::PhonNotAtomic),
        };
        Ok(QueryForm { fs, phon })
    }

    /// Parses query text, converting Turkish letters to the lexicon spelling.
    pub fn parse(text: &str) -> Result<Self, QueryError> {
        Self::new(parse_fs(&orthography::encode(text))?)
    }

    pub fn fs(&self) -> &FeatureStructure {
        &self.fs
    }

    pub fn phon(&self) -> &str {
        &self.phon
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappedLevel {
    pub cat: Cat5,
    pub level: Level,
}

/// A parse whose every level has a lexicon category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformedParse {
    /// 1-based position among the analyzer's parses.
    pub parse: usize,
    pub levels: Vec<MappedLevel>,
}

impl TransformedParse {
    pub fn root(&self) -> &str {
        match &self.levels[0].level.kind {
            LevelKind::Lexical { root } => root,
            LevelKind::Derivational { .. } => unreachable!("first level is lexical"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QueryOptions {
    /// Drop parses whose outermost level already contradicts the query
    /// before anything is retrieved.
    pub early_filter: bool,
}

impl Default for QueryOptions {
    fn default() -> Self {
        QueryOptions { early_filter: true }
    }
}

#[derive(Clone, Debug)]
pub struct QueryOutput {
    pub results: Vec<FeatureStructure>,
    pub trace: QueryTrace,
}

/// Everything a query needs: analyzer, both category tables and the database.
pub struct Lexicon {
    pub analyzer: Box<dyn Analyzer>,
    pub roots: RootMapTable,
    pub derivs: DerivMapTable,
    pub db: Database,
}

impl Lexicon {
    pub fn new(analyzer: Box<dyn Analyzer>, roots: RootMapTable, derivs: DerivMapTable, db: Database) -> Self {
        Lexicon { analyzer, roots, derivs, db }
    }

    pub fn query(&self, q: &QueryForm) -> QueryOutput {
        self.query_with(q, QueryOptions::default())
    }

    pub fn query_with(&self, q: &QueryForm, opts: QueryOptions) -> QueryOutput {
        let mut trace = QueryTrace { surface: q.phon.clone(), ..QueryTrace::default() };
        let parses = self.analyzer.analyze(&q.phon);
        trace.parses = parses.clone();
        let tps = transform(&parses, &self.roots, &self.derivs, &mut trace);
        let tps = if opts.early_filter { early_filter(tps, q, &self.db, &mut trace) } else { tps };
        let built = retrieve(&tps, &self.db, &q.phon, &mut trace);
        trace.retrieved = built.len();
        let results = final_filter(built, q);
        trace.final_count = results.len();
        QueryOutput { results, trace }
    }
}

/// Maps every level of every parse onto a lexicon category. Parses with an
/// unmapped level are skipped and recorded.
pub fn transform(
    parses: &[MorphParse],
    roots: &RootMapTable,
    derivs: &DerivMapTable,
    trace: &mut QueryTrace,
) -> Vec<TransformedParse> {
    let mut out = Vec::new();
    'parses: for (i, p) in parses.iter().enumerate() {
        let n = i + 1;
        let levels = match split_levels(p) {
            Ok(l) => l,
            Err(e) => {
                trace.skipped.push(Skip { parse: n, reason: SkipReason::Malformed(e.to_string()) });
                continue;
            }
        };
        let mut mapped = Vec::with_capacity(levels.len());
        for level in levels {
            let (key, cat) = match &level.kind {
                LevelKind::Lexical { root } => {
                    let key = MappingKey::Root {
                        proc_cat: level.category.clone(),
                        proc_type: level.proc_type.clone(),
                        root: root.clone(),
                    };
                    match roots.map_root(&level.category, &level.proc_type, root) {
                        Some(c) => (key, c.clone()),
                        None => {
                            trace.skipped.push(Skip { parse: n, reason: SkipReason::RootNotMapped(key) });
                            continue 'parses;
                        }
                    }
                }
                LevelKind::Derivational { suffix } => {
                    let key = MappingKey::Derivation {
                        proc_cat: level.category.clone(),
                        proc_type: level.proc_type.clone(),
                        suffix: suffix.clone(),
                    };
                    match derivs.map_derivation(&level.category, suffix) {
                        Some(c) => (key, c.clone()),
                        None => {
                            trace.skipped.push(Skip { parse: n, reason: SkipReason::DerivationNotMapped(key) });
                            continue 'parses;
                        }
                    }
                }
            };
            trace.mappings.push(Mapping { parse: n, key, cat: cat.clone() });
            mapped.push(MappedLevel { cat, level });
        }
        out.push(TransformedParse { parse: n, levels: mapped });
    }
    out
}

/// What the outermost level of a parse will certainly carry under `cat` and
/// `morph`, apart from the nested stem of a derived word.
pub fn partial_fs(tp: &TransformedParse, db: &Database, surface: &str) -> FeatureStructure {
    let last = tp.levels.last().expect("parses have a lexical level");
    let (mut morph, tags) = match &last.level.kind {
        LevelKind::Lexical { root } => {
            let m = Avm::open().with("stem", FeatureValue::atom(root.clone())).with("form", FeatureValue::atom("lexical"));
            (m, Default::default())
        }
        LevelKind::Derivational { suffix } => {
            let skeleton = db.lookup_template(&last.cat).and_then(|t| t.fs.extract("morph"));
            let (mut m, tags) = match skeleton {
                Some(s) => (s.root().clone(), s.tags),
                None => (Avm::open(), Default::default()),
            };
            m.remove("stem");
            m.set("form", FeatureValue::atom("derived"));
            m.set("derv_suffix", FeatureValue::atom(suffix.clone()));
            (m, tags)
        }
    };
    for (f, v) in last.level.inflections.iter() {
        morph.set(f, v.clone());
    }
    let top = Avm::open()
        .with("cat", FeatureValue::Fs(last.cat.to_avm().opened()))
        .with("morph", FeatureValue::Fs(morph))
        .with("phon", FeatureValue::atom(surface));
    FeatureStructure::from_parts(top, tags).expect("partial structure is well formed")
}

/// Drops `morph|stem` from a restriction.
fn without_stem(q: &FeatureStructure) -> FeatureStructure {
    let mut top = q.root().clone();
    if let Some(FeatureValue::Fs(m)) = top.get_mut("morph") {
        m.remove("stem");
    }
    FeatureStructure::from_parts(top, q.tags.clone()).expect("removal keeps validity")
}

/// Eliminates parses whose outermost level contradicts the `cat`/`morph`
/// part of the query. Restrictions on the nested stem of a derived word are
/// left to the final filter.
pub fn early_filter(tps: Vec<TransformedParse>, q: &QueryForm, db: &Database, trace: &mut QueryTrace) -> Vec<TransformedParse> {
    let projected = q.fs.project(&["cat", "morph"]);
    let for_derived = without_stem(&projected);
    let mut kept = Vec::new();
    for tp in tps {
        let partial = partial_fs(&tp, db, &q.phon);
        let restriction = if tp.levels.len() > 1 { &for_derived } else { &projected };
        if subsumes(restriction, &partial) {
            kept.push(tp);
        } else {
            trace.eliminated.push(Elimination { parse: tp.parse, last_level: partial });
        }
    }
    kept
}

/// Builds the structure of a derived word on top of the structure of its stem.
pub fn build_derived(level: &MappedLevel, stem: &FeatureStructure, template: &TemplateEntry) -> Result<FeatureStructure, BuildError> {
    let suffix = match &level.level.kind {
        LevelKind::Derivational { suffix } => suffix.clone(),
        LevelKind::Lexical { .. } => unreachable!("only derivational levels are built"),
    };
    let stem_concept = match stem.get("sem|concept") {
        Some(FeatureValue::Concept(c)) => c.clone(),
        _ => return Err(BuildError::NoConcept),
    };

    let mut dag = Dag::new();
    let t = dag.import(&template.fs);
    let s = dag.import(stem);
    let none = dag.leaf(&FeatureValue::atom("none")).expect("atom");
    dag.set_child(s, "phon", none);

    let cat = dag.import(&FeatureStructure::new(Avm::open().with("c", FeatureValue::Fs(level.cat.to_avm().opened()))));
    let cat = dag.child(cat, "c").expect("just built");
    dag.set_child(t, "cat", cat);

    let m = match dag.child(t, "morph") {
        Some(m) if dag.is_complex(m) => m,
        Some(_) => return Err(BuildError::BadTemplate(level.cat.clone())),
        None => {
            let m = dag.empty(true);
            dag.set_child(t, "morph", m);
            m
        }
    };
    dag.set_child(m, "stem", s);
    for (f, v) in [("form", FeatureValue::atom("derived")), ("derv_suffix", FeatureValue::atom(suffix.clone()))] {
        let id = dag.leaf(&v).expect("atom");
        dag.set_child(m, f, id);
    }
    // Inflections of this level fill the template's slots.
    for (f, v) in level.level.inflections.iter() {
        if let Some(id) = dag.leaf(v) {
            dag.set_child(m, f, id);
        }
    }

    for (group, feature) in [("syn", "subcat"), ("sem", "roles")] {
        if let Some(shared) = dag.follow(s, &[group, feature]) {
            let g = match dag.child(t, group) {
                Some(g) if dag.is_complex(g) => g,
                _ => {
                    let g = dag.empty(true);
                    dag.set_child(t, group, g);
                    g
                }
            };
            dag.set_child(g, feature, shared);
        }
    }

    let sem = match dag.child(t, "sem") {
        Some(g) if dag.is_complex(g) => g,
        _ => {
            let g = dag.empty(true);
            dag.set_child(t, "sem", g);
            g
        }
    };
    let concept = dag.leaf(&FeatureValue::Concept(Concept::derived(suffix, stem_concept))).expect("concept");
    dag.set_child(sem, "concept", concept);

    dag.export(t).ok_or(BuildError::Cyclic)
}

fn with_phon(fs: &FeatureStructure, surface: &str) -> FeatureStructure {
    let mut top = fs.root().clone();
    top.set("phon", FeatureValue::atom(surface));
    FeatureStructure::from_parts(top, fs.tags.clone()).expect("setting phon keeps validity")
}

/// Assembles one structure per sense of every remaining parse, in parse
/// order and then sense order.
pub fn retrieve(tps: &[TransformedParse], db: &Database, surface: &str, trace: &mut QueryTrace) -> Vec<FeatureStructure> {
    let mut out = Vec::new();
    for tp in tps {
        let lexical = &tp.levels[0];
        let senses = db.lookup(&lexical.cat, tp.root());
        trace.fsdb.push(FsdbAccess { parse: tp.parse, cat: lexical.cat.clone(), root: tp.root().to_string(), entries: senses.len() });

        let mut templates = Vec::new();
        for lvl in &tp.levels[1..] {
            let t = db.lookup_template(&lvl.cat);
            trace.tfsdb.push(TfsdbAccess { parse: tp.parse, cat: lvl.cat.clone(), found: t.is_some() });
            templates.push(t);
        }
        if let Some(missing) = tp.levels[1..].iter().zip(&templates).find(|(_, t)| t.is_none()) {
            trace.dropped.push(Dropped { parse: tp.parse, sense: None, reason: format!("no template for {}", missing.0.cat) });
            continue;
        }
        let inflections = FeatureStructure::new(Avm::open().with("morph", FeatureValue::Fs(lexical.level.inflections.clone())));

        'senses: for (si, sense) in senses.iter().enumerate() {
            let Some(mut fs) = unify(&sense.fs, &inflections) else {
                trace.dropped.push(Dropped {
                    parse: tp.parse,
                    sense: Some(si),
                    reason: "inflections do not unify with the entry".into(),
                });
                continue;
            };
            for (lvl, t) in tp.levels[1..].iter().zip(&templates) {
                match build_derived(lvl, &fs, t.expect("checked above")) {
                    Ok(d) => fs = d,
                    Err(e) => {
                        trace.dropped.push(Dropped { parse: tp.parse, sense: Some(si), reason: e.to_string() });
                        continue 'senses;
                    }
                }
            }
            out.push(with_phon(&fs, surface));
        }
    }
    out
}

/// Keeps the structures the full query subsumes.
pub fn final_filter(results: Vec<FeatureStructure>, q: &QueryForm) -> Vec<FeatureStructure> {
    results.into_iter().filter(|r| subsumes(&q.fs, r)).collect()
}
