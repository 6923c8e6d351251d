//! Typed feature structures: values, text syntax, unification and subsumption.

mod dag;
mod parse;
mod render;
mod schema;
mod value;

use thiserror::Error;

pub use dag::{Dag, NodeId};
pub use parse::parse_fs;
pub use render::{render_fs, Renderer, Style};
pub use schema::Schema;
pub use value::{Avm, Concept, FeatureValue, Tag};

use value::{meet, TagTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FsError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("duplicate feature '{name}' at byte {pos}")]
    DuplicateFeature { pos: usize, name: String },
    #[error("unresolved tag @{0}")]
    UnresolvedTag(Tag),
    #[error("tag @{0} refers to itself")]
    CyclicTag(Tag),
}

/// A top-level structure. Shared values live in a tag table and every
/// occurrence refers to them through [`FeatureValue::TagRef`]. Instances are
/// kept canonical: tags are numbered in order of first occurrence and a tag
/// with a single occurrence is inlined.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FeatureStructure {
    pub(crate) root: Avm,
    pub(crate) tags: TagTable,
}

/// Splits `a|b|c` into its feature names.
pub fn split_path(path: &str) -> Vec<&str> {
    if path.is_empty() {
        Vec::new()
    } else {
        path.split('|').collect()
    }
}

impl FeatureStructure {
    /// Wraps a tag-free matrix.
    pub fn new(root: Avm) -> Self {
        debug_assert!(!contains_tags(&root), "FeatureStructure::new takes tag-free input");
        FeatureStructure { root, tags: TagTable::new() }
    }

    pub fn from_parts(root: Avm, tags: std::collections::BTreeMap<Tag, FeatureValue>) -> Result<Self, FsError> {
        parse::check_tags(&root, &tags)?;
        let raw = FeatureStructure { root, tags };
        let mut dag = Dag::new();
        let id = dag.import(&raw);
        dag.export(id).ok_or(FsError::CyclicTag(0))
    }

    pub fn root(&self) -> &Avm {
        &self.root
    }

    pub fn tag_value(&self, t: Tag) -> Option<&FeatureValue> {
        self.tags.get(&t)
    }

    /// Follows tag references until a concrete value is reached.
    pub fn resolve<'a>(&'a self, mut v: &'a FeatureValue) -> &'a FeatureValue {
        while let FeatureValue::TagRef(t) = v {
            match self.tags.get(t) {
                Some(next) => v = next,
                None => break,
            }
        }
        v
    }

    /// Value at a `|`-separated path, with tags resolved.
    pub fn get(&self, path: &str) -> Option<&FeatureValue> {
        self.get_path(&split_path(path))
    }

    pub fn get_path(&self, path: &[&str]) -> Option<&FeatureValue> {
        let (last, init) = match path.split_last() {
            Some(x) => x,
            None => return None,
        };
        let mut cur = &self.root;
        for f in init {
            cur = self.resolve(cur.get(f)?).as_fs()?;
        }
        cur.get(last).map(|v| self.resolve(v))
    }

    pub fn get_atom(&self, path: &str) -> Option<&str> {
        self.get(path).and_then(FeatureValue::as_atom)
    }

    /// Tag under which the value at `path` is shared, if any.
    pub fn tag_at(&self, path: &str) -> Option<Tag> {
        let parts = split_path(path);
        let (last, init) = parts.split_last()?;
        let mut cur = &self.root;
        for f in init {
            cur = self.resolve(cur.get(f)?).as_fs()?;
        }
        let mut v = cur.get(last)?;
        let mut found = None;
        while let FeatureValue::TagRef(t) = v {
            found = Some(*t);
            v = self.tags.get(t)?;
        }
        found
    }

    /// True when both paths lead to the same shared value.
    pub fn shares(&self, p: &str, q: &str) -> bool {
        matches!((self.tag_at(p), self.tag_at(q)), (Some(a), Some(b)) if a == b)
    }

    /// The substructure at `path` as a self-contained structure.
    pub fn extract(&self, path: &str) -> Option<FeatureStructure> {
        let mut dag = Dag::new();
        let root = dag.import(self);
        let node = dag.follow(root, &split_path(path))?;
        dag.export(node)
    }

    /// Keeps only the named top-level features.
    pub fn project(&self, names: &[&str]) -> FeatureStructure {
        let mut root = self.root.clone();
        root.pairs.retain(|(n, _)| names.contains(&n.as_str()));
        FeatureStructure::from_parts(root, self.tags.clone()).expect("projection of a valid structure")
    }

    /// Copy with every matrix marked open.
    pub fn opened(&self) -> FeatureStructure {
        let tags = self
            .tags
            .iter()
            .map(|(t, v)| {
                let wrapped = Avm::new().with("v", v.clone()).opened();
                (*t, wrapped.pairs.into_iter().next().expect("one pair").1)
            })
            .collect();
        FeatureStructure { root: self.root.clone().opened(), tags }
    }

    /// Copy with features sorted by name at every level, for comparisons
    /// that ignore feature order.
    pub fn sorted(&self) -> FeatureStructure {
        fn sort_value(v: &mut FeatureValue) {
            match v {
                FeatureValue::Fs(a) => sort_avm(a),
                FeatureValue::List(xs) | FeatureValue::Set(xs) => xs.iter_mut().for_each(sort_value),
                _ => {}
            }
        }
        fn sort_avm(a: &mut Avm) {
            a.pairs.sort_by(|x, y| x.0.cmp(&y.0));
            a.pairs.iter_mut().for_each(|(_, v)| sort_value(v));
        }
        let mut root = self.root.clone();
        sort_avm(&mut root);
        let mut tags = self.tags.clone();
        tags.values_mut().for_each(sort_value);
        FeatureStructure::from_parts(root, tags).expect("sorting keeps validity")
    }

    /// Equality up to feature order.
    pub fn path_equal(&self, other: &FeatureStructure) -> bool {
        self.sorted() == other.sorted()
    }

    /// All `(path, value)` pairs ending in a non-structure value, with tags resolved.
    pub fn leaf_paths(&self) -> Vec<(Vec<String>, FeatureValue)> {
        let mut out = Vec::new();
        self.collect_leaves(&self.root, &mut Vec::new(), &mut out);
        out
    }

    fn collect_leaves(&self, a: &Avm, prefix: &mut Vec<String>, out: &mut Vec<(Vec<String>, FeatureValue)>) {
        for (n, v) in &a.pairs {
            prefix.push(n.clone());
            match self.resolve(v) {
                FeatureValue::Fs(inner) if !inner.is_empty() => self.collect_leaves(inner, prefix, out),
                other => out.push((prefix.clone(), other.clone())),
            }
            prefix.pop();
        }
    }

    /// Every feature name used anywhere in the structure.
    pub fn feature_names(&self) -> Vec<String> {
        fn walk(v: &FeatureValue, out: &mut Vec<String>) {
            match v {
                FeatureValue::Fs(a) => walk_avm(a, out),
                FeatureValue::List(xs) | FeatureValue::Set(xs) => xs.iter().for_each(|x| walk(x, out)),
                _ => {}
            }
        }
        fn walk_avm(a: &Avm, out: &mut Vec<String>) {
            for (n, v) in &a.pairs {
                out.push(n.clone());
                walk(v, out);
            }
        }
        let mut out = Vec::new();
        walk_avm(&self.root, &mut out);
        self.tags.values().for_each(|v| walk(v, &mut out));
        out.sort();
        out.dedup();
        out
    }
}

fn contains_tags(a: &Avm) -> bool {
    fn value(v: &FeatureValue) -> bool {
        match v {
            FeatureValue::TagRef(_) => true,
            FeatureValue::Fs(a) => contains_tags(a),
            FeatureValue::List(xs) | FeatureValue::Set(xs) => xs.iter().any(value),
            _ => false,
        }
    }
    a.pairs.iter().any(|(_, v)| value(v))
}

/// Most general structure carrying the information of both, or `None` when
/// they conflict. Shared values stay shared in the result.
pub fn unify(a: &FeatureStructure, b: &FeatureStructure) -> Option<FeatureStructure> {
    let mut dag = Dag::new();
    let x = dag.import(a);
    let y = dag.import(b);
    if !dag.unify(x, y) {
        return None;
    }
    dag.export(x)
}

/// Closed-world test: every path of `general` must exist in `specific` and
/// the values found there must unify. An empty matrix in `general` only
/// tests that the path is present.
pub fn subsumes(general: &FeatureStructure, specific: &FeatureStructure) -> bool {
    avm_subsumes(general, &general.root, specific, &specific.root)
}

fn avm_subsumes(g: &FeatureStructure, ga: &Avm, s: &FeatureStructure, sa: &Avm) -> bool {
    ga.pairs.iter().all(|(n, gv)| sa.get(n).is_some_and(|sv| value_subsumes(g, gv, s, sv)))
}

fn value_subsumes(g: &FeatureStructure, gv: &FeatureValue, s: &FeatureStructure, sv: &FeatureValue) -> bool {
    let (gv, sv) = (g.resolve(gv), s.resolve(sv));
    match (gv, sv) {
        (FeatureValue::Fs(ga), FeatureValue::Fs(sa)) => avm_subsumes(g, ga, s, sa),
        (FeatureValue::Fs(ga), _) => ga.is_empty(),
        (FeatureValue::List(xs), FeatureValue::List(ys)) => {
            xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| value_subsumes(g, x, s, y))
        }
        (FeatureValue::Set(_), FeatureValue::Set(_)) => same_value(g, gv, s, sv),
        _ => match (gv.leaf(), sv.leaf()) {
            (Some(x), Some(y)) => meet(&x, &y).is_some(),
            _ => false,
        },
    }
}

/// Structural equality across two tag tables, ignoring feature and set order.
fn same_value(g: &FeatureStructure, a: &FeatureValue, s: &FeatureStructure, b: &FeatureValue) -> bool {
    let wrap = |fs: &FeatureStructure, v: &FeatureValue| {
        FeatureStructure::from_parts(Avm::new().with("v", v.clone()), fs.tags.clone())
            .expect("wrapping keeps validity")
            .sorted()
    };
    let (x, y) = (wrap(g, a), wrap(s, b));
    if x == y {
        return true;
    }
    // Sets compare without regard to member order.
    match (x.get("v"), y.get("v")) {
        (Some(FeatureValue::Set(xs)), Some(FeatureValue::Set(ys))) if xs.len() == ys.len() => {
            let mut used = vec![false; ys.len()];
            xs.iter().all(|xm| {
                let hit = ys.iter().enumerate().position(|(i, ym)| !used[i] && same_value(&x, xm, &y, ym));
                hit.map(|i| used[i] = true).is_some()
            })
        }
        _ => false,
    }
}

/// Whether a structure meets a restriction. Uses the same rule as [`subsumes`].
pub fn check_constraint(fs: &FeatureStructure, constraint: &FeatureStructure) -> bool {
    subsumes(constraint, fs)
}

/// Applies a constraint value from a lexicon entry, which is either a single
/// structure or a set/list of alternatives, any of which may be met.
pub fn satisfies_any(fs: &FeatureStructure, owner: &FeatureStructure, constraints: &FeatureValue) -> bool {
    match owner.resolve(constraints) {
        FeatureValue::Set(xs) | FeatureValue::List(xs) => xs.iter().any(|c| satisfies_any(fs, owner, c)),
        FeatureValue::Fs(_) => owner
            .extract_value(constraints)
            .is_some_and(|c| check_constraint(fs, &c)),
        _ => false,
    }
}

impl FeatureStructure {
    fn extract_value(&self, v: &FeatureValue) -> Option<FeatureStructure> {
        match self.resolve(v) {
            FeatureValue::Fs(a) => FeatureStructure::from_parts(a.clone(), self.tags.clone()).ok(),
            _ => None,
        }
    }
}
