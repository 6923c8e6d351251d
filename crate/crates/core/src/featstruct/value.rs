use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type Tag = u32;

/// Lexical concept of a word. Derived concepts wrap the concept of their stem.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Concept {
    Base { root: String, gloss: String },
    Derived { suffix: String, inner: Box<Concept> },
}

impl Concept {
    pub fn base(root: impl Into<String>, gloss: impl Into<String>) -> Self {
        Concept::Base { root: root.into(), gloss: gloss.into() }
    }

    pub fn derived(suffix: impl Into<String>, inner: Concept) -> Self {
        Concept::Derived { suffix: suffix.into(), inner: Box::new(inner) }
    }

    /// Number of derivations wrapped around the base concept.
    pub fn depth(&self) -> usize {
        match self {
            Concept::Base { .. } => 0,
            Concept::Derived { inner, .. } => 1 + inner.depth(),
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Concept::Base { root, gloss } => write!(f, "{root}-({gloss})"),
            Concept::Derived { suffix, inner } if suffix == "none" => write!(f, "none({inner})"),
            Concept::Derived { suffix, inner } => write!(f, "f_{suffix}({inner})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeatureValue {
    Atom(String),
    /// Disjunction of atoms; always holds at least two members.
    AtomSet(BTreeSet<String>),
    /// Any atom except the listed ones; never empty.
    Negated(BTreeSet<String>),
    Concept(Concept),
    Fs(Avm),
    /// Ordered sequence, used for subcategorization frames.
    List(Vec<FeatureValue>),
    /// Unordered collection of structures, used for constraint sets.
    Set(Vec<FeatureValue>),
    TagRef(Tag),
}

impl FeatureValue {
    pub fn atom(s: impl Into<String>) -> Self {
        FeatureValue::Atom(s.into())
    }

    /// Builds a set value, collapsing to an atom when only one member remains.
    /// Returns `None` for an empty member list.
    pub fn atom_set<I, S>(members: I) -> Option<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let set: BTreeSet<String> = members.into_iter().map(Into::into).collect();
        match set.len() {
            0 => None,
            1 => set.into_iter().next().map(FeatureValue::Atom),
            _ => Some(FeatureValue::AtomSet(set)),
        }
    }

    pub fn negated(s: impl Into<String>) -> Self {
        FeatureValue::Negated(BTreeSet::from([s.into()]))
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            FeatureValue::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_fs(&self) -> Option<&Avm> {
        match self {
            FeatureValue::Fs(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_concept(&self) -> Option<&Concept> {
        match self {
            FeatureValue::Concept(c) => Some(c),
            _ => None,
        }
    }

    pub(crate) fn leaf(&self) -> Option<Leaf> {
        Some(match self {
            FeatureValue::Atom(a) => Leaf::Atom(a.clone()),
            FeatureValue::AtomSet(s) => Leaf::Set(s.clone()),
            FeatureValue::Negated(s) => Leaf::Not(s.clone()),
            FeatureValue::Concept(c) => Leaf::Concept(c.clone()),
            _ => return None,
        })
    }
}

/// Attribute-value matrix: ordered feature/value pairs plus an openness flag.
/// Open matrices may gain features through unification; closed ones may not.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Avm {
    pub(crate) pairs: Vec<(String, FeatureValue)>,
    pub(crate) open: bool,
}

impl Avm {
    pub fn new() -> Self {
        Avm::default()
    }

    pub fn open() -> Self {
        Avm { pairs: Vec::new(), open: true }
    }

    pub fn is_open(&self) -> bool {
        self.open
    }

    pub fn set_open(&mut self, open: bool) {
        self.open = open;
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&FeatureValue> {
        self.pairs.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut FeatureValue> {
        self.pairs.iter_mut().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    /// Replaces the value of `name` in place, or appends it.
    pub fn set(&mut self, name: impl Into<String>, value: FeatureValue) {
        let name = name.into();
        match self.get_mut(&name) {
            Some(slot) => *slot = value,
            None => self.pairs.push((name, value)),
        }
    }

    pub fn with(mut self, name: impl Into<String>, value: FeatureValue) -> Self {
        self.set(name, value);
        self
    }

    pub fn remove(&mut self, name: &str) -> Option<FeatureValue> {
        let i = self.pairs.iter().position(|(n, _)| n == name)?;
        Some(self.pairs.remove(i).1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &FeatureValue)> {
        self.pairs.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.pairs.iter().map(|(n, _)| n.as_str())
    }

    /// Marks this matrix and every nested one as open.
    pub fn opened(mut self) -> Self {
        fn walk(v: &mut FeatureValue) {
            match v {
                FeatureValue::Fs(a) => open_all(a),
                FeatureValue::List(xs) | FeatureValue::Set(xs) => xs.iter_mut().for_each(walk),
                _ => {}
            }
        }
        fn open_all(a: &mut Avm) {
            a.open = true;
            a.pairs.iter_mut().for_each(|(_, v)| walk(v));
        }
        open_all(&mut self);
        self
    }
}

impl FromIterator<(String, FeatureValue)> for Avm {
    fn from_iter<T: IntoIterator<Item = (String, FeatureValue)>>(iter: T) -> Self {
        let mut a = Avm::new();
        for (n, v) in iter {
            a.set(n, v);
        }
        a
    }
}

/// Atomic values as seen by unification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Leaf {
    Atom(String),
    Set(BTreeSet<String>),
    Not(BTreeSet<String>),
    Concept(Concept),
}

impl Leaf {
    fn from_members(mut s: BTreeSet<String>) -> Option<Leaf> {
        match s.len() {
            0 => None,
            1 => s.pop_first().map(Leaf::Atom),
            _ => Some(Leaf::Set(s)),
        }
    }

    pub(crate) fn into_value(self) -> FeatureValue {
        match self {
            Leaf::Atom(a) => FeatureValue::Atom(a),
            Leaf::Set(s) => FeatureValue::AtomSet(s),
            Leaf::Not(s) => FeatureValue::Negated(s),
            Leaf::Concept(c) => FeatureValue::Concept(c),
        }
    }
}

/// Greatest lower bound of two atomic values, `None` when they are incompatible.
pub(crate) fn meet(a: &Leaf, b: &Leaf) -> Option<Leaf> {
    use Leaf::*;
    match (a, b) {
        (Atom(x), Atom(y)) => (x == y).then(|| a.clone()),
        (Atom(x), Set(s)) | (Set(s), Atom(x)) => s.contains(x).then(|| Atom(x.clone())),
        (Atom(x), Not(n)) | (Not(n), Atom(x)) => (!n.contains(x)).then(|| Atom(x.clone())),
        (Set(s), Set(t)) => Leaf::from_members(s.intersection(t).cloned().collect()),
        (Set(s), Not(n)) | (Not(n), Set(s)) => Leaf::from_members(s.difference(n).cloned().collect()),
        (Not(n), Not(m)) => Some(Not(n.union(m).cloned().collect())),
        (Concept(x), Concept(y)) => (x == y).then(|| a.clone()),
        _ => None,
    }
}

pub(crate) type TagTable = BTreeMap<Tag, FeatureValue>;

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn concept_display() {
        let c = Concept::derived("ca", Concept::derived("lI", Concept::base("akIl", "intelligence")));
        assert_eq!(c.to_string(), "f_ca(f_lI(akIl-(intelligence)))");
        assert_eq!(Concept::derived("none", Concept::base("at", "horse")).to_string(), "none(at-(horse))");
        assert_eq!(c.depth(), 2);
    }

    #[test]
    fn set_intersection_collapses() {
        let r = meet(&Leaf::Set(set(&["a", "b"])), &Leaf::Set(set(&["b", "c"])));
        assert_eq!(r, Some(Leaf::Atom("b".into())));
        assert_eq!(meet(&Leaf::Set(set(&["a", "b"])), &Leaf::Set(set(&["c", "d"]))), None);
    }

    #[test]
    fn negation_rules() {
        let not_a = Leaf::Not(set(&["a"]));
        assert_eq!(meet(&Leaf::Atom("a".into()), &not_a), None);
        assert_eq!(meet(&Leaf::Atom("b".into()), &not_a), Some(Leaf::Atom("b".into())));
        assert_eq!(meet(&not_a, &Leaf::Not(set(&["b"]))), Some(Leaf::Not(set(&["a", "b"]))));
        assert_eq!(meet(&not_a, &Leaf::Set(set(&["a", "c"]))), Some(Leaf::Atom("c".into())));
    }

    #[test]
    fn avm_set_replaces_in_place() {
        let mut a = Avm::new().with("x", FeatureValue::atom("1")).with("y", FeatureValue::atom("2"));
        a.set("x", FeatureValue::atom("3"));
        assert_eq!(a.names().collect::<Vec<_>>(), ["x", "y"]);
        assert_eq!(a.get("x"), Some(&FeatureValue::atom("3")));
    }
}
