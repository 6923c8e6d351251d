//! Graph form of feature structures. Shared substructures are single nodes,
//! so unification can be done destructively with forwarding pointers.

use std::collections::HashMap;

use super::value::{meet, Avm, FeatureValue, Leaf, Tag, TagTable};
use super::FeatureStructure;

pub type NodeId = usize;

#[derive(Clone, Debug)]
enum Node {
    Leaf(Leaf),
    Complex { pairs: Vec<(String, NodeId)>, open: bool },
    List(Vec<NodeId>),
    Set(Vec<NodeId>),
    Fwd(NodeId),
}

/// Mutable working graph. After a failed [`Dag::unify`] its contents are
/// unspecified and it should be discarded.
#[derive(Clone, Debug, Default)]
pub struct Dag {
    nodes: Vec<Node>,
}

impl Dag {
    pub fn new() -> Self {
        Dag::default()
    }

    fn push(&mut self, n: Node) -> NodeId {
        self.nodes.push(n);
        self.nodes.len() - 1
    }

    pub fn find(&self, mut n: NodeId) -> NodeId {
        while let Node::Fwd(next) = self.nodes[n] {
            n = next;
        }
        n
    }

    /// Adds a structure to the graph, returning its root node. Tags become
    /// shared nodes.
    pub fn import(&mut self, fs: &FeatureStructure) -> NodeId {
        let mut memo = HashMap::new();
        self.import_avm(&fs.root, &fs.tags, &mut memo)
    }

    fn import_avm(&mut self, a: &Avm, tags: &TagTable, memo: &mut HashMap<Tag, NodeId>) -> NodeId {
        let pairs = a
            .pairs
            .iter()
            .map(|(n, v)| (n.clone(), self.import_value(v, tags, memo)))
            .collect();
        self.push(Node::Complex { pairs, open: a.open })
    }

    fn import_value(&mut self, v: &FeatureValue, tags: &TagTable, memo: &mut HashMap<Tag, NodeId>) -> NodeId {
        match v {
            FeatureValue::TagRef(t) => {
                if let Some(&id) = memo.get(t) {
                    return id;
                }
                // Tables are validated acyclic before they reach the graph.
                let id = match tags.get(t) {
                    Some(target) => self.import_value(target, tags, memo),
                    None => self.push(Node::Leaf(Leaf::Atom("none".into()))),
                };
                memo.insert(*t, id);
                id
            }
            FeatureValue::Fs(a) => self.import_avm(a, tags, memo),
            FeatureValue::List(xs) => {
                let ids = xs.iter().map(|x| self.import_value(x, tags, memo)).collect();
                self.push(Node::List(ids))
            }
            FeatureValue::Set(xs) => {
                let ids = xs.iter().map(|x| self.import_value(x, tags, memo)).collect();
                self.push(Node::Set(ids))
            }
            leaf => {
                let l = leaf.leaf().expect("remaining variants are atomic");
                self.push(Node::Leaf(l))
            }
        }
    }

    pub fn leaf(&mut self, v: &FeatureValue) -> Option<NodeId> {
        v.leaf().map(|l| self.push(Node::Leaf(l)))
    }

    pub fn empty(&mut self, open: bool) -> NodeId {
        self.push(Node::Complex { pairs: Vec::new(), open })
    }

    pub fn is_complex(&self, n: NodeId) -> bool {
        matches!(self.nodes[self.find(n)], Node::Complex { .. })
    }

    pub fn child(&self, n: NodeId, name: &str) -> Option<NodeId> {
        match &self.nodes[self.find(n)] {
            Node::Complex { pairs, .. } => pairs.iter().find(|(f, _)| f == name).map(|&(_, c)| self.find(c)),
            _ => None,
        }
    }

    pub fn follow(&self, n: NodeId, path: &[&str]) -> Option<NodeId> {
        path.iter().try_fold(self.find(n), |cur, f| self.child(cur, f))
    }

    /// Points feature `name` of a complex node at `child`, replacing any
    /// previous value. Returns false when `n` is not complex.
    pub fn set_child(&mut self, n: NodeId, name: &str, child: NodeId) -> bool {
        let n = self.find(n);
        match &mut self.nodes[n] {
            Node::Complex { pairs, .. } => {
                match pairs.iter_mut().find(|(f, _)| f == name) {
                    Some(slot) => slot.1 = child,
                    None => pairs.push((name.to_string(), child)),
                }
                true
            }
            _ => false,
        }
    }

    /// Leaf value stored at a node, if it is atomic.
    pub fn leaf_value(&self, n: NodeId) -> Option<FeatureValue> {
        match &self.nodes[self.find(n)] {
            Node::Leaf(l) => Some(l.clone().into_value()),
            _ => None,
        }
    }

    pub fn unify(&mut self, a: NodeId, b: NodeId) -> bool {
        let mut work = vec![(a, b)];
        while let Some((x, y)) = work.pop() {
            let (x, y) = (self.find(x), self.find(y));
            if x == y {
                continue;
            }
            match (self.nodes[x].clone(), self.nodes[y].clone()) {
                (Node::Leaf(l), Node::Leaf(m)) => match meet(&l, &m) {
                    Some(r) => {
                        self.nodes[x] = Node::Leaf(r);
                        self.nodes[y] = Node::Fwd(x);
                    }
                    None => return false,
                },
                (Node::Complex { pairs: xp, open: xo }, Node::Complex { pairs: yp, open: yo }) => {
                    let extra_y = yp.iter().any(|(f, _)| !xp.iter().any(|(g, _)| g == f));
                    let extra_x = xp.iter().any(|(f, _)| !yp.iter().any(|(g, _)| g == f));
                    if (extra_y && !xo) || (extra_x && !yo) {
                        return false;
                    }
                    let mut merged = xp.clone();
                    for (f, yv) in yp {
                        match xp.iter().find(|(g, _)| *g == f) {
                            Some(&(_, xv)) => work.push((xv, yv)),
                            None => merged.push((f, yv)),
                        }
                    }
                    self.nodes[x] = Node::Complex { pairs: merged, open: xo && yo };
                    self.nodes[y] = Node::Fwd(x);
                }
                (Node::List(xs), Node::List(ys)) => {
                    if xs.len() != ys.len() {
                        return false;
                    }
                    self.nodes[y] = Node::Fwd(x);
                    work.extend(xs.into_iter().zip(ys));
                }
                (Node::Set(_), Node::Set(_)) => {
                    if !self.structural_eq(x, y) {
                        return false;
                    }
                    self.nodes[y] = Node::Fwd(x);
                }
                _ => return false,
            }
        }
        true
    }

    /// Equality ignoring sharing, feature order and set member order.
    fn structural_eq(&self, a: NodeId, b: NodeId) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return true;
        }
        match (&self.nodes[a], &self.nodes[b]) {
            (Node::Leaf(l), Node::Leaf(m)) => l == m,
            (Node::Complex { pairs: p, open: o }, Node::Complex { pairs: q, open: r }) => {
                o == r
                    && p.len() == q.len()
                    && p.iter().all(|(f, x)| q.iter().any(|(g, y)| f == g && self.structural_eq(*x, *y)))
            }
            (Node::List(xs), Node::List(ys)) => {
                xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| self.structural_eq(*x, *y))
            }
            (Node::Set(xs), Node::Set(ys)) => {
                if xs.len() != ys.len() {
                    return false;
                }
                let mut used = vec![false; ys.len()];
                xs.iter().all(|x| {
                    let hit = ys
                        .iter()
                        .enumerate()
                        .find(|(i, y)| !used[*i] && self.structural_eq(*x, **y))
                        .map(|(i, _)| i);
                    hit.map(|i| used[i] = true).is_some()
                })
            }
            _ => false,
        }
    }

    fn children(&self, n: NodeId) -> Vec<NodeId> {
        match &self.nodes[n] {
            Node::Complex { pairs, .. } => pairs.iter().map(|&(_, c)| self.find(c)).collect(),
            Node::List(xs) | Node::Set(xs) => xs.iter().map(|&c| self.find(c)).collect(),
            _ => Vec::new(),
        }
    }

    /// Reads a complex node back into tree form. Nodes reached along more
    /// than one path get tags numbered in pre-order. Returns `None` for
    /// non-complex roots and cyclic graphs.
    pub fn export(&self, root: NodeId) -> Option<FeatureStructure> {
        let root = self.find(root);
        let mut counts: HashMap<NodeId, u32> = HashMap::new();
        let mut done: HashMap<NodeId, bool> = HashMap::new();
        if !self.count_refs(root, &mut counts, &mut done) {
            return None;
        }
        let mut ex = Exporter { dag: self, counts, assigned: HashMap::new(), tags: TagTable::new() };
        match ex.inner(root) {
            FeatureValue::Fs(avm) => Some(FeatureStructure { root: avm, tags: ex.tags }),
            _ => None,
        }
    }

    fn count_refs(&self, n: NodeId, counts: &mut HashMap<NodeId, u32>, done: &mut HashMap<NodeId, bool>) -> bool {
        done.insert(n, false);
        for c in self.children(n) {
            *counts.entry(c).or_insert(0) += 1;
            match done.get(&c) {
                Some(false) => return false,
                Some(true) => {}
                None => {
                    if !self.count_refs(c, counts, done) {
                        return false;
                    }
                }
            }
        }
        done.insert(n, true);
        true
    }
}

struct Exporter<'a> {
    dag: &'a Dag,
    counts: HashMap<NodeId, u32>,
    assigned: HashMap<NodeId, Tag>,
    tags: TagTable,
}

impl Exporter<'_> {
    fn value(&mut self, n: NodeId) -> FeatureValue {
        let n = self.dag.find(n);
        if self.counts.get(&n).copied().unwrap_or(0) <= 1 {
            return self.inner(n);
        }
        if let Some(&t) = self.assigned.get(&n) {
            return FeatureValue::TagRef(t);
        }
        let t = self.assigned.len() as Tag + 1;
        self.assigned.insert(n, t);
        let v = self.inner(n);
        self.tags.insert(t, v);
        FeatureValue::TagRef(t)
    }

    fn inner(&mut self, n: NodeId) -> FeatureValue {
        match &self.dag.nodes[n] {
            Node::Leaf(l) => l.clone().into_value(),
            Node::Complex { pairs, open } => {
                let pairs = pairs.iter().map(|(f, c)| (f.clone(), self.value(*c))).collect();
                FeatureValue::Fs(Avm { pairs, open: *open })
            }
            Node::List(xs) => FeatureValue::List(xs.iter().map(|&c| self.value(c)).collect()),
            Node::Set(xs) => FeatureValue::Set(xs.iter().map(|&c| self.value(c)).collect()),
            Node::Fwd(_) => unreachable!("export follows forwarding"),
        }
    }
}
