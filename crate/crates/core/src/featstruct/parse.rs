use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::value::{Avm, Concept, FeatureValue, Tag, TagTable};
use super::{FeatureStructure, FsError};

pub(crate) fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '-' || c == '_'
}

pub(crate) fn is_bare_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '-' | '_' | '+' | '.')
}

pub fn parse_fs(text: &str) -> Result<FeatureStructure, FsError> {
    let mut p = Parser { src: text, pos: 0, tags: BTreeMap::new(), defining: Vec::new() };
    p.ws();
    let root = p.avm()?;
    p.ws();
    // A Prolog-style full stop after a query is tolerated.
    if p.peek() == Some('.') {
        p.bump();
        p.ws();
    }
    if p.pos != text.len() {
        return Err(p.err("trailing input after structure"));
    }
    FeatureStructure::from_parts(root, p.tags)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    tags: TagTable,
    defining: Vec<Tag>,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> FsError {
        FsError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expect(&mut self, c: char) -> Result<(), FsError> {
        self.ws();
        match self.peek() {
            Some(d) if d == c => {
                self.bump();
                Ok(())
            }
            Some(d) => Err(self.err(format!("expected '{c}', found '{d}'"))),
            None => Err(self.err(format!("expected '{c}', found end of input"))),
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn avm(&mut self) -> Result<Avm, FsError> {
        self.expect('[')?;
        let mut avm = Avm::new();
        loop {
            self.ws();
            match self.peek() {
                Some(']') => {
                    self.bump();
                    return Ok(avm);
                }
                Some('|') => {
                    self.bump();
                    if self.bump() != Some('_') {
                        return Err(self.err("expected '_' after '|'"));
                    }
                    avm.open = true;
                    self.expect(']')?;
                    return Ok(avm);
                }
                Some(',') if !avm.is_empty() => {
                    self.bump();
                }
                Some(_) => {
                    let at = self.pos;
                    let name = self.take_while(is_name_char).to_string();
                    if name.is_empty() {
                        return Err(self.err("expected feature name"));
                    }
                    self.expect(':')?;
                    let v = self.value()?;
                    if avm.contains(&name) {
                        return Err(FsError::DuplicateFeature { pos: at, name });
                    }
                    avm.pairs.push((name, v));
                }
                None => return Err(self.err("unterminated structure")),
            }
        }
    }

    fn value(&mut self) -> Result<FeatureValue, FsError> {
        self.ws();
        match self.peek() {
            Some('[') => Ok(FeatureValue::Fs(self.avm()?)),
            Some('@') => self.tag(),
            Some('{') => self.braces(),
            Some('<') => {
                self.bump();
                let xs = self.seq('>')?;
                Ok(FeatureValue::List(xs))
            }
            Some('!') => {
                self.bump();
                self.ws();
                if self.peek() == Some('{') {
                    match self.braces()? {
                        FeatureValue::Atom(a) => Ok(FeatureValue::negated(a)),
                        FeatureValue::AtomSet(s) => Ok(FeatureValue::Negated(s)),
                        _ => Err(self.err("negation applies to atoms only")),
                    }
                } else {
                    Ok(FeatureValue::negated(self.atom()?))
                }
            }
            Some('\'') => Ok(FeatureValue::Atom(self.quoted()?)),
            Some(_) => self.bare_or_concept(),
            None => Err(self.err("expected value, found end of input")),
        }
    }

    fn tag(&mut self) -> Result<FeatureValue, FsError> {
        self.bump();
        let digits = self.take_while(|c| c.is_ascii_digit());
        let t: Tag = digits.parse().map_err(|_| self.err("expected tag number after '@'"))?;
        self.ws();
        if self.peek() == Some('=') {
            self.bump();
            if self.tags.contains_key(&t) || self.defining.contains(&t) {
                return Err(self.err(format!("tag @{t} defined twice")));
            }
            self.defining.push(t);
            let v = self.value()?;
            self.defining.pop();
            if matches!(v, FeatureValue::TagRef(_)) {
                return Err(self.err("a tag cannot be defined as another tag"));
            }
            self.tags.insert(t, v);
        } else if self.defining.contains(&t) {
            return Err(FsError::CyclicTag(t));
        }
        Ok(FeatureValue::TagRef(t))
    }

    fn braces(&mut self) -> Result<FeatureValue, FsError> {
        self.bump();
        let at = self.pos;
        let xs = self.seq('}')?;
        if xs.is_empty() {
            return Err(FsError::Syntax { pos: at, msg: "empty set".into() });
        }
        if xs.iter().all(|x| matches!(x, FeatureValue::Atom(_))) {
            let atoms = xs.into_iter().filter_map(|x| match x {
                FeatureValue::Atom(a) => Some(a),
                _ => None,
            });
            return Ok(FeatureValue::atom_set(atoms).expect("non-empty"));
        }
        if xs.iter().any(|x| matches!(x, FeatureValue::Atom(_))) {
            return Err(FsError::Syntax { pos: at, msg: "set mixes atoms and structures".into() });
        }
        Ok(FeatureValue::Set(xs))
    }

    fn seq(&mut self, close: char) -> Result<Vec<FeatureValue>, FsError> {
        let mut xs = Vec::new();
        loop {
            self.ws();
            match self.peek() {
                Some(c) if c == close => {
                    self.bump();
                    return Ok(xs);
                }
                Some(',') if !xs.is_empty() => {
                    self.bump();
                }
                Some(_) => xs.push(self.value()?),
                None => return Err(self.err(format!("expected '{close}'"))),
            }
        }
    }

    fn quoted(&mut self) -> Result<String, FsError> {
        self.bump();
        let mut s = String::new();
        loop {
            match self.bump() {
                Some('\'') => return Ok(s),
                Some('\\') => match self.bump() {
                    Some(c) => s.push(c),
                    None => return Err(self.err("unterminated quoted atom")),
                },
                Some(c) => s.push(c),
                None => return Err(self.err("unterminated quoted atom")),
            }
        }
    }

    fn atom(&mut self) -> Result<String, FsError> {
        if self.peek() == Some('\'') {
            return self.quoted();
        }
        let a = self.take_while(is_bare_char);
        if a.is_empty() {
            return Err(self.err("expected atom"));
        }
        Ok(a.to_string())
    }

    fn bare_or_concept(&mut self) -> Result<FeatureValue, FsError> {
        let start = self.pos;
        let tok = self.take_while(is_bare_char).to_string();
        if tok.is_empty() {
            return Err(self.err(format!("unexpected '{}'", self.peek().unwrap_or(' '))));
        }
        if self.peek() != Some('(') {
            return Ok(FeatureValue::Atom(tok));
        }
        self.pos = start;
        Ok(FeatureValue::Concept(self.concept()?))
    }

    fn concept(&mut self) -> Result<Concept, FsError> {
        let tok = self.take_while(is_bare_char).to_string();
        self.expect('(')?;
        if let Some(root) = tok.strip_suffix('-').filter(|r| !r.is_empty()) {
            let gloss = self.take_while(|c| c != ')' && c != '(').to_string();
            self.expect(')')?;
            return Ok(Concept::base(root, gloss));
        }
        let suffix = match tok.as_str() {
            "none" => "none",
            t => t.strip_prefix("f_").filter(|s| !s.is_empty()).ok_or_else(|| {
                self.err(format!("'{t}(' is neither a base concept 'root-(' nor a derived 'f_suffix('"))
            })?,
        }
        .to_string();
        self.ws();
        let inner = self.concept()?;
        self.expect(')')?;
        Ok(Concept::derived(suffix, inner))
    }
}

/// Every reference must resolve and the definitions must not form a cycle.
pub(crate) fn check_tags(root: &Avm, tags: &TagTable) -> Result<(), FsError> {
    fn refs(v: &FeatureValue, out: &mut BTreeSet<Tag>) {
        match v {
            FeatureValue::TagRef(t) => {
                out.insert(*t);
            }
            FeatureValue::Fs(a) => a.pairs.iter().for_each(|(_, x)| refs(x, out)),
            FeatureValue::List(xs) | FeatureValue::Set(xs) => xs.iter().for_each(|x| refs(x, out)),
            _ => {}
        }
    }
    let mut all = BTreeSet::new();
    root.pairs.iter().for_each(|(_, v)| refs(v, &mut all));
    let mut graph = BTreeMap::new();
    for (t, v) in tags {
        let mut out = BTreeSet::new();
        refs(v, &mut out);
        all.extend(out.iter().copied());
        graph.insert(*t, out);
    }
    if let Some(t) = all.iter().find(|t| !tags.contains_key(t)) {
        return Err(FsError::UnresolvedTag(*t));
    }
    fn visit(t: Tag, g: &BTreeMap<Tag, BTreeSet<Tag>>, stack: &mut Vec<Tag>, done: &mut HashSet<Tag>) -> Result<(), FsError> {
        if stack.contains(&t) {
            return Err(FsError::CyclicTag(t));
        }
        if !done.insert(t) {
            return Ok(());
        }
        stack.push(t);
        for &u in &g[&t] {
            visit(u, g, stack, done)?;
        }
        stack.pop();
        Ok(())
    }
    let mut done = HashSet::new();
    for &t in graph.keys() {
        visit(t, &graph, &mut Vec::new(), &mut done)?;
    }
    Ok(())
}
