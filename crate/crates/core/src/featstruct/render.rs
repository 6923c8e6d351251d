use std::collections::HashSet;
use std::fmt::Write;

use super::parse::is_bare_char;
use super::value::{Avm, FeatureValue, Tag};
use super::FeatureStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    /// Single line; parses back to an equal structure.
    #[default]
    Compact,
    /// One feature per line, nested values aligned under their opening bracket.
    Indented,
}

#[derive(Clone, Copy, Debug)]
pub struct Renderer {
    pub style: Style,
    /// Print the `|_` marker on open structures.
    pub show_open: bool,
}

impl Default for Renderer {
    fn default() -> Self {
        Renderer { style: Style::Compact, show_open: true }
    }
}

pub fn render_fs(fs: &FeatureStructure, style: Style) -> String {
    Renderer { style, show_open: true }.render(fs)
}

pub(crate) fn render_atom(a: &str) -> String {
    if !a.is_empty() && a.chars().all(is_bare_char) {
        a.to_string()
    } else {
        let mut s = String::from("'");
        for c in a.chars() {
            if c == '\'' || c == '\\' {
                s.push('\\');
            }
            s.push(c);
        }
        s.push('\'');
        s
    }
}

fn render_atoms<'a>(xs: impl Iterator<Item = &'a String>) -> String {
    let inner: Vec<String> = xs.map(|x| render_atom(x)).collect();
    format!("{{{}}}", inner.join(","))
}

impl Renderer {
    pub fn render(&self, fs: &FeatureStructure) -> String {
        let mut ctx = Ctx { fs, seen: HashSet::new(), r: *self };
        let mut out = String::new();
        match self.style {
            Style::Compact => ctx.compact_avm(&fs.root, &mut out),
            Style::Indented => ctx.indented_avm(&fs.root, 0, &mut out),
        }
        out
    }
}

struct Ctx<'a> {
    fs: &'a FeatureStructure,
    seen: HashSet<Tag>,
    r: Renderer,
}

fn is_leafy(v: &FeatureValue) -> bool {
    !matches!(v, FeatureValue::Fs(_) | FeatureValue::List(_) | FeatureValue::Set(_) | FeatureValue::TagRef(_))
}

impl<'a> Ctx<'a> {
    fn leaf(&self, v: &FeatureValue, out: &mut String) {
        match v {
            FeatureValue::Atom(a) => out.push_str(&render_atom(a)),
            FeatureValue::AtomSet(s) => out.push_str(&render_atoms(s.iter())),
            FeatureValue::Negated(s) if s.len() == 1 => {
                out.push('!');
                out.push_str(&render_atom(s.first().expect("len 1")));
            }
            FeatureValue::Negated(s) => {
                out.push('!');
                out.push_str(&render_atoms(s.iter()));
            }
            FeatureValue::Concept(c) => {
                let _ = write!(out, "{c}");
            }
            _ => unreachable!("not a leaf"),
        }
    }

    /// Writes `@n=` for a first occurrence and returns the value to print,
    /// or writes `@n` and returns `None` for later occurrences.
    fn tag(&mut self, t: Tag, out: &mut String) -> Option<&'a FeatureValue> {
        if self.seen.insert(t) {
            let _ = write!(out, "@{t}=");
            let fs: &'a FeatureStructure = self.fs;
            fs.tags.get(&t)
        } else {
            let _ = write!(out, "@{t}");
            None
        }
    }

    fn compact(&mut self, v: &FeatureValue, out: &mut String) {
        match v {
            FeatureValue::TagRef(t) => {
                if let Some(target) = self.tag(*t, out) {
                    self.compact(target, out);
                }
            }
            FeatureValue::Fs(a) => self.compact_avm(a, out),
            FeatureValue::List(xs) => self.compact_seq('<', '>', xs, out),
            FeatureValue::Set(xs) => self.compact_seq('{', '}', xs, out),
            leaf => self.leaf(leaf, out),
        }
    }

    fn compact_seq(&mut self, open: char, close: char, xs: &[FeatureValue], out: &mut String) {
        out.push(open);
        for (i, x) in xs.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            self.compact(x, out);
        }
        out.push(close);
    }

    fn compact_avm(&mut self, a: &Avm, out: &mut String) {
        out.push('[');
        for (i, (n, v)) in a.pairs.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(n);
            out.push(':');
            self.compact(v, out);
        }
        if a.open && self.r.show_open {
            out.push_str("|_");
        }
        out.push(']');
    }

    fn indented(&mut self, v: &FeatureValue, col: usize, out: &mut String) {
        match v {
            FeatureValue::TagRef(t) => {
                let before = out.len();
                if let Some(target) = self.tag(*t, out) {
                    let width = out.len() - before;
                    self.indented(target, col + width, out);
                }
            }
            FeatureValue::Fs(a) => self.indented_avm(a, col, out),
            FeatureValue::List(xs) => self.indented_seq('<', '>', xs, col, out),
            FeatureValue::Set(xs) => self.indented_seq('{', '}', xs, col, out),
            leaf => self.leaf(leaf, out),
        }
    }

    fn indented_seq(&mut self, open: char, close: char, xs: &[FeatureValue], col: usize, out: &mut String) {
        if xs.iter().all(is_leafy) {
            return self.compact_seq(open, close, xs, out);
        }
        out.push(open);
        for (i, x) in xs.iter().enumerate() {
            if i > 0 {
                out.push('\n');
                out.push_str(&" ".repeat(col + 1));
            }
            self.indented(x, col + 1, out);
        }
        out.push(close);
    }

    fn indented_avm(&mut self, a: &Avm, col: usize, out: &mut String) {
        out.push('[');
        for (i, (n, v)) in a.pairs.iter().enumerate() {
            if i > 0 {
                out.push('\n');
                out.push_str(&" ".repeat(col + 1));
            }
            out.push_str(n);
            out.push_str(": ");
            self.indented(v, col + 1 + n.chars().count() + 2, out);
        }
        if a.open && self.r.show_open {
            out.push_str("|_");
        }
        out.push(']');
    }
}
