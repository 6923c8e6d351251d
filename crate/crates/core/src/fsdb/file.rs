//! Text format of the database.
//!
//! ```text
//! # comments directly above an item stay attached to it
//! entry <maj,min,sub,ssub,sssub> <root> :=
//!   [feature structure, continuation lines indented]
//! template <maj,min,sub,ssub,sssub> :=
//!   [...]
//! defaults <category prefix> :=
//!   [...]
//! features <name> <name> ...
//! ```

use std::collections::HashMap;

use crate::catmap::Cat5;
use crate::featstruct::{parse_fs, FeatureStructure, Renderer, Style};

use super::{Database, DbError, DefaultsEntry, Item, LexiconEntry, TemplateEntry};

struct Block {
    line: usize,
    keyword: String,
    text: String,
    comments: Vec<String>,
}

fn split_blocks(text: &str) -> Result<(Vec<String>, Vec<Block>, Vec<String>), DbError> {
    let mut header = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut pending = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        if line.trim().is_empty() {
            if blocks.is_empty() {
                header.append(&mut pending);
            }
            continue;
        }
        if line.starts_with('#') {
            pending.push(line.to_string());
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            match blocks.last_mut() {
                Some(b) if pending.is_empty() => {
                    b.text.push('\n');
                    b.text.push_str(line);
                }
                _ => return Err(DbError::Syntax { line: n, msg: "continuation line outside an item".into() }),
            }
            continue;
        }
        let (keyword, rest) = line.split_once(' ').unwrap_or((line, ""));
        if !matches!(keyword, "entry" | "template" | "defaults" | "features") {
            return Err(DbError::Syntax { line: n, msg: format!("unknown item '{keyword}'") });
        }
        blocks.push(Block { line: n, keyword: keyword.to_string(), text: rest.to_string(), comments: std::mem::take(&mut pending) });
    }
    Ok((header, blocks, pending))
}

fn head_and_fs(b: &Block) -> Result<(Vec<&str>, FeatureStructure), DbError> {
    let (head, body) = b
        .text
        .split_once(":=")
        .ok_or_else(|| DbError::Syntax { line: b.line, msg: "expected ':='".into() })?;
    let fs = parse_fs(body).map_err(|source| DbError::Fs { line: b.line, source })?;
    Ok((head.split_whitespace().collect(), fs))
}

fn parse_cat(line: usize, s: &str) -> Result<Cat5, DbError> {
    s.parse().map_err(|msg| DbError::Syntax { line, msg })
}

pub(super) fn parse(text: &str) -> Result<Database, DbError> {
    let (header, blocks, footer) = split_blocks(text)?;
    let mut db = Database { header, footer, ..Database::default() };

    // Defaults apply to every entry wherever they appear, so read them first.
    let mut defaults = HashMap::new();
    for (i, b) in blocks.iter().enumerate().filter(|(_, b)| b.keyword == "defaults") {
        let (head, fs) = head_and_fs(b)?;
        let [pattern] = head.as_slice() else {
            return Err(DbError::Syntax { line: b.line, msg: "expected 'defaults <category> :='".into() });
        };
        let mut d = DefaultsEntry::new(parse_cat(b.line, pattern)?, fs)?;
        d.comments = b.comments.clone();
        defaults.insert(i, d);
    }
    let all_defaults: Vec<DefaultsEntry> = {
        let mut ids: Vec<_> = defaults.keys().copied().collect();
        ids.sort();
        ids.iter().map(|i| defaults[i].clone()).collect()
    };

    for (i, b) in blocks.iter().enumerate() {
        match b.keyword.as_str() {
            "defaults" => db.items.push(Item::Defaults(defaults[&i].clone())),
            "features" => db.items.push(Item::Features {
                names: b.text.split_whitespace().map(str::to_string).collect(),
                comments: b.comments.clone(),
            }),
            "template" => {
                let (head, fs) = head_and_fs(b)?;
                let [cat] = head.as_slice() else {
                    return Err(DbError::Syntax { line: b.line, msg: "expected 'template <category> :='".into() });
                };
                let mut t = TemplateEntry::new(parse_cat(b.line, cat)?, fs)?;
                t.comments = b.comments.clone();
                db.add_template(t).map_err(|e| match e {
                    DbError::DuplicateTemplate { cat, .. } => DbError::DuplicateTemplate { line: b.line, cat },
                    other => other,
                })?;
            }
            _ => {
                let (head, fs) = head_and_fs(b)?;
                let [cat, root] = head.as_slice() else {
                    return Err(DbError::Syntax { line: b.line, msg: "expected 'entry <category> <root> :='".into() });
                };
                let mut e = LexiconEntry::new(parse_cat(b.line, cat)?, *root, fs)?;
                for d in &all_defaults {
                    e.apply_defaults(d);
                }
                e.comments = b.comments.clone();
                db.items.push(Item::Entry(e));
            }
        }
    }
    db.reindex();
    let schema = db.schema();
    let unknown: std::collections::BTreeSet<String> = db.entries().flat_map(|e| schema.unknown_names(&e.fs)).collect();
    for name in unknown {
        log::warn!("feature '{name}' is not in the schema");
    }
    Ok(db)
}

fn push_fs(out: &mut String, fs: &FeatureStructure) {
    let text = Renderer { style: Style::Indented, show_open: false }.render(fs);
    for line in text.lines() {
        out.push_str("  ");
        out.push_str(line);
        out.push('\n');
    }
}

pub(super) fn render(db: &Database) -> String {
    let mut out = String::new();
    for h in &db.header {
        out.push_str(h);
        out.push('\n');
    }
    if !db.header.is_empty() {
        out.push('\n');
    }
    for (i, item) in db.items.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let comments = match item {
            Item::Entry(e) => &e.comments,
            Item::Template(c) => &db.templates[c].comments,
            Item::Defaults(d) => &d.comments,
            Item::Features { comments, .. } => comments,
        };
        for c in comments {
            out.push_str(c);
            out.push('\n');
        }
        match item {
            Item::Entry(e) => {
                out.push_str(&format!("entry {} {} :=\n", e.cat, e.root));
                push_fs(&mut out, &e.fs);
            }
            Item::Template(c) => {
                out.push_str(&format!("template {c} :=\n"));
                push_fs(&mut out, &db.templates[c].fs);
            }
            Item::Defaults(d) => {
                out.push_str(&format!("defaults {} :=\n", d.pattern));
                push_fs(&mut out, &d.fs);
            }
            Item::Features { names, .. } => {
                out.push_str(&format!("features {}\n", names.join(" ")));
            }
        }
    }
    if !db.footer.is_empty() {
        out.push('\n');
        for f in &db.footer {
            out.push_str(f);
            out.push('\n');
        }
    }
    out
}
