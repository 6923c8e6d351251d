use std::collections::BTreeSet;

use crate::catmap::in_inventory;

use super::Lexicon;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Cross-checks the database against the category tables.
pub fn check(lex: &Lexicon) -> CheckReport {
    let mut r = CheckReport::default();

    let mut reported = BTreeSet::new();
    for e in lex.db.entries() {
        if !in_inventory(&e.cat) {
            r.violations.push(format!("entry {} has category {} outside the inventory", e.root, e.cat));
        }
        let mapped = lex.roots.rows().iter().any(|row| row.root == e.root && row.cat == e.cat);
        if !mapped && reported.insert((e.cat.clone(), e.root.clone())) {
            r.violations.push(format!("root {} ({}) has no row in the root mapping table", e.root, e.cat));
        }
    }
    for t in lex.db.templates() {
        if !in_inventory(&t.cat) {
            r.violations.push(format!("template {} is outside the inventory", t.cat));
        }
    }
    let derived: BTreeSet<_> = lex.derivs.rows().iter().map(|row| row.cat.clone()).collect();
    for cat in derived {
        if lex.db.lookup_template(&cat).is_none() {
            r.violations.push(format!("derived category {cat} has no template"));
        }
    }

    for row in lex.roots.rows() {
        if lex.db.lookup(&row.cat, &row.root).is_empty() {
            r.warnings.push(format!("root mapping row {} {} {} has no database entry", row.proc_cat, row.proc_type, row.root));
        }
    }
    let schema = lex.db.schema();
    let unknown: BTreeSet<String> = lex
        .db
        .entries()
        .map(|e| &e.fs)
        .chain(lex.db.templates().map(|t| &t.fs))
        .flat_map(|fs| schema.unknown_names(fs))
        .collect();
    for name in unknown {
        r.warnings.push(format!("feature {name} is not in the schema"));
    }
    r
}
