//! Acceptance checks for the lexicon. Runs without the test harness and
//! prints one PASS/FAIL line per criterion; exits nonzero if any fails.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turklex::catmap::{in_inventory, Cat5};
use turklex::engine::{Lexicon, QueryForm, QueryOptions, QueryOutput, SkipReason};
use turklex::featstruct::{parse_fs, render_fs, subsumes, unify, Avm, FeatureStructure, FeatureValue, Style};
use turklex::fsdb::Database;
use turklex::seed;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn query(lex: &Lexicon, text: &str, early: bool) -> QueryOutput {
    let q = QueryForm::parse(text).unwrap_or_else(|e| panic!("{text}: {e}"));
    lex.query_with(&q, QueryOptions { early_filter: early })
}

fn concept(fs: &FeatureStructure) -> String {
    match fs.get("sem|concept") {
        Some(FeatureValue::Concept(c)) => c.to_string(),
        other => format!("{other:?}"),
    }
}

fn atom_is(fs: &FeatureStructure, path: &str, want: &str) -> Outcome {
    match fs.get_atom(path) {
        Some(v) if v == want => Ok(()),
        v => Err(format!("{path} is {v:?}, expected {want}")),
    }
}

fn golden_atim(lex: &Lexicon) -> Outcome {
    let out = query(lex, "[phon:atIm]", true);
    let t = &out.trace;
    ensure!(t.parses.len() == 3, "{} parses", t.parses.len());
    ensure!(t.transformed() == 2, "{} transformed", t.transformed());
    ensure!(t.skipped.len() == 1, "{} skipped", t.skipped.len());
    let skip = &t.skipped[0];
    ensure!(
        matches!(&skip.reason, SkipReason::RootNotMapped(k) if k.to_string().ends_with("and atIm")),
        "skip reason {:?}",
        skip.reason
    );
    ensure!(out.results.len() == 2, "{} results", out.results.len());
    let (a, b) = (&out.results[0], &out.results[1]);
    atom_is(a, "morph|stem", "at")?;
    atom_is(a, "morph|poss", "1sg")?;
    atom_is(a, "sem|animate", "+")?;
    ensure!(concept(a) == "at-(horse)", "concept {}", concept(a));
    atom_is(b, "cat|maj", "verb")?;
    atom_is(b, "cat|min", "attributive")?;
    atom_is(b, "morph|tam2", "pres")?;
    atom_is(b, "morph|agr", "1sg")?;
    atom_is(b, "morph|stem|morph|poss", "none")?;
    atom_is(b, "morph|stem|phon", "none")
}

fn golden_memnunum(lex: &Lexicon) -> Outcome {
    let out = query(lex, "[phon:memnunum, cat:[maj:verb]]", true);
    let t = &out.trace;
    ensure!(t.parses.len() == 3, "{} parses", t.parses.len());
    ensure!(t.skipped.len() == 1, "{} skipped", t.skipped.len());
    ensure!(
        matches!(&t.skipped[0].reason, SkipReason::RootNotMapped(k) if k.to_string() == "noun, rproper and memnun"),
        "skip reason {:?}",
        t.skipped[0].reason
    );
    ensure!(t.eliminated.len() == 1, "{} eliminated", t.eliminated.len());
    let last = &t.eliminated[0].last_level;
    atom_is(last, "cat|min", "noun")?;
    atom_is(last, "cat|sub", "common")?;
    ensure!(out.results.len() == 1, "{} results", out.results.len());
    let c = concept(&out.results[0]);
    ensure!(c == "none(memnun-(satisfied))", "concept {c}");
    Ok(())
}

fn golden_ekim(lex: &Lexicon) -> Outcome {
    let out = query(lex, "[phon:ekim, morph:[poss:'1sg']]", true);
    let t = &out.trace;
    ensure!(t.parses.len() == 3, "{} parses", t.parses.len());
    ensure!(t.transformed() == 3, "{} transformed", t.transformed());
    ensure!(t.eliminated.len() == 2, "{} eliminated", t.eliminated.len());
    ensure!(t.fsdb.len() == 1, "{} database accesses", t.fsdb.len());
    ensure!(t.fsdb[0].root == "ek" && t.fsdb[0].entries == 2, "access {:?}", t.fsdb[0]);
    ensure!(out.results.len() == 2, "{} results", out.results.len());
    let mut concepts: Vec<String> = out.results.iter().map(concept).collect();
    concepts.sort();
    ensure!(concepts == ["ek-(appendix)", "ek-(suffix)"], "concepts {concepts:?}");
    for r in &out.results {
        atom_is(r, "morph|poss", "1sg")?;
        atom_is(r, "sem|countable", "+")?;
        atom_is(r, "sem|animate", "-")?;
    }
    Ok(())
}

fn ekimde(lex: &Lexicon) -> Outcome {
    let text = "[phon:ekimde, morph:[poss:none], sem:[temporal:+]]";
    for early in [true, false] {
        let out = query(lex, text, early);
        ensure!(out.results.len() == 1, "early={early}: {} results", out.results.len());
        let c = concept(&out.results[0]);
        ensure!(c == "ekim-(october)", "early={early}: concept {c}");
        let ek_parse = out.trace.parses.iter().position(|p| p.root() == "eK").map(|i| i + 1);
        ensure!(ek_parse.is_some(), "no parse of ek");
        if early {
            ensure!(
                out.trace.eliminated.iter().any(|e| Some(e.parse) == ek_parse),
                "ek parse not eliminated early"
            );
            ensure!(!out.trace.fsdb.iter().any(|a| a.root == "ek"), "ek senses were retrieved");
        } else {
            let ek = out.trace.fsdb.iter().find(|a| a.root == "ek");
            ensure!(ek.is_some_and(|a| a.entries == 2), "late mode did not retrieve both ek senses");
            ensure!(out.trace.retrieved == 3, "{} retrieved", out.trace.retrieved);
        }
    }
    Ok(())
}

fn derivation_chains(lex: &Lexicon) -> Outcome {
    let out = query(lex, "[phon:akIllIca]", true);
    ensure!(out.results.len() == 1, "akIllIca: {} results", out.results.len());
    let r = &out.results[0];
    ensure!(r.get("morph|stem|morph|stem").is_some_and(|v| v.as_fs().is_some()), "akIllIca is not three levels deep");
    ensure!(r.get("morph|stem|morph|stem|morph|stem").is_some_and(|v| v.as_atom().is_some()), "akIllIca is deeper than three levels");
    let c = concept(r);
    ensure!(c == "f_ca(f_lI(akIl-(intelligence)))", "concept {c}");

    let out = query(lex, "[phon:kazma, cat:[min:sentential]]", true);
    ensure!(out.results.len() == 1, "kazma: {} infinitive results", out.results.len());
    let r = &out.results[0];
    ensure!(concept(r) == "f_ma(kaz-(dig))", "concept {}", concept(r));
    ensure!(r.shares("syn|subcat", "morph|stem|syn|subcat"), "subcat is not shared with the stem");
    let kaz = lex.db.lookup(&"verb,predicative".parse().unwrap(), "kaz");
    ensure!(kaz.len() == 1, "{} kaz entries", kaz.len());
    let entry_syn = kaz[0].fs.extract("syn");
    ensure!(entry_syn.is_some() && entry_syn == r.extract("syn"), "subcat differs from the kaz entry");
    Ok(())
}

// Leaf denotations over six atoms plus one standing for every other atom.
const ATOMS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
const UNIVERSE: u8 = 0x7f;

fn members(mask: u8) -> Vec<String> {
    (0..6).filter(|i| mask & (1 << i) != 0).map(|i| ATOMS[i].to_string()).collect()
}

fn all_leaves() -> Vec<FeatureValue> {
    let mut out = Vec::new();
    for mask in 1u8..64 {
        let ms = members(mask);
        if ms.len() == 1 {
            out.push(FeatureValue::Atom(ms[0].clone()));
        } else {
            out.push(FeatureValue::AtomSet(ms.iter().cloned().collect()));
        }
        out.push(FeatureValue::Negated(ms.into_iter().collect()));
    }
    out
}

fn denote(v: &FeatureValue) -> Option<u8> {
    let bits = |xs: &mut dyn Iterator<Item = &String>| {
        xs.map(|x| ATOMS.iter().position(|a| a == x).map_or(0x40, |i| 1 << i)).fold(0u8, |m, b| m | b)
    };
    match v {
        FeatureValue::Atom(a) => Some(bits(&mut std::iter::once(a))),
        FeatureValue::AtomSet(s) => Some(bits(&mut s.iter())),
        FeatureValue::Negated(n) => Some(UNIVERSE & !bits(&mut n.iter())),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Complex,
    Leaf(u8),
}

type PathMap = BTreeMap<Vec<String>, Node>;

fn flatten(fs: &FeatureStructure) -> PathMap {
    fn walk(avm: &Avm, prefix: &mut Vec<String>, out: &mut PathMap) {
        for (n, v) in avm.iter() {
            prefix.push(n.to_string());
            match v {
                FeatureValue::Fs(inner) => {
                    out.insert(prefix.clone(), Node::Complex);
                    walk(inner, prefix, out);
                }
                leaf => {
                    out.insert(prefix.clone(), Node::Leaf(denote(leaf).expect("oracle leaves only")));
                }
            }
            prefix.pop();
        }
    }
    let mut out = PathMap::new();
    walk(fs.root(), &mut Vec::new(), &mut out);
    out
}

fn oracle_unify(a: &PathMap, b: &PathMap) -> Option<PathMap> {
    let mut out = a.clone();
    for (p, y) in b {
        match (out.get(p).copied(), *y) {
            (None, y) => {
                out.insert(p.clone(), y);
            }
            (Some(Node::Complex), Node::Complex) => {}
            (Some(Node::Leaf(x)), Node::Leaf(y)) if x & y != 0 => {
                out.insert(p.clone(), Node::Leaf(x & y));
            }
            _ => return None,
        }
    }
    Some(out)
}

fn oracle_subsumes(g: &PathMap, s: &PathMap) -> bool {
    g.iter().all(|(p, x)| match (x, s.get(p)) {
        (_, None) => false,
        (Node::Complex, Some(_)) => true,
        (Node::Leaf(x), Some(Node::Leaf(y))) => x & y != 0,
        (Node::Leaf(_), Some(Node::Complex)) => false,
    })
}

fn check_pair(a: &FeatureStructure, b: &FeatureStructure) -> Outcome {
    let (pa, pb) = (flatten(a), flatten(b));
    let got = unify(a, b);
    let want = oracle_unify(&pa, &pb);
    ensure!(got.as_ref().map(flatten) == want, "unify {a:?} {b:?}: got {got:?}, oracle {want:?}");
    let back = unify(b, a);
    ensure!(back.as_ref().map(flatten) == want, "unification does not commute on {a:?} {b:?}");
    ensure!(subsumes(a, b) == oracle_subsumes(&pa, &pb), "subsumes {a:?} {b:?}");
    if let Some(u) = got {
        ensure!(subsumes(a, &u) && subsumes(b, &u), "unifier of {a:?} {b:?} not subsumed by both");
    }
    Ok(())
}

fn check_single(a: &FeatureStructure) -> Outcome {
    let u = unify(a, a).ok_or_else(|| format!("{a:?} does not unify with itself"))?;
    ensure!(u.path_equal(a), "unification is not idempotent on {a:?}");
    ensure!(subsumes(a, a), "subsumption is not reflexive on {a:?}");
    Ok(())
}

/// Wraps a value under `depth` nested open matrices.
fn nest(v: FeatureValue, depth: usize) -> FeatureStructure {
    let names = ["p", "q", "r"];
    let mut v = v;
    for n in names[..depth].iter().rev() {
        v = FeatureValue::Fs(Avm::open().with(*n, v));
    }
    FeatureStructure::new(Avm::open().with("o", v))
}

/// Values of one feature in the small structure space: absent, an atom,
/// or a matrix holding an optional atom under `h`.
fn small_values() -> Vec<Option<FeatureValue>> {
    let mut out: Vec<Option<FeatureValue>> = vec![None];
    out.extend(ATOMS.iter().map(|a| Some(FeatureValue::atom(*a))));
    out.push(Some(FeatureValue::Fs(Avm::open())));
    out.extend(ATOMS.iter().map(|a| Some(FeatureValue::Fs(Avm::open().with("h", FeatureValue::atom(*a))))));
    out
}

fn random_value(rng: &mut ChaCha8Rng, leaves: &[FeatureValue], depth: u32) -> FeatureValue {
    if depth == 0 || rng.gen_bool(0.35) {
        return leaves[rng.gen_range(0..leaves.len())].clone();
    }
    let mut avm = Avm::open();
    for n in ["f", "g", "h"] {
        if rng.gen_bool(0.6) {
            avm.set(n, random_value(rng, leaves, depth - 1));
        }
    }
    FeatureValue::Fs(avm)
}

/// Draws structures from a pool of small random shapes so that pairs
/// overlap often enough to exercise both success and failure.
fn random_structure(rng: &mut ChaCha8Rng, leaves: &[FeatureValue]) -> FeatureStructure {
    let mut avm = Avm::open();
    for n in ["f", "g", "h"] {
        if rng.gen_bool(0.7) {
            let depth = rng.gen_range(0..=4);
            avm.set(n, random_value(rng, leaves, depth));
        }
    }
    FeatureStructure::new(avm)
}

fn unification_suite() -> Outcome {
    let leaves = all_leaves();
    ensure!(leaves.len() == 126, "{} leaf values", leaves.len());
    for depth in 0..=2 {
        for x in &leaves {
            let a = nest(x.clone(), depth);
            check_single(&a)?;
            for y in &leaves {
                check_pair(&a, &nest(y.clone(), depth))?;
            }
        }
    }

    let vals = small_values();
    let mut space = Vec::new();
    for f in &vals {
        for g in &vals {
            let mut avm = Avm::open();
            if let Some(v) = f {
                avm.set("f", v.clone());
            }
            if let Some(v) = g {
                avm.set("g", v.clone());
            }
            space.push(FeatureStructure::new(avm));
        }
    }
    for a in &space {
        check_single(a)?;
        for b in &space {
            check_pair(a, b)?;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let a = random_structure(&mut rng, &leaves);
        let b = if rng.gen_bool(0.3) {
            // A specialization of `a` so that subsumption holds some of the time.
            let extra = random_structure(&mut rng, &leaves);
            unify(&a, &extra).unwrap_or(extra)
        } else {
            random_structure(&mut rng, &leaves)
        };
        check_single(&a)?;
        check_pair(&a, &b)?;
    }
    Ok(())
}

const CAT_MORPH: &[(&str, &[&str])] = &[
    ("cat|maj", &["nominal", "verb", "adjectival", "adverbial", "post-position", "conjunction"]),
    ("cat|min", &["noun", "pronoun", "sentential", "attributive", "predicative", "adjective", "manner", "{noun,pronoun}"]),
    ("cat|sub", &["common", "proper", "qualitative", "act", "none"]),
    ("morph|form", &["lexical", "derived"]),
    ("morph|agr", &["1sg", "2sg", "3sg", "3pl", "!3sg"]),
    ("morph|poss", &["none", "1sg", "3sg", "!none"]),
    ("morph|case", &["nom", "acc", "dat", "loc", "{nom,loc}"]),
    ("morph|derv_suffix", &["none", "ma", "lI", "ca", "yInca"]),
    ("morph|sense", &["pos", "neg"]),
    ("morph|tam2", &["pres"]),
    ("morph|stem|cat|maj", &["nominal", "verb", "adjectival"]),
    ("morph|stem|morph|poss", &["none", "1sg"]),
];

const OTHER: &[(&str, &[&str])] = &[
    ("sem|animate", &["+", "-"]),
    ("sem|countable", &["+", "-"]),
    ("sem|temporal", &["+", "-"]),
    ("sem|roles", &["none"]),
    ("syn|subcat", &["none"]),
];

fn insert_path(avm: &mut Avm, path: &[&str], value: FeatureValue) {
    let (head, rest) = path.split_first().expect("non-empty path");
    if rest.is_empty() {
        if !avm.contains(head) {
            avm.set(*head, value);
        }
        return;
    }
    if !avm.contains(head) {
        avm.set(*head, FeatureValue::Fs(Avm::new()));
    }
    if let Some(FeatureValue::Fs(inner)) = avm.get_mut(head) {
        insert_path(inner, rest, value);
    }
}

fn leaf_value(text: &str) -> FeatureValue {
    parse_fs(&format!("[v:{text}]")).unwrap().get("v").unwrap().clone()
}

fn soundness(lex: &Lexicon) -> Outcome {
    let surfaces = seed::analyzer().surfaces().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked_equivalence = 0;
    for _ in 0..500 {
        let w = &surfaces[rng.gen_range(0..surfaces.len())];
        let mut avm = Avm::new().with("phon", FeatureValue::atom(w.as_str()));
        let cat_morph_only = rng.gen_bool(0.6);
        for _ in 0..rng.gen_range(0..4) {
            let pool = if cat_morph_only || rng.gen_bool(0.5) { CAT_MORPH } else { OTHER };
            let (path, values) = pool[rng.gen_range(0..pool.len())];
            let v = values[rng.gen_range(0..values.len())];
            insert_path(&mut avm, &path.split('|').collect::<Vec<_>>(), leaf_value(v));
        }
        let q = QueryForm::new(FeatureStructure::new(avm)).map_err(|e| e.to_string())?;
        let early = lex.query_with(&q, QueryOptions { early_filter: true });
        for r in &early.results {
            ensure!(subsumes(q.fs(), r), "result of {} not subsumed by the query", render_fs(q.fs(), Style::Compact));
        }
        let restricted = q.fs().root().names().all(|n| matches!(n, "phon" | "cat" | "morph"));
        if restricted {
            let late = lex.query_with(&q, QueryOptions { early_filter: false });
            ensure!(
                early.results == late.results,
                "early and late filtering differ on {}",
                render_fs(q.fs(), Style::Compact)
            );
            checked_equivalence += 1;
        }
    }
    ensure!(checked_equivalence >= 250, "only {checked_equivalence} cat/morph queries drawn");
    Ok(())
}

/// The derived-word mapping table as printed: processor category, suffixes,
/// then maj..sssub with blanks continuing the row above.
const DERIVED_TABLE: &[(&str, &[&str], [&str; 5])] = &[
    ("noun", &["cI", "lIk", "cIk", "og", "yIcI", "mazlIk", "yamazlIk", "maca", "yasI", "none"], ["nominal", "noun", "common", "", ""]),
    ("", &["mak"], ["", "sentential", "act", "infinitive", "mak"]),
    ("", &["ma"], ["", "", "", "", "ma"]),
    ("", &["yIS"], ["", "", "", "", "yIS"]),
    ("", &["dIk"], ["", "", "fact", "participle", "dIk"]),
    ("", &["yacak"], ["", "", "", "", "yacak"]),
    ("rpronoun", &["none"], ["noinal", "pronoun", "quantitative", "", ""]),
    ("adj", &["lIk", "lI", "ki", "sIz", "sI", "ik", "yIcI", "yan", "yacak", "dIk", "yasI"], ["modifier", "adjective", "qualitative", "", ""]),
    ("adverb", &["yInca", "yIp"], ["adverbial", "temporal", "point-of-time", "", ""]),
    ("", &["yalI", "ken"], ["", "", "time-period", "fuzzy", ""]),
    ("", &["casIna", "maksIzIn", "madan", "yamadan", "yerek", "ca"], ["", "manner", "qualitative", "", ""]),
    ("", &["dIkCa"], ["", "", "repetition", "", ""]),
    ("verb", &["lan", "laS"], ["verb", "predicative", "", "", ""]),
    ("", &["none"], ["", "attributive", "", "", ""]),
];

/// Misprints in the printed table, mapped to the names the category
/// inventory uses for the same categories.
fn normalize(slot: usize, min: &str, v: &str) -> String {
    match (slot, v) {
        (0, "noinal") => "nominal".into(),
        (0, "modifier") => "adjectival".into(),
        (2, "quantitative") if min == "pronoun" => "quantification".into(),
        _ => v.to_string(),
    }
}

fn expand_table() -> Vec<(String, String, Cat5)> {
    let mut rows = Vec::new();
    let mut proc_cat = "";
    let mut prev = [""; 5];
    for (cat, suffixes, slots) in DERIVED_TABLE {
        if !cat.is_empty() {
            proc_cat = cat;
            prev = [""; 5];
        }
        // A filled slot resets everything to its right.
        let mut cur = prev;
        if let Some(first) = slots.iter().position(|s| !s.is_empty()) {
            for (i, s) in slots.iter().enumerate().skip(first) {
                cur[i] = s;
            }
        }
        prev = cur;
        let min = cur[1];
        let parts: Vec<String> = cur
            .iter()
            .enumerate()
            .map(|(i, s)| if s.is_empty() { "none".into() } else { normalize(i, min, s) })
            .collect();
        let parts: Vec<&str> = parts.iter().map(String::as_str).collect();
        let cat5 = Cat5::new(&parts);
        for s in suffixes.iter() {
            rows.push((proc_cat.to_string(), s.to_string(), cat5.clone()));
        }
    }
    rows
}

fn table_fidelity() -> Outcome {
    let derivs = seed::deriv_map();
    let expected = expand_table();
    ensure!(expected.len() == 41, "{} rows in the printed table", expected.len());
    for (proc_cat, suffix, cat) in &expected {
        let got = derivs.map_derivation(proc_cat, suffix);
        ensure!(got == Some(cat), "{proc_cat} {suffix}: got {got:?}, table says {cat}");
    }
    ensure!(derivs.rows().len() == expected.len(), "derivation table has {} rows", derivs.rows().len());
    for row in derivs.rows() {
        ensure!(in_inventory(&row.cat), "derivation output {} outside the inventory", row.cat);
    }
    for row in seed::root_map().rows() {
        ensure!(in_inventory(&row.cat), "root output {} outside the inventory", row.cat);
    }
    Ok(())
}

fn round_trips() -> Outcome {
    let db = seed::database();
    let path = std::env::temp_dir().join(format!("turklex-acceptance-{}.fsdb", std::process::id()));
    db.save(&path).map_err(|e| e.to_string())?;
    let loaded = Database::load(&path).map_err(|e| e.to_string());
    let _ = std::fs::remove_file(&path);
    let loaded = loaded?;
    ensure!(loaded == db, "load(save(db)) differs from db");
    ensure!(loaded.to_text() == seed::DATABASE, "saved text differs from the seed file");

    let structures = db.entries().map(|e| &e.fs).chain(db.templates().map(|t| &t.fs));
    let mut n = 0;
    for fs in structures {
        for style in [Style::Compact, Style::Indented] {
            let text = render_fs(fs, style);
            let back = parse_fs(&text).map_err(|e| format!("{e}\n{text}"))?;
            ensure!(&back == fs, "parse(render(fs)) differs:\n{text}");
        }
        n += 1;
    }
    ensure!(n > 50, "only {n} structures in the seed database");
    Ok(())
}

fn timing(lex: &Lexicon) -> Outcome {
    let golden = [
        "[phon:atIm]",
        "[phon:memnunum, cat:[maj:verb]]",
        "[phon:ekim, morph:[poss:'1sg']]",
        "[phon:ekimde, morph:[poss:none], sem:[temporal:+]]",
        "[phon:akIllIca]",
        "[phon:kazma]",
    ];
    for text in golden {
        let q = QueryForm::parse(text).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let _ = lex.query(&q);
        let took = start.elapsed();
        ensure!(took < Duration::from_millis(100), "{text} took {took:?}");
    }
    Ok(())
}

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let ms = start.elapsed().as_millis();
    match outcome {
        Ok(()) => {
            println!("PASS  {name} ({ms} ms)");
            true
        }
        Err(why) => {
            println!("FAIL  {name} ({ms} ms): {why}");
            false
        }
    }
}

fn main() {
    let lex = Lexicon::seed();
    let results = [
        run("1 golden run: atIm", || golden_atim(&lex)),
        run("2 golden run: memnunum restricted to verbs", || golden_memnunum(&lex)),
        run("3 golden run: ekim with 1sg possessive", || golden_ekim(&lex)),
        run("4 ekimde keeps only the October sense", || ekimde(&lex)),
        run("5 derivation chains: akIllIca and kazma", || derivation_chains(&lex)),
        run("6 unification against brute-force oracles", unification_suite),
        run("7 subsumption soundness and early/late equivalence", || soundness(&lex)),
        run("8 derived-word category table", table_fidelity),
        run("9 database and text round trips", round_trips),
        run("golden queries under 100 ms", || timing(&lex)),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
