use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

/// Analyzer spellings and their lexicon atoms. Suffix names keep `I`
/// for the dotless i and the other Turkish-letter capitals.
const TABLE: &[(&str, &str)] = &[
    ("NONE", "none"),
    // categories
    ("NOUN", "noun"),
    ("VERB", "verb"),
    ("ADJ", "adj"),
    ("ADVERB", "adverb"),
    ("PRONOUN", "pronoun"),
    ("RPRONOUN", "rpronoun"),
    ("DET", "det"),
    ("CONJ", "conj"),
    ("POSTP", "postp"),
    ("NUM", "num"),
    // agreement and possessive
    ("1SG", "1sg"),
    ("2SG", "2sg"),
    ("3SG", "3sg"),
    ("1PL", "1pl"),
    ("2PL", "2pl"),
    ("3PL", "3pl"),
    // case
    ("NOM", "nom"),
    ("ACC", "acc"),
    ("DAT", "dat"),
    ("LOC", "loc"),
    ("ABL", "abl"),
    ("GEN", "gen"),
    ("INS", "ins"),
    ("EQU", "equ"),
    // tense, aspect, mood
    ("PRES", "pres"),
    ("PAST", "past"),
    ("NARR", "narr"),
    ("FUT", "fut"),
    ("AOR", "aor"),
    ("PROG1", "prog1"),
    ("PROG2", "prog2"),
    ("COND", "cond"),
    ("OPT", "opt"),
    ("NECES", "neces"),
    ("DESR", "desr"),
    ("IMP", "imp"),
    // polarity
    ("POS", "pos"),
    ("NEG", "neg"),
    // subtypes
    ("INFINITIVE", "infinitive"),
    ("PARTICIPLE", "participle"),
    ("MANNER", "manner"),
    ("TEMPORAL", "temporal"),
    ("RPROPER", "rproper"),
    ("TEMP1", "temp1"),
    // derivational suffixes
    ("CI", "cI"),
    ("LIK", "lIk"),
    ("CIK", "cIk"),
    ("OG", "og"),
    ("YICI", "yIcI"),
    ("MAZLIK", "mazlIk"),
    ("YAMAZLIK", "yamazlIk"),
    ("MACA", "maca"),
    ("YASI", "yasI"),
    ("MAK", "mak"),
    ("MA", "ma"),
    ("YIS", "yIS"),
    ("DIK", "dIk"),
    ("YACAK", "yacak"),
    ("LI", "lI"),
    ("KI", "ki"),
    ("SIZ", "sIz"),
    ("SI", "sI"),
    ("IK", "ik"),
    ("YAN", "yan"),
    ("YINCA", "yInca"),
    ("YIP", "yIp"),
    ("YALI", "yalI"),
    ("KEN", "ken"),
    ("CASINA", "casIna"),
    ("MAKSIZIN", "maksIzIn"),
    ("MADAN", "madan"),
    ("YAMADAN", "yamadan"),
    ("YEREK", "yerek"),
    ("CA", "ca"),
    ("DIKCA", "dIkCa"),
    ("LAN", "lan"),
    ("LAS", "laS"),
];

fn warned() -> &'static Mutex<HashSet<String>> {
    static W: OnceLock<Mutex<HashSet<String>>> = OnceLock::new();
    W.get_or_init(Default::default)
}

/// Lexicon spelling of an analyzer value. Unknown values are lowercased,
/// with a warning the first time each is seen.
pub fn lower_value(v: &str) -> String {
    if let Some(&(_, atom)) = TABLE.iter().find(|(k, _)| *k == v) {
        return atom.to_string();
    }
    if let Ok(mut w) = warned().lock() {
        if w.insert(v.to_string()) {
            log::warn!("analyzer value {v} has no lexicon spelling; using {}", v.to_lowercase());
        }
    }
    v.to_lowercase()
}
