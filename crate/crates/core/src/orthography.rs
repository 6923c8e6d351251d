//! ASCII encoding of Turkish letters used throughout the lexicon:
//! ı→I, ç→C, ğ→G, ş→S, ö→O, ü→U.

const LETTERS: &[(char, char)] = &[
    ('ı', 'I'),
    ('ç', 'C'),
    ('ğ', 'G'),
    ('ş', 'S'),
    ('ö', 'O'),
    ('ü', 'U'),
    ('Ç', 'C'),
    ('Ğ', 'G'),
    ('Ş', 'S'),
    ('Ö', 'O'),
    ('Ü', 'U'),
    ('İ', 'i'),
];

/// Capitals standing for Turkish letters. Any other capital in a root is a
/// morphophonemic marker of the analyzer.
const ENCODED: &[char] = &['I', 'C', 'G', 'S', 'O', 'U'];

/// Rewrites Turkish letters into the ASCII convention. Text already in the
/// convention is left unchanged.
pub fn encode(s: &str) -> String {
    s.chars()
        .map(|c| LETTERS.iter().find(|(t, _)| *t == c).map_or(c, |&(_, a)| a))
        .collect()
}

/// Inverse of [`encode`] for display.
pub fn decode(s: &str) -> String {
    s.chars()
        .map(|c| LETTERS[..6].iter().find(|(_, a)| *a == c).map_or(c, |&(t, _)| t))
        .collect()
}

/// Lowercases capitals that do not encode a Turkish letter, so `eK` becomes `ek`.
pub fn normalize_root(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_ascii_uppercase() && !ENCODED.contains(&c) { c.to_ascii_lowercase() } else { c })
        .collect()
}
