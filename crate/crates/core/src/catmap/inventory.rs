use std::sync::OnceLock;

use super::Cat5;

/// Leaf categories as comma-joined prefixes; `{a|b}` expands to alternatives.
const LEAVES: &[&str] = &[
    "nominal,noun,{common|proper}",
    "nominal,pronoun,{personal|demonstrative|reflexive|indefinite|quantification|question}",
    "nominal,sentential,act,infinitive,{ma|mak|yIS}",
    "nominal,sentential,fact,participle,{dIk|yacak}",
    "adjectival,determiner,{article|demonstrative|quantifier}",
    "adjectival,adjective,quantitative,{cardinal|ordinal|fraction|distributive}",
    "adjectival,adjective,qualitative",
    "adverbial,direction",
    "adverbial,temporal,point-of-time",
    "adverbial,temporal,time-period,{fuzzy|day-time|season}",
    "adverbial,manner,{qualitative|repetition}",
    "adverbial,quantitative,{approximation|comparative|superlative|excessiveness}",
    "adverbial,sentential",
    "verb,{predicative|existential|attributive}",
    "conjunction,{coordinating|bracketing|sentential}",
    "post-position,{nom-subcat|acc-subcat|dat-subcat|abl-subcat|gen-subcat|ins-subcat}",
];

fn expand(pattern: &str) -> Vec<String> {
    match (pattern.find('{'), pattern.find('}')) {
        (Some(a), Some(b)) => pattern[a + 1..b]
            .split('|')
            .flat_map(|alt| expand(&format!("{}{}{}", &pattern[..a], alt, &pattern[b + 1..])))
            .collect(),
        _ => vec![pattern.to_string()],
    }
}

/// Every category a lexicon entry or template may carry.
pub fn inventory() -> &'static [Cat5] {
    static INV: OnceLock<Vec<Cat5>> = OnceLock::new();
    INV.get_or_init(|| {
        LEAVES
            .iter()
            .flat_map(|p| expand(p))
            .map(|s| s.parse().expect("inventory patterns are well formed"))
            .collect()
    })
}

pub fn in_inventory(c: &Cat5) -> bool {
    inventory().contains(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_alternatives() {
        assert!(in_inventory(&"nominal,sentential,act,infinitive,yIS".parse().unwrap()));
        assert!(in_inventory(&"post-position,ins-subcat".parse().unwrap()));
        assert!(!in_inventory(&"nominal,noun".parse().unwrap()));
        assert_eq!(inventory().len(), 45);
    }
}
