//! Sample data compiled into the library: an analyzer fixture, both
//! category tables and a small database.

use crate::catmap::{DerivMapTable, RootMapTable};
use crate::engine::Lexicon;
use crate::fsdb::Database;
use crate::morph::AnalyzerTable;

pub const ANALYZER: &str = include_str!("../data/analyzer.tsv");
pub const ROOT_MAP: &str = include_str!("../data/rootmap.tsv");
pub const DERIV_MAP: &str = include_str!("../data/derivmap.tsv");
pub const DATABASE: &str = include_str!("../data/lexicon.fsdb");

pub fn analyzer() -> AnalyzerTable {
    AnalyzerTable::parse(ANALYZER).expect("seed analyzer fixture is valid")
}

pub fn root_map() -> RootMapTable {
    RootMapTable::parse(ROOT_MAP).expect("seed root map is valid")
}

pub fn deriv_map() -> DerivMapTable {
    DerivMapTable::parse(DERIV_MAP).expect("seed derivation map is valid")
}

pub fn database() -> Database {
    Database::parse(DATABASE).expect("seed database is valid")
}

impl Lexicon {
    pub fn seed() -> Lexicon {
        Lexicon::new(Box::new(analyzer()), root_map(), deriv_map(), database())
    }
}
