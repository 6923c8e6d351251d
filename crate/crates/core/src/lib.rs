//! Lexicon of Turkish over typed feature structures. Surface words are
//! analyzed morphologically, mapped onto lexicon categories and assembled
//! from root entries and derivation templates.

pub mod featstruct;
pub mod orthography;
pub mod morph;
pub mod catmap;
pub mod fsdb;
pub mod engine;
pub mod seed;
