use std::collections::HashMap;
use std::path::Path;

use super::{MorphError, MorphParse};

/// Source of morphological parses for surface words.
pub trait Analyzer: Send + Sync {
    /// All parses of `surface`, in analyzer order. Unknown words give none.
    fn analyze(&self, surface: &str) -> Vec<MorphParse>;
}

/// Fixed analyzer backed by a table of `surface<TAB>parse` lines. Repeated
/// surfaces accumulate parses in file order.
#[derive(Clone, Debug, Default)]
pub struct AnalyzerTable {
    parses: HashMap<String, Vec<MorphParse>>,
    surfaces: Vec<String>,
}

impl AnalyzerTable {
    pub fn parse(text: &str) -> Result<Self, MorphError> {
        let mut t = AnalyzerTable::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let wrap = |e: MorphError| MorphError::Line { line: i + 1, source: Box::new(e) };
            let (surface, parse) = line
                .split_once('\t')
                .ok_or_else(|| wrap(MorphError::Syntax { pos: 0, msg: "expected surface<TAB>parse".into() }))?;
            let p: MorphParse = parse.parse().map_err(wrap)?;
            t.add(surface.trim(), p);
        }
        Ok(t)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, MorphError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| MorphError::Io { path: path.display().to_string(), msg: e.to_string() })?;
        Self::parse(&text)
    }

    pub fn add(&mut self, surface: &str, p: MorphParse) {
        if !self.parses.contains_key(surface) {
            self.surfaces.push(surface.to_string());
        }
        self.parses.entry(surface.to_string()).or_default().push(p);
    }

    /// Surfaces in order of first appearance.
    pub fn surfaces(&self) -> &[String] {
        &self.surfaces
    }
}

impl Analyzer for AnalyzerTable {
    fn analyze(&self, surface: &str) -> Vec<MorphParse> {
        self.parses.get(surface).cloned().unwrap_or_default()
    }
}
