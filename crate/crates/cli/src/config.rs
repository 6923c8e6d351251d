use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::ValueEnum;
use serde::Deserialize;
use turklex::catmap::{DerivMapTable, RootMapTable};
use turklex::engine::{Lexicon, Verbosity};
use turklex::featstruct::Style;
use turklex::fsdb::Database;
use turklex::morph::AnalyzerTable;
use turklex::seed;

#[derive(Clone, Copy, Debug, Default, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TraceArg {
    #[default]
    Silent,
    Counts,
    Full,
}

impl From<TraceArg> for Verbosity {
    fn from(t: TraceArg) -> Self {
        match t {
            TraceArg::Silent => Verbosity::Silent,
            TraceArg::Counts => Verbosity::Counts,
            TraceArg::Full => Verbosity::Full,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum StyleArg {
    #[default]
    Indented,
    Compact,
}

impl From<StyleArg> for Style {
    fn from(s: StyleArg) -> Self {
        match s {
            StyleArg::Indented => Style::Indented,
            StyleArg::Compact => Style::Compact,
        }
    }
}

/// Contents of a `--config` file. Relative paths are taken from the file's
/// directory.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub analyzer: Option<PathBuf>,
    pub rootmap: Option<PathBuf>,
    pub derivmap: Option<PathBuf>,
    pub db: Option<PathBuf>,
    pub trace: Option<TraceArg>,
    pub style: Option<StyleArg>,
}

pub fn load(path: &Path) -> anyhow::Result<FileConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut cfg: FileConfig = toml::from_str(&text).with_context(|| format!("bad config {}", path.display()))?;
    let base = path.parent().unwrap_or(Path::new("."));
    for p in [&mut cfg.analyzer, &mut cfg.rootmap, &mut cfg.derivmap, &mut cfg.db].into_iter().flatten() {
        if p.is_relative() {
            *p = base.join(&*p);
        }
    }
    Ok(cfg)
}

/// Effective settings. Flags and environment variables win over the config
/// file; missing data paths fall back to the built-in seed data.
pub struct Settings {
    pub analyzer: Option<PathBuf>,
    pub rootmap: Option<PathBuf>,
    pub derivmap: Option<PathBuf>,
    pub db: Option<PathBuf>,
    pub trace: TraceArg,
    pub style: StyleArg,
}

impl Settings {
    pub fn resolve(
        file: FileConfig,
        analyzer: Option<PathBuf>,
        rootmap: Option<PathBuf>,
        derivmap: Option<PathBuf>,
        db: Option<PathBuf>,
        trace: Option<TraceArg>,
        style: Option<StyleArg>,
    ) -> Self {
        Settings {
            analyzer: analyzer.or(file.analyzer),
            rootmap: rootmap.or(file.rootmap),
            derivmap: derivmap.or(file.derivmap),
            db: db.or(file.db),
            trace: trace.or(file.trace).unwrap_or_default(),
            style: style.or(file.style).unwrap_or_default(),
        }
    }

    pub fn database(&self) -> anyhow::Result<Database> {
        match &self.db {
            Some(p) => {
                log::debug!("database from {}", p.display());
                Ok(Database::load(p)?)
            }
            None => Ok(seed::database()),
        }
    }

    pub fn lexicon(&self) -> anyhow::Result<Lexicon> {
        let analyzer = match &self.analyzer {
            Some(p) => AnalyzerTable::load(p)?,
            None => seed::analyzer(),
        };
        let roots = match &self.rootmap {
            Some(p) => RootMapTable::load(p)?,
            None => seed::root_map(),
        };
        let derivs = match &self.derivmap {
            Some(p) => DerivMapTable::load(p)?,
            None => seed::deriv_map(),
        };
        Ok(Lexicon::new(Box::new(analyzer), roots, derivs, self.database()?))
    }
}
