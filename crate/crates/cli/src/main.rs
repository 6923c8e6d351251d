mod config;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use turklex::catmap::Cat5;
use turklex::engine::{check, render_trace, QueryError, QueryForm};
use turklex::featstruct::{parse_fs, Renderer};
use turklex::fsdb::{Browse, Database, LexiconEntry};
use turklex::orthography;

use config::{Settings, StyleArg, TraceArg};

#[derive(Parser)]
#[command(name = "turklex", version, about = "Query and maintain a Turkish feature-structure lexicon")]
struct Cli {
    #[command(flatten)]
    paths: PathArgs,

    /// TOML file with default paths, trace level and output style.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    trace: Option<TraceArg>,

    #[arg(long, global = true, value_enum)]
    style: Option<StyleArg>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct PathArgs {
    /// Analyzer table (`surface<TAB>parse` lines).
    #[arg(long, global = true, env = "TURKLEX_ANALYZER")]
    analyzer: Option<PathBuf>,

    /// Root category mapping table.
    #[arg(long, global = true, env = "TURKLEX_ROOTMAP")]
    rootmap: Option<PathBuf>,

    /// Derivation category mapping table.
    #[arg(long, global = true, env = "TURKLEX_DERIVMAP")]
    derivmap: Option<PathBuf>,

    /// Feature structure database.
    #[arg(long, global = true, env = "TURKLEX_DB")]
    db: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Look up a word. The query is a feature structure with a `phon`
    /// feature, read from the argument or from stdin.
    Query { text: Option<String> },
    /// Browse or edit the database.
    #[command(subcommand)]
    Db(DbCommand),
    /// Validate the database against the category tables.
    Check,
}

#[derive(Subcommand)]
enum DbCommand {
    /// List entries, optionally filtered by category slots or root.
    Browse {
        #[arg(long)]
        maj: Option<String>,
        #[arg(long)]
        min: Option<String>,
        /// Category prefix such as `nominal,noun,common`.
        #[arg(long, conflicts_with_all = ["maj", "min"])]
        cat: Option<String>,
        /// Substring of the root.
        #[arg(long)]
        root: Option<String>,
    },
    /// Add a sense. The structure is read from FILE or stdin.
    Add {
        #[arg(long)]
        cat: String,
        #[arg(long)]
        root: String,
        file: Option<PathBuf>,
    },
    /// Delete sense INDEX (1-based, file order) of a root.
    Delete {
        #[arg(long)]
        cat: String,
        #[arg(long)]
        root: String,
        #[arg(long)]
        index: usize,
    },
}

/// Failures with the exit status they map to.
enum Failure {
    Usage(String),
    Data(String),
}

impl Failure {
    fn data(e: impl std::fmt::Display) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::data(e)
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let file = match &cli.config {
        Some(p) => config::load(p).map_err(Failure::data)?,
        None => Default::default(),
    };
    let settings = Settings::resolve(file, cli.paths.analyzer, cli.paths.rootmap, cli.paths.derivmap, cli.paths.db, cli.trace, cli.style);
    let renderer = Renderer { style: settings.style.into(), show_open: false };
    let mut out = io::stdout().lock();

    match cli.command {
        Command::Query { text } => {
            let text = match text {
                Some(t) => t,
                None => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                }
            };
            let q = QueryForm::parse(text.trim()).map_err(|e: QueryError| Failure::Usage(e.to_string()))?;
            let lex = settings.lexicon().map_err(Failure::data)?;
            let result = lex.query(&q);
            write!(out, "{}", render_trace(&result.trace, settings.trace.into(), &renderer))?;
            writeln!(out, "Number of feature structures: {}", result.results.len())?;
            for fs in &result.results {
                writeln!(out, "{}", renderer.render(fs))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check => {
            let lex = settings.lexicon().map_err(Failure::data)?;
            let report = check(&lex);
            for v in &report.violations {
                writeln!(out, "violation: {v}")?;
            }
            for w in &report.warnings {
                writeln!(out, "warning: {w}")?;
            }
            if report.is_ok() {
                writeln!(out, "ok")?;
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Db(cmd) => db_command(cmd, &settings, &renderer, &mut out),
    }
}

fn category(text: &str) -> Result<Cat5, Failure> {
    text.parse().map_err(Failure::Usage)
}

fn writable_db(settings: &Settings) -> Result<(PathBuf, Database), Failure> {
    let path = settings.db.clone().ok_or_else(|| Failure::Usage("editing needs a database file (--db)".into()))?;
    let db = Database::load(&path).map_err(Failure::data)?;
    Ok((path, db))
}

fn db_command(cmd: DbCommand, settings: &Settings, renderer: &Renderer, out: &mut impl Write) -> Result<ExitCode, Failure> {
    match cmd {
        DbCommand::Browse { maj, min, cat, root } => {
            let db = settings.database().map_err(Failure::data)?;
            let cat = match (cat, maj, min) {
                (Some(c), _, _) => Some(category(&c)?),
                (None, None, None) => None,
                (None, maj, min) => Some(Cat5::new(&[maj.as_deref().unwrap_or("none"), min.as_deref().unwrap_or("none")])),
            };
            let filter = Browse { cat, root: root.map(|r| orthography::encode(&r)) };
            let found = db.browse(&filter);
            let mut seen: Vec<(&Cat5, &str)> = Vec::new();
            for e in &found {
                let sense = seen.iter().filter(|(c, r)| *c == &e.cat && *r == e.root).count() + 1;
                seen.push((&e.cat, &e.root));
                writeln!(out, "{} {} #{sense}", e.cat, e.root)?;
                writeln!(out, "{}", renderer.render(&e.fs))?;
            }
            writeln!(out, "Number of entries: {}", found.len())?;
            Ok(ExitCode::SUCCESS)
        }
        DbCommand::Add { cat, root, file } => {
            let cat = category(&cat)?;
            let text = match file {
                Some(p) => std::fs::read_to_string(&p).map_err(|e| Failure::Data(format!("{}: {e}", p.display())))?,
                None => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                }
            };
            let fs = parse_fs(&orthography::encode(&text)).map_err(|e| Failure::Usage(e.to_string()))?;
            let (path, mut db) = writable_db(settings)?;
            let root = orthography::encode(&root);
            let entry = LexiconEntry::new(cat.clone(), root.clone(), fs).map_err(Failure::data)?;
            db.add_entry(entry).map_err(Failure::data)?;
            db.save(&path).map_err(Failure::data)?;
            let n = db.lookup(&cat, &root).len();
            writeln!(out, "added {cat} {root} #{n}")?;
            Ok(ExitCode::SUCCESS)
        }
        DbCommand::Delete { cat, root, index } => {
            let cat = category(&cat)?;
            let root = orthography::encode(&root);
            let (path, mut db) = writable_db(settings)?;
            let pos = index.checked_sub(1).ok_or_else(|| Failure::Data(format!("no sense 0 of {root} under {cat}")))?;
            db.delete_entry(&cat, &root, pos).map_err(|_| Failure::Data(format!("no sense {index} of {root} under {cat}")))?;
            db.save(&path).map_err(Failure::data)?;
            writeln!(out, "deleted {cat} {root} #{index}")?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
