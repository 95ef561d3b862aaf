use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use leverage::corpus::{parse_timestamp, Corpus, Timestamp};
use leverage::pipeline::{self, emit_reports, run_pipeline, AnalysisConfig};
use leverage::resolver::{resolve_release, Levels, ResolutionPolicy};
use leverage::semver::parse_version;
use leverage::sizer::{size_release, LocOptions, SizeCache};

#[derive(Parser)]
#[command(
    name = "leverage",
    version,
    about = "Technical leverage analytics for npm package corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a corpus and list per-package release counts
    Ingest(Common),
    /// Resolve the dependencies of a package's releases
    Resolve(Select),
    /// Measure own and dependency code size of a package's releases
    Measure(Select),
    /// Run the full analysis and print the summary
    Analyze(Common),
    /// Run the full analysis and write every report file
    Report {
        #[command(flatten)]
        common: Common,
        /// Output directory
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Common {
    /// Corpus directory (registry documents plus sources/)
    corpus: PathBuf,
    /// Advisory snapshot (.csv or .json)
    #[arg(long)]
    advisories: Option<PathBuf>,
    /// 1: direct dependencies, 2: also their direct dependencies
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    levels: u8,
    /// Own-size threshold in lines separating small-medium from large
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    kloc_threshold: u64,
    /// latest-published or highest-semver
    #[arg(long, default_value = "latest-published")]
    policy: ResolutionPolicy,
    /// Use log10(x + EPS) for leverage and distance instead of dropping zeros
    #[arg(long)]
    log_offset: Option<f64>,
    /// Ignore advisories published at or after this date
    #[arg(long, value_parser = parse_instant)]
    published_before: Option<Timestamp>,
    /// Count each duplicated level-2 package version once
    #[arg(long)]
    dedup: bool,
    /// Extra glob of files to leave out of line counts (repeatable)
    #[arg(long = "exclude-glob")]
    exclude_globs: Vec<String>,
    /// Drop every prerelease from release timelines
    #[arg(long)]
    exclude_all_prereleases: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct Select {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    package: String,
    /// Single release; all timeline releases when omitted
    #[arg(long)]
    version: Option<String>,
}

fn parse_instant(text: &str) -> Result<Timestamp, String> {
    parse_timestamp(text)
        .ok_or_else(|| format!("expected an ISO-8601 date or timestamp, got {text:?}"))
}

impl Common {
    fn config(&self) -> AnalysisConfig {
        AnalysisConfig {
            corpus: self.corpus.clone(),
            advisories: self.advisories.clone(),
            levels: Levels::try_from(self.levels).expect("range checked by clap"),
            kloc_threshold: self.kloc_threshold,
            policy: self.policy,
            log_offset: self.log_offset,
            published_before: self.published_before,
            dedup: self.dedup,
            exclude_globs: self.exclude_globs.clone(),
            exclude_all_prereleases: self.exclude_all_prereleases,
            seed: self.seed,
        }
    }
}

type Failure = Box<dyn std::error::Error>;

fn ingest(common: &Common) -> Result<Value, Failure> {
    let corpus = Corpus::open(&common.corpus)?;
    let mut packages = Vec::new();
    for name in &corpus.libraries {
        let record = corpus.registry.get(name).expect("listed library");
        let t = pipeline::timeline(&corpus, name, common.exclude_all_prereleases)
            .expect("listed library");
        let excluded: Vec<Value> = t
            .exclusions
            .iter()
            .map(|e| json!({"version": e.version.to_string(), "reason": e.reason.as_str()}))
            .collect();
        packages.push(json!({
            "package": name,
            "ingested": record.ingested_count(),
            "releases": t.releases.len(),
            "excluded": excluded,
            "warnings": record.warnings,
        }));
    }
    Ok(json!({"registry_packages": corpus.registry.len(), "libraries": packages}))
}

fn selected(
    select: &Select,
    corpus: &Corpus,
) -> Result<Vec<leverage::corpus::VersionRecord>, Failure> {
    let t = pipeline::timeline(
        corpus,
        &select.package,
        select.common.exclude_all_prereleases,
    )
    .ok_or_else(|| format!("unknown package {}", select.package))?;
    match &select.version {
        None => Ok(t.releases),
        Some(text) => {
            let wanted = parse_version(text)?;
            let record = corpus
                .registry
                .get(&select.package)
                .and_then(|p| p.find(&wanted))
                .ok_or_else(|| format!("{}@{text} is not in the corpus", select.package))?;
            Ok(vec![record.clone()])
        }
    }
}

fn resolve(select: &Select) -> Result<Value, Failure> {
    let config = select.common.config();
    let corpus = Corpus::open(&config.corpus)?;
    let mut out = Vec::new();
    for release in selected(select, &corpus)? {
        let deps = resolve_release(
            &select.package,
            &release,
            &corpus.registry,
            config.levels,
            config.policy,
        );
        let entries: Vec<Value> = deps
            .entries
            .iter()
            .map(|e| {
                let (resolved, reason) = match &e.resolved {
                    Ok(v) => (Some(v.to_string()), None),
                    Err(u) => (None, Some(u.as_str())),
                };
                json!({
                    "name": e.name, "spec": e.spec, "depth": e.depth, "parent": e.parent,
                    "resolved": resolved, "unresolved": reason, "duplicate": e.duplicate,
                })
            })
            .collect();
        out.push(json!({
            "version": release.version.to_string(),
            "as_of": release.published_at.to_rfc3339(),
            "dependencies": entries,
        }));
    }
    Ok(Value::Array(out))
}

fn measure(select: &Select) -> Result<Value, Failure> {
    let config = select.common.config();
    let corpus = Corpus::open(&config.corpus)?;
    let options = LocOptions::with_exclude_globs(&config.exclude_globs)?;
    let cache = SizeCache::new();
    let mut out = Vec::new();
    for release in selected(select, &corpus)? {
        let deps = resolve_release(
            &select.package,
            &release,
            &corpus.registry,
            config.levels,
            config.policy,
        );
        let report = size_release(
            &select.package,
            &release,
            &deps,
            &corpus.sources,
            &options,
            &cache,
        );
        let mut value = json!(report);
        value["version"] = json!(release.version.to_string());
        out.push(value);
    }
    Ok(Value::Array(out))
}

fn run(command: Command) -> Result<(), Failure> {
    let value = match command {
        Command::Ingest(common) => ingest(&common)?,
        Command::Resolve(select) => resolve(&select)?,
        Command::Measure(select) => measure(&select)?,
        Command::Analyze(common) => run_pipeline(&common.config())?.summary(),
        Command::Report { common, out } => {
            let bundle = run_pipeline(&common.config())?;
            let files = emit_reports(&bundle, &out)?;
            json!({"out": out, "files": files})
        }
    };
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{}", serde_json::to_string_pretty(&value)?) {
        // A closed pipe (`| head`) is not a failure of the analysis.
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
