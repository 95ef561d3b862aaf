//! End-to-end analysis over a corpus directory and report emission.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{Corpus, CorpusError, ExclusionReason, ReleaseTimeline, Timestamp};
use crate::metrics::{change_vector, ChangeVector, DependencyMode, LeverageRecord};
use crate::resolver::{resolve_release, DependencySet, Levels, ResolutionPolicy};
use crate::sizer::{size_release, LocOptions, SizeCache, SizeError, SizeReport};
use crate::stats::{
    self, build_design_matrix, cohens_d, fisher_exact, fit_ols, odds_ratio, spearman,
    ContingencyTable, ExclusionTally, GaussianKde, PairObservation, SizeGroup, StatsError,
};
use crate::vulnmatch::{
    load_advisories, published_before, AdvisoryError, AdvisoryIndex, VulnProfile,
};

/// Bumped whenever a report column or field is added, removed or reordered.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Advisory(#[from] AdvisoryError),
    #[error(transparent)]
    Size(#[from] SizeError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("writing {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: io::Error,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisConfig {
    #[serde(skip)]
    pub corpus: PathBuf,
    /// No advisories are matched when absent.
    #[serde(skip)]
    pub advisories: Option<PathBuf>,
    #[serde(serialize_with = "levels_as_number")]
    pub levels: Levels,
    pub kloc_threshold: u64,
    pub policy: ResolutionPolicy,
    /// `None` drops rows with zero leverage or change distance from the
    /// regression; `Some(eps)` logs `x + eps` instead.
    pub log_offset: Option<f64>,
    /// Only advisories published strictly before this instant are used.
    pub published_before: Option<Timestamp>,
    /// Leave duplicated level-2 packages out of `l_trans1`.
    pub dedup: bool,
    pub exclude_globs: Vec<String>,
    pub exclude_all_prereleases: bool,
    pub seed: u64,
}

fn levels_as_number<S: serde::Serializer>(levels: &Levels, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u8(levels.depth())
}

impl AnalysisConfig {
    pub fn new(corpus: impl Into<PathBuf>) -> Self {
        AnalysisConfig {
            corpus: corpus.into(),
            advisories: None,
            levels: Levels::Direct,
            kloc_threshold: stats::DEFAULT_KLOC_THRESHOLD,
            policy: ResolutionPolicy::default(),
            log_offset: None,
            published_before: None,
            dedup: false,
            exclude_globs: Vec::new(),
            exclude_all_prereleases: false,
            seed: 0,
        }
    }

    pub fn with_advisories(mut self, path: impl Into<PathBuf>) -> Self {
        self.advisories = Some(path.into());
        self
    }

    pub fn with_levels(mut self, levels: Levels) -> Self {
        self.levels = levels;
        self
    }

    pub fn with_kloc_threshold(mut self, threshold: u64) -> Self {
        self.kloc_threshold = threshold;
        self
    }

    fn validate(&self) -> Result<(), PipelineError> {
        if self.kloc_threshold == 0 {
            return Err(PipelineError::Config(
                "kloc threshold must be positive".into(),
            ));
        }
        if let Some(eps) = self.log_offset {
            if !(eps.is_finite() && eps > 0.0) {
                return Err(PipelineError::Config(format!(
                    "log offset must be positive, got {eps}"
                )));
            }
        }
        Ok(())
    }
}

/// One analyzed release. Field order is the `releases.csv` column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReleaseRow {
    pub package: String,
    pub version: String,
    pub published_at: String,
    pub l_own: u64,
    pub l_dir: u64,
    pub l_trans1: u64,
    pub lambda_dir: Option<f64>,
    pub lambda_dir_trans1: Option<f64>,
    pub rho: Option<f64>,
    pub theta_deg: Option<f64>,
    pub rho_trans1: Option<f64>,
    pub theta_trans1_deg: Option<f64>,
    pub interval_days: Option<f64>,
    pub own_vulns: usize,
    pub dir_vulns: usize,
    pub trans1_vulns: usize,
    pub is_vulnerable: bool,
    pub unresolved_deps: usize,
    pub sizing_gaps: usize,
    pub own_missing: bool,
    pub long_line_files: usize,
}

impl ReleaseRow {
    pub fn group(&self, threshold: u64) -> SizeGroup {
        SizeGroup::of(self.l_own, threshold)
    }

    pub fn lambda(&self, mode: DependencyMode) -> Option<f64> {
        match mode {
            DependencyMode::Dir => self.lambda_dir,
            DependencyMode::DirTrans1 => self.lambda_dir_trans1,
        }
    }

    /// Vulnerable through own code or dependencies counted by `mode`.
    pub fn vulnerable(&self, mode: DependencyMode) -> bool {
        match mode {
            DependencyMode::Dir => self.own_vulns + self.dir_vulns > 0,
            DependencyMode::DirTrans1 => self.is_vulnerable,
        }
    }

    fn change(&self, mode: DependencyMode) -> (Option<f64>, Option<f64>) {
        match mode {
            DependencyMode::Dir => (self.rho, self.theta_deg),
            DependencyMode::DirTrans1 => (self.rho_trans1, self.theta_trans1_deg),
        }
    }
}

/// Everything computed for one release before rows are flattened.
#[derive(Debug, Clone)]
pub struct ReleaseAnalysis {
    pub package: String,
    pub dependencies: DependencySet,
    pub size: SizeReport,
    pub vulns: VulnProfile,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContingencyReport {
    pub group: SizeGroup,
    pub mode: DependencyMode,
    pub threshold: Option<f64>,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub odds_ratio: Option<f64>,
    /// Set only when a zero cell leaves the plain ratio undefined.
    pub odds_ratio_haldane: Option<f64>,
    pub p_value: f64,
    pub zero_margin: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RegressionOutcome {
    Fitted {
        #[serde(flatten)]
        fit: stats::RegressionFit,
        exclusions: ExclusionTally,
    },
    InsufficientRows {
        n_rows: usize,
        exclusions: ExclusionTally,
        reason: String,
    },
}

/// Density of change directions sampled on the whole-degree grid.
#[derive(Debug, Clone)]
pub struct KdeCurve {
    pub bandwidth: f64,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct VulnSources {
    pub releases: usize,
    pub own: usize,
    pub dir: usize,
    pub trans1: usize,
}

#[derive(Debug, Clone)]
pub struct AnalysisBundle {
    pub config: AnalysisConfig,
    pub rows: Vec<ReleaseRow>,
    pub packages: usize,
    pub ingested_versions: usize,
    pub exclusions: BTreeMap<&'static str, usize>,
    pub warnings: Vec<String>,
    pub regressions: BTreeMap<(&'static str, DependencyMode), RegressionOutcome>,
    pub contingency: Vec<ContingencyReport>,
    pub medians: BTreeMap<(SizeGroup, DependencyMode), Option<f64>>,
    pub kde: BTreeMap<SizeGroup, Option<KdeCurve>>,
    pub spearman: Result<stats::Spearman, StatsError>,
    pub cohens_d: Result<f64, StatsError>,
    pub vuln_sources: BTreeMap<(SizeGroup, &'static str), VulnSources>,
}

const MODES: [DependencyMode; 2] = [DependencyMode::Dir, DependencyMode::DirTrans1];

/// Filtered release timeline of one package, as the pipeline sees it.
pub fn timeline(
    corpus: &Corpus,
    package: &str,
    exclude_all_prereleases: bool,
) -> Option<ReleaseTimeline> {
    let record = corpus.registry.get(package)?;
    let mut t = ReleaseTimeline::from_package(record).filter_experimental();
    if exclude_all_prereleases {
        t = t.filter_all_prereleases();
    }
    Some(t.filter_backports())
}

pub fn run_pipeline(config: &AnalysisConfig) -> Result<AnalysisBundle, PipelineError> {
    config.validate()?;
    let corpus = Corpus::open(&config.corpus)?;
    let advisories = match &config.advisories {
        Some(path) => {
            let list = load_advisories(path)?;
            match &config.published_before {
                Some(cutoff) => published_before(list, cutoff),
                None => list,
            }
        }
        None => Vec::new(),
    };
    let index = AdvisoryIndex::new(advisories);
    let options = LocOptions::with_exclude_globs(&config.exclude_globs)?;
    let cache = SizeCache::new();

    let mut rows = Vec::new();
    let mut exclusions: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut ingested_versions = 0;
    let mut warnings = Vec::new();
    for name in &corpus.libraries {
        let record = corpus
            .registry
            .get(name)
            .expect("library list checked on open");
        ingested_versions += record.ingested_count();
        warnings.extend(record.warnings.iter().cloned());
        *exclusions.entry("unparseable-version").or_insert(0) += record.warnings.len();
        let t = timeline(&corpus, name, config.exclude_all_prereleases).expect("known package");
        for e in &t.exclusions {
            *exclusions.entry(e.reason.as_str()).or_insert(0) += 1;
        }
        let analyses: Vec<ReleaseAnalysis> = t
            .releases
            .iter()
            .map(|release| {
                analyze_release(&corpus, name, release, config, &index, &options, &cache)
            })
            .collect();
        rows.extend(package_rows(&t, &analyses, config));
    }
    for reason in [
        ExclusionReason::Experimental,
        ExclusionReason::PrereleaseHash,
        ExclusionReason::Prerelease,
        ExclusionReason::Backport,
    ] {
        exclusions.entry(reason.as_str()).or_insert(0);
    }

    let mut bundle = AnalysisBundle {
        config: config.clone(),
        packages: corpus.libraries.len(),
        ingested_versions,
        exclusions,
        warnings,
        regressions: BTreeMap::new(),
        contingency: Vec::new(),
        medians: BTreeMap::new(),
        kde: BTreeMap::new(),
        spearman: Err(StatsError::Empty("spearman")),
        cohens_d: Err(StatsError::Empty("cohens_d")),
        vuln_sources: BTreeMap::new(),
        rows,
    };
    analyze(&mut bundle);
    Ok(bundle)
}

pub fn analyze_release(
    corpus: &Corpus,
    package: &str,
    release: &crate::corpus::VersionRecord,
    config: &AnalysisConfig,
    index: &AdvisoryIndex,
    options: &LocOptions,
    cache: &SizeCache,
) -> ReleaseAnalysis {
    let dependencies = resolve_release(
        package,
        release,
        &corpus.registry,
        config.levels,
        config.policy,
    );
    let size = size_release(
        package,
        release,
        &dependencies,
        &corpus.sources,
        options,
        cache,
    );
    let vulns = crate::vulnmatch::vuln_profile(
        package,
        &release.version,
        &dependencies,
        index,
        config.levels.depth(),
    );
    ReleaseAnalysis {
        package: package.to_string(),
        dependencies,
        size,
        vulns,
    }
}

/// Trans1 columns stay empty at `Levels::Direct`.
fn package_rows(
    t: &ReleaseTimeline,
    analyses: &[ReleaseAnalysis],
    config: &AnalysisConfig,
) -> Vec<ReleaseRow> {
    let with_trans1 = config.levels == Levels::WithTransitive;
    let profiles: Vec<_> = analyses
        .iter()
        .map(|a| {
            let mut p = a.size.profile.clone();
            if config.dedup {
                p.l_trans1 = p.l_trans1_dedup;
            }
            p
        })
        .collect();
    let mut out = Vec::with_capacity(analyses.len());
    for (i, (release, analysis)) in t.releases.iter().zip(analyses).enumerate() {
        let profile = &profiles[i];
        let leverage = LeverageRecord::from_profile(profile, with_trans1).ok();
        let change = |mode| -> Option<ChangeVector> {
            (i > 0).then(|| change_vector(&profiles[i - 1], profile, mode))
        };
        let dir = change(DependencyMode::Dir);
        let trans1 = if with_trans1 {
            change(DependencyMode::DirTrans1)
        } else {
            None
        };
        let interval = (i > 0).then(|| {
            crate::corpus::interval_days(&t.releases[i - 1].published_at, &release.published_at)
        });
        let v = &analysis.vulns;
        out.push(ReleaseRow {
            package: t.package.clone(),
            version: release.version.to_string(),
            published_at: release
                .published_at
                .format("%Y-%m-%dT%H:%M:%SZ")
                .to_string(),
            l_own: profile.l_own,
            l_dir: profile.l_dir,
            l_trans1: profile.l_trans1,
            lambda_dir: leverage.map(|l| l.lambda_dir),
            lambda_dir_trans1: leverage.and_then(|l| l.lambda_dir_trans1),
            rho: dir.map(|c| c.rho),
            theta_deg: dir.and_then(|c| c.theta_deg),
            rho_trans1: trans1.map(|c| c.rho),
            theta_trans1_deg: trans1.and_then(|c| c.theta_deg),
            interval_days: interval,
            own_vulns: v.own_count,
            dir_vulns: v.dir_count,
            trans1_vulns: v.trans1_count,
            is_vulnerable: v.is_vulnerable,
            unresolved_deps: analysis.size.unresolved,
            sizing_gaps: analysis.size.sizing_gaps.len(),
            own_missing: analysis.size.own_missing,
            long_line_files: analysis.size.long_line_files.len(),
        });
    }
    out
}

/// Regression inputs for the pairs whose newer release falls in `group`
/// (all pairs when `group` is `None`). Previous intervals come from the full
/// package timeline.
pub fn pair_observations(
    rows: &[ReleaseRow],
    mode: DependencyMode,
    threshold: u64,
    group: Option<SizeGroup>,
) -> Vec<PairObservation> {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let Some(interval) = row.interval_days else {
            continue;
        };
        if group.is_some_and(|g| row.group(threshold) != g) {
            continue;
        }
        let prev = rows[i - 1]
            .interval_days
            .filter(|_| rows[i - 1].package == row.package);
        let (rho, theta) = row.change(mode);
        out.push(PairObservation {
            interval_days: interval,
            prev_interval_days: prev,
            lambda: row.lambda(mode),
            rho: rho.unwrap_or(0.0),
            theta_deg: theta,
        });
    }
    out
}

fn regression(pairs: &[PairObservation], log_offset: Option<f64>) -> RegressionOutcome {
    let (design, exclusions) = build_design_matrix(pairs, log_offset);
    match fit_ols(&design) {
        Ok(mut fit) => {
            fit.n_excluded = exclusions.total();
            RegressionOutcome::Fitted { fit, exclusions }
        }
        Err(e) => RegressionOutcome::InsufficientRows {
            n_rows: design.len(),
            exclusions,
            reason: e.to_string(),
        },
    }
}

fn analyze(bundle: &mut AnalysisBundle) {
    let threshold = bundle.config.kloc_threshold;
    let rows = &bundle.rows;
    let in_group = |g: SizeGroup| rows.iter().filter(move |r| r.group(threshold) == g);

    for mode in MODES {
        for (label, group) in [
            ("small_medium", Some(SizeGroup::SmallMedium)),
            ("large", Some(SizeGroup::Large)),
            ("global", None),
        ] {
            let pairs = pair_observations(rows, mode, threshold, group);
            bundle
                .regressions
                .insert((label, mode), regression(&pairs, bundle.config.log_offset));
        }
    }

    for group in SizeGroup::ALL {
        for mode in MODES {
            let values: Vec<f64> = in_group(group).filter_map(|r| r.lambda(mode)).collect();
            let median = stats::median(&values).ok();
            bundle.medians.insert((group, mode), median);
            let table = match median {
                Some(m) => ContingencyTable::from_observations(
                    in_group(group).filter_map(|r| r.lambda(mode).map(|l| (l, r.vulnerable(mode)))),
                    m,
                ),
                None => ContingencyTable::default(),
            };
            let (or, haldane) = match odds_ratio(&table) {
                Ok(v) => (Some(v), None),
                Err(StatsError::ZeroCell { haldane }) => (None, Some(haldane)),
                Err(_) => (None, None),
            };
            let fisher = fisher_exact(&table);
            bundle.contingency.push(ContingencyReport {
                group,
                mode,
                threshold: median,
                a: table.a,
                b: table.b,
                c: table.c,
                d: table.d,
                odds_ratio: or,
                odds_ratio_haldane: haldane,
                p_value: fisher.p_value,
                zero_margin: fisher.zero_margin,
            });
        }

        let thetas: Vec<f64> = in_group(group).filter_map(|r| r.theta_deg).collect();
        let kde = GaussianKde::new(&thetas, None).ok().map(|k| {
            let grid = stats::angle_grid();
            let density = k.evaluate(&grid);
            KdeCurve {
                bandwidth: k.bandwidth(),
                points: grid.into_iter().zip(density).collect(),
            }
        });
        bundle.kde.insert(group, kde);

        let dir_median = bundle.medians[&(group, DependencyMode::Dir)];
        for r in in_group(group) {
            let class = match (r.lambda_dir, dir_median) {
                (Some(l), Some(m)) if l > m => "high",
                (Some(_), Some(_)) => "low",
                _ => continue,
            };
            let s = bundle.vuln_sources.entry((group, class)).or_default();
            s.releases += 1;
            s.own += r.own_vulns;
            s.dir += r.dir_vulns;
            s.trans1 += r.trans1_vulns;
        }
    }

    let (lambdas, owns): (Vec<f64>, Vec<f64>) = rows
        .iter()
        .filter_map(|r| r.lambda_dir.map(|l| (l, r.l_own as f64)))
        .unzip();
    bundle.spearman = spearman(&lambdas, &owns);
    let group_lambdas = |g| {
        in_group(g)
            .filter_map(|r| r.lambda_dir)
            .collect::<Vec<f64>>()
    };
    bundle.cohens_d = cohens_d(
        &group_lambdas(SizeGroup::SmallMedium),
        &group_lambdas(SizeGroup::Large),
    );
}

impl AnalysisBundle {
    /// Rows plus every filtered or skipped version.
    pub fn accounted_versions(&self) -> usize {
        self.rows.len() + self.exclusions.values().sum::<usize>()
    }

    pub fn summary(&self) -> Value {
        let threshold = self.config.kloc_threshold;
        let mut groups = serde_json::Map::new();
        for group in SizeGroup::ALL {
            let count = self
                .rows
                .iter()
                .filter(|r| r.group(threshold) == group)
                .count();
            let mut sources = serde_json::Map::new();
            for class in ["high", "low"] {
                let s = self
                    .vuln_sources
                    .get(&(group, class))
                    .copied()
                    .unwrap_or_default();
                sources.insert(class.into(), json!(s));
            }
            groups.insert(
                group.as_str().into(),
                json!({
                    "releases": count,
                    "median_lambda_dir": self.medians[&(group, DependencyMode::Dir)],
                    "median_lambda_dir_trans1": self.medians[&(group, DependencyMode::DirTrans1)],
                    "vulnerability_sources": sources,
                }),
            );
        }
        let outcome = |r: &Result<Value, StatsError>| match r {
            Ok(v) => v.clone(),
            Err(e) => json!({ "error": e.to_string() }),
        };
        json!({
            "schema_version": SCHEMA_VERSION,
            "config": self.config,
            "counts": {
                "packages": self.packages,
                "ingested_versions": self.ingested_versions,
                "releases": self.rows.len(),
                "exclusions": self.exclusions,
            },
            "groups": groups,
            "spearman_lambda_dir_vs_l_own": outcome(&self.spearman.clone().map(|s| json!(s))),
            "cohens_d_lambda_dir_small_medium_vs_large": outcome(&self.cohens_d.clone().map(|d| json!(d))),
            "warnings": self.warnings,
        })
    }
}

fn write_file(path: &Path, contents: &[u8]) -> Result<(), PipelineError> {
    fs::write(path, contents).map_err(|source| PipelineError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn to_json(value: &impl Serialize) -> Vec<u8> {
    let mut text = serde_json::to_string_pretty(value).expect("report values serialize");
    text.push('\n');
    text.into_bytes()
}

pub fn releases_csv(rows: &[ReleaseRow]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        // Headers normally come from the first record.
        w.write_record(RELEASE_COLUMNS).expect("in-memory write");
    }
    for row in rows {
        w.serialize(row).expect("in-memory write");
    }
    w.into_inner().expect("in-memory write")
}

pub const RELEASE_COLUMNS: [&str; 21] = [
    "package",
    "version",
    "published_at",
    "l_own",
    "l_dir",
    "l_trans1",
    "lambda_dir",
    "lambda_dir_trans1",
    "rho",
    "theta_deg",
    "rho_trans1",
    "theta_trans1_deg",
    "interval_days",
    "own_vulns",
    "dir_vulns",
    "trans1_vulns",
    "is_vulnerable",
    "unresolved_deps",
    "sizing_gaps",
    "own_missing",
    "long_line_files",
];

/// Write every report file into `out_dir`, creating it if needed. Returns
/// the file names written, sorted.
pub fn emit_reports(
    bundle: &AnalysisBundle,
    out_dir: impl AsRef<Path>,
) -> Result<Vec<String>, PipelineError> {
    let out_dir = out_dir.as_ref();
    fs::create_dir_all(out_dir).map_err(|source| PipelineError::Write {
        path: out_dir.display().to_string(),
        source,
    })?;
    let mut files: BTreeMap<String, Vec<u8>> = BTreeMap::new();
    files.insert("releases.csv".into(), releases_csv(&bundle.rows));

    for label in ["small_medium", "large", "global"] {
        let mut doc = serde_json::Map::new();
        doc.insert("group".into(), json!(label));
        for mode in MODES {
            doc.insert(
                mode.as_str().into(),
                json!(bundle.regressions[&(label, mode)]),
            );
        }
        files.insert(format!("regression_{label}.json"), to_json(&doc));
    }

    for report in &bundle.contingency {
        files.insert(
            format!(
                "contingency_{}_{}.json",
                report.group.as_str(),
                report.mode.as_str()
            ),
            to_json(report),
        );
    }

    for (group, kde) in &bundle.kde {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["theta_deg", "density"])
            .expect("in-memory write");
        if let Some(curve) = kde {
            for (x, y) in &curve.points {
                w.write_record([x.to_string(), y.to_string()])
                    .expect("in-memory write");
            }
        }
        files.insert(
            format!("kde_{}.csv", group.as_str()),
            w.into_inner().expect("in-memory write"),
        );
    }

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["package", "version", "l_own", "lambda_dir", "group"])
        .expect("in-memory write");
    for r in &bundle.rows {
        let lambda = r.lambda_dir.map(|l| l.to_string()).unwrap_or_default();
        let group = r.group(bundle.config.kloc_threshold).as_str();
        w.write_record([
            r.package.as_str(),
            &r.version,
            &r.l_own.to_string(),
            &lambda,
            group,
        ])
        .expect("in-memory write");
    }
    files.insert(
        "scatter_leverage_vs_own.csv".into(),
        w.into_inner().expect("in-memory write"),
    );

    files.insert("summary.json".into(), to_json(&bundle.summary()));

    for (name, contents) in &files {
        write_file(&out_dir.join(name), contents)?;
    }
    Ok(files.into_keys().collect())
}
