//! Package release histories, the release filters, and the on-disk corpus.
//!
//! A corpus directory holds one npm-registry-shaped JSON document per package
//! (`<anything>.json`, identified by its `name` field) and a
//! `sources/<name>/<version>/` tree for every release that gets sized.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use chrono::{DateTime, NaiveDate, SubsecRound, Utc};
use serde::{Deserialize, Serialize};

use crate::semver::{parse_version, Version};

pub type Timestamp = DateTime<Utc>;

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("package {package}: version {version} has no entry in the time table")]
    MissingTime { package: String, version: String },
    #[error("package {package}: version {version} has unparseable timestamp {value:?}")]
    BadTime {
        package: String,
        version: String,
        value: String,
    },
    #[error("registry document has an empty name")]
    EmptyName,
    #[error("duplicate package {0} in corpus")]
    DuplicatePackage(String),
    #[error("malformed registry document {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("corpus directory {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("corpus at {0} contains no packages")]
    Empty(String),
    #[error("libraries.txt names unknown package {0}")]
    UnknownLibrary(String),
}

/// The abbreviated npm registry document. Fields other than `name`,
/// `versions[*].dependencies` and `time` are ignored.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct RegistryDocument {
    pub name: String,
    #[serde(default)]
    pub versions: BTreeMap<String, VersionManifest>,
    #[serde(default)]
    pub time: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct VersionManifest {
    #[serde(default)]
    pub dependencies: BTreeMap<String, String>,
    #[serde(
        default,
        rename = "devDependencies",
        skip_serializing_if = "BTreeMap::is_empty"
    )]
    pub dev_dependencies: BTreeMap<String, String>,
    #[serde(
        default,
        rename = "peerDependencies",
        skip_serializing_if = "BTreeMap::is_empty"
    )]
    pub peer_dependencies: BTreeMap<String, String>,
    #[serde(
        default,
        rename = "optionalDependencies",
        skip_serializing_if = "BTreeMap::is_empty"
    )]
    pub optional_dependencies: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VersionRecord {
    pub version: Version,
    /// Publish time, truncated to whole seconds.
    pub published_at: Timestamp,
    /// Runtime dependencies only.
    pub dependency_specs: BTreeMap<String, String>,
    pub source_root: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct PackageRecord {
    pub name: String,
    /// Keyed by the version text as it appeared in the registry document.
    pub versions: BTreeMap<String, VersionRecord>,
    /// Version keys that failed to parse and were skipped.
    pub warnings: Vec<String>,
}

impl PackageRecord {
    /// Versions sorted by publish time, ties broken by ascending precedence.
    pub fn publish_order(&self) -> Vec<&VersionRecord> {
        let mut out: Vec<&VersionRecord> = self.versions.values().collect();
        out.sort_by(|a, b| {
            a.published_at
                .cmp(&b.published_at)
                .then_with(|| a.version.cmp(&b.version))
        });
        out
    }

    pub fn find(&self, version: &Version) -> Option<&VersionRecord> {
        self.versions.values().find(|r| &r.version == version)
    }

    /// Number of versions present in the registry document, including the
    /// ones skipped for unparseable keys.
    pub fn ingested_count(&self) -> usize {
        self.versions.len() + self.warnings.len()
    }
}

/// Parse an ISO-8601 timestamp. Date-only values are read as midnight UTC.
pub fn parse_timestamp(text: &str) -> Option<Timestamp> {
    if let Ok(t) = DateTime::parse_from_rfc3339(text) {
        return Some(t.with_timezone(&Utc).trunc_subsecs(0));
    }
    NaiveDate::parse_from_str(text, "%Y-%m-%d")
        .ok()
        .and_then(|d| d.and_hms_opt(0, 0, 0))
        .map(|dt| dt.and_utc())
}

pub fn load_registry_doc(document: &RegistryDocument) -> Result<PackageRecord, CorpusError> {
    if document.name.is_empty() {
        return Err(CorpusError::EmptyName);
    }
    let mut versions = BTreeMap::new();
    let mut warnings = Vec::new();
    for (key, manifest) in &document.versions {
        let version = match parse_version(key) {
            Ok(v) => v,
            Err(e) => {
                warnings.push(format!("{}: skipped version {key:?}: {e}", document.name));
                continue;
            }
        };
        let raw_time = document
            .time
            .get(key)
            .ok_or_else(|| CorpusError::MissingTime {
                package: document.name.clone(),
                version: key.clone(),
            })?;
        let published_at = parse_timestamp(raw_time).ok_or_else(|| CorpusError::BadTime {
            package: document.name.clone(),
            version: key.clone(),
            value: raw_time.clone(),
        })?;
        versions.insert(
            key.clone(),
            VersionRecord {
                version,
                published_at,
                dependency_specs: manifest.dependencies.clone(),
                source_root: None,
            },
        );
    }
    Ok(PackageRecord {
        name: document.name.clone(),
        versions,
        warnings,
    })
}

pub fn load_registry_json(text: &str) -> Result<PackageRecord, CorpusError> {
    let doc: RegistryDocument = serde_json::from_str(text).map_err(|source| CorpusError::Json {
        path: "<inline>".into(),
        source,
    })?;
    load_registry_doc(&doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExclusionReason {
    Experimental,
    PrereleaseHash,
    Prerelease,
    Backport,
}

impl ExclusionReason {
    pub fn as_str(self) -> &'static str {
        match self {
            ExclusionReason::Experimental => "experimental",
            ExclusionReason::PrereleaseHash => "prerelease-hash",
            ExclusionReason::Prerelease => "prerelease",
            ExclusionReason::Backport => "backport",
        }
    }
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Exclusion {
    pub version: Version,
    pub reason: ExclusionReason,
}

/// A package's releases in publish order, with a record of everything the
/// filters removed.
#[derive(Debug, Clone)]
pub struct ReleaseTimeline {
    pub package: String,
    pub releases: Vec<VersionRecord>,
    pub exclusions: Vec<Exclusion>,
}

fn is_commit_hash(text: &str) -> bool {
    (7..=40).contains(&text.len()) && text.bytes().all(|b| b.is_ascii_hexdigit())
}

impl ReleaseTimeline {
    pub fn from_package(package: &PackageRecord) -> Self {
        ReleaseTimeline {
            package: package.name.clone(),
            releases: package.publish_order().into_iter().cloned().collect(),
            exclusions: Vec::new(),
        }
    }

    fn partition(
        mut self,
        mut reason_for: impl FnMut(&VersionRecord) -> Option<ExclusionReason>,
    ) -> Self {
        let mut kept = Vec::with_capacity(self.releases.len());
        for release in self.releases {
            match reason_for(&release) {
                Some(reason) => self.exclusions.push(Exclusion {
                    version: release.version.clone(),
                    reason,
                }),
                None => kept.push(release),
            }
        }
        self.releases = kept;
        self
    }

    /// Drops prereleases tagged `experimental` and bare commit-hash
    /// prereleases such as `0.0.0-d364d8555`.
    pub fn filter_experimental(self) -> Self {
        self.partition(|r| {
            if !r.version.is_prerelease() {
                return None;
            }
            let pre = r.version.prerelease_text();
            if pre.to_ascii_lowercase().contains("experimental") {
                Some(ExclusionReason::Experimental)
            } else if is_commit_hash(&pre) {
                Some(ExclusionReason::PrereleaseHash)
            } else {
                None
            }
        })
    }

    /// Drops every remaining prerelease.
    pub fn filter_all_prereleases(self) -> Self {
        self.partition(|r| {
            r.version
                .is_prerelease()
                .then_some(ExclusionReason::Prerelease)
        })
    }

    /// Drops every release published after a release of strictly greater
    /// precedence.
    pub fn filter_backports(self) -> Self {
        let mut highest: Option<Version> = None;
        self.partition(|r| {
            if highest.as_ref().is_some_and(|h| *h > r.version) {
                return Some(ExclusionReason::Backport);
            }
            highest = Some(r.version.clone());
            None
        })
    }

    /// Consecutive release pairs in publish order.
    pub fn release_pairs(&self) -> Vec<ReleasePair<'_>> {
        self.releases
            .windows(2)
            .map(|w| ReleasePair {
                previous: &w[0],
                current: &w[1],
                interval_days: interval_days(&w[0].published_at, &w[1].published_at),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReleasePair<'a> {
    pub previous: &'a VersionRecord,
    pub current: &'a VersionRecord,
    pub interval_days: f64,
}

pub fn interval_days(from: &Timestamp, to: &Timestamp) -> f64 {
    (*to - *from).num_seconds() as f64 / 86_400.0
}

/// Every package document of a corpus, keyed by package name.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    packages: BTreeMap<String, PackageRecord>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, package: PackageRecord) -> Result<(), CorpusError> {
        if self.packages.contains_key(&package.name) {
            return Err(CorpusError::DuplicatePackage(package.name));
        }
        self.packages.insert(package.name.clone(), package);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&PackageRecord> {
        self.packages.get(name)
    }

    pub fn packages(&self) -> impl Iterator<Item = &PackageRecord> {
        self.packages.values()
    }

    pub fn len(&self) -> usize {
        self.packages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.packages.is_empty()
    }
}

impl FromIterator<PackageRecord> for Registry {
    /// Later duplicates replace earlier ones.
    fn from_iter<I: IntoIterator<Item = PackageRecord>>(iter: I) -> Self {
        Registry {
            packages: iter.into_iter().map(|p| (p.name.clone(), p)).collect(),
        }
    }
}

/// Where unpacked source trees live: `<root>/<name>/<version>/`.
#[derive(Debug, Clone)]
pub struct SourceLayout {
    root: PathBuf,
}

impl SourceLayout {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        SourceLayout { root: root.into() }
    }

    pub fn tree(&self, package: &str, version: &Version) -> PathBuf {
        let mut path = self.root.clone();
        for segment in package.split('/') {
            path.push(segment);
        }
        path.push(version.to_string());
        path
    }

    /// The tree, if it exists on disk.
    pub fn existing_tree(&self, package: &str, version: &Version) -> Option<PathBuf> {
        let path = self.tree(package, version);
        path.is_dir().then_some(path)
    }
}

/// A corpus directory loaded into memory.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub root: PathBuf,
    pub registry: Registry,
    pub sources: SourceLayout,
    /// The packages whose releases are analyzed. Taken from `libraries.txt`
    /// when present, otherwise every package in the corpus.
    pub libraries: Vec<String>,
}

impl Corpus {
    pub fn open(root: impl AsRef<Path>) -> Result<Self, CorpusError> {
        let root = root.as_ref().to_path_buf();
        let io_err = |source| CorpusError::Io {
            path: root.display().to_string(),
            source,
        };
        let mut docs: Vec<PathBuf> = fs::read_dir(&root)
            .map_err(io_err)?
            .filter_map(Result::ok)
            .map(|e| e.path())
            .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "json"))
            .collect();
        docs.sort();

        let sources = SourceLayout::new(root.join("sources"));
        let mut registry = Registry::new();
        for path in docs {
            let text = fs::read_to_string(&path).map_err(|source| CorpusError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let doc: RegistryDocument =
                serde_json::from_str(&text).map_err(|source| CorpusError::Json {
                    path: path.display().to_string(),
                    source,
                })?;
            let mut package = load_registry_doc(&doc)?;
            for record in package.versions.values_mut() {
                record.source_root = sources.existing_tree(&doc.name, &record.version);
            }
            registry.insert(package)?;
        }
        if registry.is_empty() {
            return Err(CorpusError::Empty(root.display().to_string()));
        }

        let list = root.join("libraries.txt");
        let libraries = if list.is_file() {
            let text = fs::read_to_string(&list).map_err(|source| CorpusError::Io {
                path: list.display().to_string(),
                source,
            })?;
            let mut names: Vec<String> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(str::to_string)
                .collect();
            names.sort();
            names.dedup();
            if let Some(missing) = names.iter().find(|n| registry.get(n).is_none()) {
                return Err(CorpusError::UnknownLibrary(missing.clone()));
            }
            names
        } else {
            registry.packages().map(|p| p.name.clone()).collect()
        };

        Ok(Corpus {
            root,
            registry,
            sources,
            libraries,
        })
    }
}
