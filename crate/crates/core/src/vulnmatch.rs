//! Advisory snapshots and per-release vulnerability exposure.
//!
//! The snapshot is either a CSV file with the header
//! `id,package,affected_range,severity,published_at,title` or a JSON array
//! of objects with the same keys. A `.json` extension selects JSON.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::{parse_timestamp, Timestamp};
use crate::resolver::DependencySet;
use crate::semver::{parse_range, satisfies, RangeExpr, Version};

pub const CSV_HEADER: [&str; 6] = [
    "id",
    "package",
    "affected_range",
    "severity",
    "published_at",
    "title",
];

#[derive(Debug, thiserror::Error)]
pub enum AdvisoryError {
    #[error("advisory file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("advisory record at line {line}: {message}")]
    Record { line: u64, message: String },
    #[error("duplicate advisory id {id} at line {line}")]
    DuplicateId { id: String, line: u64 },
    #[error("advisory CSV header must be {expected:?}, found {found:?}")]
    Header { expected: String, found: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Low,
    Medium,
    High,
}

impl Severity {
    pub const ALL: [Severity; 3] = [Severity::Low, Severity::Medium, Severity::High];

    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Low => "low",
            Severity::Medium => "medium",
            Severity::High => "high",
        }
    }
}

impl FromStr for Severity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "low" => Ok(Severity::Low),
            "medium" => Ok(Severity::Medium),
            "high" => Ok(Severity::High),
            other => Err(format!(
                "unknown severity {other:?} (expected low, medium or high)"
            )),
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Advisory {
    pub id: String,
    pub package: String,
    pub affected_range: String,
    pub range: RangeExpr,
    pub severity: Severity,
    pub published_at: Timestamp,
    pub title: String,
}

/// One snapshot row before validation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdvisoryRow {
    pub id: String,
    pub package: String,
    pub affected_range: String,
    pub severity: String,
    pub published_at: String,
    #[serde(default)]
    pub title: String,
}

impl AdvisoryRow {
    pub fn validate(self, line: u64) -> Result<Advisory, AdvisoryError> {
        let record = |message: String| AdvisoryError::Record { line, message };
        if self.id.trim().is_empty() {
            return Err(record("empty id".into()));
        }
        let range = parse_range(&self.affected_range).map_err(|e| record(e.to_string()))?;
        let severity = self.severity.parse().map_err(record)?;
        let published_at = parse_timestamp(&self.published_at)
            .ok_or_else(|| record(format!("bad published_at {:?}", self.published_at)))?;
        Ok(Advisory {
            id: self.id,
            package: self.package,
            affected_range: self.affected_range,
            range,
            severity,
            published_at,
            title: self.title,
        })
    }
}

fn check_unique(rows: Vec<(u64, AdvisoryRow)>) -> Result<Vec<Advisory>, AdvisoryError> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(rows.len());
    for (line, row) in rows {
        if !seen.insert(row.id.clone()) {
            return Err(AdvisoryError::DuplicateId { id: row.id, line });
        }
        out.push(row.validate(line)?);
    }
    Ok(out)
}

pub fn parse_advisories_csv(text: &str) -> Result<Vec<Advisory>, AdvisoryError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| AdvisoryError::Record {
            line: 1,
            message: e.to_string(),
        })?
        .clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(AdvisoryError::Header {
            expected: CSV_HEADER.join(","),
            found: header.iter().collect::<Vec<_>>().join(","),
        });
    }
    let mut rows = Vec::new();
    for result in reader.deserialize::<AdvisoryRow>() {
        let row = result.map_err(|e| AdvisoryError::Record {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        // +1: header occupies line 1, and position is only known per error.
        rows.push((rows.len() as u64 + 2, row));
    }
    check_unique(rows)
}

pub fn parse_advisories_json(text: &str) -> Result<Vec<Advisory>, AdvisoryError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let rows: Vec<AdvisoryRow> = serde_json::from_str(text).map_err(|e| AdvisoryError::Record {
        line: e.line() as u64,
        message: e.to_string(),
    })?;
    // For JSON the "line" is the 1-based array index.
    check_unique(
        rows.into_iter()
            .enumerate()
            .map(|(i, r)| (i as u64 + 1, r))
            .collect(),
    )
}

pub fn load_advisories(path: impl AsRef<Path>) -> Result<Vec<Advisory>, AdvisoryError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| AdvisoryError::Io {
        path: path.display().to_string(),
        source,
    })?;
    if path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
    {
        parse_advisories_json(&text)
    } else {
        parse_advisories_csv(&text)
    }
}

/// Keep only advisories published strictly before `cutoff`.
pub fn published_before(advisories: Vec<Advisory>, cutoff: &Timestamp) -> Vec<Advisory> {
    advisories
        .into_iter()
        .filter(|a| a.published_at < *cutoff)
        .collect()
}

pub fn affects(advisory: &Advisory, package: &str, version: &Version) -> bool {
    advisory.package == package && satisfies(version, &advisory.range)
}

/// Advisories grouped by package name for fast lookup.
#[derive(Debug, Clone, Default)]
pub struct AdvisoryIndex {
    by_package: HashMap<String, Vec<Advisory>>,
    len: usize,
}

impl AdvisoryIndex {
    pub fn new(advisories: impl IntoIterator<Item = Advisory>) -> Self {
        let mut by_package: HashMap<String, Vec<Advisory>> = HashMap::new();
        let mut len = 0;
        for a in advisories {
            len += 1;
            by_package.entry(a.package.clone()).or_default().push(a);
        }
        AdvisoryIndex { by_package, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn matching<'a>(
        &'a self,
        package: &'a str,
        version: &'a Version,
    ) -> impl Iterator<Item = &'a Advisory> + 'a {
        self.by_package
            .get(package)
            .into_iter()
            .flatten()
            .filter(move |a| affects(a, package, version))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VulnProfile {
    pub own_count: usize,
    pub dir_count: usize,
    /// Zero unless the profile was computed with depth mode 2.
    pub trans1_count: usize,
    pub by_severity: BTreeMap<Severity, usize>,
    /// Distinct advisory ids behind the counts.
    pub distinct_advisories: usize,
    pub is_vulnerable: bool,
}

impl VulnProfile {
    pub fn total(&self) -> usize {
        self.own_count + self.dir_count + self.trans1_count
    }
}

/// Count advisories hitting the root release and its resolved dependencies.
/// Every dependency entry counts separately, even when the same package
/// version appears twice.
pub fn vuln_profile(
    package: &str,
    version: &Version,
    deps: &DependencySet,
    advisories: &AdvisoryIndex,
    depth_mode: u8,
) -> VulnProfile {
    let mut profile = VulnProfile::default();
    let mut ids: BTreeSet<String> = BTreeSet::new();
    let mut tally = |a: &Advisory, slot: &mut usize, by_sev: &mut BTreeMap<Severity, usize>| {
        *slot += 1;
        *by_sev.entry(a.severity).or_insert(0) += 1;
        ids.insert(a.id.clone());
    };
    for a in advisories.matching(package, version) {
        tally(a, &mut profile.own_count, &mut profile.by_severity);
    }
    for entry in &deps.entries {
        if entry.depth > depth_mode {
            continue;
        }
        let Some(v) = entry.version() else { continue };
        for a in advisories.matching(&entry.name, v) {
            let slot = if entry.depth == 1 {
                &mut profile.dir_count
            } else {
                &mut profile.trans1_count
            };
            tally(a, slot, &mut profile.by_severity);
        }
    }
    profile.distinct_advisories = ids.len();
    profile.is_vulnerable = profile.total() >= 1;
    profile
}
