//! Time-aware resolution of dependency specs.
//!
//! A spec is resolved the way it would have been on the day the root release
//! was published: only versions published at or before that instant are
//! candidates. The default policy walks the dependency's history in publish
//! order and keeps the last satisfying version it sees.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::{Registry, Timestamp, VersionRecord};
use crate::semver::{parse_range, satisfies, SemverError, Version};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResolutionPolicy {
    /// The latest-published satisfying version.
    #[default]
    LatestPublished,
    /// The satisfying version of highest precedence, as npm would pick.
    HighestSemver,
}

impl std::str::FromStr for ResolutionPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "latest-published" | "publish-order" => Ok(ResolutionPolicy::LatestPublished),
            "highest-semver" => Ok(ResolutionPolicy::HighestSemver),
            other => Err(format!("unknown resolver policy {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Unresolved {
    UnknownPackage,
    NoSatisfyingVersion,
    UnsupportedSpec,
    InvalidSpec,
}

impl Unresolved {
    pub fn as_str(self) -> &'static str {
        match self {
            Unresolved::UnknownPackage => "unknown-package",
            Unresolved::NoSatisfyingVersion => "no-satisfying-version",
            Unresolved::UnsupportedSpec => "unsupported-spec",
            Unresolved::InvalidSpec => "invalid-spec",
        }
    }
}

impl fmt::Display for Unresolved {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub type Resolution = Result<Version, Unresolved>;

/// Resolve `name@spec` against the registry as of `as_of`.
pub fn resolve_spec(
    name: &str,
    spec: &str,
    as_of: &Timestamp,
    registry: &Registry,
    policy: ResolutionPolicy,
) -> Resolution {
    resolve_record(name, spec, as_of, registry, policy).map(|r| r.version.clone())
}

fn resolve_record<'r>(
    name: &str,
    spec: &str,
    as_of: &Timestamp,
    registry: &'r Registry,
    policy: ResolutionPolicy,
) -> Result<&'r VersionRecord, Unresolved> {
    // npm reads an empty dependency spec as "*".
    let spec = if spec.trim().is_empty() { "*" } else { spec };
    let range = parse_range(spec).map_err(|e| match e {
        SemverError::UnsupportedSpec(_) => Unresolved::UnsupportedSpec,
        SemverError::Parse { .. } => Unresolved::InvalidSpec,
    })?;
    let package = registry.get(name).ok_or(Unresolved::UnknownPackage)?;
    let available = package
        .publish_order()
        .into_iter()
        .take_while(|r| r.published_at <= *as_of)
        .filter(|r| satisfies(&r.version, &range));
    let chosen = match policy {
        ResolutionPolicy::LatestPublished => available.last(),
        ResolutionPolicy::HighestSemver => available.max_by(|a, b| a.version.cmp(&b.version)),
    };
    chosen.ok_or(Unresolved::NoSatisfyingVersion)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedDependency {
    pub name: String,
    pub spec: String,
    pub resolved: Resolution,
    /// 1 for direct dependencies, 2 for dependencies of a direct dependency.
    pub depth: u8,
    /// The depth-1 dependency that declared this entry; `None` at depth 1.
    pub parent: Option<String>,
    /// A depth-2 entry whose (name, version) already appears earlier in the
    /// set. Kept, but flagged so deduplicated totals can be reported.
    pub duplicate: bool,
}

impl ResolvedDependency {
    pub fn version(&self) -> Option<&Version> {
        self.resolved.as_ref().ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencySet {
    pub root: (String, Version),
    pub as_of: Timestamp,
    pub entries: Vec<ResolvedDependency>,
}

impl DependencySet {
    pub fn at_depth(&self, depth: u8) -> impl Iterator<Item = &ResolvedDependency> {
        self.entries.iter().filter(move |e| e.depth == depth)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &ResolvedDependency> {
        self.entries.iter().filter(|e| e.resolved.is_err())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Levels {
    Direct = 1,
    WithTransitive = 2,
}

impl Levels {
    pub fn depth(self) -> u8 {
        self as u8
    }
}

impl TryFrom<u8> for Levels {
    type Error = String;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        match value {
            1 => Ok(Levels::Direct),
            2 => Ok(Levels::WithTransitive),
            other => Err(format!("levels must be 1 or 2, got {other}")),
        }
    }
}

/// Resolve a root release's direct specs and, with
/// [`Levels::WithTransitive`], the specs of each resolved direct dependency.
/// Every entry is resolved as of the root's publish time.
pub fn resolve_release(
    root_name: &str,
    release: &VersionRecord,
    registry: &Registry,
    levels: Levels,
    policy: ResolutionPolicy,
) -> DependencySet {
    let as_of = release.published_at;
    let mut entries = Vec::new();
    let mut second = Vec::new();

    for (name, spec) in &release.dependency_specs {
        let found = resolve_record(name, spec, &as_of, registry, policy);
        if let (Levels::WithTransitive, Ok(dep)) = (levels, &found) {
            for (child, child_spec) in &dep.dependency_specs {
                second.push(ResolvedDependency {
                    name: child.clone(),
                    spec: child_spec.clone(),
                    resolved: resolve_spec(child, child_spec, &as_of, registry, policy),
                    depth: 2,
                    parent: Some(name.clone()),
                    duplicate: false,
                });
            }
        }
        entries.push(ResolvedDependency {
            name: name.clone(),
            spec: spec.clone(),
            resolved: found.map(|r| r.version.clone()),
            depth: 1,
            parent: None,
            duplicate: false,
        });
    }

    // dependency_specs is a BTreeMap, so both lists are already ordered by
    // (parent, name); only the concatenation order needs to be fixed.
    second.sort_by(|a, b| a.parent.cmp(&b.parent).then_with(|| a.name.cmp(&b.name)));
    let mut seen: HashSet<(String, Version)> = entries
        .iter()
        .filter_map(|e| e.version().map(|v| (e.name.clone(), v.clone())))
        .collect();
    for entry in &mut second {
        if let Some(v) = entry.version() {
            entry.duplicate = !seen.insert((entry.name.clone(), v.clone()));
        }
    }
    entries.extend(second);

    DependencySet {
        root: (root_name.to_string(), release.version.clone()),
        as_of,
        entries,
    }
}
