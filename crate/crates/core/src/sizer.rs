//! JavaScript line counting and per-release size profiles.
//!
//! A line is code when something other than whitespace survives comment
//! stripping. `//` and `/* */` comments are recognized outside of single,
//! double and backtick quoted strings. Regex literals are not lexed, so a
//! comment marker inside one is stripped like any other.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Component, Path, PathBuf};
use std::sync::Mutex;

use globset::{Glob, GlobSet, GlobSetBuilder};
use serde::Serialize;

use crate::corpus::{SourceLayout, VersionRecord};
use crate::resolver::DependencySet;
use crate::semver::Version;

/// Lines longer than this mark a file as a probable minified bundle.
pub const LONG_LINE_CHARS: usize = 5_000;

const JS_EXTENSIONS: [&str; 3] = ["js", "mjs", "cjs"];
const TEST_DIRS: [&str; 6] = ["test", "tests", "testing", "__test__", "__tests__", "spec"];

#[derive(Debug, thiserror::Error)]
pub enum SizeError {
    #[error("source tree {0} does not exist")]
    MissingRoot(PathBuf),
    #[error("invalid exclude glob {glob:?}: {message}")]
    BadGlob { glob: String, message: String },
}

fn js_stem(name: &str) -> Option<&str> {
    let (stem, ext) = name.rsplit_once('.')?;
    JS_EXTENSIONS.contains(&ext).then_some(stem)
}

/// Whether a path (relative to the package root) is test code.
pub fn is_test_path(path: impl AsRef<Path>) -> bool {
    let segments: Vec<String> = path
        .as_ref()
        .components()
        .filter_map(|c| match c {
            Component::Normal(s) => Some(s.to_string_lossy().to_lowercase()),
            _ => None,
        })
        .collect();
    if segments.iter().any(|s| TEST_DIRS.contains(&s.as_str())) {
        return true;
    }
    let Some(stem) = segments.last().and_then(|name| js_stem(name)) else {
        return false;
    };
    matches!(stem, "test" | "tests" | "testing")
        || stem.starts_with("test-")
        || stem.ends_with("-test")
        || stem.ends_with(".spec")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Lex {
    Code,
    Block,
    Quoted(char),
}

/// Count code lines in JavaScript text. Also returns whether any line
/// exceeds [`LONG_LINE_CHARS`].
pub fn count_source_lines(text: &str) -> (u64, bool) {
    let mut state = Lex::Code;
    let mut loc = 0;
    let mut long = false;
    for line in text.lines() {
        long |= line.chars().count() > LONG_LINE_CHARS;
        let mut has_code = false;
        let mut chars = line.chars().peekable();
        while let Some(c) = chars.next() {
            match state {
                Lex::Block => {
                    if c == '*' && chars.peek() == Some(&'/') {
                        chars.next();
                        state = Lex::Code;
                    }
                }
                Lex::Quoted(q) => {
                    has_code |= !c.is_whitespace();
                    if c == '\\' {
                        chars.next();
                    } else if c == q {
                        state = Lex::Code;
                    }
                }
                Lex::Code => match c {
                    '/' if chars.peek() == Some(&'/') => break,
                    '/' if chars.peek() == Some(&'*') => {
                        chars.next();
                        state = Lex::Block;
                    }
                    '"' | '\'' | '`' => {
                        has_code = true;
                        state = Lex::Quoted(c);
                    }
                    c if !c.is_whitespace() => has_code = true,
                    _ => {}
                },
            }
        }
        // Plain string literals cannot span lines.
        if matches!(state, Lex::Quoted('"' | '\'')) {
            state = Lex::Code;
        }
        if has_code {
            loc += 1;
        }
    }
    (loc, long)
}

#[derive(Debug, Clone, Default)]
pub struct LocOptions {
    exclude: Option<GlobSet>,
}

impl LocOptions {
    /// Extra exclusions, matched against paths relative to the package root.
    pub fn with_exclude_globs<S: AsRef<str>>(globs: &[S]) -> Result<Self, SizeError> {
        if globs.is_empty() {
            return Ok(Self::default());
        }
        let mut builder = GlobSetBuilder::new();
        for g in globs {
            let glob = Glob::new(g.as_ref()).map_err(|e| SizeError::BadGlob {
                glob: g.as_ref().to_string(),
                message: e.to_string(),
            })?;
            builder.add(glob);
        }
        let set = builder.build().map_err(|e| SizeError::BadGlob {
            glob: String::new(),
            message: e.to_string(),
        })?;
        Ok(LocOptions { exclude: Some(set) })
    }

    fn excluded(&self, rel: &Path) -> bool {
        self.exclude.as_ref().is_some_and(|g| g.is_match(rel))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LocCount {
    pub loc: u64,
    pub files_counted: u64,
    /// Relative paths of the counted files, sorted.
    pub files: Vec<String>,
    /// Counted files (relative paths) with at least one very long line.
    pub long_line_files: Vec<String>,
    pub warnings: Vec<String>,
}

pub fn count_js_loc(root: impl AsRef<Path>, options: &LocOptions) -> Result<LocCount, SizeError> {
    count_js_loc_with_order(root, options, |entries| entries.sort())
}

/// [`count_js_loc`] with caller-controlled directory iteration order. The
/// result never depends on `reorder`.
pub fn count_js_loc_with_order(
    root: impl AsRef<Path>,
    options: &LocOptions,
    mut reorder: impl FnMut(&mut Vec<PathBuf>),
) -> Result<LocCount, SizeError> {
    let root = root.as_ref();
    if !root.is_dir() {
        return Err(SizeError::MissingRoot(root.to_path_buf()));
    }
    let mut count = LocCount::default();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        let mut entries: Vec<PathBuf> = match fs::read_dir(&dir) {
            Ok(rd) => rd.filter_map(Result::ok).map(|e| e.path()).collect(),
            Err(e) => {
                count.warnings.push(format!("{}: {e}", dir.display()));
                continue;
            }
        };
        reorder(&mut entries);
        for path in entries {
            let rel = path.strip_prefix(root).unwrap_or(&path);
            let name = path.file_name().map(|n| n.to_string_lossy().to_lowercase());
            if path.is_dir() {
                if name.as_deref() == Some("node_modules") {
                    continue;
                }
                stack.push(path);
                continue;
            }
            let Some(name) = name else { continue };
            if js_stem(&name).is_none() || is_test_path(rel) || options.excluded(rel) {
                continue;
            }
            match fs::read(&path) {
                Ok(bytes) => {
                    let (loc, long) = count_source_lines(&String::from_utf8_lossy(&bytes));
                    count.loc += loc;
                    count.files_counted += 1;
                    let rel = rel.to_string_lossy().replace('\\', "/");
                    if long {
                        count.long_line_files.push(rel.clone());
                    }
                    count.files.push(rel);
                }
                Err(e) => count.warnings.push(format!("{}: {e}", path.display())),
            }
        }
    }
    count.files.sort();
    count.long_line_files.sort();
    count.warnings.sort();
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DependencySize {
    pub name: String,
    pub version: String,
    pub depth: u8,
    pub parent: Option<String>,
    pub loc: u64,
    pub duplicate: bool,
}

/// Own and borrowed code size of one release.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SizeProfile {
    pub l_own: u64,
    pub l_dir: u64,
    pub l_trans1: u64,
    /// `l_trans1` without entries flagged as duplicates.
    pub l_trans1_dedup: u64,
    pub files_counted: u64,
    /// One item per resolved dependency entry, in dependency-set order.
    pub per_dependency: Vec<DependencySize>,
}

impl SizeProfile {
    pub fn new(l_own: u64, l_dir: u64, l_trans1: u64) -> Self {
        SizeProfile {
            l_own,
            l_dir,
            l_trans1,
            l_trans1_dedup: l_trans1,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    pub profile: SizeProfile,
    /// Resolved entries with no source tree on disk.
    pub sizing_gaps: Vec<String>,
    pub unresolved: usize,
    pub own_missing: bool,
    pub long_line_files: Vec<String>,
    pub warnings: Vec<String>,
}

/// Memoizes tree counts per (package, version). Safe to share between
/// threads sizing different releases.
#[derive(Debug, Default)]
pub struct SizeCache {
    counts: Mutex<HashMap<(String, Version), Option<LocCount>>>,
}

impl SizeCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn get_or_count(
        &self,
        layout: &SourceLayout,
        name: &str,
        version: &Version,
        options: &LocOptions,
    ) -> Option<LocCount> {
        let key = (name.to_string(), version.clone());
        if let Some(hit) = self.counts.lock().expect("size cache poisoned").get(&key) {
            return hit.clone();
        }
        let counted = layout
            .existing_tree(name, version)
            .and_then(|tree| count_js_loc(tree, options).ok());
        self.counts
            .lock()
            .expect("size cache poisoned")
            .insert(key, counted.clone());
        counted
    }
}

/// Size a release and its resolved dependencies. Unresolved entries and
/// entries without a source tree contribute zero.
pub fn size_release(
    root_name: &str,
    release: &VersionRecord,
    deps: &DependencySet,
    layout: &SourceLayout,
    options: &LocOptions,
    cache: &SizeCache,
) -> SizeReport {
    let mut report = SizeReport::default();
    match cache.get_or_count(layout, root_name, &release.version, options) {
        Some(own) => {
            report.profile.l_own = own.loc;
            report.profile.files_counted = own.files_counted;
            report.long_line_files = own.long_line_files;
            report.warnings = own.warnings;
        }
        None => report.own_missing = true,
    }
    for entry in &deps.entries {
        let Some(version) = entry.version() else {
            report.unresolved += 1;
            continue;
        };
        let Some(count) = cache.get_or_count(layout, &entry.name, version, options) else {
            report
                .sizing_gaps
                .push(format!("{}@{}", entry.name, version));
            continue;
        };
        let loc = count.loc;
        match entry.depth {
            1 => report.profile.l_dir += loc,
            _ => {
                report.profile.l_trans1 += loc;
                if !entry.duplicate {
                    report.profile.l_trans1_dedup += loc;
                }
            }
        }
        report.profile.per_dependency.push(DependencySize {
            name: entry.name.clone(),
            version: version.to_string(),
            depth: entry.depth,
            parent: entry.parent.clone(),
            loc,
            duplicate: entry.duplicate,
        });
    }
    report
}

/// Sum of per-dependency sizes at a depth, keyed by (name, version).
pub fn sizes_by_dependency(profile: &SizeProfile, depth: u8) -> BTreeMap<(String, String), u64> {
    let mut out = BTreeMap::new();
    for d in profile.per_dependency.iter().filter(|d| d.depth == depth) {
        *out.entry((d.name.clone(), d.version.clone())).or_insert(0) += d.loc;
    }
    out
}
