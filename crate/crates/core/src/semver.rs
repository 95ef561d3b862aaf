//! Semantic versions and npm-style range expressions.
//!
//! Ranges are desugared at parse time: caret, tilde, x-ranges and hyphen
//! ranges all become plain comparator sets, so satisfaction only ever has to
//! evaluate `<`, `<=`, `>`, `>=` and `=` against a [`Version`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemverError {
    #[error("invalid version or range {input:?} at byte {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
    #[error("unsupported dependency spec {0:?}")]
    UnsupportedSpec(String),
}

impl SemverError {
    fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        SemverError::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}

/// A dot-separated prerelease identifier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Identifier {
    Numeric(u64),
    AlphaNumeric(String),
}

impl Ord for Identifier {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Identifier::Numeric(a), Identifier::Numeric(b)) => a.cmp(b),
            (Identifier::Numeric(_), Identifier::AlphaNumeric(_)) => Ordering::Less,
            (Identifier::AlphaNumeric(_), Identifier::Numeric(_)) => Ordering::Greater,
            (Identifier::AlphaNumeric(a), Identifier::AlphaNumeric(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Identifier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Identifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identifier::Numeric(n) => write!(f, "{n}"),
            Identifier::AlphaNumeric(s) => f.write_str(s),
        }
    }
}

/// A SemVer 2.0.0 version.
///
/// Equality, ordering and hashing ignore build metadata, so
/// `1.2.3+build5 == 1.2.3`. The build identifiers are still kept and printed.
#[derive(Debug, Clone)]
pub struct Version {
    pub major: u64,
    pub minor: u64,
    pub patch: u64,
    pub prerelease: Vec<Identifier>,
    pub build: Vec<String>,
}

impl Version {
    pub const fn new(major: u64, minor: u64, patch: u64) -> Self {
        Version {
            major,
            minor,
            patch,
            prerelease: Vec::new(),
            build: Vec::new(),
        }
    }

    pub fn is_prerelease(&self) -> bool {
        !self.prerelease.is_empty()
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.major, self.minor, self.patch)
    }

    /// The prerelease identifiers joined back with dots, or `""`.
    pub fn prerelease_text(&self) -> String {
        join(&self.prerelease, ".")
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

impl PartialEq for Version {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Version {}

impl Hash for Version {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.triple().hash(state);
        self.prerelease.hash(state);
    }
}

impl Ord for Version {
    fn cmp(&self, other: &Self) -> Ordering {
        self.triple().cmp(&other.triple()).then_with(|| {
            match (self.prerelease.is_empty(), other.prerelease.is_empty()) {
                (true, true) => Ordering::Equal,
                (true, false) => Ordering::Greater,
                (false, true) => Ordering::Less,
                // Lexicographic over identifiers; a shorter list that is a
                // prefix of a longer one sorts first.
                (false, false) => self.prerelease.cmp(&other.prerelease),
            }
        })
    }
}

impl PartialOrd for Version {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Precedence comparison. Build metadata never participates.
pub fn compare(a: &Version, b: &Version) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for Version {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.major, self.minor, self.patch)?;
        if !self.prerelease.is_empty() {
            write!(f, "-{}", join(&self.prerelease, "."))?;
        }
        if !self.build.is_empty() {
            write!(f, "+{}", self.build.join("."))?;
        }
        Ok(())
    }
}

impl FromStr for Version {
    type Err = SemverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_version(s)
    }
}

impl Serialize for Version {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Version {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_version(&text).map_err(serde::de::Error::custom)
    }
}

/// Parse a full `MAJOR.MINOR.PATCH[-PRE][+BUILD]` version. A single leading
/// `v` is accepted and dropped.
pub fn parse_version(text: &str) -> Result<Version, SemverError> {
    if text.is_empty() {
        return Err(SemverError::parse(text, 0, "empty version"));
    }
    let offset = usize::from(text.starts_with('v'));
    let mut cursor = Cursor::new(text, offset);
    let version = cursor.version()?;
    if !cursor.at_end() {
        return Err(cursor.error("unexpected trailing characters"));
    }
    Ok(version)
}

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str, pos: usize) -> Self {
        Cursor { input, pos }
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.input.len()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> SemverError {
        SemverError::parse(self.input, self.pos, message)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        let len = self
            .rest()
            .char_indices()
            .find(|&(_, c)| !pred(c))
            .map_or(self.rest().len(), |(i, _)| i);
        self.pos += len;
        &self.input[start..start + len]
    }

    fn number(&mut self, what: &str) -> Result<u64, SemverError> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error(&format!("expected {what} number")));
        }
        if digits.len() > 1 && digits.starts_with('0') {
            self.pos = start;
            return Err(self.error(&format!("leading zero in {what}")));
        }
        digits
            .parse()
            .map_err(|_| SemverError::parse(self.input, start, format!("{what} number too large")))
    }

    fn identifiers(&mut self, numeric_rules: bool) -> Result<Vec<&'a str>, SemverError> {
        let mut out = Vec::new();
        loop {
            let start = self.pos;
            let ident = self.take_while(|c| c.is_ascii_alphanumeric() || c == '-');
            if ident.is_empty() {
                return Err(self.error("empty or illegal identifier"));
            }
            if numeric_rules
                && ident.len() > 1
                && ident.starts_with('0')
                && ident.bytes().all(|b| b.is_ascii_digit())
            {
                self.pos = start;
                return Err(self.error("leading zero in numeric prerelease identifier"));
            }
            out.push(ident);
            if !self.eat('.') {
                return Ok(out);
            }
        }
    }

    fn version(&mut self) -> Result<Version, SemverError> {
        let major = self.number("major")?;
        if !self.eat('.') {
            return Err(self.error("expected '.' before minor"));
        }
        let minor = self.number("minor")?;
        if !self.eat('.') {
            return Err(self.error("expected '.' before patch"));
        }
        let patch = self.number("patch")?;
        let (prerelease, build) = self.qualifiers()?;
        Ok(Version {
            major,
            minor,
            patch,
            prerelease,
            build,
        })
    }

    fn qualifiers(&mut self) -> Result<(Vec<Identifier>, Vec<String>), SemverError> {
        let mut prerelease = Vec::new();
        if self.eat('-') {
            for ident in self.identifiers(true)? {
                prerelease.push(if ident.bytes().all(|b| b.is_ascii_digit()) {
                    Identifier::Numeric(
                        ident
                            .parse()
                            .map_err(|_| self.error("numeric prerelease identifier too large"))?,
                    )
                } else {
                    Identifier::AlphaNumeric(ident.to_string())
                });
            }
        }
        let mut build = Vec::new();
        if self.eat('+') {
            build = self
                .identifiers(false)?
                .into_iter()
                .map(str::to_string)
                .collect();
        }
        Ok((prerelease, build))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

impl Op {
    fn as_str(self) -> &'static str {
        match self {
            Op::Lt => "<",
            Op::Le => "<=",
            Op::Gt => ">",
            Op::Ge => ">=",
            Op::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Comparator {
    pub op: Op,
    pub version: Version,
}

impl Comparator {
    pub fn new(op: Op, version: Version) -> Self {
        Comparator { op, version }
    }

    pub fn matches(&self, v: &Version) -> bool {
        let ord = v.cmp(&self.version);
        match self.op {
            Op::Lt => ord == Ordering::Less,
            Op::Le => ord != Ordering::Greater,
            Op::Gt => ord == Ordering::Greater,
            Op::Ge => ord != Ordering::Less,
            Op::Eq => ord == Ordering::Equal,
        }
    }
}

impl fmt::Display for Comparator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.op.as_str(), self.version)
    }
}

/// An AND of comparators. Never empty once built by the parser.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComparatorSet(Vec<Comparator>);

impl ComparatorSet {
    pub fn comparators(&self) -> &[Comparator] {
        &self.0
    }

    /// All comparators hold, and a prerelease `v` is only admitted when some
    /// comparator names a prerelease of the same `major.minor.patch`.
    pub fn matches(&self, v: &Version) -> bool {
        if !self.0.iter().all(|c| c.matches(v)) {
            return false;
        }
        if !v.is_prerelease() {
            return true;
        }
        self.0
            .iter()
            .any(|c| c.version.is_prerelease() && c.version.triple() == v.triple())
    }
}

impl fmt::Display for ComparatorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0, " "))
    }
}

/// An OR of comparator sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RangeExpr {
    alternatives: Vec<ComparatorSet>,
}

impl RangeExpr {
    pub fn alternatives(&self) -> &[ComparatorSet] {
        &self.alternatives
    }

    pub fn satisfied_by(&self, v: &Version) -> bool {
        self.alternatives.iter().any(|set| set.matches(v))
    }

    pub fn any() -> Self {
        RangeExpr {
            alternatives: vec![ComparatorSet(vec![Comparator::new(
                Op::Ge,
                Version::new(0, 0, 0),
            )])],
        }
    }
}

impl fmt::Display for RangeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.alternatives, " || "))
    }
}

impl FromStr for RangeExpr {
    type Err = SemverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_range(s)
    }
}

pub fn satisfies(v: &Version, range: &RangeExpr) -> bool {
    range.satisfied_by(v)
}

/// Dependency specs that are not version ranges at all: URLs, paths, aliases
/// and dist-tags other than `latest`.
fn is_unsupported_spec(text: &str) -> bool {
    let t = text.trim();
    if t.contains("://") || t.contains(':') {
        return true;
    }
    if t.starts_with('.') || t.starts_with('/') || t.starts_with("~/") {
        return true;
    }
    if t.contains('/') {
        // user/repo github shorthand
        return true;
    }
    let first = t.chars().next().unwrap_or(' ');
    let is_word = first.is_ascii_alphabetic()
        && t.chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.'));
    if is_word {
        let lower = t.to_ascii_lowercase();
        let versionish = lower == "x"
            || lower == "latest"
            || lower.starts_with("x.")
            || (lower.starts_with('v') && lower[1..].starts_with(|c: char| c.is_ascii_digit()));
        return !versionish;
    }
    false
}

/// Parse an npm-style range: comparators separated by whitespace are ANDed,
/// `||` separates alternatives.
pub fn parse_range(text: &str) -> Result<RangeExpr, SemverError> {
    if text.trim().is_empty() {
        if text.is_empty() {
            return Err(SemverError::parse(text, 0, "empty range"));
        }
        return Ok(RangeExpr::any());
    }
    if is_unsupported_spec(text) {
        return Err(SemverError::UnsupportedSpec(text.to_string()));
    }
    let mut alternatives = Vec::new();
    let mut offset = 0;
    for part in text.split("||") {
        alternatives.push(parse_comparator_set(text, part, offset)?);
        offset += part.len() + 2;
    }
    Ok(RangeExpr { alternatives })
}

/// A version with possibly wildcarded or missing trailing components.
#[derive(Debug, Clone)]
struct Partial {
    major: Option<u64>,
    minor: Option<u64>,
    patch: Option<u64>,
    prerelease: Vec<Identifier>,
}

impl Partial {
    fn is_any(&self) -> bool {
        self.major.is_none()
    }

    fn floor(&self) -> Version {
        Version {
            major: self.major.unwrap_or(0),
            minor: self.minor.unwrap_or(0),
            patch: self.patch.unwrap_or(0),
            prerelease: self.prerelease.clone(),
            build: Vec::new(),
        }
    }

    /// The first version past everything this partial covers; `None` for a
    /// full version (it covers a single point).
    fn ceiling(&self) -> Option<Version> {
        match (self.major, self.minor, self.patch) {
            (None, _, _) => None,
            (Some(m), None, _) => Some(Version::new(m + 1, 0, 0)),
            (Some(m), Some(n), None) => Some(Version::new(m, n + 1, 0)),
            (Some(_), Some(_), Some(_)) => None,
        }
    }
}

fn parse_comparator_set(
    full: &str,
    part: &str,
    offset: usize,
) -> Result<ComparatorSet, SemverError> {
    // Tokenize, gluing a bare operator to the version that follows it
    // (">= 1.2.3" reads as ">=1.2.3").
    let mut tokens: Vec<(usize, String)> = Vec::new();
    let mut pending: Option<(usize, String)> = None;
    let mut pos = 0;
    for word in part.split_whitespace() {
        let at = offset + pos + part[pos..].find(word).unwrap_or(0);
        pos = at - offset + word.len();
        if let Some((p, op)) = pending.take() {
            tokens.push((p, format!("{op}{word}")));
            continue;
        }
        if word
            .chars()
            .all(|c| matches!(c, '<' | '>' | '=' | '~' | '^'))
        {
            pending = Some((at, word.to_string()));
        } else {
            tokens.push((at, word.to_string()));
        }
    }
    if let Some((p, _)) = pending {
        return Err(SemverError::parse(full, p, "operator without version"));
    }
    if tokens.is_empty() {
        return Ok(ComparatorSet(vec![Comparator::new(
            Op::Ge,
            Version::new(0, 0, 0),
        )]));
    }

    let mut comparators = Vec::new();
    if tokens.len() == 3 && tokens[1].1 == "-" {
        let lo = parse_partial(full, &tokens[0].1, tokens[0].0)?;
        let hi = parse_partial(full, &tokens[2].1, tokens[2].0)?;
        if !lo.is_any() {
            comparators.push(Comparator::new(Op::Ge, lo.floor()));
        }
        if !hi.is_any() {
            comparators.push(match hi.ceiling() {
                Some(c) => Comparator::new(Op::Lt, c),
                None => Comparator::new(Op::Le, hi.floor()),
            });
        }
    } else {
        for (at, token) in &tokens {
            if token == "-" {
                return Err(SemverError::parse(full, *at, "misplaced hyphen range"));
            }
            desugar_simple(full, token, *at, &mut comparators)?;
        }
    }
    if comparators.is_empty() {
        comparators.push(Comparator::new(Op::Ge, Version::new(0, 0, 0)));
    }
    Ok(ComparatorSet(comparators))
}

fn desugar_simple(
    full: &str,
    token: &str,
    at: usize,
    out: &mut Vec<Comparator>,
) -> Result<(), SemverError> {
    let (prefix, rest) = split_operator(token);
    let partial = parse_partial(full, rest, at + prefix.len())?;
    match prefix {
        "^" => desugar_caret(&partial, out),
        "~" | "~>" => desugar_tilde(&partial, out),
        "" | "=" => desugar_xrange(&partial, out),
        ">" | ">=" | "<" | "<=" => desugar_primitive(prefix, &partial, out),
        _ => {
            return Err(SemverError::parse(
                full,
                at,
                format!("unknown operator {prefix:?}"),
            ))
        }
    }
    Ok(())
}

fn split_operator(token: &str) -> (&str, &str) {
    for op in ["~>", ">=", "<=", ">", "<", "=", "^", "~"] {
        if let Some(rest) = token.strip_prefix(op) {
            return (op, rest);
        }
    }
    ("", token)
}

fn nothing() -> Comparator {
    Comparator::new(Op::Lt, Version::new(0, 0, 0))
}

fn desugar_xrange(p: &Partial, out: &mut Vec<Comparator>) {
    if p.is_any() {
        out.push(Comparator::new(Op::Ge, Version::new(0, 0, 0)));
        return;
    }
    match p.ceiling() {
        Some(ceil) => {
            out.push(Comparator::new(Op::Ge, p.floor()));
            out.push(Comparator::new(Op::Lt, ceil));
        }
        None => out.push(Comparator::new(Op::Eq, p.floor())),
    }
}

fn desugar_primitive(op: &str, p: &Partial, out: &mut Vec<Comparator>) {
    if p.is_any() {
        out.push(match op {
            ">=" | "<=" => Comparator::new(Op::Ge, Version::new(0, 0, 0)),
            _ => nothing(),
        });
        return;
    }
    let comparator = match (op, p.ceiling()) {
        (">", Some(ceil)) => Comparator::new(Op::Ge, ceil),
        (">", None) => Comparator::new(Op::Gt, p.floor()),
        (">=", _) => Comparator::new(Op::Ge, p.floor()),
        ("<", _) => Comparator::new(Op::Lt, p.floor()),
        ("<=", Some(ceil)) => Comparator::new(Op::Lt, ceil),
        ("<=", None) => Comparator::new(Op::Le, p.floor()),
        _ => unreachable!("operator checked by caller"),
    };
    out.push(comparator);
}

fn desugar_tilde(p: &Partial, out: &mut Vec<Comparator>) {
    if p.is_any() {
        out.push(Comparator::new(Op::Ge, Version::new(0, 0, 0)));
        return;
    }
    let major = p.major.unwrap_or(0);
    let upper = match p.minor {
        None => Version::new(major + 1, 0, 0),
        Some(minor) => Version::new(major, minor + 1, 0),
    };
    out.push(Comparator::new(Op::Ge, p.floor()));
    out.push(Comparator::new(Op::Lt, upper));
}

fn desugar_caret(p: &Partial, out: &mut Vec<Comparator>) {
    if p.is_any() {
        out.push(Comparator::new(Op::Ge, Version::new(0, 0, 0)));
        return;
    }
    let major = p.major.unwrap_or(0);
    let upper = match (major, p.minor, p.patch) {
        (0, None, _) => Version::new(1, 0, 0),
        (0, Some(0), None) => Version::new(0, 1, 0),
        (0, Some(0), Some(patch)) => Version::new(0, 0, patch + 1),
        (0, Some(minor), _) => Version::new(0, minor + 1, 0),
        (m, _, _) => Version::new(m + 1, 0, 0),
    };
    out.push(Comparator::new(Op::Ge, p.floor()));
    out.push(Comparator::new(Op::Lt, upper));
}

fn parse_partial(full: &str, text: &str, at: usize) -> Result<Partial, SemverError> {
    let err = |pos: usize, msg: &str| SemverError::parse(full, at + pos, msg);
    if text.is_empty() {
        return Err(err(0, "missing version"));
    }
    if text.eq_ignore_ascii_case("latest") {
        return Ok(Partial {
            major: None,
            minor: None,
            patch: None,
            prerelease: Vec::new(),
        });
    }
    let skip = usize::from(text.starts_with('v') || text.starts_with('='));
    let mut cursor = Cursor::new(text, skip);
    let mut parts: [Option<u64>; 3] = [None; 3];
    let mut wildcard_seen = false;
    for (i, slot) in parts.iter_mut().enumerate() {
        if i > 0 && !cursor.eat('.') {
            break;
        }
        if matches!(cursor.peek(), Some('x' | 'X' | '*')) {
            cursor.pos += 1;
            wildcard_seen = true;
            continue;
        }
        if wildcard_seen {
            return Err(err(cursor.pos, "number after wildcard"));
        }
        let names = ["major", "minor", "patch"];
        *slot = Some(cursor.number(names[i]).map_err(|e| match e {
            SemverError::Parse {
                position, message, ..
            } => err(position, &message),
            other => other,
        })?);
    }
    let mut prerelease = Vec::new();
    if !cursor.at_end() {
        if parts.iter().all(Option::is_some) && matches!(cursor.peek(), Some('-' | '+')) {
            let (pre, _build) = cursor.qualifiers().map_err(|e| match e {
                SemverError::Parse {
                    position, message, ..
                } => err(position, &message),
                other => other,
            })?;
            prerelease = pre;
        }
        if !cursor.at_end() {
            return Err(err(cursor.pos, "unexpected characters in version"));
        }
    }
    let [major, minor, patch] = parts;
    Ok(Partial {
        major,
        minor: major.and(minor),
        patch: major.and(minor).and(patch),
        prerelease,
    })
}
