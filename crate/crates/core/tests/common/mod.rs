#![allow(dead_code)]

use std::path::PathBuf;

use leverage::pipeline::AnalysisConfig;
use leverage::resolver::Levels;
use serde_json::Value;

pub const GOLDEN_KLOC_THRESHOLD: u64 = 1000;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn corpus_dir() -> PathBuf {
    fixtures().join("corpus")
}

pub fn advisories_csv() -> PathBuf {
    fixtures().join("advisories.csv")
}

pub fn golden_config(levels: Levels) -> AnalysisConfig {
    AnalysisConfig::new(corpus_dir())
        .with_advisories(advisories_csv())
        .with_levels(levels)
        .with_kloc_threshold(GOLDEN_KLOC_THRESHOLD)
}

pub fn read_json(path: impl Into<PathBuf>) -> Value {
    let path = path.into();
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn oracle(levels: u8) -> Value {
    read_json(fixtures().join(format!("oracle/levels{levels}.json")))
}

pub fn expected_loc() -> Vec<(String, u64)> {
    let v = read_json(fixtures().join("expected_loc.json"));
    v.as_object()
        .expect("object")
        .iter()
        .map(|(k, n)| (k.clone(), n.as_u64().expect("integer")))
        .collect()
}

/// Source tree for an `expected_loc.json` key such as `@acme/bravo@1.0.0`
/// or `divergence/zulu@1.0.0`.
pub fn tree_for_key(key: &str) -> PathBuf {
    let (corpus, rest) = match key.strip_prefix("divergence/") {
        Some(rest) => (fixtures().join("divergence"), rest),
        None => (corpus_dir(), key),
    };
    let at = rest.rfind('@').expect("name@version");
    let mut path = corpus.join("sources");
    for part in rest[..at].split('/') {
        path.push(part);
    }
    path.join(&rest[at + 1..])
}

pub fn opt_f64(v: &Value) -> Option<f64> {
    v.as_f64()
}
