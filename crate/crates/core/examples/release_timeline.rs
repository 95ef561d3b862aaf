// Build a filtered release timeline for one package of a corpus.
//
// `cargo run --example release_timeline -- [corpus-dir] [package]`

use std::path::PathBuf;

use leverage::corpus::{Corpus, ReleaseTimeline};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    run(std::env::args().skip(1).collect())
}

pub fn run(args: Vec<String>) -> Result<(), Box<dyn std::error::Error>> {
    let mut args = args.into_iter();
    let root = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus"));
    let name = args.next().unwrap_or_else(|| "alpha".into());

    let corpus = Corpus::open(&root)?;
    let package = corpus
        .registry
        .get(&name)
        .ok_or(format!("{name} is not in the corpus"))?;
    let timeline = ReleaseTimeline::from_package(package)
        .filter_experimental()
        .filter_backports();

    println!(
        "{name}: {} ingested, {} kept",
        package.ingested_count(),
        timeline.releases.len()
    );
    for excluded in &timeline.exclusions {
        println!(
            "  dropped {:<28} {}",
            excluded.version,
            excluded.reason.as_str()
        );
    }
    for pair in timeline.release_pairs() {
        println!(
            "  {} -> {}  {:6.2} days",
            pair.previous.version, pair.current.version, pair.interval_days
        );
    }
    Ok(())
}
