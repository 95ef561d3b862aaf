// Run the whole analysis over a corpus and write every report file.
//
// `cargo run --example full_pipeline -- [corpus-dir] [advisories.csv] [out-dir]`

use std::path::PathBuf;

use leverage::pipeline::{emit_reports, run_pipeline, AnalysisConfig};
use leverage::resolver::Levels;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    run(std::env::args().skip(1).collect())
}

pub fn run(args: Vec<String>) -> Result<(), Box<dyn std::error::Error>> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut args = args.into_iter();
    let corpus = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| fixtures.join("corpus"));
    let advisories = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| fixtures.join("advisories.csv"));
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("leverage-report"));

    // The fixture packages are small, so split them at 1 KLOC instead of 10.
    let config = AnalysisConfig::new(corpus)
        .with_advisories(advisories)
        .with_levels(Levels::WithTransitive)
        .with_kloc_threshold(1_000);
    let bundle = run_pipeline(&config)?;
    println!(
        "{} releases from {} packages ({} versions ingested)",
        bundle.rows.len(),
        bundle.packages,
        bundle.ingested_versions
    );
    for t in &bundle.contingency {
        println!(
            "{:>12} {:<10} OR {:?} p {:.3}",
            t.group.as_str(),
            t.mode.as_str(),
            t.odds_ratio.map(|v| (v * 100.0).round() / 100.0),
            t.p_value
        );
    }
    for file in emit_reports(&bundle, &out)? {
        println!("wrote {}", out.join(file).display());
    }
    Ok(())
}
