// Count the advisories that reach a release through its own code and
// through its resolved dependencies.
//
// `cargo run --example vulnerability_exposure -- [corpus-dir] [advisories.csv] [package] [version]`

use std::path::PathBuf;

use leverage::corpus::Corpus;
use leverage::resolver::{resolve_release, Levels, ResolutionPolicy};
use leverage::semver::parse_version;
use leverage::vulnmatch::{load_advisories, vuln_profile, AdvisoryIndex};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    run(std::env::args().skip(1).collect())
}

pub fn run(args: Vec<String>) -> Result<(), Box<dyn std::error::Error>> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut args = args.into_iter();
    let root = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| fixtures.join("corpus"));
    let advisories = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| fixtures.join("advisories.csv"));
    let name = args.next().unwrap_or_else(|| "alpha".into());
    let version = parse_version(&args.next().unwrap_or_else(|| "1.2.0".into()))?;

    let corpus = Corpus::open(&root)?;
    let index = AdvisoryIndex::new(load_advisories(&advisories)?);
    let release = corpus
        .registry
        .get(&name)
        .and_then(|p| p.find(&version))
        .ok_or(format!("{name}@{version} is not in the corpus"))?;
    let deps = resolve_release(
        &name,
        release,
        &corpus.registry,
        Levels::WithTransitive,
        ResolutionPolicy::default(),
    );

    for depth in [1, 2] {
        let p = vuln_profile(&name, &version, &deps, &index, depth);
        println!(
            "depth {depth}: own {} dir {} trans1 {} (distinct {:?}) vulnerable={}",
            p.own_count, p.dir_count, p.trans1_count, p.distinct_advisories, p.is_vulnerable
        );
        for (severity, n) in &p.by_severity {
            println!("    {severity:?}: {n}");
        }
    }
    Ok(())
}
