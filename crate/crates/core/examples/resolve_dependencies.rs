// Resolve a release's dependencies as they stood on its publish date.
//
// `cargo run --example resolve_dependencies -- [corpus-dir] [package] [version]`

use std::path::PathBuf;

use leverage::corpus::Corpus;
use leverage::resolver::{resolve_release, Levels, ResolutionPolicy};
use leverage::semver::parse_version;

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
    let version = parse_version(&args.next().unwrap_or_else(|| "1.2.0".into()))?;

    let corpus = Corpus::open(&root)?;
    let release = corpus
        .registry
        .get(&name)
        .and_then(|p| p.find(&version))
        .ok_or(format!("{name}@{version} is not in the corpus"))?;

    for policy in [
        ResolutionPolicy::LatestPublished,
        ResolutionPolicy::HighestSemver,
    ] {
        let set = resolve_release(
            &name,
            release,
            &corpus.registry,
            Levels::WithTransitive,
            policy,
        );
        println!(
            "{name}@{version} as of {} ({policy:?})",
            set.as_of.format("%Y-%m-%d")
        );
        for e in &set.entries {
            let indent = "  ".repeat(e.depth as usize);
            let outcome = match &e.resolved {
                Ok(v) => v.to_string(),
                Err(why) => format!("unresolved: {}", why.as_str()),
            };
            let dup = if e.duplicate { "  (duplicate)" } else { "" };
            println!("{indent}{} {} -> {outcome}{dup}", e.name, e.spec);
        }
    }
    Ok(())
}
