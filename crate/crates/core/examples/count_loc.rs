// Count JavaScript lines of code in a source tree, skipping tests,
// comments, blank lines and vendored `node_modules`.
//
// `cargo run --example count_loc -- [dir] [exclude-glob...]`

use std::path::PathBuf;

use leverage::sizer::{count_js_loc, LocOptions};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    run(std::env::args().skip(1).collect())
}

pub fn run(args: Vec<String>) -> Result<(), Box<dyn std::error::Error>> {
    let mut args = args.into_iter();
    let dir = args.next().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/fixtures/corpus/sources/@acme/bravo/2.0.0")
    });
    let globs: Vec<String> = args.collect();

    let count = count_js_loc(&dir, &LocOptions::with_exclude_globs(&globs)?)?;
    for file in &count.files {
        println!("  {file}");
    }
    println!("{} LOC in {} files", count.loc, count.files_counted);
    for file in &count.long_line_files {
        println!("{file} has a line over 5000 characters, probably minified");
    }
    for w in &count.warnings {
        eprintln!("warning: {w}");
    }
    Ok(())
}
