// Parse npm-style ranges and check which versions they admit.

use leverage::semver::{parse_range, parse_version, satisfies, SemverError};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let candidates = [
        "1.2.0",
        "1.2.5",
        "1.9.0",
        "2.3.4",
        "3.0.0",
        "3.0.1",
        "4.0.0",
        "4.0.1-rc.1",
    ];
    for text in [
        "<3.0.1 || >=4.0.0 <4.0.1",
        "^1.2.0",
        "~1.2.3",
        "1.x",
        "1.2.3 - 2.3.4",
    ] {
        let range = parse_range(text)?;
        println!("{text:>26}  =>  {range}");
        let admitted: Vec<&str> = candidates
            .iter()
            .copied()
            .filter(|v| satisfies(&parse_version(v).unwrap(), &range))
            .collect();
        println!("{:>26}      admits {admitted:?}", "");
    }

    // Prereleases only match when the range names one on the same triple.
    let beta = parse_version("1.3.0-beta")?;
    println!(
        "1.3.0-beta in ^1.2.0: {}",
        satisfies(&beta, &parse_range("^1.2.0")?)
    );
    println!(
        "1.3.0-beta in ^1.3.0-alpha: {}",
        satisfies(&beta, &parse_range("^1.3.0-alpha")?)
    );

    for exotic in ["github:user/repo", "file:../lib", "next"] {
        match parse_range(exotic) {
            Err(SemverError::UnsupportedSpec(_)) => println!("{exotic}: unsupported spec"),
            other => println!("{exotic}: {other:?}"),
        }
    }
    Ok(())
}
