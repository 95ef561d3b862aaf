// Odds ratio and two-sided Fisher exact test on 2x2 tables of
// (high/low leverage) x (vulnerable/safe) counts.

use leverage::stats::{fisher_exact, odds_ratio, ContingencyTable, StatsError};

pub fn main() {
    let tables = [
        (
            "small/medium",
            ContingencyTable::new(2541, 1623, 1135, 2821),
        ),
        ("large", ContingencyTable::new(1927, 947, 471, 2364)),
        ("tiny", ContingencyTable::new(3, 1, 1, 3)),
        ("zero cell", ContingencyTable::new(5, 0, 2, 7)),
    ];
    for (label, t) in tables {
        let fisher = fisher_exact(&t);
        let or = match odds_ratio(&t) {
            Ok(v) => format!("{v:.2}"),
            Err(StatsError::ZeroCell { haldane }) => format!("undefined (Haldane {haldane:.2})"),
            Err(e) => e.to_string(),
        };
        println!("{label:>12}: OR {or:<24} p = {:.3e}", fisher.p_value);
    }

    // Classify raw observations against a leverage threshold.
    let observations = [
        (0.2, false),
        (0.4, true),
        (1.5, true),
        (3.0, true),
        (0.1, false),
        (2.2, false),
    ];
    let t = ContingencyTable::from_observations(observations, 1.0);
    println!("from observations: {t:?}");
}
