// Ordinary least squares on synthetic release data: how the time to the
// next release responds to leverage and to the size and direction of a
// change.

use leverage::stats::{build_design_matrix, fit_ols, PairObservation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let pairs: Vec<PairObservation> = (0..300)
        .map(|_| {
            let lambda: f64 = rng.gen_range(0.05..20.0);
            let rho: f64 = rng.gen_range(1.0..5_000.0);
            let theta: f64 = rng.gen_range(-180.0..180.0);
            let prev: f64 = rng.gen_range(1.0..120.0);
            let log_y = 0.8 + 0.35 * prev.ln() + 0.2 * lambda.ln() + 0.15 * rho.ln()
                - 0.3 * (theta - 45.0).to_radians().cos()
                + rng.gen_range(-0.3..0.3);
            PairObservation {
                interval_days: log_y.exp(),
                prev_interval_days: Some(prev),
                lambda: Some(lambda),
                rho,
                theta_deg: Some(theta),
            }
        })
        .collect();

    let (rows, excluded) = build_design_matrix(&pairs, None);
    let fit = fit_ols(&rows)?;
    println!(
        "n = {}, excluded = {}, R^2 = {:.3}",
        fit.n_rows,
        excluded.total(),
        fit.r_squared
    );
    for c in &fit.coefficients {
        println!(
            "{:>20} {:>8.4} (se {:.4}, p {:.2e})",
            c.term,
            c.estimate,
            c.std_error,
            c.p_value.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
