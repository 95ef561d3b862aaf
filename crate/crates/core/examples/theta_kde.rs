// Gaussian kernel density of change directions, printed as a coarse
// text histogram over [-180, 180] degrees.

use leverage::stats::{angle_grid, GaussianKde};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    // Most changes grow both own and dependency code; a few swap one for the other.
    let grow = Normal::new(45.0, 15.0)?;
    let swap = Normal::new(-135.0, 20.0)?;
    let thetas: Vec<f64> = (0..400)
        .map(|i| {
            if i % 5 == 0 {
                swap.sample(&mut rng)
            } else {
                grow.sample(&mut rng)
            }
        })
        .map(|t: f64| t.clamp(-180.0, 180.0))
        .collect();

    let kde = GaussianKde::new(&thetas, None)?;
    println!("bandwidth {:.2} deg", kde.bandwidth());
    let peak = angle_grid()
        .into_iter()
        .map(|x| kde.density(x))
        .fold(0.0, f64::max);
    for x in angle_grid().into_iter().step_by(15) {
        let bar = "#".repeat((kde.density(x) / peak * 50.0).round() as usize);
        println!("{x:>5} {bar}");
    }
    Ok(())
}
