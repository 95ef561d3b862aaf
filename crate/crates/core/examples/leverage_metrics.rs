// Leverage, change distance and change direction between two releases.

use leverage::metrics::{change_vector, classify_direction, DependencyMode, LeverageRecord};
use leverage::sizer::SizeProfile;

fn profile(l_own: u64, l_dir: u64, l_trans1: u64) -> SizeProfile {
    SizeProfile {
        l_own,
        l_dir,
        l_trans1,
        l_trans1_dedup: l_trans1,
        ..SizeProfile::default()
    }
}

pub fn main() {
    let before = profile(1_200, 2_400, 9_000);
    let after = profile(1_150, 4_000, 12_500);

    for (label, p) in [("before", &before), ("after", &after)] {
        let lev = LeverageRecord::from_profile(p, true).expect("own code is non-empty");
        println!(
            "{label:>6}: own {:>5}  dir {:>5}  trans1 {:>6}  lambda {:.3}  with trans1 {:.3}",
            p.l_own,
            p.l_dir,
            p.l_trans1,
            lev.lambda_dir,
            lev.lambda_dir_trans1.unwrap()
        );
    }

    for mode in [DependencyMode::Dir, DependencyMode::DirTrans1] {
        let v = change_vector(&before, &after, mode);
        println!(
            "{:>10}: d_own {:+} d_dep {:+}  rho {:.1}  theta {:?}  {:?}",
            mode.as_str(),
            v.delta_own,
            v.delta_dep,
            v.rho,
            v.theta_deg.map(|t| (t * 10.0).round() / 10.0),
            classify_direction(v.theta_deg)
        );
    }
}
