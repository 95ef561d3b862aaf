//! Technical leverage and the change-distance / change-direction pair.
//!
//! A change between two releases is the vector `(ΔL_dep, ΔL_own)`. Its length
//! is the change distance; its signed polar angle, in degrees on
//! `(-180, 180]`, is the change direction: 0 means only dependency code grew,
//! 90 means only own code grew.

use std::fmt;

use serde::Serialize;

use crate::sizer::SizeProfile;

/// Axis angles are recognized within this many degrees.
pub const AXIS_TOLERANCE_DEG: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("own code size is zero; leverage is undefined")]
pub struct ZeroOwnSize;

/// Borrowed direct-dependency code per line of own code.
pub fn technical_leverage(profile: &SizeProfile) -> Result<f64, ZeroOwnSize> {
    ratio(profile.l_dir, profile.l_own)
}

/// Leverage with level-1 transitive code added to the numerator.
pub fn leverage_with_trans1(profile: &SizeProfile) -> Result<f64, ZeroOwnSize> {
    ratio(profile.l_dir + profile.l_trans1, profile.l_own)
}

fn ratio(borrowed: u64, own: u64) -> Result<f64, ZeroOwnSize> {
    if own == 0 {
        return Err(ZeroOwnSize);
    }
    Ok(borrowed as f64 / own as f64)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct LeverageRecord {
    pub lambda_dir: f64,
    pub lambda_dir_trans1: Option<f64>,
}

impl LeverageRecord {
    pub fn from_profile(profile: &SizeProfile, with_trans1: bool) -> Result<Self, ZeroOwnSize> {
        Ok(LeverageRecord {
            lambda_dir: technical_leverage(profile)?,
            lambda_dir_trans1: if with_trans1 {
                Some(leverage_with_trans1(profile)?)
            } else {
                None
            },
        })
    }
}

/// Which dependency size enters `ΔL_dep`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DependencyMode {
    Dir,
    DirTrans1,
}

impl DependencyMode {
    pub fn dependency_size(self, profile: &SizeProfile) -> u64 {
        match self {
            DependencyMode::Dir => profile.l_dir,
            DependencyMode::DirTrans1 => profile.l_dir + profile.l_trans1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DependencyMode::Dir => "dir",
            DependencyMode::DirTrans1 => "dir_trans1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChangeVector {
    pub delta_own: i64,
    pub delta_dep: i64,
    pub rho: f64,
    /// `None` when nothing changed (`rho == 0`).
    pub theta_deg: Option<f64>,
}

/// Change direction of `(delta_dep, delta_own)` in degrees on `(-180, 180]`.
///
/// This is `arccos(delta_dep / rho)` signed by `delta_own` (zero own change
/// takes the negative branch, so pure dependency shrinkage lands on -180
/// and is folded to 180). It is evaluated with `atan2`, which gives the same
/// angle without the cancellation `arccos` suffers near the dependency axis.
pub fn change_direction(delta_dep: i64, delta_own: i64) -> Option<f64> {
    if delta_dep == 0 && delta_own == 0 {
        return None;
    }
    let theta = (delta_own as f64).atan2(delta_dep as f64).to_degrees();
    Some(if theta == -180.0 {
        180.0
    } else if theta == 0.0 {
        0.0
    } else {
        theta
    })
}

/// Euclidean length, with the sum of squares formed exactly in integers.
pub fn change_distance(delta_dep: i64, delta_own: i64) -> f64 {
    let (dep, own) = (i128::from(delta_dep), i128::from(delta_own));
    ((dep * dep + own * own) as f64).sqrt()
}

pub fn change_vector(prev: &SizeProfile, cur: &SizeProfile, mode: DependencyMode) -> ChangeVector {
    let delta_own = cur.l_own as i64 - prev.l_own as i64;
    let delta_dep = mode.dependency_size(cur) as i64 - mode.dependency_size(prev) as i64;
    ChangeVector {
        delta_own,
        delta_dep,
        rho: change_distance(delta_dep, delta_own),
        theta_deg: change_direction(delta_dep, delta_own),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

/// Kind of evolution a change direction describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChangeKind {
    GrowDeps,
    GrowOwn,
    ShrinkDeps,
    ShrinkOwn,
    /// Both own and dependency code moved. Q1 is (0°, 90°), Q2 (90°, 180°),
    /// Q3 (-180°, -90°), Q4 (-90°, 0°).
    Mixed(Quadrant),
    NoChange,
}

impl fmt::Display for ChangeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ChangeKind::GrowDeps => "grow-deps",
            ChangeKind::GrowOwn => "grow-own",
            ChangeKind::ShrinkDeps => "shrink-deps",
            ChangeKind::ShrinkOwn => "shrink-own",
            ChangeKind::Mixed(Quadrant::Q1) => "mixed-q1",
            ChangeKind::Mixed(Quadrant::Q2) => "mixed-q2",
            ChangeKind::Mixed(Quadrant::Q3) => "mixed-q3",
            ChangeKind::Mixed(Quadrant::Q4) => "mixed-q4",
            ChangeKind::NoChange => "no-change",
        };
        f.write_str(s)
    }
}

pub fn classify_direction(theta_deg: Option<f64>) -> ChangeKind {
    let Some(theta) = theta_deg else {
        return ChangeKind::NoChange;
    };
    let near = |axis: f64| (theta - axis).abs() <= AXIS_TOLERANCE_DEG;
    if near(0.0) {
        ChangeKind::GrowDeps
    } else if near(90.0) {
        ChangeKind::GrowOwn
    } else if near(180.0) || near(-180.0) {
        ChangeKind::ShrinkDeps
    } else if near(-90.0) {
        ChangeKind::ShrinkOwn
    } else if theta > 0.0 && theta < 90.0 {
        ChangeKind::Mixed(Quadrant::Q1)
    } else if theta > 90.0 {
        ChangeKind::Mixed(Quadrant::Q2)
    } else if theta < -90.0 {
        ChangeKind::Mixed(Quadrant::Q3)
    } else {
        ChangeKind::Mixed(Quadrant::Q4)
    }
}
