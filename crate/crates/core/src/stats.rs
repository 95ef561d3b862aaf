//! Statistics used by the analysis: size grouping, medians, the release
//! interval regression, odds ratios with Fisher's exact test, Spearman
//! correlation, Cohen's d and a Gaussian KDE.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, StudentsT};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StatsError {
    #[error("{0} needs a non-empty sample")]
    Empty(&'static str),
    #[error("{what} needs at least {needed} samples, got {got}")]
    TooFew {
        what: &'static str,
        needed: usize,
        got: usize,
    },
    #[error("sample lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("input is constant; rank variance is zero")]
    ConstantInput,
    #[error("pooled standard deviation is zero")]
    ZeroPooledSd,
    #[error("sample variance is zero; pass an explicit bandwidth")]
    ZeroVariance,
    #[error("bandwidth must be positive and finite, got {0}")]
    BadBandwidth(f64),
    #[error("threshold must be positive")]
    BadThreshold,
    #[error("regression needs more than {terms} rows, got {rows}")]
    InsufficientRows { rows: usize, terms: usize },
    #[error("design matrix is rank deficient; collinear columns: {}", .columns.join(", "))]
    RankDeficient { columns: Vec<String> },
    #[error("non-finite value in regression input")]
    NonFinite,
    #[error("odds ratio undefined (zero in b, c or d); Haldane-corrected value {haldane}")]
    ZeroCell { haldane: f64 },
}

// ---------------------------------------------------------------------------
// grouping and thresholds

pub const DEFAULT_KLOC_THRESHOLD: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SizeGroup {
    SmallMedium,
    Large,
}

impl SizeGroup {
    pub const ALL: [SizeGroup; 2] = [SizeGroup::SmallMedium, SizeGroup::Large];

    pub fn of(l_own: u64, threshold: u64) -> SizeGroup {
        if l_own < threshold {
            SizeGroup::SmallMedium
        } else {
            SizeGroup::Large
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SizeGroup::SmallMedium => "small_medium",
            SizeGroup::Large => "large",
        }
    }
}

/// Split items by own size into (small-medium, large).
pub fn group_by_size<T, F>(
    items: impl IntoIterator<Item = T>,
    threshold: u64,
    l_own: F,
) -> Result<(Vec<T>, Vec<T>), StatsError>
where
    F: Fn(&T) -> u64,
{
    if threshold == 0 {
        return Err(StatsError::BadThreshold);
    }
    Ok(items
        .into_iter()
        .partition(|item| SizeGroup::of(l_own(item), threshold) == SizeGroup::SmallMedium))
}

/// Median; the two central order statistics are averaged for even counts.
pub fn median(values: &[f64]) -> Result<f64, StatsError> {
    if values.is_empty() {
        return Err(StatsError::Empty("median"));
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    Ok(if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    })
}

pub fn leverage_threshold(values: &[f64]) -> Result<f64, StatsError> {
    median(values)
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample variance with `n - 1` in the denominator.
pub fn sample_variance(values: &[f64]) -> f64 {
    let m = mean(values);
    values.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (values.len() as f64 - 1.0)
}

// ---------------------------------------------------------------------------
// design rows

pub const TERMS: [&str; 6] = [
    "intercept",
    "log_prev_interval",
    "log_leverage",
    "log_rho",
    "cos_theta_minus_45",
    "sin_theta",
];

/// Inputs for one release pair, in timeline order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairObservation {
    pub interval_days: f64,
    /// Interval of the preceding pair; `None` for the first pair.
    pub prev_interval_days: Option<f64>,
    /// Leverage of the newer release; `None` when own size is zero.
    pub lambda: Option<f64>,
    pub rho: f64,
    pub theta_deg: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DesignRow {
    pub y: f64,
    pub x_prev: f64,
    pub x_lev: f64,
    pub x_rho: f64,
    pub x_cos: f64,
    pub x_sin: f64,
}

impl DesignRow {
    pub fn regressors(&self) -> [f64; 5] {
        [self.x_prev, self.x_lev, self.x_rho, self.x_cos, self.x_sin]
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ExclusionTally {
    pub missing_prev: usize,
    pub undefined_leverage: usize,
    pub no_change: usize,
    pub zero_leverage: usize,
}

impl ExclusionTally {
    pub fn total(&self) -> usize {
        self.missing_prev + self.undefined_leverage + self.no_change + self.zero_leverage
    }

    pub fn add(&mut self, other: &ExclusionTally) {
        self.missing_prev += other.missing_prev;
        self.undefined_leverage += other.undefined_leverage;
        self.no_change += other.no_change;
        self.zero_leverage += other.zero_leverage;
    }
}

/// Build regression rows. With `log_offset = None` rows whose leverage or
/// change distance is zero are dropped; with `Some(eps)` both enter as
/// `log10(x + eps)`. A row is tallied under the first reason that applies.
pub fn build_design_matrix(
    pairs: &[PairObservation],
    log_offset: Option<f64>,
) -> (Vec<DesignRow>, ExclusionTally) {
    let mut rows = Vec::with_capacity(pairs.len());
    let mut tally = ExclusionTally::default();
    let log = |x: f64| match log_offset {
        Some(eps) => (x + eps).log10(),
        None => x.log10(),
    };
    for pair in pairs {
        let Some(prev) = pair.prev_interval_days else {
            tally.missing_prev += 1;
            continue;
        };
        let Some(lambda) = pair.lambda else {
            tally.undefined_leverage += 1;
            continue;
        };
        let theta = match pair.theta_deg {
            Some(t) if pair.rho > 0.0 => t,
            _ => {
                tally.no_change += 1;
                continue;
            }
        };
        if lambda == 0.0 && log_offset.is_none() {
            tally.zero_leverage += 1;
            continue;
        }
        let row = DesignRow {
            y: (pair.interval_days + 1.0).log10(),
            x_prev: (prev + 1.0).log10(),
            x_lev: log(lambda),
            x_rho: log(pair.rho),
            x_cos: (theta - 45.0).to_radians().cos(),
            x_sin: theta.to_radians().sin(),
        };
        rows.push(row);
    }
    (rows, tally)
}

// ---------------------------------------------------------------------------
// ordinary least squares

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Coefficient {
    pub term: String,
    pub estimate: f64,
    pub std_error: f64,
    /// `None` when the standard error is zero.
    pub t_statistic: Option<f64>,
    pub p_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegressionFit {
    pub coefficients: Vec<Coefficient>,
    pub r_squared: f64,
    pub adj_r_squared: f64,
    pub rmse: f64,
    pub n_rows: usize,
    pub n_excluded: usize,
}

impl RegressionFit {
    pub fn coefficient(&self, term: &str) -> Option<&Coefficient> {
        self.coefficients.iter().find(|c| c.term == term)
    }

    pub fn estimates(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.estimate).collect()
    }
}

/// Relative size of an `R` diagonal entry below which its column is treated
/// as a linear combination of the earlier ones.
const RANK_TOLERANCE: f64 = 1e-10;

/// Least squares with an intercept prepended. `regressors` holds one row per
/// observation; `names` names the regressor columns (not the intercept).
pub fn fit_ols_matrix(
    names: &[&str],
    regressors: &[Vec<f64>],
    y: &[f64],
) -> Result<RegressionFit, StatsError> {
    let n = y.len();
    let p = names.len() + 1;
    if regressors.len() != n {
        return Err(StatsError::LengthMismatch(regressors.len(), n));
    }
    if n <= p {
        return Err(StatsError::InsufficientRows { rows: n, terms: p });
    }
    let mut x = DMatrix::<f64>::zeros(n, p);
    for (i, row) in regressors.iter().enumerate() {
        if row.len() != names.len() {
            return Err(StatsError::LengthMismatch(row.len(), names.len()));
        }
        x[(i, 0)] = 1.0;
        for (j, v) in row.iter().enumerate() {
            x[(i, j + 1)] = *v;
        }
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let term = |j: usize| {
        if j == 0 {
            "intercept".to_string()
        } else {
            names[j - 1].to_string()
        }
    };

    // Column scaling keeps the rank test independent of units.
    let scale: Vec<f64> = (0..p)
        .map(|j| {
            let norm = x.column(j).norm();
            if norm > 0.0 {
                norm
            } else {
                1.0
            }
        })
        .collect();
    let mut xs = x.clone();
    for (j, s) in scale.iter().enumerate() {
        xs.column_mut(j).scale_mut(1.0 / s);
    }
    let qr = xs.qr();
    let r = qr.r();
    let collinear: Vec<String> = (0..p)
        .filter(|&j| x.column(j).norm() == 0.0 || r[(j, j)].abs() < RANK_TOLERANCE)
        .map(term)
        .collect();
    if !collinear.is_empty() {
        return Err(StatsError::RankDeficient { columns: collinear });
    }
    let yv = DVector::from_column_slice(y);
    let qty = qr.q().transpose() * &yv;
    let r_inv = r
        .clone()
        .try_inverse()
        .ok_or_else(|| StatsError::RankDeficient {
            columns: (0..p).map(term).collect(),
        })?;
    let beta_scaled = &r_inv * qty;
    let beta: Vec<f64> = (0..p).map(|j| beta_scaled[j] / scale[j]).collect();

    let fitted = &x * DVector::from_column_slice(&beta);
    let ssr: f64 = yv
        .iter()
        .zip(fitted.iter())
        .map(|(a, b)| (a - b).powi(2))
        .sum();
    let y_mean = mean(y);
    let sst: f64 = y.iter().map(|v| (v - y_mean).powi(2)).sum();
    let dof = (n - p) as f64;
    let sigma2 = ssr / dof;

    let t_dist = StudentsT::new(0.0, 1.0, dof).expect("positive degrees of freedom");
    let coefficients = (0..p)
        .map(|j| {
            // (X'X)^-1 = R^-1 R^-T, undone for the column scaling.
            let var = sigma2 * r_inv.row(j).norm_squared() / (scale[j] * scale[j]);
            let se = var.sqrt();
            let t = (se > 0.0).then(|| beta[j] / se);
            Coefficient {
                term: term(j),
                estimate: beta[j],
                std_error: se,
                t_statistic: t,
                p_value: t.map(|t| (2.0 * t_dist.sf(t.abs())).min(1.0)),
            }
        })
        .collect();

    let r_squared = if sst > 0.0 {
        (1.0 - ssr / sst).clamp(0.0, 1.0)
    } else {
        1.0
    };
    let adj_r_squared = 1.0 - (1.0 - r_squared) * (n as f64 - 1.0) / dof;
    Ok(RegressionFit {
        coefficients,
        r_squared,
        adj_r_squared,
        rmse: (ssr / n as f64).sqrt(),
        n_rows: n,
        n_excluded: 0,
    })
}

pub fn fit_ols(rows: &[DesignRow]) -> Result<RegressionFit, StatsError> {
    let x: Vec<Vec<f64>> = rows.iter().map(|r| r.regressors().to_vec()).collect();
    let y: Vec<f64> = rows.iter().map(|r| r.y).collect();
    fit_ols_matrix(&TERMS[1..], &x, &y)
}

// ---------------------------------------------------------------------------
// 2x2 tables

/// `a`: high leverage and vulnerable, `b`: high and not, `c`: low and
/// vulnerable, `d`: low and not.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ContingencyTable {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl ContingencyTable {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        ContingencyTable { a, b, c, d }
    }

    /// High leverage means strictly above `threshold`.
    pub fn from_observations(obs: impl IntoIterator<Item = (f64, bool)>, threshold: f64) -> Self {
        let mut t = ContingencyTable::default();
        for (lambda, vulnerable) in obs {
            match (lambda > threshold, vulnerable) {
                (true, true) => t.a += 1,
                (true, false) => t.b += 1,
                (false, true) => t.c += 1,
                (false, false) => t.d += 1,
            }
        }
        t
    }

    pub fn total(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }

    pub fn transpose(&self) -> Self {
        ContingencyTable::new(self.a, self.c, self.b, self.d)
    }

    /// Swap both rows and columns.
    pub fn rotate(&self) -> Self {
        ContingencyTable::new(self.d, self.c, self.b, self.a)
    }
}

pub fn odds_ratio(t: &ContingencyTable) -> Result<f64, StatsError> {
    if t.b == 0 || t.c == 0 || t.d == 0 {
        let [a, b, c, d] = [t.a, t.b, t.c, t.d].map(|v| v as f64 + 0.5);
        return Err(StatsError::ZeroCell {
            haldane: (a / b) / (c / d),
        });
    }
    Ok((t.a as f64 / t.b as f64) / (t.c as f64 / t.d as f64))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FisherExact {
    pub p_value: f64,
    /// Natural log of `p_value`, usable when `p_value` underflows.
    pub ln_p_value: f64,
    /// Set when a margin is zero and `p_value` is 1 by convention.
    pub zero_margin: bool,
}

/// Two-sided Fisher exact test: the total probability of tables with the
/// observed margins that are no more likely than the observed one.
pub fn fisher_exact(t: &ContingencyTable) -> FisherExact {
    let row1 = t.a + t.b;
    let row2 = t.c + t.d;
    let col1 = t.a + t.c;
    let col2 = t.b + t.d;
    if row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0 {
        return FisherExact {
            p_value: 1.0,
            ln_p_value: 0.0,
            zero_margin: true,
        };
    }
    let lo = col1.saturating_sub(row2);
    let hi = row1.min(col1);
    // Log weights relative to k = lo via the pmf ratio
    // P(k+1)/P(k) = (row1-k)(col1-k) / ((k+1)(row2-col1+k+1)).
    let mut lw = Vec::with_capacity((hi - lo + 1) as usize);
    let mut acc = 0.0f64;
    lw.push(acc);
    for k in lo..hi {
        let num = ((row1 - k) as f64) * ((col1 - k) as f64);
        let den = ((k + 1) as f64) * ((row2 + k + 1 - col1) as f64);
        acc += (num / den).ln();
        lw.push(acc);
    }
    let observed = lw[(t.a - lo) as usize];
    let slack = 1e-12;
    let ln_total = log_sum_exp(lw.iter().copied());
    let ln_tail = log_sum_exp(lw.iter().copied().filter(|&w| w <= observed + slack));
    let ln_p = (ln_tail - ln_total).min(0.0);
    FisherExact {
        p_value: ln_p.exp(),
        ln_p_value: ln_p,
        zero_margin: false,
    }
}

fn log_sum_exp(values: impl Iterator<Item = f64> + Clone) -> f64 {
    let max = values.clone().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + values.map(|v| (v - max).exp()).sum::<f64>().ln()
}

// ---------------------------------------------------------------------------
// correlation and effect size

/// Fractional ranks starting at 1; ties share their average rank.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Spearman {
    pub rho: f64,
    pub p_value: f64,
    pub n: usize,
}

pub fn spearman(x: &[f64], y: &[f64]) -> Result<Spearman, StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch(x.len(), y.len()));
    }
    let n = x.len();
    if n < 3 {
        return Err(StatsError::TooFew {
            what: "spearman",
            needed: 3,
            got: n,
        });
    }
    let rx = average_ranks(x);
    let ry = average_ranks(y);
    let has_ties = |r: &[f64]| {
        r.iter().any(|v| v.fract() != 0.0) || {
            let mut s = r.to_vec();
            s.sort_by(f64::total_cmp);
            s.windows(2).any(|w| w[0] == w[1])
        }
    };
    let rho = if !has_ties(&rx) && !has_ties(&ry) {
        // Integer ranks: the closed form is exact.
        let d2: u128 = rx
            .iter()
            .zip(&ry)
            .map(|(a, b)| {
                let d = (*a as i128 - *b as i128).unsigned_abs();
                d * d
            })
            .sum();
        let n = n as u128;
        1.0 - (6 * d2) as f64 / (n * (n * n - 1)) as f64
    } else {
        let (mx, my) = (mean(&rx), mean(&ry));
        let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
        for (a, b) in rx.iter().zip(&ry) {
            sxy += (a - mx) * (b - my);
            sxx += (a - mx).powi(2);
            syy += (b - my).powi(2);
        }
        if sxx == 0.0 || syy == 0.0 {
            return Err(StatsError::ConstantInput);
        }
        (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0)
    };
    let dof = (n - 2) as f64;
    let p_value = if rho.abs() >= 1.0 {
        0.0
    } else {
        let t = rho * (dof / (1.0 - rho * rho)).sqrt();
        let dist = StudentsT::new(0.0, 1.0, dof).expect("positive degrees of freedom");
        (2.0 * dist.sf(t.abs())).min(1.0)
    };
    Ok(Spearman { rho, p_value, n })
}

pub fn cohens_d(g1: &[f64], g2: &[f64]) -> Result<f64, StatsError> {
    for g in [g1, g2] {
        if g.len() < 2 {
            return Err(StatsError::TooFew {
                what: "cohens_d",
                needed: 2,
                got: g.len(),
            });
        }
    }
    let (n1, n2) = (g1.len() as f64, g2.len() as f64);
    let pooled =
        ((n1 - 1.0) * sample_variance(g1) + (n2 - 1.0) * sample_variance(g2)) / (n1 + n2 - 2.0);
    if pooled <= 0.0 {
        return Err(StatsError::ZeroPooledSd);
    }
    Ok((mean(g1) - mean(g2)) / pooled.sqrt())
}

// ---------------------------------------------------------------------------
// kernel density

#[derive(Debug, Clone, PartialEq)]
pub struct GaussianKde {
    samples: Vec<f64>,
    bandwidth: f64,
}

impl GaussianKde {
    /// Without a bandwidth, Scott's rule `sd * n^(-1/5)` is used and at least
    /// two distinct samples are needed.
    pub fn new(samples: &[f64], bandwidth: Option<f64>) -> Result<Self, StatsError> {
        let bandwidth = match bandwidth {
            Some(h) => {
                if !(h.is_finite() && h > 0.0) {
                    return Err(StatsError::BadBandwidth(h));
                }
                if samples.is_empty() {
                    return Err(StatsError::Empty("kde"));
                }
                h
            }
            None => {
                if samples.len() < 2 {
                    return Err(StatsError::TooFew {
                        what: "kde",
                        needed: 2,
                        got: samples.len(),
                    });
                }
                let sd = sample_variance(samples).sqrt();
                if sd == 0.0 {
                    return Err(StatsError::ZeroVariance);
                }
                sd * (samples.len() as f64).powf(-0.2)
            }
        };
        Ok(GaussianKde {
            samples: samples.to_vec(),
            bandwidth,
        })
    }

    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    pub fn density(&self, x: f64) -> f64 {
        let h = self.bandwidth;
        let norm = 1.0 / (self.samples.len() as f64 * h * (2.0 * PI).sqrt());
        norm * self
            .samples
            .iter()
            .map(|s| {
                let z = (x - s) / h;
                (-0.5 * z * z).exp()
            })
            .sum::<f64>()
    }

    pub fn evaluate(&self, grid: &[f64]) -> Vec<f64> {
        grid.iter().map(|&x| self.density(x)).collect()
    }
}

/// Evenly spaced points from `start` to `end` inclusive.
pub fn linear_grid(start: f64, end: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let step = (end - start) / (points - 1) as f64;
            (0..points).map(|i| start + step * i as f64).collect()
        }
    }
}

/// Whole degrees from -180 to 180.
pub fn angle_grid() -> Vec<f64> {
    (-180..=180).map(f64::from).collect()
}
