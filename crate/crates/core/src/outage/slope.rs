//! Empirical diversity-order estimation: sweep SNR, scale the target rates
//! as `R = r·log2(SNR) + offset`, estimate outage per point and fit the
//! negated least-squares slope of `log10 p` against `log10 SNR`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::{sample_from_base, FadingModel, OutageEstimate, StrategySet, ZicTargets};
use crate::femto::{closed_outer_bound_contains, ZChannelGains};
use crate::outage::SplitConfig;

/// Grid points with fewer failures than this carry too much relative error
/// and are excluded from the fit.
pub const MIN_FAILURES_PER_POINT: u64 = 50;

/// What the slope estimator simulates at each SNR point.
#[derive(Clone, Debug)]
pub enum SlopeScenario {
    /// A single Rayleigh link at rate `gain·log2(SNR) + offset_bits`;
    /// `gain = 0` with a positive offset measures diversity at fixed rate.
    SingleLink {
        variance: f64,
        gain: f64,
        offset_bits: f64,
    },
    /// Z interference channel without CSIT: both users scale their rates,
    /// receiver 1 uses the enabled strategy set. Rate splitting has no
    /// defined rate schedule under scaling and is rejected.
    Zic {
        model: FadingModel,
        strategies: StrategySet,
        r1: f64,
        r2: f64,
    },
    /// Closed-access femto cell with CSIT: outage is exit from the
    /// finite-SNR closed-access outer bound, with `SNR_m = SNR_f^alpha` and
    /// `INR_f = SNR_f^inr_exponent`.
    FemtoClosedAccess {
        alpha: f64,
        inr_exponent: f64,
        r11: f64,
        r22: f64,
    },
}

impl SlopeScenario {
    fn validate(&self) {
        match self {
            Self::SingleLink {
                variance,
                gain,
                offset_bits,
            } => {
                assert!(variance.is_finite() && *variance > 0.0, "variance must be positive");
                assert!(*gain >= 0.0 && *offset_bits >= 0.0, "rates must be nonnegative");
            }
            Self::Zic { strategies, r1, r2, .. } => {
                assert!(*r1 >= 0.0 && *r2 >= 0.0, "multiplexing gains must be nonnegative");
                assert!(
                    !strategies.rate_split,
                    "rate splitting is not supported in slope scenarios"
                );
            }
            Self::FemtoClosedAccess {
                alpha,
                inr_exponent,
                r11,
                r22,
            } => {
                assert!(*alpha > 0.0, "alpha must be positive");
                assert!((0.0..=1.0).contains(inr_exponent), "INR exponent must lie in [0, 1]");
                assert!(*r11 >= 0.0 && *r22 >= 0.0, "multiplexing gains must be nonnegative");
            }
        }
    }

    /// Analytic point outage estimate backing one SNR grid point.
    fn estimate(&self, snr_db: f64, trials: u64, seed: u64) -> OutageEstimate {
        let snr = 10f64.powf(snr_db / 10.0);
        let bits = snr.log2();
        let base = ChaCha8Rng::seed_from_u64(seed);
        let failures: u64 = match self {
            Self::SingleLink {
                variance,
                gain,
                offset_bits,
            } => {
                let model = FadingModel::new(*variance, 1.0, 1.0);
                let rate = gain * bits + offset_bits;
                (0..trials)
                    .into_par_iter()
                    .map(|t| {
                        let g = sample_from_base(&base, &model, t);
                        let ok = rate <= (1.0 + snr * g.h11.norm_sqr()).log2();
                        u64::from(!ok)
                    })
                    .sum()
            }
            Self::Zic {
                model,
                strategies,
                r1,
                r2,
            } => {
                let targets = ZicTargets::new(
                    r1 * bits,
                    SplitConfig::new(0.0, 0.0, r2 * bits),
                );
                (0..trials)
                    .into_par_iter()
                    .map(|t| {
                        let g = sample_from_base(&base, model, t);
                        u64::from(!super::any_strategy_ok(&g, snr, *strategies, &targets))
                    })
                    .sum()
            }
            Self::FemtoClosedAccess {
                alpha,
                inr_exponent,
                r11,
                r22,
            } => {
                let model = FadingModel::unit();
                let snr_m = snr.powf(*alpha);
                let inr_f = snr.powf(*inr_exponent);
                let (rate_11, rate_22) = (r11 * bits, r22 * bits);
                (0..trials)
                    .into_par_iter()
                    .map(|t| {
                        let g = sample_from_base(&base, &model, t);
                        let z = ZChannelGains::new(g.h11, g.h21, g.h22, snr, snr_m, inr_f);
                        u64::from(!closed_outer_bound_contains(&z, rate_11, rate_22))
                    })
                    .sum()
            }
        };
        let p_hat = failures as f64 / trials as f64;
        OutageEstimate {
            trials,
            failures,
            p_hat,
            ci95_halfwidth: 1.96 * (p_hat * (1.0 - p_hat) / trials as f64).sqrt(),
            seed,
        }
    }
}

/// One SNR grid point of a slope run; `used` marks points that met the
/// failure-count floor and entered the fit.
#[derive(Clone, Copy, Debug)]
pub struct SlopePoint {
    pub snr_db: f64,
    pub estimate: OutageEstimate,
    pub used: bool,
}

/// Fitted slope plus the per-point evidence behind it.
#[derive(Clone, Debug)]
pub struct SlopeReport {
    /// Negated least-squares slope of `log10 p` vs `log10 SNR`.
    pub slope: f64,
    pub points: Vec<SlopePoint>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SlopeError {
    #[error(
        "diversity too high for trial budget: only {usable} of {total} SNR points \
         reached {MIN_FAILURES_PER_POINT} failures"
    )]
    InsufficientFailures { usable: usize, total: usize },
}

/// Estimates the diversity order of `scenario` over `window_db` with
/// `points` evenly spaced SNR grid points. Points with fewer than
/// [`MIN_FAILURES_PER_POINT`] failures are excluded; fewer than two usable
/// points is an error.
pub fn diversity_slope(
    scenario: &SlopeScenario,
    window_db: (f64, f64),
    points: usize,
    trials_per_point: u64,
    seed: u64,
) -> Result<SlopeReport, SlopeError> {
    scenario.validate();
    let (lo, hi) = window_db;
    assert!(lo < hi, "SNR window must satisfy lo < hi");
    assert!(points >= 2, "at least two SNR grid points required");
    assert!(trials_per_point >= 1, "at least one trial per point required");

    let step = (hi - lo) / (points - 1) as f64;
    let grid: Vec<SlopePoint> = (0..points)
        .map(|i| {
            let snr_db = lo + step * i as f64;
            let estimate = scenario.estimate(snr_db, trials_per_point, seed);
            SlopePoint {
                snr_db,
                estimate,
                used: estimate.failures >= MIN_FAILURES_PER_POINT,
            }
        })
        .collect();

    let usable: Vec<&SlopePoint> = grid.iter().filter(|p| p.used).collect();
    if usable.len() < 2 {
        return Err(SlopeError::InsufficientFailures {
            usable: usable.len(),
            total: grid.len(),
        });
    }

    let xs: Vec<f64> = usable.iter().map(|p| p.snr_db / 10.0).collect();
    let ys: Vec<f64> = usable.iter().map(|p| p.estimate.p_hat.log10()).collect();
    Ok(SlopeReport {
        slope: -least_squares_slope(&xs, &ys),
        points: grid,
    })
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
