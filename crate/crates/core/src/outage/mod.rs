//! Seeded Monte Carlo outage simulation for the Z interference channel over
//! Rayleigh fading.
//!
//! Receiver 1 may treat the interfering signal as noise, decode it jointly
//! as in a multiple access channel, or decode the common part of a
//! rate-split transmission while treating the private part as noise. A trial
//! counts as a failure only when every enabled strategy fails — the receiver
//! opportunistically uses the best decoder for each realization. Receiver 2
//! never sees interference in this geometry.
//!
//! Per-trial randomness derives from `(seed, trial_index)` alone through a
//! counter-based ChaCha stream, so failure counts are bit-identical for any
//! worker count and any scheduling order.
//!
//! # Example
//!
//! ```
//! use dmtnet_core::outage::{
//!     outage_probability, FadingModel, SplitConfig, StrategySet, ZicTargets,
//! };
//!
//! let targets = ZicTargets::new(2.0, SplitConfig::new(0.7, 0.4, 2.0));
//! let est = outage_probability(
//!     &FadingModel::new(1.0, 0.03, 1.4),
//!     24.0,
//!     StrategySet::new(true, true, true),
//!     &targets,
//!     10_000,
//!     7,
//! );
//! assert!(est.p_hat > 0.0 && est.p_hat < 0.2);
//! ```

mod slope;

pub use slope::{
    diversity_slope, SlopeError, SlopePoint, SlopeReport, SlopeScenario, MIN_FAILURES_PER_POINT,
};

use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

// ---------------------------------------------------------------------------
// Configuration types
// ---------------------------------------------------------------------------

/// Per-link Rayleigh fading variances of the Z geometry; `|h_sd|^2` is
/// exponential with mean `var_sd`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FadingModel {
    pub var_11: f64,
    pub var_21: f64,
    pub var_22: f64,
}

impl FadingModel {
    /// Panics unless all variances are positive and finite.
    pub fn new(var_11: f64, var_21: f64, var_22: f64) -> Self {
        for v in [var_11, var_21, var_22] {
            assert!(v.is_finite() && v > 0.0, "fading variances must be positive");
        }
        Self {
            var_11,
            var_21,
            var_22,
        }
    }

    /// Unit variance on every link.
    pub fn unit() -> Self {
        Self::new(1.0, 1.0, 1.0)
    }
}

/// Rate-splitting parameters of user 2: the fraction of its transmit power
/// on the common message and the common/private target rates in
/// bits/channel-use.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitConfig {
    pub lambda_common: f64,
    pub rate_common: f64,
    pub rate_private: f64,
}

impl SplitConfig {
    /// Panics unless `lambda_common ∈ [0, 1]` and the rates are nonnegative.
    pub fn new(lambda_common: f64, rate_common: f64, rate_private: f64) -> Self {
        assert!(
            (0.0..=1.0).contains(&lambda_common),
            "common power fraction must lie in [0, 1]"
        );
        assert!(
            rate_common >= 0.0 && rate_private >= 0.0,
            "split rates must be nonnegative"
        );
        Self {
            lambda_common,
            rate_common,
            rate_private,
        }
    }

    /// Total user-2 rate carried by the split transmission.
    pub fn total_rate(&self) -> f64 {
        self.rate_common + self.rate_private
    }
}

/// Which decoders receiver 1 may use; it picks the best per realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategySet {
    pub treat_as_noise: bool,
    pub joint_decode: bool,
    pub rate_split: bool,
}

impl StrategySet {
    /// Panics if no strategy is enabled.
    pub fn new(treat_as_noise: bool, joint_decode: bool, rate_split: bool) -> Self {
        assert!(
            treat_as_noise || joint_decode || rate_split,
            "at least one strategy must be enabled"
        );
        Self {
            treat_as_noise,
            joint_decode,
            rate_split,
        }
    }

    /// Canonical label, e.g. `tin+joint+split`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if self.treat_as_noise {
            parts.push("tin");
        }
        if self.joint_decode {
            parts.push("joint");
        }
        if self.rate_split {
            parts.push("split");
        }
        parts.join("+")
    }

    /// Parses a `+`-separated label such as `tin+joint`.
    pub fn parse(label: &str) -> Result<Self, String> {
        let (mut tin, mut joint, mut split) = (false, false, false);
        for part in label.split('+') {
            match part.trim() {
                "tin" => tin = true,
                "joint" => joint = true,
                "split" => split = true,
                other => return Err(format!("unknown strategy {other:?} in {label:?}")),
            }
        }
        if !(tin || joint || split) {
            return Err(format!("empty strategy set {label:?}"));
        }
        Ok(Self::new(tin, joint, split))
    }
}

/// Target rates for a ZIC outage run: the user-1 rate plus user 2's split
/// description. Strategy sets without splitting read only the total user-2
/// rate from the split.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZicTargets {
    pub rate_11: f64,
    pub split: SplitConfig,
}

impl ZicTargets {
    pub fn new(rate_11: f64, split: SplitConfig) -> Self {
        assert!(rate_11 >= 0.0, "rates must be nonnegative");
        Self { rate_11, split }
    }
}

// ---------------------------------------------------------------------------
// Channel sampling
// ---------------------------------------------------------------------------

/// One realization of the three complex link gains.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelGains {
    pub h11: Complex64,
    pub h21: Complex64,
    pub h22: Complex64,
}

/// Draws the channel realization of one trial. The output depends only on
/// `(seed, trial_index)` and the model, never on execution order: the seed
/// keys a ChaCha stream and the trial index selects the stream.
pub fn sample_channel(model: &FadingModel, trial_index: u64, seed: u64) -> ChannelGains {
    sample_from_base(&ChaCha8Rng::seed_from_u64(seed), model, trial_index)
}

fn sample_from_base(base: &ChaCha8Rng, model: &FadingModel, trial_index: u64) -> ChannelGains {
    let mut rng = base.clone();
    rng.set_stream(trial_index);
    ChannelGains {
        h11: rayleigh_gain(&mut rng, model.var_11),
        h21: rayleigh_gain(&mut rng, model.var_21),
        h22: rayleigh_gain(&mut rng, model.var_22),
    }
}

/// CN(0, variance) draw: exponential magnitude-squared by inverse CDF plus a
/// uniform phase.
fn rayleigh_gain<R: Rng>(rng: &mut R, variance: f64) -> Complex64 {
    let u: f64 = rng.gen();
    let mag_sq = -variance * (1.0 - u).ln();
    let phase = TAU * rng.gen::<f64>();
    Complex64::from_polar(mag_sq.sqrt(), phase)
}

// ---------------------------------------------------------------------------
// Decoding strategy success predicates
// ---------------------------------------------------------------------------

/// Treat-interference-as-noise: receiver 1 sees the whole user-2 signal as
/// noise, receiver 2 is interference-free.
pub fn tin_ok(gains: &ChannelGains, snr: f64, rate_11: f64, rate_2_total: f64) -> bool {
    let h11 = snr * gains.h11.norm_sqr();
    let h21 = snr * gains.h21.norm_sqr();
    rate_11 <= (1.0 + h11 / (1.0 + h21)).log2() && receiver2_ok(gains, snr, rate_2_total)
}

/// Joint decoding: both messages decoded at receiver 1 as in a two-user
/// multiple access channel.
pub fn joint_ok(gains: &ChannelGains, snr: f64, rate_11: f64, rate_2_total: f64) -> bool {
    let h11 = snr * gains.h11.norm_sqr();
    let h21 = snr * gains.h21.norm_sqr();
    // the sum-rate term keeps the same association as split_ok's degenerate
    // all-common form so the two are bit-identical at lambda = 1, Rp = 0
    rate_11 <= (1.0 + h11).log2()
        && rate_2_total <= (1.0 + h21).log2()
        && rate_11 + rate_2_total <= (1.0 + (h11 + h21)).log2()
        && receiver2_ok(gains, snr, rate_2_total)
}

/// Rate splitting: receiver 1 decodes its own message and the common part
/// jointly, treating the private part as noise; receiver 2 decodes its full
/// superposed codeword.
pub fn split_ok(gains: &ChannelGains, snr: f64, rate_11: f64, split: &SplitConfig) -> bool {
    let h11 = snr * gains.h11.norm_sqr();
    let h21 = snr * gains.h21.norm_sqr();
    let ic = split.lambda_common * h21;
    let ip = (1.0 - split.lambda_common) * h21;
    rate_11 <= (1.0 + h11 / (1.0 + ip)).log2()
        && split.rate_common <= (1.0 + ic / (1.0 + ip)).log2()
        && rate_11 + split.rate_common <= (1.0 + (h11 + ic) / (1.0 + ip)).log2()
        && receiver2_ok(gains, snr, split.total_rate())
}

fn receiver2_ok(gains: &ChannelGains, snr: f64, rate_2_total: f64) -> bool {
    rate_2_total <= (1.0 + snr * gains.h22.norm_sqr()).log2()
}

/// True when at least one enabled strategy succeeds on this realization.
pub fn any_strategy_ok(
    gains: &ChannelGains,
    snr: f64,
    strategies: StrategySet,
    targets: &ZicTargets,
) -> bool {
    let r2_total = targets.split.total_rate();
    (strategies.treat_as_noise && tin_ok(gains, snr, targets.rate_11, r2_total))
        || (strategies.joint_decode && joint_ok(gains, snr, targets.rate_11, r2_total))
        || (strategies.rate_split && split_ok(gains, snr, targets.rate_11, &targets.split))
}

// ---------------------------------------------------------------------------
// Outage estimation
// ---------------------------------------------------------------------------

/// Result of a Monte Carlo outage run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutageEstimate {
    pub trials: u64,
    pub failures: u64,
    /// `failures / trials`.
    pub p_hat: f64,
    /// 95% confidence halfwidth under the normal approximation.
    pub ci95_halfwidth: f64,
    pub seed: u64,
}

impl OutageEstimate {
    fn from_counts(trials: u64, failures: u64, seed: u64) -> Self {
        let p_hat = failures as f64 / trials as f64;
        let ci95_halfwidth = 1.96 * (p_hat * (1.0 - p_hat) / trials as f64).sqrt();
        Self {
            trials,
            failures,
            p_hat,
            ci95_halfwidth,
            seed,
        }
    }
}

/// Estimates the overall outage probability at `snr_db`: a trial fails iff
/// no enabled strategy succeeds on its realization. Trials run in parallel
/// on the current rayon pool; counts are identical for every worker count.
/// Panics if `trials` is zero.
pub fn outage_probability(
    model: &FadingModel,
    snr_db: f64,
    strategies: StrategySet,
    targets: &ZicTargets,
    trials: u64,
    seed: u64,
) -> OutageEstimate {
    assert!(trials >= 1, "at least one trial required");
    let snr = 10f64.powf(snr_db / 10.0);
    let base = ChaCha8Rng::seed_from_u64(seed);
    let failures = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let gains = sample_from_base(&base, model, trial);
            u64::from(!any_strategy_ok(&gains, snr, strategies, targets))
        })
        .sum();
    OutageEstimate::from_counts(trials, failures, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gains(h11_sq: f64, h21_sq: f64, h22_sq: f64) -> ChannelGains {
        ChannelGains {
            h11: Complex64::new(h11_sq.sqrt(), 0.0),
            h21: Complex64::new(h21_sq.sqrt(), 0.0),
            h22: Complex64::new(h22_sq.sqrt(), 0.0),
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let model = FadingModel::new(1.0, 0.03, 1.4);
        let a = sample_channel(&model, 12345, 42);
        let b = sample_channel(&model, 12345, 42);
        assert_eq!(a, b);
        let c = sample_channel(&model, 12346, 42);
        assert_ne!(a, c);
        let d = sample_channel(&model, 12345, 43);
        assert_ne!(a, d);
    }

    #[test]
    fn sampled_magnitudes_have_exponential_means() {
        let model = FadingModel::new(1.0, 0.03, 1.4);
        let n = 1_000_000u64;
        let (mut s11, mut s21, mut s22) = (0.0, 0.0, 0.0);
        for t in 0..n {
            let g = sample_from_base(&ChaCha8Rng::seed_from_u64(9), &model, t);
            s11 += g.h11.norm_sqr();
            s21 += g.h21.norm_sqr();
            s22 += g.h22.norm_sqr();
        }
        assert!((s11 / n as f64 - 1.0).abs() < 0.01);
        assert!((s21 / n as f64 - 0.03).abs() < 0.01 * 0.03 * 10.0);
        assert!((s22 / n as f64 - 1.4).abs() < 0.01 * 1.4 * 10.0);
    }

    #[test]
    fn tin_examples() {
        let g = gains(1.0, 1.0, 1.0);
        assert!(tin_ok(&g, 100.0, 0.0, 0.0));
        // log2(1 + 100/101) < 2
        assert!(!tin_ok(&g, 100.0, 2.0, 2.4));
        // dead cross link degenerates to two point-to-point conditions
        let free = gains(1.0, 0.0, 1.0);
        assert!(tin_ok(&free, 100.0, 6.0, 6.0));
        assert!(!tin_ok(&free, 100.0, 7.0, 6.0));
    }

    #[test]
    fn joint_examples() {
        let g = gains(1.0, 1.0, 1.0);
        assert!(joint_ok(&g, 100.0, 0.0, 0.0));
        // sum: log2(201) ≈ 7.65 >= 4.4, individuals ≈ 6.66
        assert!(joint_ok(&g, 100.0, 2.0, 2.4));
        // receiver 1 cannot decode user 2 over a dead cross link
        let dead = gains(1.0, 0.0, 1.0);
        assert!(!joint_ok(&dead, 100.0, 1.0, 0.5));
    }

    #[test]
    fn split_fixture() {
        // independently evaluated: caps (6.4046, 1.6398, 6.4402, 10.5127)
        // against targets (2, 0.4, 2.4, 2.4)
        let g = ChannelGains {
            h11: Complex64::new(0.9, 0.3),
            h21: Complex64::new(0.15, -0.1),
            h22: Complex64::new(1.1, 0.5),
        };
        let split = SplitConfig::new(0.7, 0.4, 2.0);
        assert!(split_ok(&g, 1000.0, 2.0, &split));
        assert!(tin_ok(&g, 1000.0, 2.0, 2.4));
        assert!(joint_ok(&g, 1000.0, 2.0, 2.4));
    }

    #[test]
    fn split_rescues_realizations_both_plain_strategies_lose() {
        // |h|^2 = (0.01, 0.004, 1.0) at snr 1000: tin cap log2(3) < 2,
        // joint user-2 cap log2(5) < 2.4, split caps (2.4713, 1.1844,
        // 2.7693, 9.9672) all clear
        let g = gains(0.01, 0.004, 1.0);
        let split = SplitConfig::new(0.7, 0.4, 2.0);
        assert!(!tin_ok(&g, 1000.0, 2.0, 2.4));
        assert!(!joint_ok(&g, 1000.0, 2.0, 2.4));
        assert!(split_ok(&g, 1000.0, 2.0, &split));
    }

    #[test]
    fn split_degenerates_exactly() {
        let model = FadingModel::new(1.0, 0.03, 1.4);
        let snr = 10f64.powf(2.3);
        for trial in 0..10_000u64 {
            let g = sample_channel(&model, trial, 99);
            // lambda = 0, Rc = 0: split is treat-as-noise on the private rate
            let as_tin = SplitConfig::new(0.0, 0.0, 2.4);
            assert_eq!(
                split_ok(&g, snr, 2.0, &as_tin),
                tin_ok(&g, snr, 2.0, 2.4),
                "trial {trial}"
            );
            // lambda = 1, Rp = 0: split is joint decoding on the common rate
            let as_joint = SplitConfig::new(1.0, 2.4, 0.0);
            assert_eq!(
                split_ok(&g, snr, 2.0, &as_joint),
                joint_ok(&g, snr, 2.0, 2.4),
                "trial {trial}"
            );
        }
    }

    #[test]
    fn more_strategies_never_hurt() {
        let model = FadingModel::new(1.0, 0.03, 1.4);
        let targets = ZicTargets::new(2.0, SplitConfig::new(0.7, 0.4, 2.0));
        let snr = 10f64.powf(2.2);
        for trial in 0..10_000u64 {
            let g = sample_channel(&model, trial, 5);
            let t = any_strategy_ok(&g, snr, StrategySet::new(true, false, false), &targets);
            let tj = any_strategy_ok(&g, snr, StrategySet::new(true, true, false), &targets);
            let tjs = any_strategy_ok(&g, snr, StrategySet::new(true, true, true), &targets);
            assert!(tj || !t);
            assert!(tjs || !tj);
        }
    }

    #[test]
    fn zero_rates_never_fail() {
        let targets = ZicTargets::new(0.0, SplitConfig::new(0.5, 0.0, 0.0));
        let est = outage_probability(
            &FadingModel::unit(),
            10.0,
            StrategySet::new(true, false, false),
            &targets,
            1_000,
            1,
        );
        assert_eq!(est.failures, 0);
        assert_eq!(est.p_hat, 0.0);
    }

    #[test]
    fn unreachable_rate_always_fails() {
        let targets = ZicTargets::new(1000.0, SplitConfig::new(0.5, 0.0, 0.0));
        let est = outage_probability(
            &FadingModel::unit(),
            40.0,
            StrategySet::new(true, true, false),
            &targets,
            1_000,
            1,
        );
        assert_eq!(est.failures, 1_000);
    }

    #[test]
    fn counts_do_not_depend_on_worker_count() {
        let model = FadingModel::new(1.0, 0.03, 1.4);
        let targets = ZicTargets::new(2.0, SplitConfig::new(0.7, 0.4, 2.0));
        let mut counts = Vec::new();
        for workers in [1usize, 4, 16] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .unwrap();
            let est = pool.install(|| {
                outage_probability(
                    &model,
                    22.0,
                    StrategySet::new(true, true, true),
                    &targets,
                    200_000,
                    77,
                )
            });
            counts.push(est.failures);
        }
        assert_eq!(counts[0], counts[1]);
        assert_eq!(counts[0], counts[2]);
        assert!(counts[0] > 0);
    }

    #[test]
    fn estimator_matches_single_link_closed_form() {
        // single Rayleigh link via joint decoding with a silent user 2
        let model = FadingModel::unit();
        let targets = ZicTargets::new(1.0, SplitConfig::new(0.5, 0.0, 0.0));
        for snr_db in [10.0, 15.0, 20.0] {
            let est = outage_probability(
                &model,
                snr_db,
                StrategySet::new(false, true, false),
                &targets,
                1_000_000,
                13,
            );
            let snr = 10f64.powf(snr_db / 10.0);
            let expect = 1.0 - (-(2f64.powf(1.0) - 1.0) / snr).exp();
            assert!(
                (est.p_hat - expect).abs() <= 3.0 * est.ci95_halfwidth,
                "{snr_db} dB: {} vs {expect}",
                est.p_hat
            );
        }
    }

    #[test]
    #[should_panic(expected = "at least one trial")]
    fn zero_trials_rejected() {
        outage_probability(
            &FadingModel::unit(),
            10.0,
            StrategySet::new(true, false, false),
            &ZicTargets::new(1.0, SplitConfig::new(0.5, 0.0, 0.0)),
            0,
            1,
        );
    }

    #[test]
    fn strategy_labels_round_trip() {
        for label in ["tin", "joint", "split", "tin+joint", "tin+joint+split"] {
            assert_eq!(StrategySet::parse(label).unwrap().label(), label);
        }
        assert!(StrategySet::parse("tin+laser").is_err());
        assert!(StrategySet::parse("").is_err());
    }
}
