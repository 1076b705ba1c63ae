//! Femto-cell "loud neighbor" analysis with CSIT.
//!
//! The femto access point is receiver 1 of a Z geometry: it hears its own
//! user (SNR_f) plus cross-tier interference from the macro user (INR_f),
//! while the macro base station hears only the macro user (SNR_m). The
//! link-quality ratio `α = log SNR_m / log SNR_f` drives everything.
//!
//! Three access policies are covered: closed access (the macro user is
//! interference, a Z interference channel), open access (the macro user may
//! route through the femto AP, a Z channel with three messages) and
//! orthogonal access. Diversity orders are exact rational evaluations of the
//! closed forms; the finite-SNR capacity outer bounds back the Monte Carlo
//! slope validation in [`crate::outage`].

use num::complex::Complex64;
use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::rational::{pos, rat, Rational};

/// High-SNR femto-cell scenario parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct FemtoConfig {
    /// `α = log SNR_m / log SNR_f`, the macro-to-femto link quality ratio.
    pub alpha: Rational,
    /// Femto-link SNR in dB, used only at finite SNR.
    pub snr_f_db: f64,
    /// SNR exponent of the cross link INR_f (INR_f ≐ SNR_f^e). The
    /// propositions are consistent with the cross link scaling like the
    /// femto direct link, hence the default of 1.
    pub inr_exponent: Rational,
}

impl FemtoConfig {
    /// Panics unless `alpha > 0` and the INR exponent lies in `[0, 1]`.
    pub fn new(alpha: Rational, snr_f_db: f64, inr_exponent: Rational) -> Self {
        assert!(alpha.is_positive(), "alpha must be positive");
        assert!(
            !inr_exponent.is_negative() && inr_exponent <= Rational::one(),
            "INR exponent must lie in [0, 1]"
        );
        Self {
            alpha,
            snr_f_db,
            inr_exponent,
        }
    }
}

/// Multiplexing gains of the femto user (`r11`) and the macro user (`r22`).
/// Under open access the macro gain aggregates both of its message paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FemtoRates {
    pub r11: Rational,
    pub r22: Rational,
}

impl FemtoRates {
    pub fn new(r11: Rational, r22: Rational) -> Self {
        assert!(
            !r11.is_negative() && !r22.is_negative(),
            "multiplexing gains must be nonnegative"
        );
        Self { r11, r22 }
    }

    pub fn symmetric(r: Rational) -> Self {
        Self::new(r, r)
    }
}

/// How the network treats the macro-cell user.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AccessPolicy {
    /// Macro user excluded from the femto AP (Z interference channel).
    Closed,
    /// Macro user admitted at the femto AP (Z channel).
    Open,
    /// Macro and femto users on orthogonal resources.
    Orthogonal,
}

/// Diversity order of the closed-access policy:
/// `min((1 − r11)+, (α − r22)+, 2(1 − 2rΣ)+ + (α − 2rΣ)+)` with
/// `rΣ = r11 + r22`.
pub fn closed_access_dmt(rates: &FemtoRates, alpha: Rational) -> Rational {
    assert!(alpha.is_positive(), "alpha must be positive");
    let one = Rational::one();
    let two = rat(2, 1);
    let r_sum = rates.r11 + rates.r22;
    let d_a = pos(one - rates.r11);
    let d_b = pos(alpha - rates.r22);
    let d_c = two * pos(one - two * r_sum) + pos(alpha - two * r_sum);
    d_a.min(d_b).min(d_c)
}

/// Diversity order of the open-access policy: as closed access but with the
/// macro bottleneck relaxed to `(1 − r22)+ + (α − r22)+`.
pub fn open_access_dmt(rates: &FemtoRates, alpha: Rational) -> Rational {
    assert!(alpha.is_positive(), "alpha must be positive");
    let one = Rational::one();
    let two = rat(2, 1);
    let r_sum = rates.r11 + rates.r22;
    let d_a = pos(one - rates.r11);
    let d_b = pos(one - rates.r22) + pos(alpha - rates.r22);
    let d_c = two * pos(one - two * r_sum) + pos(alpha - two * r_sum);
    d_a.min(d_b).min(d_c)
}

/// Degrees of freedom of orthogonal access, optimized over the time share:
/// `α / (1 + α)`. Panics on negative `alpha`.
pub fn orthogonal_dof(alpha: Rational) -> Rational {
    assert!(!alpha.is_negative(), "alpha must be nonnegative");
    alpha / (Rational::one() + alpha)
}

/// Largest symmetric multiplexing gain `r11 = r22 = r` admitted by the
/// high-SNR constraint set of the given policy.
pub fn symmetric_dof(policy: AccessPolicy, alpha: Rational) -> Rational {
    assert!(alpha.is_positive(), "alpha must be positive");
    let one = Rational::one();
    let cap = one.max(alpha);
    match policy {
        // r <= 1, r <= alpha, 2r <= max(1, alpha)
        AccessPolicy::Closed => one.min(alpha).min(cap / rat(2, 1)),
        // r <= 1, r <= max(alpha, 1), 2r <= max(1, alpha)
        AccessPolicy::Open => one.min(cap / rat(2, 1)),
        AccessPolicy::Orthogonal => orthogonal_dof(alpha),
    }
}

/// One realization of the Z-channel links together with the operating
/// SNR/INR levels (linear scale).
#[derive(Clone, Copy, Debug)]
pub struct ZChannelGains {
    pub h11: Complex64,
    pub h21: Complex64,
    pub h22: Complex64,
    pub snr_f: f64,
    pub snr_m: f64,
    pub inr_f: f64,
}

impl ZChannelGains {
    /// Panics on non-finite gains or non-positive/non-finite power levels.
    pub fn new(
        h11: Complex64,
        h21: Complex64,
        h22: Complex64,
        snr_f: f64,
        snr_m: f64,
        inr_f: f64,
    ) -> Self {
        for h in [h11, h21, h22] {
            assert!(h.re.is_finite() && h.im.is_finite(), "non-finite channel gain");
        }
        for s in [snr_f, snr_m, inr_f] {
            assert!(s.is_finite() && s > 0.0, "SNR/INR levels must be positive and finite");
        }
        Self {
            h11,
            h21,
            h22,
            snr_f,
            snr_m,
            inr_f,
        }
    }
}

/// Capacity outer bound of the open-access Z channel: true iff the rate pair
/// `(r11, r2)` in bits/channel-use satisfies all four constraints. Panics on
/// negative or non-finite rates.
pub fn z_outer_bound_contains(gains: &ZChannelGains, r11: f64, r2: f64) -> bool {
    assert!(r11.is_finite() && r2.is_finite() && r11 >= 0.0 && r2 >= 0.0);
    let sf = gains.snr_f * gains.h11.norm_sqr();
    let sm = gains.snr_m * gains.h22.norm_sqr();
    let if_ = gains.inr_f * gains.h21.norm_sqr();
    let a = r11 <= (1.0 + sf).log2();
    let b = r2 <= (1.0 + sm.max(if_)).log2();
    let sum = r11 + r2;
    let c = sum <= (1.0 + sf + if_).log2() + (1.0 + sm / (1.0 + if_)).log2();
    let d = sum <= (1.0 + sf + if_ / (1.0 + sm)).log2() + (1.0 + sm).log2();
    a && b && c && d
}

/// Finite-SNR outer bound of the closed-access system, assembled from the
/// open-access bound by deleting the macro user's femto-AP path: constraint
/// (a), the SNR_m-only part of (b), and (c)-(d) with the macro rate alone.
/// Its high-SNR limit is `r11 ≤ 1, r22 ≤ α, r11 + r22 ≤ max(1, α)`.
pub fn closed_outer_bound_contains(gains: &ZChannelGains, r11: f64, r22: f64) -> bool {
    assert!(r11.is_finite() && r22.is_finite() && r11 >= 0.0 && r22 >= 0.0);
    let sf = gains.snr_f * gains.h11.norm_sqr();
    let sm = gains.snr_m * gains.h22.norm_sqr();
    let if_ = gains.inr_f * gains.h21.norm_sqr();
    let a = r11 <= (1.0 + sf).log2();
    let b = r22 <= (1.0 + sm).log2();
    let sum = r11 + r22;
    let c = sum <= (1.0 + sf + if_).log2() + (1.0 + sm / (1.0 + if_)).log2();
    let d = sum <= (1.0 + sf + if_ / (1.0 + sm)).log2() + (1.0 + sm).log2();
    a && b && c && d
}
