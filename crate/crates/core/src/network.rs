//! Analytic DMT of multi-user networks without CSIT: the multiple access
//! channel, the X network, the two-user interference channel and the Z
//! interference channel.
//!
//! The MAC tradeoff for user `s` is the minimum, over every user subset
//! containing `s`, of the point-to-point tradeoff of the pooled subset
//! evaluated at the pooled multiplexing gain. All other network results in
//! this module reduce to that expression, and the reductions are kept as
//! explicit delegations so the identities stay testable.
//!
//! Everything here assumes equal channel strength on all links; unequal
//! variances belong to the femto and Monte Carlo modules.

use crate::piecewise::PiecewiseLinear;
use crate::ptp::{ptp_dmt, AntennaConfig};
use crate::rational::{pos, rat, Rational};
use num::Signed;

/// A multiple access channel: per-user antennas plus per-user multiplexing
/// gains.
#[derive(Clone, Debug)]
pub struct MacSpec {
    antennas: AntennaConfig,
    rates: Vec<Rational>,
}

impl MacSpec {
    /// Panics if the rate list length differs from the user count or any
    /// rate is negative.
    pub fn new(antennas: AntennaConfig, rates: Vec<Rational>) -> Self {
        assert_eq!(
            antennas.sources(),
            rates.len(),
            "one multiplexing gain per user required"
        );
        assert!(
            rates.iter().all(|r| !r.is_negative()),
            "multiplexing gains must be nonnegative"
        );
        Self { antennas, rates }
    }

    /// Two single-antenna users at a single-antenna receiver.
    pub fn two_user_single_antenna(r1: Rational, r2: Rational) -> Self {
        Self::new(AntennaConfig::symmetric(2, 1, 1), vec![r1, r2])
    }

    pub fn users(&self) -> usize {
        self.rates.len()
    }

    pub fn antennas(&self) -> &AntennaConfig {
        &self.antennas
    }

    pub fn rates(&self) -> &[Rational] {
        &self.rates
    }
}

/// Per-link multiplexing gains of an X network, indexed `(source,
/// destination)` over a square topology.
#[derive(Clone, Debug)]
pub struct MultiplexingTuple {
    entries: Vec<Vec<Rational>>,
}

impl MultiplexingTuple {
    /// `entries[s][d]` is the gain from source `s` to destination `d`.
    /// Panics unless the matrix is square, non-empty and nonnegative.
    pub fn new(entries: Vec<Vec<Rational>>) -> Self {
        assert!(!entries.is_empty(), "at least one source required");
        let n = entries.len();
        assert!(
            entries.iter().all(|row| row.len() == n),
            "X network requires as many destinations as sources"
        );
        assert!(
            entries.iter().flatten().all(|r| !r.is_negative()),
            "multiplexing gains must be nonnegative"
        );
        Self { entries }
    }

    pub fn sources(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, source: usize, destination: usize) -> Rational {
        self.entries[source][destination]
    }

    /// Total gain leaving `source`.
    pub fn source_sum(&self, source: usize) -> Rational {
        self.entries[source].iter().sum()
    }
}

/// An X network: every source carries an independent message to every
/// destination.
#[derive(Clone, Debug)]
pub struct XNetworkSpec {
    antennas: AntennaConfig,
    rates: MultiplexingTuple,
}

impl XNetworkSpec {
    pub fn new(antennas: AntennaConfig, rates: MultiplexingTuple) -> Self {
        assert_eq!(
            antennas.sources(),
            rates.sources(),
            "antenna config and rate tuple disagree on the source count"
        );
        Self { antennas, rates }
    }

    pub fn rates(&self) -> &MultiplexingTuple {
        &self.rates
    }
}

/// DMT of user `user` (0-based) in the MAC: minimum over all `2^(S-1)`
/// subsets containing the user of the pooled point-to-point tradeoff.
/// Panics if the index is out of range.
pub fn mac_user_dmt(spec: &MacSpec, user: usize) -> Rational {
    assert!(user < spec.users(), "user index out of range");
    let others: Vec<usize> = (0..spec.users()).filter(|&s| s != user).collect();
    let mut best: Option<Rational> = None;
    for mask in 0u32..(1 << others.len()) {
        let mut tx_sum = spec.antennas.tx(user);
        let mut rate_sum = spec.rates[user];
        for (bit, &s) in others.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                tx_sum += spec.antennas.tx(s);
                rate_sum += spec.rates[s];
            }
        }
        let d = ptp_dmt(tx_sum, spec.antennas.rx()).eval(rate_sum);
        best = Some(match best {
            Some(b) => b.min(d),
            None => d,
        });
    }
    best.expect("subset enumeration is never empty")
}

/// Overall MAC diversity: the minimum of [`mac_user_dmt`] over all users.
pub fn mac_dmt(spec: &MacSpec) -> Rational {
    (0..spec.users())
        .map(|s| mac_user_dmt(spec, s))
        .min()
        .expect("a MAC has at least one user")
}

/// Symmetric-rate MAC DMT as an exact curve in the common gain `r`:
/// the pointwise minimum over subset sizes `k = 1..=users` of
/// `d_{k·tx, rx}(k·r)`.
pub fn mac_dmt_curve_symmetric(users: u32, tx_per_user: u32, rx: u32) -> PiecewiseLinear {
    assert!(users >= 1, "at least one user required");
    let curves: Vec<PiecewiseLinear> = (1..=users)
        .map(|k| ptp_dmt(k * tx_per_user, rx).compose_scale(rat(i64::from(k), 1)))
        .collect();
    PiecewiseLinear::pointwise_min(&curves)
}

/// DMT of the X network: aggregate each source's outgoing gains and
/// evaluate the MAC tradeoff on the aggregates.
pub fn x_network_dmt(spec: &XNetworkSpec) -> Rational {
    let rates = (0..spec.rates.sources())
        .map(|s| spec.rates.source_sum(s))
        .collect();
    mac_dmt(&MacSpec::new(spec.antennas.clone(), rates))
}

/// DMT of the two-user single-antenna interference channel without CSIT:
/// equal to the two-user MAC tradeoff.
pub fn ic_dmt_no_csit(r1: Rational, r2: Rational) -> Rational {
    mac_dmt(&MacSpec::two_user_single_antenna(r1, r2))
}

/// Symmetric-rate DMT of the two-user interference channel with full CSIT:
/// `min((1 − r)+, 3(1 − 2r)+)`. Panics on negative `r`.
pub fn ic_dmt_full_csit_symmetric(r: Rational) -> Rational {
    assert!(!r.is_negative(), "multiplexing gain must be nonnegative");
    let one = rat(1, 1);
    pos(one - r).min(rat(3, 1) * pos(one - rat(2, 1) * r))
}

/// The full-CSIT symmetric interference-channel tradeoff as a curve.
pub fn ic_full_csit_symmetric_curve() -> PiecewiseLinear {
    PiecewiseLinear::clamped_line(rat(1, 1), rat(1, 1))
        .min(&PiecewiseLinear::clamped_line(rat(3, 1), rat(6, 1)))
}

/// DMT of the Z interference channel. The function is the same as
/// [`ic_dmt_no_csit`]; it is exposed under its own name so the identity is
/// an assertable fact rather than an assumption baked into call sites.
pub fn zic_dmt(r1: Rational, r2: Rational) -> Rational {
    ic_dmt_no_csit(r1, r2)
}
