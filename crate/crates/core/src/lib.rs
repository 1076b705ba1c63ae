//! Diversity-multiplexing tradeoff (DMT) analysis for interference networks.
//!
//! The crate has two halves:
//!
//! * **Exact analysis** — piecewise-linear DMT curves over exact rationals
//!   ([`piecewise`]), the point-to-point MIMO tradeoff ([`ptp`]), network
//!   tradeoffs for the MAC, X network, interference channel and Z
//!   interference channel ([`network`]), and femto-cell access policies
//!   ([`femto`]).
//! * **Monte Carlo validation** — a seeded, order-independent outage
//!   simulator over Rayleigh fading with treat-as-noise, joint and
//!   rate-splitting decoders, plus a log-log diversity slope estimator
//!   ([`outage`]).
//!
//! All analytic results are exact rational numbers; floating point appears
//! only in the simulator.

pub mod femto;
pub mod network;
pub mod outage;
pub mod piecewise;
pub mod ptp;
pub mod rational;
pub mod render;

pub use femto::{AccessPolicy, FemtoConfig, FemtoRates, ZChannelGains};
pub use network::{MacSpec, MultiplexingTuple, XNetworkSpec};
pub use outage::{
    ChannelGains, FadingModel, OutageEstimate, SlopeReport, SlopeScenario, SplitConfig,
    StrategySet, ZicTargets,
};
pub use piecewise::PiecewiseLinear;
pub use ptp::AntennaConfig;
pub use rational::{rat, Rational};
