//! Point-to-point MIMO diversity-multiplexing tradeoff.

use crate::piecewise::PiecewiseLinear;
use crate::rational::rat;

/// Antenna counts for a multi-user network: per-source transmit antennas and
/// the common receive antenna count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntennaConfig {
    tx_per_source: Vec<u32>,
    rx: u32,
}

impl AntennaConfig {
    /// Panics if any count is zero or the source list is empty.
    pub fn new(tx_per_source: Vec<u32>, rx: u32) -> Self {
        assert!(!tx_per_source.is_empty(), "at least one source required");
        assert!(
            tx_per_source.iter().all(|&m| m >= 1),
            "transmit antenna counts must be >= 1"
        );
        assert!(rx >= 1, "receive antenna count must be >= 1");
        Self { tx_per_source, rx }
    }

    /// All sources with the same transmit antenna count.
    pub fn symmetric(sources: usize, tx: u32, rx: u32) -> Self {
        Self::new(vec![tx; sources], rx)
    }

    pub fn sources(&self) -> usize {
        self.tx_per_source.len()
    }

    pub fn tx(&self, source: usize) -> u32 {
        self.tx_per_source[source]
    }

    pub fn rx(&self) -> u32 {
        self.rx
    }
}

/// DMT of the point-to-point MIMO channel with `tx` transmit and `rx`
/// receive antennas: the piecewise-linear interpolation of the integer
/// points `(k, (tx − k)(rx − k))` for `k = 0..min(tx, rx)`, constant zero
/// beyond. Panics if either count is zero.
pub fn ptp_dmt(tx: u32, rx: u32) -> PiecewiseLinear {
    assert!(tx >= 1, "tx antennas must be >= 1");
    assert!(rx >= 1, "rx antennas must be >= 1");
    let (m, n) = (i64::from(tx), i64::from(rx));
    let points = (0..=m.min(n))
        .map(|k| (rat(k, 1), rat((m - k) * (n - k), 1)))
        .collect();
    PiecewiseLinear::new(points)
}
