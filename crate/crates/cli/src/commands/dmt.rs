//! `dmtnet dmt` — analytic DMT curves on an exact rational grid.
//!
//! Emits one `(r, d)` row per grid point plus one per exact breakpoint of
//! the swept curve(s); the `is_breakpoint` column marks the latter.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::Args;
use dmtnet_core::network::{ic_full_csit_symmetric_curve, mac_dmt_curve_symmetric};
use dmtnet_core::piecewise::PiecewiseLinear;
use dmtnet_core::render::fmt_rational;
use serde::{Deserialize, Serialize};

use crate::config;
use crate::error::{CliError, Result};
use crate::grid::RationalGrid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Network {
    /// Symmetric-rate multiple access channel
    Mac,
    /// Symmetric per-link X network (as many receivers as transmitters)
    X,
    /// Two-user interference channel without CSIT
    IcNocsit,
    /// Two-user interference channel with full CSIT (symmetric rates)
    IcCsit,
    /// Z interference channel
    Zic,
}

impl Network {
    fn column(self) -> &'static str {
        match self {
            Self::Mac => "mac",
            Self::X => "x",
            Self::IcNocsit => "ic_nocsit",
            Self::IcCsit => "ic_csit",
            Self::Zic => "zic",
        }
    }
}

#[derive(Debug, Args)]
pub struct DmtArgs {
    /// Networks to sweep (one output column each)
    #[arg(value_enum)]
    pub networks: Vec<Network>,
    /// Read defaults from a TOML config; explicit flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Multiplexing-gain grid as start:stop:step (exact rationals)
    #[arg(long)]
    pub r_grid: Option<String>,
    /// Number of users (mac and x networks)
    #[arg(long)]
    pub users: Option<u32>,
    /// Transmit antennas per user (mac and x networks)
    #[arg(long)]
    pub tx_antennas: Option<u32>,
    /// Receive antennas (mac and x networks)
    #[arg(long)]
    pub rx_antennas: Option<u32>,
    /// Output CSV path
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DmtConfig {
    pub networks: Vec<Network>,
    pub r_grid: Option<String>,
    pub users: Option<u32>,
    pub tx_antennas: Option<u32>,
    pub rx_antennas: Option<u32>,
    pub out: Option<PathBuf>,
}

struct Resolved {
    networks: Vec<Network>,
    grid: RationalGrid,
    users: u32,
    tx_antennas: u32,
    rx_antennas: u32,
    out: PathBuf,
}

fn resolve(args: DmtArgs) -> Result<Resolved> {
    let file: DmtConfig = config::load(args.config.as_deref())?;
    let networks = if args.networks.is_empty() {
        file.networks
    } else {
        args.networks
    };
    if networks.is_empty() {
        return Err(CliError::invalid("networks", "no network selected"));
    }
    let grid_text = args
        .r_grid
        .or(file.r_grid)
        .unwrap_or_else(|| "0:1:0.01".to_string());
    let grid = RationalGrid::parse("r-grid", &grid_text)?;
    grid.require_nonnegative("r-grid")?;
    let users = args.users.or(file.users).unwrap_or(2);
    let tx = args.tx_antennas.or(file.tx_antennas).unwrap_or(1);
    let rx = args.rx_antennas.or(file.rx_antennas).unwrap_or(1);
    if users < 1 {
        return Err(CliError::invalid("users", "must be at least 1"));
    }
    if tx < 1 {
        return Err(CliError::invalid("tx-antennas", "must be at least 1"));
    }
    if rx < 1 {
        return Err(CliError::invalid("rx-antennas", "must be at least 1"));
    }
    for net in &networks {
        let fixed_topology = matches!(net, Network::IcNocsit | Network::IcCsit | Network::Zic);
        if fixed_topology && (users != 2 || tx != 1 || rx != 1) {
            return Err(CliError::invalid(
                "users",
                "interference and Z networks are fixed at 2 single-antenna users",
            ));
        }
    }
    Ok(Resolved {
        networks,
        grid,
        users,
        tx_antennas: tx,
        rx_antennas: rx,
        out: args.out.or(file.out).unwrap_or_else(|| "dmt.csv".into()),
    })
}

fn curve_for(net: Network, users: u32, tx: u32, rx: u32) -> PiecewiseLinear {
    match net {
        Network::Mac => mac_dmt_curve_symmetric(users, tx, rx),
        // every link carries the common gain, so each source aggregates
        // `users` times the per-link gain
        Network::X => mac_dmt_curve_symmetric(users, tx, rx)
            .compose_scale(dmtnet_core::rational::rat(i64::from(users), 1)),
        Network::IcNocsit | Network::Zic => mac_dmt_curve_symmetric(2, 1, 1),
        Network::IcCsit => ic_full_csit_symmetric_curve(),
    }
}

pub fn run(args: DmtArgs) -> Result<()> {
    let resolved = resolve(args)?;
    let curves: Vec<PiecewiseLinear> = resolved
        .networks
        .iter()
        .map(|&n| curve_for(n, resolved.users, resolved.tx_antennas, resolved.rx_antennas))
        .collect();

    let mut rows: BTreeSet<dmtnet_core::rational::Rational> =
        resolved.grid.values().into_iter().collect();
    let mut breakpoints = BTreeSet::new();
    for curve in &curves {
        for &(x, _) in curve.breakpoints() {
            rows.insert(x);
            breakpoints.insert(x);
        }
    }

    let mut csv = String::from("r");
    if curves.len() == 1 {
        csv.push_str(",d");
    } else {
        for net in &resolved.networks {
            csv.push_str(",d_");
            csv.push_str(net.column());
        }
    }
    csv.push_str(",is_breakpoint\n");
    for r in rows {
        csv.push_str(&fmt_rational(r));
        for curve in &curves {
            csv.push(',');
            csv.push_str(&fmt_rational(curve.eval(r)));
        }
        csv.push(',');
        csv.push(if breakpoints.contains(&r) { '1' } else { '0' });
        csv.push('\n');
    }
    config::write_text(&resolved.out, &csv)
}
