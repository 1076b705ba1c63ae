//! `dmtnet femto-dmt` — closed- and open-access diversity versus the
//! symmetric multiplexing gain, one column pair per alpha.

use std::path::PathBuf;

use clap::Args;
use dmtnet_core::femto::{closed_access_dmt, open_access_dmt, FemtoRates};
use dmtnet_core::rational::{parse_rational, Rational};
use dmtnet_core::render::fmt_rational;
use num::Signed;
use serde::{Deserialize, Serialize};

use crate::config;
use crate::error::{CliError, Result};
use crate::grid::RationalGrid;

#[derive(Debug, Args)]
pub struct FemtoDmtArgs {
    /// Read defaults from a TOML config; explicit flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Comma-separated alpha values, e.g. 1/2,1,2
    #[arg(long)]
    pub alphas: Option<String>,
    /// Symmetric multiplexing-gain grid as start:stop:step
    #[arg(long)]
    pub r_grid: Option<String>,
    /// Output CSV path
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FemtoDmtConfig {
    pub alphas: Option<String>,
    pub r_grid: Option<String>,
    pub out: Option<PathBuf>,
}

pub fn run(args: FemtoDmtArgs) -> Result<()> {
    let file: FemtoDmtConfig = config::load(args.config.as_deref())?;
    let alphas_text = args
        .alphas
        .or(file.alphas)
        .unwrap_or_else(|| "1/2,1,2".to_string());
    let mut alphas: Vec<Rational> = Vec::new();
    for piece in alphas_text.split(',') {
        let alpha = parse_rational(piece).map_err(|e| CliError::invalid("alphas", e))?;
        if !alpha.is_positive() {
            return Err(CliError::invalid("alphas", "alpha must be positive"));
        }
        alphas.push(alpha);
    }
    let grid_text = args
        .r_grid
        .or(file.r_grid)
        .unwrap_or_else(|| "0:0.8:0.01".to_string());
    let grid = RationalGrid::parse("r-grid", &grid_text)?;
    grid.require_nonnegative("r-grid")?;
    let out = args.out.or(file.out).unwrap_or_else(|| "femto_dmt.csv".into());

    let mut csv = String::from("r");
    for alpha in &alphas {
        let label = fmt_rational(*alpha);
        csv.push_str(&format!(",d_closed_{label},d_open_{label}"));
    }
    csv.push('\n');
    for r in grid.values() {
        csv.push_str(&fmt_rational(r));
        let rates = FemtoRates::symmetric(r);
        for alpha in &alphas {
            csv.push_str(&format!(
                ",{},{}",
                fmt_rational(closed_access_dmt(&rates, *alpha)),
                fmt_rational(open_access_dmt(&rates, *alpha)),
            ));
        }
        csv.push('\n');
    }
    config::write_text(&out, &csv)
}
