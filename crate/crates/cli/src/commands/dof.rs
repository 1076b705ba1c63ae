//! `dmtnet dof` — symmetric degrees of freedom of the three femto-cell
//! access policies over an alpha grid.

use std::path::PathBuf;

use clap::Args;
use dmtnet_core::femto::{symmetric_dof, AccessPolicy};
use dmtnet_core::render::fmt_rational;
use serde::{Deserialize, Serialize};

use crate::config;
use crate::error::Result;
use crate::grid::RationalGrid;

#[derive(Debug, Args)]
pub struct DofArgs {
    /// Read defaults from a TOML config; explicit flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Alpha grid as start:stop:step (exact rationals, strictly positive)
    #[arg(long)]
    pub alpha_grid: Option<String>,
    /// Output CSV path
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DofConfig {
    pub alpha_grid: Option<String>,
    pub out: Option<PathBuf>,
}

pub fn run(args: DofArgs) -> Result<()> {
    let file: DofConfig = config::load(args.config.as_deref())?;
    let grid_text = args
        .alpha_grid
        .or(file.alpha_grid)
        .unwrap_or_else(|| "1/20:3:1/20".to_string());
    let grid = RationalGrid::parse("alpha-grid", &grid_text)?;
    grid.require_positive("alpha-grid")?;
    let out = args.out.or(file.out).unwrap_or_else(|| "dof_vs_alpha.csv".into());

    let mut csv = String::from("alpha,dof_closed,dof_open,dof_orthogonal\n");
    for alpha in grid.values() {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            fmt_rational(alpha),
            fmt_rational(symmetric_dof(AccessPolicy::Closed, alpha)),
            fmt_rational(symmetric_dof(AccessPolicy::Open, alpha)),
            fmt_rational(symmetric_dof(AccessPolicy::Orthogonal, alpha)),
        ));
    }
    config::write_text(&out, &csv)
}
