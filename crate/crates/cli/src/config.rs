//! Config-file loading and deterministic output writing.

use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;

use crate::error::{CliError, Result};

/// Loads a TOML config whose keys mirror the command's flags. Unknown keys
/// are rejected so typos surface as validation errors.
pub fn load<T: DeserializeOwned + Default>(path: Option<&Path>) -> Result<T> {
    let Some(path) = path else {
        return Ok(T::default());
    };
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    toml::from_str(&text).map_err(|e| CliError::invalid("config", e.to_string()))
}

/// Writes a fully assembled text file in one shot (LF endings are the
/// caller's responsibility; everything in this crate emits LF only).
pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Companion JSON descriptor path: the output path with its extension
/// replaced by `json`.
pub fn descriptor_path(out: &Path) -> PathBuf {
    out.with_extension("json")
}
