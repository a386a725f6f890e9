//! JSON set-up configuration and named presets.
//!
//! ```json
//! {"kind": "bartell", "parameters": {"k": 1e7, "x0": 1e-4, "d": 3e-3, "l": 0.1, "f": 0.11}}
//! {"kind": "mott", "preset": "C13-75keV", "grid": {"min": 0.1, "max": 3.0, "points": 500}}
//! ```

use std::f64::consts::PI;
use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::doubleslit::{BartellSetup, BeamSplitterSetup, GaussianTwoBeam};
use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::meson::MesonParams;
use crate::mott::{self, MottParams};
use crate::unified::UnifiedModel;

pub const DEFAULT_POINTS: usize = 2001;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Bartell,
    Beamsplitter,
    Meson,
    Mott,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Bartell => "bartell",
            Kind::Beamsplitter => "beamsplitter",
            Kind::Meson => "meson",
            Kind::Mott => "mott",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SetupParams {
    Bartell(BartellSetup),
    BeamSplitter(BeamSplitterSetup),
    Meson(MesonParams),
    Mott(MottParams),
}

impl SetupParams {
    pub fn kind(&self) -> Kind {
        match self {
            SetupParams::Bartell(_) => Kind::Bartell,
            SetupParams::BeamSplitter(_) => Kind::Beamsplitter,
            SetupParams::Meson(_) => Kind::Meson,
            SetupParams::Mott(_) => Kind::Mott,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SetupParams::Bartell(s) => s.validate(),
            SetupParams::BeamSplitter(s) => s.validate(),
            SetupParams::Meson(p) => p.validate(),
            SetupParams::Mott(p) => p.validate(),
        }
    }

    /// The unified `(A, B, K)` model. For Mott scattering the abscissa is `x = ln tan²(θ/2)`.
    pub fn model(&self) -> Result<UnifiedModel> {
        match self {
            SetupParams::Bartell(s) => s.model(),
            SetupParams::BeamSplitter(s) => s.model(),
            SetupParams::Meson(p) => p.model(),
            SetupParams::Mott(p) => Ok(p.reduced()?.model),
        }
    }

    /// Native sampling window: `±5σ` (m), `[0, 12 τ_S]`, or `θ ∈ [0.02π, 0.98π]`.
    pub fn default_grid(&self) -> Grid {
        match self {
            SetupParams::Bartell(s) => s.default_grid(),
            SetupParams::BeamSplitter(s) => s.default_grid(),
            SetupParams::Meson(p) => Grid {
                min: 0.0,
                max: 12.0 / p.gamma_s,
                points: DEFAULT_POINTS,
            },
            SetupParams::Mott(_) => Grid {
                min: 0.02 * PI,
                max: 0.98 * PI,
                points: DEFAULT_POINTS,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetupConfig {
    pub params: SetupParams,
    pub preset: Option<String>,
    pub grid: Option<Grid>,
}

impl SetupConfig {
    pub fn kind(&self) -> Kind {
        self.params.kind()
    }

    pub fn from_preset(name: &str) -> Result<Self> {
        Ok(Self {
            params: preset(name).ok_or_else(|| Error::UnknownPreset(name.to_owned()))?,
            preset: Some(name.to_owned()),
            grid: None,
        })
    }

    /// Sampling grid in the set-up's native abscissa.
    pub fn grid(&self) -> Grid {
        self.grid.unwrap_or_else(|| self.params.default_grid())
    }

    pub fn validate(&self) -> Result<()> {
        self.params
            .validate()
            .map_err(|e| with_prefix("parameters", e))?;
        if let Some(g) = &self.grid {
            g.validate().map_err(|e| with_prefix("", e))?;
            match self.params {
                SetupParams::Meson(_) if g.min < 0.0 => {
                    return Err(config_error("grid.min", "meson times must be >= 0"));
                }
                SetupParams::Mott(_) if g.min <= 0.0 || g.max >= PI => {
                    return Err(config_error("grid", "scattering angles must lie inside (0, π)"));
                }
                _ => {}
            }
        }
        Ok(())
    }
}

pub const PRESET_NAMES: [&str; 12] = [
    "bartell",
    "beamsplitter",
    "kaon",
    "alpha-75keV",
    "alpha-150keV",
    "alpha-200keV",
    "C12-3MeV",
    "C12-5MeV",
    "O16-7MeV",
    "O16-8.8MeV",
    "O16-10MeV",
    "C13-75keV",
];

pub fn preset(name: &str) -> Option<SetupParams> {
    match name {
        "bartell" => Some(SetupParams::Bartell(BartellSetup::REFERENCE)),
        "beamsplitter" => Some(SetupParams::BeamSplitter(BeamSplitterSetup::REFERENCE)),
        "kaon" => Some(SetupParams::Meson(MesonParams::kaon())),
        other => mott::preset(other).map(SetupParams::Mott),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    kind: Kind,
    #[serde(default)]
    parameters: Option<serde_json::Value>,
    #[serde(default)]
    preset: Option<String>,
    #[serde(default)]
    grid: Option<Grid>,
}

fn config_error(path: &str, message: impl Into<String>) -> Error {
    Error::Config {
        path: path.to_owned(),
        message: message.into(),
    }
}

fn with_prefix(prefix: &str, e: Error) -> Error {
    match e {
        Error::InvalidParameter { field, reason } => {
            let path = if prefix.is_empty() {
                field
            } else {
                format!("{prefix}.{field}")
            };
            Error::Config { path, message: reason }
        }
        other => other,
    }
}

fn parse_params<T: DeserializeOwned>(value: serde_json::Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let inner = e.path().to_string();
        let path = if inner == "." {
            "parameters".to_owned()
        } else {
            format!("parameters.{inner}")
        };
        config_error(&path, e.into_inner().to_string())
    })
}

/// Parses and validates a JSON configuration document.
pub fn parse_config(text: &str) -> Result<SetupConfig> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: RawConfig = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        config_error(&path, e.into_inner().to_string())
    })?;

    let params = match (raw.parameters, &raw.preset) {
        (Some(_), Some(_)) => {
            return Err(config_error("preset", "`preset` and `parameters` are mutually exclusive"));
        }
        (None, None) => {
            return Err(config_error("parameters", "either `parameters` or `preset` is required"));
        }
        (None, Some(name)) => {
            let p = preset(name).ok_or_else(|| config_error("preset", format!("unknown preset `{name}`")))?;
            if p.kind() != raw.kind {
                return Err(config_error(
                    "preset",
                    format!("preset `{name}` is a {} set-up, not {}", p.kind(), raw.kind),
                ));
            }
            p
        }
        (Some(value), None) => match raw.kind {
            Kind::Bartell => SetupParams::Bartell(parse_params(value)?),
            Kind::Beamsplitter => SetupParams::BeamSplitter(parse_params(value)?),
            Kind::Meson => SetupParams::Meson(parse_params(value)?),
            Kind::Mott => SetupParams::Mott(parse_params(value)?),
        },
    };

    let config = SetupConfig {
        params,
        preset: raw.preset,
        grid: raw.grid,
    };
    config.validate()?;
    Ok(config)
}
