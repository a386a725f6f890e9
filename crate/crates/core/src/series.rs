//! Sampled pattern tables and the summary record shared by reports and CSV headers.

use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Kind, SetupConfig, SetupParams};
use crate::error::Result;
use crate::meson::Strangeness;
use crate::mott::log_tan_transform;
use crate::oracles::duality_scan;
use crate::unified::UnifiedModel;

/// Summary of a set-up in unified form.
///
/// Serialized as the JSON report and embedded as `#` comment lines at the top
/// of every CSV table, with identical values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRecord {
    pub kind: Kind,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "K")]
    pub k: f64,
    /// Signed spin factor for Mott scattering, `null` otherwise.
    #[serde(rename = "C_S")]
    pub c_s: Option<f64>,
    #[serde(rename = "R")]
    pub r: f64,
    /// `null` when `A = 0` (unbounded).
    pub nu: Option<f64>,
    #[serde(rename = "R_rounded")]
    pub r_rounded: f64,
    pub nu_rounded: Option<f64>,
    pub is_pure: bool,
    pub e_fold_y: Option<f64>,
    pub max_residual: f64,
}

impl ReportRecord {
    /// Ordered `(key, value)` pairs, values formatted for CSV headers.
    pub fn csv_fields(&self) -> Vec<(&'static str, String)> {
        let num = |v: f64| format!("{v:.16e}");
        let opt = |v: Option<f64>| v.map_or_else(|| "null".to_owned(), num);
        vec![
            ("kind", self.kind.to_string()),
            ("A", num(self.a)),
            ("B", num(self.b)),
            ("K", num(self.k)),
            ("C_S", opt(self.c_s)),
            ("R", num(self.r)),
            ("nu", opt(self.nu)),
            ("R_rounded", num(self.r_rounded)),
            ("nu_rounded", opt(self.nu_rounded)),
            ("is_pure", self.is_pure.to_string()),
            ("e_fold_y", opt(self.e_fold_y)),
            ("max_residual", num(self.max_residual)),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesRow {
    pub y: f64,
    pub intensity_factor: f64,
    pub visibility: f64,
    pub predictability: f64,
    pub phase: f64,
    pub duality_residual: f64,
}

pub const COLUMNS: [&str; 6] = [
    "y",
    "intensity_factor",
    "visibility",
    "predictability",
    "phase",
    "duality_residual",
];

/// A sampled pattern, rows ascending in `y`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternSeries {
    pub metadata: ReportRecord,
    pub rows: Vec<SeriesRow>,
}

/// Unified abscissas for the configured grid: the native values, except for
/// Mott scattering where angles map to `x = ln tan²(θ/2)`.
pub fn unified_abscissas(config: &SetupConfig) -> Result<Vec<f64>> {
    let native = config.grid().values();
    match config.params {
        SetupParams::Mott(_) => native.into_iter().map(log_tan_transform).collect(),
        _ => Ok(native),
    }
}

fn record(config: &SetupConfig, model: &UnifiedModel, ys: &[f64]) -> Result<ReportRecord> {
    let report = duality_scan(model, ys)?;
    let c_s = match config.params {
        SetupParams::Mott(p) => Some(p.spin_factor()),
        _ => None,
    };
    Ok(ReportRecord {
        kind: config.kind(),
        a: model.a(),
        b: model.b(),
        k: model.k(),
        c_s,
        r: report.r,
        nu: report.nu.value(),
        r_rounded: report.r_rounded(),
        nu_rounded: report.nu_rounded(),
        is_pure: report.is_pure,
        e_fold_y: report.e_fold_y,
        max_residual: report.max_abs_residual_violation.unwrap_or(0.0),
    })
}

/// Summary record over the configured grid.
pub fn report(config: &SetupConfig) -> Result<ReportRecord> {
    config.validate()?;
    let model = config.params.model()?;
    let ys = unified_abscissas(config)?;
    record(config, &model, &ys)
}

/// Samples the pattern over the configured grid.
pub fn profile(config: &SetupConfig) -> Result<PatternSeries> {
    config.validate()?;
    let model = config.params.model()?;
    let ys = unified_abscissas(config)?;
    let metadata = record(config, &model, &ys)?;

    let factor: Box<dyn Fn(f64) -> f64 + Sync> = match config.params {
        SetupParams::Mott(p) => {
            let reduced = p.reduced()?;
            Box::new(move |x| reduced.oscillatory_factor(x))
        }
        SetupParams::Meson(p) => Box::new(move |t| {
            // 2 P(K0 → K0) = 1 + cos(Δm t)/cosh(ΔΓ t/2)
            2.0 * p
                .strangeness_probability(Strangeness::K0, Strangeness::K0, t)
                .unwrap_or(f64::NAN)
        }),
        _ => Box::new(move |y| model.oscillatory_factor(y)),
    };

    let rows = ys
        .par_iter()
        .map(|&y| {
            let p = model.point(y);
            SeriesRow {
                y,
                intensity_factor: factor(y),
                visibility: p.visibility,
                predictability: p.predictability,
                phase: p.phase,
                duality_residual: p.duality_residual,
            }
        })
        .collect();
    Ok(PatternSeries { metadata, rows })
}
