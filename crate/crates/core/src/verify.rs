//! Runs the oracles that apply to a configured set-up.

use serde::Serialize;

use crate::config::{Kind, SetupConfig, SetupParams};
use crate::error::{Error, Result};
use crate::oracles::{
    compare_bartell, compare_beamsplitter, compare_meson, compare_mott, compare_single_slit_envelope,
    duality_scan, log_tan_identity_error, FresnelQuadrature, OracleResult,
};
use crate::series::unified_abscissas;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOutcome {
    pub kind: Kind,
    pub passed: bool,
    pub results: Vec<OracleResult>,
}

pub fn verify(config: &SetupConfig, tolerance: f64) -> Result<VerifyOutcome> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::Config {
            path: "tolerance".to_owned(),
            message: format!("must be finite and > 0, got {tolerance}"),
        });
    }
    config.validate()?;
    let native = config.grid().values();
    let mut results = match config.params {
        SetupParams::Bartell(s) => {
            let quad = FresnelQuadrature::default();
            vec![
                compare_bartell(&s, &native, &quad, tolerance)?,
                compare_single_slit_envelope(&s, &native, &quad, tolerance)?,
            ]
        }
        SetupParams::BeamSplitter(s) => vec![compare_beamsplitter(&s, &native, tolerance)?],
        SetupParams::Meson(p) => vec![compare_meson(&p, &native, tolerance)?],
        SetupParams::Mott(p) => vec![
            compare_mott(&p, &native, tolerance)?,
            OracleResult::new("log_tan_identities", log_tan_identity_error(&native)?, &native, tolerance),
        ],
    };

    let model = config.params.model()?;
    let ys = unified_abscissas(config)?;
    let scan = duality_scan(&model, &ys)?;
    results.push(OracleResult::new(
        "duality_relation",
        scan.max_abs_residual_violation.unwrap_or(f64::NAN),
        &ys,
        tolerance,
    ));

    Ok(VerifyOutcome {
        kind: config.kind(),
        passed: results.iter().all(|r| r.passed),
        results,
    })
}
