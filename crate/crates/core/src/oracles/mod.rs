//! Independent numerical checks of the closed forms.

pub mod fresnel;
pub mod fringes;
pub mod quadrature;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::meson::{MesonParams, Strangeness};
use crate::mott::{log_tan_transform, rutherford_sum, MottParams};
use crate::unified::{Coherence, DualityReport, UnifiedModel};

pub use fresnel::{
    beamsplitter_oracle, compare_bartell, compare_beamsplitter, compare_single_slit_envelope,
    fresnel_intensity_oracle, fresnel_single_slit_oracle, FresnelQuadrature,
};
pub use fringes::{count_fringes, FringeCount, FringeCountOutcome};

/// Outcome of comparing a closed form with an oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub check: String,
    /// Max deviation divided by the peak magnitude of the closed form.
    pub max_rel_error: f64,
    pub n_samples: usize,
    pub grid_range: (f64, f64),
    pub tolerance: f64,
    pub passed: bool,
}

impl OracleResult {
    pub fn new(check: &str, max_rel_error: f64, grid: &[f64], tolerance: f64) -> Self {
        let lo = grid.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = grid.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self {
            check: check.to_owned(),
            max_rel_error,
            n_samples: grid.len(),
            grid_range: (lo, hi),
            tolerance,
            // NaN never passes
            passed: max_rel_error <= tolerance,
        }
    }
}

/// Evaluates `P² + V²` pointwise and records the worst violation.
///
/// Pure models: max `|P² + V² - 1|`. Mixed models: the larger of the max
/// distance from `2K(1-K)(|tanh(A y)| - 1)` and any positive excursion.
pub fn duality_scan(m: &UnifiedModel, ys: &[f64]) -> Result<DualityReport> {
    if ys.is_empty() {
        return Err(Error::invalid("grid", "duality scan needs at least one point"));
    }
    let violation = ys
        .iter()
        .map(|&y| {
            let p = m.point(y);
            let direct = p.direct_residual();
            match m.coherence() {
                Coherence::Pure => direct.abs(),
                Coherence::Mixed(_) => (direct - p.duality_residual).abs().max(direct.max(0.0)),
            }
        })
        .fold(0.0_f64, |acc, v| if v.is_nan() { f64::NAN } else { acc.max(v) });
    let mut report = m.fringe_index();
    report.max_abs_residual_violation = Some(violation);
    Ok(report)
}

/// Modulus-squared of evolved amplitudes against `½[1 ± cos(Δm t)/cosh(ΔΓ t/2)]`.
pub fn compare_meson(p: &MesonParams, ts: &[f64], tolerance: f64) -> Result<OracleResult> {
    p.validate()?;
    let mut worst = 0.0_f64;
    for &t in ts {
        for initial in [Strangeness::K0, Strangeness::K0Bar] {
            let state = p.evolve(initial, t)?;
            for outcome in [Strangeness::K0, Strangeness::K0Bar] {
                let closed = p.strangeness_probability(initial, outcome, t)?;
                worst = worst.max((state.probability(outcome) - closed).abs());
            }
        }
    }
    Ok(OracleResult::new("amplitudes_vs_closed_form", worst, ts, tolerance))
}

/// Cross section over the Rutherford sum against `1 + C_S cos(η x)/cosh x`.
pub fn compare_mott(p: &MottParams, thetas: &[f64], tolerance: f64) -> Result<OracleResult> {
    let reduced = p.reduced()?;
    let mut worst = 0.0_f64;
    let mut peak = 0.0_f64;
    for &theta in thetas {
        let ratio = p.cross_section(theta)? / rutherford_sum(theta)?;
        let unified = reduced.oscillatory_factor(log_tan_transform(theta)?);
        worst = worst.max((ratio - unified).abs());
        peak = peak.max(unified.abs());
    }
    Ok(OracleResult::new("reduction_identity", worst / peak, thetas, tolerance))
}

/// The two change-of-variable identities: `(1 - cos²θ)/(1 + cos²θ) = sech x` and
/// `2|cos θ|/(1 + cos²θ) = |tanh x|`. Returns the larger absolute deviation.
pub fn log_tan_identity_error(thetas: &[f64]) -> Result<f64> {
    let mut worst = 0.0_f64;
    for &theta in thetas {
        let x = log_tan_transform(theta)?;
        let c2 = theta.cos().powi(2);
        let vis = (1.0 - c2) / (1.0 + c2);
        let pred = 2.0 * theta.cos().abs() / (1.0 + c2);
        worst = worst.max((vis - 1.0 / x.cosh()).abs());
        worst = worst.max((pred - x.tanh().abs()).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;

    #[test]
    fn kaon_scan_is_tight() {
        let m = MesonParams::kaon().model().unwrap();
        let ts = Grid::new(0.0, 12.0, 10_000).unwrap().values();
        let r = duality_scan(&m, &ts).unwrap();
        assert!(r.max_abs_residual_violation.unwrap() < 1e-12);
        assert!(r.is_pure);
    }

    #[test]
    fn c13_scan_matches_half_tanh_gap() {
        let p = crate::mott::preset("C13-75keV").unwrap();
        let m = p.reduced().unwrap().model;
        let xs = Grid::new(-7.0, 7.0, 5001).unwrap().values();
        let r = duality_scan(&m, &xs).unwrap();
        assert!(r.max_abs_residual_violation.unwrap() < 1e-12);
        for &x in &xs {
            let expected = 0.5 * (x.tanh().abs() - 1.0);
            assert!((m.point(x).direct_residual() - expected).abs() < 1e-12);
            assert!(m.duality_residual(x) <= 0.0);
        }
    }

    #[test]
    fn residual_vanishes_far_out() {
        let m = UnifiedModel::with_k(1.0, 2.0, 0.3).unwrap();
        assert!(m.point(40.0).direct_residual().abs() < 1e-15);
    }

    #[test]
    fn empty_grid_rejected() {
        let m = UnifiedModel::pure(1.0, 1.0).unwrap();
        assert!(duality_scan(&m, &[]).is_err());
    }

    #[test]
    fn nan_error_fails() {
        let r = OracleResult::new("x", f64::NAN, &[0.0, 1.0], 1.0);
        assert!(!r.passed);
        assert_eq!(r.grid_range, (0.0, 1.0));
    }

    #[test]
    fn mott_and_meson_checks_pass() {
        let thetas = Grid::new(0.02 * std::f64::consts::PI, 0.98 * std::f64::consts::PI, 2001)
            .unwrap()
            .values();
        for name in crate::mott::PRESET_NAMES {
            let r = compare_mott(&crate::mott::preset(name).unwrap(), &thetas, 1e-12).unwrap();
            assert!(r.passed, "{name}: {r:?}");
        }
        assert!(log_tan_identity_error(&thetas).unwrap() < 1e-12);
        let ts = Grid::new(0.0, 12.0, 2001).unwrap().values();
        assert!(compare_meson(&MesonParams::kaon(), &ts, 1e-12).unwrap().passed);
    }
}
