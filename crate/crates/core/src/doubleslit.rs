//! Gaussian double-slit optics.
//!
//! Two set-ups share the same closed-form screen intensity
//!
//! ```text
//! I(y) = N exp(-y²/σ²) cosh(A y) [1 + cos(B y)/cosh(A y)]
//! ```
//!
//! and differ only in how `σ²`, `A` and `B` follow from the hardware:
//! Gaussian-filtered slits in contact with a lens ([`BartellSetup`]) or a
//! symmetric beam-splitter with a displaced screen ([`BeamSplitterSetup`]).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::grid::Grid;
use crate::unified::UnifiedModel;

/// Double slit with Gaussian amplitude transmission `exp(-x²/2x0²)` per slit,
/// a lens of focal length `f` at the slits and a screen at distance `l`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BartellSetup {
    /// Wavenumber `2π/λ` (1/m).
    pub k: f64,
    /// Effective slit width (m).
    pub x0: f64,
    /// Slit separation (m).
    pub d: f64,
    /// Slits-to-screen distance (m).
    pub l: f64,
    /// Focal length (m); `f64::INFINITY` means no lens.
    pub f: f64,
}

impl BartellSetup {
    /// Parameter set used for the reference figures.
    pub const REFERENCE: BartellSetup = BartellSetup {
        k: 1e7,
        x0: 1e-4,
        d: 3e-3,
        l: 0.1,
        f: 0.11,
    };

    pub fn validate(&self) -> Result<()> {
        require_positive("k", self.k)?;
        require_positive("x0", self.x0)?;
        require_positive("d", self.d)?;
        require_positive("l", self.l)?;
        if self.f.is_nan() || self.f <= 0.0 {
            return Err(Error::invalid("f", format!("must be > 0, got {}", self.f)));
        }
        if self.l == self.f {
            return Err(Error::invalid(
                "f",
                "screen at the focal plane (l = f) is the Fraunhofer limit, which is excluded",
            ));
        }
        Ok(())
    }

    fn defocus(&self) -> f64 {
        1.0 - self.l / self.f
    }

    /// `R = (k x0²/l)(1 - l/f)`, signed.
    pub fn ratio_closed_form(&self) -> f64 {
        self.k * self.x0 * self.x0 / self.l * self.defocus()
    }
}

/// Gaussian beam split symmetrically at half-angle `theta` and recombined on a
/// screen displaced by `L` from the full-overlap position.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamSplitterSetup {
    pub k: f64,
    /// Beam Gaussian width (m).
    pub x0: f64,
    /// Half crossing angle (rad).
    pub theta: f64,
    /// Screen displacement (m).
    #[serde(rename = "L")]
    pub screen_offset: f64,
}

impl BeamSplitterSetup {
    pub const REFERENCE: BeamSplitterSetup = BeamSplitterSetup {
        k: 1e7,
        x0: 1e-4,
        theta: 0.015,
        screen_offset: 0.01,
    };

    pub fn validate(&self) -> Result<()> {
        require_positive("k", self.k)?;
        require_positive("x0", self.x0)?;
        if !(self.theta > 0.0 && self.theta < std::f64::consts::FRAC_PI_2) {
            return Err(Error::invalid(
                "theta",
                format!("must lie in (0, π/2), got {}", self.theta),
            ));
        }
        if !(self.screen_offset.is_finite() && self.screen_offset >= 0.0) {
            return Err(Error::invalid(
                "L",
                format!("must be finite and >= 0, got {}", self.screen_offset),
            ));
        }
        Ok(())
    }

    /// Distance of each spot centre from the axis.
    pub fn spot_offset(&self) -> f64 {
        self.screen_offset * self.theta.sin()
    }

    /// `R = L/(k x0²)`, independent of `theta`.
    pub fn ratio_closed_form(&self) -> f64 {
        self.screen_offset / (self.k * self.x0 * self.x0)
    }
}

/// How the overall constant `N` is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `I(0) = 1`.
    #[default]
    CentralValue,
    /// Peak of the envelope `F(y) = N exp(-y²/σ²) cosh(A y)` equals 1.
    UnitEnvelopePeak,
}

/// The Gaussian two-beam intensity law shared by both optical set-ups.
pub trait GaussianTwoBeam {
    fn sigma_squared(&self) -> f64;
    /// Signed envelope rate `A`.
    fn envelope_rate(&self) -> f64;
    /// Phase rate `B`.
    fn phase_rate(&self) -> f64;
    fn check(&self) -> Result<()>;

    fn model(&self) -> Result<UnifiedModel> {
        self.check()?;
        UnifiedModel::pure(self.envelope_rate(), self.phase_rate())
    }

    /// `exp(-y²/σ²) cosh(A y)` without the normalization constant.
    fn raw_envelope(&self, y: f64) -> f64 {
        let g = -y * y / self.sigma_squared();
        let ay = self.envelope_rate() * y;
        0.5 * ((g + ay).exp() + (g - ay).exp())
    }

    /// `exp(-y²/σ²) (cosh(A y) + cos(B y))`, i.e. `I/N`.
    fn raw_intensity(&self, y: f64) -> f64 {
        let g = (-y * y / self.sigma_squared()).exp();
        self.raw_envelope(y) + g * (self.phase_rate() * y).cos()
    }

    fn normalization_constant(&self, normalization: Normalization) -> f64 {
        match normalization {
            Normalization::CentralValue => 0.5,
            Normalization::UnitEnvelopePeak => 1.0 / self.raw_envelope(self.envelope_peak_y()),
        }
    }

    /// Non-negative location of the envelope maximum.
    ///
    /// The envelope is single-humped at `y = 0` unless `A²σ² > 2`, in which case
    /// the peak solves `A tanh(A y) = 2y/σ²` on `(0, Aσ²/2)`.
    fn envelope_peak_y(&self) -> f64 {
        let s2 = self.sigma_squared();
        let a = self.envelope_rate().abs();
        if a * a * s2 <= 2.0 {
            return 0.0;
        }
        let slope = |y: f64| a * (a * y).tanh() - 2.0 * y / s2;
        let (mut lo, mut hi) = (0.0, 0.5 * a * s2);
        // slope > 0 just right of zero, < 0 at hi
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if slope(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn intensity(&self, y: f64, normalization: Normalization) -> f64 {
        self.normalization_constant(normalization) * self.raw_intensity(y)
    }

    /// Default profile window `[-5σ, 5σ]` with 2001 samples.
    fn default_grid(&self) -> Grid {
        Grid {
            min: -5.0 * self.sigma_squared().sqrt(),
            max: 5.0 * self.sigma_squared().sqrt(),
            points: 2001,
        }
    }

    fn profile(&self, grid: &Grid, normalization: Normalization) -> Result<IntensityProfile>
    where
        Self: Sync,
    {
        grid.validate()?;
        let model = self.model()?;
        let n = self.normalization_constant(normalization);
        let samples = grid
            .values()
            .into_par_iter()
            .map(|y| ProfileSample {
                y,
                intensity: n * self.raw_intensity(y),
                envelope: n * self.raw_envelope(y),
                oscillatory_factor: model.oscillatory_factor(y),
            })
            .collect();
        Ok(IntensityProfile { samples })
    }
}

impl GaussianTwoBeam for BartellSetup {
    /// `σ² = x0²(1 - l/f)² + l²/(k² x0²)`; the second term is diffraction spreading.
    fn sigma_squared(&self) -> f64 {
        let focus = self.x0 * self.defocus();
        let spread = self.l / (self.k * self.x0);
        focus * focus + spread * spread
    }

    fn envelope_rate(&self) -> f64 {
        self.d / self.sigma_squared() * self.defocus()
    }

    fn phase_rate(&self) -> f64 {
        self.d / self.sigma_squared() * self.l / (self.k * self.x0 * self.x0)
    }

    fn check(&self) -> Result<()> {
        self.validate()
    }
}

impl GaussianTwoBeam for BeamSplitterSetup {
    fn sigma_squared(&self) -> f64 {
        self.x0 * self.x0
    }

    fn envelope_rate(&self) -> f64 {
        2.0 * self.spot_offset() / (self.x0 * self.x0)
    }

    fn phase_rate(&self) -> f64 {
        2.0 * self.k * self.theta.sin()
    }

    fn check(&self) -> Result<()> {
        self.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileSample {
    pub y: f64,
    pub intensity: f64,
    /// `F(y)`, same normalization as `intensity`.
    pub envelope: f64,
    pub oscillatory_factor: f64,
}

/// Sampled screen intensity, ascending in `y`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntensityProfile {
    pub samples: Vec<ProfileSample>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    const REF: BartellSetup = BartellSetup::REFERENCE;

    #[test]
    fn sigma_squared_reference() {
        // x0²(1/11)² + 1e-8
        assert_relative_eq!(REF.sigma_squared(), 1.008_264_462_809_917_4e-8, max_relative = 1e-14);
    }

    #[test]
    fn sigma_squared_limits() {
        let at_focus = BartellSetup { f: 0.1, ..REF };
        let spread = at_focus.l / (at_focus.k * at_focus.x0);
        assert_relative_eq!(at_focus.sigma_squared(), spread * spread, max_relative = 1e-15);
        let geometric = BartellSetup { k: 1e30, ..REF };
        let focus = REF.x0 * (1.0 - REF.l / REF.f);
        assert_relative_eq!(geometric.sigma_squared(), focus * focus, max_relative = 1e-12);
    }

    #[test]
    fn bartell_reference_rates() {
        let m = REF.model().unwrap();
        assert_relative_eq!(m.a(), 27_049.180_327_868_852, max_relative = 1e-12);
        assert_relative_eq!(m.b(), 297_540.983_606_557_4, max_relative = 1e-12);
        assert_abs_diff_eq!(m.ratio(), 1.0 / 11.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.ratio(), REF.ratio_closed_form(), epsilon = 1e-12);
        assert_relative_eq!(m.fringe_index().nu.value().unwrap(), 2.901_712_762_609_556, max_relative = 1e-12);
    }

    #[test]
    fn no_lens_limit() {
        let s = BartellSetup { f: f64::INFINITY, ..REF };
        s.validate().unwrap();
        assert_relative_eq!(s.envelope_rate(), s.d / s.sigma_squared(), max_relative = 1e-15);
        assert_relative_eq!(s.ratio_closed_form(), s.k * s.x0 * s.x0 / s.l, max_relative = 1e-15);
    }

    #[test]
    fn fraunhofer_limit_rejected() {
        let s = BartellSetup { f: 0.1, l: 0.1, ..REF };
        assert!(matches!(s.validate(), Err(Error::InvalidParameter { ref field, .. }) if field == "f"));
        assert!(BartellSetup { x0: 0.0, ..REF }.validate().is_err());
        assert!(BartellSetup { k: -1.0, ..REF }.validate().is_err());
    }

    #[test]
    fn beyond_focus_flips_sign_of_a_only() {
        let s = BartellSetup { l: 0.12, ..REF };
        assert!(s.envelope_rate() < 0.0);
        assert!(s.model().unwrap().a() > 0.0);
    }

    #[test]
    fn beamsplitter_reference() {
        let bs = BeamSplitterSetup {
            screen_offset: 0.01,
            ..BeamSplitterSetup::REFERENCE
        };
        let m = bs.model().unwrap();
        assert_abs_diff_eq!(m.ratio(), 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(bs.ratio_closed_form(), 0.1, epsilon = 1e-15);
    }

    #[test]
    fn beamsplitter_full_overlap() {
        let bs = BeamSplitterSetup {
            screen_offset: 0.0,
            ..BeamSplitterSetup::REFERENCE
        };
        let m = bs.model().unwrap();
        assert_eq!(m.a(), 0.0);
        for y in [-3e-4, 0.0, 1e-4, 4e-4] {
            assert_eq!(m.visibility(y), 1.0);
        }
    }

    #[test]
    fn doubling_theta_scales_both_rates() {
        let one = BeamSplitterSetup { theta: 0.01, ..BeamSplitterSetup::REFERENCE };
        let two = BeamSplitterSetup { theta: 0.02, ..BeamSplitterSetup::REFERENCE };
        let ratio_a = two.envelope_rate() / one.envelope_rate();
        let ratio_b = two.phase_rate() / one.phase_rate();
        // sin(2θ)/sin(θ) = 2cos θ, which is 2 in the small-angle limit
        assert_relative_eq!(ratio_a, ratio_b, max_relative = 1e-14);
        assert_abs_diff_eq!(ratio_a, 2.0, epsilon = 1e-3);
        assert_relative_eq!(one.model().unwrap().ratio(), two.model().unwrap().ratio(), max_relative = 1e-14);
    }

    #[test]
    fn central_normalization() {
        assert_eq!(REF.raw_intensity(0.0), 2.0);
        assert_eq!(REF.intensity(0.0, Normalization::CentralValue), 1.0);
    }

    #[test]
    fn envelope_peak_normalization() {
        // A²σ² < 2: single hump at the centre
        let narrow = BeamSplitterSetup {
            screen_offset: 1e-3,
            ..BeamSplitterSetup::REFERENCE
        };
        assert_eq!(narrow.envelope_peak_y(), 0.0);
        assert_eq!(narrow.normalization_constant(Normalization::UnitEnvelopePeak), 1.0);
        // the reference slits have A²σ² ≈ 7.4, so the envelope is double-humped
        for s in [&REF as &dyn GaussianTwoBeam, &BeamSplitterSetup::REFERENCE] {
            let y_peak = s.envelope_peak_y();
            assert!(y_peak > 0.0);
            let n = s.normalization_constant(Normalization::UnitEnvelopePeak);
            assert_relative_eq!(n * s.raw_envelope(y_peak), 1.0, max_relative = 1e-14);
            let sigma = s.sigma_squared().sqrt();
            for i in 0..=400 {
                let y = -5.0 * sigma + 0.025 * sigma * i as f64;
                assert!(n * s.raw_envelope(y) <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn profile_is_ordered_and_symmetric() {
        let grid = REF.default_grid();
        let p = REF.profile(&grid, Normalization::CentralValue).unwrap();
        assert_eq!(p.samples.len(), 2001);
        assert!(p.samples.windows(2).all(|w| w[0].y < w[1].y));
        let n = p.samples.len();
        for i in 0..n {
            let (a, b) = (&p.samples[i], &p.samples[n - 1 - i]);
            assert_abs_diff_eq!(a.intensity, b.intensity, epsilon = 1e-12);
        }
    }

    proptest! {
        #[test]
        fn intensity_even_and_non_negative(y in -2e-3f64..2e-3, l in 0.01f64..0.5, f in 0.01f64..0.5) {
            prop_assume!((l - f).abs() > 1e-6);
            let s = BartellSetup { l, f, ..REF };
            let plus = s.intensity(y, Normalization::CentralValue);
            let minus = s.intensity(-y, Normalization::CentralValue);
            prop_assert!(plus >= 0.0);
            prop_assert!((plus - minus).abs() <= 1e-12 * plus.abs().max(1e-300));
        }

        #[test]
        fn ratio_matches_closed_form(k in 1e5f64..1e8, x0 in 1e-5f64..1e-3, l in 0.01f64..1.0, f in 0.01f64..1.0) {
            prop_assume!((l - f).abs() > 1e-6);
            let s = BartellSetup { k, x0, d: 1e-3, l, f };
            let m = s.model().unwrap();
            let closed = s.ratio_closed_form().abs();
            prop_assert!((m.ratio() - closed).abs() <= 1e-12 * closed.max(1.0));
        }
    }
}
