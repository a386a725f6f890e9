//! First-principles propagation for the optical set-ups.
//!
//! The Bartell oracle integrates the paraxial Kirchhoff-Fresnel kernel across
//! Gaussian slits behind a thin lens,
//!
//! ```text
//! U(y) = ∫ dx Σ_c T(x - c) exp(-i k x²/2f) exp(i k (y - x)²/2l),
//! T(x) = exp(-x²/2x0²)
//! ```
//!
//! and never touches `σ²`, `A` or `B`. The beam-splitter oracle superposes two
//! tilted Gaussian beams directly.

use num_complex::Complex64;
use rayon::prelude::*;

use super::quadrature::CompositeRule;
use super::OracleResult;
use crate::doubleslit::{BartellSetup, BeamSplitterSetup, GaussianTwoBeam};
use crate::error::{Error, Result};

/// Quadrature layout per slit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelQuadrature {
    /// Integration window half-width in units of `x0` around each slit centre.
    pub half_window: f64,
    pub panels_per_slit: usize,
    pub order: usize,
    /// Max change under panel doubling, relative to the peak intensity.
    pub convergence_tolerance: f64,
}

impl Default for FresnelQuadrature {
    fn default() -> Self {
        Self {
            half_window: 8.0,
            panels_per_slit: 64,
            order: 32,
            convergence_tolerance: 1e-8,
        }
    }
}

/// Gaussian slits at arbitrary centres in front of a lens.
#[derive(Debug, Clone, PartialEq)]
pub struct FresnelAperture {
    pub k: f64,
    pub x0: f64,
    pub l: f64,
    pub f: f64,
    pub centers: Vec<f64>,
}

impl FresnelAperture {
    pub fn double_slit(s: &BartellSetup) -> Self {
        Self {
            k: s.k,
            x0: s.x0,
            l: s.l,
            f: s.f,
            centers: vec![-0.5 * s.d, 0.5 * s.d],
        }
    }

    pub fn single_slit(s: &BartellSetup) -> Self {
        Self {
            centers: vec![0.0],
            ..Self::double_slit(s)
        }
    }

    /// Field at screen position `y`, up to the unit-modulus factor `exp(i k y²/2l)`.
    pub fn field(&self, y: f64, rule: &CompositeRule, half_window: f64) -> Complex64 {
        let curvature = 0.5 * self.k * (1.0 / self.l - 1.0 / self.f);
        let tilt = -self.k * y / self.l;
        let inv_two_w2 = 0.5 / (self.x0 * self.x0);
        let reach = half_window * self.x0;
        self.centers
            .iter()
            .map(|&c| {
                rule.integrate_complex(c - reach, c + reach, |x| {
                    let u = x - c;
                    let amplitude = (-u * u * inv_two_w2).exp();
                    Complex64::from_polar(amplitude, curvature * x * x + tilt * x)
                })
            })
            .sum()
    }

    fn intensities(&self, ys: &[f64], rule: &CompositeRule, half_window: f64) -> Vec<f64> {
        ys.par_iter()
            .map(|&y| self.field(y, rule, half_window).norm_sqr())
            .collect()
    }

    /// `|U(y)|²` on `ys`, after checking that doubling the panel count moves the
    /// result by less than the convergence tolerance.
    pub fn intensity(&self, ys: &[f64], quad: &FresnelQuadrature) -> Result<Vec<f64>> {
        let coarse = CompositeRule::new(quad.panels_per_slit, quad.order)?;
        let fine = coarse.refined();
        let a = self.intensities(ys, &coarse, quad.half_window);
        let b = self.intensities(ys, &fine, quad.half_window);
        let peak = b.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let change = a
            .iter()
            .zip(&b)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0_f64, f64::max)
            / peak.max(f64::MIN_POSITIVE);
        if change > quad.convergence_tolerance || !change.is_finite() {
            return Err(Error::NonConvergent {
                change,
                tolerance: quad.convergence_tolerance,
            });
        }
        Ok(b)
    }
}

fn validate_window(quad: &FresnelQuadrature) -> Result<()> {
    if quad.half_window < 8.0 {
        return Err(Error::invalid("half_window", "window must cover at least 8 x0 per slit"));
    }
    if quad.panels_per_slit * quad.order < 2048 {
        return Err(Error::invalid(
            "panels_per_slit",
            "need at least 4096 quadrature nodes across both slits",
        ));
    }
    Ok(())
}

/// Double-slit intensity by direct Fresnel quadrature.
pub fn fresnel_intensity_oracle(
    s: &BartellSetup,
    ys: &[f64],
    quad: &FresnelQuadrature,
) -> Result<Vec<f64>> {
    s.validate()?;
    validate_window(quad)?;
    FresnelAperture::double_slit(s).intensity(ys, quad)
}

/// One Gaussian slit on axis; its envelope is `exp(-y²/σ²)`.
pub fn fresnel_single_slit_oracle(
    s: &BartellSetup,
    ys: &[f64],
    quad: &FresnelQuadrature,
) -> Result<Vec<f64>> {
    s.validate()?;
    validate_window(quad)?;
    FresnelAperture::single_slit(s).intensity(ys, quad)
}

/// `σ²` recovered from a single-slit profile, `-y²/ln(I(y)/I(0))`.
pub fn fitted_sigma_squared(ys: &[f64], intensity: &[f64], center: f64) -> Vec<f64> {
    ys.iter()
        .zip(intensity)
        .filter(|(y, _)| y.abs() > 0.0)
        .map(|(y, i)| -y * y / (i / center).ln())
        .collect()
}

/// `|U₊ + U₋|²` with `U± = exp(-(y ∓ y_c)²/2x0²) exp(±i k y sinθ)`, `y_c = L sinθ`.
pub fn beamsplitter_oracle(s: &BeamSplitterSetup, ys: &[f64]) -> Result<Vec<f64>> {
    s.validate()?;
    let yc = s.spot_offset();
    let kt = s.k * s.theta.sin();
    let inv_two_w2 = 0.5 / (s.x0 * s.x0);
    Ok(ys
        .iter()
        .map(|&y| {
            let upper = Complex64::from_polar((-(y - yc).powi(2) * inv_two_w2).exp(), kt * y);
            let lower = Complex64::from_polar((-(y + yc).powi(2) * inv_two_w2).exp(), -kt * y);
            (upper + lower).norm_sqr()
        })
        .collect())
}

/// Max of `|a_i/a_0 - b_i/b_0|` over the grid, divided by `max |b_i/b_0|`.
pub(crate) fn normalized_error(oracle: &[f64], oracle_center: f64, closed: &[f64], closed_center: f64) -> f64 {
    let mut worst = 0.0_f64;
    let mut peak = 0.0_f64;
    for (o, c) in oracle.iter().zip(closed) {
        let cn = c / closed_center;
        peak = peak.max(cn.abs());
        worst = worst.max((o / oracle_center - cn).abs());
    }
    worst / peak
}

/// Fresnel quadrature against the closed-form double-slit intensity.
pub fn compare_bartell(
    s: &BartellSetup,
    ys: &[f64],
    quad: &FresnelQuadrature,
    tolerance: f64,
) -> Result<OracleResult> {
    let mut grid = ys.to_vec();
    grid.push(0.0);
    let mut oracle = fresnel_intensity_oracle(s, &grid, quad)?;
    let center = oracle.pop().expect("pushed centre sample");
    let closed: Vec<f64> = ys.iter().map(|&y| s.raw_intensity(y)).collect();
    let err = normalized_error(&oracle, center, &closed, s.raw_intensity(0.0));
    Ok(OracleResult::new("fresnel_quadrature_vs_closed_form", err, ys, tolerance))
}

/// Single-slit Fresnel quadrature against `exp(-y²/σ²)`.
pub fn compare_single_slit_envelope(
    s: &BartellSetup,
    ys: &[f64],
    quad: &FresnelQuadrature,
    tolerance: f64,
) -> Result<OracleResult> {
    let mut grid = ys.to_vec();
    grid.push(0.0);
    let mut oracle = fresnel_single_slit_oracle(s, &grid, quad)?;
    let center = oracle.pop().expect("pushed centre sample");
    let s2 = s.sigma_squared();
    let closed: Vec<f64> = ys.iter().map(|&y| (-y * y / s2).exp()).collect();
    let err = normalized_error(&oracle, center, &closed, 1.0);
    Ok(OracleResult::new("single_slit_envelope", err, ys, tolerance))
}

/// Two-beam superposition against the closed-form intensity with `σ² = x0²`.
pub fn compare_beamsplitter(s: &BeamSplitterSetup, ys: &[f64], tolerance: f64) -> Result<OracleResult> {
    let oracle = beamsplitter_oracle(s, ys)?;
    let center = beamsplitter_oracle(s, &[0.0])?[0];
    let closed: Vec<f64> = ys.iter().map(|&y| s.raw_intensity(y)).collect();
    let err = normalized_error(&oracle, center, &closed, s.raw_intensity(0.0));
    Ok(OracleResult::new("beam_superposition_vs_closed_form", err, ys, tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    const REF: BartellSetup = BartellSetup::REFERENCE;

    fn sparse_grid(s: &impl GaussianTwoBeam, points: usize) -> Vec<f64> {
        let sigma = s.sigma_squared().sqrt();
        Grid::symmetric(5.0 * sigma, points).unwrap().values()
    }

    #[test]
    fn single_slit_recovers_sigma_squared() {
        let sigma = REF.sigma_squared().sqrt();
        let ys: Vec<f64> = (1..=6).map(|i| 0.5 * sigma * i as f64).collect();
        let quad = FresnelQuadrature::default();
        let center = fresnel_single_slit_oracle(&REF, &[0.0], &quad).unwrap()[0];
        let profile = fresnel_single_slit_oracle(&REF, &ys, &quad).unwrap();
        for s2 in fitted_sigma_squared(&ys, &profile, center) {
            assert_relative_eq!(s2, REF.sigma_squared(), max_relative = 1e-6);
        }
    }

    #[test]
    fn intensity_transmission_reading_is_rejected() {
        // Treating T as an intensity filter means an amplitude exp(-x²/4x0²), i.e.
        // an effective width √2 x0; that profile does not match the closed form.
        let wrong = BartellSetup { x0: REF.x0 * 2f64.sqrt(), ..REF };
        let ys = sparse_grid(&REF, 41);
        let mut grid = ys.clone();
        grid.push(0.0);
        let mut oracle = fresnel_intensity_oracle(&wrong, &grid, &FresnelQuadrature::default()).unwrap();
        let c = oracle.pop().unwrap();
        let closed: Vec<f64> = ys.iter().map(|&y| REF.raw_intensity(y)).collect();
        let err = normalized_error(&oracle, c, &closed, 2.0);
        assert!(err > 1e-2, "err = {err}");
    }

    #[test]
    fn oscillatory_factor_at_half_periods() {
        let m = REF.model().unwrap();
        let ys: Vec<f64> = (1..=3).map(|n| n as f64 * std::f64::consts::PI / m.b()).collect();
        let quad = FresnelQuadrature::default();
        let center = fresnel_intensity_oracle(&REF, &[0.0], &quad).unwrap()[0];
        let oracle = fresnel_intensity_oracle(&REF, &ys, &quad).unwrap();
        let s2 = REF.sigma_squared();
        for (y, i) in ys.iter().zip(oracle) {
            let envelope = (-y * y / s2).exp() * (m.a() * y).cosh();
            let factor = 2.0 * i / center / envelope;
            assert_abs_diff_eq!(factor, m.oscillatory_factor(*y), epsilon = 1e-8);
        }
    }

    #[test]
    fn centre_is_local_maximum_and_global_peak_matches() {
        // A²σ² > 2 here, so the central fringe is a local maximum but the
        // envelope peaks off-axis; both features must come out of the quadrature.
        let ys = sparse_grid(&REF, 401);
        let profile = fresnel_intensity_oracle(&REF, &ys, &FresnelQuadrature::default()).unwrap();
        let c = 200;
        assert_eq!(ys[c], 0.0);
        assert!(profile[c] > profile[c - 1] && profile[c] > profile[c + 1]);
        let argmax = |v: &[f64]| {
            v.iter()
                .enumerate()
                .fold((0, f64::MIN), |(bi, bv), (i, &x)| if x > bv { (i, x) } else { (bi, bv) })
                .0
        };
        let closed: Vec<f64> = ys.iter().map(|&y| REF.raw_intensity(y)).collect();
        let (io, ic) = (argmax(&profile), argmax(&closed));
        assert!(ys[io].abs() > 1e-4);
        assert_eq!(ys[io].abs(), ys[ic].abs());
    }

    #[test]
    fn undersampled_quadrature_is_flagged() {
        // far off-axis the integrand oscillates fast; a 4-point rule cannot follow it
        let aperture = FresnelAperture::double_slit(&REF);
        let coarse = FresnelQuadrature { panels_per_slit: 1, order: 4, ..Default::default() };
        let err = aperture.intensity(&[4e-4, 5e-4], &coarse).unwrap_err();
        assert!(matches!(err, Error::NonConvergent { .. }));
        let too_few = FresnelQuadrature { panels_per_slit: 8, order: 8, ..Default::default() };
        assert!(fresnel_intensity_oracle(&REF, &[0.0], &too_few).is_err());
    }

    #[test]
    fn beamsplitter_matches_closed_form() {
        let s = BeamSplitterSetup::REFERENCE;
        let r = compare_beamsplitter(&s, &sparse_grid(&s, 2001), 1e-10).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn beamsplitter_full_overlap_gives_cosine_fringes() {
        let s = BeamSplitterSetup { screen_offset: 0.0, ..BeamSplitterSetup::REFERENCE };
        let ys = sparse_grid(&s, 101);
        let i = beamsplitter_oracle(&s, &ys).unwrap();
        let kt = s.k * s.theta.sin();
        for (y, v) in ys.iter().zip(i) {
            let expected = 2.0 * (-y * y / (s.x0 * s.x0)).exp() * (1.0 + (2.0 * kt * y).cos());
            assert_abs_diff_eq!(v, expected, epsilon = 1e-13);
        }
    }

    #[test]
    fn beamsplitter_profile_is_even() {
        let s = BeamSplitterSetup::REFERENCE;
        let ys = sparse_grid(&s, 51);
        let a = beamsplitter_oracle(&s, &ys).unwrap();
        let mirrored: Vec<f64> = ys.iter().map(|y| -y).collect();
        let b = beamsplitter_oracle(&s, &mirrored).unwrap();
        for (p, q) in a.iter().zip(b) {
            assert_abs_diff_eq!(*p, q, epsilon = 1e-14);
        }
    }
}
