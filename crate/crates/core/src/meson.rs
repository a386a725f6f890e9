//! Neutral-meson strangeness oscillations with CP violation neglected.
//!
//! The short- and long-lived weak eigenstates act as the two paths. Time is in
//! whatever unit the widths are given in; the kaon preset uses `τ_S = 1/Γ_S`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::unified::UnifiedModel;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MesonParams {
    /// `Δm = m_L - m_S` (ħ = 1, inverse time).
    pub delta_m: f64,
    #[serde(rename = "gamma_S")]
    pub gamma_s: f64,
    #[serde(rename = "gamma_L")]
    pub gamma_l: f64,
}

impl MesonParams {
    /// Neutral kaons in units of `τ_S`: `Γ_S = 1`, `Γ_L = 1/579`, `|ΔΓ|/(2Δm) = 1.05`.
    pub fn kaon() -> Self {
        let gamma_s = 1.0;
        let gamma_l = 1.0 / 579.0;
        Self {
            delta_m: (gamma_s - gamma_l) / 2.10,
            gamma_s,
            gamma_l,
        }
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("delta_m", self.delta_m)?;
        require_positive("gamma_S", self.gamma_s)?;
        require_positive("gamma_L", self.gamma_l)?;
        if self.gamma_s <= self.gamma_l {
            return Err(Error::invalid(
                "gamma_S",
                format!("must exceed gamma_L ({} <= {})", self.gamma_s, self.gamma_l),
            ));
        }
        Ok(())
    }

    /// `ΔΓ = Γ_L - Γ_S`, negative.
    pub fn delta_gamma(&self) -> f64 {
        self.gamma_l - self.gamma_s
    }

    /// `A = |ΔΓ|/2`, `B = Δm`, pure state.
    pub fn model(&self) -> Result<UnifiedModel> {
        self.validate()?;
        UnifiedModel::pure(0.5 * self.delta_gamma(), self.delta_m)
    }

    /// Closed form `R = |ΔΓ|/(2Δm)`.
    pub fn ratio_closed_form(&self) -> f64 {
        self.delta_gamma().abs() / (2.0 * self.delta_m)
    }

    /// Undecayed state at time `t`, normalized to unit norm.
    pub fn evolve(&self, initial: Strangeness, t: f64) -> Result<MesonState> {
        check_time(t)?;
        // z = exp(-ΔΓ t/2) exp(-iΔm t); amplitudes (1 ± z)/sqrt(2(1 + |z|²)).
        // |z| grows without bound since ΔΓ < 0, so divide through by |z| when it exceeds 1.
        let log_mod = -0.5 * self.delta_gamma() * t;
        let rotation = Complex64::from_polar(1.0, -self.delta_m * t);
        let (one, z, norm) = if log_mod <= 0.0 {
            let r = log_mod.exp();
            (Complex64::new(1.0, 0.0), rotation * r, (2.0 * (1.0 + r * r)).sqrt())
        } else {
            let s = (-log_mod).exp();
            (Complex64::new(s, 0.0), rotation, (2.0 * (1.0 + s * s)).sqrt())
        };
        let same = (one + z) / norm;
        let flipped = (one - z) / norm;
        Ok(match initial {
            Strangeness::K0 => MesonState {
                amp_k0: same,
                amp_k0bar: flipped,
            },
            Strangeness::K0Bar => MesonState {
                amp_k0: flipped,
                amp_k0bar: same,
            },
        })
    }

    /// `½[1 ± cos(Δm t)/cosh(ΔΓ t/2)]`, `+` when `outcome == initial`.
    pub fn strangeness_probability(
        &self,
        initial: Strangeness,
        outcome: Strangeness,
        t: f64,
    ) -> Result<f64> {
        check_time(t)?;
        let term = (self.delta_m * t).cos() * crate::unified::sech(0.5 * self.delta_gamma() * t);
        let sign = if initial == outcome { 1.0 } else { -1.0 };
        Ok(0.5 * (1.0 + sign * term))
    }

    /// Path predictability from the K_S/K_L survival weights,
    /// `|1/(1 + e^{-ΔΓt}) - 1/(1 + e^{ΔΓt})|`.
    pub fn predictability(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        let x = self.delta_gamma() * t;
        let w_short = 1.0 / (1.0 + (-x).exp());
        let w_long = 1.0 / (1.0 + x.exp());
        Ok((w_short - w_long).abs())
    }

    /// `|tanh(ΔΓ t/2)|`, the same quantity in hyperbolic form.
    pub fn predictability_tanh(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        Ok((0.5 * self.delta_gamma() * t).tanh().abs())
    }
}

fn check_time(t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("t", format!("time must be finite and >= 0, got {t}")))
    }
}

/// Strangeness eigenstates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strangeness {
    K0,
    K0Bar,
}

/// Amplitudes in the `{K0, K0bar}` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MesonState {
    pub amp_k0: Complex64,
    pub amp_k0bar: Complex64,
}

impl MesonState {
    pub fn norm_sqr(&self) -> f64 {
        self.amp_k0.norm_sqr() + self.amp_k0bar.norm_sqr()
    }

    /// `|<outcome|state>|²`.
    pub fn probability(&self, outcome: Strangeness) -> f64 {
        match outcome {
            Strangeness::K0 => self.amp_k0.norm_sqr(),
            Strangeness::K0Bar => self.amp_k0bar.norm_sqr(),
        }
    }
}
