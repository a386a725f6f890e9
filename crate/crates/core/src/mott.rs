//! Mott scattering of identical nuclei below the Coulomb barrier.
//!
//! The direct and exchange Rutherford amplitudes are the two paths. With the
//! change of variable `x = ln tan²(θ/2)` the cross section divided by the
//! incoherent Rutherford sum becomes `1 + C_S cos(η x)/cosh(x)`, i.e. the
//! unified form with `A = 1`, `B = η`, `K = |C_S|`.

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::unified::{sech, UnifiedModel};

/// Fine-structure constant.
pub const ALPHA: f64 = 1.0 / 137.035_999;

/// Nuclear mass-energies (MeV) of the nuclides with tabulated experiments.
pub mod masses {
    pub const HE4: f64 = 3_727.379_411_8;
    pub const C12: f64 = 11_174.863_235_3;
    pub const C13: f64 = 12_109.482_347_0;
    pub const O16: f64 = 14_895.080_645_2;
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MottParams {
    #[serde(rename = "Z")]
    pub z: u32,
    /// `Mc²` of one nucleus (MeV).
    pub mass_energy: f64,
    /// Centre-of-mass energy (MeV).
    #[serde(rename = "E")]
    pub energy: f64,
    /// Twice the nuclear spin.
    pub spin2: u32,
    /// Both beams identically polarized.
    #[serde(default)]
    pub polarized: bool,
}

impl MottParams {
    pub fn validate(&self) -> Result<()> {
        if self.z < 1 {
            return Err(Error::invalid("Z", "charge number must be >= 1"));
        }
        require_positive("mass_energy", self.mass_energy)?;
        require_positive("E", self.energy)?;
        Ok(())
    }

    /// `η = Z² α sqrt(Mc²/2E)`.
    pub fn sommerfeld_eta(&self) -> Result<f64> {
        self.validate()?;
        let z2 = f64::from(self.z * self.z);
        Ok(z2 * ALPHA * (self.mass_energy / (2.0 * self.energy)).sqrt())
    }

    /// Signed spin factor: `+1` when polarized or spinless, else `(-1)^{2S}/(2S+1)`.
    pub fn spin_factor(&self) -> f64 {
        if self.polarized || self.spin2 == 0 {
            1.0
        } else {
            let sign = if self.spin2 % 2 == 0 { 1.0 } else { -1.0 };
            sign / f64::from(self.spin2 + 1)
        }
    }

    pub fn reduced(&self) -> Result<MottReduced> {
        let eta = self.sommerfeld_eta()?;
        let c_s = self.spin_factor();
        let model = UnifiedModel::with_k(1.0, eta, c_s.abs())?;
        Ok(MottReduced { eta, c_s, model })
    }

    /// Bracket of the Mott cross section in units of `(Z²e²/4E)²`:
    /// `1/s⁴ + 1/c⁴ + C_S 2/(s²c²) cos(η ln tan²(θ/2))` with `s, c = sin, cos(θ/2)`.
    pub fn cross_section(&self, theta: f64) -> Result<f64> {
        check_angle(theta)?;
        let eta = self.sommerfeld_eta()?;
        let (s, c) = (0.5 * theta).sin_cos();
        let (s2, c2) = (s * s, c * c);
        let phase = eta * (s2 / c2).ln();
        Ok(1.0 / (s2 * s2) + 1.0 / (c2 * c2) + self.spin_factor() * 2.0 / (s2 * c2) * phase.cos())
    }

    /// Path predictability at scattering angle `theta`.
    ///
    /// Pure: `2|cos θ|/(1 + cos²θ)`. Mixed: `(2S + |tanh x|)/(2S + 1)`.
    pub fn predictability(&self, theta: f64) -> Result<f64> {
        check_angle(theta)?;
        let cos = theta.cos();
        let pure = 2.0 * cos.abs() / (1.0 + cos * cos);
        if self.polarized || self.spin2 == 0 {
            Ok(pure)
        } else {
            let two_s = f64::from(self.spin2);
            Ok((two_s + pure) / (two_s + 1.0))
        }
    }
}

/// Incoherent Rutherford sum `1/sin⁴(θ/2) + 1/cos⁴(θ/2)`.
pub fn rutherford_sum(theta: f64) -> Result<f64> {
    check_angle(theta)?;
    let (s, c) = (0.5 * theta).sin_cos();
    Ok(1.0 / s.powi(4) + 1.0 / c.powi(4))
}

/// `x = ln tan²(θ/2)`; zero at `θ = π/2`, odd about it.
pub fn log_tan_transform(theta: f64) -> Result<f64> {
    check_angle(theta)?;
    let x = 2.0 * (0.5 * theta).tan().ln();
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::invalid("theta", format!("{theta} is too close to 0 or π")))
    }
}

/// Inverse of [`log_tan_transform`]: `θ = 2 atan(e^{x/2})`.
pub fn inverse_log_tan(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::invalid("x", "must be finite"));
    }
    Ok(2.0 * (0.5 * x).exp().atan())
}

fn check_angle(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < std::f64::consts::PI {
        Ok(())
    } else {
        Err(Error::invalid(
            "theta",
            format!("scattering angle must lie in (0, π), got {theta}"),
        ))
    }
}

/// Mott scattering in unified form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MottReduced {
    pub eta: f64,
    /// Signed; the sign multiplies the cosine term.
    pub c_s: f64,
    /// `A = 1`, `B = η`, `K = |C_S|`.
    pub model: UnifiedModel,
}

impl MottReduced {
    pub fn k(&self) -> f64 {
        self.c_s.abs()
    }

    /// `1 + C_S cos(η x)/cosh(x)`.
    pub fn oscillatory_factor(&self, x: f64) -> f64 {
        1.0 + self.c_s * (self.eta * x).cos() * sech(x)
    }
}

/// Named experimental conditions.
pub fn preset(name: &str) -> Option<MottParams> {
    let spinless = |z, mass_energy, energy| MottParams {
        z,
        mass_energy,
        energy,
        spin2: 0,
        polarized: false,
    };
    Some(match name {
        "alpha-75keV" => spinless(2, masses::HE4, 0.075),
        "alpha-150keV" => spinless(2, masses::HE4, 0.150),
        "alpha-200keV" => spinless(2, masses::HE4, 0.200),
        "C12-3MeV" => spinless(6, masses::C12, 3.0),
        "C12-5MeV" => spinless(6, masses::C12, 5.0),
        "O16-7MeV" => spinless(8, masses::O16, 7.0),
        "O16-8.8MeV" => spinless(8, masses::O16, 8.8),
        "O16-10MeV" => spinless(8, masses::O16, 10.0),
        "C13-75keV" => MottParams {
            spin2: 1,
            ..spinless(6, masses::C13, 0.075)
        },
        _ => return None,
    })
}

pub const PRESET_NAMES: [&str; 9] = [
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
