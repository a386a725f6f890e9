//! The set-up independent two-path description.
//!
//! Every interferometer handled by this crate reduces to three constants
//! `(A, B, K)` acting on a single abscissa `y`:
//!
//! ```text
//! V(y) = K / cosh(A y)
//! P(y) = 1 - K + K |tanh(A y)|
//! φ(y) = B y
//! ```
//!
//! The intensity factor is `1 + V(y) cos φ(y)`, and the ratio `R = |A/B|`
//! alone fixes its shape. `K = 1` is a pure state, for which
//! `P² + V² = 1` holds exactly; `0 < K < 1` is mixed and the sum falls short
//! of one by `2K(1-K)(1 - |tanh(A y)|)`.

use serde::Serialize;

use crate::error::{require_finite, Error, Result};

/// `arccosh(e)`: the argument at which `1/cosh` has fallen to `1/e`.
pub const E_FOLD_ARGUMENT: f64 = 1.657_454_454_153_077_3;

/// `arccosh(e) / 2π`, the fringe-count constant. Usually quoted as 0.264.
pub const FRINGE_CONSTANT: f64 = E_FOLD_ARGUMENT / (2.0 * std::f64::consts::PI);

/// The three-digit form of [`FRINGE_CONSTANT`] found in the literature.
pub const PRINTED_FRINGE_CONSTANT: f64 = 0.264;

/// State purity, carried exactly rather than inferred from `K == 1.0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Coherence {
    Pure,
    /// Mixed state with `0 < K < 1`.
    Mixed(f64),
}

impl Coherence {
    pub fn from_k(k: f64) -> Result<Self> {
        if k == 1.0 {
            Ok(Coherence::Pure)
        } else if k.is_finite() && k > 0.0 && k < 1.0 {
            Ok(Coherence::Mixed(k))
        } else {
            Err(Error::invalid("K", format!("must satisfy 0 < K <= 1, got {k}")))
        }
    }

    pub fn k(self) -> f64 {
        match self {
            Coherence::Pure => 1.0,
            Coherence::Mixed(k) => k,
        }
    }

    pub fn is_pure(self) -> bool {
        matches!(self, Coherence::Pure)
    }
}

/// The `(A, B, K)` triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnifiedModel {
    a: f64,
    b: f64,
    coherence: Coherence,
}

impl UnifiedModel {
    /// Builds a model. `A` is stored as `|A|`; every observable is even in it.
    pub fn new(a: f64, b: f64, coherence: Coherence) -> Result<Self> {
        require_finite("A", a)?;
        require_finite("B", b)?;
        if b == 0.0 {
            return Err(Error::invalid("B", "phase rate must be non-zero"));
        }
        // re-validate so a hand-built Mixed(k) cannot smuggle in k outside (0, 1)
        let coherence = match coherence {
            Coherence::Pure => Coherence::Pure,
            Coherence::Mixed(k) => Coherence::from_k(k)?,
        };
        Ok(Self {
            a: a.abs(),
            b,
            coherence,
        })
    }

    pub fn pure(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, Coherence::Pure)
    }

    pub fn with_k(a: f64, b: f64, k: f64) -> Result<Self> {
        Self::new(a, b, Coherence::from_k(k)?)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn k(&self) -> f64 {
        self.coherence.k()
    }

    pub fn coherence(&self) -> Coherence {
        self.coherence
    }

    pub fn is_pure(&self) -> bool {
        self.coherence.is_pure()
    }

    /// `R = |A/B|`.
    pub fn ratio(&self) -> f64 {
        (self.a / self.b).abs()
    }

    /// `K / cosh(A y)`, in `(0, K]`.
    pub fn visibility(&self, y: f64) -> f64 {
        self.k() * sech(self.a * y)
    }

    /// `1 - K + K |tanh(A y)|`, in `[1-K, 1)`.
    pub fn predictability(&self, y: f64) -> f64 {
        let t = (self.a * y).tanh().abs();
        match self.coherence {
            Coherence::Pure => t,
            Coherence::Mixed(k) => 1.0 - k + k * t,
        }
    }

    pub fn phase(&self, y: f64) -> f64 {
        self.b * y
    }

    /// `1 + V(y) cos(B y)`.
    pub fn oscillatory_factor(&self, y: f64) -> f64 {
        1.0 + self.visibility(y) * self.phase(y).cos()
    }

    /// Closed form of `P² + V² - 1`, i.e. `2K(1-K)(|tanh(A y)| - 1)`.
    pub fn duality_residual(&self, y: f64) -> f64 {
        match self.coherence {
            Coherence::Pure => 0.0,
            Coherence::Mixed(k) => 2.0 * k * (1.0 - k) * ((self.a * y).tanh().abs() - 1.0),
        }
    }

    pub fn point(&self, y: f64) -> DualityPoint {
        DualityPoint {
            y,
            visibility: self.visibility(y),
            predictability: self.predictability(y),
            phase: self.phase(y),
            duality_residual: self.duality_residual(y),
        }
    }

    /// Abscissa where the visibility has dropped to `K/e`; `None` when `A = 0`.
    pub fn e_fold_y(&self) -> Option<f64> {
        (self.a > 0.0).then(|| E_FOLD_ARGUMENT / self.a)
    }

    /// Fringe index `ν = arccosh(e)/(2π) · |B/A|`, plus the related summary values.
    pub fn fringe_index(&self) -> DualityReport {
        let r = self.ratio();
        let nu = if self.a > 0.0 {
            FringeIndex::Finite(FRINGE_CONSTANT / r)
        } else {
            FringeIndex::Unbounded
        };
        DualityReport {
            r,
            nu,
            is_pure: self.is_pure(),
            e_fold_y: self.e_fold_y(),
            max_abs_residual_violation: None,
        }
    }
}

/// `1/cosh(x)`, going to zero rather than through `1/inf` for large `|x|`.
pub(crate) fn sech(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 20.0 {
        1.0 / ax.cosh()
    } else {
        let e = (-ax).exp();
        2.0 * e / (1.0 + e * e)
    }
}

/// One sample of the duality quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualityPoint {
    pub y: f64,
    pub visibility: f64,
    pub predictability: f64,
    pub phase: f64,
    pub duality_residual: f64,
}

impl DualityPoint {
    /// `P² + V² - 1` evaluated directly from the two stored values.
    pub fn direct_residual(&self) -> f64 {
        self.predictability * self.predictability + self.visibility * self.visibility - 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FringeIndex {
    Finite(f64),
    /// `A = 0`: the visibility never decays and fringes extend without bound.
    Unbounded,
}

impl FringeIndex {
    pub fn value(self) -> Option<f64> {
        match self {
            FringeIndex::Finite(nu) => Some(nu),
            FringeIndex::Unbounded => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityReport {
    pub r: f64,
    pub nu: FringeIndex,
    pub is_pure: bool,
    pub e_fold_y: Option<f64>,
    /// Filled in by a grid scan; `None` when only the closed forms were consulted.
    pub max_abs_residual_violation: Option<f64>,
}

impl DualityReport {
    /// `R` rounded to one decimal place, the precision quoted alongside figures.
    pub fn r_rounded(&self) -> f64 {
        (self.r * 10.0).round() / 10.0
    }

    /// `ν` recomputed from [`Self::r_rounded`]; `None` if that rounds to zero.
    pub fn nu_rounded(&self) -> Option<f64> {
        let r = self.r_rounded();
        (r > 0.0).then(|| FRINGE_CONSTANT / r)
    }
}
