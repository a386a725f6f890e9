//! Two-path interferometry under one parametrization.
//!
//! Gaussian double slits, neutral-meson strangeness oscillations and Mott
//! scattering of identical nuclei all produce an intensity of the form
//! `F(y) [1 + V(y) cos(B y)]` with `V(y) = K/cosh(A y)` and path
//! predictability `P(y) = 1 - K + K|tanh(A y)|`. This crate maps each set-up
//! onto the `(A, B, K)` triple ([`unified::UnifiedModel`]), checks the duality
//! relation `P² + V² <= 1`, computes the fringe index `ν`, and validates the
//! closed forms against independent numerical oracles.

pub mod config;
pub mod doubleslit;
pub mod emit;
pub mod error;
pub mod grid;
pub mod meson;
pub mod mott;
pub mod oracles;
pub mod series;
pub mod unified;
pub mod verify;

pub use config::{parse_config, Kind, SetupConfig, SetupParams};
pub use doubleslit::{BartellSetup, BeamSplitterSetup, GaussianTwoBeam, Normalization};
pub use error::{Error, Result};
pub use grid::Grid;
pub use meson::{MesonParams, MesonState, Strangeness};
pub use mott::{MottParams, MottReduced};
pub use oracles::OracleResult;
pub use series::PatternSeries;
pub use unified::{Coherence, DualityPoint, DualityReport, FringeIndex, UnifiedModel};
