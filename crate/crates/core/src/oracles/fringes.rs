//! Brute-force fringe counting.
//!
//! Local maxima of `1 + K cos(B y)/cosh(A y)` are where
//! `g(y) = -A tanh(A y) cos(B y) - B sin(B y)` crosses from positive to
//! negative (the derivative is `K sech(A y) g(y)`). The sign changes are
//! bracketed on a fine scan and refined by bisection.

use crate::unified::{FringeIndex, UnifiedModel, E_FOLD_ARGUMENT};

#[derive(Debug, Clone, PartialEq)]
pub struct FringeCount {
    /// Positions of the local maxima in `(0, e_fold_y]`.
    pub maxima: Vec<f64>,
    pub nu: f64,
}

impl FringeCount {
    pub fn count(&self) -> usize {
        self.maxima.len()
    }

    /// `|count - ν| <= 1`.
    pub fn agrees_with_index(&self) -> bool {
        (self.count() as f64 - self.nu).abs() <= 1.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FringeCountOutcome {
    Counted(FringeCount),
    /// `A = 0`: visibility never decays, so the count is unbounded.
    Unbounded,
}

fn slope_sign_function(a: f64, b: f64) -> impl Fn(f64) -> f64 {
    move |y: f64| -a * (a * y).tanh() * (b * y).cos() - b * (b * y).sin()
}

fn bisect(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    // invariant: g(lo) > 0 >= g(hi)
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn count_fringes(m: &UnifiedModel) -> FringeCountOutcome {
    if m.a() <= 0.0 {
        return FringeCountOutcome::Unbounded;
    }
    let nu = match m.fringe_index().nu {
        FringeIndex::Finite(nu) => nu,
        FringeIndex::Unbounded => return FringeCountOutcome::Unbounded,
    };
    let (a, b) = (m.a(), m.b().abs());
    let end = E_FOLD_ARGUMENT / a;
    let half_periods = (b * end / std::f64::consts::PI).ceil() as usize;
    let steps = (64 * half_periods).max(256);
    let g = slope_sign_function(a, b);

    let mut maxima = Vec::new();
    let mut prev_y = end / steps as f64;
    let mut prev_g = g(prev_y);
    for i in 2..=steps {
        let y = if i == steps { end } else { end * i as f64 / steps as f64 };
        let gy = g(y);
        if prev_g > 0.0 && gy <= 0.0 {
            maxima.push(bisect(&g, prev_y, y));
        }
        prev_y = y;
        prev_g = gy;
    }
    FringeCountOutcome::Counted(FringeCount { maxima, nu })
}
