use gauss_quad::GaussLegendre;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Composite Gauss-Legendre rule: `panels` equal sub-intervals, each with an
/// `order`-point rule.
#[derive(Debug, Clone)]
pub struct CompositeRule {
    panels: usize,
    /// Nodes and weights on `[-1, 1]`.
    reference: Vec<(f64, f64)>,
}

impl CompositeRule {
    pub fn new(panels: usize, order: usize) -> Result<Self> {
        if panels == 0 {
            return Err(Error::invalid("panels", "need at least one panel"));
        }
        let rule = GaussLegendre::new(order)
            .map_err(|e| Error::invalid("order", e.to_string()))?;
        Ok(Self {
            panels,
            reference: rule.as_node_weight_pairs().to_vec(),
        })
    }

    pub fn panels(&self) -> usize {
        self.panels
    }

    pub fn order(&self) -> usize {
        self.reference.len()
    }

    pub fn node_count(&self) -> usize {
        self.panels * self.reference.len()
    }

    /// Same order, twice the panels.
    pub fn refined(&self) -> Self {
        Self {
            panels: 2 * self.panels,
            reference: self.reference.clone(),
        }
    }

    pub fn integrate_complex<F>(&self, a: f64, b: f64, integrand: F) -> Complex64
    where
        F: Fn(f64) -> Complex64,
    {
        let width = (b - a) / self.panels as f64;
        let half = 0.5 * width;
        let mut total = Complex64::new(0.0, 0.0);
        for p in 0..self.panels {
            let mid = a + (p as f64 + 0.5) * width;
            let panel: Complex64 = self
                .reference
                .iter()
                .map(|&(x, w)| integrand(mid + half * x) * w)
                .sum();
            total += panel * half;
        }
        total
    }

    pub fn integrate<F>(&self, a: f64, b: f64, integrand: F) -> f64
    where
        F: Fn(f64) -> f64,
    {
        self.integrate_complex(a, b, |x| Complex64::new(integrand(x), 0.0)).re
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn polynomials_are_exact() {
        let rule = CompositeRule::new(3, 4).unwrap();
        // 4-point rule is exact to degree 7
        let got = rule.integrate(-1.0, 2.0, |x| x.powi(7) - 3.0 * x.powi(2));
        let exact = (2f64.powi(8) - 1.0) / 8.0 - (8.0 + 1.0);
        assert_abs_diff_eq!(got, exact, epsilon = 1e-11);
    }

    #[test]
    fn oscillatory_gaussian() {
        // ∫ exp(-x²) exp(i w x) dx = sqrt(π) exp(-w²/4)
        let w = 7.0;
        let rule = CompositeRule::new(32, 16).unwrap();
        let got = rule.integrate_complex(-8.0, 8.0, |x| Complex64::new(0.0, w * x).exp() * (-x * x).exp());
        assert_abs_diff_eq!(got.re, std::f64::consts::PI.sqrt() * (-w * w / 4.0).exp(), epsilon = 1e-14);
        assert_abs_diff_eq!(got.im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn bad_rules_rejected() {
        assert!(CompositeRule::new(0, 8).is_err());
        assert!(CompositeRule::new(4, 1).is_err());
        let r = CompositeRule::new(4, 8).unwrap();
        assert_eq!(r.refined().node_count(), 64);
    }
}
