use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform sampling of a closed interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Grid {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        let grid = Self { min, max, points };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite()) {
            return Err(Error::invalid("grid", "bounds must be finite"));
        }
        if self.max <= self.min {
            return Err(Error::invalid(
                "grid.max",
                format!("must exceed grid.min ({} <= {})", self.max, self.min),
            ));
        }
        if self.points < 2 {
            return Err(Error::invalid("grid.points", "need at least 2 points"));
        }
        Ok(())
    }

    /// Symmetric grid `[-half_width, half_width]`.
    pub fn symmetric(half_width: f64, points: usize) -> Result<Self> {
        Self::new(-half_width, half_width, points)
    }

    /// Sample positions in ascending order; both end points included.
    pub fn values(&self) -> Vec<f64> {
        let span = self.max - self.min;
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.max
                } else {
                    self.min + span * (i as f64) / last
                }
            })
            .collect()
    }

    /// Parses `min:max:points`.
    pub fn parse(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::invalid("grid", format!("expected min:max:points, got `{spec}`")));
        }
        let num = |field: &str, s: &str| -> Result<f64> {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::invalid(field, format!("`{s}`: {e}")))
        };
        let points = parts[2]
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::invalid("grid.points", format!("`{}`: {e}", parts[2])))?;
        Self::new(num("grid.min", parts[0])?, num("grid.max", parts[1])?, points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_hit_both_ends() {
        let g = Grid::new(-1.0, 3.0, 5).unwrap();
        assert_eq!(g.values(), vec![-1.0, 0.0, 1.0, 2.0, 3.0]);
    }

    #[test]
    fn parse_round_trip() {
        let g = Grid::parse("-5e-4:5e-4:2001").unwrap();
        assert_eq!(g, Grid::new(-5e-4, 5e-4, 2001).unwrap());
        assert!(Grid::parse("0:1").is_err());
        assert!(Grid::parse("0:1:1").is_err());
        assert!(Grid::parse("1:0:10").is_err());
        assert!(Grid::parse("a:1:10").is_err());
    }
}
