use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Full description of a swarm run over a bounded box.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SwarmConfig {
    /// Particle count N.
    pub particles: usize,
    /// Iteration cap.
    pub iterations: usize,
    /// Annealing constant c of the disturbance covariance decay.
    pub annealing: f64,
    /// Initial per-dimension disturbance variances.
    pub sigma0: Vec<f64>,
    pub seed: u64,
    /// Per-dimension velocity clamp.
    pub v_max: Vec<f64>,
    /// Per-dimension search box.
    pub bounds: Vec<(f64, f64)>,
    /// Weight of the previous velocity; 0 reproduces the plain update.
    #[serde(default)]
    pub inertia: f64,
}

impl SwarmConfig {
    /// Defaults derived from the box: the velocity clamp is a tenth of each
    /// extent and the disturbance starts at a tenth of the extent (squared,
    /// as a variance).
    pub fn for_bounds(bounds: Vec<(f64, f64)>, particles: usize, iterations: usize, seed: u64) -> Self {
        let v_max = bounds.iter().map(|(lo, hi)| 0.1 * (hi - lo)).collect();
        let sigma0 = bounds
            .iter()
            .map(|(lo, hi)| {
                let s = 0.1 * (hi - lo);
                s * s
            })
            .collect();
        SwarmConfig {
            particles,
            iterations,
            annealing: 0.05,
            sigma0,
            seed,
            v_max,
            bounds,
            inertia: 0.0,
        }
    }

    pub fn dims(&self) -> usize {
        self.bounds.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.particles == 0 {
            return Err(Error::InvalidConfig("particle count must be >= 1".into()));
        }
        if self.iterations == 0 {
            return Err(Error::InvalidConfig("iteration cap must be >= 1".into()));
        }
        if self.bounds.is_empty() {
            return Err(Error::InvalidConfig("search box has no dimensions".into()));
        }
        if self.bounds.iter().any(|(lo, hi)| !(lo < hi) || !lo.is_finite() || !hi.is_finite()) {
            return Err(Error::InvalidConfig("bounds must be finite and non-degenerate".into()));
        }
        if self.v_max.len() != self.dims() || self.v_max.iter().any(|v| !(*v > 0.0)) {
            return Err(Error::InvalidConfig("velocity clamp must be positive per dimension".into()));
        }
        if self.sigma0.len() != self.dims() || self.sigma0.iter().any(|s| *s < 0.0 || !s.is_finite()) {
            return Err(Error::InvalidConfig("sigma0 must be non-negative per dimension".into()));
        }
        if self.annealing < 0.0 || !self.annealing.is_finite() {
            return Err(Error::InvalidConfig("annealing constant must be >= 0".into()));
        }
        Ok(())
    }
}
