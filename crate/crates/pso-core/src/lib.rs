//! Annealed Gaussian particle swarm optimization.
//!
//! Velocities are driven by `|r1|`-weighted pulls toward the personal best,
//! `|r2|`-weighted pulls toward the swarm best, and a zero-mean Gaussian
//! disturbance whose covariance decays as `sigma0 * exp(-c * n)` with the
//! iteration count. There is no inertia term by default; an optional one
//! can be enabled through the configuration.

pub mod bench;
mod config;
mod error;
mod optimize;
mod schedule;
mod step;
mod swarm;

pub use config::SwarmConfig;
pub use error::{Error, Result};
pub use optimize::{optimize, OptimizeResult};
pub use schedule::{NoiseSchedule, StepDraw};
pub use step::{agpso_step, agpso_step_with_drift};
pub use swarm::{Particle, ParticleState, Swarm};
