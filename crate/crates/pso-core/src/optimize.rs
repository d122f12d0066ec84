use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::SwarmConfig;
use crate::error::Result;
use crate::schedule::NoiseSchedule;
use crate::step::agpso_step;
use crate::swarm::Swarm;

#[derive(Clone, Debug)]
pub struct OptimizeResult {
    pub best: Vec<f64>,
    pub best_fitness: f64,
    /// Global best after initialization and after every iteration.
    pub trace: Vec<f64>,
    pub rejected: u64,
}

/// Runs the full annealed swarm: uniform initialization over the box, then
/// `iterations` steps. Deterministic for a fixed (problem, config, seed).
pub fn optimize<F: Fn(&[f64]) -> f64>(fitness: F, config: &SwarmConfig) -> Result<OptimizeResult> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let schedule = NoiseSchedule::new(config.sigma0.clone(), config.annealing);
    let mut swarm = Swarm::init(config, &fitness, &mut rng);
    let mut trace = Vec::with_capacity(config.iterations + 1);
    trace.push(swarm.gbest_fitness);
    for _ in 0..config.iterations {
        agpso_step(&mut swarm, &fitness, &schedule, &mut rng);
        trace.push(swarm.gbest_fitness);
    }
    Ok(OptimizeResult {
        best: swarm.gbest.clone(),
        best_fitness: swarm.gbest_fitness,
        trace,
        rejected: swarm.rejected,
    })
}
