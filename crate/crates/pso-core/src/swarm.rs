use rand::Rng;

use crate::config::SwarmConfig;

#[derive(Clone, Debug)]
pub struct ParticleState {
    pub x: Vec<f64>,
    pub v: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct Particle {
    pub state: ParticleState,
    pub pbest: Vec<f64>,
    pub pbest_fitness: f64,
}

/// A swarm and the box it lives in. The global best never decreases and
/// always equals the maximum of the particles' personal bests.
#[derive(Clone, Debug)]
pub struct Swarm {
    pub particles: Vec<Particle>,
    pub gbest: Vec<f64>,
    pub gbest_fitness: f64,
    pub iteration: u64,
    /// Updates rejected because the fitness came back non-finite.
    pub rejected: u64,
    pub(crate) bounds: Vec<(f64, f64)>,
    pub(crate) v_max: Vec<f64>,
    pub(crate) inertia: f64,
}

impl Swarm {
    /// Particles drawn uniformly over the box with zero velocity; personal
    /// bests start at the initial positions. Draws are consumed in particle
    /// index order, one uniform per dimension.
    pub fn init<F: Fn(&[f64]) -> f64>(config: &SwarmConfig, fitness: F, rng: &mut impl Rng) -> Self {
        let mut particles = Vec::with_capacity(config.particles);
        let mut rejected = 0;
        for _ in 0..config.particles {
            let x: Vec<f64> = config
                .bounds
                .iter()
                .map(|&(lo, hi)| rng.random_range(lo..=hi))
                .collect();
            let mut f = fitness(&x);
            if !f.is_finite() {
                rejected += 1;
                f = f64::NEG_INFINITY;
            }
            particles.push(Particle {
                state: ParticleState {
                    v: vec![0.0; x.len()],
                    x: x.clone(),
                },
                pbest: x,
                pbest_fitness: f,
            });
        }
        let best = particles
            .iter()
            .enumerate()
            .max_by(|(ia, a), (ib, b)| {
                a.pbest_fitness
                    .total_cmp(&b.pbest_fitness)
                    .then(ib.cmp(ia))
            })
            .map(|(i, _)| i)
            .expect("at least one particle");
        Swarm {
            gbest: particles[best].pbest.clone(),
            gbest_fitness: particles[best].pbest_fitness,
            particles,
            iteration: 0,
            rejected,
            bounds: config.bounds.clone(),
            v_max: config.v_max.clone(),
            inertia: config.inertia,
        }
    }

    pub fn dims(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }
}
