use rand::Rng;

use crate::schedule::{NoiseSchedule, StepDraw};
use crate::swarm::Swarm;

/// One swarm iteration:
/// `v <- inertia*v + |r1|(p - x) + |r2|(g - x) + eps`, velocity clamped,
/// position stepped and clipped to the box, bests updated where improved.
///
/// All draws are generated in particle index order before any update, so
/// fitness evaluations can run in any order without perturbing the stream;
/// the global-best reduction happens afterwards in index order.
pub fn agpso_step<F: Fn(&[f64]) -> f64>(
    swarm: &mut Swarm,
    fitness: F,
    schedule: &NoiseSchedule,
    rng: &mut impl Rng,
) {
    step_impl(swarm, fitness, schedule, rng, None);
}

/// Same update with an additive drift term `|r3| * drift` on the velocity.
/// The extra `r3` draw happens only when the drift is non-zero, so a zero
/// drift is bit-for-bit the plain step, random stream included.
pub fn agpso_step_with_drift<F: Fn(&[f64]) -> f64>(
    swarm: &mut Swarm,
    fitness: F,
    schedule: &NoiseSchedule,
    rng: &mut impl Rng,
    drift: &[f64],
) {
    let active = drift.iter().any(|d| *d != 0.0);
    step_impl(swarm, fitness, schedule, rng, active.then_some(drift));
}

fn step_impl<F: Fn(&[f64]) -> f64>(
    swarm: &mut Swarm,
    fitness: F,
    schedule: &NoiseSchedule,
    rng: &mut impl Rng,
    drift: Option<&[f64]>,
) {
    let n = swarm.iteration;
    let dims = swarm.dims();
    let draws: Vec<StepDraw> = (0..swarm.particles.len())
        .map(|_| StepDraw::draw(schedule, n, drift.is_some(), rng))
        .collect();

    let gbest = swarm.gbest.clone();
    for (particle, draw) in swarm.particles.iter_mut().zip(&draws) {
        let mut v = vec![0.0; dims];
        let mut x = vec![0.0; dims];
        for d in 0..dims {
            let xd = particle.state.x[d];
            let mut vd = swarm.inertia * particle.state.v[d]
                + draw.r1 * (particle.pbest[d] - xd)
                + draw.r2 * (gbest[d] - xd)
                + draw.eps[d];
            if let (Some(force), Some(r3)) = (drift, draw.r3) {
                vd += r3 * force[d];
            }
            vd = vd.clamp(-swarm.v_max[d], swarm.v_max[d]);
            v[d] = vd;
            x[d] = (xd + vd).clamp(swarm.bounds[d].0, swarm.bounds[d].1);
        }
        let f = fitness(&x);
        if !f.is_finite() {
            swarm.rejected += 1;
            continue;
        }
        particle.state.v = v;
        particle.state.x = x.clone();
        if f > particle.pbest_fitness {
            particle.pbest = x;
            particle.pbest_fitness = f;
        }
    }

    for particle in &swarm.particles {
        if particle.pbest_fitness > swarm.gbest_fitness {
            swarm.gbest_fitness = particle.pbest_fitness;
            swarm.gbest = particle.pbest.clone();
        }
    }
    swarm.iteration += 1;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::SwarmConfig;
    use crate::swarm::Swarm;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sphere(x: &[f64]) -> f64 {
        -x.iter().map(|v| v * v).sum::<f64>()
    }

    #[test]
    fn converged_swarm_is_a_fixed_point_without_noise() {
        let cfg = SwarmConfig::for_bounds(vec![(-1.0, 1.0), (-1.0, 1.0)], 8, 10, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut swarm = Swarm::init(&cfg, sphere, &mut rng);
        // Collapse everyone onto the global best.
        let g = swarm.gbest.clone();
        for p in &mut swarm.particles {
            p.state.x = g.clone();
            p.state.v = vec![0.0; 2];
            p.pbest = g.clone();
            p.pbest_fitness = sphere(&g);
        }
        swarm.gbest_fitness = sphere(&g);
        let schedule = NoiseSchedule::new(vec![0.0, 0.0], 0.1);
        agpso_step(&mut swarm, sphere, &schedule, &mut rng);
        assert_eq!(swarm.iteration, 1);
        for p in &swarm.particles {
            assert_eq!(p.state.x, g);
            assert_eq!(p.state.v, vec![0.0, 0.0]);
        }
    }

    #[test]
    fn zero_drift_is_bitwise_the_plain_step() {
        let cfg = SwarmConfig::for_bounds(vec![(-2.0, 2.0), (-2.0, 2.0)], 12, 10, 9);
        let schedule = NoiseSchedule::new(cfg.sigma0.clone(), cfg.annealing);
        let mut rng_a = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut rng_b = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut sa = Swarm::init(&cfg, sphere, &mut rng_a);
        let mut sb = Swarm::init(&cfg, sphere, &mut rng_b);
        for _ in 0..5 {
            agpso_step(&mut sa, sphere, &schedule, &mut rng_a);
            agpso_step_with_drift(&mut sb, sphere, &schedule, &mut rng_b, &[0.0, 0.0]);
        }
        assert_eq!(sa.gbest, sb.gbest);
        for (a, b) in sa.particles.iter().zip(&sb.particles) {
            assert_eq!(a.state.x, b.state.x);
            assert_eq!(a.state.v, b.state.v);
        }
        // And the streams stayed in step.
        let x: f64 = rng_a.random();
        let y: f64 = rng_b.random();
        assert_eq!(x, y);
    }

    #[test]
    fn non_finite_fitness_rejects_the_update() {
        let cfg = SwarmConfig::for_bounds(vec![(-1.0, 1.0)], 6, 10, 4);
        let schedule = NoiseSchedule::new(cfg.sigma0.clone(), cfg.annealing);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut swarm = Swarm::init(&cfg, sphere, &mut rng);
        let before: Vec<Vec<f64>> = swarm.particles.iter().map(|p| p.state.x.clone()).collect();
        let poisoned = |_: &[f64]| f64::NAN;
        agpso_step(&mut swarm, poisoned, &schedule, &mut rng);
        assert_eq!(swarm.rejected, 6);
        for (p, b) in swarm.particles.iter().zip(&before) {
            assert_eq!(&p.state.x, b, "rejected update must restore the state");
            assert_eq!(p.state.v, vec![0.0]);
        }
        assert_eq!(swarm.iteration, 1);
    }

    #[test]
    fn bests_are_monotone_and_positions_bounded() {
        let cfg = SwarmConfig::for_bounds(vec![(-3.0, 1.5), (0.5, 2.0)], 16, 40, 11);
        let schedule = NoiseSchedule::new(cfg.sigma0.clone(), cfg.annealing);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut swarm = Swarm::init(&cfg, sphere, &mut rng);
        let mut last_g = swarm.gbest_fitness;
        let mut last_p: Vec<f64> = swarm.particles.iter().map(|p| p.pbest_fitness).collect();
        for _ in 0..40 {
            agpso_step(&mut swarm, sphere, &schedule, &mut rng);
            assert!(swarm.gbest_fitness >= last_g);
            last_g = swarm.gbest_fitness;
            for (p, lp) in swarm.particles.iter().zip(&mut last_p) {
                assert!(p.pbest_fitness >= *lp);
                *lp = p.pbest_fitness;
                for (d, &(lo, hi)) in swarm.bounds.iter().enumerate() {
                    assert!(p.state.x[d] >= lo && p.state.x[d] <= hi);
                }
            }
            let max_p = swarm
                .particles
                .iter()
                .map(|p| p.pbest_fitness)
                .fold(f64::NEG_INFINITY, f64::max);
            assert_eq!(swarm.gbest_fitness, max_p);
        }
    }
}
