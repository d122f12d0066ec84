use rand::Rng;
use rand_distr::StandardNormal;

/// The annealed disturbance: per-dimension variances `sigma0` decaying by
/// `exp(-c * n)` with the iteration number.
#[derive(Clone, Debug)]
pub struct NoiseSchedule {
    pub sigma0: Vec<f64>,
    pub c: f64,
}

impl NoiseSchedule {
    pub fn new(sigma0: Vec<f64>, c: f64) -> Self {
        NoiseSchedule { sigma0, c }
    }

    pub fn variances_at(&self, n: u64) -> Vec<f64> {
        let decay = (-self.c * n as f64).exp();
        self.sigma0.iter().map(|s| s * decay).collect()
    }

    /// One disturbance vector at iteration `n`. A zero variance yields an
    /// exact zero while still consuming one draw per dimension, so forcing
    /// the disturbance off does not shift the random stream.
    pub fn sample(&self, n: u64, rng: &mut impl Rng) -> Vec<f64> {
        self.variances_at(n)
            .iter()
            .map(|var| {
                let z: f64 = rng.sample(StandardNormal);
                z * var.sqrt()
            })
            .collect()
    }
}

/// The random numbers consumed by one particle update, in draw order:
/// `r1`, `r2`, the disturbance vector, and (only when a repulsion force is
/// in play) `r3`.
#[derive(Clone, Debug)]
pub struct StepDraw {
    /// |N(0,1)| gain on the pull toward the personal best.
    pub r1: f64,
    /// |N(0,1)| gain on the pull toward the swarm best.
    pub r2: f64,
    pub eps: Vec<f64>,
    pub r3: Option<f64>,
}

impl StepDraw {
    pub fn draw(schedule: &NoiseSchedule, n: u64, with_r3: bool, rng: &mut impl Rng) -> Self {
        let z1: f64 = rng.sample(StandardNormal);
        let z2: f64 = rng.sample(StandardNormal);
        let eps = schedule.sample(n, rng);
        let r3 = if with_r3 {
            let z3: f64 = rng.sample(StandardNormal);
            Some(z3.abs())
        } else {
            None
        };
        StepDraw {
            r1: z1.abs(),
            r2: z2.abs(),
            eps,
            r3,
        }
    }
}
