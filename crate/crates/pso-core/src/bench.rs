//! Benchmark objectives, stated for maximization (the optimum is 0).

/// Negated sphere: maximum 0 at the origin.
pub fn sphere(x: &[f64]) -> f64 {
    -x.iter().map(|v| v * v).sum::<f64>()
}

/// Negated 2-D Rosenbrock: maximum 0 at (1, 1).
pub fn rosenbrock2(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -((1.0 - a).powi(2) + 100.0 * (b - a * a).powi(2))
}

pub fn by_name(name: &str) -> Option<fn(&[f64]) -> f64> {
    match name {
        "sphere" => Some(sphere),
        "rosenbrock" => Some(rosenbrock2),
        _ => None,
    }
}
