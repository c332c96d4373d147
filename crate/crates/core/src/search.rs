//! Derivative-free compass search.

/// Result of a [`compass_search`] run.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub point: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
}

/// Minimizes `objective` by polling `±step` along each coordinate axis.
///
/// Each iteration evaluates all `2n` poll points, moves to the best strict
/// improvement, and halves the step when no poll point improves. `project`
/// maps every trial point back into the feasible set before it is evaluated.
/// Stops after `max_iter` iterations or once the step falls below `min_step`.
pub fn compass_search<F, P>(
    mut objective: F,
    project: P,
    start: Vec<f64>,
    step: f64,
    min_step: f64,
    max_iter: usize,
) -> SearchResult
where
    F: FnMut(&[f64]) -> f64,
    P: Fn(&mut [f64]),
{
    let mut x = start;
    project(&mut x);
    let mut fx = objective(&x);
    let mut step = step;
    let mut trial = x.clone();
    let mut iterations = 0;
    while iterations < max_iter && step >= min_step {
        iterations += 1;
        let mut best: Option<(Vec<f64>, f64)> = None;
        for i in 0..x.len() {
            for sign in [1.0, -1.0] {
                trial.copy_from_slice(&x);
                trial[i] += sign * step;
                project(&mut trial);
                let ft = objective(&trial);
                let threshold = best.as_ref().map_or(fx, |b| b.1);
                if ft < threshold {
                    best = Some((trial.clone(), ft));
                }
            }
        }
        match best {
            Some((p, v)) => {
                x = p;
                fx = v;
            }
            None => step *= 0.5,
        }
    }
    SearchResult {
        point: x,
        value: fx,
        iterations,
    }
}
