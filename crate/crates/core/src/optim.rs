//! Multistart local maximization of `min{a p_s, b q_r}` over the simplex of
//! block fractions: projected coordinate moves with step halving, one
//! deterministic ChaCha stream per start.

use alloc::vec::Vec;
use core::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{p_eval, q_eval, Profile};

const STEP_INIT: f64 = 0.5;
const STEP_MIN: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub enum OptimError {
    NonpositiveCoefficient { name: &'static str, value: f64 },
    SizeTooSmall { name: &'static str, value: usize, min: usize },
    BlockCountOutOfRange { k: usize },
    NoStarts,
}

impl fmt::Display for OptimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OptimError::NonpositiveCoefficient { name, value } => {
                write!(f, "{name} = {value} must be positive")
            }
            OptimError::SizeTooSmall { name, value, min } => {
                write!(f, "{name} = {value} must be at least {min}")
            }
            OptimError::BlockCountOutOfRange { k } => {
                write!(f, "block count k = {k} outside 1..=5")
            }
            OptimError::NoStarts => write!(f, "need at least one start"),
        }
    }
}

impl core::error::Error for OptimError {}

/// Best profile found and its objective value `min{a p_s, b q_r}`.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimizeResult {
    pub profile: Profile,
    pub value: f64,
}

/// The objective on a raw simplex point `w = (x_1..x_k, y_1..y_k)`.
pub fn phi(a: f64, b: f64, r: usize, s: usize, w: &[f64]) -> f64 {
    let k = w.len() / 2;
    let (x, y) = w.split_at(k);
    (a * p_eval(x, y, s)).min(b * q_eval(x, y, r))
}

/// Euclidean projection onto `{w >= 0, sum w = 1}` by the sort-and-threshold
/// rule.
pub(crate) fn project_simplex(w: &mut [f64]) {
    let mut sorted = w.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut cumulative = 0.0;
    let mut tau = 0.0;
    for (j, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let candidate = (cumulative - 1.0) / (j + 1) as f64;
        if u - candidate > 0.0 {
            tau = candidate;
        }
    }
    let mut total = 0.0;
    for v in w.iter_mut() {
        *v = (*v - tau).max(0.0);
        total += *v;
    }
    // guard against drift so downstream mass checks hold exactly enough
    if total > 0.0 {
        for v in w.iter_mut() {
            *v /= total;
        }
    } else {
        w[0] = 1.0;
        for v in w.iter_mut().skip(1) {
            *v = 0.0;
        }
    }
}

/// A uniformly random simplex point from the gaps of sorted uniforms.
pub fn random_start(k: usize, seed: u64, start_index: u64) -> Vec<f64> {
    let dim = 2 * k;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(start_index);
    let mut cuts: Vec<f64> = (0..dim - 1)
        .map(|_| (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64))
        .collect();
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut w = Vec::with_capacity(dim);
    let mut prev = 0.0;
    for &c in &cuts {
        w.push(c - prev);
        prev = c;
    }
    w.push(1.0 - prev);
    w
}

/// Pattern search from `start`: perturb one coordinate, project back onto
/// the simplex, keep strict improvements; halve the step when a full sweep
/// stalls, stop below `1e-10`.
pub fn local_maximize(a: f64, b: f64, r: usize, s: usize, start: &[f64]) -> (Vec<f64>, f64) {
    let dim = start.len();
    let mut w = start.to_vec();
    project_simplex(&mut w);
    let mut value = phi(a, b, r, s, &w);
    let mut step = STEP_INIT;
    let mut candidate = w.clone();
    while step > STEP_MIN {
        let mut improved = true;
        while improved {
            improved = false;
            for i in 0..dim {
                for sign in [1.0, -1.0] {
                    candidate.copy_from_slice(&w);
                    candidate[i] += sign * step;
                    project_simplex(&mut candidate);
                    let cand_value = phi(a, b, r, s, &candidate);
                    if cand_value > value {
                        w.copy_from_slice(&candidate);
                        value = cand_value;
                        improved = true;
                    }
                }
            }
        }
        step *= 0.5;
    }
    (w, value)
}

fn validate(a: f64, b: f64, r: usize, s: usize, k: usize, starts: usize) -> Result<(), OptimError> {
    for (name, value) in [("a", a), ("b", b)] {
        if !(value > 0.0) {
            return Err(OptimError::NonpositiveCoefficient { name, value });
        }
    }
    for (name, value) in [("r", r), ("s", s)] {
        if value < 2 {
            return Err(OptimError::SizeTooSmall { name, value, min: 2 });
        }
    }
    if k < 1 || k > 5 {
        return Err(OptimError::BlockCountOutOfRange { k });
    }
    if starts == 0 {
        return Err(OptimError::NoStarts);
    }
    Ok(())
}

/// Multistart maximization of `min{a p_s, b q_r}` over `W_k`. Results are
/// reproducible from `(seed, starts)`: start `i` uses ChaCha stream `i`, and
/// ties keep the earliest start.
pub fn optimize_profile(
    a: f64,
    b: f64,
    r: usize,
    s: usize,
    k: usize,
    starts: usize,
    seed: u64,
) -> Result<OptimizeResult, OptimError> {
    validate(a, b, r, s, k, starts)?;
    let mut best: Option<(Vec<f64>, f64)> = None;
    for idx in 0..starts {
        let start = random_start(k, seed, idx as u64);
        let (w, value) = local_maximize(a, b, r, s, &start);
        if best.as_ref().map_or(true, |(_, bv)| value > *bv) {
            best = Some((w, value));
        }
    }
    let (w, value) = best.expect("at least one start");
    let (x, y) = w.split_at(k);
    let profile = Profile::new(x.to_vec(), y.to_vec()).expect("projected point is a profile");
    Ok(OptimizeResult { profile, value })
}
