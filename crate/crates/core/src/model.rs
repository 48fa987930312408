//! Block profiles of threshold graphs and their limit density polynomials.
//!
//! A profile holds nonnegative block fractions `(x_1..x_k, y_1..y_k)` summing
//! to one: `x_i` blocks are adjacent to everything before them, `y_i` blocks
//! to nothing. The densities of `K_s` and of the complement `K_r` in the
//! corresponding graphs converge to the polynomials evaluated here.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::math::powu;
use crate::sets::{classify_good, is_threshold};

/// Entries smaller than this count as zero for degeneracy purposes.
pub const ZERO_TOL: f64 = 1e-12;
/// Allowed deviation of the total mass from one.
pub const MASS_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub enum ProfileError {
    LengthMismatch { x_len: usize, y_len: usize },
    EmptyProfile,
    NegativeEntry { value: f64 },
    MassNotOne { sum: f64 },
    NotThreshold,
    EmptyGraph,
}

impl fmt::Display for ProfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileError::LengthMismatch { x_len, y_len } => {
                write!(f, "x has {x_len} blocks but y has {y_len}")
            }
            ProfileError::EmptyProfile => write!(f, "a profile needs at least one block"),
            ProfileError::NegativeEntry { value } => write!(f, "negative block fraction {value}"),
            ProfileError::MassNotOne { sum } => {
                write!(f, "block fractions sum to {sum}, expected 1")
            }
            ProfileError::NotThreshold => write!(f, "graph is not a threshold graph"),
            ProfileError::EmptyGraph => {
                write!(f, "cannot read a profile off a graph with no vertices")
            }
        }
    }
}

impl core::error::Error for ProfileError {}

/// A point of `W_k`: block fractions `x` (clique-joined) and `y` (isolated),
/// all nonnegative, summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct Profile {
    x: Vec<f64>,
    y: Vec<f64>,
}

/// `(sum x)^s + s * sum_{i<k} y_i (sum_{j>i} x_j)^(s-1)`, the limit density
/// of `K_s` for the profile's threshold graphs.
pub(crate) fn p_eval(x: &[f64], y: &[f64], s: usize) -> f64 {
    debug_assert!(s >= 2);
    let k = x.len();
    let total_x: f64 = x.iter().sum();
    let mut terms = 0.0;
    let mut suffix = 0.0;
    for i in (0..k.saturating_sub(1)).rev() {
        suffix += x[i + 1];
        terms += y[i] * powu(suffix, (s - 1) as u32);
    }
    powu(total_x, s as u32) + s as f64 * terms
}

/// `(sum y)^r + r * sum_i x_i (sum_{j>=i} y_j)^(r-1)`, the limit density of
/// the r-vertex independent set.
pub(crate) fn q_eval(x: &[f64], y: &[f64], r: usize) -> f64 {
    debug_assert!(r >= 2);
    let k = x.len();
    let total_y: f64 = y.iter().sum();
    let mut terms = 0.0;
    let mut suffix = 0.0;
    for i in (0..k).rev() {
        suffix += y[i];
        terms += x[i] * powu(suffix, (r - 1) as u32);
    }
    powu(total_y, r as u32) + r as f64 * terms
}

impl Profile {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Profile, ProfileError> {
        if x.len() != y.len() {
            return Err(ProfileError::LengthMismatch { x_len: x.len(), y_len: y.len() });
        }
        if x.is_empty() {
            return Err(ProfileError::EmptyProfile);
        }
        for &v in x.iter().chain(y.iter()) {
            if !(v >= 0.0) {
                return Err(ProfileError::NegativeEntry { value: v });
            }
        }
        let sum: f64 = x.iter().chain(y.iter()).sum();
        if (sum - 1.0).abs() > MASS_TOL {
            return Err(ProfileError::MassNotOne { sum });
        }
        Ok(Profile { x, y })
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn p_density(&self, s: usize) -> f64 {
        assert!(s >= 2, "p is defined for s >= 2");
        p_eval(&self.x, &self.y, s)
    }

    pub fn q_density(&self, r: usize) -> f64 {
        assert!(r >= 2, "q is defined for r >= 2");
        q_eval(&self.x, &self.y, r)
    }

    /// Zeros of the interleaved tail `(y_1, x_2, y_2, ..., x_k, y_k)` form a
    /// suffix (`x_1` is exempt).
    pub fn is_nondegenerate(&self) -> bool {
        let seq = self.interleaved_tail();
        match seq.iter().rposition(|&v| v >= ZERO_TOL) {
            None => true,
            Some(idx) => seq[..idx].iter().all(|&v| v >= ZERO_TOL),
        }
    }

    fn interleaved_tail(&self) -> Vec<f64> {
        let k = self.k();
        let mut seq = Vec::with_capacity(2 * k - 1);
        seq.push(self.y[0]);
        for i in 1..k {
            seq.push(self.x[i]);
            seq.push(self.y[i]);
        }
        seq
    }

    /// Merges away interior zeros until the profile is non-degenerate,
    /// padding with trailing zero blocks to keep `k` unchanged. Preserves
    /// both density polynomials and the total mass.
    pub fn reduce_nondegenerate(&self) -> Profile {
        let target_k = self.k();
        let mut x = self.x.clone();
        let mut y = self.y.clone();
        loop {
            let k = x.len();
            let mut changed = false;
            for i in 0..k {
                // y_i vanishes but a later clique block exists: merge x_i into x_{i+1}'s slot.
                if i + 1 < k && y[i] < ZERO_TOL && x[i + 1] >= ZERO_TOL {
                    let dust = y.remove(i);
                    let upper = x.remove(i + 1);
                    x[i] += upper;
                    y[i] += dust;
                    changed = true;
                    break;
                }
                // x_i vanishes (i >= 2) but y_i does not: merge y_i into y_{i-1}.
                if i >= 1 && x[i] < ZERO_TOL && y[i] >= ZERO_TOL {
                    let dust = x.remove(i);
                    let lower = y.remove(i);
                    y[i - 1] += lower;
                    if i < x.len() {
                        x[i] += dust;
                    } else {
                        x[i - 1] += dust;
                    }
                    changed = true;
                    break;
                }
            }
            if !changed {
                break;
            }
        }
        while x.len() < target_k {
            x.push(0.0);
            y.push(0.0);
        }
        let out = Profile { x, y };
        debug_assert!(out.is_nondegenerate());
        out
    }

    /// Threshold graph on `n` vertices with block sizes obtained from the
    /// fractions by largest-remainder rounding (ties to the earlier block).
    pub fn to_graph(&self, n: usize) -> Graph {
        assert!(n >= 1);
        let k = self.k();
        let mut weights = Vec::with_capacity(2 * k);
        for i in 0..k {
            weights.push(self.x[i]);
            weights.push(self.y[i]);
        }
        let sizes = largest_remainder(&weights, n);
        let mut g = Graph::empty(n);
        let mut next = 1usize;
        for (block, &size) in sizes.iter().enumerate() {
            let good = block % 2 == 0;
            for _ in 0..size {
                if good {
                    for earlier in 1..next {
                        g.add_edge(earlier, next).expect("labels in range");
                    }
                }
                next += 1;
            }
        }
        g
    }

    /// Reads the block fractions off a threshold graph's definition order.
    pub fn from_graph(g: &Graph) -> Result<Profile, ProfileError> {
        let n = g.n();
        if n == 0 {
            return Err(ProfileError::EmptyGraph);
        }
        let order = match is_threshold(g) {
            crate::sets::ThresholdCheck::Threshold { order } => order,
            crate::sets::ThresholdCheck::NotThreshold { .. } => {
                return Err(ProfileError::NotThreshold)
            }
        };
        let good = classify_good(g, &order);
        let nf = n as f64;
        let mut xs: Vec<f64> = Vec::new();
        let mut ys: Vec<f64> = Vec::new();
        let mut pos = 0usize;
        if !good[0] {
            xs.push(0.0);
        }
        while pos < n {
            let flag = good[pos];
            let mut len = 0usize;
            while pos < n && good[pos] == flag {
                len += 1;
                pos += 1;
            }
            if flag {
                xs.push(len as f64 / nf);
            } else {
                ys.push(len as f64 / nf);
            }
        }
        while ys.len() < xs.len() {
            ys.push(0.0);
        }
        while xs.len() < ys.len() {
            xs.push(0.0);
        }
        Profile::new(xs, ys)
    }
}

/// Integer block sizes summing to exactly `n`, proportional to `weights`.
fn largest_remainder(weights: &[f64], n: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = Vec::with_capacity(weights.len());
    let mut fractions: Vec<(f64, usize)> = Vec::with_capacity(weights.len());
    let mut assigned = 0usize;
    for (idx, &w) in weights.iter().enumerate() {
        let ideal = w * n as f64;
        let base = ideal as usize;
        sizes.push(base);
        assigned += base;
        fractions.push((ideal - base as f64, idx));
    }
    // Stable sort on descending fraction breaks ties toward lower index.
    fractions.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let mut leftover = n.saturating_sub(assigned);
    for (_, idx) in fractions {
        if leftover == 0 {
            break;
        }
        sizes[idx] += 1;
        leftover -= 1;
    }
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::QKind;
    use proptest::prelude::*;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn profile(x: &[f64], y: &[f64]) -> Profile {
        Profile::new(x.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            Profile::new(vec![0.5], vec![0.5, 0.0]),
            Err(ProfileError::LengthMismatch { .. })
        ));
        assert!(matches!(Profile::new(vec![], vec![]), Err(ProfileError::EmptyProfile)));
        assert!(matches!(
            Profile::new(vec![-0.1], vec![1.1]),
            Err(ProfileError::NegativeEntry { .. })
        ));
        assert!(matches!(
            Profile::new(vec![0.5], vec![0.4]),
            Err(ProfileError::MassNotOne { .. })
        ));
    }

    #[test]
    fn p_density_examples() {
        let theta = 0.37;
        let single = profile(&[theta], &[1.0 - theta]);
        assert!((single.p_density(4) - theta.powi(4)).abs() < 1e-15);

        let beta = 0.29;
        let qbar = profile(&[0.0, 1.0 - beta], &[beta, 0.0]);
        let expected = (1.0 - beta).powi(3) + 3.0 * beta * (1.0 - beta).powi(2);
        assert!((qbar.p_density(3) - expected).abs() < 1e-15);

        // frozen against an independent 40-digit evaluation
        let medium = profile(&[0.3, 0.2], &[0.1, 0.4]);
        assert!((medium.p_density(3) - 0.137).abs() < 1e-15);
    }

    #[test]
    fn q_density_examples() {
        let theta = 0.37;
        let single = profile(&[theta], &[1.0 - theta]);
        let expected = (1.0 - theta).powi(3) + 3.0 * theta * (1.0 - theta).powi(2);
        assert!((single.q_density(3) - expected).abs() < 1e-15);

        let beta = 0.29;
        let qbar = profile(&[0.0, 1.0 - beta], &[beta, 0.0]);
        assert!((qbar.q_density(4) - beta.powi(4)).abs() < 1e-15);

        let edgeless = profile(&[0.0], &[1.0]);
        assert_eq!(edgeless.q_density(5), 1.0);

        let medium = profile(&[0.3, 0.2], &[0.1, 0.4]);
        assert!((medium.q_density(3) - 0.446).abs() < 1e-15);
    }

    #[test]
    fn reduction_examples() {
        let degenerate = profile(&[0.3, 0.2], &[0.0, 0.5]);
        let reduced = degenerate.reduce_nondegenerate();
        assert_eq!(reduced.x(), &[0.5, 0.0]);
        assert_eq!(reduced.y(), &[0.5, 0.0]);

        let fine = profile(&[0.2, 0.3], &[0.25, 0.25]);
        assert_eq!(fine.reduce_nondegenerate(), fine);

        // x_1 = 0 is exempt from degeneracy
        let qbar_like = profile(&[0.0, 0.5], &[0.5, 0.0]);
        assert!(qbar_like.is_nondegenerate());
        assert_eq!(qbar_like.reduce_nondegenerate(), qbar_like);
    }

    #[test]
    fn reduction_handles_zero_x_blocks() {
        let degenerate = profile(&[0.3, 0.0, 0.2], &[0.2, 0.2, 0.1]);
        let reduced = degenerate.reduce_nondegenerate();
        assert!(reduced.is_nondegenerate());
        assert_eq!(reduced.k(), 3);
        for rs in 2..=5 {
            assert!((reduced.p_density(rs) - degenerate.p_density(rs)).abs() < 1e-12);
            assert!((reduced.q_density(rs) - degenerate.q_density(rs)).abs() < 1e-12);
        }
    }

    #[test]
    fn to_graph_examples() {
        let theta = 0.5;
        let q = profile(&[theta], &[1.0 - theta]).to_graph(10);
        assert_eq!(q, Graph::q_graph(10, 5, QKind::Q).unwrap());

        let beta = 0.3;
        let qbar = profile(&[0.0, 1.0 - beta], &[beta, 0.0]).to_graph(10);
        assert_eq!(qbar, Graph::q_graph(10, 3, QKind::QBar).unwrap());

        let any = profile(&[0.3, 0.2], &[0.1, 0.4]).to_graph(1);
        assert_eq!(any, Graph::complete(1));
    }

    #[test]
    fn to_graph_is_threshold_and_rounds_to_n() {
        let p = profile(&[0.21, 0.13], &[0.4, 0.26]);
        for n in [1usize, 3, 7, 50, 121] {
            let g = p.to_graph(n);
            assert_eq!(g.n(), n);
            assert!(is_threshold(&g).is_threshold());
        }
    }

    #[test]
    fn from_graph_examples() {
        let q = Graph::q_graph(10, 5, QKind::Q).unwrap();
        let p = Profile::from_graph(&q).unwrap();
        assert_eq!((p.x(), p.y()), (&[0.5][..], &[0.5][..]));

        let k6 = Graph::complete(6);
        let p = Profile::from_graph(&k6).unwrap();
        assert_eq!((p.x(), p.y()), (&[1.0][..], &[0.0][..]));

        let e4 = Graph::empty(4);
        let p = Profile::from_graph(&e4).unwrap();
        assert_eq!((p.x(), p.y()), (&[0.0][..], &[1.0][..]));

        let p4 = Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(Profile::from_graph(&p4), Err(ProfileError::NotThreshold));
    }

    /// Random threshold graph built from random good/bad blocks.
    pub(crate) fn random_threshold_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
        let mut g = Graph::empty(n);
        let mut placed = 0usize;
        let mut good = rng.next_u64() % 2 == 0;
        while placed < n {
            let len = 1 + (rng.next_u64() as usize) % (n - placed);
            for _ in 0..len {
                placed += 1;
                if good {
                    for earlier in 1..placed {
                        g.add_edge(earlier, placed).unwrap();
                    }
                }
            }
            good = !good;
        }
        g
    }

    #[test]
    fn round_trip_formula_accuracy() {
        let n = 400usize;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let g = random_threshold_graph(n, &mut rng);
            let p = Profile::from_graph(&g).unwrap();
            for rs in 2..=4usize {
                let report = g.count_cliques(rs);
                assert!(
                    (p.p_density(rs) - report.clique_density).abs() <= 10.0 / n as f64,
                    "p formula off for rs={rs}"
                );
                assert!(
                    (p.q_density(rs) - report.independent_density).abs() <= 10.0 / n as f64,
                    "q formula off for rs={rs}"
                );
            }
        }
    }

    fn arb_profile(max_k: usize) -> impl Strategy<Value = Profile> {
        (1..=max_k).prop_flat_map(|k| {
            proptest::collection::vec(0.0f64..1.0, 2 * k).prop_map(move |raw| {
                let total: f64 = raw.iter().sum();
                let scaled: Vec<f64> = if total == 0.0 {
                    let mut v = vec![0.0; 2 * k];
                    v[0] = 1.0;
                    v
                } else {
                    raw.iter().map(|v| v / total).collect()
                };
                let mut x = scaled[..k].to_vec();
                let y = scaled[k..].to_vec();
                let sum: f64 = x.iter().chain(y.iter()).sum();
                x[0] += 1.0 - sum;
                Profile::new(x, y).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn densities_stay_in_unit_interval(p in arb_profile(5), rs in 2usize..=5) {
            let pd = p.p_density(rs);
            let qd = p.q_density(rs);
            prop_assert!((0.0..=1.0 + 1e-12).contains(&pd));
            prop_assert!((0.0..=1.0 + 1e-12).contains(&qd));
        }

        #[test]
        fn reduction_preserves_densities(p in arb_profile(5), rs in 2usize..=5) {
            let reduced = p.reduce_nondegenerate();
            prop_assert!(reduced.is_nondegenerate());
            prop_assert!((reduced.p_density(rs) - p.p_density(rs)).abs() < 1e-12);
            prop_assert!((reduced.q_density(rs) - p.q_density(rs)).abs() < 1e-12);
        }

        /// With x_1 = 0: p_s(x, y) = q_s(y, x') and q_r(x, y) = p_r(y, x')
        /// where x' shifts x one place left.
        #[test]
        fn left_shift_duality(p in arb_profile(5), rs in 2usize..=5) {
            let k = p.k();
            let mut x = p.x().to_vec();
            let y = p.y().to_vec();
            let mut y2 = y.clone();
            y2[0] += x[0];
            x[0] = 0.0;
            let mut x_shift = x[1..].to_vec();
            x_shift.push(0.0);
            prop_assert_eq!(x_shift.len(), k);
            let lhs_p = p_eval(&x, &y2, rs);
            let rhs_p = q_eval(&y2, &x_shift, rs);
            prop_assert!((lhs_p - rhs_p).abs() < 1e-12, "{} vs {}", lhs_p, rhs_p);
            let lhs_q = q_eval(&x, &y2, rs);
            let rhs_q = p_eval(&y2, &x_shift, rs);
            prop_assert!((lhs_q - rhs_q).abs() < 1e-12, "{} vs {}", lhs_q, rhs_q);
        }
    }
}
