//! Brute-force oracles and verification suites: exhaustive small-n searches,
//! the quantitative density checkpoints, and seeded fuzz harnesses.

use std::fmt;
use std::time::{Duration, Instant};

use edl_core::graph::{blowup_clique_density_from_counts, blowup_independent_density_from_count};
use edl_core::math::binomial;
use edl_core::sets::{shift_graph, shifted_relabeling};
use edl_core::{is_threshold, Graph, SetSystem};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Reports keep at most this many offending inputs.
pub const WITNESS_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    NTooLarge { n: usize, max: usize },
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::NTooLarge { n, max } => {
                write!(f, "n = {n} exceeds the supported maximum {max} for this suite")
            }
        }
    }
}

impl std::error::Error for VerifyError {}

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    pub trials: u64,
    pub violations: u64,
    pub witnesses: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            trials: 0,
            violations: 0,
            witnesses: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn record(&mut self, witness: String) {
        self.violations += 1;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(witness);
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

const MAX_ENUMERATE: usize = 8;
const MAX_BRUTE: usize = 7;

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 1..=n {
        for v in (u + 1)..=n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// The graph whose edge set is the given bit mask over the lexicographic
/// pair order (1,2), (1,3), ..., (n-1,n).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_list(n);
    let mut g = Graph::empty(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v).expect("pair in range");
        }
    }
    g
}

fn mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// All `2^C(n,2)` labeled graphs on `n` vertices, in edge-mask order.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    if n > MAX_ENUMERATE {
        return Err(VerifyError::NTooLarge { n, max: MAX_ENUMERATE });
    }
    Ok((0..mask_count(n)).map(move |mask| graph_from_mask(n, mask)))
}

fn mask_of(g: &Graph) -> u64 {
    let pairs = pair_list(g.n());
    let mut mask = 0u64;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if g.has_edge(u, v) {
            mask |= 1 << i;
        }
    }
    mask
}

fn permuted_mask(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let pairs = pair_list(n);
    let mut out = 0u64;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (a, b) = (perm[u - 1], perm[v - 1]);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            let idx = pairs.iter().position(|&p| p == (a, b)).expect("pair exists");
            out |= 1 << idx;
        }
    }
    out
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (1..=n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(perm);
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, f);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut perm, &mut f);
}

fn is_canonical(n: usize, mask: u64) -> bool {
    let mut canonical = true;
    for_each_permutation(n, |perm| {
        if canonical && permuted_mask(n, mask, perm) < mask {
            canonical = false;
        }
    });
    canonical
}

/// One representative per isomorphism class: the minimal edge mask. Exact but
/// exhaustive over all `n!` relabelings per graph, intended for small `n`.
pub fn enumerate_graphs_dedup(n: usize) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    if n > MAX_ENUMERATE {
        return Err(VerifyError::NTooLarge { n, max: MAX_ENUMERATE });
    }
    Ok((0..mask_count(n))
        .filter(move |&mask| is_canonical(n, mask))
        .map(move |mask| graph_from_mask(n, mask)))
}

// ---------------------------------------------------------------------------
// Brute-force extremal searches
// ---------------------------------------------------------------------------

/// Result of an exhaustive constrained or max-min search.
#[derive(Debug, Clone)]
pub struct BruteResult {
    pub best: u128,
    pub witness: Graph,
    /// Number of graphs attaining the optimum.
    pub maximizer_count: u64,
    /// Whether some maximizer is a threshold graph (checked over all of them).
    pub threshold_witness: bool,
}

/// Maximum of `cliques(G, s)` over labeled n-vertex graphs with
/// `independents(G, r) >= min_ind`; the witness prefers a threshold maximizer.
pub fn brute_conditional_max(
    n: usize,
    r: usize,
    s: usize,
    min_ind: u128,
) -> Result<BruteResult, VerifyError> {
    if n > MAX_BRUTE {
        return Err(VerifyError::NTooLarge { n, max: MAX_BRUTE });
    }
    brute_search(n, move |g| {
        if g.complement().cliques_of_size(r) >= min_ind {
            Some(g.cliques_of_size(s))
        } else {
            None
        }
    })
}

/// Maximum of `min{cliques(G, s), independents(G, r)}` over all labeled
/// n-vertex graphs.
pub fn brute_max_min(n: usize, r: usize, s: usize) -> Result<BruteResult, VerifyError> {
    if n > MAX_BRUTE {
        return Err(VerifyError::NTooLarge { n, max: MAX_BRUTE });
    }
    brute_search(n, move |g| {
        Some(g.cliques_of_size(s).min(g.complement().cliques_of_size(r)))
    })
}

/// Two-pass parallel search: find the best objective value, then gather the
/// maximizer statistics deterministically.
fn brute_search(
    n: usize,
    objective: impl Fn(&Graph) -> Option<u128> + Sync,
) -> Result<BruteResult, VerifyError> {
    let total = mask_count(n);
    let best = (0..total)
        .into_par_iter()
        .filter_map(|mask| objective(&graph_from_mask(n, mask)))
        .max()
        .expect("the empty and complete graphs are always feasible here");
    let stats = (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let g = graph_from_mask(n, mask);
            if objective(&g) == Some(best) {
                let threshold = is_threshold(&g).is_threshold();
                Some((1u64, threshold, mask, if threshold { Some(mask) } else { None }))
            } else {
                None
            }
        })
        .reduce(
            || (0u64, false, u64::MAX, None),
            |a, b| {
                (
                    a.0 + b.0,
                    a.1 || b.1,
                    a.2.min(b.2),
                    match (a.3, b.3) {
                        (Some(x), Some(y)) => Some(x.min(y)),
                        (x, y) => x.or(y),
                    },
                )
            },
        );
    let (maximizer_count, threshold_witness, lowest_mask, lowest_threshold_mask) = stats;
    let witness_mask = lowest_threshold_mask.unwrap_or(lowest_mask);
    Ok(BruteResult {
        best,
        witness: graph_from_mask(n, witness_mask),
        maximizer_count,
        threshold_witness,
    })
}

/// Exact minimum of `cliques(G,3) + independents(G,3)` over labeled n-vertex
/// graphs.
pub fn goodman_min(n: usize) -> Result<u128, VerifyError> {
    if n > MAX_BRUTE {
        return Err(VerifyError::NTooLarge { n, max: MAX_BRUTE });
    }
    Ok((0..mask_count(n))
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(n, mask);
            g.cliques_of_size(3) + g.complement().cliques_of_size(3)
        })
        .min()
        .expect("at least one graph"))
}

// ---------------------------------------------------------------------------
// The Hamming-graph checkpoint
// ---------------------------------------------------------------------------

pub const FRANEK_RODL_DISTANCES: [usize; 6] = [1, 4, 5, 8, 9, 11];
pub const FRANEK_RODL_DIM: usize = 13;

#[derive(Debug, Clone)]
pub struct FranekRodlReport {
    /// Blow-up limit densities of `K_4` and of its complement.
    pub d4: f64,
    pub dbar4: f64,
    /// Exact k-clique counts of the 8192-vertex base graph, k = 1..4.
    pub c: [u128; 4],
    /// Exact number of independent 4-sets.
    pub i4: u128,
    /// Common vertex degree.
    pub degree: usize,
    /// K_4 density on a seeded random 512-vertex induced subgraph divided by
    /// the full-graph density; a loose consistency signal, not a gate.
    pub subsample_ratio: f64,
    pub d4_bound: f64,
    pub dbar4_bound: f64,
    pub pass: bool,
    pub elapsed: Duration,
}

/// Builds the 13-dimensional Hamming-distance graph, counts its small cliques
/// and independent sets through a fixed vertex (the graph is
/// vertex-transitive), and checks the two strict blow-up density bounds.
pub fn franek_rodl_check() -> FranekRodlReport {
    let start = Instant::now();
    let h = Graph::hamming_graph(FRANEK_RODL_DIM, &FRANEK_RODL_DISTANCES)
        .expect("dimension within guard");
    let n = h.n();
    let degree = h.degree(1);

    // k-clique counts via transitivity: every k-clique contains vertex 1 in
    // k of its n rotations, so total = n * through(1) / k.
    let mut c = [0u128; 4];
    c[0] = n as u128;
    for k in 2..=4usize {
        let through = h.cliques_through_vertex(1, k);
        let product = n as u128 * through;
        assert_eq!(product % k as u128, 0, "transitivity scaling must divide exactly");
        c[k - 1] = product / k as u128;
    }
    assert_eq!(c[1], n as u128 * degree as u128 / 2, "degree consistency");

    let complement = h.complement();
    let through_ind = complement.cliques_through_vertex(1, 4);
    let i4_product = n as u128 * through_ind;
    assert_eq!(i4_product % 4, 0);
    let i4 = i4_product / 4;

    let d4 = blowup_clique_density_from_counts(n, &c);
    let dbar4 = blowup_independent_density_from_count(n, 4, i4);

    // Density on a random induced subgraph is an unbiased estimate of the
    // full K_4 density; compare as a sanity signal only.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut picked = vec![false; n];
    let mut sample = Vec::with_capacity(512);
    while sample.len() < 512 {
        let v = (rng.next_u64() % n as u64) as usize;
        if !picked[v] {
            picked[v] = true;
            sample.push(v + 1);
        }
    }
    let sub = h.induced_subgraph(&sample);
    let sample_density = sub.count_cliques(4).clique_density;
    let full_density = c[3] as f64 / binomial(n as u64, 4) as f64;
    let subsample_ratio =
        if full_density > 0.0 { sample_density / full_density } else { f64::NAN };

    let d4_bound = 0.99 / 64.0;
    let dbar4_bound = 0.993 / 64.0;
    let pass = d4 < d4_bound && dbar4 < dbar4_bound;
    FranekRodlReport {
        d4,
        dbar4,
        c,
        i4,
        degree,
        subsample_ratio,
        d4_bound,
        dbar4_bound,
        pass,
        elapsed: start.elapsed(),
    }
}

// ---------------------------------------------------------------------------
// Exhaustive property suites
// ---------------------------------------------------------------------------

const MAX_EXHAUSTIVE: usize = 6;

/// For every labeled graph on up to `max_n` vertices and every `(u, v, l)`:
/// shifting never loses l-cliques or l-independent sets.
pub fn exhaustive_shift_monotonicity(max_n: usize) -> Result<VerificationReport, VerifyError> {
    if max_n > MAX_EXHAUSTIVE {
        return Err(VerifyError::NTooLarge { n: max_n, max: MAX_EXHAUSTIVE });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("shift-exhaustive");
    for n in 1..=max_n {
        let outcome = (0..mask_count(n))
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask);
                let cliques: Vec<u128> = (1..=n).map(|l| g.cliques_of_size(l)).collect();
                let co = g.complement();
                let independents: Vec<u128> = (1..=n).map(|l| co.cliques_of_size(l)).collect();
                let mut trials = 0u64;
                let mut bad: Vec<String> = Vec::new();
                for u in 1..=n {
                    for v in 1..=n {
                        if u == v {
                            continue;
                        }
                        let shifted = shift_graph(&g, u, v).expect("small ground set");
                        let shifted_co = shifted.complement();
                        for l in 1..=n {
                            trials += 1;
                            if shifted.cliques_of_size(l) < cliques[l - 1]
                                || shifted_co.cliques_of_size(l) < independents[l - 1]
                            {
                                bad.push(format!(
                                    "n={n} edges={:?} u={u} v={v} l={l}",
                                    g.edges()
                                ));
                            }
                        }
                    }
                }
                (trials, bad)
            })
            .reduce(
                || (0u64, Vec::new()),
                |mut a, mut b| {
                    a.0 += b.0;
                    a.1.append(&mut b.1);
                    a
                },
            );
        report.trials += outcome.0;
        for witness in outcome.1 {
            report.record(witness);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// For every labeled graph on up to `max_n` vertices: shifted implies
/// threshold, and the witness-derived relabeling of a threshold graph is
/// shifted.
pub fn threshold_equivalence(max_n: usize) -> Result<VerificationReport, VerifyError> {
    if max_n > MAX_EXHAUSTIVE {
        return Err(VerifyError::NTooLarge { n: max_n, max: MAX_EXHAUSTIVE });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("threshold-equivalence");
    for n in 1..=max_n {
        let outcome = (0..mask_count(n))
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask);
                let system = SetSystem::from_graph(&g).expect("small ground set");
                let check = is_threshold(&g);
                let mut bad: Vec<String> = Vec::new();
                if system.is_shifted() && !check.is_threshold() {
                    bad.push(format!("shifted but not threshold: n={n} edges={:?}", g.edges()));
                }
                if let Some(order) = check.order() {
                    let relabeled = shifted_relabeling(&g, order);
                    if !SetSystem::from_graph(&relabeled)
                        .expect("small ground set")
                        .is_shifted()
                    {
                        bad.push(format!(
                            "threshold but relabeling not shifted: n={n} edges={:?}",
                            g.edges()
                        ));
                    }
                }
                (1u64, bad)
            })
            .reduce(
                || (0u64, Vec::new()),
                |mut a, mut b| {
                    a.0 += b.0;
                    a.1.append(&mut b.1);
                    a
                },
            );
        report.trials += outcome.0;
        for witness in outcome.1 {
            report.record(witness);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Max-min trend: for n in 5..=max_n the exhaustive max-min value has a
/// threshold maximizer, and the normalized values are nondecreasing and stay
/// within 0.05 above the limit value.
pub fn maxmin_trend(r: usize, max_n: usize) -> Result<VerificationReport, VerifyError> {
    if max_n > MAX_BRUTE {
        return Err(VerifyError::NTooLarge { n: max_n, max: MAX_BRUTE });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("maxmin-trend");
    let limit = edl_core::solve::rho_maxmin(r).expect("r >= 3").value;
    let mut previous = 0.0f64;
    for n in 5..=max_n {
        report.trials += 1;
        let result = brute_max_min(n, r, r)?;
        let normalized = result.best as f64 / binomial(n as u64, r as u64) as f64;
        if !result.threshold_witness {
            report.record(format!("no threshold maximizer at n={n}"));
        }
        if normalized + 1e-12 < previous {
            report.record(format!("normalized value dropped at n={n}: {normalized}"));
        }
        if normalized > limit + 0.05 {
            report.record(format!("normalized value {normalized} exceeds limit+0.05 at n={n}"));
        }
        previous = normalized;
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Best s-clique count over the reference family members on n vertices whose
/// r-independent count meets the constraint.
pub fn best_family_count(n: usize, r: usize, s: usize, min_ind: u128) -> Option<u128> {
    use edl_core::QKind;
    let mut best: Option<u128> = None;
    for kind in [QKind::Q, QKind::QBar] {
        for t in 0..=n {
            let member = Graph::q_graph(n, t, kind).expect("t <= n");
            if member.complement().cliques_of_size(r) >= min_ind {
                let cliques = member.cliques_of_size(s);
                best = Some(best.map_or(cliques, |b: u128| b.max(cliques)));
            }
        }
    }
    best
}

/// Conditional extremality sweep: for every constraint level, the exhaustive
/// maximum equals the best reference-family member and has a threshold
/// maximizer.
pub fn conditional_sweep(n: usize, r: usize, s: usize) -> Result<VerificationReport, VerifyError> {
    if n > MAX_EXHAUSTIVE {
        return Err(VerifyError::NTooLarge { n, max: MAX_EXHAUSTIVE });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("conditional-extremality");
    // one pass of exact counts, then aggregate every constraint level
    let stats: Vec<(u128, u128, bool)> = (0..mask_count(n))
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(n, mask);
            (
                g.cliques_of_size(s),
                g.complement().cliques_of_size(r),
                is_threshold(&g).is_threshold(),
            )
        })
        .collect();
    let total_ind = binomial(n as u64, r as u64);
    for min_ind in 0..=total_ind {
        report.trials += 1;
        let mut best = 0u128;
        let mut threshold_attains = false;
        for &(cliques, independents, threshold) in &stats {
            if independents < min_ind {
                continue;
            }
            if cliques > best {
                best = cliques;
                threshold_attains = threshold;
            } else if cliques == best {
                threshold_attains |= threshold;
            }
        }
        if !threshold_attains {
            report.record(format!("no threshold maximizer at min_ind={min_ind}"));
        }
        match best_family_count(n, r, s, min_ind) {
            Some(family_best) if family_best == best => {}
            Some(family_best) => {
                report.record(format!(
                    "family best {family_best} != exhaustive best {best} at min_ind={min_ind}"
                ));
            }
            None => report.record(format!("no feasible family member at min_ind={min_ind}")),
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Goodman trend: value 0 at n=5, positive from n=6 on, normalized values
/// nondecreasing and below 1/4.
pub fn goodman_trend(max_n: usize) -> Result<VerificationReport, VerifyError> {
    if max_n > MAX_BRUTE {
        return Err(VerifyError::NTooLarge { n: max_n, max: MAX_BRUTE });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("goodman-trend");
    let mut previous = -1.0f64;
    for n in 5..=max_n {
        report.trials += 1;
        let value = goodman_min(n)?;
        let normalized = value as f64 / binomial(n as u64, 3) as f64;
        if n == 5 && value != 0 {
            report.record(format!("five-cycle bound violated: min={value} at n=5"));
        }
        if n >= 6 && value == 0 {
            report.record(format!("Ramsey bound violated: min=0 at n={n}"));
        }
        if normalized < previous - 1e-12 {
            report.record(format!("normalized minimum dropped at n={n}"));
        }
        if normalized >= 0.25 {
            report.record(format!("normalized minimum {normalized} reached 1/4 at n={n}"));
        }
        previous = normalized;
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

// ---------------------------------------------------------------------------
// Fuzz suites
// ---------------------------------------------------------------------------

const MAX_FUZZ_N: usize = 12;

fn uniform_usize(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, percent: u64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.next_u64() % 100 < percent {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Random (G, u, v, l) draws; clique and independent counts must never drop
/// under a shift.
pub fn fuzz_shift_monotonicity(
    trials: u64,
    max_n: usize,
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    if max_n > MAX_FUZZ_N {
        return Err(VerifyError::NTooLarge { n: max_n, max: MAX_FUZZ_N });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("shift-monotonicity-fuzz");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        report.trials += 1;
        let n = uniform_usize(&mut rng, 2, max_n.max(2));
        let percent = 5 + rng.next_u64() % 91;
        let g = random_graph(&mut rng, n, percent);
        let u = uniform_usize(&mut rng, 1, n);
        let mut v = uniform_usize(&mut rng, 1, n);
        while v == u {
            v = uniform_usize(&mut rng, 1, n);
        }
        let l = uniform_usize(&mut rng, 1, n);
        let shifted = shift_graph(&g, u, v).expect("small ground set");
        if shifted.cliques_of_size(l) < g.cliques_of_size(l)
            || shifted.complement().cliques_of_size(l) < g.complement().cliques_of_size(l)
        {
            report.record(format!("n={n} edges={:?} u={u} v={v} l={l}", g.edges()));
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Pool of stable patterns: all labeled threshold graphs on up to 4 vertices
/// as 2-uniform systems, plus stable systems found by rejection sampling.
fn stable_pool(seed: u64) -> Vec<SetSystem> {
    let mut pool = Vec::new();
    for n in 1..=4usize {
        for mask in 0..mask_count(n) {
            let g = graph_from_mask(n, mask);
            if is_threshold(&g).is_threshold() {
                pool.push(SetSystem::from_graph(&g).expect("small ground set"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let mut attempts = 0;
    while attempts < 400 && pool.len() < 120 {
        attempts += 1;
        let ground = uniform_usize(&mut rng, 2, 5);
        let full: u64 = (1 << ground) - 1;
        let count = uniform_usize(&mut rng, 1, 6);
        let masks: Vec<u64> = (0..count).map(|_| rng.next_u64() & full).collect();
        let system = SetSystem::from_masks(ground, masks).expect("masks within ground");
        if system.is_stable() {
            pool.push(system);
        }
    }
    pool
}

/// Random stable pattern H and random host F; every effective shift of F
/// must not decrease the labeled-copy count of H.
pub fn fuzz_copy_monotonicity(trials: u64, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("copy-monotonicity-fuzz");
    let pool = stable_pool(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        report.trials += 1;
        let pattern = &pool[(rng.next_u64() as usize) % pool.len()];
        let ground = uniform_usize(&mut rng, 2, 7);
        let full: u64 = (1 << ground) - 1;
        let count = uniform_usize(&mut rng, 0, 8);
        let masks: Vec<u64> = (0..count).map(|_| rng.next_u64() & full).collect();
        let host = SetSystem::from_masks(ground, masks).expect("masks within ground");
        let base = pattern.labeled_copies(&host).expect("within guards");
        for u in 1..=ground {
            for v in 1..=ground {
                if u == v {
                    continue;
                }
                let shifted = host.shift(u, v).expect("elements in range");
                if shifted == host {
                    continue;
                }
                let moved = pattern.labeled_copies(&shifted).expect("within guards");
                if moved < base {
                    report.record(format!(
                        "pattern={:?} host={:?} u={u} v={v}: {moved} < {base}",
                        pattern.members_as_vecs(),
                        host.members_as_vecs()
                    ));
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}
