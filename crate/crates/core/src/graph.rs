//! Labeled simple graphs with bit-row adjacency and exact subgraph counting.
//!
//! Vertices are labeled `1..=n` in the public API; all counts are exact
//! `u128` integers and densities are produced by correctly rounded division.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits;
use crate::math;

/// The two reference families: `Q_{n,b}` has exactly the edges of a clique on
/// the first `b` labels, `QBar_{n,b}` is its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QKind {
    Q,
    QBar,
}

impl fmt::Display for QKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QKind::Q => write!(f, "Q"),
            QKind::QBar => write!(f, "Qbar"),
        }
    }
}

/// Which density a blow-up limit refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowupKind {
    Clique,
    Independent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    BlockTooLarge { b: usize, n: usize },
    DimTooLarge { dim: usize, max: usize },
    DistanceOutOfRange { distance: usize, dim: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range 1..={n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::BlockTooLarge { b, n } => {
                write!(f, "clique block size {b} exceeds vertex count {n}")
            }
            GraphError::DimTooLarge { dim, max } => {
                write!(f, "hamming dimension {dim} exceeds the supported maximum {max}")
            }
            GraphError::DistanceOutOfRange { distance, dim } => {
                write!(f, "hamming distance {distance} outside 1..={dim}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Exact clique/independent-set counts of one subset size, with densities.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub l: usize,
    pub cliques: u128,
    pub independents: u128,
    pub clique_density: f64,
    pub independent_density: f64,
}

/// Result of the nearest-`Q`-family search.
#[derive(Clone, Debug, PartialEq)]
pub struct EditDistance {
    pub family: QKind,
    pub t: usize,
    /// `|E(G) Δ E(member)| / n²`.
    pub distance: f64,
}

/// A labeled simple graph on vertices `1..=n` with per-vertex bit rows.
///
/// The adjacency is kept symmetric and irreflexive by construction; a graph
/// is immutable for all counting purposes and cheap to clone at small `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            rows: vec![0u64; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Builds a graph from 1-indexed endpoint pairs; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts edge `{u, v}` (1-indexed); rejects self-loops and bad labels.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        for x in [u, v] {
            if x < 1 || x > n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.set_edge_idx(u - 1, v - 1);
        Ok(())
    }

    #[inline]
    fn set_edge_idx(&mut self, a: usize, b: usize) {
        let words = self.words;
        bits::set_bit(&mut self.rows[a * words..(a + 1) * words], b);
        bits::set_bit(&mut self.rows[b * words..(b + 1) * words], a);
    }

    #[inline]
    pub(crate) fn row(&self, idx: usize) -> &[u64] {
        &self.rows[idx * self.words..(idx + 1) * self.words]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacency of 1-indexed vertices.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n);
        u != v && bits::test_bit(self.row(u - 1), v - 1)
    }

    pub fn degree(&self, u: usize) -> usize {
        assert!(u >= 1 && u <= self.n);
        bits::popcount(self.row(u - 1)) as usize
    }

    pub fn edge_count(&self) -> usize {
        let total: u64 = (0..self.n).map(|v| bits::popcount(self.row(v))).sum();
        (total / 2) as usize
    }

    /// All edges as 1-indexed pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in bits::iter_bits(self.row(a)) {
                if b > a {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    /// Edge `uv` present iff absent in `self`; an involution.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let mask = bits::full_mask(self.n);
        for v in 0..self.n {
            let dst = &mut g.rows[v * g.words..(v + 1) * g.words];
            let src = &self.rows[v * self.words..(v + 1) * self.words];
            for w in 0..self.words {
                dst[w] = !src[w] & mask[w];
            }
            bits::clear_bit(dst, v);
        }
        g
    }

    /// Graph induced on the given 1-indexed vertices, relabeled `1..=k` in
    /// the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut g = Graph::empty(k);
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.set_edge_idx(i, j);
                }
            }
        }
        g
    }

    /// `Q_{n,b}` (edges exactly a clique on labels `1..=b`) or its complement.
    pub fn q_graph(n: usize, b: usize, kind: QKind) -> Result<Graph, GraphError> {
        if b > n {
            return Err(GraphError::BlockTooLarge { b, n });
        }
        let mut g = Graph::empty(n);
        for i in 0..b {
            for j in (i + 1)..b {
                g.set_edge_idx(i, j);
            }
        }
        match kind {
            QKind::Q => Ok(g),
            QKind::QBar => Ok(g.complement()),
        }
    }

    /// Cayley graph on all binary vectors of length `dim`: vertex labels are
    /// `x+1` for vectors `x in 0..2^dim`, adjacent iff their Hamming distance
    /// lies in `distances`.
    pub fn hamming_graph(dim: usize, distances: &[usize]) -> Result<Graph, GraphError> {
        const MAX_DIM: usize = 16;
        if dim > MAX_DIM {
            return Err(GraphError::DimTooLarge { dim, max: MAX_DIM });
        }
        let mut in_set = [false; MAX_DIM + 1];
        for &d in distances {
            if d < 1 || d > dim {
                return Err(GraphError::DistanceOutOfRange { distance: d, dim });
            }
            in_set[d] = true;
        }
        let n = 1usize << dim;
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if in_set[(u ^ v).count_ones() as usize] {
                    g.set_edge_idx(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Exact number of `l`-cliques (`l = 0` counts the empty set once).
    pub fn cliques_of_size(&self, l: usize) -> u128 {
        if l == 0 {
            return 1;
        }
        if l > self.n {
            return 0;
        }
        let mut stack: Vec<Vec<u64>> = (0..l).map(|_| vec![0u64; self.words]).collect();
        stack[0] = bits::full_mask(self.n);
        self.count_in_stack(&mut stack, 0, l)
    }

    /// Number of `l`-cliques containing the 1-indexed vertex `v`.
    pub fn cliques_through_vertex(&self, v: usize, l: usize) -> u128 {
        assert!(v >= 1 && v <= self.n);
        if l == 0 {
            return 0;
        }
        if l == 1 {
            return 1;
        }
        let mut stack: Vec<Vec<u64>> = (0..l - 1).map(|_| vec![0u64; self.words]).collect();
        stack[0].copy_from_slice(self.row(v - 1));
        self.count_in_stack(&mut stack, 0, l - 1)
    }

    /// Neighborhood-intersection recursion: candidates at `stack[level]` are
    /// consumed in ascending label order so every clique is counted once.
    fn count_in_stack(&self, stack: &mut [Vec<u64>], level: usize, l: usize) -> u128 {
        debug_assert!(l >= 1);
        if l == 1 {
            return bits::popcount(&stack[level]) as u128;
        }
        let mut total = 0u128;
        let mut widx = 0usize;
        while widx < self.words {
            let w = stack[level][widx];
            if w == 0 {
                widx += 1;
                continue;
            }
            let bit = w.trailing_zeros() as usize;
            stack[level][widx] = w & (w - 1);
            let v = widx * bits::WORD_BITS + bit;
            if l == 2 {
                total += bits::and_popcount(&stack[level], self.row(v)) as u128;
            } else {
                let (head, tail) = stack.split_at_mut(level + 1);
                bits::and_into(&mut tail[0], &head[level], self.row(v));
                total += self.count_in_stack(stack, level + 1, l - 1);
            }
        }
        total
    }

    /// Exact `l`-clique and `l`-independent-set counts with densities.
    ///
    /// `l = 0` reports one (empty) set of each kind; `l > n` reports zero.
    /// Densities divide by `C(n, l)` and are defined as `0` when that
    /// binomial vanishes.
    pub fn count_cliques(&self, l: usize) -> CountReport {
        let cliques = self.cliques_of_size(l);
        let independents = self.complement().cliques_of_size(l);
        let total = math::binomial(self.n as u64, l as u64);
        let density = |count: u128| if total == 0 { 0.0 } else { math::ratio_f64(count, total) };
        let report = CountReport {
            l,
            cliques,
            independents,
            clique_density: density(cliques),
            independent_density: density(independents),
        };
        debug_assert!(l < 2 || report.cliques + report.independents <= total);
        report
    }

    /// Limit density of `K_l` (or its complement) in the blow-up of this
    /// graph where every vertex becomes a clique part of size tending to
    /// infinity.
    pub fn blowup_limit_density(&self, l: usize, kind: BlowupKind) -> f64 {
        assert!(self.n >= 1, "blow-up of the empty graph is undefined");
        match kind {
            BlowupKind::Clique => {
                let counts: Vec<u128> =
                    (1..=l).map(|k| self.cliques_of_size(k)).collect();
                blowup_clique_density_from_counts(self.n, &counts)
            }
            BlowupKind::Independent => blowup_independent_density_from_count(
                self.n,
                l,
                self.complement().cliques_of_size(l),
            ),
        }
    }

    /// Closest member of the `2(n+1)`-element family `{Q_{n,t}, QBar_{n,t}}`
    /// in normalized edge edit distance `|E Δ E'| / n²`.
    pub fn edit_distance_to_q(&self) -> EditDistance {
        assert!(self.n >= 1);
        let n = self.n;
        let m = self.edge_count() as u128;
        let choose2 = |t: usize| math::binomial(t as u64, 2);
        // edges_in[t] = edges of G with both endpoints among labels 1..=t
        let mut edges_in = vec![0u128; n + 1];
        let mut prefix = vec![0u64; self.words];
        for t in 1..=n {
            edges_in[t] = edges_in[t - 1] + bits::and_popcount(&prefix, self.row(t - 1)) as u128;
            bits::set_bit(&mut prefix, t - 1);
        }
        let mut best: Option<(u128, QKind, usize)> = None;
        for kind in [QKind::Q, QKind::QBar] {
            for t in 0..=n {
                let delta = match kind {
                    QKind::Q => m + choose2(t) - 2 * edges_in[t],
                    QKind::QBar => choose2(n) - choose2(t) + 2 * edges_in[t] - m,
                };
                if best.is_none() || delta < best.as_ref().unwrap().0 {
                    best = Some((delta, kind, t));
                }
            }
        }
        let (delta, family, t) = best.unwrap();
        EditDistance {
            family,
            t,
            distance: math::ratio_f64(delta, (n as u128) * (n as u128)),
        }
    }
}

/// Blow-up clique density from precomputed clique counts: `counts[k-1]` is
/// the number of k-cliques, for k up to `counts.len() = l`. This lets
/// vertex-transitive callers supply counts obtained by the through-vertex
/// shortcut instead of a full recount.
pub fn blowup_clique_density_from_counts(n_vertices: usize, counts: &[u128]) -> f64 {
    let l = counts.len();
    assert!(l <= 6, "blow-up densities supported for l <= 6");
    assert!(n_vertices >= 1);
    if l == 0 {
        return 1.0;
    }
    let den = (n_vertices as u128).pow(l as u32);
    let num = (1..=l).map(|k| math::surjections(l, k) * counts[k - 1]).sum();
    math::ratio_f64(num, den)
}

/// Blow-up independent-set density from the number of independent `l`-sets.
pub fn blowup_independent_density_from_count(
    n_vertices: usize,
    l: usize,
    independents: u128,
) -> f64 {
    assert!(l <= 6, "blow-up densities supported for l <= 6");
    assert!(n_vertices >= 1);
    let den = (n_vertices as u128).pow(l as u32);
    math::ratio_f64(math::factorial(l as u64) * independents, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::binomial;
    use proptest::prelude::*;

    /// Independent oracle: count l-subsets by explicit enumeration.
    fn brute_counts(g: &Graph, l: usize) -> (u128, u128) {
        fn rec(g: &Graph, chosen: &mut Vec<usize>, from: usize, l: usize, acc: &mut (u128, u128)) {
            if chosen.len() == l {
                let mut clique = true;
                let mut indep = true;
                for i in 0..l {
                    for j in (i + 1)..l {
                        if g.has_edge(chosen[i], chosen[j]) {
                            indep = false;
                        } else {
                            clique = false;
                        }
                    }
                }
                acc.0 += clique as u128;
                acc.1 += indep as u128;
                return;
            }
            for v in from..=g.n() {
                chosen.push(v);
                rec(g, chosen, v + 1, l, acc);
                chosen.pop();
            }
        }
        let mut acc = (0u128, 0u128);
        rec(g, &mut Vec::new(), 1, l, &mut acc);
        acc
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n.saturating_sub(1)) / 2;
            proptest::collection::vec(proptest::bool::ANY, pairs).prop_map(move |flags| {
                let mut g = Graph::empty(n);
                let mut idx = 0;
                for u in 1..=n {
                    for v in (u + 1)..=n {
                        if flags[idx] {
                            g.add_edge(u, v).unwrap();
                        }
                        idx += 1;
                    }
                }
                g
            })
        })
    }

    #[test]
    fn from_edge_list_basic() {
        let g = Graph::from_edge_list(3, &[(1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 2) && g.has_edge(2, 1));

        let empty = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(empty.edge_count(), 0);

        let dedup = Graph::from_edge_list(4, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(dedup.edge_count(), 1);
    }

    #[test]
    fn from_edge_list_rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 0, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(2, 2)]),
            Err(GraphError::SelfLoop { vertex: 2 })
        );
    }

    #[test]
    fn complement_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.complement().edge_count(), 0);

        let e3 = Graph::empty(3);
        assert_eq!(e3.complement().edge_count(), 3);

        let q = Graph::q_graph(10, 5, QKind::Q).unwrap();
        // C(10,2) - C(5,2) = 35
        assert_eq!(q.complement().edge_count(), 35);
        assert_eq!(q.complement().complement(), q);
    }

    #[test]
    fn count_cliques_examples() {
        let k5 = Graph::complete(5);
        let r = k5.count_cliques(3);
        assert_eq!(r.cliques, 10);
        assert_eq!(r.clique_density, 1.0);
        assert_eq!(r.independents, 0);

        let q = Graph::q_graph(10, 5, QKind::Q).unwrap();
        let r = q.count_cliques(3);
        assert_eq!((r.cliques, r.independents), brute_counts(&q, 3));
        assert_eq!(r.cliques, 10); // C(5,3)
        assert_eq!(r.independents, 60); // C(5,3) + 5*C(5,2)
        assert_eq!(r.clique_density, 10.0 / 120.0);
        assert_eq!(r.independent_density, 0.5);

        let e6 = Graph::empty(6);
        let r = e6.count_cliques(2);
        assert_eq!((r.cliques, r.independents), (0, 15));
    }

    #[test]
    fn count_cliques_degenerate_sizes() {
        let g = Graph::q_graph(5, 3, QKind::Q).unwrap();
        assert_eq!(g.count_cliques(0).cliques, 1);
        assert_eq!(g.count_cliques(0).independents, 1);
        assert_eq!(g.count_cliques(6).cliques, 0);
        assert_eq!(g.count_cliques(6).clique_density, 0.0);
        // l = 1: every vertex is both a 1-clique and a 1-independent set.
        let r = g.count_cliques(1);
        assert_eq!((r.cliques, r.independents), (5, 5));
    }

    #[test]
    fn q_graph_examples() {
        assert_eq!(Graph::q_graph(5, 5, QKind::Q).unwrap(), Graph::complete(5));
        assert_eq!(Graph::q_graph(5, 0, QKind::Q).unwrap(), Graph::empty(5));
        let q = Graph::q_graph(10, 5, QKind::Q).unwrap();
        assert_eq!(q.count_cliques(3).independent_density, 0.5);
        assert!(Graph::q_graph(4, 5, QKind::Q).is_err());
    }

    #[test]
    fn q_graph_closed_forms_exhaustive() {
        for n in 1..=12usize {
            for b in 0..=n {
                let q = Graph::q_graph(n, b, QKind::Q).unwrap();
                for l in 2..=5usize {
                    let r = q.count_cliques(l);
                    assert_eq!(r.cliques, binomial(b as u64, l as u64), "n={n} b={b} l={l}");
                    let expected_ind = binomial((n - b) as u64, l as u64)
                        + b as u128 * binomial((n - b) as u64, l as u64 - 1);
                    assert_eq!(r.independents, expected_ind, "n={n} b={b} l={l}");
                }
            }
        }
    }

    #[test]
    fn hamming_square_is_four_cycle() {
        let g = Graph::hamming_graph(2, &[1]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.cliques_of_size(3), 0);
        // vertices are labeled x+1 for vectors x; 00-11 and 01-10 differ in two bits
        assert!(!g.has_edge(1, 4) && !g.has_edge(2, 3));
    }

    #[test]
    fn hamming_rejects_bad_input() {
        assert!(matches!(
            Graph::hamming_graph(17, &[1]),
            Err(GraphError::DimTooLarge { .. })
        ));
        assert!(matches!(
            Graph::hamming_graph(4, &[0]),
            Err(GraphError::DistanceOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::hamming_graph(4, &[5]),
            Err(GraphError::DistanceOutOfRange { .. })
        ));
    }

    #[test]
    fn hamming_transitivity_shortcut_small_dims() {
        for dim in 1..=6usize {
            let distances: Vec<usize> = (1..=dim).filter(|d| d % 2 == 1).collect();
            let g = Graph::hamming_graph(dim, &distances).unwrap();
            for l in 1..=4usize {
                let total = g.cliques_of_size(l);
                let through = g.cliques_through_vertex(1, l);
                assert_eq!(
                    total * l as u128,
                    through * (1u128 << dim),
                    "dim={dim} l={l}"
                );
            }
        }
    }

    #[test]
    fn blowup_examples() {
        let k1 = Graph::complete(1);
        for l in 1..=6 {
            assert_eq!(k1.blowup_limit_density(l, BlowupKind::Clique), 1.0);
        }
        let e2 = Graph::empty(2);
        assert_eq!(e2.blowup_limit_density(2, BlowupKind::Clique), 0.5);
        assert_eq!(e2.blowup_limit_density(0, BlowupKind::Clique), 1.0);
        assert_eq!(e2.blowup_limit_density(0, BlowupKind::Independent), 1.0);
    }

    /// Blow-up limit equals the probability that l i.i.d. uniform vertices
    /// are pairwise equal-or-adjacent (or distinct and non-adjacent).
    fn brute_blowup(g: &Graph, l: usize, kind: BlowupKind) -> f64 {
        let n = g.n();
        let mut good = 0u64;
        let mut tuple = vec![1usize; l];
        let total = (n as u64).pow(l as u32);
        for code in 0..total {
            let mut c = code;
            for slot in tuple.iter_mut() {
                *slot = (c % n as u64) as usize + 1;
                c /= n as u64;
            }
            let ok = match kind {
                BlowupKind::Clique => (0..l).all(|i| {
                    (i + 1..l).all(|j| tuple[i] == tuple[j] || g.has_edge(tuple[i], tuple[j]))
                }),
                BlowupKind::Independent => (0..l).all(|i| {
                    (i + 1..l).all(|j| tuple[i] != tuple[j] && !g.has_edge(tuple[i], tuple[j]))
                }),
            };
            good += ok as u64;
        }
        good as f64 / total as f64
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn blowup_matches_tuple_enumeration(g in arb_graph(6), l in 1usize..=4) {
            for kind in [BlowupKind::Clique, BlowupKind::Independent] {
                let fast = g.blowup_limit_density(l, kind);
                let brute = brute_blowup(&g, l, kind);
                prop_assert!((fast - brute).abs() < 1e-12, "{fast} vs {brute}");
            }
        }

        #[test]
        fn counts_match_brute_enumeration(g in arb_graph(10), l in 0usize..=4) {
            let r = g.count_cliques(l);
            let (bc, bi) = brute_counts(&g, l);
            prop_assert_eq!(r.cliques, bc);
            prop_assert_eq!(r.independents, bi);
        }

        #[test]
        fn adding_an_edge_is_monotone(g in arb_graph(9), l in 2usize..=4, pick in any::<u64>()) {
            let n = g.n();
            prop_assume!(n >= 2);
            let u = (pick % n as u64) as usize + 1;
            let v = ((pick >> 16) % n as u64) as usize + 1;
            prop_assume!(u != v && !g.has_edge(u, v));
            let mut g2 = g.clone();
            g2.add_edge(u, v).unwrap();
            prop_assert!(g2.cliques_of_size(l) >= g.cliques_of_size(l));
            prop_assert!(
                g2.complement().cliques_of_size(l) <= g.complement().cliques_of_size(l)
            );
        }
    }

    #[test]
    fn edit_distance_examples() {
        let q = Graph::q_graph(10, 5, QKind::Q).unwrap();
        let d = q.edit_distance_to_q();
        assert_eq!((d.family, d.t, d.distance), (QKind::Q, 5, 0.0));

        let e = Graph::empty(7);
        assert_eq!(e.edit_distance_to_q().distance, 0.0);

        let mut q_plus = q.clone();
        q_plus.add_edge(6, 7).unwrap();
        let d = q_plus.edit_distance_to_q();
        assert_eq!(d.distance, 0.01);
        assert_eq!((d.family, d.t), (QKind::Q, 5));
    }

    #[test]
    fn edit_distance_prefers_exact_members_of_both_families() {
        let qbar = Graph::q_graph(8, 3, QKind::QBar).unwrap();
        let d = qbar.edit_distance_to_q();
        assert_eq!(d.distance, 0.0);
        assert_eq!((d.family, d.t), (QKind::QBar, 3));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::from_edge_list(5, &[(1, 3), (3, 5), (2, 4)]).unwrap();
        let h = g.induced_subgraph(&[1, 3, 5]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(1, 2), (2, 3)]);
    }
}
