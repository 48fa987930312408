//! Set systems over an ordered ground set and the compression machinery:
//! the (u,v)-shift, dominance, shiftedness, threshold recognition, and
//! labeled-copy counting.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits;
use crate::graph::Graph;

/// Largest ground set representable by the `u64` member masks.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetSystemError {
    GroundTooLarge { n: usize },
    ElementOutOfRange { element: usize, n: usize },
    ShiftSameElement { element: usize },
    CopyGuardExceeded { side: &'static str, n: usize, max: usize },
    MemberNotAnEdge { size: usize },
}

impl fmt::Display for SetSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetSystemError::GroundTooLarge { n } => {
                write!(f, "ground set size {n} exceeds the supported maximum {MAX_GROUND}")
            }
            SetSystemError::ElementOutOfRange { element, n } => {
                write!(f, "element {element} out of range 1..={n}")
            }
            SetSystemError::ShiftSameElement { element } => {
                write!(f, "shift endpoints must differ (both are {element})")
            }
            SetSystemError::CopyGuardExceeded { side, n, max } => {
                write!(f, "{side} ground set of size {n} exceeds the copy-counting guard {max}")
            }
            SetSystemError::MemberNotAnEdge { size } => {
                write!(f, "member of size {size} cannot be interpreted as a graph edge")
            }
        }
    }
}

impl core::error::Error for SetSystemError {}

/// A family of distinct subsets of the ground set `{1, ..., ground_n}`,
/// stored as sorted bit masks.
#[derive(Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground_n: usize,
    members: Vec<u64>,
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetSystem(n={}, members={:?})", self.ground_n, self.members_as_vecs())
    }
}

impl SetSystem {
    /// Builds a system from element lists (1-indexed); duplicate members collapse.
    pub fn from_members(ground_n: usize, members: &[Vec<usize>]) -> Result<Self, SetSystemError> {
        if ground_n > MAX_GROUND {
            return Err(SetSystemError::GroundTooLarge { n: ground_n });
        }
        let mut masks = Vec::with_capacity(members.len());
        for member in members {
            let mut mask = 0u64;
            for &e in member {
                if e < 1 || e > ground_n {
                    return Err(SetSystemError::ElementOutOfRange { element: e, n: ground_n });
                }
                mask |= 1u64 << (e - 1);
            }
            masks.push(mask);
        }
        Ok(Self::from_masks_unchecked(ground_n, masks))
    }

    fn from_masks_unchecked(ground_n: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        SetSystem { ground_n, members: masks }
    }

    /// Builds a system from member bit masks (bit `i` is element `i + 1`);
    /// duplicates collapse.
    pub fn from_masks(ground_n: usize, masks: Vec<u64>) -> Result<Self, SetSystemError> {
        if ground_n > MAX_GROUND {
            return Err(SetSystemError::GroundTooLarge { n: ground_n });
        }
        let valid = if ground_n == 64 { u64::MAX } else { (1u64 << ground_n) - 1 };
        for &m in &masks {
            if m & !valid != 0 {
                let element = 64 - (m & !valid).leading_zeros() as usize;
                return Err(SetSystemError::ElementOutOfRange { element, n: ground_n });
            }
        }
        Ok(Self::from_masks_unchecked(ground_n, masks))
    }

    /// The edge set of a graph as a 2-uniform system; requires `n <= 64`.
    pub fn from_graph(g: &Graph) -> Result<Self, SetSystemError> {
        if g.n() > MAX_GROUND {
            return Err(SetSystemError::GroundTooLarge { n: g.n() });
        }
        let masks = g
            .edges()
            .iter()
            .map(|&(u, v)| (1u64 << (u - 1)) | (1u64 << (v - 1)))
            .collect();
        Ok(Self::from_masks_unchecked(g.n(), masks))
    }

    /// Interprets an all-size-2 system as a graph on the same ground set.
    pub fn to_graph(&self) -> Result<Graph, SetSystemError> {
        let mut g = Graph::empty(self.ground_n);
        for &m in &self.members {
            if m.count_ones() != 2 {
                return Err(SetSystemError::MemberNotAnEdge { size: m.count_ones() as usize });
            }
            let u = m.trailing_zeros() as usize + 1;
            let v = 64 - m.leading_zeros() as usize;
            g.add_edge(u, v).expect("mask within ground set");
        }
        Ok(g)
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member_masks(&self) -> &[u64] {
        &self.members
    }

    /// Members as sorted element lists (1-indexed).
    pub fn members_as_vecs(&self) -> Vec<Vec<usize>> {
        self.members
            .iter()
            .map(|&m| (0..self.ground_n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect()
    }

    fn contains_mask(&self, mask: u64) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    fn check_element(&self, e: usize) -> Result<(), SetSystemError> {
        if e < 1 || e > self.ground_n {
            return Err(SetSystemError::ElementOutOfRange { element: e, n: self.ground_n });
        }
        Ok(())
    }

    /// The (u,v)-shift: every member containing `u` but not `v` is replaced
    /// by the member with `u` swapped for `v`, unless that set already
    /// belongs to the family. Preserves the family size and member sizes.
    pub fn shift(&self, u: usize, v: usize) -> Result<SetSystem, SetSystemError> {
        self.check_element(u)?;
        self.check_element(v)?;
        if u == v {
            return Err(SetSystemError::ShiftSameElement { element: u });
        }
        let ubit = 1u64 << (u - 1);
        let vbit = 1u64 << (v - 1);
        let mut out = Vec::with_capacity(self.members.len());
        for &m in &self.members {
            let image = if m & ubit != 0 && m & vbit == 0 {
                let candidate = (m & !ubit) | vbit;
                if self.contains_mask(candidate) {
                    m
                } else {
                    candidate
                }
            } else {
                m
            };
            out.push(image);
        }
        out.sort_unstable();
        debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "shift must be injective");
        Ok(SetSystem { ground_n: self.ground_n, members: out })
    }

    /// `u` dominates `v`: shifting `v -> u` fixes the family.
    pub fn dominates(&self, u: usize, v: usize) -> bool {
        assert!(u != v, "dominance is defined for distinct elements");
        assert!(u >= 1 && u <= self.ground_n && v >= 1 && v <= self.ground_n);
        let ubit = 1u64 << (u - 1);
        let vbit = 1u64 << (v - 1);
        self.members.iter().all(|&m| {
            if m & vbit != 0 && m & ubit == 0 {
                self.contains_mask((m & !vbit) | ubit)
            } else {
                true
            }
        })
    }

    /// `i` dominates `j` for every `i < j`.
    pub fn is_shifted(&self) -> bool {
        for i in 1..=self.ground_n {
            for j in (i + 1)..=self.ground_n {
                if !self.dominates(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Every pair of ground elements is comparable under dominance.
    pub fn is_stable(&self) -> bool {
        for i in 1..=self.ground_n {
            for j in (i + 1)..=self.ground_n {
                if !self.dominates(i, j) && !self.dominates(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Sum of all elements over all members; every effective shift
    /// `S_{j->i}` with `i < j` strictly decreases this.
    pub fn potential(&self) -> u64 {
        self.members
            .iter()
            .map(|&m| (0..self.ground_n).map(|i| ((m >> i & 1) as u64) * (i as u64 + 1)).sum::<u64>())
            .sum()
    }

    /// Applies `S_{j->i}` for `i < j` in lexicographic sweeps, restarting
    /// after every change, until the family is shifted.
    pub fn shift_to_fixpoint(&self) -> SetSystem {
        let mut current = self.clone();
        'outer: loop {
            for i in 1..=self.ground_n {
                for j in (i + 1)..=self.ground_n {
                    let next = current.shift(j, i).expect("elements validated");
                    if next != current {
                        debug_assert!(next.potential() < current.potential());
                        current = next;
                        continue 'outer;
                    }
                }
            }
            return current;
        }
    }

    /// Exact number of labeled (not necessarily induced) copies of `self`
    /// in `host`: injections of ground sets mapping every member into `host`.
    pub fn labeled_copies(&self, host: &SetSystem) -> Result<u64, SetSystemError> {
        const MAX_PATTERN: usize = 8;
        const MAX_HOST: usize = 12;
        if self.ground_n > MAX_PATTERN {
            return Err(SetSystemError::CopyGuardExceeded {
                side: "pattern",
                n: self.ground_n,
                max: MAX_PATTERN,
            });
        }
        if host.ground_n > MAX_HOST {
            return Err(SetSystemError::CopyGuardExceeded {
                side: "host",
                n: host.ground_n,
                max: MAX_HOST,
            });
        }
        if self.ground_n > host.ground_n {
            return Ok(0);
        }
        if self.contains_mask(0) && !host.contains_mask(0) {
            return Ok(0);
        }
        // members grouped by their largest element: checkable as soon as the
        // mapping covers that prefix of the pattern's ground set
        let mut by_last: Vec<Vec<u64>> = vec![Vec::new(); self.ground_n + 1];
        for &m in &self.members {
            if m != 0 {
                let last = 64 - m.leading_zeros() as usize;
                by_last[last].push(m);
            }
        }
        let mut map = [0usize; MAX_PATTERN + 1];
        fn dfs(
            pattern: &SetSystem,
            host: &SetSystem,
            by_last: &[Vec<u64>],
            map: &mut [usize; MAX_PATTERN + 1],
            depth: usize,
            used: u64,
        ) -> u64 {
            if depth > pattern.ground_n {
                return 1;
            }
            let mut total = 0;
            for target in 1..=host.ground_n {
                let tbit = 1u64 << (target - 1);
                if used & tbit != 0 {
                    continue;
                }
                map[depth] = target;
                let ok = by_last[depth].iter().all(|&m| {
                    let mut image = 0u64;
                    for e in 1..=depth {
                        if m >> (e - 1) & 1 == 1 {
                            image |= 1u64 << (map[e] - 1);
                        }
                    }
                    host.contains_mask(image)
                });
                if ok {
                    total += dfs(pattern, host, by_last, map, depth + 1, used | tbit);
                }
            }
            total
        }
        Ok(dfs(self, host, &by_last, &mut map, 1, 0))
    }
}

/// Applies the (u,v)-shift to a graph's edge set; requires `n <= 64`.
pub fn shift_graph(g: &Graph, u: usize, v: usize) -> Result<Graph, SetSystemError> {
    let system = SetSystem::from_graph(g)?;
    let shifted = system.shift(u, v)?;
    let mut out = Graph::empty(g.n());
    for m in shifted.member_masks() {
        let a = m.trailing_zeros() as usize + 1;
        let b = 64 - m.leading_zeros() as usize;
        out.add_edge(a, b).expect("edge within range");
    }
    Ok(out)
}

/// Outcome of threshold recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThresholdCheck {
    /// A vertex order (1-indexed) in which every vertex is adjacent to all
    /// or none of its predecessors.
    Threshold { order: Vec<usize> },
    /// The remaining vertices once peeling stalls: none of them is universal
    /// or isolated in the subgraph they induce.
    NotThreshold { stuck: Vec<usize> },
}

impl ThresholdCheck {
    pub fn is_threshold(&self) -> bool {
        matches!(self, ThresholdCheck::Threshold { .. })
    }

    pub fn order(&self) -> Option<&[usize]> {
        match self {
            ThresholdCheck::Threshold { order } => Some(order),
            ThresholdCheck::NotThreshold { .. } => None,
        }
    }
}

/// Recognizes threshold graphs by iteratively removing a universal or
/// isolated vertex (lowest label first; a single remaining vertex counts as
/// universal). The returned order is the removal order reversed, which is a
/// valid order for the all-or-none definition.
pub fn is_threshold(g: &Graph) -> ThresholdCheck {
    let n = g.n();
    let mut remaining = bits::full_mask(n);
    let mut count = n;
    let mut removal = Vec::with_capacity(n);
    while count > 0 {
        let pick = bits::iter_bits(&remaining).find(|&v| {
            let deg = bits::and_popcount(&remaining, g.row(v)) as usize;
            deg == 0 || deg == count - 1
        });
        match pick {
            Some(v) => {
                bits::clear_bit(&mut remaining, v);
                count -= 1;
                removal.push(v + 1);
            }
            None => {
                return ThresholdCheck::NotThreshold {
                    stuck: bits::iter_bits(&remaining).map(|v| v + 1).collect(),
                }
            }
        }
    }
    removal.reverse();
    ThresholdCheck::Threshold { order: removal }
}

/// Marks each position of a definition order as "good" (adjacent to all
/// predecessors) or "bad" (adjacent to none). The first vertex is vacuously
/// both; it is classified like the second vertex (good when alone).
pub(crate) fn classify_good(g: &Graph, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut good = vec![true; n];
    for j in 1..n {
        good[j] = g.has_edge(order[j], order[0]);
    }
    if n >= 2 {
        good[0] = good[1];
    }
    good
}

/// Relabels a threshold graph along its definition order so that the result
/// is shifted: good vertices in reverse order, then bad vertices in order.
pub fn shifted_relabeling(g: &Graph, order: &[usize]) -> Graph {
    let n = order.len();
    assert_eq!(n, g.n());
    let good = classify_good(g, order);
    let mut sequence = Vec::with_capacity(n);
    for j in (0..n).rev() {
        if good[j] {
            sequence.push(order[j]);
        }
    }
    for j in 0..n {
        if !good[j] {
            sequence.push(order[j]);
        }
    }
    let mut out = Graph::empty(n);
    for a in 0..n {
        for b in (a + 1)..n {
            if g.has_edge(sequence[a], sequence[b]) {
                out.add_edge(a + 1, b + 1).expect("relabeled edge in range");
            }
        }
    }
    out
}
