//! Finite partial orders, their comparability graphs, the acyclic
//! orientation, and longest-path (Mirsky) level decompositions.
//!
//! Levels split a poset into antichains while the longest chain bounds the
//! level count; together they drive every constructive witness in this
//! crate.

use crate::bits::BitSet;
use crate::graph::Graph;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("relation matrix is not square: row {0} has length {1}, expected {2}")]
    NotSquare(usize, usize, usize),
    #[error("empty posets are rejected")]
    Empty,
    #[error("not reflexive: leq[{0}][{0}] is false")]
    NotReflexive(usize),
    #[error("not antisymmetric: leq[{0}][{1}] and leq[{1}][{0}] with {0} != {1}")]
    NotAntisymmetric(usize, usize),
    #[error("not transitive: leq[{0}][{1}] and leq[{1}][{2}] but not leq[{0}][{2}]")]
    NotTransitive(usize, usize, usize),
    #[error("directed graph contains a cycle")]
    CyclicInput,
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("subset must be strictly increasing, in range (position {0})")]
    InvalidSubset(usize),
    #[error("level {0} out of range, maximum is {1}")]
    LevelOutOfRange(u32, u32),
}

/// Finite poset over dense indices `0..size`, relation stored as dense
/// bitset rows (`leq[a]` holds `b` iff `a <= b`). Construction validates
/// reflexivity, antisymmetry and transitivity.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<BitSet>,
}

/// Validates a raw boolean relation matrix against the poset axioms.
pub fn validate_poset(raw: &[Vec<bool>]) -> Result<Poset, PosetError> {
    let size = raw.len();
    for (i, row) in raw.iter().enumerate() {
        if row.len() != size {
            return Err(PosetError::NotSquare(i, row.len(), size));
        }
    }
    Poset::from_leq_fn(size, |a, b| raw[a][b])
}

impl Poset {
    /// Builds and validates a poset from a relation predicate.
    pub fn from_leq_fn(
        size: usize,
        mut leq: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        if size == 0 {
            return Err(PosetError::Empty);
        }
        let rows: Vec<BitSet> = (0..size)
            .map(|a| BitSet::from_indices(size, (0..size).filter(|&b| leq(a, b))))
            .collect();
        for (a, row) in rows.iter().enumerate() {
            if !row.contains(a) {
                return Err(PosetError::NotReflexive(a));
            }
            for b in row.iter() {
                if b != a && rows[b].contains(a) {
                    return Err(PosetError::NotAntisymmetric(a, b));
                }
                // a <= b requires everything above b to sit above a too.
                if !rows[b].is_subset(row) {
                    let c = rows[b].iter().find(|&c| !row.contains(c)).unwrap();
                    return Err(PosetError::NotTransitive(a, b, c));
                }
            }
        }
        Ok(Poset { size, leq: rows })
    }

    /// Chain 0 <= 1 <= ... <= n-1.
    pub fn chain(n: usize) -> Self {
        Poset::from_leq_fn(n, |a, b| a <= b).expect("chain is a poset")
    }

    /// n pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        Poset::from_leq_fn(n, |a, b| a == b).expect("antichain is a poset")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a].contains(b)
    }

    /// Strict comparability: a <= b and a != b.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    /// Undirected graph joining exactly the comparable pairs.
    pub fn comparability_graph(&self) -> Graph {
        let mut g = Graph::new(self.size);
        for a in 0..self.size {
            for b in self.leq[a].iter() {
                if b > a {
                    g.add_edge(a, b);
                }
            }
            for b in a + 1..self.size {
                if self.leq[b].contains(a) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Directed graph with an arc (a, b) for every strict pair a < b;
    /// acyclic because the order is antisymmetric and transitive.
    pub fn orient(&self) -> OrientedGraph {
        let arcs = (0..self.size).flat_map(|a| {
            self.leq[a]
                .iter()
                .filter(move |&b| b != a)
                .map(move |b| (a, b))
        });
        OrientedGraph::from_arcs(self.size, arcs)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<(usize, usize)> = (0..self.size)
            .flat_map(|a| self.leq[a].iter().filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        write!(f, "Poset(n={}, lt={:?})", self.size, pairs)
    }
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    size: usize,
    leq: Vec<Vec<bool>>,
}

impl Serialize for Poset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PosetJson {
            size: self.size,
            leq: (0..self.size)
                .map(|a| (0..self.size).map(|b| self.leq(a, b)).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PosetJson::deserialize(d)?;
        if raw.leq.len() != raw.size {
            return Err(D::Error::custom(format!(
                "size field {} does not match {} relation rows",
                raw.size,
                raw.leq.len()
            )));
        }
        validate_poset(&raw.leq).map_err(D::Error::custom)
    }
}

/// Directed graph over dense indices; arc lists are sorted and deduplicated.
/// Acyclicity is not enforced at construction, `topological_order` checks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    size: usize,
    out: Vec<Vec<usize>>,
}

impl OrientedGraph {
    pub fn from_arcs(size: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); size];
        for (a, b) in arcs {
            assert!(a < size && b < size, "arc ({a},{b}) out of range");
            assert!(a != b, "self-arc at {a}");
            out[a].push(b);
        }
        for row in &mut out {
            row.sort_unstable();
            row.dedup();
        }
        OrientedGraph { size, out }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |a| self.out[a].iter().map(move |&b| (a, b)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.len()).sum()
    }

    /// Kahn's algorithm; errors on a directed cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>, PosetError> {
        let mut indeg = vec![0usize; self.size];
        for (_, b) in self.arcs() {
            indeg[b] += 1;
        }
        let mut queue: std::collections::VecDeque<usize> =
            (0..self.size).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.size);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if order.len() != self.size {
            return Err(PosetError::CyclicInput);
        }
        Ok(order)
    }
}

/// Longest-path levels of a subset-induced sub-digraph: `level[a]` is the
/// length of the longest directed path inside the subset ending at `a`.
/// Each level set is an antichain of the underlying order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirskyLevels {
    levels: Vec<Option<u32>>,
    members: Vec<usize>,
    max_level: u32,
}

impl MirskyLevels {
    pub fn level(&self, v: usize) -> Option<u32> {
        self.levels.get(v).copied().flatten()
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    /// Subset members carrying a level, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// All vertices at the given level; pairwise independent in the
    /// comparability graph of any order inducing the digraph.
    pub fn level_antichain(&self, target_level: u32) -> Result<Vec<usize>, PosetError> {
        if target_level > self.max_level {
            return Err(PosetError::LevelOutOfRange(target_level, self.max_level));
        }
        Ok(self
            .members
            .iter()
            .copied()
            .filter(|&v| self.levels[v] == Some(target_level))
            .collect())
    }
}

fn check_subset(size: usize, subset: &[usize]) -> Result<(), PosetError> {
    if subset.is_empty() {
        return Err(PosetError::EmptySubset);
    }
    for (pos, &v) in subset.iter().enumerate() {
        if v >= size || (pos > 0 && subset[pos - 1] >= v) {
            return Err(PosetError::InvalidSubset(pos));
        }
    }
    Ok(())
}

/// Levels of the sub-digraph induced by `subset` (strictly increasing),
/// computed by dynamic programming over a topological order.
pub fn mirsky_levels(g: &OrientedGraph, subset: &[usize]) -> Result<MirskyLevels, PosetError> {
    check_subset(g.size(), subset)?;
    let members = BitSet::from_indices(g.size(), subset.iter().copied());
    let mut indeg = vec![0usize; g.size()];
    for &a in subset {
        for &b in g.out_neighbors(a) {
            if members.contains(b) {
                indeg[b] += 1;
            }
        }
    }
    let mut queue: std::collections::VecDeque<usize> =
        subset.iter().copied().filter(|&v| indeg[v] == 0).collect();
    let mut levels: Vec<Option<u32>> = vec![None; g.size()];
    for &v in &queue {
        levels[v] = Some(0);
    }
    let mut processed = 0usize;
    let mut max_level = 0u32;
    while let Some(v) = queue.pop_front() {
        processed += 1;
        let lv = levels[v].unwrap();
        max_level = max_level.max(lv);
        for &w in g.out_neighbors(v) {
            if !members.contains(w) {
                continue;
            }
            let cur = levels[w].get_or_insert(0);
            *cur = (*cur).max(lv + 1);
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    if processed != subset.len() {
        return Err(PosetError::CyclicInput);
    }
    Ok(MirskyLevels {
        levels,
        members: subset.to_vec(),
        max_level,
    })
}

/// Longest-path levels within a transitive strict order, restricted to
/// `subset`. Returns per-position levels and the maximum. Transitivity
/// makes predecessor counts a valid topological key, so no explicit sort
/// of the digraph is needed.
pub(crate) fn levels_in_order(
    lt: impl Fn(usize, usize) -> bool,
    subset: &[usize],
) -> (Vec<u32>, u32) {
    let k = subset.len();
    let mut pred_count = vec![0u32; k];
    for i in 0..k {
        for j in 0..k {
            if i != j && lt(subset[j], subset[i]) {
                pred_count[i] += 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_unstable_by_key(|&i| pred_count[i]);
    let mut levels = vec![0u32; k];
    let mut max_level = 0;
    for &i in &order {
        let mut lv = 0;
        for j in 0..k {
            if j != i && lt(subset[j], subset[i]) {
                lv = lv.max(levels[j] + 1);
            }
        }
        levels[i] = lv;
        max_level = max_level.max(lv);
    }
    (levels, max_level)
}

/// A maximum-length chain inside `subset`, recovered by walking
/// predecessors down the levels; ties pick the smallest vertex index. Its
/// length equals the clique number of the induced comparability graph.
pub fn longest_chain(p: &Poset, subset: &[usize]) -> Result<Vec<usize>, PosetError> {
    check_subset(p.size(), subset)?;
    let (levels, max_level) = levels_in_order(|a, b| p.lt(a, b), subset);
    let top = (0..subset.len())
        .filter(|&i| levels[i] == max_level)
        .min_by_key(|&i| subset[i])
        .expect("non-empty subset has a maximum level");
    let mut chain = vec![subset[top]];
    let mut cur = top;
    for lv in (0..max_level).rev() {
        let pred = (0..subset.len())
            .filter(|&j| levels[j] == lv && p.lt(subset[j], subset[cur]))
            .min_by_key(|&j| subset[j])
            .expect("every positive level has a predecessor one level down");
        chain.push(subset[pred]);
        cur = pred;
    }
    chain.reverse();
    Ok(chain)
}
