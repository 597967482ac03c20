//! Simple undirected graphs over dense vertex indices, with the exact
//! invariant computations the theorem checks rely on (clique and
//! independence numbers, diameter, girth, domination, multipartite
//! structure). All searches are exact; oversized inputs are rejected
//! instead of approximated.

use crate::bits::BitSet;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Vertex-count ceiling for the NP-hard exact searches (clique,
/// independence, domination).
pub const DEFAULT_EXACT_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("subset must be strictly increasing without duplicates (position {0})")]
    InvalidSubset(usize),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("graph has {size} vertices, exact search capped at {cap}")]
    SizeLimitExceeded { size: usize, cap: usize },
    #[error("edge ({0}, {1}) is invalid: endpoints must satisfy i < j < size")]
    InvalidEdge(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("labels length {0} does not match vertex count {1}")]
    LabelMismatch(usize, usize),
}

/// Length of a shortest path or cycle; `Infinite` when none exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(v) => write!(f, "{v}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(v) => s.serialize_u64(*v),
            Distance::Infinite => s.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match Option::<u64>::deserialize(d)? {
            Some(v) => Distance::Finite(v),
            None => Distance::Infinite,
        })
    }
}

/// Simple undirected graph: symmetric, irreflexive adjacency bitsets plus
/// optional display labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    size: usize,
    adj: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(size: usize) -> Self {
        Graph {
            size,
            adj: (0..size).map(|_| BitSet::new(size)).collect(),
            labels: None,
        }
    }

    pub fn with_labels(size: usize, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != size {
            return Err(GraphError::LabelMismatch(labels.len(), size));
        }
        let mut g = Graph::new(size);
        g.labels = Some(labels);
        Ok(g)
    }

    pub fn from_edges(
        size: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(size);
        for (i, j) in edges {
            if i >= j || j >= size {
                return Err(GraphError::InvalidEdge(i, j));
            }
            if g.has_edge(i, j) {
                return Err(GraphError::DuplicateEdge(i, j));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for i in 0..a {
            for j in a..a + b {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i.min((i + 1) % n), i.max((i + 1) % n));
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Inserts the undirected edge {a, b}. Panics on self-loops or
    /// out-of-range endpoints; those are construction bugs, not inputs.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self-loop at {a}");
        assert!(a < self.size && b < self.size, "edge ({a},{b}) out of range");
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.size && b < self.size && a != b && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub(crate) fn row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), GraphError> {
        if labels.len() != self.size {
            return Err(GraphError::LabelMismatch(labels.len(), self.size));
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Edges as (i, j) with i < j, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |i| self.adj[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        if v >= self.size {
            return Err(GraphError::VertexOutOfRange(v));
        }
        Ok(self.adj[v].count())
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(k, &a)| {
            vs[k + 1..]
                .iter()
                .all(|&b| a != b && a < self.size && b < self.size && self.has_edge(a, b))
        })
    }

    pub fn is_independent_set(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(k, &a)| {
            vs[k + 1..]
                .iter()
                .all(|&b| a != b && a < self.size && b < self.size && !self.has_edge(a, b))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.size);
        for v in 0..self.size {
            let mut row = self.adj[v].clone();
            row.invert();
            row.remove(v);
            g.adj[v] = row;
        }
        g.labels = self.labels.clone();
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.size, self.edges().collect::<Vec<_>>())
    }
}

fn check_subset(size: usize, subset: &[usize]) -> Result<(), GraphError> {
    for (pos, &v) in subset.iter().enumerate() {
        if v >= size {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if pos > 0 && subset[pos - 1] >= v {
            return Err(GraphError::InvalidSubset(pos));
        }
    }
    Ok(())
}

/// Subgraph induced by `subset` (strictly increasing), vertices reindexed
/// densely in subset order; labels carried over.
pub fn induced_subgraph(g: &Graph, subset: &[usize]) -> Result<Graph, GraphError> {
    check_subset(g.size, subset)?;
    let mut out = Graph::new(subset.len());
    for (i, &a) in subset.iter().enumerate() {
        for (j, &b) in subset.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                out.add_edge(i, j);
            }
        }
    }
    if let Some(labels) = &g.labels {
        out.labels = Some(subset.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Exact invariants
// ---------------------------------------------------------------------------

/// Exact clique number by branch and bound with a greedy-coloring bound.
pub fn clique_number(g: &Graph) -> Result<usize, GraphError> {
    clique_number_capped(g, DEFAULT_EXACT_CAP)
}

pub fn clique_number_capped(g: &Graph, cap: usize) -> Result<usize, GraphError> {
    if g.size > cap {
        return Err(GraphError::SizeLimitExceeded { size: g.size, cap });
    }
    if g.size == 0 {
        return Ok(0);
    }
    let mut cand = BitSet::new(g.size);
    cand.invert();
    let mut best = 0;
    expand_clique(&g.adj, &cand, 0, &mut best);
    Ok(best)
}

fn expand_clique(adj: &[BitSet], cand: &BitSet, depth: usize, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(depth);
        return;
    }
    // Greedy coloring: the color index bounds the clique extension size.
    let mut order = Vec::new();
    let mut uncolored = cand.clone();
    let mut color = 0usize;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(&adj[v]);
            uncolored.remove(v);
            order.push((v, color));
        }
    }
    let mut cand = cand.clone();
    for (v, c) in order.into_iter().rev() {
        if depth + c <= *best {
            return;
        }
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        expand_clique(adj, &next, depth + 1, best);
        cand.remove(v);
    }
}

/// Exact independence number, computed as the clique number of the complement.
pub fn independence_number(g: &Graph) -> Result<usize, GraphError> {
    independence_number_capped(g, DEFAULT_EXACT_CAP)
}

pub fn independence_number_capped(g: &Graph, cap: usize) -> Result<usize, GraphError> {
    clique_number_capped(&g.complement(), cap)
}

fn bfs_distances(g: &Graph, start: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.size];
    dist[start] = Some(0);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for w in g.adj[u].iter() {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> Result<bool, GraphError> {
    if g.size == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(bfs_distances(g, 0).iter().all(|d| d.is_some()))
}

/// Maximum over all vertex pairs of the shortest-path length.
pub fn diameter(g: &Graph) -> Result<Distance, GraphError> {
    if g.size == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let mut max = 0u64;
    for v in 0..g.size {
        for d in bfs_distances(g, v) {
            match d {
                Some(d) => max = max.max(d as u64),
                None => return Ok(Distance::Infinite),
            }
        }
    }
    Ok(Distance::Finite(max))
}

/// Length of a shortest cycle, by BFS from every vertex; `Infinite` for forests.
pub fn girth(g: &Graph) -> Distance {
    let mut best: Option<u64> = None;
    for s in 0..g.size {
        let mut dist = vec![u32::MAX; g.size];
        let mut parent = vec![usize::MAX; g.size];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.adj[u].iter() {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    // Non-tree edge closes a walk through s; every such walk
                    // contains a cycle no longer than it.
                    let len = dist[u] as u64 + dist[w] as u64 + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        if best == Some(3) {
            break;
        }
    }
    match best {
        Some(b) => Distance::Finite(b),
        None => Distance::Infinite,
    }
}

/// Exact domination number by iterative deepening over candidate set sizes.
pub fn domination_number(g: &Graph) -> Result<usize, GraphError> {
    domination_number_capped(g, DEFAULT_EXACT_CAP)
}

pub fn domination_number_capped(g: &Graph, cap: usize) -> Result<usize, GraphError> {
    if g.size == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.size > cap {
        return Err(GraphError::SizeLimitExceeded { size: g.size, cap });
    }
    let closed: Vec<BitSet> = (0..g.size)
        .map(|v| {
            let mut s = g.adj[v].clone();
            s.insert(v);
            s
        })
        .collect();
    let max_cover = closed.iter().map(|c| c.count()).max().unwrap();
    let lower = g.size.div_ceil(max_cover);
    for k in lower..=g.size {
        let covered = BitSet::new(g.size);
        if dominate_search(&closed, &covered, k, g.size, max_cover) {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set always dominates");
}

fn dominate_search(
    closed: &[BitSet],
    covered: &BitSet,
    k: usize,
    n: usize,
    max_cover: usize,
) -> bool {
    let uncovered = n - covered.count();
    if uncovered == 0 {
        return true;
    }
    if k == 0 || uncovered > k * max_cover {
        return false;
    }
    // Branch on the dominators of an uncovered vertex with the fewest options.
    let u = (0..n)
        .filter(|&v| !covered.contains(v))
        .min_by_key(|&v| closed[v].count())
        .unwrap();
    for v in closed[u].iter() {
        let mut next = covered.clone();
        next.union_with(&closed[v]);
        if dominate_search(closed, &next, k - 1, n, max_cover) {
            return true;
        }
    }
    false
}

/// Partition into independent classes that are pairwise fully joined, or
/// `None` when the graph is not complete multipartite. Classes are the
/// connected components of the complement, sorted by smallest member.
pub fn complete_multipartite_parts(g: &Graph) -> Result<Option<Vec<Vec<usize>>>, GraphError> {
    if g.size == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let comp = g.complement();
    let mut seen = BitSet::new(g.size);
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for start in 0..g.size {
        if seen.contains(start) {
            continue;
        }
        let mut members = vec![start];
        seen.insert(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in comp.adj[u].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        // Cross-class adjacency is automatic for complement components; the
        // classes must additionally be independent in g.
        if !g.is_independent_set(&members) {
            return Ok(None);
        }
        parts.push(members);
    }
    Ok(Some(parts))
}

pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = BitSet::new(g.size);
    let mut out = Vec::new();
    for start in 0..g.size {
        if seen.contains(start) {
            continue;
        }
        let mut members = vec![start];
        seen.insert(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in g.adj[u].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct GraphJson {
    size: usize,
    labels: Option<Vec<String>>,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            size: self.size,
            labels: self.labels.clone(),
            edges: self.edges().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let mut g = Graph::from_edges(raw.size, raw.edges).map_err(D::Error::custom)?;
        if let Some(labels) = raw.labels {
            g.set_labels(labels).map_err(D::Error::custom)?;
        }
        Ok(g)
    }
}

impl Graph {
    /// DOT output, deterministic byte-for-byte: vertices ascending, edges
    /// in lexicographic order.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut out = String::from("graph {\n");
        for v in 0..self.size {
            match &self.labels {
                Some(labels) => {
                    let _ = writeln!(out, "  {} [label={:?}];", v, labels[v]);
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric_and_irreflexive() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
        for v in 0..4 {
            assert!(!g.has_edge(v, v));
            for w in 0..4 {
                assert_eq!(g.has_edge(v, w), g.has_edge(w, v));
            }
        }
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]),
            Err(GraphError::InvalidEdge(1, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(2, 1)]),
            Err(GraphError::InvalidEdge(2, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn induced_subgraph_of_complete() {
        let g = Graph::complete(5);
        let h = induced_subgraph(&g, &[0, 2, 4]).unwrap();
        assert_eq!(h, Graph::complete(3));
        assert_eq!(induced_subgraph(&g, &(0..5).collect::<Vec<_>>()).unwrap(), g);
        assert_eq!(
            induced_subgraph(&g, &[2, 1]),
            Err(GraphError::InvalidSubset(1))
        );
        assert_eq!(
            induced_subgraph(&g, &[0, 9]),
            Err(GraphError::VertexOutOfRange(9))
        );
    }

    #[test]
    fn clique_number_basics() {
        assert_eq!(clique_number(&Graph::complete(6)).unwrap(), 6);
        assert_eq!(clique_number(&Graph::new(4)).unwrap(), 1);
        assert_eq!(clique_number(&Graph::new(0)).unwrap(), 0);
        assert_eq!(clique_number(&Graph::cycle(5)).unwrap(), 2);
        let big = Graph::new(65);
        assert!(matches!(
            clique_number(&big),
            Err(GraphError::SizeLimitExceeded { size: 65, cap: 64 })
        ));
    }

    #[test]
    fn independence_number_basics() {
        assert_eq!(independence_number(&Graph::new(7)).unwrap(), 7);
        assert_eq!(independence_number(&Graph::complete(7)).unwrap(), 1);
        assert_eq!(independence_number(&Graph::cycle(5)).unwrap(), 2);
    }

    /// Exhaustive subset scan, the independent route for small graphs.
    fn clique_bruteforce(g: &Graph) -> usize {
        let n = g.size();
        assert!(n <= 20);
        let mut best = 0;
        for mask in 0u32..1 << n {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 != 0).collect();
            if vs.len() > best && g.is_clique(&vs) {
                best = vs.len();
            }
        }
        best
    }

    #[test]
    fn clique_matches_bruteforce_on_structured_graphs() {
        let samples = [
            Graph::complete_bipartite(3, 4),
            Graph::cycle(7),
            Graph::path(6),
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap(),
        ];
        for g in &samples {
            assert_eq!(clique_number(g).unwrap(), clique_bruteforce(g));
            assert_eq!(
                independence_number(g).unwrap(),
                clique_bruteforce(&g.complement())
            );
        }
    }

    #[test]
    fn connectivity_and_diameter() {
        assert!(is_connected(&Graph::complete(1)).unwrap());
        assert!(!is_connected(&Graph::new(2)).unwrap());
        assert_eq!(is_connected(&Graph::new(0)), Err(GraphError::EmptyGraph));
        assert_eq!(diameter(&Graph::complete(4)).unwrap(), Distance::Finite(1));
        assert_eq!(diameter(&Graph::complete(1)).unwrap(), Distance::Finite(0));
        assert_eq!(diameter(&Graph::new(2)).unwrap(), Distance::Infinite);
        assert_eq!(diameter(&Graph::path(5)).unwrap(), Distance::Finite(4));
    }

    #[test]
    fn girth_basics() {
        assert_eq!(girth(&Graph::cycle(6)), Distance::Finite(6));
        assert_eq!(girth(&Graph::complete(4)), Distance::Finite(3));
        assert_eq!(girth(&Graph::path(5)), Distance::Infinite);
        assert_eq!(girth(&Graph::new(0)), Distance::Infinite);
        // Petersen graph, girth 5.
        let mut petersen = Graph::new(10);
        for i in 0..5 {
            petersen.add_edge(i.min((i + 1) % 5), i.max((i + 1) % 5));
            petersen.add_edge(i, i + 5);
            petersen.add_edge(5 + i.min((i + 2) % 5), 5 + i.max((i + 2) % 5));
        }
        assert_eq!(girth(&petersen), Distance::Finite(5));
    }

    #[test]
    fn domination_basics() {
        assert_eq!(domination_number(&Graph::complete(9)).unwrap(), 1);
        assert_eq!(domination_number(&Graph::new(5)).unwrap(), 5);
        assert_eq!(domination_number(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(domination_number(&Graph::path(7)).unwrap(), 3);
        assert_eq!(domination_number(&Graph::new(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn multipartite_parts() {
        let parts = complete_multipartite_parts(&Graph::complete_bipartite(2, 3))
            .unwrap()
            .unwrap();
        assert_eq!(parts, vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(complete_multipartite_parts(&Graph::path(4)).unwrap(), None);
        // Parts are independent and pairwise fully joined.
        for (a, part_a) in parts.iter().enumerate() {
            let g = Graph::complete_bipartite(2, 3);
            assert!(g.is_independent_set(part_a));
            for part_b in parts.iter().skip(a + 1) {
                for &u in part_a {
                    for &v in part_b {
                        assert!(g.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_dot_determinism() {
        let mut g = Graph::from_edges(4, [(0, 1), (0, 3), (1, 2)]).unwrap();
        g.set_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()])
            .unwrap();
        let json = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(g, back);
        assert_eq!(g.to_dot(), g.to_dot());
        assert_eq!(
            g.to_dot(),
            "graph {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  2 [label=\"c\"];\n  3 [label=\"d\"];\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n}\n"
        );
    }
}
