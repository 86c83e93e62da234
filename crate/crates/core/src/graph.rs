//! Simple undirected graphs on at most 64 vertices and 128 edges.
//!
//! Vertex neighborhoods are `u64` bitsets and edge subsets are `u128` bitsets
//! over positions in the sorted edge list. The edge list order is the
//! canonical order that every [`EdgeColoring`](crate::EdgeColoring) indexes.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;
pub const MAX_EDGES: usize = 128;
/// Largest order accepted by [`Graph::canonical_code`].
pub const CANONICAL_MAX_N: usize = 8;
/// Largest terminal set accepted by [`Graph::steiner_tree_min_size`].
pub const STEINER_MAX_TERMINALS: usize = 12;

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

fn all_vertices(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of a graph, stored as a bitset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        VertexSet(all_vertices(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0 as u128)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().join(","))
    }
}

/// A set of edge-list positions of a graph, stored as a bitset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSubset(u128);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn from_bits(bits: u128) -> Self {
        EdgeSubset(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn all(m: usize) -> Self {
        if m >= 128 {
            EdgeSubset(u128::MAX)
        } else {
            EdgeSubset((1u128 << m) - 1)
        }
    }

    pub fn contains(self, e: usize) -> bool {
        e < 128 && self.0 & (1u128 << e) != 0
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u128 << e;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSubset::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

struct BitIter(u128);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Shortest cycle length, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

/// Isomorphism-invariant code of a graph with at most eight vertices.
///
/// Bits follow the upper triangle in column order `(0,1), (0,2), (1,2),
/// (0,3), ...`, with the first pair in the most significant position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: u8,
    bits: u64,
}

impl CanonicalCode {
    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn bit_len(self) -> usize {
        let n = self.n();
        n * n.saturating_sub(1) / 2
    }

    pub fn to_bit_string(self) -> String {
        let len = self.bit_len();
        (0..len)
            .map(|i| {
                if self.bits >> (len - 1 - i) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Graph> {
        Graph::new(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> GraphRepr {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; the stored list is sorted with `u < v` in every pair.
    /// Duplicates are rejected rather than merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::LimitExceeded {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if list.len() > MAX_EDGES {
            return Err(Error::LimitExceeded {
                what: "edge count",
                got: list.len(),
                limit: MAX_EDGES,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &list {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Position of edge `{u, v}` in the edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Vertices reachable from `start`.
    pub fn reachable(&self, start: usize) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier as u128) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.reachable(0) == self.vertices()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Vertices touched by the edges of `sub`.
    pub fn span(&self, sub: EdgeSubset) -> VertexSet {
        sub.iter()
            .fold(VertexSet::EMPTY, |acc, e| {
                let (u, v) = self.edges[e];
                VertexSet(acc.0 | bit(u) | bit(v))
            })
    }

    /// True iff the edges of `sub` form a tree on the vertices they touch.
    /// The empty subset is not a tree.
    pub fn is_tree(&self, sub: EdgeSubset) -> bool {
        if sub.is_empty() {
            return false;
        }
        if self.span(sub).len() != sub.len() + 1 {
            return false;
        }
        // |V| = |E| + 1, so acyclic is equivalent to connected.
        let mut uf = UnionFind::new(self.n);
        sub.iter().all(|e| {
            let (u, v) = self.edges[e];
            uf.union(u, v)
        })
    }

    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x).iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn complement(&self) -> Graph {
        let pairs = (0..self.n)
            .tuple_combinations()
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(self.n, pairs).expect("complement of a valid graph is valid")
    }

    /// Adds one vertex, numbered `n`, adjacent to every existing vertex.
    ///
    /// Panics if the result would exceed [`MAX_VERTICES`] or [`MAX_EDGES`].
    pub fn apex_join(&self) -> Graph {
        let apex = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain((0..self.n).map(|v| (v, apex)));
        Graph::new(self.n + 1, edges).expect("apex join exceeds graph limits")
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling by a permutation keeps the graph valid")
    }

    /// All-pairs shortest path lengths; `usize::MAX` for unreachable pairs.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|s| {
                let mut d = vec![usize::MAX; self.n];
                d[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(x) = queue.pop_front() {
                    for y in self.neighbors(x).iter() {
                        if d[y] == usize::MAX {
                            d[y] = d[x] + 1;
                            queue.push_back(y);
                        }
                    }
                }
                d
            })
            .collect()
    }

    /// Minimum number of edges of a subtree of `self` containing every vertex
    /// of `terminals`. Exact (Dreyfus-Wagner over unit weights).
    pub fn steiner_tree_min_size(&self, terminals: VertexSet) -> Result<usize> {
        self.require_connected()?;
        let dist = self.distances();
        steiner_with_distances(&dist, terminals)
    }

    /// Canonical code by branch-and-bound over all vertex orders.
    pub fn canonical_code(&self) -> Result<CanonicalCode> {
        if self.n > CANONICAL_MAX_N {
            return Err(Error::LimitExceeded {
                what: "order for canonical code",
                got: self.n,
                limit: CANONICAL_MAX_N,
            });
        }
        let mut canon = Canonizer {
            adj: &self.adj,
            n: self.n,
            total_bits: self.n * (self.n - 1) / 2,
            order: Vec::with_capacity(self.n),
            best: u64::MAX,
        };
        canon.place(0, 0, 0);
        let bits = if self.n < 2 { 0 } else { canon.best };
        Ok(CanonicalCode {
            n: self.n as u8,
            bits,
        })
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.n == other.n
            && self.edge_count() == other.edge_count()
            && self.canonical_code()? == other.canonical_code()?)
    }
}

pub(crate) fn steiner_with_distances(dist: &[Vec<usize>], terminals: VertexSet) -> Result<usize> {
    let t = terminals.to_vec();
    if t.len() > STEINER_MAX_TERMINALS {
        return Err(Error::LimitExceeded {
            what: "Steiner terminal count",
            got: t.len(),
            limit: STEINER_MAX_TERMINALS,
        });
    }
    if t.len() <= 1 {
        return Ok(0);
    }
    let n = dist.len();
    let full = (1usize << t.len()) - 1;
    const INF: usize = usize::MAX / 4;
    // dp[mask][v]: fewest edges in a tree spanning the terminals in `mask` and v.
    let mut dp = vec![vec![INF; n]; full + 1];
    for (i, &ti) in t.iter().enumerate() {
        for v in 0..n {
            dp[1 << i][v] = dist[ti][v];
        }
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let low = mask & mask.wrapping_neg();
        for v in 0..n {
            let mut best = INF;
            // Submasks containing the lowest terminal, so each split is seen once.
            let rest = mask ^ low;
            let mut sub = rest;
            loop {
                let a = sub | low;
                if a != mask {
                    best = best.min(dp[a][v] + dp[mask ^ a][v]);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            dp[mask][v] = best;
        }
        let merged: Vec<usize> = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| dist[u][v] != usize::MAX)
                    .map(|u| dp[mask][u] + dist[u][v])
                    .min()
                    .unwrap_or(INF)
            })
            .collect();
        dp[mask] = merged;
    }
    Ok(dp[full].iter().copied().min().unwrap_or(INF))
}

struct Canonizer<'a> {
    adj: &'a [u64],
    n: usize,
    total_bits: usize,
    order: Vec<usize>,
    best: u64,
}

impl Canonizer<'_> {
    /// `prefix` holds the bits for pairs among the first `pos` placed vertices.
    fn place(&mut self, pos: usize, used: u64, prefix: u64) {
        if pos == self.n {
            self.best = self.best.min(prefix);
            return;
        }
        let prefix_len = pos * pos.saturating_sub(1) / 2;
        let next_len = prefix_len + pos;
        for x in 0..self.n {
            if used & bit(x) != 0 {
                continue;
            }
            let mut p = prefix;
            for &y in &self.order {
                p = (p << 1) | ((self.adj[x] >> y) & 1);
            }
            if self.best != u64::MAX && next_len > 0 {
                let best_prefix = self.best >> (self.total_bits - next_len);
                if p > best_prefix {
                    continue;
                }
            }
            self.order.push(x);
            self.place(pos + 1, used | bit(x), p);
            self.order.pop();
        }
    }
}

/// k-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Result<impl Iterator<Item = VertexSet>> {
    if k < 2 || k > n {
        return Err(Error::SubsetSizeOutOfRange { k, n });
    }
    if n > MAX_VERTICES {
        return Err(Error::LimitExceeded {
            what: "vertex count",
            got: n,
            limit: MAX_VERTICES,
        });
    }
    Ok((0..n).combinations(k).map(VertexSet::from_iter))
}

/// Union-find with union by size and an undo log, for backtracking searches.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<u8>,
    size: Vec<u8>,
    log: Vec<(u8, u8)>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u8).collect(),
            size: vec![1; n],
            log: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u8;
        self.size[ra] += self.size[rb];
        self.log.push((rb as u8, ra as u8));
        true
    }

    pub(crate) fn checkpoint(&self) -> usize {
        self.log.len()
    }

    pub(crate) fn rollback(&mut self, to: usize) {
        while self.log.len() > to {
            let (child, root) = self.log.pop().unwrap();
            self.parent[child as usize] = child;
            self.size[root as usize] -= self.size[child as usize];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).tuple_combinations()).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(
            Graph::new(3, [(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, [(2, 2)]), Err(Error::LoopEdge(2)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, []), Err(Error::NoVertices));
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).is_connected());
        assert!(!Graph::new(4, [(0, 1)]).unwrap().is_connected());
        assert!(complete(5).is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn tree_predicate() {
        let p3 = path(3);
        assert!(p3.is_tree(EdgeSubset::all(2)));
        let c4 = cycle(4);
        assert!(!c4.is_tree(EdgeSubset::all(4)));
        assert!(c4.is_tree(EdgeSubset::from_iter([0, 1, 2])));
        assert!(!c4.is_tree(EdgeSubset::EMPTY));
        assert!(c4.is_tree(EdgeSubset::from_iter([3])));
        // two disjoint edges of C4
        let (a, b) = (c4.edge_index(0, 1).unwrap(), c4.edge_index(2, 3).unwrap());
        assert!(!c4.is_tree(EdgeSubset::from_iter([a, b])));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(7).girth(), Girth::Finite(7));
        assert_eq!(path(6).girth(), Girth::Infinite);
        let w4 = cycle(4).apex_join();
        assert_eq!(w4.girth(), Girth::Finite(3));
        assert_eq!(w4.edge_count(), 8);
        assert_eq!(cycle(4).girth(), Girth::Finite(4));
    }

    #[test]
    fn complement_examples() {
        let c5 = cycle(5);
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!(cc.is_isomorphic(&c5).unwrap());
        assert_eq!(cc.complement(), c5);
        // C6 plus an isolated vertex
        let g = Graph::new(7, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(g.complement().edge_count(), 21 - 6);
    }

    #[test]
    fn apex_join_examples() {
        let k33 = Graph::new(6, (0..3).cartesian_product(3..6)).unwrap();
        assert_eq!(k33.apex_join().edge_count(), 15);
        let k2 = Graph::empty(1).unwrap().apex_join();
        assert_eq!(k2.edges(), &[(0, 1)]);
    }

    /// Brute force: smallest edge subset that is a tree covering `s`.
    fn steiner_brute(g: &Graph, s: VertexSet) -> usize {
        let m = g.edge_count();
        (1u128..1 << m)
            .map(EdgeSubset::from_bits)
            .filter(|&sub| g.is_tree(sub) && s.is_subset(g.span(sub)))
            .map(|sub| sub.len())
            .min()
            .unwrap()
    }

    #[test]
    fn steiner_examples() {
        let k4 = complete(4);
        for s in k_subsets(4, 3).unwrap() {
            assert_eq!(k4.steiner_tree_min_size(s).unwrap(), 2);
        }
        let p5 = path(5);
        let s = VertexSet::from_iter([0, 2, 4]);
        assert_eq!(p5.steiner_tree_min_size(s).unwrap(), 4);
        let c6 = cycle(6);
        let s = VertexSet::from_iter([0, 2, 4]);
        assert_eq!(steiner_brute(&c6, s), 4);
        assert_eq!(c6.steiner_tree_min_size(s).unwrap(), 4);
        assert_eq!(
            Graph::new(3, [(0, 1)])
                .unwrap()
                .steiner_tree_min_size(VertexSet::from_iter([0, 1])),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn steiner_of_all_vertices_is_spanning_tree() {
        for g in [cycle(6), complete(5), path(7), cycle(5).apex_join()] {
            let n = g.n();
            assert_eq!(g.steiner_tree_min_size(g.vertices()).unwrap(), n - 1);
        }
    }

    #[test]
    fn k_subset_counts() {
        assert_eq!(k_subsets(4, 3).unwrap().count(), 4);
        assert_eq!(k_subsets(5, 2).unwrap().count(), 10);
        let all: Vec<_> = k_subsets(6, 3).unwrap().collect();
        assert_eq!(all.len(), 20);
        assert_eq!(all[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(all[1].to_vec(), vec![0, 1, 3]);
        assert_eq!(all[19].to_vec(), vec![3, 4, 5]);
        assert!(k_subsets(3, 4).is_err());
        assert!(k_subsets(3, 1).is_err());
    }

    #[test]
    fn canonical_code_examples() {
        let a = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, [(0, 2), (1, 2)]).unwrap();
        let c = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        let code = a.canonical_code().unwrap();
        assert_eq!(code, b.canonical_code().unwrap());
        assert_eq!(code, c.canonical_code().unwrap());
        assert_ne!(
            cycle(4).canonical_code().unwrap(),
            path(4).canonical_code().unwrap()
        );
        assert_eq!(complete(5).canonical_code().unwrap().to_bit_string(), "1".repeat(10));
        assert!(Graph::empty(9).unwrap().canonical_code().is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
            proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
                let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&p, _)| p);
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn canonical_code_is_relabeling_invariant(
            g in arb_graph(7),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            prop_assert_eq!(g.canonical_code().unwrap(), g.relabel(&perm).canonical_code().unwrap());
        }

        #[test]
        fn complement_is_an_involution(g in arb_graph(8)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn connected_graphs_have_enough_edges(g in arb_graph(7)) {
            if g.is_connected() {
                prop_assert!(g.edge_count() + 1 >= g.n());
                if g.edge_count() + 1 == g.n() {
                    prop_assert!(g.is_tree(EdgeSubset::all(g.edge_count())));
                }
            }
        }

        #[test]
        fn steiner_matches_brute_force(g in arb_graph(6), pick in any::<u64>()) {
            prop_assume!(g.is_connected() && g.edge_count() <= 12);
            let s = VertexSet::from_bits(pick & VertexSet::full(g.n()).bits());
            prop_assume!(s.len() >= 2);
            let dp = g.steiner_tree_min_size(s).unwrap();
            prop_assert!(dp + 1 >= s.len());
            prop_assert_eq!(dp, steiner_brute(&g, s));
        }

        #[test]
        fn girth_matches_cycle_search(g in arb_graph(6)) {
            // Oracle: smallest edge subset in which every touched vertex has degree 2
            // and that is connected (a cycle).
            let m = g.edge_count();
            let mut best = None;
            for bits in 1u128..(1u128 << m) {
                let sub = EdgeSubset::from_bits(bits);
                let span = g.span(sub);
                if span.len() != sub.len() || sub.len() < 3 {
                    continue;
                }
                let mut deg = vec![0; g.n()];
                for e in sub.iter() {
                    let (u, v) = g.edge(e);
                    deg[u] += 1;
                    deg[v] += 1;
                }
                if span.iter().all(|v| deg[v] == 2) {
                    let sub_graph = Graph::new(g.n(), sub.iter().map(|e| g.edge(e))).unwrap();
                    let start = span.iter().next().unwrap();
                    if sub_graph.reachable(start) == span {
                        best = Some(best.map_or(sub.len(), |b: usize| b.min(sub.len())));
                    }
                }
            }
            let expected = best.map_or(Girth::Infinite, Girth::Finite);
            prop_assert_eq!(g.girth(), expected);
        }
    }

    #[test]
    fn union_find_rollback() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 1));
        let cp = uf.checkpoint();
        assert!(uf.union(2, 3));
        assert!(uf.union(1, 3));
        assert!(!uf.union(0, 2));
        uf.rollback(cp);
        assert_eq!(uf.find(0), uf.find(1));
        assert_ne!(uf.find(2), uf.find(3));
        assert_ne!(uf.find(0), uf.find(2));
    }

    #[test]
    fn json_shape() {
        let g = cycle(4);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        let bad = serde_json::from_str::<Graph>(r#"{"n":3,"edges":[[0,1],[0,1]]}"#);
        assert!(bad.is_err());
    }
}
