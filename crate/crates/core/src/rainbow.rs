//! Rainbow S-trees, k-rainbow verification and exact k-rainbow indices.
//!
//! The tree search treats color `0` as "not yet fixed": such an edge acts as
//! a color of its own. Fully colored inputs never contain `0`; the partition
//! search in [`rx_at_most`] relies on it to test partial colorings, since any
//! rainbow tree found with unfixed edges is a superset of what any completion
//! can offer, and a subset with no tree even then has none in any completion.

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{k_subsets, steiner_with_distances, EdgeSubset, Graph, UnionFind, VertexSet};

/// Upper bound on search nodes before [`rx_at_most_with`] gives up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 200_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub ok: bool,
    /// Subsets examined; on failure this counts up to and including the failing one.
    pub checked_subsets: u64,
    pub first_failure: Option<VertexSet>,
    pub witness_trees: Option<Vec<(VertexSet, EdgeSubset)>>,
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let len = if self.witness_trees.is_some() { 4 } else { 3 };
        let mut map = s.serialize_map(Some(len))?;
        map.serialize_entry("ok", &self.ok)?;
        map.serialize_entry("checked", &self.checked_subsets)?;
        map.serialize_entry("first_failure", &self.first_failure.map(VertexSet::to_vec))?;
        if let Some(trees) = &self.witness_trees {
            let rows: Vec<_> = trees
                .iter()
                .map(|(set, tree)| WitnessRow {
                    subset: set.to_vec(),
                    edges: tree.to_vec(),
                })
                .collect();
            map.serialize_entry("witnesses", &rows)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct WitnessRow {
    subset: Vec<usize>,
    edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RxResult {
    pub value: u32,
    pub witness_coloring: EdgeColoring,
    pub lower_bound_used: u32,
}

impl Serialize for RxResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("value", &self.value)?;
        map.serialize_entry("colors", self.witness_coloring.colors())?;
        map.serialize_entry("lower_bound", &self.lower_bound_used)?;
        map.end()
    }
}

/// Tree search over one graph; buffers are reused across calls.
pub(crate) struct TreeSearcher<'g> {
    g: &'g Graph,
    dist: Vec<Vec<usize>>,
    classes: Vec<Vec<u8>>,
    uf: UnionFind,
    chosen: Vec<u8>,
    terminals: Vec<usize>,
    cap: usize,
    scratch: Vec<u8>,
}

impl<'g> TreeSearcher<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        TreeSearcher {
            g,
            dist: g.distances(),
            classes: Vec::new(),
            uf: UnionFind::new(g.n()),
            chosen: Vec::new(),
            terminals: Vec::new(),
            cap: 0,
            scratch: vec![0; g.n()],
        }
    }

    /// A rainbow tree with at most `cap` edges containing `terminals`, if any.
    pub(crate) fn find(
        &mut self,
        colors: &[u32],
        terminals: VertexSet,
        cap: usize,
    ) -> Option<EdgeSubset> {
        debug_assert!(terminals.len() >= 2);
        let g = self.g;
        let n = g.n();
        let cap = cap.min(n - 1);
        if terminals.len() > cap + 1 {
            return None;
        }
        self.terminals.clear();
        self.terminals.extend(terminals.iter());

        // Vertices that can sit in a small enough tree: within `cap` of every
        // terminal, and only terminals when the tree must be exactly `terminals`.
        let allowed: VertexSet = if terminals.len() == cap + 1 {
            terminals
        } else {
            (0..n)
                .filter(|&v| self.terminals.iter().all(|&t| self.dist[t][v] <= cap))
                .collect()
        };

        let mut keyed: Vec<(u32, u8)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| allowed.contains(u) && allowed.contains(v))
            .map(|(e, _)| (colors[e], e as u8))
            .collect();
        keyed.sort_unstable();
        self.classes.clear();
        let mut prev: Option<u32> = None;
        for (c, e) in keyed {
            if c != 0 && prev == Some(c) {
                self.classes.last_mut().unwrap().push(e);
            } else {
                self.classes.push(vec![e]);
            }
            prev = Some(c);
        }

        self.cap = cap;
        self.chosen.clear();
        let active: Vec<u8> = (0..self.classes.len() as u8).collect();
        if self.dfs(active) {
            Some(self.extract_tree(terminals))
        } else {
            None
        }
    }

    fn dfs(&mut self, active: Vec<u8>) -> bool {
        let root0 = self.uf.find(self.terminals[0]);
        let mut roots: u64 = 1 << root0;
        for &t in &self.terminals[1..] {
            roots |= 1 << self.uf.find(t);
        }
        let need = roots.count_ones() as usize - 1;
        if need == 0 {
            return true;
        }
        if self.chosen.len() + need > self.cap || active.len() < need {
            return false;
        }
        if !self.can_connect(&active) {
            return false;
        }

        // Drop classes that cannot join two components; branch on the class
        // with the fewest joining edges.
        let mut next_active = Vec::with_capacity(active.len());
        let mut pick: Option<(usize, usize)> = None;
        for &c in &active {
            let useful = self.classes[c as usize]
                .iter()
                .filter(|&&e| {
                    let (u, v) = self.g.edge(e as usize);
                    self.uf.find(u) != self.uf.find(v)
                })
                .count();
            if useful == 0 {
                continue;
            }
            if pick.is_none_or(|(_, best)| useful < best) {
                pick = Some((next_active.len(), useful));
            }
            next_active.push(c);
        }
        let Some((pos, _)) = pick else {
            return false;
        };
        let class = next_active.remove(pos) as usize;

        for i in 0..self.classes[class].len() {
            let e = self.classes[class][i];
            let (u, v) = self.g.edge(e as usize);
            let cp = self.uf.checkpoint();
            if !self.uf.union(u, v) {
                continue;
            }
            self.chosen.push(e);
            if self.dfs(next_active.clone()) {
                return true;
            }
            self.chosen.pop();
            self.uf.rollback(cp);
        }
        self.dfs(next_active)
    }

    /// Whether the chosen forest plus every edge of `active` joins all terminals.
    fn can_connect(&mut self, active: &[u8]) -> bool {
        let n = self.g.n();
        for v in 0..n {
            self.scratch[v] = self.uf.find(v) as u8;
        }
        fn root(p: &mut [u8], mut x: usize) -> usize {
            while p[x] as usize != x {
                let gp = p[p[x] as usize];
                p[x] = gp;
                x = gp as usize;
            }
            x
        }
        for &c in active {
            for &e in &self.classes[c as usize] {
                let (u, v) = self.g.edge(e as usize);
                let (ru, rv) = (root(&mut self.scratch, u), root(&mut self.scratch, v));
                if ru != rv {
                    self.scratch[ru] = rv as u8;
                }
            }
        }
        let r0 = root(&mut self.scratch, self.terminals[0]);
        for i in 1..self.terminals.len() {
            let t = self.terminals[i];
            if root(&mut self.scratch, t) != r0 {
                return false;
            }
        }
        true
    }

    /// The chosen component holding the terminals, with non-terminal leaves trimmed.
    fn extract_tree(&mut self, terminals: VertexSet) -> EdgeSubset {
        let r = self.uf.find(self.terminals[0]);
        let mut tree: EdgeSubset = self
            .chosen
            .iter()
            .map(|&e| e as usize)
            .filter(|&e| self.uf.find(self.g.edge(e).0) == r)
            .collect();
        loop {
            let mut deg = vec![0u8; self.g.n()];
            for e in tree.iter() {
                let (u, v) = self.g.edge(e);
                deg[u] += 1;
                deg[v] += 1;
            }
            let leaf_edge = tree.iter().find(|&e| {
                let (u, v) = self.g.edge(e);
                (deg[u] == 1 && !terminals.contains(u)) || (deg[v] == 1 && !terminals.contains(v))
            });
            match leaf_edge {
                Some(e) => tree = EdgeSubset::from_bits(tree.bits() & !(1u128 << e)),
                None => break,
            }
        }
        // leave the union-find clean for the next call
        self.uf.rollback(0);
        self.chosen.clear();
        tree
    }
}

fn check_subset_size(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || k > g.n() {
        return Err(Error::SubsetSizeOutOfRange { k, n: g.n() });
    }
    Ok(())
}

/// True iff `sub` is a tree containing `s` whose edges carry distinct colors.
pub fn is_rainbow_tree(g: &Graph, coloring: &EdgeColoring, sub: EdgeSubset, s: VertexSet) -> bool {
    if !g.is_tree(sub) || !s.is_subset(g.span(sub)) {
        return false;
    }
    let mut seen: Vec<u32> = sub.iter().map(|e| coloring.color(e)).collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// Exact search for a rainbow tree containing `s`.
pub fn exists_rainbow_s_tree(
    g: &Graph,
    coloring: &EdgeColoring,
    s: VertexSet,
) -> Result<Option<EdgeSubset>> {
    coloring.check_against(g)?;
    if s.len() < 2 {
        return Err(Error::SubsetSizeOutOfRange {
            k: s.len(),
            n: g.n(),
        });
    }
    let cap = (g.n() - 1).min(coloring.palette_size() as usize);
    Ok(TreeSearcher::new(g).find(coloring.colors(), s, cap))
}

/// Checks every k-subset in lexicographic order, in parallel; the reported
/// failure is always the lexicographically least failing subset.
pub fn verify_k_rainbow(g: &Graph, coloring: &EdgeColoring, k: usize) -> Result<VerificationReport> {
    verify_inner(g, coloring, k, false)
}

/// As [`verify_k_rainbow`], also recording one witness tree per subset.
pub fn verify_k_rainbow_with_witnesses(
    g: &Graph,
    coloring: &EdgeColoring,
    k: usize,
) -> Result<VerificationReport> {
    verify_inner(g, coloring, k, true)
}

fn verify_inner(
    g: &Graph,
    coloring: &EdgeColoring,
    k: usize,
    witnesses: bool,
) -> Result<VerificationReport> {
    coloring.check_against(g)?;
    check_subset_size(g, k)?;
    g.require_connected()?;
    let cap = (g.n() - 1).min(coloring.palette_size() as usize);
    let subsets: Vec<VertexSet> = k_subsets(g.n(), k)?.collect();
    let colors = coloring.colors();

    if witnesses {
        let found: Vec<Option<EdgeSubset>> = subsets
            .par_iter()
            .map_init(|| TreeSearcher::new(g), |ts, &s| ts.find(colors, s, cap))
            .collect();
        let fail = found.iter().position(Option::is_none);
        let trees = subsets
            .iter()
            .zip(&found)
            .take(fail.unwrap_or(subsets.len()))
            .map(|(&s, t)| (s, t.unwrap()))
            .collect();
        return Ok(report(&subsets, fail, Some(trees)));
    }

    let fail = subsets
        .par_iter()
        .map_init(|| TreeSearcher::new(g), |ts, &s| ts.find(colors, s, cap).is_none())
        .position_first(|failed| failed);
    Ok(report(&subsets, fail, None))
}

fn report(
    subsets: &[VertexSet],
    fail: Option<usize>,
    trees: Option<Vec<(VertexSet, EdgeSubset)>>,
) -> VerificationReport {
    VerificationReport {
        ok: fail.is_none(),
        checked_subsets: fail.map_or(subsets.len(), |i| i + 1) as u64,
        first_failure: fail.map(|i| subsets[i]),
        witness_trees: trees,
    }
}

/// Largest minimum Steiner tree size over all k-subsets; a lower bound on rx_k.
pub fn steiner_k_diameter(g: &Graph, k: usize) -> Result<usize> {
    check_subset_size(g, k)?;
    g.require_connected()?;
    let dist = g.distances();
    let mut best = 0;
    for s in k_subsets(g.n(), k)? {
        best = best.max(steiner_with_distances(&dist, s)?);
    }
    Ok(best)
}

/// A spanning tree in distinct colors `1..n-1`; remaining edges take color 1.
pub fn spanning_tree_coloring(g: &Graph) -> Result<EdgeColoring> {
    g.require_connected()?;
    let mut colors = vec![1u32; g.edge_count()];
    let mut uf = UnionFind::new(g.n());
    let mut next = 1;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if uf.union(u, v) {
            colors[e] = next;
            next += 1;
        }
    }
    EdgeColoring::new(colors, (g.n() as u32 - 1).max(1))
}

/// Decides whether some coloring with at most `l` colors is k-rainbow.
pub fn rx_at_most(g: &Graph, k: usize, l: usize) -> Result<Option<EdgeColoring>> {
    rx_at_most_with(g, k, l, SearchLimits::default())
}

/// Colorings are enumerated as set partitions of the edges (restricted growth
/// strings over a breadth-first edge order), pruned as soon as some subset has
/// no rainbow tree even with the still-uncolored edges treated as distinct.
pub fn rx_at_most_with(
    g: &Graph,
    k: usize,
    l: usize,
    limits: SearchLimits,
) -> Result<Option<EdgeColoring>> {
    check_subset_size(g, k)?;
    g.require_connected()?;
    if l == 0 {
        return Ok(None);
    }
    if l >= g.n() - 1 {
        return spanning_tree_coloring(g).map(Some);
    }
    if l + 1 < k || steiner_k_diameter(g, k)? > l {
        return Ok(None);
    }
    PartitionSearch::new(g, k, l, limits)?.run()
}

struct PartitionSearch<'g> {
    palette: u32,
    cap: usize,
    order: Vec<usize>,
    colors: Vec<u32>,
    subsets: Vec<VertexSet>,
    witnesses: Vec<EdgeSubset>,
    check_order: Vec<usize>,
    searcher: TreeSearcher<'g>,
    nodes: u64,
    limits: SearchLimits,
}

impl<'g> PartitionSearch<'g> {
    fn new(g: &'g Graph, k: usize, l: usize, limits: SearchLimits) -> Result<Self> {
        let subsets: Vec<VertexSet> = k_subsets(g.n(), k)?.collect();
        let cap = l.min(g.n() - 1);
        let colors = vec![0u32; g.edge_count()];
        let mut searcher = TreeSearcher::new(g);
        // Steiner diameter <= cap, so every subset has an all-uncolored tree.
        let witnesses = subsets
            .iter()
            .map(|&s| searcher.find(&colors, s, cap).expect("Steiner bound admits a tree"))
            .collect();
        Ok(PartitionSearch {
            palette: l as u32,
            cap,
            order: bfs_edge_order(g),
            colors,
            check_order: (0..subsets.len()).collect(),
            subsets,
            witnesses,
            searcher,
            nodes: 0,
            limits,
        })
    }

    fn run(mut self) -> Result<Option<EdgeColoring>> {
        if self.assign(0, 0)? {
            let used = self.colors.iter().copied().max().unwrap_or(1);
            EdgeColoring::new(self.colors, used.max(1)).map(Some)
        } else {
            Ok(None)
        }
    }

    fn assign(&mut self, pos: usize, used: u32) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        let e = self.order[pos];
        let top = (used + 1).min(self.palette);
        for c in 1..=top {
            self.nodes += 1;
            if self.nodes > self.limits.max_nodes {
                return Err(Error::ResourceCap(self.limits.max_nodes));
            }
            self.colors[e] = c;
            if self.consistent(e) && self.assign(pos + 1, used.max(c))? {
                return Ok(true);
            }
        }
        self.colors[e] = 0;
        Ok(false)
    }

    /// Re-checks the subsets whose cached tree used the just-colored edge `e`.
    fn consistent(&mut self, e: usize) -> bool {
        let c = self.colors[e];
        for idx in 0..self.check_order.len() {
            let i = self.check_order[idx];
            let w = self.witnesses[i];
            if !w.contains(e) || w.iter().all(|f| f == e || self.colors[f] != c) {
                continue;
            }
            match self.searcher.find(&self.colors, self.subsets[i], self.cap) {
                Some(tree) => self.witnesses[i] = tree,
                None => {
                    // failing subsets tend to fail again; test them first
                    self.check_order[..=idx].rotate_right(1);
                    return false;
                }
            }
        }
        true
    }
}

/// Edges ordered by breadth-first discovery from a maximum-degree vertex, so
/// that local neighborhoods get fully colored early.
fn bfs_edge_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut rank = vec![usize::MAX; n];
    rank[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut next = 1;
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x).iter() {
            if rank[y] == usize::MAX {
                rank[y] = next;
                next += 1;
                queue.push_back(y);
            }
        }
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        let (a, b) = (rank[u].min(rank[v]), rank[u].max(rank[v]));
        (b, a)
    });
    order
}

/// Exact k-rainbow index: the least palette admitting a k-rainbow coloring.
pub fn rx_exact(g: &Graph, k: usize) -> Result<RxResult> {
    rx_exact_with(g, k, SearchLimits::default())
}

pub fn rx_exact_with(g: &Graph, k: usize, limits: SearchLimits) -> Result<RxResult> {
    check_subset_size(g, k)?;
    g.require_connected()?;
    let lower = steiner_k_diameter(g, k)?.max(1);
    for l in lower..=g.n() - 1 {
        if let Some(c) = rx_at_most_with(g, k, l, limits)? {
            let witness = EdgeColoring::new(c.colors().to_vec(), l as u32)?;
            return Ok(RxResult {
                value: l as u32,
                witness_coloring: witness,
                lower_bound_used: lower as u32,
            });
        }
    }
    unreachable!("a rainbow spanning tree always gives a coloring with n - 1 colors")
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).tuple_combinations()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn col(c: &[u32]) -> EdgeColoring {
        EdgeColoring::from_colors(c.to_vec()).unwrap()
    }

    #[test]
    fn rainbow_tree_predicate() {
        let p3 = path(3);
        let all = EdgeSubset::all(2);
        let s = p3.vertices();
        assert!(is_rainbow_tree(&p3, &col(&[1, 2]), all, s));
        assert!(!is_rainbow_tree(&p3, &col(&[1, 1]), all, s));
        // C4 edges in list order: (0,1),(0,3),(1,2),(2,3)
        let c4 = cycle(4);
        let c = col(&[1, 2, 1, 2]);
        let sub = EdgeSubset::from_iter([0, 1]);
        assert!(is_rainbow_tree(&c4, &c, sub, c4.span(sub)));
    }

    #[test]
    fn rainbow_s_tree_examples() {
        // alternating around the cycle: (0,1)=1, (1,2)=2, (2,3)=1, (0,3)=2
        let c4 = cycle(4);
        let c = col(&[1, 2, 2, 1]);
        for s in k_subsets(4, 3).unwrap() {
            let t = exists_rainbow_s_tree(&c4, &c, s).unwrap().unwrap();
            assert!(is_rainbow_tree(&c4, &c, t, s));
            assert_eq!(t.len(), 2);
        }
        let k3 = complete(3);
        let mono = col(&[1, 1, 1]);
        assert_eq!(exists_rainbow_s_tree(&k3, &mono, k3.vertices()).unwrap(), None);
    }

    #[test]
    fn monochromatic_cycle_fails_first_subset() {
        let c6 = cycle(6);
        let r = verify_k_rainbow(&c6, &col(&[1; 6]), 3).unwrap();
        assert!(!r.ok);
        assert_eq!(r.first_failure.unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(r.checked_subsets, 1);
    }

    #[test]
    fn verify_reports_lexicographically_least_failure() {
        // P4 with colors 1,2,1: {0,1,2} spans edges 1,2 -> ok; {0,1,3} needs all three.
        let p4 = path(4);
        let r = verify_k_rainbow(&p4, &col(&[1, 2, 1]), 3).unwrap();
        assert_eq!(r.first_failure.unwrap().to_vec(), vec![0, 1, 3]);
        assert_eq!(r.checked_subsets, 2);
    }

    #[test]
    fn witnesses_are_recorded_on_demand() {
        let c4 = cycle(4);
        let c = col(&[1, 2, 2, 1]);
        let r = verify_k_rainbow_with_witnesses(&c4, &c, 3).unwrap();
        assert!(r.ok);
        let trees = r.witness_trees.unwrap();
        assert_eq!(trees.len(), 4);
        for (s, t) in trees {
            assert!(is_rainbow_tree(&c4, &c, t, s));
        }
        assert!(verify_k_rainbow(&c4, &c, 3).unwrap().witness_trees.is_none());
    }

    #[test]
    fn verify_preconditions() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            verify_k_rainbow(&g, &col(&[1, 2]), 3),
            Err(Error::Disconnected)
        );
        assert!(verify_k_rainbow(&cycle(4), &col(&[1, 2, 1, 2]), 5).is_err());
        assert!(verify_k_rainbow(&cycle(4), &col(&[1, 2]), 3).is_err());
    }

    #[test]
    fn decision_examples() {
        assert!(rx_at_most(&cycle(4), 3, 2).unwrap().is_some());
        assert!(rx_at_most(&cycle(4), 3, 1).unwrap().is_none());
        let k5 = complete(5);
        let c = rx_at_most(&k5, 3, 2).unwrap().unwrap();
        assert!(verify_k_rainbow(&k5, &c, 3).unwrap().ok);
    }

    #[test]
    fn exact_examples() {
        let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(rx_exact(&star, 3).unwrap().value, 4);
        assert_eq!(rx_exact(&path(5), 3).unwrap().value, 4);
        let c6 = rx_exact(&cycle(6), 3).unwrap();
        assert_eq!(c6.value, 4);
        assert!(c6.lower_bound_used <= c6.value);
        // triangle 0-1-2 with pendants at 0 and 1
        let tri = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        assert_eq!(rx_exact(&tri, 3).unwrap().value, 4);
        // C4 plus a pendant
        let sq = Graph::new(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]).unwrap();
        assert_eq!(rx_exact(&sq, 3).unwrap().value, 3);
    }

    #[test]
    fn steiner_diameter_examples() {
        assert_eq!(steiner_k_diameter(&complete(5), 3).unwrap(), 2);
        assert_eq!(steiner_k_diameter(&path(5), 3).unwrap(), 4);
        assert_eq!(steiner_k_diameter(&cycle(6), 3).unwrap(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let limits = SearchLimits { max_nodes: 3 };
        assert_eq!(
            rx_at_most_with(&cycle(7), 3, 4, limits),
            Err(Error::ResourceCap(3))
        );
    }

    #[test]
    fn json_shapes() {
        let c4 = cycle(4);
        let r = verify_k_rainbow(&c4, &col(&[1; 4]), 3).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"ok":false,"checked":1,"first_failure":[0,1,2]}"#
        );
        let rx = rx_exact(&c4, 3).unwrap();
        let v: serde_json::Value = serde_json::to_value(&rx).unwrap();
        assert_eq!(v["value"], 2);
        assert_eq!(v["lower_bound"], 2);
        assert_eq!(v["colors"].as_array().unwrap().len(), 4);
    }
}
