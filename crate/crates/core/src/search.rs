//! Exhaustive search for the minimum size of a connected graph of order n
//! admitting a k-rainbow coloring with at most l colors.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use itertools::Itertools;
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::{rx_at_most, verify_k_rainbow};

/// Largest order handled by [`enumerate_connected`] and [`t_min`].
pub const SEARCH_MAX_N: usize = 7;
/// Largest order handled by [`check_monotone_chain`].
pub const CHAIN_MAX_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    /// Minimum size, or `None` when no connected graph of order n qualifies.
    pub value: Option<usize>,
    pub witness: Option<(Graph, EdgeColoring)>,
    pub graphs_examined: u64,
    /// The whole range n-1..=C(n,2) was covered without a witness.
    pub exhaustive: bool,
    /// `(m, isomorphism classes of connected graphs with m edges)` per level scanned.
    pub level_counts: Vec<(usize, usize)>,
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Witness<'a> {
            graph: &'a Graph,
            colors: &'a [u32],
        }
        #[derive(Serialize)]
        struct Level {
            m: usize,
            classes: usize,
        }
        let mut map = s.serialize_map(Some(8))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("k", &self.k)?;
        map.serialize_entry("l", &self.l)?;
        map.serialize_entry("value", &self.value)?;
        map.serialize_entry(
            "witness",
            &self.witness.as_ref().map(|(g, c)| Witness {
                graph: g,
                colors: c.colors(),
            }),
        )?;
        map.serialize_entry("examined", &self.graphs_examined)?;
        map.serialize_entry("exhaustive", &self.exhaustive)?;
        let levels: Vec<Level> = self
            .level_counts
            .iter()
            .map(|&(m, classes)| Level { m, classes })
            .collect();
        map.serialize_entry("levels", &levels)?;
        map.end()
    }
}

/// One representative per isomorphism class of graphs (connected or not),
/// bucketed by edge count and sorted by canonical code.
struct Catalog {
    levels: Vec<Vec<Graph>>,
}

impl Catalog {
    /// Level m is grown from level m-1 by adding each missing edge and keeping
    /// one graph per canonical code; every graph with m edges arises this way.
    fn build(n: usize) -> Catalog {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let mut levels = vec![vec![Graph::empty(n).expect("n >= 1")]];
        for _ in 0..pairs.len() {
            let mut next = BTreeMap::new();
            for g in levels.last().unwrap() {
                for &(u, v) in &pairs {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let child = Graph::new(n, g.edges().iter().copied().chain([(u, v)]))
                        .expect("adding a missing edge keeps the graph simple");
                    let code = child.canonical_code().expect("order within canonical limit");
                    next.entry(code).or_insert(child);
                }
            }
            levels.push(next.into_values().collect());
        }
        Catalog { levels }
    }
}

fn catalog(n: usize) -> &'static Catalog {
    static CATALOGS: [OnceLock<Catalog>; SEARCH_MAX_N + 1] = [const { OnceLock::new() }; SEARCH_MAX_N + 1];
    CATALOGS[n].get_or_init(|| Catalog::build(n))
}

fn search_range(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > SEARCH_MAX_N {
        return Err(Error::LimitExceeded {
            what: "order for exhaustive search",
            got: n,
            limit: SEARCH_MAX_N,
        });
    }
    Ok(())
}

/// One representative per isomorphism class of connected graphs with `n`
/// vertices and `m` edges, in canonical-code order.
pub fn enumerate_connected(n: usize, m: usize) -> Result<Vec<Graph>> {
    search_range(n)?;
    let max_m = n * (n - 1) / 2;
    if m + 1 < n || m > max_m {
        return Err(Error::ParameterOutOfRange {
            family: "enumerate_connected",
            reason: format!("m = {m} outside {}..={max_m} for n = {n}", n - 1),
        });
    }
    Ok(catalog(n).levels[m]
        .iter()
        .filter(|g| g.is_connected())
        .cloned()
        .collect())
}

/// Scans edge counts upward from n-1 and stops at the first level holding a
/// graph with a k-rainbow coloring of at most `l` colors. Each level is
/// finished before the result is decided, and the witness is re-verified.
pub fn t_min(n: usize, k: usize, l: usize) -> Result<SearchResult> {
    search_range(n)?;
    if k < 2 || k > n {
        return Err(Error::SubsetSizeOutOfRange { k, n });
    }
    if l == 0 || l + 1 > n {
        return Err(Error::ParameterOutOfRange {
            family: "t_min",
            reason: format!("l = {l} outside 1..={}", n.saturating_sub(1)),
        });
    }
    let mut examined = 0u64;
    let mut level_counts = Vec::new();
    for m in n - 1..=n * (n - 1) / 2 {
        let reps = enumerate_connected(n, m)?;
        level_counts.push((m, reps.len()));
        examined += reps.len() as u64;
        let outcomes = reps
            .par_iter()
            .map(|g| rx_at_most(g, k, l))
            .collect::<Result<Vec<_>>>()?;
        let hit = reps.iter().zip(outcomes).find_map(|(g, c)| c.map(|c| (g.clone(), c)));
        if let Some((g, c)) = hit {
            let recheck = verify_k_rainbow(&g, &c, k)?;
            assert!(
                recheck.ok,
                "search produced a coloring that fails verification at {:?}",
                recheck.first_failure
            );
            return Ok(SearchResult {
                n,
                k,
                l,
                value: Some(m),
                witness: Some((g, c)),
                graphs_examined: examined,
                exhaustive: false,
                level_counts,
            });
        }
    }
    Ok(SearchResult {
        n,
        k,
        l,
        value: None,
        witness: None,
        graphs_examined: examined,
        exhaustive: true,
        level_counts,
    })
}

/// `t_min(n, k, l)` for l = 2..=n-1. Errors if the values ever increase,
/// counting nonexistence as larger than any size.
pub fn check_monotone_chain(n: usize, k: usize) -> Result<Vec<(usize, Option<usize>)>> {
    if n > CHAIN_MAX_N {
        return Err(Error::LimitExceeded {
            what: "order for the monotone chain",
            got: n,
            limit: CHAIN_MAX_N,
        });
    }
    let mut chain = Vec::new();
    for l in 2..n {
        chain.push((l, t_min(n, k, l)?.value));
    }
    let rank = |v: Option<usize>| v.unwrap_or(usize::MAX);
    if let Some(w) = chain.windows(2).find(|w| rank(w[1].1) > rank(w[0].1)) {
        return Err(Error::NotMonotone { l: w[1].0 });
    }
    Ok(chain)
}
