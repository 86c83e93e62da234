//! Graph families with their explicit edge colorings.
//!
//! Families are written with 1-based names (`v_1`, `v_{i,j}`, `X_1`); each
//! generator documents how those names map onto vertex indices, and the
//! mapping travels with the construction as `vertex_labels`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::verify_k_rainbow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Complete { n: usize },
    CompleteBipartite { r: usize, s: usize },
    BalancedBipartite { r: usize },
    ApexBipartite { n: usize },
    CocycleApex { n: usize },
    Wheel { spokes: usize },
    WheelPendant { n: usize },
    LayeredBundle { n: usize, l: usize },
    Rose { p: usize, q: usize },
    RoseTail { n: usize, l: usize },
    K2Bipartite { n: usize },
}

impl ConstructionSpec {
    pub fn family(&self) -> &'static str {
        use ConstructionSpec::*;
        match self {
            Path { .. } => "path",
            Cycle { .. } => "cycle",
            Star { .. } => "star",
            Complete { .. } => "complete",
            CompleteBipartite { .. } => "complete-bipartite",
            BalancedBipartite { .. } => "balanced-bipartite",
            ApexBipartite { .. } => "apex-bipartite",
            CocycleApex { .. } => "cocycle-apex",
            Wheel { .. } => "wheel",
            WheelPendant { .. } => "wheel-pendant",
            LayeredBundle { .. } => "layered-bundle",
            Rose { .. } => "rose",
            RoseTail { .. } => "rose-tail",
            K2Bipartite { .. } => "k2-bipartite",
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        use ConstructionSpec::*;
        match *self {
            Path { n } | Cycle { n } | Star { n } | Complete { n } => n,
            CompleteBipartite { r, s } => r + s,
            BalancedBipartite { r } => 2 * r,
            Wheel { spokes } => spokes + 1,
            Rose { p, q } => 1 + p * (q - 1),
            ApexBipartite { n }
            | CocycleApex { n }
            | WheelPendant { n }
            | LayeredBundle { n, .. }
            | RoseTail { n, .. }
            | K2Bipartite { n } => n,
        }
    }
}

/// A graph, a coloring of it, and the k-rainbow claim the coloring carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredConstruction {
    pub spec: ConstructionSpec,
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub claimed_k: usize,
    pub claimed_colors: u32,
    pub vertex_labels: Vec<String>,
}

impl ColoredConstruction {
    /// Runs the k-rainbow verifier on the claimed `k`.
    pub fn verifies(&self) -> Result<bool> {
        Ok(verify_k_rainbow(&self.graph, &self.coloring, self.claimed_k)?.ok)
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn color_of(&self, a: &str, b: &str) -> Option<u32> {
        let find = |name: &str| self.vertex_labels.iter().position(|l| l == name);
        let e = self.graph.edge_index(find(a)?, find(b)?)?;
        Some(self.coloring.color(e))
    }
}

struct Labels<'a>(&'a [String]);

impl Serialize for Labels<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (i, l) in self.0.iter().enumerate() {
            map.serialize_entry(&i.to_string(), l)?;
        }
        map.end()
    }
}

impl Serialize for ColoredConstruction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(6))?;
        map.serialize_entry("spec", &self.spec)?;
        map.serialize_entry("graph", &self.graph)?;
        map.serialize_entry("colors", self.coloring.colors())?;
        map.serialize_entry("palette", &self.claimed_colors)?;
        map.serialize_entry("claimed_k", &self.claimed_k)?;
        map.serialize_entry("labels", &Labels(&self.vertex_labels))?;
        map.end()
    }
}

#[derive(Deserialize)]
struct ConstructionRepr {
    spec: ConstructionSpec,
    graph: Graph,
    colors: Vec<u32>,
    palette: u32,
    claimed_k: usize,
    labels: BTreeMap<String, String>,
}

impl<'de> Deserialize<'de> for ColoredConstruction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ConstructionRepr::deserialize(d)?;
        let coloring = EdgeColoring::new(r.colors, r.palette).map_err(D::Error::custom)?;
        coloring.check_against(&r.graph).map_err(D::Error::custom)?;
        let mut labels: Vec<String> = (0..r.graph.n()).map(|v| v.to_string()).collect();
        for (k, v) in r.labels {
            let idx: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("labels: key {k:?} is not a vertex index")))?;
            let slot = labels
                .get_mut(idx)
                .ok_or_else(|| D::Error::custom(format!("labels: vertex {idx} out of range")))?;
            *slot = v;
        }
        Ok(ColoredConstruction {
            spec: r.spec,
            graph: r.graph,
            coloring,
            claimed_k: r.claimed_k,
            claimed_colors: r.palette,
            vertex_labels: labels,
        })
    }
}

/// Accumulates labeled vertices and colored edges, then sorts them into a
/// graph whose edge-list order the coloring follows.
struct Builder {
    labels: Vec<String>,
    edges: Vec<((usize, usize), u32)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize, color: u32) {
        self.edges.push(((u.min(v), u.max(v)), color));
    }

    fn finish(mut self, spec: ConstructionSpec, k: usize, palette: u32) -> Result<ColoredConstruction> {
        self.edges.sort_unstable();
        let n = self.labels.len();
        let graph = Graph::new(n, self.edges.iter().map(|&(p, _)| p))?;
        let coloring = EdgeColoring::new(self.edges.iter().map(|&(_, c)| c).collect(), palette)?;
        Ok(ColoredConstruction {
            spec,
            graph,
            coloring,
            claimed_k: k,
            claimed_colors: palette,
            vertex_labels: self.labels,
        })
    }
}

fn out_of_range(family: &'static str, reason: impl Into<String>) -> Error {
    Error::ParameterOutOfRange {
        family,
        reason: reason.into(),
    }
}

fn cycle_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (i, (i + 1) % n))
}

/// Uncolored graph of one of the basic families.
pub fn build_basic(spec: ConstructionSpec) -> Result<Graph> {
    use ConstructionSpec::*;
    let family = spec.family();
    match spec {
        Path { n } => {
            if n == 0 {
                return Err(out_of_range(family, "n must be at least 1"));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Cycle { n } => {
            if n < 3 {
                return Err(out_of_range(family, "n must be at least 3"));
            }
            Graph::new(n, cycle_edges(n))
        }
        Star { n } => {
            if n == 0 {
                return Err(out_of_range(family, "n must be at least 1"));
            }
            Graph::new(n, (1..n).map(|v| (0, v)))
        }
        Complete { n } => {
            if n == 0 {
                return Err(out_of_range(family, "n must be at least 1"));
            }
            Graph::new(n, (0..n).tuple_combinations())
        }
        CompleteBipartite { r, s } => {
            if r == 0 || s == 0 {
                return Err(out_of_range(family, "both parts must be nonempty"));
            }
            Graph::new(r + s, (0..r).cartesian_product(r..r + s))
        }
        Wheel { spokes } => {
            if spokes < 3 {
                return Err(out_of_range(family, "a wheel needs at least 3 spokes"));
            }
            Ok(Graph::new(spokes, cycle_edges(spokes))?.apex_join())
        }
        Rose { p, q } => {
            if p == 0 || q < 3 {
                return Err(out_of_range(family, "need p >= 1 petals of length q >= 3"));
            }
            let mut edges = Vec::new();
            for i in 0..p {
                let base = 1 + i * (q - 1);
                let petal: Vec<usize> = std::iter::once(0).chain(base..base + q - 1).collect();
                edges.extend(petal.iter().copied().circular_tuple_windows::<(usize, usize)>());
            }
            Graph::new(1 + p * (q - 1), edges)
        }
        _ => Err(out_of_range(family, "not a basic family")),
    }
}

/// K_{r,r} on `u_i = i-1`, `w_j = r+j-1`, colored 1 when i = j, 2 when
/// i < j and 3 when i > j.
pub fn colored_balanced_bipartite(r: usize) -> Result<ColoredConstruction> {
    let spec = ConstructionSpec::BalancedBipartite { r };
    if r < 3 {
        return Err(out_of_range(spec.family(), format!("r = {r} must be at least 3")));
    }
    let mut b = Builder::new();
    let u: Vec<usize> = (1..=r).map(|i| b.vertex(format!("u_{i}"))).collect();
    let w: Vec<usize> = (1..=r).map(|j| b.vertex(format!("w_{j}"))).collect();
    for i in 0..r {
        for j in 0..r {
            b.edge(u[i], w[j], cross_color(i, j));
        }
    }
    b.finish(spec, 3, 3)
}

fn cross_color(i: usize, j: usize) -> u32 {
    match i.cmp(&j) {
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Less => 2,
        std::cmp::Ordering::Greater => 3,
    }
}

/// K_{h,h} joined to an apex `v`, with h = (n-1)/2. Cross edges are colored
/// as in [`colored_balanced_bipartite`]; apex edges get 2 toward U and 3
/// toward W. Indices: `u_i = i-1`, `w_j = h+j-1`, `v = n-1`.
pub fn colored_apex_bipartite(n: usize) -> Result<ColoredConstruction> {
    let spec = ConstructionSpec::ApexBipartite { n };
    if n < 7 || n % 2 == 0 {
        return Err(out_of_range(spec.family(), format!("n = {n} must be odd and at least 7")));
    }
    let h = (n - 1) / 2;
    let mut b = Builder::new();
    let u: Vec<usize> = (1..=h).map(|i| b.vertex(format!("u_{i}"))).collect();
    let w: Vec<usize> = (1..=h).map(|j| b.vertex(format!("w_{j}"))).collect();
    let v = b.vertex("v");
    for i in 0..h {
        for j in 0..h {
            b.edge(u[i], w[j], cross_color(i, j));
        }
        b.edge(v, u[i], 2);
        b.edge(v, w[i], 3);
    }
    b.finish(spec, 3, 3)
}

/// The complement of C_{n-1} plus an isolated vertex `w`, with 4 colors.
///
/// `v_i = i-1` for 1 <= i <= n-1 and `w = n-1`; `v_i` and `v_j` are adjacent
/// unless they are consecutive on the cycle v_1 v_2 ... v_{n-1} v_1. The
/// class `X_p` holds the `v_i` with i = p (mod 3), `X_3` taking i = 0.
/// Edges from `w` into `X_p` get color p, edges inside `X_1`, `X_2`, `X_3`
/// get 2, 3, 1, and edges between classes get 4.
pub fn colored_cocycle_apex(n: usize) -> Result<ColoredConstruction> {
    let spec = ConstructionSpec::CocycleApex { n };
    if n < 7 {
        return Err(out_of_range(spec.family(), format!("n = {n} must be at least 7")));
    }
    let m = n - 1;
    let mut b = Builder::new();
    let v: Vec<usize> = (1..=m).map(|i| b.vertex(format!("v_{i}"))).collect();
    let w = b.vertex("w");
    let class = |i: usize| ((i - 1) % 3 + 1) as u32;
    for i in 1..=m {
        b.edge(w, v[i - 1], class(i));
        for j in i + 1..=m {
            let on_cycle = j == i + 1 || (i == 1 && j == m);
            if on_cycle {
                continue;
            }
            let color = if class(i) == class(j) {
                class(i) % 3 + 1
            } else {
                4
            };
            b.edge(v[i - 1], v[j - 1], color);
        }
    }
    b.finish(spec, 3, 4)
}

/// Wheel W_{n-2} with a pendant vertex `u` at the hub; the pendant edge takes
/// a fresh color above the wheel palette. `wheel_coloring` must index the
/// edge list of `build_basic(Wheel { spokes: n - 2 })` and is verified here.
pub fn colored_wheel_pendant(n: usize, wheel_coloring: &EdgeColoring) -> Result<ColoredConstruction> {
    let spec = ConstructionSpec::WheelPendant { n };
    if n < 5 {
        return Err(out_of_range(spec.family(), format!("n = {n} must be at least 5")));
    }
    let spokes = n - 2;
    let wheel = build_basic(ConstructionSpec::Wheel { spokes })?;
    let report = verify_k_rainbow(&wheel, wheel_coloring, 3)?;
    if let Some(bad) = report.first_failure {
        return Err(Error::InvalidWheelColoring(bad.to_vec()));
    }
    let fresh = wheel_coloring.palette_size() + 1;
    let mut b = Builder::new();
    for i in 1..=spokes {
        b.vertex(format!("x_{i}"));
    }
    let hub = b.vertex("v");
    let u = b.vertex("u");
    for (e, &(x, y)) in wheel.edges().iter().enumerate() {
        b.edge(x, y, wheel_coloring.color(e));
    }
    b.edge(hub, u, fresh);
    b.finish(spec, 3, fresh)
}

/// Shape parameters of the layered path bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BundleShape {
    /// Internal vertices on a full path, l - 3.
    pub levels: usize,
    /// Number of paths, ceil((n-2)/(l-3)).
    pub paths: usize,
    /// floor((n-2)/(l-3)).
    pub full_paths: usize,
    /// Internal vertices of the last path when it is short, 0 otherwise.
    pub short_len: usize,
}

impl BundleShape {
    pub fn new(n: usize, l: usize) -> Self {
        let levels = l - 3;
        let full_paths = (n - 2) / levels;
        let paths = (n - 2).div_ceil(levels);
        BundleShape {
            levels,
            paths,
            full_paths,
            short_len: n - 2 - full_paths * levels,
        }
    }

    pub fn is_ragged(&self) -> bool {
        self.paths != self.full_paths
    }

    fn path_len(&self, i: usize) -> usize {
        if self.is_ragged() && i == self.paths {
            self.short_len
        } else {
            self.levels
        }
    }
}

/// Paths `Q_i = u v_{i,1} ... v_{i,l-3} w` with the last one shortened to
/// `s` internal vertices when (l-3) does not divide (n-2), plus the edge
/// `uw` and a clique on each level `{v_{i,j}}` over the paths that reach
/// depth j.
///
/// Colors: `u v_{i,1}` is 1, the path edge entering level j is j, the edge
/// into `w` is l-2, `uw` is l-1 and every level-clique edge is l.
/// Indices: `u = 0`, then `v_{1,1}, v_{1,2}, ...` path by path, `w = n-1`.
///
/// Accepts 7 <= l <= n/2.
pub fn colored_layered_bundle(n: usize, l: usize) -> Result<ColoredConstruction> {
    let spec = ConstructionSpec::LayeredBundle { n, l };
    if l < 7 || 2 * l > n {
        return Err(out_of_range(
            spec.family(),
            format!("need 7 <= l <= n/2, got n = {n}, l = {l}"),
        ));
    }
    let shape = BundleShape::new(n, l);
    let lc = l as u32;
    let mut b = Builder::new();
    let u = b.vertex("u");
    let mut level: Vec<Vec<usize>> = vec![Vec::new(); shape.levels + 1];
    let mut last = Vec::new();
    for i in 1..=shape.paths {
        let mut prev = u;
        for j in 1..=shape.path_len(i) {
            let x = b.vertex(format!("v_{{{i},{j}}}"));
            b.edge(prev, x, j as u32);
            level[j].push(x);
            prev = x;
        }
        last.push(prev);
    }
    let w = b.vertex("w");
    for x in last {
        b.edge(x, w, lc - 2);
    }
    b.edge(u, w, lc - 1);
    for members in &level {
        for (&a, &c) in members.iter().tuple_combinations() {
            b.edge(a, c, lc);
        }
    }
    b.finish(spec, 3, lc)
}

/// The (n-l, 3)-rose with a path of order 2l-n hung from its center.
///
/// Indices: `w_0 = 0`, `v_i = 2i-1`, `u_i = 2i` for petals 1..=n-l, then the
/// tail `w_1, w_2, ...`. Spokes `w_0 v_i` and `w_0 u_i` get color i, the
/// chord `u_i v_i` gets l, and the tail edge `w_{i-1} w_i` gets n-l+i.
pub fn colored_rose_tail(n: usize, l: usize) -> Result<ColoredConstruction> {
    let spec = ConstructionSpec::RoseTail { n, l };
    if 2 * l < n + 1 || l + 3 > n {
        return Err(out_of_range(
            spec.family(),
            format!("need ceil((n+1)/2) <= l <= n-3, got n = {n}, l = {l}"),
        ));
    }
    let petals = n - l;
    let lc = l as u32;
    let mut b = Builder::new();
    let center = b.vertex("w_0");
    for i in 1..=petals {
        let v = b.vertex(format!("v_{i}"));
        let u = b.vertex(format!("u_{i}"));
        b.edge(center, v, i as u32);
        b.edge(center, u, i as u32);
        b.edge(u, v, lc);
    }
    let mut prev = center;
    for i in 1..(2 * l - n) {
        let x = b.vertex(format!("w_{i}"));
        b.edge(prev, x, (n - l + i) as u32);
        prev = x;
    }
    b.finish(spec, 3, lc)
}

/// K_{2,n-2} on `u = 0`, `w = 1`, `v_i = i+1`, with `u v_i` colored i and
/// `w v_i` colored n-1-i; claimed to be (n-1)-rainbow with n-2 colors.
pub fn colored_k2_bipartite(n: usize) -> Result<ColoredConstruction> {
    let spec = ConstructionSpec::K2Bipartite { n };
    if n < 4 {
        return Err(out_of_range(spec.family(), format!("n = {n} must be at least 4")));
    }
    let mut b = Builder::new();
    let u = b.vertex("u");
    let w = b.vertex("w");
    for i in 1..=n - 2 {
        let v = b.vertex(format!("v_{i}"));
        b.edge(u, v, i as u32);
        b.edge(w, v, (n - 1 - i) as u32);
    }
    b.finish(spec, n - 1, (n - 2) as u32)
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// The closed-form edge count each bounded family is stated to have, taken
/// literally from the formula even where it disagrees with the generator.
pub fn claimed_edge_count(spec: ConstructionSpec) -> Result<i64> {
    use ConstructionSpec::*;
    Ok(match spec {
        BalancedBipartite { r } => {
            let n = 2 * r as i64;
            n * n / 4
        }
        ApexBipartite { n } => {
            let n = n as i64;
            (n + 3) * (n - 1) / 4
        }
        CocycleApex { n } => {
            let n = n as i64;
            binom2(n) - n + 1
        }
        Wheel { spokes } => 2 * (spokes as i64 + 1) - 2,
        WheelPendant { n } => 2 * n as i64 - 3,
        LayeredBundle { n, l } => {
            let (n, l) = (n as i64, l as i64);
            let levels = l - 3;
            let floor = (n - 2) / levels;
            let t = (n - 2 + levels - 1) / levels;
            n + t
                + binom2(t) * (n - 2 - floor * levels)
                + binom2(t + floor - t) * (l + 1 - n + floor * levels)
        }
        RoseTail { n, l } => 2 * n as i64 - l as i64 - 1,
        K2Bipartite { n } => 2 * n as i64 - 4,
        other => return Err(Error::NoFormula(other.family())),
    })
}

/// Tree on `0..seq.len()+2` encoded by a Prüfer sequence.
pub fn prufer_tree(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges)
}

/// Uniform random labeled tree of order `n >= 2`, reproducible from `seed`.
pub fn seeded_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(out_of_range("tree", "n must be at least 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(&seq)
}

const DOT_PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#9a6324", "#800000", "#469990", "#000075",
];

/// Graphviz text with each edge labeled by its color.
pub fn to_dot(c: &ColoredConstruction) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", c.spec.family()).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (v, label) in c.vertex_labels.iter().enumerate() {
        writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
    }
    for (e, &(u, v)) in c.graph.edges().iter().enumerate() {
        let color = c.coloring.color(e);
        let shade = DOT_PALETTE[(color as usize - 1) % DOT_PALETTE.len()];
        writeln!(out, "  {u} -- {v} [label=\"{color}\", color=\"{shade}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_family_sizes() {
        let w5 = build_basic(ConstructionSpec::Wheel { spokes: 5 }).unwrap();
        assert_eq!((w5.n(), w5.edge_count()), (6, 10));
        let rose = build_basic(ConstructionSpec::Rose { p: 4, q: 3 }).unwrap();
        assert_eq!((rose.n(), rose.edge_count()), (9, 12));
        assert_eq!(rose.degree(0), 8);
        let k24 = build_basic(ConstructionSpec::CompleteBipartite { r: 2, s: 4 }).unwrap();
        assert_eq!(k24.edge_count(), 8);
        assert!(build_basic(ConstructionSpec::Cycle { n: 2 }).is_err());
        assert!(build_basic(ConstructionSpec::Wheel { spokes: 2 }).is_err());
        assert!(build_basic(ConstructionSpec::Rose { p: 2, q: 2 }).is_err());
        assert!(build_basic(ConstructionSpec::ApexBipartite { n: 7 }).is_err());
    }

    #[test]
    fn rose_petals_share_only_the_center() {
        let rose = build_basic(ConstructionSpec::Rose { p: 3, q: 5 }).unwrap();
        assert_eq!(rose.n(), 13);
        assert_eq!(rose.edge_count(), 15);
        assert!((1..13).all(|v| rose.degree(v) == 2));
    }

    #[test]
    fn balanced_bipartite_colors() {
        let c = colored_balanced_bipartite(3).unwrap();
        assert_eq!(c.graph.edge_count(), 9);
        assert_eq!(c.color_of("u_1", "w_1"), Some(1));
        assert_eq!(c.color_of("u_1", "w_3"), Some(2));
        assert_eq!(c.color_of("u_3", "w_1"), Some(3));
        let c5 = colored_balanced_bipartite(5).unwrap();
        assert_eq!(c5.graph.edge_count(), 25);
        assert_eq!(c5.coloring.colors().iter().filter(|&&x| x == 1).count(), 5);
        assert!(colored_balanced_bipartite(2).is_err());
    }

    #[test]
    fn apex_bipartite_shape() {
        let h = colored_apex_bipartite(7).unwrap();
        assert_eq!(h.graph.edge_count(), 15);
        assert_eq!(h.color_of("v", "u_2"), Some(2));
        assert_eq!(h.color_of("v", "w_3"), Some(3));
        assert_eq!(h.label(6), "v");
        assert!(colored_apex_bipartite(8).is_err());
        assert!(colored_apex_bipartite(5).is_err());
    }

    #[test]
    fn cocycle_apex_shape() {
        let g = colored_cocycle_apex(7).unwrap();
        assert_eq!(g.graph.edge_count(), 15);
        let cycle_plus_point = Graph::new(7, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(g.graph.complement().edge_count(), 6);
        assert!(g.graph.complement().is_isomorphic(&cycle_plus_point).unwrap());
        let g10 = colored_cocycle_apex(10).unwrap();
        assert_eq!(g10.color_of("w", "v_4"), Some(1));
        assert_eq!(g10.color_of("w", "v_5"), Some(2));
        assert_eq!(g10.color_of("w", "v_6"), Some(3));
        // v_1 and v_9 are both in X_1 but consecutive on the complement cycle
        assert_eq!(g10.color_of("v_1", "v_9"), None);
        assert_eq!(g10.color_of("v_1", "v_7"), Some(2));
        assert_eq!(g10.color_of("v_3", "v_6"), Some(1));
        assert_eq!(g10.color_of("v_2", "v_5"), Some(3));
        assert_eq!(g10.color_of("v_1", "v_3"), Some(4));
        assert!(colored_cocycle_apex(6).is_err());
    }

    #[test]
    fn layered_bundle_counts() {
        let s = BundleShape::new(16, 7);
        assert_eq!((s.paths, s.full_paths, s.short_len), (4, 3, 2));
        let g = colored_layered_bundle(16, 7).unwrap();
        assert_eq!(g.graph.n(), 16);
        assert_eq!(g.graph.edge_count(), 37);
        assert_eq!(claimed_edge_count(g.spec).unwrap(), 44);
        let d = colored_layered_bundle(14, 7).unwrap();
        assert!(!BundleShape::new(14, 7).is_ragged());
        assert_eq!(d.graph.edge_count(), 28);
        assert_eq!(claimed_edge_count(d.spec).unwrap(), 35);
        assert_eq!(g.color_of("u", "w"), Some(6));
        assert_eq!(g.color_of("v_{4,2}", "w"), Some(5));
        assert_eq!(g.color_of("v_{1,4}", "w"), Some(5));
        assert_eq!(g.color_of("v_{4,1}", "v_{4,2}"), Some(2));
        assert_eq!(g.color_of("v_{1,3}", "v_{3,3}"), Some(7));
        assert_eq!(g.color_of("v_{1,3}", "v_{4,3}"), None);
        assert!(colored_layered_bundle(13, 7).is_err());
        assert!(colored_layered_bundle(20, 6).is_err());
    }

    /// Independent count of the bundle's edges from its shape alone.
    #[test]
    fn layered_bundle_matches_shape_count() {
        for (n, l) in [(15, 7), (16, 7), (17, 7), (19, 8), (18, 7), (30, 9)] {
            let s = BundleShape::new(n, l);
            let lens: Vec<usize> = (1..=s.paths).map(|i| s.path_len(i)).collect();
            let path_edges: usize = lens.iter().map(|len| len + 1).sum();
            let clique_edges: usize = (1..=s.levels)
                .map(|j| {
                    let k = lens.iter().filter(|&&len| len >= j).count();
                    k * (k - 1) / 2
                })
                .sum();
            let g = colored_layered_bundle(n, l).unwrap();
            assert_eq!(g.graph.n(), n);
            assert_eq!(g.graph.edge_count(), path_edges + 1 + clique_edges, "n={n} l={l}");
            assert!(g.graph.edge_count() as i64 <= claimed_edge_count(g.spec).unwrap());
        }
    }

    #[test]
    fn rose_tail_shape() {
        let g = colored_rose_tail(10, 6).unwrap();
        assert_eq!(g.graph.n(), 10);
        assert_eq!(g.graph.edge_count(), 13);
        assert_eq!(g.color_of("u_3", "v_3"), Some(6));
        assert_eq!(g.color_of("w_0", "u_4"), Some(4));
        assert_eq!(g.color_of("w_0", "w_1"), Some(5));
        assert!(colored_rose_tail(10, 5).is_err());
        assert!(colored_rose_tail(10, 8).is_err());
    }

    #[test]
    fn k2_bipartite_colors() {
        let g = colored_k2_bipartite(6).unwrap();
        assert_eq!(g.graph.edge_count(), 8);
        let u: Vec<u32> = (1..=4).map(|i| g.color_of("u", &format!("v_{i}")).unwrap()).collect();
        let w: Vec<u32> = (1..=4).map(|i| g.color_of("w", &format!("v_{i}")).unwrap()).collect();
        assert_eq!(u, vec![1, 2, 3, 4]);
        assert_eq!(w, vec![4, 3, 2, 1]);
        assert_eq!((g.claimed_k, g.claimed_colors), (5, 4));
        for n in 4..10 {
            assert_eq!(colored_k2_bipartite(n).unwrap().color_of("u", "v_1"), Some(1));
        }
    }

    #[test]
    fn wheel_pendant_rejects_bad_coloring() {
        let wheel = build_basic(ConstructionSpec::Wheel { spokes: 5 }).unwrap();
        let mono = EdgeColoring::new(vec![1; wheel.edge_count()], 1).unwrap();
        assert!(matches!(
            colored_wheel_pendant(7, &mono),
            Err(Error::InvalidWheelColoring(_))
        ));
    }

    #[test]
    fn formulas() {
        use ConstructionSpec::*;
        assert_eq!(claimed_edge_count(ApexBipartite { n: 7 }).unwrap(), 15);
        assert_eq!(claimed_edge_count(RoseTail { n: 10, l: 6 }).unwrap(), 13);
        assert_eq!(claimed_edge_count(CocycleApex { n: 7 }).unwrap(), 15);
        assert_eq!(claimed_edge_count(K2Bipartite { n: 6 }).unwrap(), 8);
        assert_eq!(claimed_edge_count(Wheel { spokes: 5 }).unwrap(), 10);
        assert_eq!(claimed_edge_count(Cycle { n: 5 }), Err(Error::NoFormula("cycle")));
    }

    #[test]
    fn prufer_decoding() {
        // classic example: sequence [3,3,3,4] on 6 vertices
        let t = prufer_tree(&[3, 3, 3, 4]).unwrap();
        assert_eq!(t.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        for seed in 0..20 {
            let t = seeded_tree(7, seed).unwrap();
            assert_eq!(t.edge_count(), 6);
            assert!(t.is_connected());
        }
        assert_eq!(seeded_tree(6, 9).unwrap(), seeded_tree(6, 9).unwrap());
    }

    #[test]
    fn json_round_trip_and_shape() {
        let g = colored_rose_tail(10, 6).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert!(text.starts_with(r#"{"spec":{"family":"rose-tail","params":{"n":10,"l":6}},"graph":{"n":10"#));
        assert!(text.contains(r#""labels":{"0":"w_0","1":"v_1""#));
        let back: ColoredConstruction = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        let k2 = serde_json::to_value(ConstructionSpec::K2Bipartite { n: 5 }).unwrap();
        assert_eq!(k2["family"], "k2-bipartite");
    }

    #[test]
    fn dot_export() {
        let g = colored_k2_bipartite(4).unwrap();
        let dot = to_dot(&g);
        assert!(dot.starts_with("graph \"k2-bipartite\" {"));
        assert!(dot.contains("0 [label=\"u\"];"));
        assert!(dot.contains("0 -- 2 [label=\"1\", color=\"#e6194b\"];"));
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
