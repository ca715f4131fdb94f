//! Simple undirected graphs over dense vertex ids `0..n`, with the family
//! generators, metric computations, and graph operations the searches build on.
//!
//! Vertex sets are `u64` bitsets, which caps graphs at 64 vertices. Every
//! search in this crate is exponential in `n`, so the cap is never the
//! binding constraint.

mod graph6;
pub mod corpus;
pub mod metrics;

pub use graph6::{decode_graph6, encode_graph6};
pub use metrics::MetricTable;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Maximum number of vertices a [`Graph`] can hold (bitset width).
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a specific graph, stored as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        let mut s = 0u64;
        for v in vs {
            s |= 1u64 << v;
        }
        VertexSet(s)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterate the members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Serde helper: vertex sets serialize as sorted vertex lists.
pub fn serialize_vertex_set<S: serde::Serializer>(
    set: &VertexSet,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    set.to_vec().serialize(ser)
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over all `k`-subsets of `{0..n}` in ascending numeric (colex)
/// order of the bitset value, via Gosper's hack.
pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> KSubsets {
        assert!(n <= MAX_VERTICES && k <= n);
        if k == 0 {
            return KSubsets {
                next: Some(0),
                limit: 0,
            };
        }
        let first = (1u64 << k) - 1;
        let limit = first << (n - k);
        KSubsets {
            next: Some(first),
            limit,
        }
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur >= self.limit || cur == 0 {
            None
        } else {
            // Gosper's hack: next higher integer with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(VertexSet(cur))
    }
}

/// Layout tag carried by graphs built with [`Graph::cartesian_product`]:
/// vertex `(x, y)` of `G □ H` is index `x * h_n + y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductLayout {
    pub left_n: usize,
    pub right_n: usize,
}

/// Which factor of a Cartesian product to project onto.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Left,
    Right,
}

/// An immutable simple undirected graph on vertices `{0..n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    product: Option<ProductLayout>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The graph families understood by [`generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    CompleteMultipartite,
    Hypercube,
    RandomTree,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        Some(match name {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "star" => Family::Star,
            "complete_bipartite" => Family::CompleteBipartite,
            "complete_multipartite" => Family::CompleteMultipartite,
            "hypercube" => Family::Hypercube,
            "random_tree" => Family::RandomTree,
            _ => return None,
        })
    }
}

impl Graph {
    /// Build a graph from an explicit edge list. Rejects self-loops and
    /// out-of-range endpoints; duplicate edges collapse silently.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph {
            n,
            adj,
            product: None,
        })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_edges(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood N(v) as a bitset.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u64 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut bits = self.adj[u] >> (u + 1).min(63) << (u + 1).min(63);
            if u == 63 {
                bits = 0;
            }
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn product_layout(&self) -> Option<ProductLayout> {
        self.product
    }

    /// Union of neighborhoods of `set`, restricted to nothing.
    pub fn neighborhood_of_set(&self, set: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in set.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        loop {
            let grown = seen | self.neighborhood_of_set(VertexSet(seen)).0;
            if grown == seen {
                break;
            }
            seen = grown;
        }
        seen == self.full_set().0
    }

    /// Connected components of the induced subgraph on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.0;
        let mut comps = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let grown =
                    (comp | self.neighborhood_of_set(VertexSet(comp)).0) & within.0;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            comps.push(VertexSet(comp));
            remaining &= !comp;
        }
        comps
    }

    /// The complement graph. Any product layout is dropped.
    pub fn complement(&self) -> Graph {
        let full = self.full_set().0;
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph {
            n: self.n,
            adj,
            product: None,
        }
    }

    /// Subdivide edge `e = {u, v}`: the new degree-2 vertex gets index `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        let mut edges = self.edges();
        edges.retain(|&(a, b)| (a, b) != (u.min(v), u.max(v)));
        edges.push((u, self.n));
        edges.push((v, self.n));
        Graph::from_edges(self.n + 1, &edges)
    }

    /// Delete edge `e = {u, v}`, keeping the vertex set.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        g.product = None;
        Ok(g)
    }

    /// Cartesian product `G □ H`. Vertex `(x, y)` maps to index `x * h.n + y`;
    /// the result carries a [`ProductLayout`] so sets can be projected back.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let n = self
            .n
            .checked_mul(other.n)
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or_else(|| {
                Error::SizeLimit(format!(
                    "product would have {} * {} vertices",
                    self.n, other.n
                ))
            })?;
        let mut edges = Vec::new();
        for x in 0..self.n {
            for (a, b) in other.edges() {
                edges.push((x * other.n + a, x * other.n + b));
            }
        }
        for y in 0..other.n {
            for (a, b) in self.edges() {
                edges.push((a * other.n + y, b * other.n + y));
            }
        }
        let mut g = Graph::from_edges(n, &edges)?;
        g.product = Some(ProductLayout {
            left_n: self.n,
            right_n: other.n,
        });
        Ok(g)
    }

    /// Project a vertex set of a product graph onto one factor.
    pub fn project_to_factor(&self, set: VertexSet, which: Factor) -> Result<VertexSet> {
        let layout = self.product.ok_or(Error::NotProduct)?;
        let mut out = VertexSet::EMPTY;
        for v in set.iter() {
            let (x, y) = (v / layout.right_n, v % layout.right_n);
            out.insert(match which {
                Factor::Left => x,
                Factor::Right => y,
            });
        }
        Ok(out)
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(self.n, &edges).expect("permutation preserves validity")
    }

    /// Exact maximum independent set size by branch and bound.
    pub fn independence_number(&self) -> Result<usize> {
        const LIMIT: usize = 32;
        if self.n > LIMIT {
            return Err(Error::SizeLimit(format!(
                "independence number search limited to n <= {LIMIT}, got {}",
                self.n
            )));
        }
        fn mis(g: &Graph, candidates: u64, best_so_far: usize, current: usize) -> usize {
            if candidates == 0 {
                return current;
            }
            if current + candidates.count_ones() as usize <= best_so_far {
                return best_so_far;
            }
            // Branch on the candidate of maximum degree within the candidate set.
            let v = VertexSet(candidates)
                .iter()
                .max_by_key(|&v| (g.adj[v] & candidates).count_ones())
                .unwrap();
            let mut best = best_so_far;
            let take = mis(
                g,
                candidates & !g.adj[v] & !(1u64 << v),
                best,
                current + 1,
            );
            best = best.max(take);
            let skip = mis(g, candidates & !(1u64 << v), best, current);
            best.max(skip)
        }
        Ok(mis(self, self.full_set().0, 0, 0))
    }
}

/// Generate a standard labeled family graph.
///
/// Labelings: paths and cycles in traversal order; `star [m]` builds
/// `K_{1,m}` with center 0; bipartite and multipartite parts are contiguous
/// blocks in the given order; `hypercube [d]` indexes vertices by their
/// binary coordinates; `random_tree [n]` decodes a seeded random Prüfer
/// sequence, so `seed` is required.
pub fn generate(family: Family, params: &[usize], seed: Option<u64>) -> Result<Graph> {
    let one = |what: &str| -> Result<usize> {
        match params {
            [n] => Ok(*n),
            _ => Err(Error::InvalidParameter(format!(
                "{what} expects exactly one parameter, got {params:?}"
            ))),
        }
    };
    match family {
        Family::Path => {
            let n = one("path")?;
            if n < 1 {
                return Err(Error::InvalidParameter("path requires n >= 1".into()));
            }
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle => {
            let n = one("cycle")?;
            if n < 3 {
                return Err(Error::InvalidParameter("cycle requires n >= 3".into()));
            }
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete => {
            let n = one("complete")?;
            if n < 1 {
                return Err(Error::InvalidParameter("complete requires n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Star => {
            let m = one("star")?;
            let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
            Graph::from_edges(m + 1, &edges)
        }
        Family::CompleteBipartite => match params {
            [s, t] => generate(Family::CompleteMultipartite, &[*s, *t], None),
            _ => Err(Error::InvalidParameter(
                "complete_bipartite expects two part sizes".into(),
            )),
        },
        Family::CompleteMultipartite => {
            if params.len() < 2 || params.iter().any(|&p| p == 0) {
                return Err(Error::InvalidParameter(
                    "complete_multipartite expects >= 2 nonzero part sizes".into(),
                ));
            }
            let n: usize = params.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (i, &p) in params.iter().enumerate() {
                part_of.extend(std::iter::repeat(i).take(p));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Hypercube => {
            let d = one("hypercube")?;
            if d > 6 {
                return Err(Error::SizeLimit("hypercube limited to d <= 6".into()));
            }
            let n = 1usize << d;
            let mut edges = Vec::new();
            for v in 0..n {
                for b in 0..d {
                    let u = v ^ (1 << b);
                    if u > v {
                        edges.push((v, u));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::RandomTree => {
            let n = one("random_tree")?;
            let seed = seed.ok_or_else(|| {
                Error::InvalidParameter("random_tree requires a seed".into())
            })?;
            if n < 1 {
                return Err(Error::InvalidParameter("random_tree requires n >= 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if n <= 2 {
                return Graph::from_edges(n, if n == 2 { &[(0, 1)] } else { &[] });
            }
            let pruefer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Ok(pruefer_decode(n, &pruefer))
        }
    }
}

/// Decode a Prüfer sequence into the labeled tree it encodes.
pub fn pruefer_decode(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Min-leaf selection keeps the decoding canonical.
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().unwrap();
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a valid tree")
}

/// Parse the edge-list text format: first line `n m`, then `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Input("empty edge list".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Input("bad edge-list header".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Input("bad edge-list header".into()))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.take(m) {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Input(format!("bad edge line: {line}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Input(format!("bad edge line: {line}")))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Input(format!(
            "edge list declared {m} edges but {} were given",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

/// Render a graph in the edge-list text format.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
