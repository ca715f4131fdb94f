//! Small-graph corpora used by the verification suites: every graph on
//! up to 7 vertices up to isomorphism, every tree on up to 10 vertices up
//! to isomorphism, and seeded random graphs.
//!
//! Graphs on n vertices are edge bitmasks over the C(n,2) vertex pairs.
//! Isomorphism classes are the orbits of the symmetric group acting on
//! masks; adjacent transpositions generate the group, so a breadth-first
//! flood over all 2^C(n,2) masks splits them into orbits and picks the
//! minimum mask of each orbit as the class representative.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    // Column-major upper triangle, matching the graph6 bit order.
    debug_assert!(u < v && v < n);
    v * (v - 1) / 2 + u
}

fn mask_to_graph(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if mask >> pair_index(n, u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// How an adjacent transposition (i, i+1) permutes the pair bits.
fn transposition_bit_map(n: usize, i: usize) -> Vec<(usize, usize)> {
    let swap = |x: usize| {
        if x == i {
            i + 1
        } else if x == i + 1 {
            i
        } else {
            x
        }
    };
    let mut map = Vec::new();
    for v in 1..n {
        for u in 0..v {
            let (a, b) = (swap(u), swap(v));
            let from = pair_index(n, u, v);
            let to = pair_index(n, a.min(b), a.max(b));
            if from != to {
                map.push((from, to));
            }
        }
    }
    map
}

fn apply_bit_map(mask: u32, map: &[(usize, usize)]) -> u32 {
    let mut out = mask;
    for &(from, to) in map {
        if mask >> from & 1 == 1 {
            out |= 1u32 << to;
        } else {
            out &= !(1u32 << to);
        }
    }
    out
}

/// All graphs on exactly `n` vertices up to isomorphism (n <= 7).
pub fn all_graphs_exact(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::SizeLimit(
            "exhaustive isomorphism classes limited to n <= 7".into(),
        ));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let bits = n * (n - 1) / 2;
    let total = 1usize << bits;
    let maps: Vec<Vec<(usize, usize)>> = (0..n.saturating_sub(1))
        .map(|i| transposition_bit_map(n, i))
        .collect();
    let mut visited = vec![false; total];
    let mut reps = Vec::new();
    let mut queue = Vec::new();
    for start in 0..total as u32 {
        if visited[start as usize] {
            continue;
        }
        // Flood the orbit of `start`; `start` is its minimum element because
        // masks are scanned in ascending order.
        reps.push(start);
        visited[start as usize] = true;
        queue.clear();
        queue.push(start);
        while let Some(m) = queue.pop() {
            for map in &maps {
                let im = apply_bit_map(m, map);
                if !visited[im as usize] {
                    visited[im as usize] = true;
                    queue.push(im);
                }
            }
        }
    }
    Ok(reps.into_iter().map(|m| mask_to_graph(n, m)).collect())
}

/// All graphs with 1..=max_n vertices up to isomorphism (max_n <= 7).
pub fn all_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(all_graphs_exact(n)?);
    }
    Ok(out)
}

/// AHU canonical code of a free tree: root at the centroid (minimising over
/// both centroids when there are two) and take the sorted-subtree encoding.
fn tree_canonical_code(g: &Graph) -> String {
    fn encode(g: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&u| Some(u) != parent)
            .map(|u| encode(g, u, Some(v)))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }
    // Centroids: remove leaves layer by layer until <= 2 vertices remain.
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while alive_count > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            alive[v] = false;
            alive_count -= 1;
            for u in g.neighbors(v).iter() {
                if alive[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    (0..n)
        .filter(|&v| alive[v])
        .map(|c| encode(g, c, None))
        .min()
        .unwrap()
}

/// All trees on exactly `n` vertices up to isomorphism, grown by attaching
/// a leaf to every vertex of every (n-1)-vertex tree and deduplicating by
/// canonical code.
pub fn all_trees_exact(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level: Vec<Graph> = vec![Graph::empty(1).unwrap()];
    for size in 2..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..t.n() {
                let mut edges = t.edges();
                edges.push((attach, size - 1));
                let grown = Graph::from_edges(size, &edges).unwrap();
                if seen.insert(tree_canonical_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

/// Seeded Erdős–Rényi-style random graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Seeded random connected graphs (rejection sampling over density-varied
/// Erdős–Rényi draws).
pub fn random_connected_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = rng.gen_range(0.15..0.8);
        let g = random_graph(n, p, &mut rng);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_class_counts() {
        // OEIS A000088: graphs on n nodes up to isomorphism.
        assert_eq!(all_graphs_exact(1).unwrap().len(), 1);
        assert_eq!(all_graphs_exact(2).unwrap().len(), 2);
        assert_eq!(all_graphs_exact(3).unwrap().len(), 4);
        assert_eq!(all_graphs_exact(4).unwrap().len(), 11);
        assert_eq!(all_graphs_exact(5).unwrap().len(), 34);
        assert_eq!(all_graphs_exact(6).unwrap().len(), 156);
    }

    #[test]
    fn seven_vertex_count() {
        assert_eq!(all_graphs_exact(7).unwrap().len(), 1044);
    }

    #[test]
    fn tree_counts() {
        // OEIS A000055: trees on n nodes up to isomorphism.
        let counts: Vec<usize> = (1..=10).map(|n| all_trees_exact(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn random_connected_are_connected() {
        for g in random_connected_graphs(8, 10, 7) {
            assert!(g.is_connected());
            assert_eq!(g.n(), 8);
        }
    }
}
