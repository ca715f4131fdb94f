//! Positive semidefinite zero forcing: round simulation, propagation
//! traces, propagation time, and forcing tree covers.
//!
//! Color change rule: a blue vertex u forces a white vertex w in one round
//! if w is the only white neighbor of u inside some component of the graph
//! induced on the white vertices. All enabled forces in a round fire
//! simultaneously, and the white components are recomputed from the
//! cumulative blue set at the start of every round.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropagationStatus {
    ForcedAll,
    Stalled,
}

/// Full record of one propagation run from an initial blue set.
#[derive(Clone, Debug)]
pub struct PropagationTrace {
    pub initial: VertexSet,
    /// Vertices newly colored in round i (1-based; index 0 is round 1).
    pub rounds: Vec<VertexSet>,
    /// Cumulative blue sets; entry 0 is the initial set.
    pub cumulative: Vec<VertexSet>,
    /// Round in which each vertex turned blue; 0 for initial vertices,
    /// None for vertices never forced.
    pub rd: Vec<Option<usize>>,
    /// (forcer, forced, round) triples, one per forced vertex.
    pub forces: Vec<(usize, usize, usize)>,
    pub status: PropagationStatus,
}

impl PropagationTrace {
    pub fn prop_time(&self) -> Option<usize> {
        match self.status {
            PropagationStatus::ForcedAll => Some(self.rounds.len()),
            PropagationStatus::Stalled => None,
        }
    }

    pub fn derived_set(&self) -> VertexSet {
        *self.cumulative.last().unwrap()
    }

    /// Line-oriented text form: one line per round listing forces "u->v".
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for round in 1..=self.rounds.len() {
            let mut parts = Vec::new();
            for &(u, v, r) in &self.forces {
                if r == round {
                    parts.push(format!("{}->{}", u, v));
                }
            }
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

/// One simultaneous application of the rule from a blue set. Returns every
/// enabled (forcer, forced) pair; a vertex may be listed with several
/// candidate forcers. Empty result means the rule is stalled.
pub fn psd_round(g: &Graph, blue: VertexSet) -> Vec<(usize, usize)> {
    let white = g.full_set().minus(blue);
    let mut forces = Vec::new();
    for comp in g.components_within(white) {
        for u in blue.iter() {
            let in_comp = VertexSet(g.neighbors(u).0 & comp.0);
            if in_comp.len() == 1 {
                forces.push((u, in_comp.iter().next().unwrap()));
            }
        }
    }
    forces.sort_unstable();
    forces
}

/// Run the rule to a fixpoint. Ties (several forcers for one vertex) go to
/// the lowest-index forcer so traces and forests are reproducible.
pub fn propagate(g: &Graph, s: VertexSet) -> PropagationTrace {
    propagate_capped(g, s, usize::MAX).unwrap()
}

/// As [`propagate`], but gives up (returning None) once the round count
/// exceeds `cap`. Used by searches that only care about small times.
pub fn propagate_capped(g: &Graph, s: VertexSet, cap: usize) -> Option<PropagationTrace> {
    let n = g.n();
    let full = g.full_set();
    let mut rd = vec![None; n];
    for v in s.iter() {
        rd[v] = Some(0);
    }
    let mut rounds = Vec::new();
    let mut cumulative = vec![s];
    let mut forces = Vec::new();
    let mut blue = s;
    let mut round = 0usize;
    while blue != full {
        let enabled = psd_round(g, blue);
        if enabled.is_empty() {
            return Some(PropagationTrace {
                initial: s,
                rounds,
                cumulative,
                rd,
                forces,
                status: PropagationStatus::Stalled,
            });
        }
        round += 1;
        if round > cap {
            return None;
        }
        let mut newly = VertexSet::EMPTY;
        for (u, w) in enabled {
            // Sorted order means the first forcer seen for w is the lowest.
            if !newly.contains(w) {
                newly.insert(w);
                rd[w] = Some(round);
                forces.push((u, w, round));
            }
        }
        blue = blue.union(newly);
        rounds.push(newly);
        cumulative.push(blue);
    }
    Some(PropagationTrace {
        initial: s,
        rounds,
        cumulative,
        rd,
        forces,
        status: PropagationStatus::ForcedAll,
    })
}

/// pt(G; S): rounds to color everything, or None when S never forces all.
pub fn prop_time(g: &Graph, s: VertexSet) -> Option<usize> {
    propagate(g, s).prop_time()
}

/// pt(G; S) if it is at most `cap`, else None (also None when stalled).
pub fn prop_time_capped(g: &Graph, s: VertexSet, cap: usize) -> Option<usize> {
    propagate_capped(g, s, cap).and_then(|t| t.prop_time())
}

/// One tree of a forcing tree cover, rooted at an initial blue vertex.
#[derive(Clone, Debug)]
pub struct ForcingTree {
    pub root: usize,
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
    /// Radius of the tree viewed as a graph in its own right.
    pub radius: usize,
}

#[derive(Clone, Debug)]
pub struct ForcingForest {
    pub trees: Vec<ForcingTree>,
}

impl ForcingForest {
    pub fn max_radius(&self) -> usize {
        self.trees.iter().map(|t| t.radius).max().unwrap_or(0)
    }
}

/// Build the forcing tree cover from a completed trace: each forced vertex
/// hangs off its forcer, giving one tree per initial vertex. The trees are
/// vertex-disjoint and jointly cover the graph.
pub fn forcing_forest(g: &Graph, trace: &PropagationTrace) -> Result<ForcingForest> {
    if trace.status != PropagationStatus::ForcedAll {
        return Err(Error::InvalidParameter(
            "forcing forest requires a trace that colored every vertex".into(),
        ));
    }
    let n = g.n();
    let mut root = vec![usize::MAX; n];
    for v in trace.initial.iter() {
        root[v] = v;
    }
    // Forces are stored in round order, so forcers are resolved first.
    for &(u, w, _) in &trace.forces {
        root[w] = root[u];
    }
    let mut trees = Vec::new();
    for r in trace.initial.iter() {
        let vertices = VertexSet::from_vertices((0..n).filter(|&v| root[v] == r));
        let edges: Vec<(usize, usize)> = trace
            .forces
            .iter()
            .filter(|&&(u, _, _)| root[u] == r)
            .map(|&(u, w, _)| (u.min(w), u.max(w)))
            .collect();
        trees.push(ForcingTree {
            root: r,
            radius: tree_radius(&vertices, &edges),
            vertices,
            edges,
        });
    }
    Ok(ForcingForest { trees })
}

fn tree_radius(vertices: &VertexSet, edges: &[(usize, usize)]) -> usize {
    let verts: Vec<usize> = vertices.to_vec();
    if verts.len() <= 1 {
        return 0;
    }
    let mut adj = std::collections::HashMap::new();
    for &v in &verts {
        adj.insert(v, Vec::new());
    }
    for &(u, w) in edges {
        adj.get_mut(&u).unwrap().push(w);
        adj.get_mut(&w).unwrap().push(u);
    }
    let ecc = |start: usize| -> usize {
        let mut dist = std::collections::HashMap::new();
        dist.insert(start, 0usize);
        let mut queue = std::collections::VecDeque::from([start]);
        let mut far = 0;
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            far = far.max(d);
            for &w in &adj[&v] {
                if !dist.contains_key(&w) {
                    dist.insert(w, d + 1);
                    queue.push_back(w);
                }
            }
        }
        far
    };
    verts.iter().map(|&v| ecc(v)).min().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn cycle(n: usize) -> Graph {
        generate(Family::Cycle, &[n], None).unwrap()
    }
    fn path(n: usize) -> Graph {
        generate(Family::Path, &[n], None).unwrap()
    }
    fn vs(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    #[test]
    fn round_needs_unique_white_neighbor() {
        assert!(psd_round(&cycle(4), vs(&[0])).is_empty());
        assert_eq!(psd_round(&cycle(4), vs(&[0, 1])), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn round_star_center_forces_per_component() {
        let star = generate(Family::Star, &[3], None).unwrap();
        assert_eq!(psd_round(&star, vs(&[0])), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn path_center_trace() {
        let t = propagate(&path(5), vs(&[2]));
        assert_eq!(t.status, PropagationStatus::ForcedAll);
        assert_eq!(t.rounds, vec![vs(&[1, 3]), vs(&[0, 4])]);
        assert_eq!(t.rd, vec![Some(2), Some(1), Some(0), Some(1), Some(2)]);
        assert_eq!(t.prop_time(), Some(2));
    }

    #[test]
    fn stalled_cycle_singleton() {
        let t = propagate(&cycle(5), vs(&[0]));
        assert_eq!(t.status, PropagationStatus::Stalled);
        assert_eq!(t.derived_set(), vs(&[0]));
        assert_eq!(prop_time(&cycle(5), vs(&[0])), None);
    }

    #[test]
    fn full_set_takes_zero_rounds() {
        let g = cycle(6);
        let t = propagate(&g, g.full_set());
        assert_eq!(t.prop_time(), Some(0));
        assert!(t.forces.is_empty());
    }

    #[test]
    fn empty_set_never_forces() {
        assert_eq!(prop_time(&path(3), VertexSet::EMPTY), None);
    }

    #[test]
    fn antipodal_cycle_pair() {
        // Both components between the two blue vertices shrink from both
        // ends at once, so six vertices finish in one round.
        assert_eq!(prop_time(&cycle(6), vs(&[0, 3])), Some(1));
        assert_eq!(prop_time(&cycle(10), vs(&[0, 5])), Some(2));
        assert_eq!(prop_time(&path(3), vs(&[1])), Some(1));
    }

    #[test]
    fn capped_propagation() {
        assert_eq!(prop_time_capped(&path(9), vs(&[4]), 4), Some(4));
        assert_eq!(prop_time_capped(&path(9), vs(&[4]), 3), None);
        assert_eq!(prop_time_capped(&cycle(5), vs(&[0]), 10), None);
    }

    #[test]
    fn forest_single_root_is_whole_path() {
        let g = path(5);
        let t = propagate(&g, vs(&[2]));
        let f = forcing_forest(&g, &t).unwrap();
        assert_eq!(f.trees.len(), 1);
        assert_eq!(f.trees[0].vertices, g.full_set());
        assert_eq!(f.trees[0].radius, 2);
    }

    #[test]
    fn forest_two_roots_on_square() {
        let g = cycle(4);
        let t = propagate(&g, vs(&[0, 1]));
        let f = forcing_forest(&g, &t).unwrap();
        assert_eq!(f.trees.len(), 2);
        let mut edge_sets: Vec<Vec<(usize, usize)>> =
            f.trees.iter().map(|t| t.edges.clone()).collect();
        edge_sets.sort();
        assert_eq!(edge_sets, vec![vec![(0, 3)], vec![(1, 2)]]);
        assert!(f.trees.iter().all(|t| t.radius == 1));
    }

    #[test]
    fn forest_full_set_is_singletons() {
        let g = cycle(4);
        let t = propagate(&g, g.full_set());
        let f = forcing_forest(&g, &t).unwrap();
        assert_eq!(f.trees.len(), 4);
        assert!(f.trees.iter().all(|t| t.radius == 0 && t.edges.is_empty()));
    }

    #[test]
    fn forest_rejects_stalled_trace() {
        let g = cycle(5);
        let t = propagate(&g, vs(&[0]));
        assert!(forcing_forest(&g, &t).is_err());
    }

    #[test]
    fn round_function_consistency() {
        let g = cycle(8);
        let t = propagate(&g, vs(&[0, 1]));
        for &(u, v, i) in &t.forces {
            assert!(t.rd[u].unwrap() < i);
            assert_eq!(t.rd[v], Some(i));
        }
    }

    #[test]
    fn trace_text_format() {
        let t = propagate(&path(5), vs(&[2]));
        assert_eq!(t.to_text(), "2->1 2->3\n1->0 3->4\n");
    }

    #[test]
    fn single_vertex_tree_time_is_eccentricity() {
        use crate::graph::corpus::all_trees_exact;
        use crate::graph::metrics::metrics;
        for n in 1..=9 {
            for t in all_trees_exact(n) {
                let m = metrics(&t);
                for v in 0..n {
                    assert_eq!(
                        prop_time(&t, VertexSet::singleton(v)),
                        Some(m.ecc[v].unwrap()),
                        "tree n={} v={}",
                        n,
                        v
                    );
                }
            }
        }
    }

    #[test]
    fn round_output_is_label_independent() {
        // Relabeling the graph relabels the forces and nothing else.
        use crate::graph::corpus::all_graphs_exact;
        let perm = [3, 0, 4, 1, 2, 5];
        for g in all_graphs_exact(6).unwrap() {
            let h = g.relabel(&perm);
            let blue = vs(&[0, 2, 5]);
            let blue_h = VertexSet::from_vertices(blue.iter().map(|v| perm[v]));
            let mut mapped: Vec<(usize, usize)> = psd_round(&g, blue)
                .into_iter()
                .map(|(u, w)| (perm[u], perm[w]))
                .collect();
            mapped.sort_unstable();
            assert_eq!(mapped, psd_round(&h, blue_h));
        }
    }
}
