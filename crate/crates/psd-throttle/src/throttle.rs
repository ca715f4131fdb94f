//! Exact searches over initial blue sets: the forcing number, optimal
//! propagation time at each set size, and the three throttling numbers,
//! each with a witness set. A naive unpruned oracle over all 2^n subsets
//! backs the pruned searches in tests.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, KSubsets, VertexSet};
use crate::psd::prop_time_capped;

/// Largest n accepted by the exhaustive searches.
pub const SEARCH_LIMIT: usize = 24;

/// Largest n accepted by the unpruned oracle.
pub const ORACLE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    ZPlus,
    PtK,
    ThSum,
    ThTimes,
    ThStar,
}

/// Optimal value of one throttling parameter together with a set realizing
/// it. Witnesses are deterministic: smallest qualifying size first, then
/// numerically smallest bitmask.
#[derive(Clone, Debug, Serialize)]
pub struct ThrottlingWitness {
    pub parameter: Parameter,
    pub value: usize,
    #[serde(serialize_with = "crate::graph::serialize_vertex_set")]
    pub witness_set: VertexSet,
    pub witness_pt: usize,
    pub k_range_searched: (usize, usize),
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > SEARCH_LIMIT {
        return Err(Error::SizeLimit(format!(
            "exhaustive search supports at most {} vertices, got {}",
            SEARCH_LIMIT,
            g.n()
        )));
    }
    Ok(())
}

/// Minimum pt over k-subsets, considering only sets with pt <= cap.
/// Ties go to the numerically smallest subset mask. `workers` splits the
/// subset stream by stride; results are identical for any worker count.
fn best_pt_at_k(
    g: &Graph,
    k: usize,
    cap: usize,
    workers: usize,
) -> Option<(usize, VertexSet)> {
    let workers = workers.max(1);
    let run = |stride: usize, offset: usize| -> Option<(usize, VertexSet)> {
        let mut best: Option<(usize, VertexSet)> = None;
        for (i, s) in KSubsets::new(g.n(), k).enumerate() {
            if i % stride != offset {
                continue;
            }
            // Only strictly better times matter once a witness is known.
            let local_cap = match best {
                Some((p, _)) => p.saturating_sub(1),
                None => cap,
            };
            if let Some(p) = prop_time_capped(g, s, local_cap) {
                best = Some((p, s));
                if p == 0 {
                    break;
                }
            }
        }
        best
    };
    if workers == 1 {
        run(1, 0)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| scope.spawn(move || run(workers, w)))
                .collect();
            handles
                .into_iter()
                .filter_map(|h| h.join().unwrap())
                .min_by_key(|&(p, s)| (p, s.0))
        })
    }
}

/// Minimum size of a PSD forcing set, with one witness.
pub fn z_plus(g: &Graph) -> Result<(usize, VertexSet)> {
    check_size(g)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    for k in 1..=n {
        if let Some((_, s)) = best_pt_at_k(g, k, usize::MAX, 1) {
            return Ok((k, s));
        }
    }
    unreachable!("the full vertex set always forces");
}

/// Minimum pt over sets of size exactly k; None when no k-set forces.
pub fn pt_k(g: &Graph, k: usize, workers: usize) -> Result<(Option<usize>, Option<VertexSet>)> {
    check_size(g)?;
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!(
            "set size {} out of range 1..={}",
            k,
            g.n()
        )));
    }
    Ok(match best_pt_at_k(g, k, usize::MAX, workers) {
        Some((p, s)) => (Some(p), Some(s)),
        None => (None, None),
    })
}

/// th(G) = min over forcing sets of |S| + pt(G; S).
pub fn th_sum(g: &Graph, workers: usize) -> Result<ThrottlingWitness> {
    check_size(g)?;
    let n = g.n();
    let (z, _) = z_plus(g)?;
    // S = V(G) always works: value n + 0.
    let mut best = ThrottlingWitness {
        parameter: Parameter::ThSum,
        value: n,
        witness_set: g.full_set(),
        witness_pt: 0,
        k_range_searched: (z, n),
    };
    for k in z..n {
        if k + 1 >= best.value {
            best.k_range_searched.1 = k;
            break;
        }
        let cap = best.value - 1 - k;
        if let Some((p, s)) = best_pt_at_k(g, k, cap, workers) {
            if k + p < best.value {
                best.value = k + p;
                best.witness_set = s;
                best.witness_pt = p;
            }
        }
    }
    Ok(best)
}

/// th^x(G) = min over forcing sets of |S| * (1 + pt(G; S)).
pub fn th_times(g: &Graph, workers: usize) -> Result<ThrottlingWitness> {
    check_size(g)?;
    let n = g.n();
    let (z, _) = z_plus(g)?;
    // S = V(G) gives n * (1 + 0) = n.
    let mut best = ThrottlingWitness {
        parameter: Parameter::ThTimes,
        value: n,
        witness_set: g.full_set(),
        witness_pt: 0,
        k_range_searched: (z, n),
    };
    for k in z..n {
        // pt >= 1 for k < n, so the product is at least 2k.
        if 2 * k >= best.value {
            best.k_range_searched.1 = k;
            break;
        }
        // k * (1 + pt) < best requires pt <= (best - 1) / k - 1.
        let cap = (best.value - 1) / k - 1;
        if let Some((p, s)) = best_pt_at_k(g, k, cap, workers) {
            let value = k * (1 + p);
            if value < best.value {
                best.value = value;
                best.witness_set = s;
                best.witness_pt = p;
            }
        }
    }
    Ok(best)
}

/// th^*(G) = min over forcing sets with |S| < n of |S| * pt(G; S).
/// Undefined (an error) when no proper subset forces.
pub fn th_star(g: &Graph, workers: usize) -> Result<ThrottlingWitness> {
    check_size(g)?;
    let n = g.n();
    if n == 1 {
        return Err(Error::Undefined(
            "no-initial-cost throttling needs a proper forcing subset; K_1 has none".into(),
        ));
    }
    let (z, _) = z_plus(g)?;
    if z == n {
        return Err(Error::Undefined(
            "no proper subset is a forcing set, so the minimum ranges over nothing".into(),
        ));
    }
    let mut best: Option<ThrottlingWitness> = None;
    let mut last_k = z;
    for k in z..n {
        last_k = k;
        // pt >= 1 for k < n, so the product is at least k.
        let bound = best.as_ref().map(|b| b.value).unwrap_or(usize::MAX);
        if k >= bound {
            break;
        }
        // k * pt < bound requires pt <= (bound - 1) / k.
        let cap = if bound == usize::MAX {
            usize::MAX
        } else {
            (bound - 1) / k
        };
        if let Some((p, s)) = best_pt_at_k(g, k, cap, workers) {
            let value = k * p;
            if value < bound {
                best = Some(ThrottlingWitness {
                    parameter: Parameter::ThStar,
                    value,
                    witness_set: s,
                    witness_pt: p,
                    k_range_searched: (z, k),
                });
            }
        }
    }
    let mut best = best.expect("k = Z always yields a finite product");
    best.k_range_searched = (z, last_k);
    Ok(best)
}

/// Every searched parameter for one graph, shared by the CLI and the
/// bound-verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct SearchRecord {
    pub n: usize,
    pub z_plus: usize,
    #[serde(serialize_with = "crate::graph::serialize_vertex_set")]
    pub z_witness: VertexSet,
    pub th_sum: ThrottlingWitness,
    pub th_times: ThrottlingWitness,
    /// None when no proper subset forces (then the parameter is undefined).
    pub th_star: Option<ThrottlingWitness>,
}

pub fn search_all(g: &Graph, workers: usize) -> Result<SearchRecord> {
    let (z, z_witness) = z_plus(g)?;
    let th_star = match th_star(g, workers) {
        Ok(w) => Some(w),
        Err(Error::Undefined(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(SearchRecord {
        n: g.n(),
        z_plus: z,
        z_witness,
        th_sum: th_sum(g, workers)?,
        th_times: th_times(g, workers)?,
        th_star,
    })
}

/// Values from the unpruned oracle; no witnesses, only numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRecord {
    pub z_plus: usize,
    pub pt_by_k: Vec<Option<usize>>,
    pub th_sum: usize,
    pub th_times: usize,
    pub th_star: Option<usize>,
}

/// Simulate the color change rule with plain adjacency lists and no early
/// exits. Deliberately shares nothing with the bitset engine.
fn naive_pt(adj: &[Vec<usize>], initial: u64) -> Option<usize> {
    let n = adj.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut blue = initial;
    let mut rounds = 0usize;
    while blue != full {
        let mut seen = vec![false; n];
        let mut forced = 0u64;
        for start in 0..n {
            if seen[start] || blue >> start & 1 == 1 {
                continue;
            }
            // Depth-first walk of one white component.
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] && blue >> w & 1 == 0 {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            for u in 0..n {
                if blue >> u & 1 == 0 {
                    continue;
                }
                let white_nbrs: Vec<usize> = adj[u]
                    .iter()
                    .copied()
                    .filter(|w| comp.contains(w))
                    .collect();
                if white_nbrs.len() == 1 {
                    forced |= 1 << white_nbrs[0];
                }
            }
        }
        if forced == 0 {
            return None;
        }
        blue |= forced;
        rounds += 1;
    }
    Some(rounds)
}

/// Ground-truth values by enumerating every one of the 2^n subsets.
pub fn oracle_all(g: &Graph) -> Result<OracleRecord> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeLimit(format!(
            "oracle supports at most {} vertices, got {}",
            ORACLE_LIMIT, n
        )));
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut pt_by_k: Vec<Option<usize>> = vec![None; n + 1];
    let mut th_sum = usize::MAX;
    let mut th_times = usize::MAX;
    let mut th_star: Option<usize> = None;
    for mask in 1..=((1u64 << n) - 1) {
        let k = mask.count_ones() as usize;
        if let Some(p) = naive_pt(&adj, mask) {
            pt_by_k[k] = Some(pt_by_k[k].map_or(p, |b| b.min(p)));
            th_sum = th_sum.min(k + p);
            th_times = th_times.min(k * (1 + p));
            if k < n {
                th_star = Some(th_star.map_or(k * p, |b| b.min(k * p)));
            }
        }
    }
    let z = (1..=n).find(|&k| pt_by_k[k].is_some()).unwrap();
    Ok(OracleRecord {
        z_plus: z,
        pt_by_k,
        th_sum,
        th_times,
        th_star,
    })
}

/// Cross-checks between the two optimal product-throttling witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessRelations {
    /// Set when the hypothesis th^x(G) < n fails; no relations evaluated.
    pub skipped: Option<String>,
    /// Each witness attains the optimal pt at its own cardinality.
    pub witnesses_realize_pt_k: bool,
    /// |S*| >= |Sx|.
    pub star_at_least_times_cardinality: bool,
    /// pt(G; S*) <= pt(G; Sx).
    pub star_pt_at_most_times_pt: bool,
    /// With equal cardinalities, each witness is optimal for the other
    /// parameter too.
    pub equal_cardinality_cross_optimal: bool,
}

pub fn witness_relations(g: &Graph, workers: usize) -> Result<WitnessRelations> {
    let times = th_times(g, workers)?;
    if times.value >= g.n() {
        return Ok(WitnessRelations {
            skipped: Some(format!(
                "th^x(G) = {} is not below n = {}",
                times.value,
                g.n()
            )),
            witnesses_realize_pt_k: true,
            star_at_least_times_cardinality: true,
            star_pt_at_most_times_pt: true,
            equal_cardinality_cross_optimal: true,
        });
    }
    let star = th_star(g, workers)?;
    let k_times = times.witness_set.len();
    let k_star = star.witness_set.len();
    let (pt_at_k_times, _) = pt_k(g, k_times, workers)?;
    let (pt_at_k_star, _) = pt_k(g, k_star, workers)?;
    let witnesses_realize_pt_k =
        pt_at_k_times == Some(times.witness_pt) && pt_at_k_star == Some(star.witness_pt);
    let star_at_least_times_cardinality = k_star >= k_times;
    let star_pt_at_most_times_pt = star.witness_pt <= times.witness_pt;
    let equal_cardinality_cross_optimal = if k_star == k_times {
        k_times * (1 + star.witness_pt) == times.value
            && k_star * times.witness_pt == star.value
    } else {
        true
    };
    Ok(WitnessRelations {
        skipped: None,
        witnesses_realize_pt_k,
        star_at_least_times_cardinality,
        star_pt_at_most_times_pt,
        equal_cardinality_cross_optimal,
    })
}

impl WitnessRelations {
    pub fn all_hold(&self) -> bool {
        self.witnesses_realize_pt_k
            && self.star_at_least_times_cardinality
            && self.star_pt_at_most_times_pt
            && self.equal_cardinality_cross_optimal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, Graph};

    fn cycle(n: usize) -> Graph {
        generate(Family::Cycle, &[n], None).unwrap()
    }
    fn path(n: usize) -> Graph {
        generate(Family::Path, &[n], None).unwrap()
    }
    fn complete(n: usize) -> Graph {
        generate(Family::Complete, &[n], None).unwrap()
    }

    #[test]
    fn z_plus_examples() {
        assert_eq!(z_plus(&path(7)).unwrap().0, 1);
        assert_eq!(z_plus(&cycle(8)).unwrap().0, 2);
        let q3 = generate(Family::Hypercube, &[3], None).unwrap();
        assert_eq!(z_plus(&q3).unwrap().0, 4);
    }

    #[test]
    fn pt_k_examples() {
        assert_eq!(pt_k(&cycle(10), 2, 1).unwrap().0, Some(2));
        assert_eq!(pt_k(&path(7), 1, 1).unwrap().0, Some(3));
        assert_eq!(pt_k(&cycle(5), 1, 1).unwrap().0, None);
    }

    #[test]
    fn pt_k_nonincreasing_in_k() {
        for g in [cycle(9), path(8), generate(Family::Hypercube, &[3], None).unwrap()] {
            let z = z_plus(&g).unwrap().0;
            let mut prev = usize::MAX;
            for k in z..=g.n() {
                let p = pt_k(&g, k, 1).unwrap().0.unwrap();
                assert!(p <= prev);
                prev = p;
            }
        }
    }

    #[test]
    fn th_times_examples() {
        let w = th_times(&cycle(10), 1).unwrap();
        assert_eq!((w.value, w.witness_pt), (6, 2));
        assert_eq!(th_times(&cycle(15), 1).unwrap().value, 9);
        let k34 = generate(Family::CompleteBipartite, &[3, 4], None).unwrap();
        assert_eq!(th_times(&k34, 1).unwrap().value, 6);
    }

    #[test]
    fn th_star_examples() {
        assert_eq!(th_star(&cycle(6), 1).unwrap().value, 2);
        assert_eq!(th_star(&complete(5), 1).unwrap().value, 4);
        assert_eq!(th_star(&cycle(6).complement(), 1).unwrap().value, 3);
        assert!(matches!(
            th_star(&complete(1), 1),
            Err(Error::Undefined(_))
        ));
        let isolated = Graph::empty(3).unwrap();
        assert!(matches!(th_star(&isolated, 1), Err(Error::Undefined(_))));
    }

    #[test]
    fn th_sum_examples() {
        let star = generate(Family::Star, &[4], None).unwrap();
        assert_eq!(th_sum(&star, 1).unwrap().value, 2);
        assert_eq!(th_sum(&path(5), 1).unwrap().value, 3);
        assert_eq!(th_sum(&cycle(4), 1).unwrap().value, 3);
    }

    #[test]
    fn witness_invariants() {
        for g in [cycle(9), path(6), complete(4)] {
            for w in [th_sum(&g, 1).unwrap(), th_times(&g, 1).unwrap()] {
                let p = crate::psd::prop_time(&g, w.witness_set).unwrap();
                assert_eq!(p, w.witness_pt);
                let k = w.witness_set.len();
                let expect = match w.parameter {
                    Parameter::ThSum => k + p,
                    Parameter::ThTimes => k * (1 + p),
                    Parameter::ThStar => k * p,
                    _ => unreachable!(),
                };
                assert_eq!(expect, w.value);
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let p4 = oracle_all(&path(4)).unwrap();
        assert_eq!((p4.z_plus, p4.th_times), (1, 3));
        let k1 = oracle_all(&complete(1)).unwrap();
        assert_eq!((k1.z_plus, k1.th_times), (1, 1));
        assert_eq!(k1.th_star, None);
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(
            oracle_all(&petersen).unwrap().th_times,
            th_times(&petersen, 1).unwrap().value
        );
    }

    #[test]
    fn pruned_matches_oracle_small_corpus() {
        use crate::graph::corpus::all_graphs_up_to;
        for g in all_graphs_up_to(5).unwrap() {
            let o = oracle_all(&g).unwrap();
            let r = search_all(&g, 1).unwrap();
            assert_eq!(r.z_plus, o.z_plus, "{:?}", g.edges());
            assert_eq!(r.th_sum.value, o.th_sum, "{:?}", g.edges());
            assert_eq!(r.th_times.value, o.th_times, "{:?}", g.edges());
            assert_eq!(
                r.th_star.map(|w| w.value),
                o.th_star,
                "{:?}",
                g.edges()
            );
        }
    }

    #[test]
    fn extreme_observation() {
        // Z at least n/2 pins th^x to exactly n.
        use crate::graph::corpus::all_graphs_exact;
        for g in all_graphs_exact(6).unwrap() {
            let (z, _) = z_plus(&g).unwrap();
            if 2 * z >= g.n() {
                assert_eq!(th_times(&g, 1).unwrap().value, g.n());
            }
        }
    }

    #[test]
    fn worker_split_is_deterministic() {
        for g in [cycle(11), path(10)] {
            let a = th_times(&g, 1).unwrap();
            let b = th_times(&g, 3).unwrap();
            assert_eq!(a.value, b.value);
            assert_eq!(a.witness_set, b.witness_set);
        }
    }

    #[test]
    fn relations_examples() {
        assert!(witness_relations(&path(7), 1).unwrap().all_hold());
        assert!(witness_relations(&cycle(12), 1).unwrap().all_hold());
        let r = witness_relations(&complete(4), 1).unwrap();
        assert!(r.skipped.is_some());
    }

    #[test]
    fn size_limit_enforced() {
        let g = Graph::empty(25).unwrap();
        assert!(matches!(z_plus(&g), Err(Error::SizeLimit(_))));
    }
}
