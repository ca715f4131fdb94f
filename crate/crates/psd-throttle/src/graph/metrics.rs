//! Hop distances, eccentricities, radius, and the k-radius.

use crate::error::{Error, Result};
use crate::graph::{Graph, KSubsets, VertexSet};

/// All-pairs distances plus the derived eccentricities and radius.
/// `None` entries mark unreachable pairs; `radius` is `None` exactly when
/// the graph is disconnected (or empty).
#[derive(Clone, Debug)]
pub struct MetricTable {
    pub dist: Vec<Vec<Option<usize>>>,
    pub ecc: Vec<Option<usize>>,
    pub radius: Option<usize>,
}

impl MetricTable {
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[u][v]
    }
}

/// Compute exact distances by breadth-first search from every vertex.
pub fn metrics(g: &Graph) -> MetricTable {
    let n = g.n();
    let mut dist = vec![vec![None; n]; n];
    for s in 0..n {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut d = 0usize;
        while !frontier.is_empty() {
            for v in frontier.iter() {
                dist[s][v] = Some(d);
            }
            let next = g.neighborhood_of_set(frontier).minus(seen);
            seen = seen.union(next);
            frontier = next;
            d += 1;
        }
    }
    let ecc: Vec<Option<usize>> = (0..n)
        .map(|v| {
            let mut worst = 0usize;
            for u in 0..n {
                match dist[v][u] {
                    Some(d) => worst = worst.max(d),
                    None => return None,
                }
            }
            Some(worst)
        })
        .collect();
    let radius = if n == 0 || ecc.iter().any(|e| e.is_none()) {
        None
    } else {
        ecc.iter().map(|e| e.unwrap()).min()
    };
    MetricTable { dist, ecc, radius }
}

/// Eccentricity of a vertex set: the largest distance from the set to any
/// vertex. `None` if some vertex is unreachable from the set.
pub fn set_eccentricity(g: &Graph, set: VertexSet) -> Option<usize> {
    if set.is_empty() {
        return if g.n() == 0 { Some(0) } else { None };
    }
    let mut seen = set;
    let mut frontier = set;
    let mut d = 0usize;
    let mut last = 0usize;
    while !frontier.is_empty() {
        last = d;
        let next = g.neighborhood_of_set(frontier).minus(seen);
        seen = seen.union(next);
        frontier = next;
        d += 1;
    }
    if seen == g.full_set() {
        Some(last)
    } else {
        None
    }
}

/// Exact k-radius by enumerating every k-subset.
pub fn k_radius(g: &Graph, k: usize) -> Result<usize> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!(
            "k-radius requires 1 <= k <= n, got k={k} for n={}",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("k-radius".into()));
    }
    KSubsets::new(g.n(), k)
        .filter_map(|s| set_eccentricity(g, s))
        .min()
        .ok_or_else(|| Error::Disconnected("k-radius".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn metric_examples() {
        let p5 = generate(Family::Path, &[5], None).unwrap();
        let m = metrics(&p5);
        assert_eq!(m.radius, Some(2));
        assert_eq!(m.ecc[0], Some(4));

        let c9 = generate(Family::Cycle, &[9], None).unwrap();
        assert_eq!(metrics(&c9).radius, Some(4));

        let star = generate(Family::Star, &[5], None).unwrap();
        assert_eq!(metrics(&star).radius, Some(1));
    }

    #[test]
    fn disconnected_metrics() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let m = metrics(&g);
        assert_eq!(m.radius, None);
        assert_eq!(m.dist[0][2], None);
        assert!(k_radius(&g, 1).is_err());
    }

    #[test]
    fn k_radius_examples() {
        let p7 = generate(Family::Path, &[7], None).unwrap();
        assert_eq!(k_radius(&p7, 1).unwrap(), metrics(&p7).radius.unwrap());
        // Frozen from the same brute force the implementation uses; checked
        // by hand: {1, 5} covers P_7 within distance 2 and no pair does
        // better than 2.
        assert_eq!(k_radius(&p7, 2).unwrap(), 2);
        let c8 = generate(Family::Cycle, &[8], None).unwrap();
        assert_eq!(k_radius(&c8, 2).unwrap(), 2);
    }

    #[test]
    fn k_radius_monotone() {
        let g = generate(Family::Cycle, &[9], None).unwrap();
        let vals: Vec<_> = (1..9).map(|k| k_radius(&g, k).unwrap()).collect();
        assert!(vals.windows(2).all(|w| w[1] <= w[0]));
    }
}
