//! Exact cops-and-robbers solver. Cops place on S, the robber places
//! adversarially, then each round the cops move (capture the moment a cop
//! shares the robber's vertex) and the robber moves. Cops may stack during
//! play, so the state space is (cop multiset, robber vertex, side to move).
//!
//! Values come from retrograde analysis: capture states are 0, cop-to-move
//! states take 1 + min over cop moves, robber-to-move states take max over
//! robber moves, and states never finalized are escapes. Nodes are
//! processed in nondecreasing value order with a bucket queue, so min
//! nodes finalize on their first settled successor and max nodes on their
//! last.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, KSubsets, VertexSet};

/// Maximum number of (multiset, robber) pairs per solved game.
pub const STATE_BUDGET: usize = 10_000_000;

const INF: u32 = u32::MAX;

fn pack(sorted: &[u8]) -> u128 {
    sorted
        .iter()
        .fold(0u128, |acc, &v| (acc << 7) | (v as u128 + 1))
}

fn multiset_count(n: usize, k: usize) -> Option<usize> {
    // C(n + k - 1, k), None on overflow or over-budget blowup.
    let mut num: u128 = 1;
    for i in 0..k {
        num = num.checked_mul((n + k - 1 - i) as u128)?;
        num /= (i + 1) as u128;
        if num > (STATE_BUDGET as u128) * 64 {
            return None;
        }
    }
    usize::try_from(num).ok()
}

struct GameTable {
    /// Sorted cop multisets, indexed densely.
    multisets: Vec<Vec<u8>>,
    index: HashMap<u128, u32>,
    /// Rounds to capture from (multiset, robber) with cops to move;
    /// INF is escape.
    value_cop: Vec<u32>,
}

/// Solver for one graph; value tables are cached per cop count.
pub struct CopSolver<'a> {
    g: &'a Graph,
    closed: Vec<Vec<u8>>,
    tables: HashMap<usize, GameTable>,
}

impl<'a> CopSolver<'a> {
    pub fn new(g: &'a Graph) -> CopSolver<'a> {
        let closed: Vec<Vec<u8>> = (0..g.n())
            .map(|v| g.closed_neighbors(v).iter().map(|u| u as u8).collect())
            .collect();
        CopSolver {
            g,
            closed,
            tables: HashMap::new(),
        }
    }

    fn enumerate_multisets(n: usize, k: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut cur = vec![0u8; k];
        fn rec(out: &mut Vec<Vec<u8>>, cur: &mut Vec<u8>, pos: usize, lo: usize, n: usize) {
            if pos == cur.len() {
                out.push(cur.clone());
                return;
            }
            for v in lo..n {
                cur[pos] = v as u8;
                rec(out, cur, pos + 1, v, n);
            }
        }
        rec(&mut out, &mut cur, 0, 0, n);
        out
    }

    /// All cop-move results from `from`, as multiset indices. Staying is a
    /// move, so `from` itself is included. Duplicates are possible and
    /// harmless; the caller's relaxation is idempotent.
    fn for_each_move<F: FnMut(u32)>(&self, table: &GameTable, from: &[u8], mut f: F) {
        let k = from.len();
        let mut choice = vec![0usize; k];
        let mut dest = vec![0u8; k];
        loop {
            for i in 0..k {
                dest[i] = self.closed[from[i] as usize][choice[i]];
            }
            let mut sorted = dest.clone();
            sorted.sort_unstable();
            f(table.index[&pack(&sorted)]);
            // Odometer over each cop's closed neighborhood.
            let mut i = 0;
            loop {
                if i == k {
                    return;
                }
                choice[i] += 1;
                if choice[i] < self.closed[from[i] as usize].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    fn solve(&mut self, k: usize) -> Result<()> {
        if self.tables.contains_key(&k) {
            return Ok(());
        }
        let n = self.g.n();
        let states = multiset_count(n, k)
            .and_then(|m| m.checked_mul(n))
            .ok_or_else(|| Error::SizeLimit("cop game state count overflows".into()))?;
        if states > STATE_BUDGET {
            return Err(Error::SizeLimit(format!(
                "cop game needs {} states, budget is {}",
                states, STATE_BUDGET
            )));
        }
        let multisets = Self::enumerate_multisets(n, k);
        let index: HashMap<u128, u32> = multisets
            .iter()
            .enumerate()
            .map(|(i, m)| (pack(m), i as u32))
            .collect();
        let table = GameTable {
            multisets,
            index,
            value_cop: vec![INF; 0],
        };
        let m_count = table.multisets.len();
        let mut value_cop = vec![INF; m_count * n];
        let mut value_rob = vec![INF; m_count * n];
        // Robber-to-move nodes finalize once every successor has; count
        // successors down as cop nodes settle.
        let mut rob_pending: Vec<u32> = (0..m_count * n)
            .map(|id| self.closed[id % n].len() as u32)
            .collect();

        // Bucket queue keyed by value; true marks a cop-to-move node.
        let mut buckets: Vec<Vec<(u32, bool)>> = vec![Vec::new()];
        for (mi, mset) in table.multisets.iter().enumerate() {
            for &c in mset {
                let id = (mi * n + c as usize) as u32;
                if value_cop[id as usize] == INF {
                    value_cop[id as usize] = 0;
                    buckets[0].push((id, true));
                }
                if value_rob[id as usize] == INF {
                    value_rob[id as usize] = 0;
                    buckets[0].push((id, false));
                }
            }
        }

        let mut v = 0usize;
        while v < buckets.len() {
            let mut i = 0;
            while i < buckets[v].len() {
                let (id, is_cop) = buckets[v][i];
                i += 1;
                let (mi, r) = ((id as usize) / n, (id as usize) % n);
                if is_cop {
                    // value = v settles robber predecessors (m, r2) for
                    // every r2 that can move to r, i.e. r2 in N[r].
                    for &r2 in &self.closed[r] {
                        let pid = mi * n + r2 as usize;
                        if value_rob[pid] != INF {
                            continue;
                        }
                        rob_pending[pid] -= 1;
                        if rob_pending[pid] == 0 {
                            // Successors settle in nondecreasing order, so
                            // the last one carries the max.
                            value_rob[pid] = v as u32;
                            while buckets.len() <= v {
                                buckets.push(Vec::new());
                            }
                            buckets[v].push((pid as u32, false));
                        }
                    }
                } else {
                    // Cop predecessors are exactly the move preimages,
                    // which by symmetry are the moves of this multiset.
                    let from = table.multisets[mi].clone();
                    let mut targets = Vec::new();
                    self.for_each_move(&table, &from, |m2| targets.push(m2));
                    for m2 in targets {
                        let pid = m2 as usize * n + r;
                        if value_cop[pid] == INF {
                            value_cop[pid] = (v + 1) as u32;
                            while buckets.len() <= v + 1 {
                                buckets.push(Vec::new());
                            }
                            buckets[v + 1].push((pid as u32, true));
                        }
                    }
                }
            }
            v += 1;
        }

        let table = GameTable {
            value_cop,
            ..table
        };
        self.tables.insert(k, table);
        Ok(())
    }

    fn dominates(&self, s: &[u8]) -> bool {
        let mut covered = VertexSet::EMPTY;
        for &v in s {
            covered = covered.union(self.g.closed_neighbors(v as usize));
        }
        covered == self.g.full_set()
    }

    /// Optimal rounds to capture from initial cop placement `s`
    /// (a multiset); None is escape.
    pub fn capture_time_multiset(&mut self, s: &[u8]) -> Result<Option<usize>> {
        if s.is_empty() {
            return Err(Error::InvalidParameter("at least one cop required".into()));
        }
        let n = self.g.n();
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        let occupied = VertexSet::from_vertices(sorted.iter().map(|&v| v as usize));
        if occupied == self.g.full_set() {
            return Ok(Some(0));
        }
        if self.dominates(&sorted) {
            return Ok(Some(1));
        }
        self.solve(sorted.len())?;
        let table = &self.tables[&sorted.len()];
        let mi = table.index[&pack(&sorted)] as usize;
        let mut worst = 0u32;
        for r in 0..n {
            if occupied.contains(r) {
                continue;
            }
            worst = worst.max(table.value_cop[mi * n + r]);
        }
        Ok(if worst == INF {
            None
        } else {
            Some(worst as usize)
        })
    }

    pub fn capture_time(&mut self, s: VertexSet) -> Result<Option<usize>> {
        let mset: Vec<u8> = s.iter().map(|v| v as u8).collect();
        self.capture_time_multiset(&mset)
    }

    /// min over k-subsets of the capture time, with a witness.
    pub fn capt_k(&mut self, k: usize) -> Result<(Option<usize>, Option<VertexSet>)> {
        if k == 0 || k > self.g.n() {
            return Err(Error::InvalidParameter(format!(
                "cop count {} out of range 1..={}",
                k,
                self.g.n()
            )));
        }
        let mut best: Option<(usize, VertexSet)> = None;
        for s in KSubsets::new(self.g.n(), k) {
            if let Some(t) = self.capture_time(s)? {
                if best.as_ref().map_or(true, |&(b, _)| t < b) {
                    best = Some((t, s));
                    if t == 0 {
                        break;
                    }
                }
            }
        }
        Ok(match best {
            Some((t, s)) => (Some(t), Some(s)),
            None => (None, None),
        })
    }

    /// Least number of cops with a finite capture time.
    pub fn cop_number(&mut self) -> Result<usize> {
        for k in 1..=self.g.n() {
            if self.capt_k(k)?.0.is_some() {
                return Ok(k);
            }
        }
        unreachable!("n cops cover every vertex");
    }

    /// Per-robber-vertex cop response from a solved table, for debugging.
    pub fn strategy_lines(&mut self, s: VertexSet) -> Result<Vec<String>> {
        let sorted: Vec<u8> = s.iter().map(|v| v as u8).collect();
        let n = self.g.n();
        self.solve(sorted.len())?;
        let table = &self.tables[&sorted.len()];
        let mi = table.index[&pack(&sorted)] as usize;
        let mut lines = Vec::new();
        for r in 0..n {
            if s.contains(r) {
                continue;
            }
            let val = table.value_cop[mi * n + r];
            if val == INF {
                lines.push(format!("robber {}: escape", r));
                continue;
            }
            // Recompute the minimizing move; ties go to the first found.
            let mut best: Option<(u32, Vec<u8>)> = None;
            let from = table.multisets[mi].clone();
            let mut cands = Vec::new();
            self.for_each_move(table, &from, |m2| cands.push(m2));
            for m2 in cands {
                let succ = &table.multisets[m2 as usize];
                let v = if succ.contains(&(r as u8)) {
                    0
                } else {
                    // Robber replies with its own max.
                    self.closed[r]
                        .iter()
                        .map(|&r2| {
                            if succ.contains(&r2) {
                                0
                            } else {
                                table.value_cop[m2 as usize * n + r2 as usize]
                            }
                        })
                        .max()
                        .unwrap()
                };
                if best.as_ref().map_or(true, |&(b, _)| v < b) {
                    best = Some((v, succ.clone()));
                }
            }
            let (_, mv) = best.unwrap();
            lines.push(format!("robber {}: cops to {:?} ({} rounds)", r, mv, val));
        }
        Ok(lines)
    }
}

pub fn capture_time(g: &Graph, s: VertexSet) -> Result<Option<usize>> {
    CopSolver::new(g).capture_time(s)
}

pub fn capt_k(g: &Graph, k: usize) -> Result<(Option<usize>, Option<VertexSet>)> {
    CopSolver::new(g).capt_k(k)
}

pub fn cop_number(g: &Graph) -> Result<usize> {
    CopSolver::new(g).cop_number()
}

/// Both cop product throttling numbers with witnesses:
/// th_c^x = min k(1 + capt_k) over k >= c(G), and
/// th_c^* = min k * capt_k over c(G) <= k < n.
#[derive(Clone, Debug)]
pub struct CopThrottling {
    pub th_times: usize,
    pub th_times_witness: VertexSet,
    pub th_star: Option<usize>,
    pub th_star_witness: Option<VertexSet>,
}

pub fn th_times_cops(g: &Graph) -> Result<CopThrottling> {
    let n = g.n();
    let mut solver = CopSolver::new(g);
    let c = solver.cop_number()?;
    // k = n captures immediately: value n.
    let mut best = (n, g.full_set());
    let mut best_star: Option<(usize, VertexSet)> = None;
    for k in c..n {
        let star_bound = best_star.map(|(v, _)| v).unwrap_or(usize::MAX);
        if 2 * k >= best.0 && k >= star_bound {
            break;
        }
        let (capt, witness) = solver.capt_k(k)?;
        let (capt, witness) = match (capt, witness) {
            (Some(t), Some(w)) => (t, w),
            _ => continue,
        };
        let value = k * (1 + capt);
        if value < best.0 {
            best = (value, witness);
        }
        let star_value = k * capt;
        if star_value < star_bound {
            best_star = Some((star_value, witness));
        }
    }
    Ok(CopThrottling {
        th_times: best.0,
        th_times_witness: best.1,
        th_star: best_star.map(|(v, _)| v),
        th_star_witness: best_star.map(|(_, w)| w),
    })
}
