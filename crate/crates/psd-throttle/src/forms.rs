//! Closed-form parameter values for standard graph families, the ceiling
//! lemmas behind the cycle formula, and an inequality report that checks
//! every general bound against searched values. All verdicts use exact
//! integer arithmetic; the logarithmic bound is decided with big-integer
//! power comparisons, never floats.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::metrics::{k_radius, metrics};
use crate::graph::{encode_graph6, Graph};
use crate::psd::{forcing_forest, propagate};
use crate::throttle::{pt_k, SearchRecord};

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

/// pt(C_n, k) for 2 <= k < n: the longest white arc shrinks from both ends.
pub fn pt_cycle_k(n: usize, k: usize) -> usize {
    assert!(2 <= k && k < n);
    ceil_div(n as i64 - k as i64, 2 * k as i64) as usize
}

/// th^x(C_n) for n >= 4: three vertices win only when n = 12i + 3 (i >= 1),
/// otherwise two antipodal-ish vertices are optimal.
pub fn th_times_cycle(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "cycle formula needs n >= 4, got {} (C_3 is complete)",
            n
        )));
    }
    let n = n as i64;
    Ok(if n >= 15 && n % 12 == 3 {
        (3 * (1 + ceil_div(n - 3, 6))) as usize
    } else {
        (2 * (1 + ceil_div(n - 2, 4))) as usize
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma2Branch {
    StrictLess,
    GreaterOrEqual,
}

#[derive(Clone, Copy, Debug)]
pub struct CycleLemmas {
    /// k(1 + ceil((n-k)/2k)) >= 2 + 2 ceil((n-2)/4); stated for k >= 4.
    pub lemma1_applicable: bool,
    pub lemma1_holds: bool,
    /// How 3(1 + ceil((n-3)/6)) compares against 2 + 2 ceil((n-2)/4);
    /// strictly less exactly when n = 3 (mod 12).
    pub lemma2_branch: Lemma2Branch,
}

pub fn cycle_floor_lemmas(n: usize, k: usize) -> CycleLemmas {
    let (n, k) = (n as i64, k as i64);
    let rhs = 2 + 2 * ceil_div(n - 2, 4);
    let lhs1 = k * (1 + ceil_div(n - k, 2 * k));
    let lhs2 = 3 * (1 + ceil_div(n - 3, 6));
    CycleLemmas {
        lemma1_applicable: k >= 4,
        lemma1_holds: lhs1 >= rhs,
        lemma2_branch: if lhs2 < rhs {
            Lemma2Branch::StrictLess
        } else {
            Lemma2Branch::GreaterOrEqual
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Known(usize),
    /// Open: no formula is established.
    Unknown,
    /// The parameter does not exist for this graph (no proper forcing set).
    Undefined,
}

impl Value {
    pub fn known(self) -> Option<usize> {
        match self {
            Value::Known(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
    CompleteMultipartite,
    Hypercube,
    ComplementCycle,
    ComplementPath,
}

/// Closed-form values for one family member. `pt_plus` is the optimal
/// propagation time at the minimum forcing-set size.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyRecord {
    pub family: FamilyKind,
    pub params: Vec<usize>,
    pub z_plus: usize,
    pub pt_plus: usize,
    pub th_times: usize,
    pub th_star: Value,
}

fn record(
    family: FamilyKind,
    params: &[usize],
    z: usize,
    pt: usize,
    tx: usize,
    ts: Value,
) -> FamilyRecord {
    FamilyRecord {
        family,
        params: params.to_vec(),
        z_plus: z,
        pt_plus: pt,
        th_times: tx,
        th_star: ts,
    }
}

fn complete_record(family: FamilyKind, params: &[usize], n: usize) -> FamilyRecord {
    if n == 1 {
        record(family, params, 1, 0, 1, Value::Undefined)
    } else {
        record(family, params, n - 1, 1, n, Value::Known(n - 1))
    }
}

/// Formula values for a family member. Complement rows need n >= 5.
pub fn family_values(family: FamilyKind, params: &[usize]) -> Result<FamilyRecord> {
    let wrong_arity = |want: &str| {
        Err(Error::InvalidParameter(format!(
            "{:?} takes {}, got {:?}",
            family, want, params
        )))
    };
    match family {
        FamilyKind::Complete => match params {
            &[n] if n >= 1 => Ok(complete_record(family, params, n)),
            _ => wrong_arity("one parameter n >= 1"),
        },
        FamilyKind::Cycle => match params {
            &[3] => Ok(complete_record(family, params, 3)),
            &[n] if n >= 4 => {
                let ni = n as i64;
                Ok(record(
                    family,
                    params,
                    2,
                    ceil_div(ni - 2, 4) as usize,
                    th_times_cycle(n)?,
                    Value::Known(ceil_div(ni, 3) as usize),
                ))
            }
            _ => wrong_arity("one parameter n >= 3"),
        },
        FamilyKind::Path => match params {
            &[1] => Ok(complete_record(family, params, 1)),
            &[n] if n >= 2 => {
                let half = ceil_div(n as i64 - 1, 2) as usize;
                Ok(record(
                    family,
                    params,
                    1,
                    half,
                    1 + half,
                    Value::Known(ceil_div(n as i64, 3) as usize),
                ))
            }
            _ => wrong_arity("one parameter n >= 1"),
        },
        FamilyKind::CompleteBipartite => match params {
            &[s, t] if s >= 1 && t >= 1 => {
                if s == t && s == 1 {
                    return Ok(complete_record(family, params, 2));
                }
                let m = s.min(t);
                Ok(record(family, params, m, 1, 2 * m, Value::Known(m)))
            }
            _ => wrong_arity("two parameters s, t >= 1"),
        },
        FamilyKind::CompleteMultipartite => {
            if params.len() < 2 || params.iter().any(|&p| p == 0) {
                return wrong_arity("at least two positive part sizes");
            }
            let n: usize = params.iter().sum();
            if n == 2 {
                return Ok(complete_record(family, params, 2));
            }
            let m = n - params.iter().max().unwrap();
            Ok(record(
                family,
                params,
                m,
                1,
                n.min(2 * m),
                Value::Known(m),
            ))
        }
        FamilyKind::Hypercube => match params {
            &[0] => Ok(complete_record(family, params, 1)),
            &[d] if d >= 1 => Ok(record(
                family,
                params,
                1 << (d - 1),
                1,
                1 << d,
                Value::Known(1 << (d - 1)),
            )),
            _ => wrong_arity("one parameter d >= 0"),
        },
        FamilyKind::ComplementCycle | FamilyKind::ComplementPath => match params {
            &[n] if n >= 5 => Ok(record(
                family,
                params,
                n - 3,
                1,
                n.min(2 * (n - 3)),
                Value::Known(n - 3),
            )),
            _ => wrong_arity("one parameter n >= 5"),
        },
    }
}

/// Tree values: everything follows from the radius. No formula is known
/// for the no-initial-cost number.
pub fn tree_values(t: &Graph) -> Result<FamilyRecord> {
    if !t.is_connected() || t.edge_count() != t.n() - 1 {
        return Err(Error::InvalidParameter("not a tree".into()));
    }
    if t.n() == 1 {
        return Ok(complete_record(FamilyKind::Complete, &[1], 1));
    }
    let rad = metrics(t).radius.unwrap();
    Ok(record(
        FamilyKind::Path, // placeholder kind is never used for trees
        &[t.n()],
        1,
        rad,
        1 + rad,
        Value::Unknown,
    ))
}

/// One evaluated inequality. `applicable = false` rows record why their
/// hypothesis fails and never count as violations.
#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub lhs: i64,
    pub relation: &'static str,
    pub rhs: i64,
    pub holds: bool,
    pub applicable: bool,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn violations(&self) -> Vec<&BoundEntry> {
        self.entries
            .iter()
            .filter(|e| e.applicable && !e.holds)
            .collect()
    }

    pub fn all_hold(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("graph\tbound\tlhs\trelation\trhs\tholds\tapplicable\tnote\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                self.graph_id, e.name, e.lhs, e.relation, e.rhs, e.holds, e.applicable, e.note
            ));
        }
        out
    }
}

fn entry(name: &str, lhs: i64, relation: &'static str, rhs: i64, note: &str) -> BoundEntry {
    let holds = match relation {
        ">=" => lhs >= rhs,
        "<=" => lhs <= rhs,
        "==" => lhs == rhs,
        _ => unreachable!(),
    };
    BoundEntry {
        name: name.into(),
        lhs,
        relation,
        rhs,
        holds,
        applicable: true,
        note: note.into(),
    }
}

fn inapplicable(name: &str, reason: &str) -> BoundEntry {
    BoundEntry {
        name: name.into(),
        lhs: 0,
        relation: "==",
        rhs: 0,
        holds: true,
        applicable: false,
        note: reason.into(),
    }
}

/// Smallest integer r with r >= z * (1 + log_{d-1}(p/q)), decided by
/// comparing (d-1)^(r-z) * q^z against p^z in exact integers. Requires
/// d >= 3; p/q >= 1 always holds for p = (d-2)n + 2z, q = dz.
fn log_bound_ceiling(d: usize, n: usize, z: usize) -> usize {
    let p = BigUint::from((d - 2) * n + 2 * z);
    let q = BigUint::from(d * z);
    let base = BigUint::from(d - 1);
    let p_pow = p.pow(z as u32);
    let q_pow = q.pow(z as u32);
    let mut r = z;
    let mut power = q_pow;
    while power < p_pow {
        power *= &base;
        r += 1;
    }
    r
}

/// Exact RHS of the degree-propagation lemma: the largest vertex count a
/// set of size s can force within p rounds at maximum degree d.
fn degree_capacity(d: usize, s: usize, p: usize) -> BigUint {
    let s = BigUint::from(s);
    if d == 2 {
        s * BigUint::from(1 + 2 * p)
    } else {
        // s * (1 + (d(d-1)^p - d)/(d-2)); the numerator is divisible by d-2.
        let d_big = BigUint::from(d);
        let grown = &d_big * BigUint::from(d - 1).pow(p as u32) - &d_big;
        s * (BigUint::from(1u32) + grown / BigUint::from(d - 2))
    }
}

/// Evaluate every general inequality against the searched values.
pub fn bound_report(g: &Graph, searched: &SearchRecord) -> Result<BoundReport> {
    let n = g.n();
    let z = searched.z_plus;
    let tx = searched.th_times.value as i64;
    let d = g.max_degree();
    let connected = g.is_connected();
    let mut entries = Vec::new();

    // th^x >= 1 + rad(G), equality on trees.
    if connected {
        let rad = metrics(g).radius.unwrap();
        entries.push(entry(
            "radius",
            tx,
            ">=",
            1 + rad as i64,
            "equality holds on every tree",
        ));

        // The optimal witness's forcing trees reach the whole graph:
        // |S| - 1 + |S| * max tree radius >= rad(G).
        let s = searched.th_times.witness_set;
        let trace = propagate(g, s);
        let forest = forcing_forest(g, &trace)?;
        let k = s.len() as i64;
        entries.push(entry(
            "forest",
            k - 1 + k * forest.max_radius() as i64,
            ">=",
            rad as i64,
            "forcing trees of the optimal witness",
        ));
    } else {
        entries.push(inapplicable("radius", "graph is disconnected"));
        entries.push(inapplicable("forest", "graph is disconnected"));
    }

    // th^x <= 2(n - alpha(G)); an independent complement forces in 1 round.
    if connected && n >= 2 {
        let alpha = g.independence_number()? as i64;
        entries.push(entry(
            "alpha",
            tx,
            "<=",
            2 * (n as i64 - alpha),
            "tight on complete bipartite graphs",
        ));
    } else {
        entries.push(inapplicable("alpha", "needs a connected graph on >= 2 vertices"));
    }

    // Z >= n/2 pins th^x to exactly n.
    if 2 * z >= n {
        entries.push(entry("extreme", tx, "==", n as i64, "Z at least n/2"));
    } else {
        entries.push(inapplicable("extreme", "Z below n/2"));
    }

    // Degree-propagation capacity on the optimal witness.
    if d >= 2 {
        let s = searched.th_times.witness_set.len();
        let p = searched.th_times.witness_pt;
        let capacity = degree_capacity(d, s, p);
        let holds = BigUint::from(n) <= capacity;
        let rhs_display = u64::try_from(&capacity)
            .map(|v| v.min(i64::MAX as u64) as i64)
            .unwrap_or(i64::MAX);
        entries.push(BoundEntry {
            name: "degree_capacity".into(),
            lhs: n as i64,
            relation: "<=",
            rhs: rhs_display,
            holds,
            applicable: true,
            note: format!("capacity of {} vertices forcing {} rounds at max degree {}", s, p, d),
        });
    } else {
        entries.push(inapplicable("degree_capacity", "max degree below 2"));
    }

    // Max degree exactly 2: th^x >= ceil((Z + n)/2).
    if d == 2 {
        entries.push(entry(
            "two_regular",
            tx,
            ">=",
            ceil_div((z + n) as i64, 2),
            "tight on paths",
        ));
        entries.push(inapplicable("log", "max degree below 3"));
    } else if d >= 3 {
        entries.push(inapplicable("two_regular", "max degree is not 2"));
        entries.push(entry(
            "log",
            tx,
            ">=",
            log_bound_ceiling(d, n, z) as i64,
            "ceiling decided by integer power comparison",
        ));
    } else {
        entries.push(inapplicable("two_regular", "max degree below 2"));
        entries.push(inapplicable("log", "max degree below 3"));
    }

    // pt(G, k) >= rad_k(G) for every set size that forces.
    if connected {
        for k in z..n {
            let (pt, _) = pt_k(g, k, 1)?;
            if let Some(p) = pt {
                let rk = k_radius(g, k)?;
                entries.push(entry(
                    &format!("k_radius[{}]", k),
                    p as i64,
                    ">=",
                    rk as i64,
                    "propagation cannot beat distance",
                ));
            }
        }
    } else {
        entries.push(inapplicable("k_radius", "graph is disconnected"));
    }

    Ok(BoundReport {
        graph_id: encode_graph6(g),
        entries,
    })
}

/// Subdivision and deletion inequalities, instantiated with searched
/// values on G, the subdivided graph, and the deleted graph.
pub fn operation_bound_checks(g: &Graph, e: (usize, usize), workers: usize) -> Result<BoundReport> {
    use crate::throttle::th_times;
    if !g.has_edge(e.0, e.1) {
        return Err(Error::EdgeNotPresent(e.0, e.1));
    }
    let base = th_times(g, workers)?;
    let s = base.witness_set;
    let k = s.len();
    let pt_s = base.witness_pt;
    let tx = base.value;

    let mut entries = Vec::new();

    let subdivided = g.subdivide_edge(e.0, e.1)?;
    // The same set still forces after subdividing, one round slower at worst.
    let sub_trace = propagate(&subdivided, s);
    let sub_pt = sub_trace.prop_time();
    entries.push(entry(
        "subdivision_same_set",
        sub_pt.map(|p| p as i64).unwrap_or(i64::MAX),
        "<=",
        (pt_s + 1) as i64,
        "witness of G reused in the subdivision",
    ));
    let tx_sub = th_times(&subdivided, workers)?.value;
    entries.push(entry(
        "subdivision",
        tx_sub as i64,
        "<=",
        (tx + k).min(tx + pt_s + 1) as i64,
        "optimal value after subdividing one edge",
    ));

    let deleted = g.delete_edge(e.0, e.1)?;
    let tx_del = th_times(&deleted, workers)?.value;
    entries.push(entry(
        "deletion",
        tx_del as i64,
        "<=",
        (tx + 1 + pt_s) as i64,
        "optimal value after deleting one edge",
    ));

    Ok(BoundReport {
        graph_id: encode_graph6(g),
        entries,
    })
}

/// Cartesian product inequalities. With `exhaustive` set (product order
/// <= 12) every forcing set of the product is projected and rechecked;
/// otherwise only the searched optimum is used.
pub fn product_bound_checks(
    g: &Graph,
    h: &Graph,
    workers: usize,
    exhaustive: bool,
) -> Result<BoundReport> {
    use crate::graph::{Factor, VertexSet};
    use crate::psd::prop_time;
    use crate::throttle::th_times;
    let p = g.cartesian_product(h)?;
    let tx_g = th_times(g, workers)?.value;
    let tx_h = th_times(h, workers)?.value;
    let tx_p = th_times(&p, workers)?.value;
    let mut entries = vec![
        entry(
            "product_lower",
            tx_p as i64,
            ">=",
            tx_g.max(tx_h) as i64,
            "product dominates both factors",
        ),
        entry(
            "product_upper",
            tx_p as i64,
            "<=",
            (tx_g * h.n()).min(tx_h * g.n()) as i64,
            "one optimal layer per factor vertex",
        ),
    ];
    if exhaustive {
        if p.n() > 12 {
            return Err(Error::SizeLimit(
                "exhaustive projection check limited to products on 12 vertices".into(),
            ));
        }
        // Projecting any forcing set of the product onto a factor forces
        // the factor at least as fast.
        let mut worst_ok = true;
        for mask in 1..(1u64 << p.n()) {
            let s = VertexSet(mask);
            if let Some(pt_prod) = prop_time(&p, s) {
                let sg = p.project_to_factor(s, Factor::Left)?;
                match prop_time(g, sg) {
                    Some(pt_g) if pt_g <= pt_prod => {}
                    _ => {
                        worst_ok = false;
                        break;
                    }
                }
            }
        }
        entries.push(BoundEntry {
            name: "product_projection".into(),
            lhs: 0,
            relation: "==",
            rhs: 0,
            holds: worst_ok,
            applicable: true,
            note: "every forcing set projects to a faster forcing set".into(),
        });
    }
    Ok(BoundReport {
        graph_id: format!("{} x {}", encode_graph6(g), encode_graph6(h)),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::throttle::{search_all, th_times};

    #[test]
    fn cycle_formula_spots() {
        assert_eq!(th_times_cycle(10).unwrap(), 6);
        assert_eq!(th_times_cycle(15).unwrap(), 9);
        assert_eq!(th_times_cycle(27).unwrap(), 15);
        assert!(th_times_cycle(3).is_err());
    }

    #[test]
    fn cycle_formula_vs_reduced_search() {
        // For large n, minimize k(1 + pt(C_n, k)) using the closed pt form.
        for n in [20usize, 24, 27, 39, 100] {
            let best = (2..n)
                .map(|k| k * (1 + pt_cycle_k(n, k)))
                .min()
                .unwrap();
            assert_eq!(th_times_cycle(n).unwrap(), best, "n={}", n);
        }
    }

    #[test]
    fn lemma_spots() {
        let l = cycle_floor_lemmas(15, 3);
        assert_eq!(l.lemma2_branch, Lemma2Branch::StrictLess);
        assert!(cycle_floor_lemmas(10, 4).lemma1_holds);
        assert!(cycle_floor_lemmas(7, 5).lemma1_holds);
    }

    #[test]
    fn lemma_sweep() {
        for n in 1..=500 {
            for k in 4..=50 {
                let l = cycle_floor_lemmas(n, k);
                assert!(l.lemma1_holds, "lemma1 fails at n={} k={}", n, k);
                let expect = if n % 12 == 3 {
                    Lemma2Branch::StrictLess
                } else {
                    Lemma2Branch::GreaterOrEqual
                };
                assert_eq!(l.lemma2_branch, expect, "lemma2 branch at n={}", n);
            }
        }
    }

    #[test]
    fn family_spots() {
        let k6 = family_values(FamilyKind::Complete, &[6]).unwrap();
        assert_eq!(
            (k6.z_plus, k6.pt_plus, k6.th_times, k6.th_star),
            (5, 1, 6, Value::Known(5))
        );
        let q4 = family_values(FamilyKind::Hypercube, &[4]).unwrap();
        assert_eq!(
            (q4.z_plus, q4.pt_plus, q4.th_times, q4.th_star),
            (8, 1, 16, Value::Known(8))
        );
        let c7bar = family_values(FamilyKind::ComplementCycle, &[7]).unwrap();
        assert_eq!(
            (c7bar.z_plus, c7bar.pt_plus, c7bar.th_times, c7bar.th_star),
            (4, 1, 7, Value::Known(4))
        );
        assert!(family_values(FamilyKind::ComplementCycle, &[4]).is_err());
    }

    #[test]
    fn family_matches_search_examples() {
        let checks: Vec<(FamilyKind, Vec<usize>, Graph)> = vec![
            (
                FamilyKind::Cycle,
                vec![9],
                generate(Family::Cycle, &[9], None).unwrap(),
            ),
            (
                FamilyKind::CompleteBipartite,
                vec![3, 4],
                generate(Family::CompleteBipartite, &[3, 4], None).unwrap(),
            ),
            (
                FamilyKind::CompleteMultipartite,
                vec![2, 2, 2],
                generate(Family::CompleteMultipartite, &[2, 2, 2], None).unwrap(),
            ),
            (
                FamilyKind::ComplementPath,
                vec![7],
                generate(Family::Path, &[7], None).unwrap().complement(),
            ),
        ];
        for (kind, params, g) in checks {
            let f = family_values(kind, &params).unwrap();
            let r = search_all(&g, 1).unwrap();
            assert_eq!(f.z_plus, r.z_plus, "{:?}", kind);
            assert_eq!(f.th_times, r.th_times.value, "{:?}", kind);
            assert_eq!(
                f.th_star.known(),
                r.th_star.as_ref().map(|w| w.value),
                "{:?}",
                kind
            );
            let (pt, _) = pt_k(&g, f.z_plus, 1).unwrap();
            assert_eq!(pt, Some(f.pt_plus), "{:?}", kind);
        }
    }

    #[test]
    fn tree_record() {
        let star = generate(Family::Star, &[5], None).unwrap();
        let t = tree_values(&star).unwrap();
        assert_eq!((t.z_plus, t.pt_plus, t.th_times), (1, 1, 2));
        assert_eq!(t.th_star, Value::Unknown);
        assert!(tree_values(&generate(Family::Cycle, &[4], None).unwrap()).is_err());
    }

    #[test]
    fn log_bound_k4() {
        // d = 3, n = 4, z = 3: ceiling of 3(1 + log_2(10/9)) is 4.
        assert_eq!(log_bound_ceiling(3, 4, 3), 4);
    }

    #[test]
    fn report_examples() {
        let p5 = generate(Family::Path, &[5], None).unwrap();
        let rep = bound_report(&p5, &search_all(&p5, 1).unwrap()).unwrap();
        assert!(rep.all_hold());
        let radius = rep.entries.iter().find(|e| e.name == "radius").unwrap();
        assert_eq!((radius.lhs, radius.rhs), (3, 3));

        let k34 = generate(Family::CompleteBipartite, &[3, 4], None).unwrap();
        let rep = bound_report(&k34, &search_all(&k34, 1).unwrap()).unwrap();
        assert!(rep.all_hold());
        let alpha = rep.entries.iter().find(|e| e.name == "alpha").unwrap();
        assert_eq!((alpha.lhs, alpha.rhs), (6, 6));

        let k4 = generate(Family::Complete, &[4], None).unwrap();
        let rep = bound_report(&k4, &search_all(&k4, 1).unwrap()).unwrap();
        assert!(rep.all_hold());
        let log = rep.entries.iter().find(|e| e.name == "log").unwrap();
        assert_eq!((log.lhs, log.rhs), (4, 4));
    }

    #[test]
    fn report_survives_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let rep = bound_report(&g, &search_all(&g, 1).unwrap()).unwrap();
        assert!(rep.all_hold());
        assert!(rep.entries.iter().any(|e| !e.applicable));
    }

    #[test]
    fn figure_tree_operations() {
        // Two-level spider: root 0, inner vertices 1 and 2, two leaves each.
        let t = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(th_times(&t, 1).unwrap().value, 3);
        let rep = operation_bound_checks(&t, (2, 6), 1).unwrap();
        assert!(rep.all_hold());
        let sub = th_times(&t.subdivide_edge(2, 6).unwrap(), 1).unwrap().value;
        let del = th_times(&t.delete_edge(2, 6).unwrap(), 1).unwrap().value;
        assert_eq!((sub, del), (4, 6));
    }

    #[test]
    fn grid_product_checks() {
        let p2 = generate(Family::Path, &[2], None).unwrap();
        let p4 = generate(Family::Path, &[4], None).unwrap();
        let rep = product_bound_checks(&p2, &p4, 1, true).unwrap();
        assert!(rep.all_hold());
        let prod = p2.cartesian_product(&p4).unwrap();
        assert_eq!(th_times(&prod, 1).unwrap().value, 6);
    }

    #[test]
    fn report_serializes() {
        let p5 = generate(Family::Path, &[5], None).unwrap();
        let rep = bound_report(&p5, &search_all(&p5, 1).unwrap()).unwrap();
        let tsv = rep.to_tsv();
        assert!(tsv.starts_with("graph\tbound"));
        assert!(serde_json::to_string(&rep).unwrap().contains("radius"));
    }
}
