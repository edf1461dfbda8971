//! Independent brute-force reference implementations used to validate the
//! fast algorithms on small instances. Everything here is exponential and
//! refuses inputs beyond hard size limits.

use crate::graph::{val, weight_of, EdgeId, FreeCut, Graph};
use crate::mincut::{edge_connectivity_at_least, graph_is_k_connected};
use crate::simplex;
use crate::{Error, Result};

/// All proper vertex sides, canonicalized so the last vertex is outside.
pub(crate) fn proper_sides(n: usize) -> impl Iterator<Item = Vec<bool>> {
    assert!((2..=16).contains(&n), "side enumeration limited to n <= 16");
    (1u32..(1 << (n - 1)))
        .map(move |mask| (0..n).map(|v| v < n - 1 && (mask >> v) & 1 == 1).collect())
}

/// Exact global minimum cut by full enumeration of vertex sides.
pub fn enumerate_min_cut(g: &Graph, w: &[f64]) -> (f64, Vec<bool>) {
    assert!(g.n() >= 2);
    let mut best = f64::INFINITY;
    let mut best_side = Vec::new();
    for side in proper_sides(g.n()) {
        let cut = g.cut_edges(&side).unwrap();
        let value = weight_of(w, &cut);
        if value < best {
            best = value;
            best_side = side;
        }
    }
    (best, best_side)
}

fn subsets_up_to(items: &[EdgeId], max_size: usize) -> Vec<Vec<EdgeId>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<EdgeId>> = vec![Vec::new()];
    for _ in 0..max_size {
        let mut next = Vec::new();
        for base in &frontier {
            let start = base.last().map_or(0, |&last| {
                items.iter().position(|&x| x == last).unwrap() + 1
            });
            for &item in &items[start..] {
                let mut s = base.clone();
                s.push(item);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Exact minimum normalized free cut by enumerating every side and every
/// free subset of size below k.
pub fn brute_free_cut(g: &Graph, w: &[f64], k: u32) -> Result<FreeCut> {
    if g.n() > 16 {
        return Err(Error::RefusedScale(format!(
            "brute free cut limited to n <= 16, got {}",
            g.n()
        )));
    }
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::InfeasibleGraph);
    }
    let mut best: Option<FreeCut> = None;
    for side in proper_sides(g.n()) {
        let cut = g.cut_edges(&side)?;
        if cut.is_empty() {
            continue;
        }
        let max_free = (k as usize - 1).min(cut.len());
        for free in subsets_up_to(&cut, max_free) {
            let value = val(w, &cut, &free, k);
            if best.as_ref().map_or(true, |b| value < b.value) {
                best = Some(FreeCut {
                    side: side.clone(),
                    cut_edges: cut.clone(),
                    free_edges: free,
                    value,
                });
            }
        }
    }
    best.ok_or(Error::InfeasibleGraph)
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
}

fn check_lp_scale(g: &Graph) -> Result<()> {
    if g.n() > 8 || g.k() > 3 || g.m() > 22 {
        return Err(Error::RefusedScale(format!(
            "exact LP limited to n <= 8, k <= 3, m <= 22; got n = {}, k = {}, m = {}",
            g.n(),
            g.k(),
            g.m()
        )));
    }
    if !graph_is_k_connected(g) {
        return Err(Error::Infeasible(g.k()));
    }
    Ok(())
}

/// Exact optimum of the covering LP with knapsack-covering rows: for every
/// proper side S and every free set F inside delta(S) with |F| < k,
/// sum_{C \ F} x_e >= k - |F|, x >= 0. Solved through its dual so the
/// edge-indexed row duals recover the primal point directly.
pub fn exact_small_lp(g: &Graph) -> Result<LpSolution> {
    check_lp_scale(g)?;
    let m = g.m();
    if g.n() < 2 {
        return Ok(LpSolution { x: vec![0.0; m], objective: 0.0 });
    }
    let k = g.k();
    let mut rows = vec![Vec::new(); m];
    let mut objective = Vec::new();
    for side in proper_sides(g.n()) {
        let cut = g.cut_edges(&side)?;
        let max_free = (k as usize - 1).min(cut.len());
        for free in subsets_up_to(&cut, max_free) {
            for e in 0..m {
                let covered = cut.contains(&e) && !free.contains(&e);
                rows[e].push(if covered { 1.0 } else { 0.0 });
            }
            objective.push((k as usize - free.len()) as f64);
        }
    }
    let res = simplex::solve_max(&rows, &g.costs(), &objective);
    Ok(LpSolution { x: res.row_duals, objective: res.value })
}

/// Exact optimum of the plain cut LP with box constraints: every cut covers
/// at least k, 0 <= x <= 1. Equal in value to [`exact_small_lp`]; kept as an
/// independent cross-check.
pub fn exact_small_lp_box(g: &Graph) -> Result<LpSolution> {
    check_lp_scale(g)?;
    let m = g.m();
    if g.n() < 2 {
        return Ok(LpSolution { x: vec![0.0; m], objective: 0.0 });
    }
    let k = g.k() as f64;
    // Dual of min c^T x, cut rows >= k, -x_e >= -1:
    // max k * sum_S y_S - sum_e z_e with y_S column support delta(S).
    let mut rows = vec![Vec::new(); m];
    let mut objective = Vec::new();
    for side in proper_sides(g.n()) {
        let cut = g.cut_edges(&side)?;
        for e in 0..m {
            rows[e].push(if cut.contains(&e) { 1.0 } else { 0.0 });
        }
        objective.push(k);
    }
    for ze in 0..m {
        for (e, row) in rows.iter_mut().enumerate() {
            row.push(if e == ze { -1.0 } else { 0.0 });
        }
        objective.push(-1.0);
    }
    let res = simplex::solve_max(&rows, &g.costs(), &objective);
    Ok(LpSolution { x: res.row_duals, objective: res.value })
}

/// Exact edge strength: for each edge, the maximum over vertex-induced
/// subgraphs containing both endpoints of that subgraph's weighted edge
/// connectivity. Full subset enumeration; n <= 8.
pub fn brute_strength(g: &Graph, w: &[f64]) -> Result<Vec<f64>> {
    if g.n() > 8 {
        return Err(Error::RefusedScale(format!(
            "brute strength limited to n <= 8, got {}",
            g.n()
        )));
    }
    let n = g.n();
    let mut kappa = vec![0.0f64; g.m()];
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|v| (mask >> v) & 1 == 1).collect();
        if verts.len() < 2 {
            continue;
        }
        let mut relabel = vec![usize::MAX; n];
        for (i, &v) in verts.iter().enumerate() {
            relabel[v] = i;
        }
        let inner: Vec<(usize, usize, f64, usize)> = g
            .edges()
            .iter()
            .filter(|e| relabel[e.u] != usize::MAX && relabel[e.v] != usize::MAX)
            .map(|e| (relabel[e.u], relabel[e.v], w[e.id], e.id))
            .collect();
        let list: Vec<(usize, usize, f64)> = inner.iter().map(|&(u, v, we, _)| (u, v, we)).collect();
        let (lambda, _) = crate::mincut::min_cut_edge_list(verts.len(), &list);
        for &(_, _, _, id) in &inner {
            kappa[id] = kappa[id].max(lambda);
        }
    }
    Ok(kappa)
}

#[derive(Debug, Clone)]
pub struct IpSolution {
    pub edges: Vec<EdgeId>,
    pub cost: f64,
}

/// Exact minimum-cost k-edge-connected spanning subgraph by depth-first
/// search over edge subsets with cost and degree pruning.
pub fn exhaustive_ip(g: &Graph) -> Result<IpSolution> {
    if g.m() > 22 {
        return Err(Error::RefusedScale(format!(
            "exhaustive IP limited to m <= 22, got {}",
            g.m()
        )));
    }
    if g.n() >= 2 && !graph_is_k_connected(g) {
        return Err(Error::Infeasible(g.k()));
    }
    if g.n() < 2 {
        return Ok(IpSolution { edges: Vec::new(), cost: 0.0 });
    }
    let m = g.m();
    // Start from the full edge set, which is feasible by the check above.
    let mut best = IpSolution {
        edges: (0..m).collect(),
        cost: g.costs().iter().sum(),
    };
    // inc_undecided[v]: incident edges not yet fixed either way.
    let mut inc_undecided = vec![0u32; g.n()];
    for e in g.edges() {
        inc_undecided[e.u] += 1;
        inc_undecided[e.v] += 1;
    }
    let mut inc_sel = vec![0u32; g.n()];
    let mut chosen: Vec<EdgeId> = Vec::new();
    dfs_ip(g, 0, 0.0, &mut chosen, &mut inc_sel, &mut inc_undecided, &mut best);
    best.edges.sort_unstable();
    Ok(best)
}

fn dfs_ip(
    g: &Graph,
    idx: usize,
    cost: f64,
    chosen: &mut Vec<EdgeId>,
    inc_sel: &mut [u32],
    inc_undecided: &mut [u32],
    best: &mut IpSolution,
) {
    if cost >= best.cost - 1e-12 {
        return;
    }
    if idx == g.m() {
        if edge_connectivity_at_least(g, chosen, g.k()) {
            best.cost = cost;
            best.edges = chosen.clone();
        }
        return;
    }
    let e = g.edge(idx);
    inc_undecided[e.u] -= 1;
    inc_undecided[e.v] -= 1;

    // Include the edge.
    chosen.push(idx);
    inc_sel[e.u] += 1;
    inc_sel[e.v] += 1;
    dfs_ip(g, idx + 1, cost + e.cost, chosen, inc_sel, inc_undecided, best);
    inc_sel[e.u] -= 1;
    inc_sel[e.v] -= 1;
    chosen.pop();

    // Exclude it, unless that starves an endpoint below degree k.
    let viable = inc_sel[e.u] + inc_undecided[e.u] >= g.k()
        && inc_sel[e.v] + inc_undecided[e.v] >= g.k();
    if viable {
        dfs_ip(g, idx + 1, cost, chosen, inc_sel, inc_undecided, best);
    }

    inc_undecided[e.u] += 1;
    inc_undecided[e.v] += 1;
}
