//! Integral rounding: sparsify the fractional support, preprocess costs,
//! bidirect, solve an exact minimum-cost k-arborescence by matroid
//! intersection, and project back to an undirected edge set.

use crate::flow::unit_arc_flow;
use crate::graph::{EdgeId, Graph};
use crate::matroid::{min_cost_common_independent, HeadPartition, KForestUnion};
use crate::mincut::edge_connectivity_at_least;
use crate::sparsify::{compress, CompressConfig};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct Arc {
    pub id: usize,
    pub tail: usize,
    pub head: usize,
    pub cost: f64,
    pub source_edge: EdgeId,
}

/// Bidirected digraph D[G]: two opposite arcs per undirected edge, both at
/// the edge's cost.
#[derive(Debug, Clone)]
pub struct Digraph {
    pub n: usize,
    pub arcs: Vec<Arc>,
}

pub fn bidirect(g: &Graph) -> Digraph {
    let mut arcs = Vec::with_capacity(2 * g.m());
    for e in g.edges() {
        arcs.push(Arc { id: arcs.len(), tail: e.u, head: e.v, cost: e.cost, source_edge: e.id });
        arcs.push(Arc { id: arcs.len(), tail: e.v, head: e.u, cost: e.cost, source_edge: e.id });
    }
    Digraph { n: g.n(), arcs }
}

/// Result of cost preprocessing: a graph on the surviving edges with
/// integral costs, the scale M, and the original edge id behind each new id.
#[derive(Debug, Clone)]
pub struct Preprocessed {
    pub graph: Graph,
    pub scale: f64,
    pub kept: Vec<EdgeId>,
}

/// Drop edges costing more than 2*C_star (no optimal solution uses them),
/// then round the rest up to multiples of M = ceil(eps*C_star/m) and divide
/// by M. Any alpha-approximation on the scaled instance is an
/// alpha*(1+O(eps)) approximation on the original.
///
/// m here is the edge count of `g` as given, matching the scale bound of
/// the instance the LP value came from.
pub fn preprocess_costs(g: &Graph, c_star: f64, eps: f64) -> Result<Preprocessed> {
    if !(c_star > 0.0) {
        return Err(Error::Degenerate);
    }
    let m = g.m();
    let scale = (eps * c_star / m as f64).ceil().max(1.0);
    let mut edges = Vec::new();
    let mut kept = Vec::new();
    for e in g.edges() {
        if e.cost > 2.0 * c_star {
            continue;
        }
        edges.push((e.u, e.v, (e.cost / scale).ceil()));
        kept.push(e.id);
    }
    if edges.is_empty() {
        return Err(Error::Degenerate);
    }
    let graph = Graph::new(g.n(), g.k(), &edges)?;
    Ok(Preprocessed { graph, scale, kept })
}

/// A minimum-cost union of k arc-disjoint spanning arborescences rooted at
/// `root`, with the witness decomposition into the k trees.
#[derive(Debug, Clone)]
pub struct ArborescenceSet {
    pub arcs: Vec<usize>,
    pub root: usize,
    pub k: u32,
    pub cost: f64,
    /// trees[i] lists the arc ids of the i-th spanning arborescence.
    pub trees: Vec<Vec<usize>>,
}

fn root_connectivity_at_least(d: &Digraph, arcs: &[usize], root: usize, k: u32) -> bool {
    let pairs: Vec<(usize, usize)> =
        arcs.iter().map(|&a| (d.arcs[a].tail, d.arcs[a].head)).collect();
    (0..d.n)
        .filter(|&v| v != root)
        .all(|v| unit_arc_flow(d.n, &pairs, root, v, k as i64) >= k as i64)
}

/// Exact minimum-cost k-arborescence as the cheapest common base of the
/// head-partition matroid (k arcs into each non-root vertex, none into the
/// root) and the k-fold graphic union on underlying endpoints.
pub fn min_cost_k_arborescence(d: &Digraph, root: usize, k: u32) -> Result<ArborescenceSet> {
    if d.n < 1 || root >= d.n {
        return Err(Error::InvalidParameter(format!("root {root} out of range")));
    }
    let all: Vec<usize> = (0..d.arcs.len()).collect();
    if !root_connectivity_at_least(d, &all, root, k) {
        return Err(Error::NotKRootConnected(k));
    }
    let target = k as usize * (d.n - 1);
    let mut cap = vec![k as usize; d.n];
    cap[root] = 0;
    let m1 = HeadPartition { head: d.arcs.iter().map(|a| a.head).collect(), cap };
    let m2 = KForestUnion {
        n: d.n,
        k: k as usize,
        ends: d.arcs.iter().map(|a| (a.tail, a.head)).collect(),
    };
    let cost: Vec<f64> = d.arcs.iter().map(|a| a.cost).collect();
    let arcs = min_cost_common_independent(d.arcs.len(), &cost, &m1, &m2, target)
        .ok_or(Error::NotKRootConnected(k))?;
    let total: f64 = arcs.iter().map(|&a| cost[a]).sum();
    let trees = decompose(d, &arcs, root, k).ok_or(Error::NotKRootConnected(k))?;
    Ok(ArborescenceSet { arcs, root, k, cost: total, trees })
}

/// Split a k-arborescence arc set into k arc-disjoint spanning
/// arborescences. Greedy tree growing with a connectivity-preserving arc
/// test, backtracking in the rare case a greedy choice dead-ends.
fn decompose(d: &Digraph, arcs: &[usize], root: usize, k: u32) -> Option<Vec<Vec<usize>>> {
    if k == 0 {
        return if arcs.is_empty() { Some(Vec::new()) } else { None };
    }
    if d.n == 1 {
        return Some(vec![Vec::new(); k as usize]);
    }
    let mut remaining: Vec<usize> = arcs.to_vec();
    let mut tree: Vec<usize> = Vec::new();
    let mut in_tree_vert = vec![false; d.n];
    in_tree_vert[root] = true;
    if grow(d, root, k, &mut remaining, &mut tree, &mut in_tree_vert) {
        let rest = remaining.clone();
        let mut trees = decompose(d, &rest, root, k - 1)?;
        trees.insert(0, tree);
        Some(trees)
    } else {
        None
    }
}

fn grow(
    d: &Digraph,
    root: usize,
    k: u32,
    remaining: &mut Vec<usize>,
    tree: &mut Vec<usize>,
    reached: &mut Vec<bool>,
) -> bool {
    if reached.iter().all(|&b| b) {
        return true;
    }
    let candidates: Vec<usize> = remaining
        .iter()
        .copied()
        .filter(|&a| reached[d.arcs[a].tail] && !reached[d.arcs[a].head])
        .collect();
    for a in candidates {
        remaining.retain(|&x| x != a);
        // Taking `a` must leave the rest (k-1)-root-connected; connectivity
        // only drops as the tree grows, so this is a sound pruning test.
        let pairs: Vec<(usize, usize)> =
            remaining.iter().map(|&x| (d.arcs[x].tail, d.arcs[x].head)).collect();
        let ok = (0..d.n).filter(|&v| v != root).all(|v| {
            unit_arc_flow(d.n, &pairs, root, v, (k - 1) as i64) >= (k - 1) as i64
        });
        if ok {
            tree.push(a);
            reached[d.arcs[a].head] = true;
            if grow(d, root, k, remaining, tree, reached) {
                return true;
            }
            reached[d.arcs[a].head] = false;
            tree.pop();
        }
        remaining.push(a);
    }
    false
}

/// Deduplicated source edges of the chosen arcs.
pub fn induce_undirected(arb: &ArborescenceSet, d: &Digraph) -> Vec<EdgeId> {
    let mut ids: Vec<EdgeId> = arb.arcs.iter().map(|&a| d.arcs[a].source_edge).collect();
    ids.sort_unstable();
    ids.dedup();
    ids
}

#[derive(Debug, Clone)]
pub struct RoundResult {
    /// Chosen original edge ids, sorted.
    pub edges: Vec<EdgeId>,
    /// Total original cost of those edges.
    pub cost: f64,
    /// Arborescence cost mapped back to original units (an upper bound on
    /// `cost` before deduplication).
    pub arborescence_cost: f64,
    /// True when the sampled support had to be widened back to the full
    /// fractional support.
    pub sampling_fallback: bool,
}

/// Full rounding pipeline on a feasible fractional point x: sample the
/// support down, restrict the graph, preprocess costs against the LP value,
/// bidirect with root 0, solve the exact k-arborescence, and project back.
pub fn round(g: &Graph, x: &[f64], lp_objective: f64, eps: f64, seed: u64) -> Result<RoundResult> {
    assert_eq!(x.len(), g.m());
    let k = g.k();
    if g.n() < 2 {
        return Ok(RoundResult {
            edges: Vec::new(),
            cost: 0.0,
            arborescence_cost: 0.0,
            sampling_fallback: false,
        });
    }
    let sparse = compress(g, x, &CompressConfig::new(eps), seed)?;
    let mut support = sparse.support();
    let mut sampling_fallback = false;
    if !edge_connectivity_at_least(g, &support, k) {
        // Sampling is only correct with high probability; fall back to the
        // full fractional support, which is feasible deterministically.
        support = x
            .iter()
            .enumerate()
            .filter(|&(_, &xe)| xe > 0.0)
            .map(|(e, _)| e)
            .collect();
        sampling_fallback = true;
        if !edge_connectivity_at_least(g, &support, k) {
            return Err(Error::Infeasible(k));
        }
    }
    let sub_edges: Vec<(usize, usize, f64)> = support
        .iter()
        .map(|&e| {
            let ed = g.edge(e);
            (ed.u, ed.v, ed.cost)
        })
        .collect();
    let sub = Graph::new(g.n(), k, &sub_edges)?;
    let pre = preprocess_costs(&sub, lp_objective, eps)?;
    let d = bidirect(&pre.graph);
    let arb = min_cost_k_arborescence(&d, 0, k)?;
    let local = induce_undirected(&arb, &d);
    // Map scaled-subgraph edge ids back through both restrictions.
    let mut edges: Vec<EdgeId> = local.iter().map(|&e| support[pre.kept[e]]).collect();
    edges.sort_unstable();
    edges.dedup();
    if !edge_connectivity_at_least(g, &edges, k) {
        return Err(Error::Infeasible(k));
    }
    let cost: f64 = edges.iter().map(|&e| g.edge(e).cost).sum();
    Ok(RoundResult {
        edges,
        cost,
        arborescence_cost: arb.cost * pre.scale,
        sampling_fallback,
    })
}
