//! Graph representation, cut arithmetic, and the normalized-free-cut
//! objective shared by the rest of the pipeline.

use crate::{Error, Result};

pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
    pub cost: f64,
}

/// Undirected multigraph with positive per-edge costs and a connectivity
/// requirement k. Immutable after construction; all per-run mutable state
/// lives in [`WeightFn`].
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    k: u32,
    edges: Vec<Edge>,
}

impl Graph {
    /// Build a graph from `(u, v, cost)` triples. Edge ids are assigned
    /// densely in input order. Self-loops and non-positive costs are
    /// rejected; parallel edges are permitted.
    pub fn new(n: usize, k: u32, edges: &[(usize, usize, f64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        if k < 1 {
            return Err(Error::InvalidGraph("connectivity requirement k must be >= 1".into()));
        }
        let mut es = Vec::with_capacity(edges.len());
        for (id, &(u, v, cost)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {id} endpoint out of range: ({u}, {v}) with n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {id} is a self-loop at {u}")));
            }
            if !(cost > 0.0) || !cost.is_finite() {
                return Err(Error::InvalidGraph(format!("edge {id} has non-positive cost {cost}")));
            }
            es.push(Edge { id, u, v, cost });
        }
        Ok(Graph { n, k, edges: es })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn costs(&self) -> Vec<f64> {
        self.edges.iter().map(|e| e.cost).collect()
    }

    /// Edges with exactly one endpoint in `side`, sorted by id.
    ///
    /// `side[v]` marks membership; the side must be a proper nonempty subset.
    pub fn cut_edges(&self, side: &[bool]) -> Result<Vec<EdgeId>> {
        assert_eq!(side.len(), self.n);
        let inside = side.iter().filter(|&&b| b).count();
        if inside == 0 || inside == self.n {
            return Err(Error::InvalidCut);
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| side[e.u] != side[e.v])
            .map(|e| e.id)
            .collect())
    }

    /// True iff the whole edge set connects all vertices.
    pub fn is_connected(&self) -> bool {
        self.spans(&(0..self.m()).collect::<Vec<_>>())
    }

    /// True iff the given edge subset connects all vertices.
    pub fn spans(&self, selected: &[EdgeId]) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut dsu = Dsu::new(self.n);
        for &id in selected {
            let e = &self.edges[id];
            dsu.union(e.u, e.v);
        }
        let root = dsu.find(0);
        (1..self.n).all(|v| dsu.find(v) == root)
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// MWU weight state in additive form: w(e) = (1/c(e)) * exp(v(e) * s(e))
/// with s(e) = eps / c(e). The additive exponents `v` are authoritative;
/// multiplicative weights are materialized on demand.
#[derive(Debug, Clone)]
pub struct WeightFn {
    eps: f64,
    cost: Vec<f64>,
    v: Vec<f64>,
}

impl WeightFn {
    /// Initial MWU weights w(e) = 1/c(e) for the given costs.
    pub fn init(costs: &[f64], eps: f64) -> Self {
        WeightFn { eps, cost: costs.to_vec(), v: vec![0.0; costs.len()] }
    }

    /// Wrap an arbitrary positive weight vector (costs set to 1/w so the
    /// invariant w(e) >= 1/c(e) holds with v = 0). Used wherever an
    /// operation takes "any weight function".
    pub fn from_weights(weights: &[f64], eps: f64) -> Self {
        let cost: Vec<f64> = weights.iter().map(|&w| 1.0 / w).collect();
        WeightFn { eps, cost, v: vec![0.0; weights.len()] }
    }

    pub fn len(&self) -> usize {
        self.cost.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cost.is_empty()
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn cost(&self, e: EdgeId) -> f64 {
        self.cost[e]
    }

    pub fn exponent(&self, e: EdgeId) -> f64 {
        self.v[e]
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        (self.v[e] * self.eps / self.cost[e]).exp() / self.cost[e]
    }

    pub fn materialize(&self) -> Vec<f64> {
        (0..self.len()).map(|e| self.weight(e)).collect()
    }

    /// The MWU punish step on a single edge: v(e) += c_min, i.e. the weight
    /// is multiplied by exp(eps * c_min / c(e)) <= e^eps.
    pub fn bump(&mut self, e: EdgeId, c_min: f64) {
        self.v[e] += c_min;
    }

    /// phi(e) = (1/eps) * ln(c(e) * w(e)) = v(e) / c(e); equal to the edge's
    /// accumulated congestion.
    pub fn phi(&self, e: EdgeId) -> f64 {
        self.v[e] / self.cost[e]
    }

    pub fn max_phi(&self) -> f64 {
        (0..self.len()).map(|e| self.phi(e)).fold(0.0, f64::max)
    }
}

/// Total weight of an edge set.
pub fn weight_of(w: &[f64], edges: &[EdgeId]) -> f64 {
    edges.iter().map(|&e| w[e]).sum()
}

/// Normalized free-cut objective val_w(C, F) = w(C \ F) / (k - |F|);
/// +infinity when |F| >= k or when freeing F would empty the cut.
pub fn val(w: &[f64], cut: &[EdgeId], free: &[EdgeId], k: u32) -> f64 {
    debug_assert!(free.iter().all(|f| cut.contains(f)));
    if free.len() >= k as usize || free.len() >= cut.len() {
        return f64::INFINITY;
    }
    let wsum: f64 = cut.iter().filter(|e| !free.contains(e)).map(|&e| w[e]).sum();
    wsum / (k as usize - free.len()) as f64
}

/// val_w(C, F_i) for i = 0..k-1 where F_i is the heaviest i edges of C.
#[derive(Debug, Clone)]
pub struct CutValueBreakdown {
    pub values_by_free_count: Vec<f64>,
}

impl CutValueBreakdown {
    pub fn min(&self) -> f64 {
        self.values_by_free_count.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

fn heaviest_order(w: &[f64], cut: &[EdgeId]) -> Vec<EdgeId> {
    let mut order = cut.to_vec();
    // Ties among equal weights broken by larger edge id, so F_i is unique.
    order.sort_by(|&a, &b| w[b].partial_cmp(&w[a]).unwrap().then(b.cmp(&a)));
    order
}

pub fn breakdown(w: &[f64], cut: &[EdgeId], k: u32) -> CutValueBreakdown {
    let order = heaviest_order(w, cut);
    let total: f64 = order.iter().map(|&e| w[e]).sum();
    let mut rest = total;
    let mut values = Vec::with_capacity(k as usize);
    for i in 0..k as usize {
        if i >= order.len() {
            values.push(f64::INFINITY);
            continue;
        }
        values.push(rest / (k as usize - i) as f64);
        rest = (rest - w[order[i]]).max(0.0);
    }
    CutValueBreakdown { values_by_free_count: values }
}

/// Minimum of val_w(C, F_i) over heaviest-i prefixes F_i, i = 0..k-1,
/// together with the achieving free set. Ties between free counts resolve
/// to the smaller i.
pub fn best_val(w: &[f64], cut: &[EdgeId], k: u32) -> (f64, Vec<EdgeId>) {
    assert!(!cut.is_empty(), "best_val on an empty cut");
    let order = heaviest_order(w, cut);
    let total: f64 = order.iter().map(|&e| w[e]).sum();
    let mut rest = total;
    let mut best = f64::INFINITY;
    let mut best_i = 0usize;
    // Freeing the whole cut is disallowed, so i stays below |C|.
    for i in 0..(k as usize).min(order.len()) {
        let value = rest / (k as usize - i) as f64;
        if value < best {
            best = value;
            best_i = i;
        }
        rest = (rest - w[order[i]]).max(0.0);
    }
    let mut free: Vec<EdgeId> = order[..best_i].to_vec();
    free.sort_unstable();
    (best, free)
}

/// A cut side S with edge set C = delta(S), free edges F and the normalized
/// value w(C \ F) / (k - |F|).
#[derive(Debug, Clone)]
pub struct FreeCut {
    pub side: Vec<bool>,
    pub cut_edges: Vec<EdgeId>,
    pub free_edges: Vec<EdgeId>,
    pub value: f64,
}
