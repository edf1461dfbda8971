//! Edge-strength computation and strength-based importance sampling that
//! shrinks the support of a fractional solution while preserving every
//! constrained cut up to (1 +- eps).

use crate::graph::{EdgeId, Graph};
use crate::mincut::min_cut_edge_list;
use crate::Result;
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;

/// Per-edge strength under-estimates kappa_e.
#[derive(Debug, Clone)]
pub struct StrengthMap {
    pub kappa: Vec<f64>,
}

impl StrengthMap {
    /// sum_e w_e / kappa_e, skipping zero-weight edges.
    pub fn weighted_inverse_sum(&self, w: &[f64]) -> f64 {
        self.kappa
            .iter()
            .zip(w)
            .filter(|&(_, &we)| we > 0.0)
            .map(|(&ka, &we)| we / ka)
            .sum()
    }
}

/// Edge strengths by recursive minimum-cut decomposition: compute the
/// weighted min cut of the current induced subgraph, give every inside edge
/// that connectivity as a candidate, then recurse on both sides. An edge's
/// strength is its best candidate over all subgraphs that contain it. Exact
/// at this scale, and a lower bound on the true strength by definition.
///
/// Zero-weight edges get strength 0 and must not be sampled.
pub fn edge_strengths(g: &Graph, w: &[f64]) -> StrengthMap {
    assert_eq!(w.len(), g.m());
    let mut kappa = vec![0.0f64; g.m()];
    let verts: Vec<usize> = (0..g.n()).collect();
    decompose(g, w, &verts, &mut kappa);
    StrengthMap { kappa }
}

fn decompose(g: &Graph, w: &[f64], verts: &[usize], kappa: &mut [f64]) {
    if verts.len() < 2 {
        return;
    }
    let mut relabel = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        relabel[v] = i;
    }
    let inner: Vec<&crate::graph::Edge> = g
        .edges()
        .iter()
        .filter(|e| relabel[e.u] != usize::MAX && relabel[e.v] != usize::MAX)
        .collect();
    if inner.is_empty() {
        return;
    }
    let list: Vec<(usize, usize, f64)> =
        inner.iter().map(|e| (relabel[e.u], relabel[e.v], w[e.id])).collect();
    let (lambda, side) = min_cut_edge_list(verts.len(), &list);
    for e in &inner {
        kappa[e.id] = kappa[e.id].max(lambda);
    }
    let (a, b): (Vec<usize>, Vec<usize>) =
        verts.iter().partition(|&&v| side[relabel[v]]);
    decompose(g, w, &a, kappa);
    decompose(g, w, &b, kappa);
}

#[derive(Debug, Clone)]
pub struct CompressConfig {
    pub eps: f64,
    /// delta = ceil(c_delta * k * d * ln n).
    pub c_delta: f64,
    pub d: f64,
}

impl CompressConfig {
    pub fn new(eps: f64) -> Self {
        CompressConfig { eps, c_delta: 4.0, d: 3.0 }
    }

    pub fn delta(&self, n: usize, k: u32) -> f64 {
        (self.c_delta * k as f64 * self.d * (n.max(2) as f64).ln()).ceil()
    }
}

#[derive(Debug, Clone)]
pub struct SparseSolution {
    pub y: Vec<f64>,
    pub support_size: usize,
    /// Keep probabilities r_e, reported for diagnostics.
    pub keep_prob: Vec<f64>,
}

impl SparseSolution {
    pub fn support(&self) -> Vec<EdgeId> {
        self.y
            .iter()
            .enumerate()
            .filter(|&(_, &ye)| ye > 0.0)
            .map(|(e, _)| e)
            .collect()
    }
}

/// Importance sampling of a KC-feasible point x: keep edge e independently
/// with probability r_e = max(p_e, q_e) at weight x_e / r_e, where
/// p_e = min(1, delta x_e / (eps^2 kappa_e)) protects cut weights and
/// q_e = min(1, delta c_e x_e / (eps^2 cost(x))) protects the objective.
/// The kept weights are scaled up by (1+eps) to restore feasibility.
///
/// One independent RNG stream per edge id, so the decision for an edge
/// depends only on the seed and the edge.
pub fn compress(g: &Graph, x: &[f64], cfg: &CompressConfig, seed: u64) -> Result<SparseSolution> {
    assert_eq!(x.len(), g.m());
    let eps = cfg.eps;
    let strengths = edge_strengths(g, x);
    let cost_x: f64 = g.edges().iter().map(|e| e.cost * x[e.id]).sum();
    let delta = cfg.delta(g.n(), g.k());
    let mut y = vec![0.0f64; g.m()];
    let mut keep_prob = vec![0.0f64; g.m()];
    let mut support_size = 0usize;
    for e in g.edges() {
        let xe = x[e.id];
        if xe <= 0.0 {
            continue;
        }
        let p = (delta * xe / (eps * eps * strengths.kappa[e.id])).min(1.0);
        let q = if cost_x > 0.0 {
            (delta * e.cost * xe / (eps * eps * cost_x)).min(1.0)
        } else {
            0.0
        };
        let r = p.max(q);
        keep_prob[e.id] = r;
        if r <= 0.0 {
            continue;
        }
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(e.id as u64);
        let kept = r >= 1.0 || rng.gen::<f64>() < r;
        if kept {
            y[e.id] = (1.0 + eps) * xe / r;
            support_size += 1;
        }
    }
    Ok(SparseSolution { y, support_size, keep_prob })
}

/// Result of checking constrained cuts of a sampled weight map against the
/// original.
#[derive(Debug, Clone)]
pub struct CutCheckReport {
    pub checked: usize,
    pub violations: usize,
    pub worst_ratio: f64,
    pub worst_cut: Option<Vec<EdgeId>>,
}

impl CutCheckReport {
    pub fn pass(&self) -> bool {
        self.violations == 0
    }
}

fn subsets_up_to(items: &[EdgeId], max_size: usize) -> Vec<Vec<EdgeId>> {
    let mut out: Vec<Vec<EdgeId>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_size {
        let mut next = Vec::new();
        for base in &frontier {
            let start = base.last().map_or(0, |&i| i + 1);
            for i in start..items.len() {
                let mut s = base.clone();
                s.push(i);
                next.push(s);
            }
        }
        out.extend(next.iter().map(|ix| ix.iter().map(|&i| items[i]).collect()));
        frontier = next;
    }
    out
}

/// Check sum_{C \ F} sampled against (1 +- eps) * sum_{C \ F} original for
/// the given cut sides. Free sets are exhaustive for cuts of up to 12 edges;
/// larger cuts use only the heaviest prefixes under the original weights.
pub fn verify_constrained_cuts(
    g: &Graph,
    original: &[f64],
    sampled: &[f64],
    sides: &[Vec<bool>],
    eps: f64,
) -> Result<CutCheckReport> {
    let k = g.k();
    let mut report =
        CutCheckReport { checked: 0, violations: 0, worst_ratio: 1.0, worst_cut: None };
    for side in sides {
        let cut = g.cut_edges(side)?;
        if cut.is_empty() {
            continue;
        }
        let free_sets: Vec<Vec<EdgeId>> = if cut.len() <= 12 {
            subsets_up_to(&cut, (k as usize - 1).min(cut.len()))
        } else {
            let mut order = cut.clone();
            order.sort_by(|&a, &b| original[b].partial_cmp(&original[a]).unwrap());
            (0..=(k as usize - 1).min(cut.len())).map(|i| order[..i].to_vec()).collect()
        };
        for free in free_sets {
            let orig: f64 =
                cut.iter().filter(|e| !free.contains(e)).map(|&e| original[e]).sum();
            let samp: f64 =
                cut.iter().filter(|e| !free.contains(e)).map(|&e| sampled[e]).sum();
            if orig <= 0.0 {
                continue;
            }
            let ratio = samp / orig;
            report.checked += 1;
            let dev = if ratio >= 1.0 { ratio } else { 1.0 / ratio };
            let worst_dev = if report.worst_ratio >= 1.0 {
                report.worst_ratio
            } else {
                1.0 / report.worst_ratio
            };
            if dev > worst_dev {
                report.worst_ratio = ratio;
                report.worst_cut = Some(cut.clone());
            }
            if ratio < 1.0 - eps - 1e-12 || ratio > 1.0 + eps + 1e-12 {
                report.violations += 1;
            }
        }
    }
    Ok(report)
}
