//! Weight truncation, the range mapping between normalized free cuts and
//! plain minimum cuts, and the static (1+eps)-approximate minimum
//! normalized free cut algorithm.

use crate::graph::{best_val, val, EdgeId, FreeCut, Graph};
use crate::mincut::global_min_cut;
use crate::{Error, Result};

/// Truncated weights w_rho(e) = min(w(e), rho) and the rho-heavy edge set
/// {e : w(e) >= rho}.
#[derive(Debug, Clone)]
pub struct TruncationContext {
    pub rho: f64,
    pub heavy: Vec<bool>,
    pub w_rho: Vec<f64>,
}

impl TruncationContext {
    pub fn heavy_in<'a>(&'a self, cut: &'a [EdgeId]) -> impl Iterator<Item = EdgeId> + 'a {
        cut.iter().copied().filter(|&e| self.heavy[e])
    }

    pub fn truncated_weight(&self, cut: &[EdgeId]) -> f64 {
        cut.iter().map(|&e| self.w_rho[e]).sum()
    }
}

pub fn truncate(w: &[f64], rho: f64) -> Result<TruncationContext> {
    if !(rho > 0.0) {
        return Err(Error::InvalidThreshold(rho));
    }
    let heavy = w.iter().map(|&we| we >= rho).collect();
    let w_rho = w.iter().map(|&we| we.min(rho)).collect();
    Ok(TruncationContext { rho, heavy, w_rho })
}

/// A cut is interesting when it contains fewer than k rho-heavy edges.
pub fn is_interesting(ctx: &TruncationContext, cut: &[EdgeId], k: u32) -> bool {
    ctx.heavy_in(cut).count() < k as usize
}

/// Map a cut with truncated weight below k*rho to a normalized free cut with
/// the heavy edges freed; its value is guaranteed below rho.
pub fn map_cut_to_free_cut(
    w: &[f64],
    ctx: &TruncationContext,
    side: &[bool],
    cut: &[EdgeId],
    k: u32,
) -> Result<FreeCut> {
    let truncated = ctx.truncated_weight(cut);
    let bound = k as f64 * ctx.rho;
    if truncated >= bound {
        return Err(Error::NotBelowThreshold { got: truncated, bound });
    }
    let free: Vec<EdgeId> = ctx.heavy_in(cut).collect();
    let value = val(w, cut, &free, k);
    debug_assert!(!value.is_finite() || value < ctx.rho * (1.0 + 1e-9));
    Ok(FreeCut { side: side.to_vec(), cut_edges: cut.to_vec(), free_edges: free, value })
}

/// Per-rho result of the grid scan; exposed for tracing.
#[derive(Debug, Clone)]
pub struct GridStats {
    pub grid_size: usize,
    pub mincut_calls: usize,
}

/// Static (1+eps)-approximate minimum normalized free cut: scan a geometric
/// rho-grid, take the global minimum cut under each truncated weight, and
/// evaluate each candidate side with the heaviest-prefix rule under the
/// untruncated weights.
///
/// Grid bounds: L = min_e w(e) / k (no normalized free cut is smaller) and
/// U = w(E) (any cut with F = empty is at most total weight).
pub fn static_min_free_cut(g: &Graph, w: &[f64], k: u32, eps: f64) -> Result<FreeCut> {
    static_min_free_cut_traced(g, w, k, eps).map(|(fc, _)| fc)
}

pub fn static_min_free_cut_traced(
    g: &Graph,
    w: &[f64],
    k: u32,
    eps: f64,
) -> Result<(FreeCut, GridStats)> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(format!("eps must be in (0,1), got {eps}")));
    }
    if !g.is_connected() || g.n() < 2 {
        return Err(Error::InfeasibleGraph);
    }
    let min_w = w.iter().copied().fold(f64::INFINITY, f64::min);
    let total_w: f64 = w.iter().sum();
    let lower = min_w / k as f64;
    let mut best: Option<FreeCut> = None;
    let mut rho = lower;
    let mut calls = 0usize;
    loop {
        let ctx = truncate(w, rho)?;
        let mc = global_min_cut(g, &ctx.w_rho);
        calls += 1;
        let cut = g.cut_edges(&mc.side)?;
        if !cut.is_empty() {
            let (value, free) = best_val(w, &cut, k);
            if best.as_ref().map_or(true, |b| value < b.value) {
                best = Some(FreeCut {
                    side: mc.side,
                    cut_edges: cut,
                    free_edges: free,
                    value,
                });
            }
        }
        if rho >= total_w {
            break;
        }
        rho *= 1.0 + eps;
    }
    let stats = GridStats { grid_size: calls, mincut_calls: calls };
    best.map(|fc| (fc, stats)).ok_or(Error::InfeasibleGraph)
}

/// Diagnostics for the mapping between the free-cut optimum and the
/// truncated-weight minimum cut at rho = (1+gamma)*lambda.
#[derive(Debug, Clone)]
pub struct MappingDiagnostics {
    pub rho: f64,
    pub mincut_w_rho: f64,
    pub in_range: bool,
}

/// Given lambda, gamma with OPT_w assumed in [lambda, (1+gamma)*lambda),
/// report the minimum cut under w_rho and whether it falls in
/// [k*rho/(1+gamma), k*rho).
pub fn check_mapping_theorem(
    g: &Graph,
    w: &[f64],
    k: u32,
    lambda: f64,
    gamma: f64,
) -> Result<MappingDiagnostics> {
    let rho = (1.0 + gamma) * lambda;
    let ctx = truncate(w, rho)?;
    let mc = global_min_cut(g, &ctx.w_rho);
    let lo = k as f64 * rho / (1.0 + gamma);
    let hi = k as f64 * rho;
    let tol = 1e-9 * hi.max(1.0);
    let in_range = mc.value >= lo - tol && mc.value < hi + tol;
    Ok(MappingDiagnostics { rho, mincut_w_rho: mc.value, in_range })
}
