//! Multiplicative-weights LP solver for the k-edge-connected spanning
//! subgraph relaxation with knapsack-covering rows.
//!
//! The outer loop walks geometric ranges of the optimum estimate lambda.
//! Inside a range, any cut whose rho-truncated weight falls below k*rho is
//! mapped to a cheap normalized free cut and punished; when no such cut is
//! left, the optimum has provably moved past (1+eps)*lambda and the range
//! advances. The run stops once some edge's congestion passes the phi
//! threshold, at which point the best recorded weight snapshot, scaled and
//! clamped, is a (1+O(eps))-approximate fractional solution.

use crate::free_cut::{map_cut_to_free_cut, static_min_free_cut_traced, truncate};
use crate::graph::{best_val, FreeCut, Graph, WeightFn};
use crate::mincut::{global_min_cut, graph_is_k_connected};
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Approximation parameter, in (0, 1/2).
    pub eps: f64,
    /// Stop once max congestion exceeds eps^(-stop_exponent) * ln m.
    pub stop_exponent: f64,
    /// Hard cap on punishes: safety_factor * eps^-2 * m * ln m, at least 1000.
    pub safety_factor: f64,
    /// Run the potential-sandwich self-checks while solving.
    pub instrument: bool,
}

impl SolverConfig {
    pub fn new(eps: f64) -> Self {
        SolverConfig { eps, stop_exponent: 2.0, safety_factor: 40.0, instrument: true }
    }

    fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps < 0.5) {
            return Err(Error::InvalidParameter(format!(
                "eps must be in (0, 1/2), got {}",
                self.eps
            )));
        }
        Ok(())
    }

    fn stop_threshold(&self, m: usize) -> f64 {
        (m as f64).ln() / self.eps.powf(self.stop_exponent)
    }

    fn punish_cap(&self, m: usize) -> u64 {
        let soft = self.safety_factor * self.eps.powi(-2) * m as f64 * (m as f64).ln();
        (soft.ceil() as u64).max(1000)
    }
}

/// Mutable solver state. The weight exponents are authoritative; congestion
/// is tracked redundantly and must agree with phi at all times.
#[derive(Debug, Clone)]
pub struct SolverState {
    pub w: WeightFn,
    pub cong: Vec<f64>,
    pub dual_total: f64,
    pub punish_count: u64,
    pub range_index: usize,
    pub lambda: f64,
    k: u32,
    // Potential sum_e c_e w_e, maintained incrementally, plus the running
    // exponent bound used by the sandwich check.
    potential: f64,
    potential_exp_sum: f64,
    phi_cong_max_dev: f64,
}

impl SolverState {
    pub fn new(g: &Graph, eps: f64) -> Self {
        let costs = g.costs();
        SolverState {
            w: WeightFn::init(&costs, eps),
            cong: vec![0.0; costs.len()],
            dual_total: 0.0,
            punish_count: 0,
            range_index: 0,
            lambda: 0.0,
            k: g.k(),
            // c_e * w_e = 1 initially.
            potential: costs.len() as f64,
            potential_exp_sum: 0.0,
            phi_cong_max_dev: 0.0,
        }
    }

    pub fn max_congestion(&self) -> f64 {
        self.cong.iter().copied().fold(0.0, f64::max)
    }
}

/// One punish step: multiply the weight of every non-free cut edge by
/// exp(eps * c_min / c_e) where c_min is the cheapest such edge, and account
/// for the induced dual mass (k - |F|) * c_min.
pub fn punish(state: &mut SolverState, fc: &FreeCut) -> Result<()> {
    let rest: Vec<usize> =
        fc.cut_edges.iter().copied().filter(|e| !fc.free_edges.contains(e)).collect();
    if rest.is_empty() {
        return Err(Error::DegenerateCut);
    }
    let c_min = rest.iter().map(|&e| state.w.cost(e)).fold(f64::INFINITY, f64::min);
    let covered = (state.k as usize - fc.free_edges.len()) as f64;
    let w_rest: f64 = rest.iter().map(|&e| state.w.weight(e)).sum();
    // Potential growth bound term: delta_t * val_t / Phi(t-1) with
    // delta_t = (k - |F|) c_min and val_t = w(C \ F) / (k - |F|).
    state.potential_exp_sum += c_min * w_rest / state.potential;
    for &e in &rest {
        let c = state.w.cost(e);
        let before = state.w.weight(e);
        state.w.bump(e, c_min);
        state.cong[e] += c_min / c;
        state.potential += c * (state.w.weight(e) - before);
        let dev = (state.w.phi(e) - state.cong[e]).abs() / state.cong[e].max(1.0);
        state.phi_cong_max_dev = state.phi_cong_max_dev.max(dev);
    }
    state.dual_total += covered * c_min;
    state.punish_count += 1;
    Ok(())
}

#[derive(Debug, Clone, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SolverStats {
    pub ranges: usize,
    pub punishes: u64,
    pub mincut_calls: u64,
    pub static_grid_size: usize,
    pub max_congestion: f64,
    pub phi_cong_max_dev: f64,
    pub sandwich_checks: u64,
    pub sandwich_failures: u64,
    pub stop_threshold: f64,
    pub hit_soft_range_bound: bool,
    pub hit_soft_punish_bound: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeOutcome {
    /// No interesting cut left: the optimum is past (1+eps)*lambda.
    Advanced,
    /// The congestion threshold was crossed mid-range.
    Stopped,
}

fn sandwich_check(state: &mut SolverState, m: usize, stats: &mut SolverStats) {
    // Resync the incrementally maintained potential, then verify
    // exp(eps * max_phi) <= Phi <= m * exp(eps (1+eps) * sum_t d_t v_t / Phi).
    let exact: f64 = (0..m).map(|e| state.w.cost(e) * state.w.weight(e)).sum();
    state.potential = exact;
    let eps = state.w.eps();
    let lower = (eps * state.w.max_phi()).exp();
    let upper = m as f64 * (eps * (1.0 + eps) * state.potential_exp_sum).exp();
    stats.sandwich_checks += 1;
    if !(lower <= exact * (1.0 + 1e-6) && exact <= upper * (1.0 + 1e-6)) {
        stats.sandwich_failures += 1;
    }
}

/// Algorithm: with rho = (1+eps)*lambda, repeatedly take the global minimum
/// cut under the rho-truncated weights; while its value stays below k*rho,
/// convert the cut to its best normalized free cut and punish. Returns
/// `Advanced` once no cut is below the bar, certifying OPT >= (1+eps)*lambda.
pub fn range_punish(
    g: &Graph,
    state: &mut SolverState,
    cfg: &SolverConfig,
    stats: &mut SolverStats,
) -> Result<RangeOutcome> {
    let k = g.k();
    let m = g.m();
    let rho = (1.0 + cfg.eps) * state.lambda;
    let bar = k as f64 * rho;
    let threshold = cfg.stop_threshold(m);
    let cap = cfg.punish_cap(m);
    loop {
        let w = state.w.materialize();
        let ctx = truncate(&w, rho)?;
        let mc = global_min_cut(g, &ctx.w_rho);
        stats.mincut_calls += 1;
        if mc.value >= bar * (1.0 - 1e-12) {
            return Ok(RangeOutcome::Advanced);
        }
        let cut = g.cut_edges(&mc.side)?;
        let fc = match map_cut_to_free_cut(&w, &ctx, &mc.side, &cut, k) {
            Ok(fc) => fc,
            // Rounding disagreement between the collapsed-adjacency cut value
            // and the recomputed edge sum; the range is done either way.
            Err(Error::NotBelowThreshold { .. }) => return Ok(RangeOutcome::Advanced),
            Err(e) => return Err(e),
        };
        // The heaviest-prefix rule can only improve on freeing the heavy set.
        let (value, free) = best_val(&w, &cut, k);
        let fc = if value <= fc.value {
            FreeCut { side: fc.side, cut_edges: fc.cut_edges, free_edges: free, value }
        } else {
            fc
        };
        punish(state, &fc)?;
        if state.punish_count >= cap {
            return Err(Error::BudgetExceeded(cap));
        }
        if cfg.instrument && state.punish_count % 100 == 0 {
            sandwich_check(state, m, stats);
        }
        if state.w.max_phi() > threshold {
            return Ok(RangeOutcome::Stopped);
        }
    }
}

/// Clamp a KC-feasible point into the box: x'_e = min(x_e, 1). The result
/// satisfies every plain cut constraint sum_{delta(S)} x' >= k.
pub fn kc_clamp(x: &[f64]) -> Vec<f64> {
    x.iter().map(|&v| v.min(1.0)).collect()
}

fn kahan_dot(c: &[f64], x: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for (a, b) in c.iter().zip(x) {
        let y = a * b - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FractionalSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    pub dual_lower_bound: f64,
    pub eps_used: f64,
    pub stats: SolverStats,
}

pub fn solve_lp(g: &Graph, cfg: &SolverConfig) -> Result<FractionalSolution> {
    solve_lp_detailed(g, cfg).map(|(sol, _)| sol)
}

/// Like [`solve_lp`], additionally returning the final solver state for
/// inspection of congestion and dual totals.
pub fn solve_lp_detailed(g: &Graph, cfg: &SolverConfig) -> Result<(FractionalSolution, SolverState)> {
    cfg.validate()?;
    let m = g.m();
    let costs = g.costs();
    if g.n() < 2 {
        let stats = SolverStats::default();
        let sol = FractionalSolution {
            x: vec![0.0; m],
            objective: 0.0,
            dual_lower_bound: 0.0,
            eps_used: cfg.eps,
            stats,
        };
        return Ok((sol, SolverState::new(g, cfg.eps)));
    }
    if !graph_is_k_connected(g) {
        return Err(Error::Infeasible(g.k()));
    }
    let eps = cfg.eps;
    let mut state = SolverState::new(g, eps);
    let mut stats = SolverStats { stop_threshold: cfg.stop_threshold(m), ..Default::default() };

    let w0 = state.w.materialize();
    let (estimate, grid) = static_min_free_cut_traced(g, &w0, g.k(), eps)?;
    stats.static_grid_size = grid.grid_size;
    stats.mincut_calls += grid.mincut_calls as u64;
    state.lambda = estimate.value / (1.0 + eps);

    let mut best: Option<(Vec<f64>, f64)> = None;
    let threshold = cfg.stop_threshold(m);
    loop {
        // Entry snapshot: lambda is a certified lower bound on the current
        // minimum free cut, so w / lambda is KC-feasible.
        let w_entry = state.w.materialize();
        let x: Vec<f64> = w_entry.iter().map(|&we| we / state.lambda).collect();
        let clamped = kc_clamp(&x);
        let objective = kahan_dot(&costs, &clamped);
        if best.as_ref().map_or(true, |(_, o)| objective < *o) {
            best = Some((clamped, objective));
        }
        if state.w.max_phi() > threshold {
            break;
        }
        let outcome = range_punish(g, &mut state, cfg, &mut stats)?;
        stats.ranges += 1;
        state.range_index += 1;
        match outcome {
            RangeOutcome::Advanced => state.lambda *= 1.0 + eps,
            RangeOutcome::Stopped => break,
        }
    }

    stats.punishes = state.punish_count;
    stats.max_congestion = state.max_congestion();
    stats.phi_cong_max_dev = state.phi_cong_max_dev;
    let soft = 20.0 * eps.powi(-2) * (m as f64).ln();
    stats.hit_soft_range_bound = (stats.ranges as f64) > soft;
    stats.hit_soft_punish_bound = (stats.punishes as f64) > soft * m as f64;

    let (x, objective) = best.expect("at least one snapshot is always recorded");
    let dual_lower_bound = match duality_report(&state, objective) {
        Ok(r) => r.dual_bound,
        Err(Error::DualUnavailable) => 0.0,
        Err(e) => return Err(e),
    };
    let sol = FractionalSolution { x, objective, dual_lower_bound, eps_used: eps, stats };
    Ok((sol, state))
}

#[derive(Debug, Clone, Copy)]
pub struct DualityReport {
    pub primal_best: f64,
    pub dual_bound: f64,
    pub ratio: f64,
}

/// Scale the accumulated dual mass by the worst congestion to obtain a
/// feasible dual, hence a lower bound on the LP optimum.
pub fn duality_report(state: &SolverState, primal_best: f64) -> Result<DualityReport> {
    let max_cong = state.max_congestion();
    if max_cong <= 0.0 {
        return Err(Error::DualUnavailable);
    }
    let dual_bound = state.dual_total / max_cong;
    Ok(DualityReport { primal_best, dual_bound, ratio: primal_best / dual_bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{weight_of, Graph};
    use crate::oracles::{brute_free_cut, exact_small_lp, proper_sides};
    use rand::prelude::*;
    use rand_chacha::ChaCha12Rng;

    fn cycle(n: usize, k: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n, 1.0)).collect();
        Graph::new(n, k, &edges).unwrap()
    }

    fn k4(k: u32) -> Graph {
        Graph::new(
            4,
            k,
            &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (1, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)],
        )
        .unwrap()
    }

    fn state_from_weights(g: &Graph, weights: &[f64], eps: f64) -> SolverState {
        let mut st = SolverState::new(g, eps);
        st.w = WeightFn::from_weights(weights, eps);
        st.potential = weights.len() as f64;
        st
    }

    #[test]
    fn punish_multiplies_weight_by_exp_eps_cmin_over_c() {
        // Edge of cost 2 at weight 0.5, c_min = 1 from a unit-cost edge.
        let g = Graph::new(3, 2, &[(0, 1, 2.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        // init gives w = 1/c = (0.5, 1, 1).
        let mut st = SolverState::new(&g, 0.1);
        let fc = FreeCut { side: vec![true, false, false], cut_edges: vec![0, 1], free_edges: vec![], value: 0.0 };
        punish(&mut st, &fc).unwrap();
        let expect = 0.5 * (0.1f64 * 1.0 / 2.0).exp();
        assert!((st.w.weight(0) - expect).abs() < 1e-15);
        // Bottleneck edge congestion rises by exactly 1.
        assert!((st.cong[1] - 1.0).abs() < 1e-15);
        assert!((st.cong[0] - 0.5).abs() < 1e-15);
        assert!((st.dual_total - 2.0).abs() < 1e-15);
    }

    #[test]
    fn punish_rejects_fully_free_cut() {
        let g = cycle(3, 2);
        let mut st = SolverState::new(&g, 0.1);
        let fc = FreeCut { side: vec![true, false, false], cut_edges: vec![0, 2], free_edges: vec![0, 2], value: 0.0 };
        assert!(matches!(punish(&mut st, &fc), Err(Error::DegenerateCut)));
    }

    #[test]
    fn phi_tracks_congestion() {
        let g = k4(2);
        let cfg = SolverConfig::new(0.1);
        let (_, st) = solve_lp_detailed(&g, &cfg).unwrap();
        assert!(st.punish_count > 0);
        for e in 0..g.m() {
            assert!((st.w.phi(e) - st.cong[e]).abs() <= 1e-9 * st.cong[e].max(1.0));
        }
        // w(e) <= (1/c) exp(eps * max cong)
        let bound = (0.1 * st.max_congestion()).exp();
        for e in 0..g.m() {
            assert!(st.w.weight(e) <= bound / st.w.cost(e) * (1.0 + 1e-9));
        }
    }

    #[test]
    fn range_punish_returns_immediately_when_no_cheap_cut() {
        let g = Graph::new(3, 2, &[(0, 1, 0.2), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        let eps = 0.1;
        let mut st = state_from_weights(&g, &[5.0, 1.0, 1.0], eps);
        // Min free cut value is 1 (free the heavy edge); pick lambda well below.
        st.lambda = 0.5 / (1.0 + eps);
        let mut stats = SolverStats::default();
        let cfg = SolverConfig::new(eps);
        let out = range_punish(&g, &mut st, &cfg, &mut stats).unwrap();
        assert_eq!(out, RangeOutcome::Advanced);
        assert_eq!(st.punish_count, 0);
        assert_eq!(stats.mincut_calls, 1);
    }

    #[test]
    fn range_punish_triangle_punishes_at_least_once() {
        let g = Graph::new(3, 2, &[(0, 1, 0.2), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        let eps = 0.1;
        let mut st = state_from_weights(&g, &[5.0, 1.0, 1.0], eps);
        st.lambda = 1.0;
        let mut stats = SolverStats::default();
        let cfg = SolverConfig::new(eps);
        let out = range_punish(&g, &mut st, &cfg, &mut stats).unwrap();
        assert_eq!(out, RangeOutcome::Advanced);
        assert!(st.punish_count >= 1);
    }

    #[test]
    fn range_punish_certifies_next_range() {
        // After Advanced, the brute-force minimum free cut under the updated
        // weights is at least (1+eps) * lambda.
        let mut rng = ChaCha12Rng::seed_from_u64(31);
        let eps = 0.15;
        for _ in 0..15 {
            let n = rng.gen_range(3..=6usize);
            let mut edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n, rng.gen_range(0.5..2.0))).collect();
            for _ in 0..rng.gen_range(1..=4usize) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    edges.push((u, v, rng.gen_range(0.5..2.0)));
                }
            }
            let g = Graph::new(n, 2, &edges).unwrap();
            if !crate::mincut::graph_is_k_connected(&g) {
                continue;
            }
            let mut st = SolverState::new(&g, eps);
            let opt0 = brute_free_cut(&g, &st.w.materialize(), 2).unwrap();
            st.lambda = opt0.value / (1.0 + eps);
            let cfg = SolverConfig::new(eps);
            let mut stats = SolverStats::default();
            let out = range_punish(&g, &mut st, &cfg, &mut stats).unwrap();
            assert_eq!(out, RangeOutcome::Advanced);
            let opt1 = brute_free_cut(&g, &st.w.materialize(), 2).unwrap();
            assert!(
                opt1.value >= (1.0 + eps) * st.lambda * (1.0 - 1e-9),
                "opt {} lambda {}",
                opt1.value,
                st.lambda
            );
        }
    }

    #[test]
    fn solve_lp_cycle_matches_forced_optimum() {
        for n in [3usize, 4, 6] {
            let g = cycle(n, 2);
            let eps = 0.1;
            let sol = solve_lp(&g, &SolverConfig::new(eps)).unwrap();
            let lp = n as f64;
            assert!(
                sol.objective >= lp - 1e-9 && sol.objective <= lp * (1.0 + 6.0 * eps),
                "n={n} objective {}",
                sol.objective
            );
            for &x in &sol.x {
                assert!((0.0..=1.0 + 1e-12).contains(&x));
            }
            assert_eq!(sol.stats.sandwich_failures, 0);
        }
    }

    #[test]
    fn solve_lp_k4_within_band_of_exact_lp() {
        let g = k4(3);
        let eps = 0.1;
        let sol = solve_lp(&g, &SolverConfig::new(eps)).unwrap();
        let lp = exact_small_lp(&g).unwrap();
        assert!(sol.objective >= lp.objective - 1e-7);
        assert!(
            sol.objective <= lp.objective * (1.0 + 6.0 * eps),
            "got {} lp {}",
            sol.objective,
            lp.objective
        );
    }

    #[test]
    fn solve_lp_rejects_underconnected() {
        let g = Graph::new(4, 2, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]).unwrap();
        assert!(matches!(solve_lp(&g, &SolverConfig::new(0.1)), Err(Error::Infeasible(2))));
        let g = Graph::new(4, 1, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        assert!(matches!(solve_lp(&g, &SolverConfig::new(0.1)), Err(Error::Infeasible(1))));
    }

    #[test]
    fn solve_lp_rejects_bad_eps() {
        let g = cycle(4, 2);
        assert!(solve_lp(&g, &SolverConfig::new(0.0)).is_err());
        assert!(solve_lp(&g, &SolverConfig::new(0.5)).is_err());
    }

    fn box_feasible(g: &Graph, x: &[f64], k: u32) -> bool {
        proper_sides(g.n()).all(|side| {
            let cut = g.cut_edges(&side).unwrap();
            weight_of(x, &cut) >= k as f64 - 1e-7
        })
    }

    #[test]
    fn solve_lp_random_instances_feasible_and_near_optimal() {
        let mut rng = ChaCha12Rng::seed_from_u64(41);
        let eps = 0.12;
        let mut done = 0;
        while done < 12 {
            let n = rng.gen_range(3..=6usize);
            let k = rng.gen_range(1..=3u32);
            let mut edges: Vec<_> =
                (0..n).map(|v| (v, (v + 1) % n, rng.gen_range(0.5..4.0))).collect();
            for _ in 0..rng.gen_range(2..=6usize) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    edges.push((u, v, rng.gen_range(0.5..4.0)));
                }
            }
            let g = Graph::new(n, k, &edges).unwrap();
            if g.m() > 22 || !crate::mincut::graph_is_k_connected(&g) {
                continue;
            }
            let sol = solve_lp(&g, &SolverConfig::new(eps)).unwrap();
            assert!(box_feasible(&g, &sol.x, k));
            let lp = exact_small_lp(&g).unwrap();
            assert!(sol.objective >= lp.objective - 1e-6);
            assert!(
                sol.objective <= lp.objective * (1.0 + 6.0 * eps) + 1e-9,
                "objective {} lp {}",
                sol.objective,
                lp.objective
            );
            assert!(sol.stats.sandwich_failures == 0);
            done += 1;
        }
    }

    #[test]
    fn duality_ratio_within_band() {
        let eps = 0.1;
        for g in [cycle(5, 2), k4(2), k4(3)] {
            let (sol, st) = solve_lp_detailed(&g, &SolverConfig::new(eps)).unwrap();
            let report = duality_report(&st, sol.objective).unwrap();
            assert!(report.dual_bound <= sol.objective + 1e-9);
            assert!(report.ratio <= 1.0 + 6.0 * eps, "ratio {}", report.ratio);
        }
    }

    #[test]
    fn kc_clamp_examples() {
        assert_eq!(kc_clamp(&[1.5, 0.7]), vec![1.0, 0.7]);
        assert_eq!(kc_clamp(&[1.0, 1.0, 1.0]), vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn kc_clamp_preserves_box_feasibility() {
        // A KC-feasible point stays cut-feasible after clamping.
        let mut rng = ChaCha12Rng::seed_from_u64(53);
        let mut done = 0;
        while done < 20 {
            let n = rng.gen_range(3..=6usize);
            let k = rng.gen_range(1..=3u32);
            let mut edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n, 1.0)).collect();
            for _ in 0..rng.gen_range(2..=6usize) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    edges.push((u, v, 1.0));
                }
            }
            let g = Graph::new(n, k, &edges).unwrap();
            if !crate::mincut::graph_is_k_connected(&g) {
                continue;
            }
            // w / lambda with lambda = min free cut value is KC-feasible.
            let w: Vec<f64> = (0..g.m()).map(|_| rng.gen_range(0.2..3.0)).collect();
            let fc = brute_free_cut(&g, &w, k).unwrap();
            if fc.value <= 0.0 {
                continue;
            }
            let x: Vec<f64> = w.iter().map(|&we| we / fc.value).collect();
            let clamped = kc_clamp(&x);
            assert!(box_feasible(&g, &clamped, k));
            done += 1;
        }
    }

    #[test]
    fn dual_unavailable_without_punishes() {
        let g = cycle(3, 2);
        let st = SolverState::new(&g, 0.1);
        assert!(matches!(duality_report(&st, 1.0), Err(Error::DualUnavailable)));
    }
}
