//! Acceptance gate: one test per release criterion, each emitting a single
//! PASS line (failures panic with context). Run with --nocapture to see the
//! lines.

use kecss::free_cut::{static_min_free_cut, truncate};
use kecss::graph::{val, Graph};
use kecss::mincut::{edge_connectivity_at_least, global_min_cut, graph_is_k_connected};
use kecss::mwu::{duality_report, solve_lp_detailed, SolverConfig};
use kecss::oracles::{brute_free_cut, exact_small_lp, exhaustive_ip};
use kecss::rounding::{min_cost_k_arborescence, round, Arc, Digraph};
use kecss::sparsify::{compress, verify_constrained_cuts, CompressConfig};
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;

fn proper_sides(n: usize) -> Vec<Vec<bool>> {
    (1u32..(1 << (n - 1)))
        .map(|mask| (0..n).map(|v| v < n - 1 && (mask >> v) & 1 == 1).collect())
        .collect()
}

/// Random k-edge-connected instance with log-uniform weights.
fn random_connected(rng: &mut ChaCha12Rng, n_max: usize, k_hi: u32, m_max: usize) -> Graph {
    loop {
        let n = rng.gen_range(4..=n_max);
        let k = rng.gen_range(2..=k_hi);
        let mut edges: Vec<(usize, usize, f64)> = (0..n)
            .map(|v| (v, (v + 1) % n, 10f64.powf(rng.gen_range(-1.0..2.0))))
            .collect();
        let extra = rng.gen_range(0..=(m_max - n).min(8));
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.push((u, v, 10f64.powf(rng.gen_range(-1.0..2.0))));
            }
        }
        let g = Graph::new(n, k, &edges).unwrap();
        if g.m() <= m_max && graph_is_k_connected(&g) {
            return g;
        }
    }
}

#[test]
fn criterion_1_free_cut_oracle_accuracy() {
    let mut rng = ChaCha12Rng::seed_from_u64(1001);
    for i in 0..200 {
        let g = random_connected(&mut rng, 10, 3, 20);
        let w = g.costs();
        let eps = 0.1;
        let fc = static_min_free_cut(&g, &w, g.k(), eps).unwrap();
        let opt = brute_free_cut(&g, &w, g.k()).unwrap();
        assert!(
            fc.value >= opt.value * (1.0 - 1e-9) && fc.value <= 1.1 * opt.value * (1.0 + 1e-9),
            "instance {i}: got {} opt {}",
            fc.value,
            opt.value
        );
    }
    println!("ACCEPTANCE 1 free-cut oracle accuracy: PASS");
}

#[test]
fn criterion_2_range_mapping_theorem() {
    let mut rng = ChaCha12Rng::seed_from_u64(1002);
    for i in 0..200 {
        let g = random_connected(&mut rng, 10, 3, 20);
        let w = g.costs();
        let k = g.k();
        let opt = brute_free_cut(&g, &w, k).unwrap().value;
        let sides = proper_sides(g.n());
        for j in 0..20 {
            let gamma = 10f64.powf(rng.gen_range(-1.7..0.0));
            let u: f64 = rng.gen_range(0.0..1.0);
            let lambda = opt / (1.0 + gamma * u); // OPT in [lambda, (1+gamma)*lambda)
            let rho = (1.0 + gamma) * lambda;
            let ctx = truncate(&w, rho).unwrap();
            // Part 1: the truncated min cut lands in [k*rho/(1+gamma), k*rho).
            let mc = global_min_cut(&g, &ctx.w_rho);
            let lo = k as f64 * rho / (1.0 + gamma);
            let hi = k as f64 * rho;
            assert!(
                mc.value >= lo * (1.0 - 1e-9) && mc.value < hi * (1.0 + 1e-9),
                "instance {i} pair {j}: mincut {} not in [{lo}, {hi})",
                mc.value
            );
            // Part 2: every cheap truncated cut maps to a cheap free cut.
            for side in &sides {
                let cut = g.cut_edges(side).unwrap();
                if ctx.truncated_weight(&cut) >= hi {
                    continue;
                }
                let free: Vec<usize> = ctx.heavy_in(&cut).collect();
                let v = val(&w, &cut, &free, k);
                assert!(
                    v < (1.0 + gamma) * lambda * (1.0 + 1e-9),
                    "instance {i} pair {j}: val {v} vs bound {}",
                    (1.0 + gamma) * lambda
                );
            }
        }
    }
    println!("ACCEPTANCE 2 range mapping theorem: PASS");
}

fn lp_corpus() -> Vec<Graph> {
    let mut rng = ChaCha12Rng::seed_from_u64(1003);
    (0..50).map(|_| random_connected(&mut rng, 8, 3, 16)).collect()
}

#[test]
fn criterion_3_lp_solver_approximation() {
    let eps = 0.05;
    for (i, g) in lp_corpus().iter().enumerate() {
        let (sol, st) = solve_lp_detailed(g, &SolverConfig::new(eps)).unwrap();
        let lp = exact_small_lp(g).unwrap();
        assert!(
            sol.objective >= lp.objective * (1.0 - 1e-7),
            "instance {i}: objective {} below LP {}",
            sol.objective,
            lp.objective
        );
        assert!(
            sol.objective <= (1.0 + 6.0 * eps) * lp.objective * (1.0 + 1e-9),
            "instance {i}: objective {} above band of LP {}",
            sol.objective,
            lp.objective
        );
        let report = duality_report(&st, sol.objective).unwrap();
        assert!(
            sol.objective >= report.dual_bound - 1e-9,
            "instance {i}: weak duality violated"
        );
    }
    println!("ACCEPTANCE 3 LP solver approximation: PASS");
}

#[test]
fn criterion_4_forced_value_cycles() {
    let eps = 0.1;
    for n in 4..=12usize {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n, 1.0)).collect();
        let g = Graph::new(n, 2, &edges).unwrap();
        if n <= 8 {
            let lp = exact_small_lp(&g).unwrap();
            assert!((lp.objective - n as f64).abs() < 1e-7, "C_{n} oracle LP {}", lp.objective);
        }
        let (sol, _) = solve_lp_detailed(&g, &SolverConfig::new(eps)).unwrap();
        assert!(
            sol.objective >= n as f64 - 1e-9
                && sol.objective <= (1.0 + 6.0 * eps) * n as f64,
            "C_{n}: solver objective {}",
            sol.objective
        );
        let res = round(&g, &sol.x, sol.objective, eps, 5).unwrap();
        assert_eq!(res.edges, (0..n).collect::<Vec<_>>(), "C_{n} rounding edges");
        assert!((res.cost - n as f64).abs() < 1e-9);
    }
    println!("ACCEPTANCE 4 forced-value cycle instances: PASS");
}

#[test]
fn criterion_5_rounding_guarantee() {
    let eps = 0.05;
    for (i, g) in lp_corpus().iter().enumerate() {
        let (sol, _) = solve_lp_detailed(g, &SolverConfig::new(eps)).unwrap();
        let lp = exact_small_lp(g).unwrap();
        let res = round(g, &sol.x, sol.objective, eps, 11 + i as u64).unwrap();
        assert!(
            edge_connectivity_at_least(g, &res.edges, g.k()),
            "instance {i}: output not k-edge-connected"
        );
        assert!(
            res.cost <= 2.0 * (1.0 + 3.0 * eps) * lp.objective * (1.0 + 1e-9),
            "instance {i}: cost {} vs LP {}",
            res.cost,
            lp.objective
        );
        if g.m() <= 22 {
            let ip = exhaustive_ip(g).unwrap();
            assert!(
                res.cost <= 2.0 * ip.cost * (1.0 + 1e-9),
                "instance {i}: cost {} vs IP {}",
                res.cost,
                ip.cost
            );
        }
    }
    println!("ACCEPTANCE 5 rounding guarantee: PASS");
}

#[test]
fn criterion_6_sparsifier() {
    let n = 30usize;
    let eps = 0.3;
    let mut rng = ChaCha12Rng::seed_from_u64(1006);
    let mut edges: Vec<(usize, usize, f64)> = (0..n).map(|v| (v, (v + 1) % n, 1.0)).collect();
    for _ in 0..50 {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v, 1.0));
        }
    }
    let g = Graph::new(n, 2, &edges).unwrap();
    let x: Vec<f64> = (0..g.m()).map(|_| rng.gen_range(0.3..1.0)).collect();
    // Cut sides to audit: all singletons plus pseudo-random subsets.
    let mut sides: Vec<Vec<bool>> = (0..n).map(|v| (0..n).map(|u| u == v).collect()).collect();
    for _ in 0..40 {
        let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.4)).collect();
        let c = side.iter().filter(|&&b| b).count();
        if c > 0 && c < n {
            sides.push(side);
        }
    }
    let cfg = CompressConfig::new(eps);
    let delta = cfg.delta(n, 2);
    let support_bound = 4.0 * delta * n as f64 / (eps * eps);
    let seeds = 200u64;
    let mut pair_violations = 0usize;
    let mut pair_total = 0usize;
    let mut support_ok = 0usize;
    for seed in 0..seeds {
        let sp = compress(&g, &x, &cfg, seed).unwrap();
        let kept: Vec<f64> = sp.y.iter().map(|&ye| ye / (1.0 + eps)).collect();
        let rep = verify_constrained_cuts(&g, &x, &kept, &sides, eps).unwrap();
        pair_violations += rep.violations;
        pair_total += rep.checked;
        if (sp.support_size as f64) <= support_bound {
            support_ok += 1;
        }
        if seed == 0 {
            let again = compress(&g, &x, &cfg, 0).unwrap();
            assert_eq!(sp.y, again.y, "same seed must reproduce identical output");
            assert_eq!(sp.support_size, again.support_size);
        }
    }
    assert!(
        (pair_violations as f64) <= 0.05 * pair_total as f64,
        "distortion on {pair_violations}/{pair_total} pairs"
    );
    assert!(
        support_ok as f64 >= 0.95 * seeds as f64,
        "support bound met on only {support_ok}/{seeds} seeds"
    );
    println!("ACCEPTANCE 6 sparsifier: PASS");
}

#[test]
fn criterion_7_arborescence_exactness() {
    let mut rng = ChaCha12Rng::seed_from_u64(1007);
    for i in 0..100 {
        let n = rng.gen_range(3..=6usize);
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for v in 0..n {
            arcs.push((v, (v + 1) % n));
            arcs.push(((v + 1) % n, v));
        }
        let cap = 14.max(2 * n);
        while arcs.len() < rng.gen_range(2 * n..=cap) {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                arcs.push((u, v));
            }
        }
        let d = Digraph {
            n,
            arcs: arcs
                .iter()
                .enumerate()
                .map(|(id, &(u, v))| Arc {
                    id,
                    tail: u,
                    head: v,
                    cost: rng.gen_range(1..10) as f64,
                    source_edge: id,
                })
                .collect(),
        };
        let arb = min_cost_k_arborescence(&d, 0, 2).unwrap();
        let brute = brute_min_k_arb(&d, 0, 2).expect("feasible by construction");
        assert!(
            (arb.cost - brute).abs() < 1e-9,
            "digraph {i}: matroid {} brute {}",
            arb.cost,
            brute
        );
    }
    println!("ACCEPTANCE 7 arborescence exactness: PASS");
}

fn brute_min_k_arb(d: &Digraph, root: usize, k: u32) -> Option<f64> {
    let t = d.arcs.len();
    let target = k as usize * (d.n - 1);
    let pairs_of = |mask: u32| -> Vec<(usize, usize)> {
        (0..t)
            .filter(|&a| mask >> a & 1 == 1)
            .map(|a| (d.arcs[a].tail, d.arcs[a].head))
            .collect()
    };
    let mut best: Option<f64> = None;
    for mask in 0u32..(1 << t) {
        if mask.count_ones() as usize != target {
            continue;
        }
        let pairs = pairs_of(mask);
        let ok = (0..d.n)
            .filter(|&v| v != root)
            .all(|v| unit_flow(d.n, &pairs, root, v) >= k as usize);
        if ok {
            let c: f64 = (0..t)
                .filter(|&a| mask >> a & 1 == 1)
                .map(|a| d.arcs[a].cost)
                .sum();
            best = Some(best.map_or(c, |b: f64| b.min(c)));
        }
    }
    best
}

#[test]
fn criterion_8_bookkeeping_identities() {
    let mut rng = ChaCha12Rng::seed_from_u64(1008);
    for eps in [0.05f64, 0.1, 0.2] {
        for _ in 0..8 {
            let g = random_connected(&mut rng, 8, 3, 16);
            let (sol, st) = solve_lp_detailed(&g, &SolverConfig::new(eps)).unwrap();
            assert!(
                sol.stats.phi_cong_max_dev <= 1e-9,
                "phi/cong deviation {}",
                sol.stats.phi_cong_max_dev
            );
            assert_eq!(sol.stats.sandwich_failures, 0, "potential sandwich failed");
            let m = g.m() as f64;
            assert!(
                (sol.stats.ranges as f64) <= 20.0 * eps.powi(-2) * m.ln(),
                "range count {} out of soft bound",
                sol.stats.ranges
            );
            assert!(
                (sol.stats.punishes as f64) <= 20.0 * eps.powi(-2) * m * m.ln(),
                "punish count {} out of soft bound",
                sol.stats.punishes
            );
            assert!(!sol.stats.hit_soft_range_bound && !sol.stats.hit_soft_punish_bound);
            // Redundant sanity tying the identities to the final state.
            let dev = (0..g.m())
                .map(|e| (st.w.phi(e) - st.cong[e]).abs() / st.cong[e].max(1.0))
                .fold(0.0, f64::max);
            assert!(dev <= 1e-9);
        }
    }
    println!("ACCEPTANCE 8 bookkeeping identities: PASS");
}

/// Unit-capacity max flow by BFS augmentation, for arborescence ground truth.
fn unit_flow(n: usize, arcs: &[(usize, usize)], s: usize, t: usize) -> usize {
    let mut cap = vec![vec![0i32; n]; n];
    for &(u, v) in arcs {
        cap[u][v] += 1;
    }
    let mut flow = 0;
    loop {
        let mut pred = vec![usize::MAX; n];
        pred[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if pred[v] == usize::MAX && cap[u][v] > 0 {
                    pred[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if pred[t] == usize::MAX {
            return flow;
        }
        let mut v = t;
        while v != s {
            let u = pred[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}
