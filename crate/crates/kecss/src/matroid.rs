//! Weighted matroid intersection over arc sets, plus the two oracles needed
//! for minimum-cost k-arborescences: a partition matroid on arc heads and
//! the k-fold union of the graphic matroid on underlying endpoints.

pub(crate) trait MatroidOracle {
    /// `set` is independent; is `set + x` independent? (x not in set)
    fn can_add(&self, set: &[usize], x: usize) -> bool;
    /// `set` is independent; is `set - out + x` independent?
    fn can_exchange(&self, set: &[usize], out: usize, x: usize) -> bool;
}

/// At most cap(v) chosen elements may share head v.
pub(crate) struct HeadPartition {
    pub head: Vec<usize>,
    pub cap: Vec<usize>,
}

impl MatroidOracle for HeadPartition {
    fn can_add(&self, set: &[usize], x: usize) -> bool {
        let h = self.head[x];
        let used = set.iter().filter(|&&e| self.head[e] == h).count();
        used < self.cap[h]
    }

    fn can_exchange(&self, set: &[usize], out: usize, x: usize) -> bool {
        let h = self.head[x];
        let used = set.iter().filter(|&&e| e != out && self.head[e] == h).count();
        used < self.cap[h]
    }
}

/// k-fold union of the graphic matroid: an element set is independent iff
/// its underlying edges partition into k forests. Tested constructively by
/// incremental insertion with breadth-first displacement chains.
pub(crate) struct KForestUnion {
    pub n: usize,
    pub k: usize,
    /// Underlying endpoints per element.
    pub ends: Vec<(usize, usize)>,
}

impl KForestUnion {
    fn partitions(&self, elems: &[usize]) -> bool {
        let mut part = ForestPartition::new(self.n, self.k);
        elems.iter().all(|&e| part.insert(e, self.ends[e]))
    }
}

impl MatroidOracle for KForestUnion {
    fn can_add(&self, set: &[usize], x: usize) -> bool {
        let mut elems = set.to_vec();
        elems.push(x);
        self.partitions(&elems)
    }

    fn can_exchange(&self, set: &[usize], out: usize, x: usize) -> bool {
        let mut elems: Vec<usize> = set.iter().copied().filter(|&e| e != out).collect();
        elems.push(x);
        self.partitions(&elems)
    }
}

struct ForestPartition {
    n: usize,
    k: usize,
    // forests[c] holds (element, u, v).
    forests: Vec<Vec<(usize, usize, usize)>>,
    color: std::collections::HashMap<usize, usize>,
}

impl ForestPartition {
    fn new(n: usize, k: usize) -> Self {
        ForestPartition { n, k, forests: vec![Vec::new(); k], color: Default::default() }
    }

    /// Vertices on the tree path between u and v in forest c, returned as
    /// the elements along it; empty when u and v are not yet connected.
    fn cycle(&self, c: usize, u: usize, v: usize, skip: usize) -> Option<Vec<usize>> {
        // BFS from u to v through forest c, ignoring element `skip`.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for &(e, a, b) in &self.forests[c] {
            if e != skip {
                adj[a].push((b, e));
                adj[b].push((a, e));
            }
        }
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[u] = true;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            if a == v {
                let mut path = Vec::new();
                let mut cur = v;
                while let Some((p, e)) = pred[cur] {
                    path.push(e);
                    cur = p;
                }
                return Some(path);
            }
            for &(b, e) in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    pred[b] = Some((a, e));
                    queue.push_back(b);
                }
            }
        }
        None
    }

    /// Try to add element e; on success the forests are updated, possibly
    /// recoloring a chain of earlier elements.
    fn insert(&mut self, e: usize, ends: (usize, usize)) -> bool {
        let mut pred: std::collections::HashMap<usize, (usize, usize)> = Default::default();
        let mut queue = std::collections::VecDeque::from([e]);
        let mut seen: std::collections::HashSet<usize> = [e].into_iter().collect();
        let mut endpoints: std::collections::HashMap<usize, (usize, usize)> = Default::default();
        endpoints.insert(e, ends);
        while let Some(f) = queue.pop_front() {
            let (fu, fv) = endpoints[&f];
            for c in 0..self.k {
                if self.color.get(&f) == Some(&c) {
                    continue;
                }
                match self.cycle(c, fu, fv, f) {
                    None => {
                        // f fits into c: settle the displacement chain.
                        let mut cur = f;
                        let mut dest = c;
                        loop {
                            let (cu, cv) = endpoints[&cur];
                            let old = self.color.get(&cur).copied();
                            if let Some(oc) = old {
                                self.forests[oc].retain(|&(x, _, _)| x != cur);
                            }
                            self.forests[dest].push((cur, cu, cv));
                            self.color.insert(cur, dest);
                            match pred.get(&cur).copied() {
                                Some((p, _)) => {
                                    // The parent displaced cur out of cur's
                                    // old color; the parent now takes it.
                                    dest = old.expect("chain interior is colored");
                                    cur = p;
                                }
                                None => return true,
                            }
                        }
                    }
                    Some(path) => {
                        for g in path {
                            if seen.insert(g) {
                                let (_, gu, gv) = self.forests[c]
                                    .iter()
                                    .copied()
                                    .find(|&(x, _, _)| x == g)
                                    .expect("cycle element lives in forest c");
                                endpoints.insert(g, (gu, gv));
                                pred.insert(g, (f, c));
                                queue.push_back(g);
                            }
                        }
                    }
                }
            }
        }
        false
    }
}

/// Minimum-cost common independent set of the target size, by shortest
/// augmenting paths in the exchange graph with lexicographic
/// (cost, arc count, index) ordering. Returns None when no common
/// independent set of that size exists.
pub(crate) fn min_cost_common_independent(
    n_elems: usize,
    cost: &[f64],
    m1: &dyn MatroidOracle,
    m2: &dyn MatroidOracle,
    target: usize,
) -> Option<Vec<usize>> {
    let mut s: Vec<usize> = Vec::new();
    while s.len() < target {
        let in_s = {
            let mut b = vec![false; n_elems];
            for &e in &s {
                b[e] = true;
            }
            b
        };
        // Node lengths: cost(x) to add, -cost(y) to drop.
        let len = |e: usize| if in_s[e] { -cost[e] } else { cost[e] };
        // Arcs of the exchange graph.
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for x in 0..n_elems {
            if in_s[x] {
                continue;
            }
            for &y in &s {
                if m1.can_exchange(&s, y, x) {
                    arcs.push((y, x));
                }
                if m2.can_exchange(&s, y, x) {
                    arcs.push((x, y));
                }
            }
        }
        let sources: Vec<usize> =
            (0..n_elems).filter(|&x| !in_s[x] && m1.can_add(&s, x)).collect();
        let sinks: Vec<bool> = (0..n_elems)
            .map(|x| !in_s[x] && m2.can_add(&s, x))
            .collect();
        // Bellman-Ford on (dist, hops) with index tie-breaks.
        const INF: f64 = f64::INFINITY;
        let mut dist = vec![INF; n_elems];
        let mut hops = vec![usize::MAX; n_elems];
        let mut pred: Vec<Option<usize>> = vec![None; n_elems];
        for &x in &sources {
            dist[x] = len(x);
            hops[x] = 0;
        }
        for _ in 0..n_elems {
            let mut changed = false;
            for &(a, b) in &arcs {
                if dist[a] == INF {
                    continue;
                }
                let nd = dist[a] + len(b);
                let nh = hops[a] + 1;
                let better = nd < dist[b] - 1e-9
                    || (nd < dist[b] + 1e-9
                        && (nh < hops[b] || (nh == hops[b] && pred[b].map_or(true, |p| a < p))));
                if better {
                    dist[b] = nd;
                    hops[b] = nh;
                    pred[b] = Some(a);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut best: Option<usize> = None;
        for x in 0..n_elems {
            if !sinks[x] || dist[x] == INF {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    dist[x] < dist[b] - 1e-9
                        || (dist[x] < dist[b] + 1e-9
                            && (hops[x] < hops[b] || (hops[x] == hops[b] && x < b)))
                }
            };
            if better {
                best = Some(x);
            }
        }
        let end = best?;
        // Symmetric difference along the path.
        let mut flips = vec![end];
        let mut cur = end;
        while let Some(p) = pred[cur] {
            flips.push(p);
            cur = p;
        }
        for f in flips {
            if in_s[f] {
                s.retain(|&e| e != f);
            } else {
                s.push(f);
            }
        }
        s.sort_unstable();
    }
    Some(s)
}
