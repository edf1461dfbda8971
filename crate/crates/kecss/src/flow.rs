//! Small integer max-flow used for arborescence feasibility checks and the
//! exhaustive IP oracle. BFS augmenting paths; capacities are small ints.

#[derive(Clone)]
pub(crate) struct FlowNet {
    n: usize,
    // (to, cap, rev-index)
    adj: Vec<Vec<(usize, i64, usize)>>,
}

impl FlowNet {
    pub(crate) fn new(n: usize) -> Self {
        FlowNet { n, adj: vec![Vec::new(); n] }
    }

    pub(crate) fn add_arc(&mut self, u: usize, v: usize, cap: i64) {
        let ru = self.adj[u].len();
        let rv = self.adj[v].len();
        self.adj[u].push((v, cap, rv));
        self.adj[v].push((u, 0, ru));
    }

    /// Max flow from s to t, stopping once `limit` is reached.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0i64;
        while total < limit {
            // BFS for an augmenting path.
            let mut pred: Vec<Option<(usize, usize)>> = vec![None; self.n];
            let mut seen = vec![false; self.n];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for (i, &(v, cap, _)) in self.adj[u].iter().enumerate() {
                    if cap > 0 && !seen[v] {
                        seen[v] = true;
                        pred[v] = Some((u, i));
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            // Bottleneck along the path.
            let mut aug = limit - total;
            let mut v = t;
            while let Some((u, i)) = pred[v] {
                aug = aug.min(self.adj[u][i].1);
                v = u;
            }
            let mut v = t;
            while let Some((u, i)) = pred[v] {
                self.adj[u][i].1 -= aug;
                let rev = self.adj[u][i].2;
                self.adj[v][rev].1 += aug;
                v = u;
            }
            total += aug;
        }
        total
    }
}

/// Max flow root -> target over the given unit-capacity arcs.
pub(crate) fn unit_arc_flow(
    n: usize,
    arcs: &[(usize, usize)],
    root: usize,
    target: usize,
    limit: i64,
) -> i64 {
    let mut net = FlowNet::new(n);
    for &(u, v) in arcs {
        net.add_arc(u, v, 1);
    }
    net.max_flow(root, target, limit)
}
