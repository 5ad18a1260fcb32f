//! Edmonds-Karp maximum flow on a dense capacity matrix derived from a
//! seed tour.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::DistanceStore;

/// Residual capacities at or below this are treated as saturated.
pub const RESIDUAL_EPS: f64 = 1e-12;

pub const CAPACITY_SCALE: f64 = 1000.0;

#[derive(Debug, Clone, PartialEq)]
pub struct FlowNetwork {
    n: usize,
    cap: Vec<f64>,
    thresholds: Vec<f64>,
}

impl FlowNetwork {
    pub fn from_capacities(n: usize, cap: Vec<f64>) -> Self {
        assert_eq!(cap.len(), n * n);
        FlowNetwork {
            n,
            cap,
            thresholds: vec![0.0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn cap(&self, i: usize, j: usize) -> f64 {
        self.cap[i * self.n + j]
    }

    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }
}

/// `cap[i][j] = c[i][j] / 1000` when `c[i][j]` exceeds the cost of the seed
/// tour arc entering `j`, else zero.
pub fn derive_capacities<D: DistanceStore>(store: &D, seed: &[usize]) -> FlowNetwork {
    let n = store.n();
    debug_assert_eq!(seed.len(), n);
    let mut thresholds = vec![0.0; n];
    let mut entering = vec![0; n];
    for k in 0..n {
        let j = seed[k];
        entering[j] = store.get(seed[(k + n - 1) % n], j);
        thresholds[j] = entering[j] as f64;
    }
    let mut cap = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let c = store.get(i, j);
            if i != j && c > entering[j] {
                cap[i * n + j] = c as f64 / CAPACITY_SCALE;
            }
        }
    }
    FlowNetwork { n, cap, thresholds }
}

/// Flow assignment produced by one Edmonds-Karp run.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxFlow {
    pub value: f64,
    n: usize,
    flow: Vec<f64>,
    pub augmentations: usize,
}

impl MaxFlow {
    #[inline]
    pub fn flow(&self, i: usize, j: usize) -> f64 {
        self.flow[i * self.n + j]
    }
}

pub fn edmonds_karp(net: &FlowNetwork, source: usize, sink: usize) -> Result<f64> {
    edmonds_karp_flow(net, source, sink).map(|f| f.value)
}

/// Shortest augmenting paths by breadth-first search, scanning neighbors
/// in ascending order.
#[allow(clippy::needless_range_loop)]
pub fn edmonds_karp_flow(net: &FlowNetwork, source: usize, sink: usize) -> Result<MaxFlow> {
    let n = net.n;
    if source == sink {
        return Err(Error::InvalidArgument("source and sink must differ".into()));
    }
    if source >= n || sink >= n {
        return Err(Error::InvalidArgument(format!(
            "source {source} / sink {sink} out of range for {n} vertices"
        )));
    }
    let mut flow = vec![0.0; n * n];
    let residual =
        |flow: &[f64], i: usize, j: usize| net.cap[i * n + j] - flow[i * n + j] + flow[j * n + i];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut value = 0.0;
    let mut augmentations = 0;

    loop {
        parent.fill(usize::MAX);
        parent[source] = source;
        queue.clear();
        queue.push_back(source);
        'bfs: while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && residual(&flow, u, v) > RESIDUAL_EPS {
                    parent[v] = u;
                    if v == sink {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }

        let mut bottleneck = f64::INFINITY;
        let mut v = sink;
        while v != source {
            let u = parent[v];
            bottleneck = bottleneck.min(residual(&flow, u, v));
            v = u;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            // cancel opposing flow first, then push forward
            let back = flow[v * n + u];
            let cancel = back.min(bottleneck);
            flow[v * n + u] = back - cancel;
            flow[u * n + v] += bottleneck - cancel;
            v = u;
        }
        value += bottleneck;
        augmentations += 1;
    }

    Ok(MaxFlow {
        value,
        n,
        flow,
        augmentations,
    })
}

/// Sum of independent max-flows from vertex 0 to every other vertex.
pub fn maxflow_all_sinks(net: &FlowNetwork) -> f64 {
    (1..net.n)
        .map(|sink| edmonds_karp(net, 0, sink).expect("sink differs from source"))
        .sum()
}

/// Per-seed checksum: the flow sum truncated toward zero.
pub fn checksum_maxflow(total: f64) -> i64 {
    total.trunc() as i64
}
