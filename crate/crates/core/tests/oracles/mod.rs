//! Brute-force reference implementations. They share no code path with the
//! library kernels beyond reading instance data.
#![allow(dead_code)]

use broute_core::espprc::EspprcGraph;
use broute_core::maxflow::FlowNetwork;
use broute_core::Instance;

pub fn recost(inst: &Instance, order: &[usize]) -> i64 {
    let n = order.len();
    let mut total = 0;
    for k in 0..n {
        total += inst.cost(order[k], order[(k + 1) % n]);
    }
    total
}

/// Tour with positions `i+1..=j` reversed, built from scratch.
fn two_opt_candidate(order: &[usize], i: usize, j: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(order.len());
    out.extend_from_slice(&order[..=i]);
    out.extend(order[i + 1..=j].iter().rev());
    out.extend_from_slice(&order[j + 1..]);
    out
}

/// Tour with `len` vertices from `start` moved right after the vertex at
/// position `dest`, or `None` when the edge touches the segment.
fn or_opt_candidate(order: &[usize], len: usize, start: usize, dest: usize) -> Option<Vec<usize>> {
    let n = order.len();
    let segment = &order[start..start + len];
    let anchor = order[dest];
    let anchor_next = order[(dest + 1) % n];
    if segment.contains(&anchor) || segment.contains(&anchor_next) {
        return None;
    }
    let mut rest: Vec<usize> = order
        .iter()
        .copied()
        .filter(|v| !segment.contains(v))
        .collect();
    let at = rest.iter().position(|&v| v == anchor).unwrap();
    for (k, &v) in segment.iter().enumerate() {
        rest.insert(at + 1 + k, v);
    }
    Some(rest)
}

pub fn two_opt_count(inst: &Instance, seed: &[usize]) -> (u64, Vec<usize>) {
    let n = seed.len();
    let mut tour = seed.to_vec();
    let mut count = 0;
    'outer: loop {
        let current = recost(inst, &tour);
        for i in 0..n - 1 {
            for j in i + 1..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let cand = two_opt_candidate(&tour, i, j);
                if recost(inst, &cand) < current {
                    tour = cand;
                    count += 1;
                    continue 'outer;
                }
            }
        }
        return (count, tour);
    }
}

pub fn or_opt_count(inst: &Instance, seed: &[usize]) -> (u64, Vec<usize>) {
    let n = seed.len();
    let mut tour = seed.to_vec();
    let mut count = 0;
    'outer: loop {
        let current = recost(inst, &tour);
        for len in 1..=3 {
            for start in 0..=n - len {
                for dest in 0..n {
                    let Some(cand) = or_opt_candidate(&tour, len, start, dest) else {
                        continue;
                    };
                    if recost(inst, &cand) < current {
                        tour = cand;
                        count += 1;
                        continue 'outer;
                    }
                }
            }
        }
        return (count, tour);
    }
}

/// Smallest recost difference over the whole 2-opt neighborhood.
pub fn best_two_opt_gain(inst: &Instance, order: &[usize]) -> i64 {
    let n = order.len();
    let base = recost(inst, order);
    let mut best = i64::MAX;
    for i in 0..n - 1 {
        for j in i + 1..n {
            if !(i == 0 && j == n - 1) {
                best = best.min(recost(inst, &two_opt_candidate(order, i, j)) - base);
            }
        }
    }
    best
}

pub fn best_or_opt_gain(inst: &Instance, order: &[usize]) -> i64 {
    let n = order.len();
    let base = recost(inst, order);
    let mut best = i64::MAX;
    for len in 1..=3 {
        for start in 0..=n - len {
            for dest in 0..n {
                if let Some(cand) = or_opt_candidate(order, len, start, dest) {
                    best = best.min(recost(inst, &cand) - base);
                }
            }
        }
    }
    best
}

/// Straight-line LNS: insertion cost measured as the change in full tour
/// cost of the partial cycle. Also returns the incumbent cost per iteration.
pub fn lns(inst: &Instance, seed: &[usize], iterations: usize) -> (i64, Vec<i64>) {
    let mut incumbent = seed.to_vec();
    let mut trace = Vec::new();
    let mut checksum = 0;
    for _ in 0..iterations {
        let mut partial: Vec<usize> = incumbent.iter().skip(1).step_by(2).copied().collect();
        let mut removed: Vec<usize> = incumbent.iter().step_by(2).copied().collect();
        while !removed.is_empty() {
            let base = recost(inst, &partial);
            let mut best: Option<(i64, usize, usize)> = None;
            for (r, &v) in removed.iter().enumerate() {
                for pos in 1..=partial.len() {
                    let mut cand = partial.clone();
                    cand.insert(pos, v);
                    let delta = recost(inst, &cand) - base;
                    if best.is_none_or(|(d, _, _)| delta < d) {
                        best = Some((delta, r, pos));
                    }
                }
            }
            let (delta, r, pos) = best.unwrap();
            partial.insert(pos, removed.remove(r));
            checksum += delta;
        }
        if recost(inst, &partial) < recost(inst, &incumbent) {
            incumbent = partial;
        }
        trace.push(recost(inst, &incumbent));
    }
    (checksum, trace)
}

/// Exhaustive DFS over every elementary, resource-feasible cycle through
/// the source with at least one other vertex. No dominance.
pub fn espprc(g: &EspprcGraph) -> f64 {
    fn dfs(
        g: &EspprcGraph,
        v: usize,
        cost: f64,
        used: u32,
        on_path: &mut Vec<bool>,
        best: &mut f64,
    ) {
        if v != 0 {
            let closed = cost + g.rc(v, 0);
            if closed < *best {
                *best = closed;
            }
        }
        for j in 1..g.n() {
            if on_path[j] {
                continue;
            }
            let need: u32 = (0..6).filter(|r| j & (1 << r) != 0).map(|r| 1 << r).sum();
            if used & need != 0 {
                continue;
            }
            on_path[j] = true;
            dfs(g, j, cost + g.rc(v, j), used | need, on_path, best);
            on_path[j] = false;
        }
    }
    let mut on_path = vec![false; g.n()];
    on_path[0] = true;
    let mut best = f64::INFINITY;
    dfs(g, 0, 0.0, 0, &mut on_path, &mut best);
    best
}

/// Minimum `s-t` cut by enumerating every vertex set containing `s` and
/// not `t`.
pub fn min_cut(net: &FlowNetwork, s: usize, t: usize) -> f64 {
    let n = net.n();
    let others: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
    let mut best = f64::INFINITY;
    for mask in 0u64..(1 << others.len()) {
        let mut side = vec![false; n];
        side[s] = true;
        for (k, &v) in others.iter().enumerate() {
            side[v] = mask & (1 << k) != 0;
        }
        let mut cut = 0.0;
        for i in 0..n {
            for j in 0..n {
                if side[i] && !side[j] {
                    cut += net.cap(i, j);
                }
            }
        }
        best = best.min(cut);
    }
    best
}

/// Reduced costs straight from the definition.
pub fn reduced_cost(inst: &Instance, seed: &[usize], i: usize, j: usize) -> f64 {
    let k = seed.iter().position(|&v| v == j).unwrap();
    let pred = seed[(k + seed.len() - 1) % seed.len()];
    inst.cost(i, j) as f64 - inst.cost(pred, j) as f64
}

pub fn capacity(inst: &Instance, seed: &[usize], i: usize, j: usize) -> f64 {
    let k = seed.iter().position(|&v| v == j).unwrap();
    let pred = seed[(k + seed.len() - 1) % seed.len()];
    if i != j && inst.cost(i, j) > inst.cost(pred, j) {
        inst.cost(i, j) as f64 / 1000.0
    } else {
        0.0
    }
}

/// `floor(100 * sqrt(dx^2 + dy^2))` for integer offsets, exactly.
pub fn exact_euclid_cost(dx: i64, dy: i64) -> i64 {
    let target = 10_000 * (dx * dx + dy * dy);
    let mut r = (target as f64).sqrt() as i64;
    while r * r > target {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= target {
        r += 1;
    }
    r
}
