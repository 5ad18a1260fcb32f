//! Deterministic large neighborhood search.
//!
//! Every iteration removes the vertices at even tour positions and
//! reinserts them one at a time by cheapest insertion. The checksum is the
//! running total of insertion deltas `c(a,v) + c(v,b) - c(a,b)`.

use crate::error::{Error, Result};
use crate::matrix::{Cost, DistanceStore};
use crate::tour::tour_cost;

pub const DEFAULT_ITERATIONS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DestroyResult {
    /// Remaining vertices, in tour order.
    pub partial: Vec<usize>,
    /// Removed vertices, by ascending original position.
    pub removed: Vec<usize>,
}

pub fn destroy_even(order: &[usize]) -> DestroyResult {
    let mut partial = Vec::with_capacity(order.len() / 2);
    let mut removed = Vec::with_capacity(order.len().div_ceil(2));
    for (k, &v) in order.iter().enumerate() {
        if k % 2 == 0 {
            removed.push(v);
        } else {
            partial.push(v);
        }
    }
    DestroyResult { partial, removed }
}

/// Reinserts `removed` into the cyclic `partial` tour by repeated cheapest
/// insertion. Ties go to the earliest remaining removed vertex, then to the
/// lowest insertion edge index (edge `k` joins `partial[k]` and its cyclic
/// successor). Returns the completed tour and the summed insertion cost.
pub fn repair_cheapest<D: DistanceStore>(
    store: &D,
    mut partial: Vec<usize>,
    mut removed: Vec<usize>,
) -> Result<(Vec<usize>, Cost)> {
    if partial.is_empty() {
        return Err(Error::InvalidArgument(
            "cannot repair an empty partial tour".into(),
        ));
    }
    let mut total = 0;
    while !removed.is_empty() {
        let k = partial.len();
        let mut best: Option<(Cost, usize, usize)> = None;
        for (r, &v) in removed.iter().enumerate() {
            for e in 0..k {
                let a = partial[e];
                let b = partial[(e + 1) % k];
                let delta = store.get(a, v) + store.get(v, b) - store.get(a, b);
                if best.is_none_or(|(cost, _, _)| delta < cost) {
                    best = Some((delta, r, e));
                }
            }
        }
        let (delta, r, e) = best.expect("removed is non-empty");
        let v = removed.remove(r);
        partial.insert(e + 1, v);
        total += delta;
    }
    Ok((partial, total))
}

/// Runs `iterations` destroy/repair rounds from `seed` and returns the
/// accumulated insertion cost. A repaired tour replaces the incumbent only
/// when it is strictly cheaper.
pub fn lns_run<D: DistanceStore>(store: &D, seed: Vec<usize>, iterations: usize) -> Cost {
    lns_trace(store, seed, iterations, |_| {})
}

/// Like [`lns_run`], reporting the incumbent cost after every iteration.
pub fn lns_trace<D: DistanceStore>(
    store: &D,
    seed: Vec<usize>,
    iterations: usize,
    mut on_iteration: impl FnMut(Cost),
) -> Cost {
    let mut incumbent = seed;
    let mut incumbent_cost = tour_cost(store, &incumbent);
    let mut checksum = 0;
    for _ in 0..iterations {
        let DestroyResult { partial, removed } = destroy_even(&incumbent);
        let (repaired, inserted) = repair_cheapest(store, partial, removed)
            .expect("tours of n >= 4 leave a non-empty partial");
        checksum += inserted;
        let cost = tour_cost(store, &repaired);
        if cost < incumbent_cost {
            incumbent = repaired;
            incumbent_cost = cost;
        }
        on_iteration(incumbent_cost);
    }
    checksum
}
