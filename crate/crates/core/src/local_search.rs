//! First-improvement 2-opt and Or-opt.
//!
//! Both procedures scan their neighborhood in a fixed canonical order,
//! apply the first strictly improving move, and restart the scan from the
//! beginning. The returned checksum is the number of moves applied.

use crate::matrix::{Cost, DistanceStore};
use crate::tour::TourStorage;

/// Reversal of tour positions `i + 1 ..= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoOptMove {
    pub i: usize,
    pub j: usize,
}

impl TwoOptMove {
    pub fn is_valid(&self, n: usize) -> bool {
        self.i < self.j && self.j < n && !(self.i == 0 && self.j == n - 1)
    }
}

/// Shift of the `len` vertices starting at position `start` into the tour
/// edge leaving position `dest`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrOptMove {
    pub len: usize,
    pub start: usize,
    pub dest: usize,
}

impl OrOptMove {
    pub const MAX_LEN: usize = 3;

    pub fn is_valid(&self, n: usize) -> bool {
        (1..=Self::MAX_LEN).contains(&self.len)
            && self.start + self.len <= n
            && self.dest < n
            && !touches_segment(n, self.start, self.len, self.dest)
    }
}

/// Whether tour edge `dest -> dest+1` has an endpoint inside the segment.
#[inline]
fn touches_segment(n: usize, start: usize, len: usize, dest: usize) -> bool {
    dest == (start + n - 1) % n || (dest >= start && dest < start + len)
}

#[inline]
pub fn two_opt_delta<D: DistanceStore>(store: &D, order: &[usize], i: usize, j: usize) -> Cost {
    let n = order.len();
    let a = order[i];
    let b = order[i + 1];
    let c = order[j];
    let d = order[(j + 1) % n];
    store.get(a, c) + store.get(b, d) - store.get(a, b) - store.get(c, d)
}

/// Runs first-improvement 2-opt to a local optimum and returns the number
/// of improving moves applied.
pub fn two_opt<D: DistanceStore, T: TourStorage>(store: &D, tour: &mut T) -> u64 {
    let n = tour.len();
    let mut improvements = 0;
    'scan: loop {
        for i in 0..n - 1 {
            for j in i + 1..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if two_opt_delta(store, tour.order(), i, j) < 0 {
                    tour.reverse(i + 1, j);
                    improvements += 1;
                    continue 'scan;
                }
            }
        }
        return improvements;
    }
}

#[inline]
pub fn or_opt_delta<D: DistanceStore>(store: &D, order: &[usize], m: OrOptMove) -> Cost {
    let n = order.len();
    let prev = order[(m.start + n - 1) % n];
    let first = order[m.start];
    let last = order[m.start + m.len - 1];
    let next = order[(m.start + m.len) % n];
    let a = order[m.dest];
    let b = order[(m.dest + 1) % n];
    let removal_gain = store.get(prev, first) + store.get(last, next) - store.get(prev, next);
    let insertion_cost = store.get(a, first) + store.get(last, b) - store.get(a, b);
    insertion_cost - removal_gain
}

/// Runs first-improvement Or-opt (segments of 1 to 3 vertices, no
/// reversal) to a local optimum and returns the number of moves applied.
pub fn or_opt<D: DistanceStore, T: TourStorage>(store: &D, tour: &mut T) -> u64 {
    let n = tour.len();
    let mut improvements = 0;
    'scan: loop {
        for len in 1..=OrOptMove::MAX_LEN {
            if len >= n {
                break;
            }
            for start in 0..=n - len {
                for dest in 0..n {
                    if touches_segment(n, start, len, dest) {
                        continue;
                    }
                    let m = OrOptMove { len, start, dest };
                    if or_opt_delta(store, tour.order(), m) < 0 {
                        tour.relocate(start, len, dest);
                        improvements += 1;
                        continue 'scan;
                    }
                }
            }
        }
        return improvements;
    }
}
