//! Tour storage.
//!
//! A tour is a sequence of vertices read cyclically. Two storages exist:
//! [`Tour`] is backed by a growable vector and applies moves the way one
//! naturally would with a vector (remove then insert), while [`FixedTour`]
//! lives in an inline fixed-capacity array and applies every move in place.

use crate::matrix::{Cost, DistanceStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TourStorageKind {
    #[default]
    Dynamic,
    Fixed,
}

impl std::fmt::Display for TourStorageKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TourStorageKind::Dynamic => "dynamic",
            TourStorageKind::Fixed => "fixed",
        })
    }
}

impl std::str::FromStr for TourStorageKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dynamic" => Ok(TourStorageKind::Dynamic),
            "fixed" => Ok(TourStorageKind::Fixed),
            other => Err(format!(
                "unknown tour storage '{other}' (expected dynamic or fixed)"
            )),
        }
    }
}

/// Operations local search needs from a tour.
pub trait TourStorage {
    fn order(&self) -> &[usize];

    /// Reverses positions `from..=to`.
    fn reverse(&mut self, from: usize, to: usize);

    /// Moves the `len` vertices starting at position `start` so they follow
    /// the vertex currently at position `after`, keeping their orientation.
    /// `after` must lie outside `start - 1 ..= start + len - 1` and the
    /// segment must not wrap.
    fn relocate(&mut self, start: usize, len: usize, after: usize);

    fn len(&self) -> usize {
        self.order().len()
    }

    fn is_empty(&self) -> bool {
        self.order().is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tour {
    order: Vec<usize>,
}

impl Tour {
    pub fn new(order: Vec<usize>) -> Self {
        Tour { order }
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.order
    }
}

impl From<&[usize]> for Tour {
    fn from(order: &[usize]) -> Self {
        Tour::new(order.to_vec())
    }
}

impl TourStorage for Tour {
    fn order(&self) -> &[usize] {
        &self.order
    }

    fn reverse(&mut self, from: usize, to: usize) {
        self.order[from..=to].reverse();
    }

    fn relocate(&mut self, start: usize, len: usize, after: usize) {
        let segment: Vec<usize> = self.order.drain(start..start + len).collect();
        let anchor = if after > start { after - len } else { after };
        self.order.splice(anchor + 1..anchor + 1, segment);
    }
}

/// Default inline capacity of [`FixedTour`].
pub const FIXED_TOUR_CAPACITY: usize = 256;

/// Tour stored in an inline array of `CAP` slots.
#[derive(Debug, Clone)]
pub struct FixedTour<const CAP: usize = FIXED_TOUR_CAPACITY> {
    len: usize,
    slots: [usize; CAP],
}

impl<const CAP: usize> FixedTour<CAP> {
    /// Returns `None` when the order does not fit.
    pub fn from_order(order: &[usize]) -> Option<Self> {
        if order.len() > CAP {
            return None;
        }
        let mut slots = [0; CAP];
        slots[..order.len()].copy_from_slice(order);
        Some(FixedTour {
            len: order.len(),
            slots,
        })
    }
}

impl<const CAP: usize> PartialEq for FixedTour<CAP> {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}

impl<const CAP: usize> Eq for FixedTour<CAP> {}

impl<const CAP: usize> TourStorage for FixedTour<CAP> {
    fn order(&self) -> &[usize] {
        &self.slots[..self.len]
    }

    fn reverse(&mut self, from: usize, to: usize) {
        self.slots[from..=to].reverse();
    }

    fn relocate(&mut self, start: usize, len: usize, after: usize) {
        if after > start {
            self.slots[start..=after].rotate_left(len);
        } else {
            self.slots[after + 1..start + len].rotate_right(len);
        }
    }
}

/// Sum of arc costs around the cycle.
pub fn tour_cost<D: DistanceStore>(store: &D, order: &[usize]) -> Cost {
    debug_assert_eq!(order.len(), store.n(), "tour must be complete");
    let n = order.len();
    (0..n)
        .map(|k| store.get(order[k], order[(k + 1) % n]))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::canonical_instance;
    use crate::instance::generate_instance;
    use crate::matrix::FlatMatrix;

    #[test]
    fn canonical_identity_tour_costs_2000() {
        let store = FlatMatrix::from_instance(&canonical_instance());
        assert_eq!(tour_cost(&store, &[0, 1, 2, 3]), 2000);
        assert_eq!(tour_cost(&store, &[1, 0, 2, 3]), 2000);
    }

    #[test]
    fn reversed_tour_has_same_cost() {
        let inst = generate_instance(15, 3, 5).unwrap();
        let store = FlatMatrix::from_instance(&inst);
        for perm in inst.perms() {
            let mut rev = perm.clone();
            rev.reverse();
            assert_eq!(tour_cost(&store, perm), tour_cost(&store, &rev));
        }
    }

    #[test]
    fn relocate_matches_between_storages() {
        let n = 9;
        let base: Vec<usize> = (0..n).collect();
        for len in 1..=3 {
            for start in 0..=n - len {
                for after in 0..n {
                    let touching = after + 1 == start
                        || (start == 0 && after == n - 1)
                        || (start..start + len).contains(&after);
                    if touching {
                        continue;
                    }
                    let mut dynamic = Tour::new(base.clone());
                    let mut fixed = FixedTour::<16>::from_order(&base).unwrap();
                    dynamic.relocate(start, len, after);
                    fixed.relocate(start, len, after);
                    assert_eq!(dynamic.order(), fixed.order());

                    // segment must directly follow the anchor vertex
                    let pos = dynamic.order().iter().position(|&v| v == after).unwrap();
                    let seg: Vec<usize> = (0..len)
                        .map(|k| dynamic.order()[(pos + 1 + k) % n])
                        .collect();
                    assert_eq!(seg, (start..start + len).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn fixed_tour_rejects_oversized_orders() {
        assert!(FixedTour::<4>::from_order(&[0, 1, 2, 3, 4]).is_none());
        assert_eq!(
            FixedTour::<4>::from_order(&[3, 1]).unwrap().order(),
            &[3, 1]
        );
    }
}
