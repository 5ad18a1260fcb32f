//! Elementary shortest path with resource constraints.
//!
//! A seed tour induces a reduced-cost graph (`rc[i][j] = c[i][j] - pi[j]`,
//! where `pi[j]` is the cost of the tour arc entering `j`). Every vertex
//! consumes the resources given by the low six bits of its index, each
//! resource having capacity one. The solver looks for the cheapest
//! elementary cycle through the source, using label setting with dominance.
//!
//! Two label stores run the same algorithm: [`indexed`] keeps every label
//! in one vector and links them by position, [`linked`] links reference
//! counted label nodes directly.

pub mod indexed;
pub mod linked;

use std::fmt;
use std::str::FromStr;

use crate::matrix::DistanceStore;

pub const RESOURCE_COUNT: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub struct EspprcGraph {
    n: usize,
    source: usize,
    rc: Vec<f64>,
    duals: Vec<f64>,
}

impl EspprcGraph {
    /// Builds a graph from a row-major reduced-cost matrix and duals.
    pub fn from_parts(n: usize, rc: Vec<f64>, duals: Vec<f64>) -> Self {
        assert_eq!(rc.len(), n * n);
        assert_eq!(duals.len(), n);
        EspprcGraph {
            n,
            source: 0,
            rc,
            duals,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> usize {
        self.source
    }

    #[inline]
    pub fn rc(&self, i: usize, j: usize) -> f64 {
        self.rc[i * self.n + j]
    }

    pub fn duals(&self) -> &[f64] {
        &self.duals
    }
}

/// Derives the reduced-cost graph from a complete seed tour.
pub fn derive_reduced_costs<D: DistanceStore>(store: &D, seed: &[usize]) -> EspprcGraph {
    let n = store.n();
    debug_assert_eq!(seed.len(), n);
    let mut duals = vec![0.0; n];
    for k in 0..n {
        let pred = seed[(k + n - 1) % n];
        let j = seed[k];
        duals[j] = store.get(pred, j) as f64;
    }
    let mut rc = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                rc[i * n + j] = store.get(i, j) as f64 - duals[j];
            }
        }
    }
    EspprcGraph {
        n,
        source: 0,
        rc,
        duals,
    }
}

/// Whether vertex `i` consumes resource `r` (bit `r` of `i` is set).
#[inline]
pub fn consumes(i: usize, r: usize) -> bool {
    debug_assert!(r < RESOURCE_COUNT);
    (i >> r) & 1 == 1
}

#[inline]
fn consumption_mask(i: usize) -> u8 {
    (i & ((1 << RESOURCE_COUNT) - 1)) as u8
}

/// Bitset of vertices on a partial path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisitedSet {
    words: Vec<u64>,
}

impl VisitedSet {
    pub fn new(n: usize) -> Self {
        VisitedSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn is_subset(&self, other: &VisitedSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

/// Resource and path state of a label; storage links live in the stores.
#[derive(Debug, Clone, PartialEq)]
pub struct Label {
    pub vertex: usize,
    pub cost: f64,
    /// Bit `r` set when resource `r` has been consumed.
    pub usage: u8,
    pub visited: VisitedSet,
}

impl Label {
    pub fn root(g: &EspprcGraph) -> Self {
        let mut visited = VisitedSet::new(g.n);
        visited.insert(g.source);
        Label {
            vertex: g.source,
            cost: 0.0,
            usage: consumption_mask(g.source),
            visited,
        }
    }

    pub fn uses(&self, r: usize) -> bool {
        self.usage >> r & 1 == 1
    }
}

/// Extends `label` along arc `(label.vertex, j)`. Returns `None` when `j`
/// is already on the path or needs a resource that is used up. Returning to
/// the source is always allowed and yields a closed label.
pub fn extend(label: &Label, j: usize, g: &EspprcGraph) -> Option<Label> {
    debug_assert_ne!(j, label.vertex);
    let cost = label.cost + g.rc(label.vertex, j);
    if j == g.source {
        return Some(Label {
            vertex: j,
            cost,
            usage: label.usage,
            visited: label.visited.clone(),
        });
    }
    let mask = consumption_mask(j);
    if label.visited.contains(j) || label.usage & mask != 0 {
        return None;
    }
    let mut visited = label.visited.clone();
    visited.insert(j);
    Some(Label {
        vertex: j,
        cost,
        usage: label.usage | mask,
        visited,
    })
}

/// `a` dominates `b` when it is no worse in cost, resources and visited
/// vertices, and the two are not identical.
pub fn dominates(a: &Label, b: &Label) -> bool {
    debug_assert_eq!(
        a.vertex, b.vertex,
        "dominance compares labels at one vertex"
    );
    a.cost <= b.cost && a.usage & !b.usage == 0 && a.visited.is_subset(&b.visited) && a != b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelStorage {
    Linked,
    Indexed,
}

impl fmt::Display for LabelStorage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LabelStorage::Linked => "linked",
            LabelStorage::Indexed => "indexed",
        })
    }
}

impl FromStr for LabelStorage {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linked" => Ok(LabelStorage::Linked),
            "indexed" => Ok(LabelStorage::Indexed),
            other => Err(format!("unknown label storage '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EspprcOutcome {
    /// Cheapest closed path cost, or `+inf` when none exists.
    pub cost: f64,
    /// Best closed path, starting and ending at the source.
    pub path: Vec<usize>,
    /// Labels created over the whole run, root and closed labels included.
    pub labels: usize,
}

pub fn solve_espprc(g: &EspprcGraph, storage: LabelStorage) -> f64 {
    solve_espprc_detailed(g, storage).cost
}

pub fn solve_espprc_detailed(g: &EspprcGraph, storage: LabelStorage) -> EspprcOutcome {
    match storage {
        LabelStorage::Linked => linked::solve(g),
        LabelStorage::Indexed => indexed::solve(g),
    }
}

/// Per-seed checksum: the optimum truncated toward zero.
pub fn checksum_espprc(optimum: f64) -> i64 {
    debug_assert!(optimum.is_finite());
    optimum.trunc() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::canonical_instance;
    use crate::instance::generate_instance;
    use crate::matrix::FlatMatrix;

    #[test]
    fn consumption_follows_bits() {
        assert!(consumes(5, 0));
        assert!(!consumes(5, 1));
        assert!(consumes(5, 2));
        assert!((0..6).all(|r| !consumes(0, r)));
        assert!((0..6).all(|r| consumes(63, r)));
        assert_eq!(consumption_mask(64), 0);
        assert_eq!(consumption_mask(65), 1);
    }

    #[test]
    fn canonical_reduced_costs_vanish() {
        let store = FlatMatrix::from_instance(&canonical_instance());
        let g = derive_reduced_costs(&store, &[0, 1, 2, 3]);
        assert_eq!(g.duals(), &[500.0; 4]);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g.rc(i, j), 0.0);
            }
        }
        assert_eq!(solve_espprc(&g, LabelStorage::Indexed), 0.0);
        assert_eq!(solve_espprc(&g, LabelStorage::Linked), 0.0);
    }

    #[test]
    fn seed_tour_reduced_costs_telescope() {
        let inst = generate_instance(12, 20, 4).unwrap();
        let store = FlatMatrix::from_instance(&inst);
        for seed in inst.perms() {
            let g = derive_reduced_costs(&store, seed);
            let sum: f64 = (0..12).map(|k| g.rc(seed[k], seed[(k + 1) % 12])).sum();
            assert!(sum.abs() <= 1e-6);
            for i in 0..12 {
                for j in 0..12 {
                    if i != j {
                        assert_eq!(g.rc(i, j), inst.cost(i, j) as f64 - g.duals()[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn extension_respects_elementarity_and_resources() {
        let inst = generate_instance(8, 1, 1).unwrap();
        let g = derive_reduced_costs(&FlatMatrix::from_instance(&inst), &inst.perms()[0]);
        let root = Label::root(&g);
        let at2 = extend(&root, 2, &g).unwrap();
        assert!(at2.uses(1) && !at2.uses(0));
        let at4 = extend(&at2, 4, &g).unwrap();
        assert!(extend(&at4, 2, &g).is_none());
        assert!(extend(&at4, 6, &g).is_none());
        let at3 = extend(&root, 3, &g).unwrap();
        assert!(extend(&at3, 1, &g).is_none());
        let closed = extend(&at4, 0, &g).unwrap();
        assert_eq!(closed.vertex, 0);
        let expected = g.rc(0, 2) + g.rc(2, 4) + g.rc(4, 0);
        assert!((closed.cost - expected).abs() < 1e-12);
    }

    #[test]
    fn dominance_is_strict() {
        let inst = generate_instance(8, 1, 1).unwrap();
        let g = derive_reduced_costs(&FlatMatrix::from_instance(&inst), &inst.perms()[0]);
        let root = Label::root(&g);
        let a = extend(&root, 4, &g).unwrap();
        assert!(!dominates(&a, &a.clone()));
        let mut cheaper = a.clone();
        cheaper.cost -= 1.0;
        assert!(dominates(&cheaper, &a));
        assert!(!dominates(&a, &cheaper));
        let mut more_visited = a.clone();
        more_visited.visited.insert(5);
        assert!(dominates(&a, &more_visited));
        let mut more_usage = a.clone();
        more_usage.usage |= 1;
        assert!(dominates(&a, &more_usage));
        assert!(!dominates(&more_usage, &a));
    }

    #[test]
    fn checksum_truncates_toward_zero() {
        assert_eq!(checksum_espprc(-3.7), -3);
        assert_eq!(checksum_espprc(0.0), 0);
        assert_eq!(checksum_espprc(12.999), 12);
    }

    #[test]
    fn visited_set_spans_words() {
        let mut s = VisitedSet::new(130);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(129);
        assert!(s.contains(129) && !s.contains(128));
        assert_eq!(s.len(), 2);
        let mut t = s.clone();
        t.insert(70);
        assert!(s.is_subset(&t) && !t.is_subset(&s));
    }
}
