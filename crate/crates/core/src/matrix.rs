//! Distance-matrix storage layouts.
//!
//! Every algorithm in the crate is generic over [`DistanceStore`], so the
//! flat and nested layouts compile to separate, fully monomorphized code
//! paths and can be compared directly.

use std::fmt;
use std::str::FromStr;

use crate::instance::Instance;

pub type Cost = i64;

/// Read access to a square symmetric integer cost table.
pub trait DistanceStore {
    fn n(&self) -> usize;

    /// Cost of arc `(i, j)`. Indices must be below `n()`.
    fn get(&self, i: usize, j: usize) -> Cost;

    fn layout(&self) -> Layout;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Layout {
    #[default]
    Flat,
    Nested,
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layout::Flat => "flat",
            Layout::Nested => "nested",
        })
    }
}

impl FromStr for Layout {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "flat" => Ok(Layout::Flat),
            "nested" => Ok(Layout::Nested),
            other => Err(format!(
                "unknown layout '{other}' (expected flat or nested)"
            )),
        }
    }
}

/// Row-major contiguous matrix; `(i, j)` lives at `i * n + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatMatrix {
    n: usize,
    data: Vec<Cost>,
}

impl FlatMatrix {
    pub fn from_row_major(n: usize, data: Vec<Cost>) -> Self {
        assert_eq!(data.len(), n * n, "row-major data must hold n*n values");
        FlatMatrix { n, data }
    }

    pub fn from_instance(instance: &Instance) -> Self {
        FlatMatrix::from_row_major(instance.n(), instance.costs().to_vec())
    }

    pub fn as_slice(&self) -> &[Cost] {
        &self.data
    }
}

impl DistanceStore for FlatMatrix {
    #[inline]
    fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> Cost {
        debug_assert!(
            i < self.n && j < self.n,
            "({i}, {j}) out of range for n={}",
            self.n
        );
        self.data[i * self.n + j]
    }

    fn layout(&self) -> Layout {
        Layout::Flat
    }
}

/// One heap-allocated vector per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedMatrix {
    rows: Vec<Vec<Cost>>,
}

impl NestedMatrix {
    pub fn from_instance(instance: &Instance) -> Self {
        let n = instance.n();
        let rows = instance
            .costs()
            .chunks_exact(n)
            .map(<[Cost]>::to_vec)
            .collect();
        NestedMatrix { rows }
    }
}

impl DistanceStore for NestedMatrix {
    #[inline]
    fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> Cost {
        debug_assert!(i < self.rows.len() && j < self.rows.len());
        self.rows[i][j]
    }

    fn layout(&self) -> Layout {
        Layout::Nested
    }
}
