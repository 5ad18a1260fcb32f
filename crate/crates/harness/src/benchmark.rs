use std::fmt;
use std::str::FromStr;

use broute_core::{Layout, TourStorageKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Benchmark {
    TwoOpt,
    OrOpt,
    Lns,
    Espprc,
    EspprcIndex,
    Maxflow,
}

impl Benchmark {
    pub const ALL: [Benchmark; 6] = [
        Benchmark::TwoOpt,
        Benchmark::OrOpt,
        Benchmark::Lns,
        Benchmark::Espprc,
        Benchmark::EspprcIndex,
        Benchmark::Maxflow,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Benchmark::TwoOpt => "2-opt",
            Benchmark::OrOpt => "Or-opt",
            Benchmark::Lns => "lns",
            Benchmark::Espprc => "espprc",
            Benchmark::EspprcIndex => "espprc-index",
            Benchmark::Maxflow => "maxflow",
        }
    }

    /// Whether the `--tour` storage choice changes how this benchmark runs.
    pub fn uses_tour_storage(self) -> bool {
        matches!(self, Benchmark::TwoOpt | Benchmark::OrOpt)
    }
}

impl fmt::Display for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Benchmark {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Benchmark::ALL
            .into_iter()
            .find(|b| b.id() == s)
            .ok_or_else(|| format!("unknown benchmark '{s}'"))
    }
}

/// `--benchmark` argument: one id or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    One(Benchmark),
    All,
}

impl Selection {
    pub fn benchmarks(self) -> Vec<Benchmark> {
        match self {
            Selection::One(b) => vec![b],
            Selection::All => Benchmark::ALL.to_vec(),
        }
    }
}

impl FromStr for Selection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(Selection::All)
        } else {
            s.parse().map(Selection::One)
        }
    }
}

/// Implementation choices that do not change any checksum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Variant {
    pub layout: Layout,
    pub tour: TourStorageKind,
}

impl Variant {
    /// `base`, `nested-matrix`, `static-arrays` or both joined.
    pub fn impl_tag(&self) -> String {
        let mut parts = Vec::new();
        if self.layout == Layout::Nested {
            parts.push("nested-matrix");
        }
        if self.tour == TourStorageKind::Fixed {
            parts.push("static-arrays");
        }
        if parts.is_empty() {
            "base".to_string()
        } else {
            parts.join("-")
        }
    }
}
