//! Expected-checksum files and verification.
//!
//! One expectation per line: `benchmark,instance,checksum`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::error::{HarnessError, Result};
use crate::runner::ResultRow;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExpectedChecksums {
    entries: BTreeMap<(String, String), i64>,
}

impl ExpectedChecksums {
    pub fn from_rows(rows: &[ResultRow]) -> Self {
        let mut expected = ExpectedChecksums::default();
        for row in rows {
            expected.insert(&row.benchmark, &row.instance, row.checksum);
        }
        expected
    }

    pub fn insert(&mut self, benchmark: &str, instance: &str, checksum: i64) {
        self.entries
            .insert((benchmark.to_string(), instance.to_string()), checksum);
    }

    pub fn get(&self, benchmark: &str, instance: &str) -> Option<i64> {
        self.entries
            .get(&(benchmark.to_string(), instance.to_string()))
            .copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut expected = ExpectedChecksums::default();
        for (k, line) in text.lines().enumerate() {
            let bad = |message: &str| HarnessError::Expectations {
                path: path.to_path_buf(),
                line: k + 1,
                message: message.to_string(),
            };
            if line.is_empty() {
                continue;
            }
            // benchmark ids never contain commas, instance names may
            let (benchmark, rest) = line
                .split_once(',')
                .ok_or_else(|| bad("expected benchmark,instance,checksum"))?;
            let (instance, checksum) = rest
                .rsplit_once(',')
                .ok_or_else(|| bad("expected benchmark,instance,checksum"))?;
            let checksum = checksum
                .parse::<i64>()
                .map_err(|_| bad("checksum is not an integer"))?;
            expected.insert(benchmark, instance, checksum);
        }
        Ok(expected)
    }

    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|((b, i), c)| format!("{b},{i},{c}\n"))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub benchmark: String,
    pub instance: String,
    pub expected: i64,
    pub actual: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// `(benchmark, instance)` pairs with no expectation.
    pub unverified: Vec<(String, String)>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty() && self.unverified.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.mismatches {
            writeln!(
                f,
                "MISMATCH {} {}: expected {}, got {}",
                m.benchmark, m.instance, m.expected, m.actual
            )?;
        }
        for (b, i) in &self.unverified {
            writeln!(f, "UNVERIFIED {b} {i}: no expected checksum")?;
        }
        write!(
            f,
            "verified {} rows: {} mismatched, {} unverified",
            self.checked,
            self.mismatches.len(),
            self.unverified.len()
        )
    }
}

pub fn verify(rows: &[ResultRow], expected: &ExpectedChecksums) -> VerifyReport {
    let mut report = VerifyReport::default();
    for row in rows {
        report.checked += 1;
        match expected.get(&row.benchmark, &row.instance) {
            Some(want) if want == row.checksum => {}
            Some(want) => report.mismatches.push(Mismatch {
                benchmark: row.benchmark.clone(),
                instance: row.instance.clone(),
                expected: want,
                actual: row.checksum,
            }),
            None => report
                .unverified
                .push((row.benchmark.clone(), row.instance.clone())),
        }
    }
    report
}
