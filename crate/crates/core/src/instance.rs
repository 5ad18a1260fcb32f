//! Benchmark instances: generation, the text file format, and validation.
//!
//! File layout (UTF-8, LF line endings, single spaces, no trailing
//! whitespace):
//!
//! ```text
//! n p
//! <n rows of n integers: the cost matrix>
//! <p rows of n integers: the seed permutations>
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::Cost;
use crate::rng::SplitMix64;

pub const MIN_VERTICES: usize = 4;

/// `floor(100 * euclidean distance)` between two points.
pub fn euclid_cost(a: (f64, f64), b: (f64, f64)) -> Cost {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    (100.0 * (dx * dx + dy * dy).sqrt()).floor() as Cost
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    costs: Vec<Cost>,
    perms: Vec<Vec<usize>>,
}

impl Instance {
    /// Builds an instance from a row-major matrix and seed permutations,
    /// checking every structural invariant.
    pub fn new(n: usize, costs: Vec<Cost>, perms: Vec<Vec<usize>>) -> Result<Self> {
        check_sizes(n, perms.len())?;
        if costs.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "cost matrix has {} entries, expected {}",
                costs.len(),
                n * n
            )));
        }
        if let Some((i, msg)) = matrix_violation(n, &costs) {
            return Err(Error::InvalidArgument(format!("row {i}: {msg}")));
        }
        for (k, perm) in perms.iter().enumerate() {
            if !is_permutation(perm, n) {
                return Err(Error::InvalidArgument(format!(
                    "permutation {k} is not a permutation"
                )));
            }
        }
        Ok(Instance { n, costs, perms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.perms.len()
    }

    /// Row-major cost matrix.
    pub fn costs(&self) -> &[Cost] {
        &self.costs
    }

    pub fn cost(&self, i: usize, j: usize) -> Cost {
        self.costs[i * self.n + j]
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// Copy of this instance keeping only the first `p` permutations.
    pub fn truncated(&self, p: usize) -> Result<Self> {
        check_sizes(self.n, p)?;
        if p > self.p() {
            return Err(Error::InvalidArgument(format!(
                "cannot keep {p} of {} permutations",
                self.p()
            )));
        }
        Ok(Instance {
            n: self.n,
            costs: self.costs.clone(),
            perms: self.perms[..p].to_vec(),
        })
    }

    pub fn parse(bytes: &[u8]) -> Result<Self> {
        let text = std::str::from_utf8(bytes)
            .map_err(|e| Error::parse(1, format!("invalid UTF-8: {e}")))?;
        parse_text(text)
    }

    pub fn write(&self) -> Vec<u8> {
        let mut out = String::with_capacity((self.n + self.p()) * self.n * 6);
        let _ = writeln!(out, "{} {}", self.n, self.p());
        for row in self.costs.chunks_exact(self.n) {
            push_row(&mut out, row.iter());
        }
        for perm in &self.perms {
            push_row(&mut out, perm.iter());
        }
        out.into_bytes()
    }
}

fn push_row<T: std::fmt::Display>(out: &mut String, values: impl Iterator<Item = T>) {
    for (k, v) in values.enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

fn check_sizes(n: usize, p: usize) -> Result<()> {
    if n < MIN_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "n must be at least {MIN_VERTICES}, got {n}"
        )));
    }
    if p < 1 {
        return Err(Error::InvalidArgument("p must be at least 1".into()));
    }
    Ok(())
}

fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// First row that breaks zero-diagonal, symmetry or non-negativity.
fn matrix_violation(n: usize, costs: &[Cost]) -> Option<(usize, &'static str)> {
    for i in 0..n {
        if costs[i * n + i] != 0 {
            return Some((i, "non-zero diagonal entry"));
        }
        for j in 0..n {
            let c = costs[i * n + j];
            if c < 0 {
                return Some((i, "negative cost"));
            }
            if c != costs[j * n + i] {
                return Some((i, "matrix is not symmetric"));
            }
        }
    }
    None
}

fn parse_row<T: std::str::FromStr>(line: &str, lineno: usize, n: usize) -> Result<Vec<T>> {
    let values = line
        .split(' ')
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| Error::parse(lineno, format!("invalid integer '{tok}'")))
        })
        .collect::<Result<Vec<T>>>()?;
    if values.len() != n {
        return Err(Error::parse(
            lineno,
            format!("expected {n} values, found {}", values.len()),
        ));
    }
    Ok(values)
}

fn parse_text(text: &str) -> Result<Instance> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let lines: Vec<&str> = body.split('\n').collect();

    let header = lines[0];
    let mut fields = header.split(' ');
    let (n, p) = match (fields.next(), fields.next(), fields.next()) {
        (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(n), Ok(p)) => (n, p),
            _ => return Err(Error::parse(1, "malformed header, expected 'n p'")),
        },
        _ => return Err(Error::parse(1, "malformed header, expected 'n p'")),
    };
    if n < MIN_VERTICES {
        return Err(Error::parse(
            1,
            format!("n must be at least {MIN_VERTICES}"),
        ));
    }
    if p < 1 {
        return Err(Error::parse(1, "p must be at least 1"));
    }
    let expected = 1 + n + p;
    if lines.len() < expected {
        return Err(Error::parse(
            lines.len() + 1,
            format!("unexpected end of file, expected {expected} lines"),
        ));
    }
    if lines.len() > expected {
        return Err(Error::parse(expected + 1, "unexpected trailing content"));
    }

    let mut costs = Vec::with_capacity(n * n);
    for (i, line) in lines[1..=n].iter().enumerate() {
        costs.extend(parse_row::<Cost>(line, i + 2, n)?);
    }
    if let Some((i, msg)) = matrix_violation(n, &costs) {
        return Err(Error::parse(i + 2, msg));
    }

    let mut perms = Vec::with_capacity(p);
    for (k, line) in lines[n + 1..].iter().enumerate() {
        let lineno = n + 2 + k;
        let perm = parse_row::<usize>(line, lineno, n)?;
        if !is_permutation(&perm, n) {
            return Err(Error::parse(lineno, "not a permutation"));
        }
        perms.push(perm);
    }
    Ok(Instance { n, costs, perms })
}

/// Generates an instance from the pinned SplitMix64 stream: `n` coordinate
/// pairs (x then y, vertex by vertex), then `p` Fisher-Yates permutations.
pub fn generate_instance(n: usize, p: usize, seed: u64) -> Result<Instance> {
    check_sizes(n, p)?;
    let mut rng = SplitMix64::new(seed);
    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let x = rng.next_coordinate();
            let y = rng.next_coordinate();
            (x, y)
        })
        .collect();
    let mut costs = vec![0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let c = euclid_cost(points[i], points[j]);
            costs[i * n + j] = c;
            costs[j * n + i] = c;
        }
    }
    let perms = (0..p).map(|_| rng.permutation(n)).collect();
    Ok(Instance { n, costs, perms })
}
