//! Benchmark harness: runs the routing kernels over instance files, times
//! them with process CPU time, and reports checksums as CSV.

pub mod benchmark;
pub mod cli;
pub mod error;
pub mod expected;
pub mod output;
pub mod runner;
pub mod timer;

pub use benchmark::{Benchmark, Selection, Variant};
pub use error::{HarnessError, Result};
pub use expected::{verify, ExpectedChecksums, VerifyReport};
pub use runner::{run_benchmark, run_benchmark_with_clock, ResultRow, CSV_HEADER};
pub use timer::{Clock, ClockKind, ProcessClock};
