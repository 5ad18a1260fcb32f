//! Process CPU time, with a monotonic wall clock fallback.

use std::fmt;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClockKind {
    Cpu,
    Wall,
}

impl fmt::Display for ClockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClockKind::Cpu => "cpu",
            ClockKind::Wall => "wall",
        })
    }
}

/// Source of timestamps in seconds.
pub trait Clock {
    fn kind(&self) -> ClockKind;
    fn now(&mut self) -> f64;
}

/// CPU time consumed by the whole process, or wall time where the platform
/// has no process CPU clock.
#[derive(Debug)]
pub struct ProcessClock {
    kind: ClockKind,
    origin: Instant,
}

impl Default for ProcessClock {
    fn default() -> Self {
        let kind = if cpu_seconds().is_some() {
            ClockKind::Cpu
        } else {
            ClockKind::Wall
        };
        ProcessClock {
            kind,
            origin: Instant::now(),
        }
    }
}

impl Clock for ProcessClock {
    fn kind(&self) -> ClockKind {
        self.kind
    }

    fn now(&mut self) -> f64 {
        match self.kind {
            ClockKind::Cpu => cpu_seconds().unwrap_or_default(),
            ClockKind::Wall => self.origin.elapsed().as_secs_f64(),
        }
    }
}

#[cfg(unix)]
fn cpu_seconds() -> Option<f64> {
    let mut ts = libc::timespec {
        tv_sec: 0,
        tv_nsec: 0,
    };
    // SAFETY: `ts` is a valid, writable timespec.
    let rc = unsafe { libc::clock_gettime(libc::CLOCK_PROCESS_CPUTIME_ID, &mut ts) };
    (rc == 0).then_some(ts.tv_sec as f64 + ts.tv_nsec as f64 * 1e-9)
}

#[cfg(not(unix))]
fn cpu_seconds() -> Option<f64> {
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cpu_clock_advances_under_load() {
        let mut clock = ProcessClock::default();
        let start = clock.now();
        let mut x = 0u64;
        for i in 0..5_000_000u64 {
            x = x.wrapping_mul(31).wrapping_add(i);
        }
        std::hint::black_box(x);
        assert!(clock.now() > start);
    }
}
