//! Running one benchmark over every seed permutation of an instance.
//!
//! The clock brackets only the per-seed algorithm loop (plus auxiliary
//! graph derivation for `espprc*` and `maxflow`). Seed tours are copied
//! into their working storage before the clock starts.

use broute_core::espprc::{checksum_espprc, derive_reduced_costs, solve_espprc, LabelStorage};
use broute_core::lns::{lns_run, DEFAULT_ITERATIONS};
use broute_core::local_search::{or_opt, two_opt};
use broute_core::maxflow::{checksum_maxflow, derive_capacities, maxflow_all_sinks};
use broute_core::tour::FIXED_TOUR_CAPACITY;
use broute_core::{
    DistanceStore, FixedTour, FlatMatrix, Instance, Layout, NestedMatrix, Tour, TourStorage,
    TourStorageKind,
};
use serde::{Deserialize, Serialize};

use crate::benchmark::{Benchmark, Variant};
use crate::error::{HarnessError, Result};
use crate::timer::{Clock, ClockKind, ProcessClock};

/// Exact CSV header written by the harness.
pub const CSV_HEADER: &str = "impl_tag,benchmark,instance,n,p,checksum,time_s,clock";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub impl_tag: String,
    pub benchmark: String,
    pub instance: String,
    pub n: usize,
    pub p: usize,
    pub checksum: i64,
    pub time_s: f64,
    pub clock: ClockKind,
}

pub fn run_benchmark(
    benchmark: Benchmark,
    inst: &Instance,
    instance_id: &str,
    variant: Variant,
) -> Result<ResultRow> {
    run_benchmark_with_clock(
        benchmark,
        inst,
        instance_id,
        variant,
        &mut ProcessClock::default(),
    )
}

pub fn run_benchmark_with_clock<C: Clock>(
    benchmark: Benchmark,
    inst: &Instance,
    instance_id: &str,
    variant: Variant,
    clock: &mut C,
) -> Result<ResultRow> {
    let (checksum, time_s) = match variant.layout {
        Layout::Flat => measure(
            benchmark,
            &FlatMatrix::from_instance(inst),
            inst,
            variant.tour,
            clock,
        )?,
        Layout::Nested => measure(
            benchmark,
            &NestedMatrix::from_instance(inst),
            inst,
            variant.tour,
            clock,
        )?,
    };
    Ok(ResultRow {
        impl_tag: variant.impl_tag(),
        benchmark: benchmark.id().to_string(),
        instance: instance_id.to_string(),
        n: inst.n(),
        p: inst.p(),
        checksum,
        time_s,
        clock: clock.kind(),
    })
}

fn measure<D: DistanceStore, C: Clock>(
    benchmark: Benchmark,
    store: &D,
    inst: &Instance,
    tour: TourStorageKind,
    clock: &mut C,
) -> Result<(i64, f64)> {
    let seeds = inst.perms();
    match benchmark {
        Benchmark::TwoOpt | Benchmark::OrOpt => match tour {
            TourStorageKind::Dynamic => {
                let tours: Vec<Tour> = seeds.iter().map(|s| Tour::new(s.clone())).collect();
                Ok(time_local_search(store, tours, benchmark, clock))
            }
            TourStorageKind::Fixed => {
                let tours = seeds
                    .iter()
                    .map(|s| FixedTour::<FIXED_TOUR_CAPACITY>::from_order(s))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| {
                        HarnessError::Usage(format!(
                            "fixed tour storage holds at most {FIXED_TOUR_CAPACITY} vertices, instance has {}",
                            inst.n()
                        ))
                    })?;
                Ok(time_local_search(store, tours, benchmark, clock))
            }
        },
        Benchmark::Lns => {
            let starts: Vec<Vec<usize>> = seeds.to_vec();
            Ok(timed(clock, || {
                starts
                    .into_iter()
                    .map(|s| lns_run(store, s, DEFAULT_ITERATIONS))
                    .sum()
            }))
        }
        Benchmark::Espprc | Benchmark::EspprcIndex => {
            let storage = if benchmark == Benchmark::Espprc {
                LabelStorage::Linked
            } else {
                LabelStorage::Indexed
            };
            Ok(timed(clock, || {
                seeds
                    .iter()
                    .map(|s| {
                        checksum_espprc(solve_espprc(&derive_reduced_costs(store, s), storage))
                    })
                    .sum()
            }))
        }
        Benchmark::Maxflow => Ok(timed(clock, || {
            seeds
                .iter()
                .map(|s| checksum_maxflow(maxflow_all_sinks(&derive_capacities(store, s))))
                .sum()
        })),
    }
}

fn time_local_search<D: DistanceStore, T: TourStorage, C: Clock>(
    store: &D,
    mut tours: Vec<T>,
    benchmark: Benchmark,
    clock: &mut C,
) -> (i64, f64) {
    let search = match benchmark {
        Benchmark::TwoOpt => two_opt::<D, T>,
        _ => or_opt::<D, T>,
    };
    timed(clock, || {
        tours.iter_mut().map(|t| search(store, t) as i64).sum()
    })
}

fn timed<C: Clock>(clock: &mut C, work: impl FnOnce() -> i64) -> (i64, f64) {
    let start = clock.now();
    let checksum = work();
    let stop = clock.now();
    (checksum, (stop - start).max(0.0))
}
