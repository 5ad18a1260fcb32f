//! Deterministic routing benchmark kernels.
//!
//! Every kernel is a pure function of an [`Instance`] cost matrix and a seed
//! permutation, and returns an integer checksum so that independent
//! implementations can prove they performed exactly the same work:
//!
//! | benchmark      | checksum per seed                               |
//! |----------------|-------------------------------------------------|
//! | `2-opt`        | improving moves applied                         |
//! | `Or-opt`       | improving moves applied                         |
//! | `lns`          | total insertion cost over 10 iterations         |
//! | `espprc`       | cheapest resource-feasible cycle, truncated     |
//! | `maxflow`      | sum of max-flows from vertex 0, truncated       |

pub mod error;
pub mod espprc;
pub mod instance;
pub mod lns;
pub mod local_search;
pub mod matrix;
pub mod maxflow;
pub mod rng;
pub mod tour;

pub use error::{Error, Result};
pub use instance::{euclid_cost, generate_instance, Instance};
pub use matrix::{Cost, DistanceStore, FlatMatrix, Layout, NestedMatrix};
pub use tour::{tour_cost, FixedTour, Tour, TourStorage, TourStorageKind};
