//! Exact machinery for clique/independent-set density problems: bitset graphs
//! with exact subgraph counting, the (u,v)-shift on set systems, threshold-graph
//! profile models, and numeric solvers for the extremal density bounds.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature and enable `libm` to build without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("edl-core needs either the `std` feature or the `libm` feature for float math");

mod bits;
pub mod graph;
pub mod math;
pub mod model;
pub mod optim;
pub mod sets;
pub mod solve;
pub mod stepfn;

pub use graph::{BlowupKind, CountReport, EditDistance, Graph, GraphError, QKind};
pub use model::{Profile, ProfileError};
pub use optim::{optimize_profile, OptimError, OptimizeResult};
pub use sets::{is_threshold, SetSystem, SetSystemError, ThresholdCheck};
pub use solve::{ExtremalPoint, Family, SolveError};
pub use stepfn::{StepFn, StepFnError, StepModel};
