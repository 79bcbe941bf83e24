//! Design-space exploration for systolic-array CNN accelerators on
//! memory-constrained FPGAs.
//!
//! Given a layer-wise CNN description and an FPGA resource budget, the
//! library enumerates candidate accelerator configurations (tile schedule,
//! systolic-array shape, channel parallelism, data traversal order),
//! estimates per-layer on-chip memory and end-to-end cycle counts with
//! closed-form models, filters out configurations that do not fit the
//! device, and ranks the survivors by total cycles. A small functional
//! dataflow simulator cross-validates the analytical models on desk-scale
//! instances.

pub mod engine;
pub mod net;
pub mod perf;
pub mod report;
pub mod resource;
pub mod sim;
pub mod space;

pub use engine::{explore, ExplorationReport};
pub use net::{Activation, LayerKind, LayerSpec, NetworkModel};
pub use resource::HardwareBudget;
pub use space::{DesignPoint, ExplorationParams, GeneratorRule, TraversalOrder};
