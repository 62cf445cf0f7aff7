//! Scenario files, verification reports, and grid export around
//! [`wavekit_core`].
//!
//! A scenario bundles a solution (soliton spec, three-wave spec, or a raw tau
//! function) with the equation coefficients, background, evaluation grid,
//! tolerances and a seed. Scenarios serialize to JSON byte-reproducibly, so
//! verification reports and exported grids are identical run to run.

pub mod grid;
pub mod json;
pub mod scenario;

pub use scenario::{verify_scenario, Scenario, Solution, VerifyOutcome};
