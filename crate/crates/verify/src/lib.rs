//! Executable checks of the half-transitivity classification: a registry of
//! scenarios, a runner that compares their observations with shipped golden
//! values, and report rendering.

pub mod golden;
pub mod runner;
pub mod scenario;
pub mod scenarios;

pub use runner::Registry;
