//! Capability planning for quantum computers.
//!
//! Everything here revolves around the P-vector, the pair (qubit count,
//! T-equivalent gate count) that describes both what an application needs
//! and what a machine can reliably run. The crate provides:
//!
//! - [`model`]: domain types and the bundled vendor roadmap, workload and
//!   system datasets,
//! - [`gates`]: T-equivalent gate conversion and circuit fault rates,
//! - [`codes`]: surface, cat-repetition and scaled qLDPC logical-error and
//!   qubit-overhead models with distance solvers,
//! - [`mitigation`]: PEC sampling overhead and the extended-capability
//!   regions reachable with error mitigation,
//! - [`normalize`]: roadmap milestone to P-vector conversion and capability
//!   frontiers,
//! - [`workload`]: execution time, time bands, feasibility and SQSP,
//! - [`estimators`]: the collective neutrino oscillation Trotter estimate,
//! - [`catalog`], [`report`] and [`commands`]: catalog files, CSV/JSON/SVG
//!   emission and the command layer behind the `qcap` binary.
//!
//! ```
//! use qcap::model::{bundled_systems, bundled_workload};
//! use qcap::workload::{sqsp, suite_for, YEAR_SECONDS};
//!
//! let apps = bundled_workload();
//! let systems = bundled_systems();
//! let suite = suite_for(&systems[0], &apps);
//! let report = sqsp(&systems[0], &suite, YEAR_SECONDS).unwrap();
//! assert!((report.value - 315.36).abs() < 1e-9);
//! ```

#![forbid(unsafe_code)]
#![warn(missing_debug_implementations, rust_2018_idioms)]

pub mod catalog;
pub mod codes;
pub mod commands;
pub mod estimators;
pub mod gates;
pub mod mitigation;
pub mod model;
pub mod normalize;
pub mod report;
pub mod workload;

mod numeric;

pub use model::{Application, Milestone, PVector, SystemSpec, SystemType, Technology};
