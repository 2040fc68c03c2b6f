//! Plane-graph toolkit for independent domination and independent bondage
//! at desk scale.
//!
//! The crate provides:
//! - a rotation-system plane graph with derived faces ([`graph`], [`generate`], [`plg`]),
//! - exact solvers for the domination and independent domination numbers ([`domination`]),
//! - bounded exact search for the independent bondage number ([`bondage`]),
//! - detectors for the eight unavoidable configurations (a)-(h) ([`configurations`]),
//! - an exact-rational discharging engine with a transfer ledger and audit ([`discharging`]),
//! - a certifier that emits verified bondage certificates with at most 8 edges ([`certifier`]).
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod bondage;
pub mod certifier;
pub mod configurations;
pub mod discharging;
pub mod domination;
pub mod error;
pub mod generate;
pub mod graph;
pub mod plg;

pub use error::{CertifyError, DischargeError, GraphError, PlgError};
pub use graph::{Face, FanWitness, PlaneGraph};
