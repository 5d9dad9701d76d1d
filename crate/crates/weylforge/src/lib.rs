//! Root systems, Weyl groups, Chevalley invariant polynomials, and
//! certified construction of Minkowski (Finsler) norms, together with
//! the symmetric-space catalog the constructions attach to.
//!
//! The heavy sampling paths (convexity certification, defect measurement)
//! are data-parallel with `rayon` under the default `parallel` feature;
//! building with `--no-default-features` gives a sequential fallback with
//! identical results.

pub mod classify;
pub mod exact;
pub mod invariants;
pub mod jsonfmt;
pub mod normforge;
pub mod rootsys;
pub mod weylgrp;

pub use exact::{Q, QMatrix};
pub use rootsys::{build_root_system, validate, RootSystem, RootSysError, TypeLabel};
pub use weylgrp::{generate_weyl_group, AbstractLabel, Orbit, WeylError, WeylGroup};
