//! Shared fixtures for the criterion benches.

use soltes_core::{HGraph, NamedFamily};

/// Builds a named family instance; panics on invalid input.
pub fn family(f: NamedFamily) -> HGraph {
    soltes_core::build_h(&f.params().expect("valid family")).expect("buildable family")
}
