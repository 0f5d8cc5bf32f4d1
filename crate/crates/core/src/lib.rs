//! Exact Wiener indices, vertex-deletion differences and the `H(n,k,l,n0,t0)`
//! graph families whose cycle vertices all share one prescribed difference.

pub mod analysis;
pub mod edgelist;
pub mod family;
pub mod graph;
pub mod reproduce;
pub mod search;

pub use analysis::{
    decimal3, delta_of_vertex, delta_spectrum, delta_spectrum_orbit, r_m, show_ratio,
    verify_instance, AnalysisError, Check, DeltaSpectrum, Rational, VerifyReport, DEFAULT_CAP,
};
pub use family::{
    build_h, case_sums, delta_closed_form, t0_of, tr_closed_form, CaseSums, FSpec, FamilyError,
    HGraph, HParams, Hang, NamedFamily, Role, Selector,
};
pub use graph::{DistanceRow, Graph, GraphError, Vertex};
pub use search::{
    realize_gadget, sweep, verify_hit, Attach, HitReport, SweepConfig, SweepHit, SweepOutcome,
};
