//! Signed and restricted signed sumsets over finite abelian groups, the
//! integers, and prime-characteristic field models.
//!
//! The crate has four layers:
//!
//! * [`group`] — ambient groups, elements, subsets, and dense tables;
//! * [`sumset`] / [`reference`] — the four sumset engines and the
//!   brute-force enumerators they are tested against;
//! * [`structure`] / [`construct`] / [`rho`] / [`bounds`] — set
//!   classification, extremal constructions, exhaustive minimum search,
//!   and exact bound formulas;
//! * [`verify`] — a registry of named checks that sweep each statement in
//!   scope over a parameter grid and report counterexamples.

pub mod bits;
pub mod bounds;
pub mod construct;
pub mod error;
pub mod group;
pub mod poly;
pub mod reference;
pub mod rho;
pub mod structure;
pub mod sumset;
pub mod verify;

pub use error::{Error, Result};
pub use group::{ExtendedCount, FiniteGroup, GroupElement, GroupSpec, GroupSubset};
pub use rho::{ClassFilter, RhoQuery, RhoResult, SearchOptions};
pub use structure::{APWitness, SymmetryClass};
pub use sumset::{MultiplicitySet, SumsetKind};
pub use verify::{CheckReport, CheckSpec, Grid, Mode};
