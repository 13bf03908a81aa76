//! Hybrid classical-quantum stabilizer codes over qudits.
//!
//! The crate provides phase-exact arithmetic for the n-qudit Pauli group
//! ([`pauli`]), subgroup machinery with canonical modular echelon forms
//! ([`group`], [`howell`]), hybrid code construction and validation
//! ([`code`], [`codefile`]), the group-theoretic correctability test with
//! violation witnesses ([`correct`]), exact weight-limited distance search
//! and the classical hybridization bounds ([`distance`]), and a dense-matrix
//! oracle that independently verifies every group-theoretic verdict at desk
//! scale ([`oracle`]).
//!
//! See the `examples/` directory for one runnable walkthrough per major
//! capability, and the `hybridstab` binary for the file-driven front end.

pub mod code;
pub mod codefile;
pub mod correct;
pub mod distance;
pub mod error;
pub mod group;
pub mod howell;
pub mod oracle;
pub mod pauli;
pub mod report;

pub use code::{HybridCode, LinearCode, ValidationReport};
pub use correct::{check_errors, forbidden_set_membership, CorrectabilityReport, SetTag, Verdict};
pub use distance::{anticommute_degree, exact_distance, DistanceResult};
pub use error::{Error, Result};
pub use group::PauliSubgroup;
pub use oracle::Oracle;
pub use pauli::PauliOperator;
