//! Exact computational topology for Tverberg-type theorems.
//!
//! The crate provides four layers, each exact (no floating point anywhere):
//!
//! * **Complexes** — finite simplicial complexes with facet-based storage,
//!   joins, deleted joins, chessboard complexes, barycentric subdivision,
//!   group actions, quotients, and elementary collapses
//!   ([`SimplicialComplex`], [`GroupAction`], [`chessboard`], [`deleted_join`]).
//! * **Homology** — integral and mod-p homology of chain complexes via Smith
//!   normal form, homological connectivity, Euler characteristics, fundamental
//!   cycles of chessboard pseudomanifolds and degrees of simplicial maps
//!   ([`ChainComplex`], [`homology`], [`smith_normal_form`]).
//! * **Exact linear algebra** — arbitrary-precision rational kernels and a
//!   phase-1 simplex feasibility solver with Bland's anti-cycling rule
//!   ([`kernel_basis`], [`FeasibilityProblem`]).
//! * **Tverberg solvers** — Radon partitions, one-dimensional Tverberg
//!   certificates, constrained certificate search (skeleton, rainbow,
//!   equal-coefficient), witness configurations and counting audits
//!   ([`radon_partition`], [`tverberg_search`], [`witness_configuration`]).
//!
//! Every returned certificate self-verifies by exact arithmetic before it is
//! handed to the caller, and all constructions are deterministic: identical
//! inputs produce identical outputs, byte for byte.

pub mod action;
pub mod certificate;
pub mod chain;
pub mod chessboard;
pub mod collapse;
pub mod complex;
pub mod degree;
pub mod deleted;
pub mod homology;
pub mod iso;
pub mod lp;
pub mod matrix;
pub mod points;
pub mod radon;
pub mod rational;
pub mod simplex;
pub mod snf;
pub mod sparse;
pub mod tverberg;

pub use action::{quotient_complex, GroupAction, GroupKind, QuotientError};
pub use certificate::{CertificateError, PartitionCertificate};
pub use chain::{Chain, ChainComplex, SimplicialChains};
pub use chessboard::{chessboard, chessboard_actions, ChessboardActions};
pub use collapse::{equivariant_collapse_chessboard, CollapseStep, CollapseTrace};
pub use complex::{ComplexParseError, SimplicialComplex};
pub use degree::{
    fundamental_cycle_chessboard, simplex_boundary_cycle, simplicial_map_degree, DegreeError,
};
pub use deleted::{deleted_join, deleted_product_chain, DeletedProduct};
pub use homology::{
    euler_characteristic, homological_connectivity, homology, reduced_vanishes_up_to,
    Coefficients, Connectivity, DegreeHomology, HomologyError, HomologySummary,
};
pub use iso::{are_isomorphic, IsoError};
pub use lp::{feasible, kernel_basis, FeasibilityProblem, RatMatrix};
pub use matrix::{IntMatrix, MatrixParseError, SparseIntMatrix};
pub use points::{Coloring, PointConfiguration, PointsParseError};
pub use radon::radon_partition;
pub use rational::{format_rational, parse_rational, Rational};
pub use simplex::Simplex;
pub use snf::{integer_solve, kernel_lattice_basis, smith_normal_form, SmithDecomposition};
pub use tverberg::{
    counting_audit, intersection_point, tverberg_line, tverberg_search, verify_no_partition,
    witness_configuration, CountingAudit, SearchConstraints, TverbergError,
};
