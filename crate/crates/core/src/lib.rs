//! Exact computation of Lascoux, key, Grothendieck and Schur polynomials.
//!
//! Two independent routes are provided: Demazure-Lascoux operators acting on
//! sparse polynomials ([`algebra`]), and sums over efficient enhanced
//! Gelfand-Zetlin patterns whose cells lie in dual Kogan faces ([`enhanced`],
//! [`cells`], [`kogan`]). The [`verify`] module cross-checks the two.

pub mod algebra;
pub mod cells;
pub mod enhanced;
pub mod error;
pub mod gz;
pub mod kogan;
pub mod perm;
pub mod verify;

mod unionfind;

pub use algebra::{lascoux_of_composition, lascoux_w_lambda, BetaPolynomial, Monomial};
pub use cells::{
    cell_constraints, cell_contains, cell_in_face, closure_patterns, enumerate_tracks,
    euler_characteristic, lascoux_via_cells, patterns_for_perm, point_to_pattern,
    track_to_pattern, verify_cellular, CellConstraints, CellularReport, CoordConstraint, Term,
    Track, TrackStep,
};
pub use enhanced::{
    enumerate_all, enumerate_efficient, enumerate_enhancements, grothendieck_via_patterns,
    reconstruct_edges, Component, ComponentKind, Direction, EnhancedPattern, Violation,
};
pub use error::{Error, Result};
pub use gz::{
    character_of_points, enumerate_gz_patterns, gz_contains, project_weight, weyl_dimension,
    GZPattern, Partition, Rational, RationalPoint,
};
pub use kogan::{
    edge_move, empty_places_permutation, enumerate_reduced_faces, face_integer_points,
    key_polynomial, right_adjusted_of, FaceDiagram, MoveDirection,
};
pub use perm::{bruhat_leq, bruhat_leq_subword, Permutation, Word};
pub use verify::{Suite, VerifyBounds, VerifyReport};
