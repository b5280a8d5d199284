//! Normal surfaces as 2-cycles of a chain complex of normal discs.
//!
//! A closed orientable 3-pseudo-manifold is described by tetrahedra with
//! face pairings ([`Triangulation`]). From it we build the free abelian
//! groups of oriented normal arcs (1-chains) and normal discs (2-chains) and
//! the boundary map between them ([`chain`]). Normal coordinates satisfy the
//! matching equations exactly when they are cycles, and the triangles
//! linking a vertex form a subcomplex ([`link`]) whose homology decides
//! which quadrilateral coordinates extend to normal surfaces ([`quad`]).

pub mod chain;
pub mod error;
pub mod fixtures;
pub mod index;
pub mod linalg;
pub mod link;
pub mod perm;
pub mod quad;
pub mod triangulation;

pub use chain::{
    boundary_matrix, boundary_of_disc, delta_plus, epsilon, matching_equations, Chain1, Chain2, SparseMatrix,
};
pub use error::{Error, Result};
pub use index::{Arc, Disc, DiscType};
pub use linalg::{
    hermite_normal_form, kernel_basis, smith_normal_form, smith_normal_form_with, solve_integer, IntMatrix, PivotOrder,
    SmithDecomposition, Solution,
};
pub use link::{build_link, fundamental_class, projection, FundamentalClass, LinkVertex, VertexLink};
pub use perm::Perm4;
pub use quad::{
    check_admissible, lift, verify_normal, AdmissibilityReport, Classification, LiftResult, NormalCoordinates,
    QuadCoordinates, QuadSolver, VerifyReport,
};
pub use triangulation::{parse_triangulation, FaceGluing, Triangulation};
