//! Exact homology of oriented hypergraphs.
//!
//! An oriented hypergraph has edges `(A, B)` with disjoint vertex sets: `A`
//! holds the tails and `B` the heads. The boundary of an edge is the sum of
//! its heads minus the sum of its tails, which extends the simplicial boundary
//! of a directed graph. On top of that single map this crate builds
//!
//! - chains, cochains and the boundary/coboundary calculus ([`chain`], [`boundary`]),
//! - exact linear algebra over ℤ and ℚ, including a Smith normal form with
//!   unimodular transforms ([`linalg`]),
//! - algebraic spanning trees with fundamental cycles and cuts, over ℚ and,
//!   by exhaustive search, over ℤ ([`spanning_tree`]),
//! - the groups `H₁`, `H¹` and the checks deciding whether a hypergraph is
//!   algebraically graph-like ([`homology`]).
//!
//! All arithmetic is arbitrary precision. Nothing in this crate uses floats.

pub mod boundary;
pub mod chain;
pub mod error;
pub mod homology;
pub mod hypergraph;
pub mod linalg;
pub mod scalar;
pub mod spanning_tree;

pub use boundary::{
    boundary, boundary_inner_product, boundary_matrix, canonical_inner_product, coboundary,
    psi_partial, BoundaryMatrix,
};
pub use chain::{gamma, gamma_inverse, Chain, Cochain, Degree};
pub use error::{Error, Result};
pub use homology::{
    annihilator_of_cycles, check_cycles_equal_cut_perp, compute_d, graph_likeness,
    hom_h1_iso_check, homology, integer_decomposition, membership_in_u,
    orthogonal_decomposition_rational, prop_d_isomorphism_check, GraphLikenessReport,
    HomologyReport,
};
pub use hypergraph::{Edge, EdgeSpec, HypergraphSpec, OrientedHypergraph, Violation};
pub use linalg::{IntMatrix, Matrix, ModuleStructure, RatMatrix, SmithDecomposition};
pub use scalar::{Ring, Scalar};
pub use spanning_tree::{
    find_spanning_tree_integer, find_spanning_tree_rational, is_integral,
    vector_space_spanning_tree, verify_tree_axioms, SpanningTree, TreeAxiomReport,
};
