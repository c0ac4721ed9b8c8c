//! Conflict-free colorings of hypergraphs and `{a,b}`-factors of regular
//! graphs.
//!
//! The crate bundles coloring algorithms with guaranteed palette sizes
//! ([`greedy`], [`lll`], [`four_uniform`]), generators for the classical
//! extremal instances ([`constructions`]), an exact factor search
//! ([`factors`]) and a brute-force conflict-free chromatic number oracle
//! ([`exact`]).

pub mod batch;
pub mod coloring;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod factors;
pub mod four_uniform;
pub mod greedy;
pub mod hypergraph;
pub mod io;
pub mod lll;
pub mod random;
pub mod verify;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, Stats, VertexRole, VertexRoleMap};
