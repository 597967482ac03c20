//! Comparability-graph toolkit: builds the partial order graph families
//! arising from divisor lattices, ring ideals, idempotents and integer
//! semi-cones, extracts clique/independent-set witnesses through Mirsky
//! level decompositions, and exhaustively verifies the closed-form Ramsey
//! numbers of these graph classes at desk scale.

pub mod bits;
pub mod exec;
pub mod graph;
pub mod planar;
pub mod poset;

pub use exec::Exec;
pub use graph::{Distance, Graph, GraphError};
pub use poset::{mirsky_levels, validate_poset, MirskyLevels, OrientedGraph, Poset, PosetError};
