//! Exact equivariant homology of hypergraph matching complexes, p-cycle
//! complexes and Quillen complexes of symmetric groups.

pub mod characters;
pub mod cli;
pub mod complex;
pub mod formulas;
pub mod homology;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod symfunc;
