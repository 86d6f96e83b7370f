//! Structure and enumeration of the permutation class Av(2143, 4231).
//!
//! - [`perm`]: permutations, containment, symmetries, intervals and the
//!   substitution decomposition.
//! - [`grid`]: monotone grid classes and gridding search.
//! - [`class`]: membership, enumeration, simple-member classification, the
//!   three-letter encoding and the inflation rules.
//! - [`genfunc`]: exact rational generating functions.
//! - [`verify`]: the end-to-end checks run by `permclass verify`.

pub mod class;
pub mod genfunc;
pub mod grid;
pub mod perm;
pub mod verify;

pub use class::{ClassError, SimpleType, Word};
pub use genfunc::{GfError, GfName, IntPolynomial, RationalGF};
pub use grid::{CellType, GridError, Gridding, GriddingMatrix};
pub use perm::{perm, Decomposition, PermError, Permutation, Symmetry};
