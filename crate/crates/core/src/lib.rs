//! Projective lines over small finite rings, and the two-qubit picture that
//! lives inside the line over `M2(GF(2))`.
//!
//! The crate is organised bottom-up:
//!
//! * [`bits`]: GF(2) bit matrices with word-XOR rank.
//! * [`ring`]: table-driven finite rings with faithful bit-matrix
//!   representations (`M2(GF(2))`, `GF(2)`, `GF(4)`, `GF(2)xGF(2)`,
//!   `GF(2)[x]/(x^2)`).
//! * [`projline`]: admissible pairs, unit orbits, the distant/neighbor
//!   relation, the 15-point sub-configuration and `GL(2,R)` transitivity.
//! * [`pauli`]: exact two-qubit Pauli algebra with phases, Mermin squares and
//!   mutually unbiased bases.
//! * [`graph`] and [`quadrangle`]: small graphs, the generalized quadrangle of
//!   order two, its ovoids, spreads, hyperplanes and Petersen graphs.
//! * [`correspondence`]: the checks tying the three pictures together.
//! * [`cli`]: the batch command-line front end behind the `ringline` binary.
//!
//! Everything is exact; there is no floating point anywhere.

pub mod bits;
pub mod cli;
pub mod correspondence;
mod error;
pub mod fixtures;
pub mod graph;
pub mod pauli;
pub mod projline;
pub mod quadrangle;
pub mod relation;
pub mod ring;

pub use error::{Error, Result};
pub use pauli::{PauliLabeling, PauliOp, Phase, PhasedPauli};
pub use projline::{Matrix2R, PointClass, ProjectiveLine};
pub use quadrangle::{Hyperplane, HyperplaneKind, IncidenceStructure};
pub use relation::{Relation, RelationMatrix};
pub use ring::{RingElement, RingSpec};

/// Version tag written into every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;
