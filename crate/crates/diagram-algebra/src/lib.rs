//! Exact arithmetic for the partition algebra and its diagram subalgebras.
//!
//! The library works with set-partition diagrams on two rows of `k` vertices:
//! the partition monoid and the familiar subfamilies (symmetric group, Brauer,
//! rook monoid, rook-Brauer, Temperley-Lieb, Motzkin, planar rook, planar
//! partition).  On top of the diagram calculus it builds
//!
//! * linear combinations over `Z[x]` with the stacking product `d1 d2 =
//!   x^kappa (d1 o d2)`, the rank filtration, conditional expectations and
//!   absorbing idempotents ([`algebra`]);
//! * the signed-conjugation action of basis diagrams on symmetric diagrams,
//!   graded bases of symmetric diagrams, representing matrices and model
//!   characters ([`model`]);
//! * the symmetric-group side of the story: involutions, the Saxl and
//!   Adin-Postnikov-Roichman signs, Murnaghan-Nakayama characters and the
//!   multiplicity table of the involution module ([`symgroup`]);
//! * closed-form counts, irreducible label sets, the left-endpoint bijection
//!   for symmetric Temperley-Lieb diagrams and binomial-transform identities
//!   ([`combinatorics`]);
//! * a deterministic check harness that verifies the structural facts at
//!   small size with exact integer, polynomial and rational arithmetic
//!   ([`verify`]).
//!
//! Everything is immutable after construction and every operation is pure,
//! so values can be shared freely across threads.

pub mod algebra;
pub mod combinatorics;
pub mod diagram;
pub mod enumerate;
mod error;
pub mod json;
pub mod linalg;
pub mod model;
pub mod poly;
pub mod symgroup;
pub mod verify;

pub use diagram::{Diagram, Family};
pub use error::Error;
pub use poly::{IntPoly, Rational};

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
