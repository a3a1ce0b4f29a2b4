//! Symmetric Grothendieck polynomials and their duals, built from Schur
//! operators and from tableau enumeration, with exact verification of the
//! identities relating them.

pub mod error;
pub mod graphs;
pub mod identities;
pub mod module;
pub mod partition;
pub mod poly;
pub mod report;
pub mod schur_ops;
pub mod suite;
pub mod symfun;
pub mod tableau;

pub use error::{Error, ParseError, Result};
pub use partition::{DoubleSlashShape, Partition, SkewShape};
pub use poly::{Cap, Int, Monomial, Poly, Ring, RingRef, Var};
