//! Exact computer algebra for operads of multigraphs built by graph insertion.
//!
//! Everything here is `no_std` (with `alloc`) and uses exact rational arithmetic.
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: rationals, formal linear combinations and an incremental
//!   reduced row space.
//! * [`graph`]: multi-hypergraphs in the polynomial encoding, end labels,
//!   relabeling, shapes, spanning trees and the distributive substitution.
//! * [`operad`]: the concrete insertion operads (`K MG`, `K G`, `G•`,
//!   `MG_or•`, `PLie`, ...), the axiom checker, `psi` and the spanning-tree
//!   orientation constructions.
//! * [`span`]: suboperad closures, membership and generator search.
//! * [`presentation`]: the free operad on the two binary generators, the
//!   quadratic relations, the Koszul pairing and quotient dimensions.
//! * [`series`]: truncated power series for Hilbert series identities.
#![no_std]

extern crate alloc;

pub mod error;
pub mod graph;
pub mod linalg;
pub mod operad;
pub mod perm;
pub mod presentation;
pub mod series;
pub mod span;

pub use error::{Error, Result};
pub use graph::{Edge, End, EndSym, Label, MultiHyperGraph, RootedGraph};

pub use linalg::{LinComb, Rational, RowSpace};
pub use operad::{Instance, Structure};
pub use series::TruncEGF;
