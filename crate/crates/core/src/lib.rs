//! Exact verification and construction toolkit for finite-dimensional Hom-
//! and BiHom-algebraic structures.
//!
//! Structures are given by structure constants over the rationals. Every axiom
//! system has a checker that either passes or returns the lexicographically
//! smallest failing basis tuple, and every construction verifies its
//! hypotheses before building anything.
//!
//! - [`exactlin`]: rational matrices, structure-constant cubes and tensors.
//! - [`structures`]: structure bundles and their checkers.
//! - [`constructions`]: twists, dendriform and pre-Lie constructions,
//!   Yang-Baxter operators, and the theorem registry.
//! - [`discovery`]: exhaustive certified search and the example catalogue.
//! - [`io`]: the versioned JSON document format.

pub mod constructions;
pub mod discovery;
mod error;
pub mod exactlin;
pub mod io;
pub mod structures;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::{CheckVerdict, Law, Witness};
