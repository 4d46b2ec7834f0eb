//! Exact graded Betti numbers for edge ideals of skew Ferrers graphs and for
//! initial ideals of binomial edge ideals of closed graphs.
//!
//! Every quantity is computed at least two ways so the routes can be checked
//! against each other:
//!
//! - [`betti::hochster_betti`] sums reduced homology of restricted
//!   independence complexes (the general oracle, over GF(2) or the rationals);
//! - [`betti::nagel_reiner_betti`] counts spherical restrictions of the
//!   rectangular decomposition of a skew Ferrers diagram;
//! - [`betti::corso_nagel_betti`] evaluates the closed binomial formula for
//!   honest Ferrers shapes;
//! - [`betti::join_convolve`] assembles the table of a disjoint union from
//!   the tables of its components.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod betti;
pub mod diagram;
mod error;
pub mod graph;
pub mod homology;
mod rank;

pub use error::{Error, Result};
