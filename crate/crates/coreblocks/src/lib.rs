//! Exact combinatorics of core blocks of Ariki-Koike algebras.
//!
//! This crate computes graded decomposition matrices for core blocks of
//! Ariki-Koike algebras (cyclotomic Hecke algebras of type G(r,1,n)) by two
//! independent routes, plus the block-theoretic infrastructure both need:
//!
//! * [`partition`] — partitions, multipartitions, residues, dominance;
//! * [`beta`] — beta-numbers, abacus displays, rim hooks;
//! * [`kleshchev`] — normal/good nodes and Kleshchev multipartitions;
//! * [`matrix`] — the base-tuple/bit-matrix coordinates of multicores lying
//!   in core blocks;
//! * [`graph`] — bead swaps, block classes, weight graphs, and the
//!   classification of blocks whose weight graph is a tree;
//! * [`poly`], [`fock`], [`column`] — Laurent polynomials, divided-power
//!   induction on the Fock space, and the induction engine that computes
//!   decomposition-matrix columns;
//! * [`weight2`] — closed formulas for weight-2 blocks with three components;
//! * [`rank4`] — closed formulas (table driven) for tree blocks with four
//!   components.
//!
//! Everything is exact: integers, bit matrices and Laurent polynomials in `v`
//! with integer coefficients. The crate is `no_std` + `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod beta;
pub mod column;
pub mod error;
pub mod fock;
pub mod graph;
pub mod kleshchev;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod rank4;
pub mod weight2;

pub use error::Error;
