//! Exact diamond-closure computations on cover graphs of finite modular and
//! distributive lattices, together with the Wedderburn polynomial lattices
//! over the rational quaternions from which the diamond operations arise.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactnum`]: arbitrary-precision rationals and the division ring of
//!   rational quaternions. Everything downstream is exact; there is no
//!   floating-point path anywhere.
//! - [`ncpoly`]: noncommutative polynomials in a central variable over the
//!   quaternions — right division, evaluation, GCRD, LCLM and Wedderburn
//!   polynomials `f_S`.
//! - [`lattice`]: finite lattices as explicit combinatorial objects with
//!   precomputed meet/join tables, cover graphs, height, and the ranked /
//!   modular / distributive predicates.
//! - [`diamond`]: the diamond-closure operator on arc sets of cover graphs,
//!   both as a naive fixpoint and through the packing-merge procedure valid
//!   on modular hosts, plus up-down path normalization.
//! - [`birkhoff`]: downset representations of distributive lattices, the
//!   sublattice/extension correspondence, and the quasi-order merge form of
//!   the diamond closure.
//! - [`pseudoroots`]: the lattice of Wedderburn polynomials of a finite
//!   quaternion set, its pseudo-root labelling, and the conjugation
//!   operations that transport pseudo-roots across diamonds.
//! - [`iso`]: brute-force order-isomorphism search for small posets and
//!   lattices, used by roundtrip checks.
//!
//! The crate is `no_std` (with `alloc`); all IO, serialization and the
//! command-line front end live in the companion `diamondlat-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod birkhoff;
pub mod diamond;
pub mod exactnum;
pub mod iso;
pub mod lattice;
pub mod ncpoly;
pub mod pseudoroots;

pub use exactnum::{Quaternion, Rational};
pub use lattice::{Arc, FiniteLattice};
pub use ncpoly::NCPoly;
