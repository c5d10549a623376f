//! Exact computational modular representation theory of symmetric groups.
//!
//! The crate builds the Lie module of `S_n` over a prime field, cuts out its
//! principal-block component, decomposes it into indecomposable summands, and
//! determines vertices, sources and Dade-group data of the non-projective
//! summands.  Everything is exact: packed dense linear algebra over GF(p),
//! big-integer character theory, and certified Monte Carlo module arithmetic
//! driven by explicit 64-bit seeds.
//!
//! The crate is `no_std`-compatible (with `alloc`); the `parallel` feature
//! enables multi-threaded kernels in [`gfp`] without changing any result.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod chartab;
pub mod gfp;
pub mod lie;
pub mod localrep;
pub mod modrep;
pub mod reduce;
pub mod rng;
pub mod symgrp;
