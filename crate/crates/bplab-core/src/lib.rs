//! Simulation core for recurrent diffusions in Brownian potentials.
//!
//! Everything in this crate is deterministic given an [`rng::RngStream`]:
//! samplers construct their generator from `(seed, stream)` and never touch
//! ambient state, so Monte Carlo replicas can be keyed by replica index and
//! reproduced bit-for-bit. Float math goes through `num-traits`/`libm`, which
//! keeps the crate `no_std` (alloc only) and makes results independent of the
//! platform libm.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod besq;
pub mod brownian;
pub mod environment;
pub mod error;
pub mod grid;
pub mod identity;
pub mod localtime;
pub mod rng;
pub mod sinai;
pub mod special;
pub mod stats;

pub use error::Error;
pub use grid::{SamplePath, TimeGrid};
pub use rng::RngStream;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
