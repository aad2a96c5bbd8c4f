//! Exact enumeration, generating functions and constructive bijections for
//! Catalan's triangle and Borel's triangle.
//!
//! Every number array is computed by at least two independent routes
//! (closed form, recurrence, series expansion, exhaustive enumeration) so
//! callers can check one against another.
//!
//! The crate is `no_std` and only needs `alloc`; file formats, the CLI and
//! the verification harness live in the `borel` crate.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijections;
pub mod dumont;
pub mod dyck;
mod error;
pub mod histogram;
pub mod marked;
pub mod matchings;
pub mod perm;
pub mod series;
pub mod tree;
pub mod triangles;

pub use error::{Error, Result};
pub use histogram::Histogram;
pub use num_bigint::{BigInt, BigUint};
