//! Minimal linear codes as cutting blocking sets.
//!
//! A non-degenerate `[n,k]_q` code is the same data as a multiset of `n`
//! points of `PG(k-1,q)` (its columns up to scaling). The code is minimal
//! exactly when the underlying point set meets every hyperplane in a set
//! spanning that hyperplane. This crate implements both sides of that
//! correspondence over small fields (`q <= 64`):
//!
//! * [`gf`]: table-driven arithmetic in `GF(p^m)`.
//! * [`pg`]: projective spaces, flats, incidence.
//! * [`code`]: generator matrices, weight distributions, puncturing.
//! * [`correspond`]: codes <-> projective systems, blocking predicates.
//! * [`minimal`]: minimality by support containment, by the weight-sum
//!   criterion, the sufficient weight-ratio test, and reducedness.
//! * [`construct`]: explicit families of minimal codes.
//! * [`bounds`]: length/distance bounds for minimal codes.
//! * [`search`]: exhaustive search for cutting sets, code equivalence and
//!   classification.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod bounds;
pub mod code;
pub mod construct;
pub mod correspond;
mod error;
pub mod gf;
pub mod linalg;
pub mod minimal;
pub mod pg;
pub mod search;

pub use bitset::PointSet;
pub use code::{LinearCode, WeightDistribution};
pub use correspond::ProjectiveSystem;
pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use pg::{Flat, Point, ProjectiveSpace};
