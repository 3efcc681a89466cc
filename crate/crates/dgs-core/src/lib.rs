//! Exact-arithmetic toolkit for certifying graphs as determined by their
//! generalized spectrum (DGS).
//!
//! Everything here is computed over `Z`, `Q`, or `F_p` with no floating
//! point and no tolerance knobs. The crate is split into:
//!
//! - [`intalg`]: exact integer/rational linear algebra (determinants, Smith
//!   normal form, division-free characteristic polynomials, resultants,
//!   polynomial-matrix determinants, valuations, levels);
//! - [`modalg`]: linear and polynomial algebra over `F_p` (gcd, square-free
//!   decomposition, square-free part and square root of a polynomial,
//!   null spaces, radicals, restricted characteristic polynomials);
//! - [`graphs`]: the graph data model, graph6/edge-list codecs, walk
//!   matrices, and the rooted product construction;
//! - [`spectral`]: the spectral invariants driving certification (the
//!   modular gcd invariant, main polynomials, reduced walk matrices, the
//!   `F_2` closed form, and the rational orthogonal transform between
//!   cospectral controllable graphs);
//! - [`certify`]: the DGS criteria and family membership predicates,
//!   emitting re-verifiable certificates;
//! - [`rooted`]: preserver conditions for rooted graphs and batch
//!   construction of DGS families via rooted products;
//! - [`oracle`]: brute-force ground truth by exhaustive enumeration of
//!   small graphs.
//!
//! The crate is `no_std` (with `alloc`); all I/O lives in the companion
//! CLI crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod certify;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod intalg;
pub mod modalg;
pub mod oracle;
pub mod rooted;
pub mod spectral;

pub use error::Error;
