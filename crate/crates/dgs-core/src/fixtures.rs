//! The master example graph used across the test suite and exposed by
//! the CLI as `--fixture paper-g8`.
//!
//! It is an 8-vertex controllable graph with det A = 1 and
//! det W = -48 = -2^4 * 3, small enough to compute everything by hand
//! yet rich enough to exercise the odd-prime side of the square-root
//! criterion: Phi_3 = (x+1)^2, nullity_3 W = 1, and the graph passes
//! the main certification while sitting in family G but not family F.

use crate::graphs::Graph;
use crate::intalg::IntMatrix;

/// The 8x8 example graph.
pub fn paper_g8() -> Graph {
    let a = IntMatrix::from_i64_rows(&[
        &[0, 1, 0, 0, 1, 1, 1, 0],
        &[1, 0, 1, 0, 1, 1, 0, 1],
        &[0, 1, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 1, 1, 0, 0],
        &[1, 1, 1, 1, 0, 0, 1, 1],
        &[1, 1, 0, 1, 0, 0, 1, 1],
        &[1, 0, 0, 0, 1, 1, 0, 0],
        &[0, 1, 0, 0, 1, 1, 0, 0],
    ]);
    Graph::from_adjacency(&a).expect("fixture matrix is a valid adjacency matrix")
}
