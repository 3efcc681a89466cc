//! Smith normal form over the integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::intalg::IntMatrix;

/// Invariant factors d_1 | d_2 | ... | d_n of a nonsingular integer matrix,
/// normalized positive and ascending by divisibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    /// The last invariant factor d_n (the largest elementary divisor).
    pub fn last(&self) -> &BigInt {
        self.factors.last().expect("nonsingular SNF is nonempty")
    }
}

/// Diagonalizes by elementary row/column operations, always pivoting on the
/// smallest-magnitude nonzero entry of the remaining block; remainders from
/// each clearing pass shrink the pivot monotonically, so the loop terminates.
/// Requires a square nonsingular input.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SnfResult> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut factors: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => a[(i, j)].abs() < a[(bi, bj)].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // Trailing block all zero before the diagonal is full.
                return Err(Error::Singular);
            };
            if pi != k {
                swap_rows(&mut a, k, pi);
            }
            if pj != k {
                swap_cols(&mut a, k, pj);
            }
            let pivot = a[(k, k)].clone();
            // Clear column k below and row k to the right, keeping remainders.
            let mut dirty = false;
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&a[(i, k)], &pivot);
                for j in k..n {
                    let t = &q * &a[(k, j)];
                    a[(i, j)] -= t;
                }
                if !a[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..n {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&a[(k, j)], &pivot);
                for i in k..n {
                    let t = &q * &a[(i, k)];
                    a[(i, j)] -= t;
                }
                if !a[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue; // a smaller entry appeared; re-pivot
            }
            // Divisibility fix-up: d_k must divide the rest of the block.
            let offender = (k + 1..n)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[(i, j)] % &pivot).is_zero());
            match offender {
                Some((i, _)) => {
                    // Fold the offending row into row k and keep reducing.
                    for j in k..n {
                        let t = a[(i, j)].clone();
                        a[(k, j)] += t;
                    }
                }
                None => {
                    factors.push(pivot.abs());
                    break;
                }
            }
        }
    }
    debug_assert!(factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    Ok(SnfResult { factors })
}

fn swap_rows(a: &mut IntMatrix, r1: usize, r2: usize) {
    for j in 0..a.cols() {
        let t = a[(r1, j)].clone();
        a[(r1, j)] = a[(r2, j)].clone();
        a[(r2, j)] = t;
    }
}

fn swap_cols(a: &mut IntMatrix, c1: usize, c2: usize) {
    for i in 0..a.rows() {
        let t = a[(i, c1)].clone();
        a[(i, c1)] = a[(i, c2)].clone();
        a[(i, c2)] = t;
    }
}

/// Quotient rounding toward the nearest integer, so the remainder has
/// magnitude at most |d| / 2 -- this is what makes pivots shrink fast.
fn rounded_quotient(x: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = x.div_rem(d);
    let two_r = r.abs() * BigInt::from(2);
    if two_r > d.abs() {
        if (x.is_negative()) == (d.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}
