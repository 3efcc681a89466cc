//! Exact rational matrices, used for inverses and orthogonal transforms.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intalg::IntMatrix;

/// Dense matrix over Q, row-major; entries stay in lowest terms because
/// `BigRational` normalizes on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_int_matrix(m: &IntMatrix) -> Self {
        RationalMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            BigRational::from(m[(i, j)].clone())
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                if i == j {
                    self[(i, j)].is_one()
                } else {
                    self[(i, j)].is_zero()
                }
            })
        })
    }

    /// True when every entry is an integer (denominator 1).
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Converts to an integer matrix; requires [`is_integral`](Self::is_integral).
    pub fn to_int_matrix(&self) -> Result<IntMatrix> {
        if !self.is_integral() {
            return Err(Error::Precondition(alloc::format!(
                "matrix has non-integer entries"
            )));
        }
        Ok(IntMatrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].to_integer()
        }))
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

/// Exact inverse of a nonsingular integer matrix by Gauss-Jordan over Q.
pub fn rational_inverse(m: &IntMatrix) -> Result<RationalMatrix> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = RationalMatrix::from_int_matrix(m);
    let mut inv = RationalMatrix::identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[(i, col)].is_zero());
        let Some(pivot) = pivot else {
            return Err(Error::Singular);
        };
        if pivot != col {
            for j in 0..n {
                let (x, y) = (a[(pivot, j)].clone(), a[(col, j)].clone());
                a[(pivot, j)] = y;
                a[(col, j)] = x;
                let (x, y) = (inv[(pivot, j)].clone(), inv[(col, j)].clone());
                inv[(pivot, j)] = y;
                inv[(col, j)] = x;
            }
        }
        let p = a[(col, col)].clone();
        for j in 0..n {
            a[(col, j)] /= &p;
            inv[(col, j)] /= &p;
        }
        for i in 0..n {
            if i == col || a[(i, col)].is_zero() {
                continue;
            }
            let factor = a[(i, col)].clone();
            for j in 0..n {
                let t = &factor * &a[(col, j)];
                a[(i, j)] -= t;
                let t = &factor * &inv[(col, j)];
                inv[(i, j)] -= t;
            }
        }
    }
    Ok(inv)
}

/// Level of a rational matrix: the least common multiple of all entry
/// denominators, i.e. the smallest positive integer `l` with `l * M` integral.
pub fn level(m: &RationalMatrix) -> BigInt {
    let mut l = BigInt::one();
    for x in &m.data {
        l = l.lcm(x.denom());
    }
    l.abs()
}
