//! Exact integer and rational linear algebra.
//!
//! All matrix entries are arbitrary-precision integers: walk-matrix entries
//! grow like `n^k`, so fixed-width arithmetic is not an option. Determinants
//! use fraction-free Bareiss elimination, characteristic polynomials the
//! division-free Berkowitz algorithm, and the Smith normal form a
//! smallest-pivot reduction that keeps intermediate entries tame.

mod poly;
mod rational;
mod snf;

pub use poly::{poly_matrix_det, resultant, IntPoly};
pub use rational::{level, rational_inverse, RationalMatrix};
pub use snf::{smith_normal_form, SnfResult};

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// All-zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row-major entries; `data.len()` must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Convenience constructor from machine integers (tests, small fixtures).
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zero(self.rows, other.cols);
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

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Column `j` as an owned vector.
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Builds an n x k matrix from its columns.
    pub fn from_columns(n: usize, cols: &[Vec<BigInt>]) -> Self {
        IntMatrix::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.data.clone();
        let at = |m: &[BigInt], i: usize, j: usize| m[i * n + j].clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !m[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j);
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = at(&m, k, k);
        }
        let d = m[(n - 1) * n + (n - 1)].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Characteristic polynomial `det(xI - M)`, exact and monic, by the
    /// division-free Berkowitz algorithm (iterated Toeplitz products over
    /// leading principal submatrices).
    pub fn char_poly(&self) -> Result<IntPoly> {
        let n = self.require_square()?;
        // p holds the coefficients of the current char poly, descending
        // from the leading 1.
        let mut p: Vec<BigInt> = vec![BigInt::one()];
        for r in 1..=n {
            // Partition A_r = [[A_{r-1}, S], [R, a]].
            let a = self[(r - 1, r - 1)].clone();
            let mut t: Vec<BigInt> = Vec::with_capacity(r + 1);
            t.push(BigInt::one());
            t.push(-a);
            if r >= 2 {
                let mut v: Vec<BigInt> = (0..r - 1).map(|i| self[(i, r - 1)].clone()).collect();
                for _ in 2..=r {
                    let dot: BigInt = (0..r - 1).map(|j| &self[(r - 1, j)] * &v[j]).sum();
                    t.push(-dot);
                    // v <- A_{r-1} v
                    let next: Vec<BigInt> = (0..r - 1)
                        .map(|i| (0..r - 1).map(|j| &self[(i, j)] * &v[j]).sum())
                        .collect();
                    v = next;
                }
                t.truncate(r + 1);
            }
            let mut next_p = vec![BigInt::zero(); r + 1];
            for (i, slot) in next_p.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    if i >= j && i - j <= r {
                        *slot += &t[i - j] * pj;
                    }
                }
            }
            p = next_p;
        }
        p.reverse();
        Ok(IntPoly::new(p))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Largest `k` with `p^k | m`. Errors on `m = 0` (the valuation is infinite).
pub fn p_adic_valuation(m: &BigInt, p: u64) -> Result<u32> {
    if m.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let p = BigInt::from(p);
    let mut m = m.abs();
    let mut k = 0u32;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Ok(k);
        }
        m = q;
        k += 1;
    }
}

/// Default trial-division bound used when the caller does not override it.
pub const DEFAULT_FACTOR_CUTOFF: u64 = 1_000_000;

/// Partial factorization by trial division up to `cutoff`.
///
/// `factors` lists the primes found with their exponents; `cofactor`, when
/// present, is the remaining part > 1 all of whose prime factors exceed
/// `cutoff` (its factorization is unknown).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
    pub cofactor: Option<BigInt>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }
}

/// Trial-divides `|m|` (m nonzero) by 2 and odd numbers up to `cutoff`.
pub fn trial_factor(m: &BigInt, cutoff: u64) -> Factorization {
    assert!(!m.is_zero(), "cannot factor zero");
    let mut rem = m.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let divide_out = |rem: &mut BigInt, d: &BigInt, factors: &mut Vec<(BigInt, u32)>| {
        let mut e = 0u32;
        loop {
            let (q, r) = rem.div_rem(d);
            if !r.is_zero() {
                break;
            }
            *rem = q;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
    };
    divide_out(&mut rem, &BigInt::from(2), &mut factors);
    let mut d = 3u64;
    while d <= cutoff {
        let db = BigInt::from(d);
        if (&db * &db) > rem {
            break;
        }
        divide_out(&mut rem, &db, &mut factors);
        d += 2;
    }
    let cofactor = if rem.is_one() {
        None
    } else {
        // Everything <= cutoff has been divided out, so rem's prime factors
        // all exceed cutoff; if rem <= cutoff^2 it must itself be prime.
        let bound = BigInt::from(cutoff) * BigInt::from(cutoff);
        if rem <= bound {
            factors.push((rem, 1));
            None
        } else {
            Some(rem)
        }
    };
    Factorization { factors, cofactor }
}

/// Three-valued squarefreeness verdict; `Unknown` absorbs the factoring cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Squarefreeness {
    Squarefree,
    NotSquarefree,
    Unknown,
}

/// Is `m` square-free? `+-1` is square-free; `0` is not. Factors of the
/// unfactored cofactor beyond `cutoff` can hide a square, in which case the
/// answer is `Unknown` rather than a guess.
pub fn squarefree_status(m: &BigInt, cutoff: u64) -> Squarefreeness {
    if m.is_zero() {
        return Squarefreeness::NotSquarefree;
    }
    let f = trial_factor(m, cutoff);
    if f.factors.iter().any(|(_, e)| *e >= 2) {
        return Squarefreeness::NotSquarefree;
    }
    match f.cofactor {
        None => Squarefreeness::Squarefree,
        Some(rem) => {
            // A perfect power r = s^k (k >= 2) is never square-free.
            let bits = rem.bits();
            for k in 2..=bits.max(2) {
                let root = rem.nth_root(k as u32);
                if num_traits::pow::Pow::pow(&root, k as u32) == rem {
                    return Squarefreeness::NotSquarefree;
                }
            }
            Squarefreeness::Unknown
        }
    }
}

/// `is_squarefree_int` with the default cutoff; panics if the cutoff left the
/// answer undecided (callers with large inputs should use [`squarefree_status`]).
pub fn is_squarefree_int(m: &BigInt) -> bool {
    match squarefree_status(m, DEFAULT_FACTOR_CUTOFF) {
        Squarefreeness::Squarefree => true,
        Squarefreeness::NotSquarefree => false,
        Squarefreeness::Unknown => {
            panic!("squarefreeness of {m} undecided at cutoff {DEFAULT_FACTOR_CUTOFF}")
        }
    }
}

/// Deterministic Miller-Rabin for u64 (the base set covers all n < 3.3e24).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Odd prime factors of `m`, ascending, or an error message when the
/// factorization is incomplete under `cutoff`.
pub fn odd_prime_factors(m: &BigInt, cutoff: u64) -> core::result::Result<Vec<u64>, Error> {
    let f = trial_factor(m, cutoff);
    if let Some(c) = f.cofactor {
        return Err(Error::Precondition(format!(
            "factorization incomplete at cutoff {cutoff}: cofactor {c}"
        )));
    }
    let two = BigInt::from(2);
    let mut out = Vec::new();
    for (p, _) in f.factors {
        if p != two {
            // trial_factor only emits primes, and they fit u64 by construction
            // (cutoff and cutoff^2-bounded cofactors are both <= 2^64 when
            // cutoff <= 2^32; larger survivors were returned as cofactor).
            let digits = p.to_u64_digits().1;
            if digits.len() != 1 {
                return Err(Error::Precondition(format!(
                    "odd prime factor {p} exceeds u64"
                )));
            }
            out.push(digits[0]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn det_identity() {
        assert_eq!(IntMatrix::identity(3).det().unwrap(), bi(1));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::zero(2, 3);
        assert!(matches!(m.det(), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn det_2x2_and_singular() {
        let m = IntMatrix::from_i64_rows(&[&[2, 3], &[1, 4]]);
        assert_eq!(m.det().unwrap(), bi(5));
        let s = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.det().unwrap(), bi(0));
    }

    #[test]
    fn char_poly_zero_matrix() {
        let m = IntMatrix::zero(2, 2);
        assert_eq!(m.char_poly().unwrap(), IntPoly::from_i64(&[0, 0, 1])); // x^2
    }

    #[test]
    fn char_poly_k2() {
        // A(K_2) has eigenvalues +-1: x^2 - 1.
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.char_poly().unwrap(), IntPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn char_poly_p3() {
        // Oracle: x^3 - 2x by cofactor expansion of det(xI - A(P_3)).
        let m = IntMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(m.char_poly().unwrap(), IntPoly::from_i64(&[0, -2, 0, 1]));
    }

    #[test]
    fn char_poly_matches_det_at_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(1..6);
            let m = IntMatrix::from_fn(n, n, |_, _| bi(rng.gen_range(-4..5)));
            let cp = m.char_poly().unwrap();
            for _ in 0..5 {
                let x0 = bi(rng.gen_range(-10..11));
                let shifted = IntMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        &x0 - &m[(i, j)]
                    } else {
                        -&m[(i, j)]
                    }
                });
                assert_eq!(cp.eval(&x0), shifted.det().unwrap());
            }
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(p_adic_valuation(&bi(48), 2).unwrap(), 4);
        assert_eq!(p_adic_valuation(&bi(48), 3).unwrap(), 1);
        assert_eq!(p_adic_valuation(&bi(7), 2).unwrap(), 0);
        assert_eq!(p_adic_valuation(&bi(-48), 2).unwrap(), 4);
        assert!(matches!(
            p_adic_valuation(&bi(0), 2),
            Err(Error::ZeroValuation)
        ));
    }

    #[test]
    fn squarefree_basics() {
        assert!(is_squarefree_int(&bi(6)));
        assert!(is_squarefree_int(&bi(1)));
        assert!(is_squarefree_int(&bi(-1)));
        assert!(!is_squarefree_int(&bi(0)));
        assert!(!is_squarefree_int(&bi(12)));
        assert!(is_squarefree_int(&bi(-3)));
    }

    #[test]
    fn squarefree_cutoff_is_honest() {
        // A perfect-square cofactor is detected even below the cutoff.
        let p = bi(1_000_003);
        let sq = &p * &p;
        assert_eq!(squarefree_status(&sq, 100), Squarefreeness::NotSquarefree);
        assert_eq!(
            squarefree_status(&sq, 2_000_000),
            Squarefreeness::NotSquarefree
        );
        // p^2 * q with p, q beyond the cutoff is genuinely undecided: the
        // cofactor is not a perfect power, and we never guess.
        let undecided = &sq * bi(1_000_033);
        assert_eq!(squarefree_status(&undecided, 100), Squarefreeness::Unknown);
        // ...but a squarefree product of large primes is also Unknown; only a
        // complete factorization can promote it.
        let sf = &p * bi(1_000_033);
        assert_eq!(squarefree_status(&sf, 100), Squarefreeness::Unknown);
    }

    #[test]
    fn trial_factor_small() {
        let f = trial_factor(&bi(-1200), DEFAULT_FACTOR_CUTOFF);
        assert!(f.is_complete());
        assert_eq!(
            f.factors,
            vec![(bi(2), 4u32), (bi(3), 1), (bi(5), 2)]
        );
    }

    #[test]
    fn primality_u64() {
        let primes = [2u64, 3, 5, 7, 61, 2147483647, 1_000_003];
        let composites = [1u64, 4, 9, 561, 1_000_005, 2147483647 * 3];
        for p in primes {
            assert!(is_prime_u64(p), "{p} should be prime");
        }
        for c in composites {
            assert!(!is_prime_u64(c), "{c} should be composite");
        }
    }

    #[test]
    fn odd_prime_factor_extraction() {
        assert_eq!(odd_prime_factors(&bi(6), 1000).unwrap(), vec![3]);
        assert_eq!(odd_prime_factors(&bi(-48), 1000).unwrap(), vec![3]);
        assert_eq!(odd_prime_factors(&bi(2), 1000).unwrap(), Vec::<u64>::new());
    }
}
