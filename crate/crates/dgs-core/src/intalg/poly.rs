//! Integer polynomials in one variable.
//!
//! Coefficients are stored ascending (index = power) and kept canonical:
//! no trailing zeros, so the zero polynomial is the empty vector.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Canonicalizes on entry: trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial x^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates at a square matrix by Horner's rule; `f(M)` commutes with `M`.
    pub fn eval_matrix(&self, m: &IntMatrix) -> IntMatrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = IntMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// Applies the polynomial to a vector under repeated multiplication by
    /// `m`: returns `f(m) v` without forming `f(m)`.
    pub fn eval_matrix_vec(&self, m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); v.len()];
        for c in self.coeffs.iter().rev() {
            acc = m.mul_vec(&acc);
            for (a, x) in acc.iter_mut().zip(v) {
                *a += c * x;
            }
        }
        acc
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Exact division: returns `self / divisor` when the remainder is zero.
    /// The divisor's leading coefficient must divide exactly at every step
    /// (always true for monic divisors); otherwise this reports failure.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (dn, dd) = (self.degree().unwrap(), divisor.degree().unwrap());
        if dn < dd {
            return Err(Error::Precondition(alloc::format!(
                "inexact polynomial division: degree {dn} < {dd}"
            )));
        }
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Err(Error::Precondition(alloc::format!(
                    "inexact polynomial division: leading coefficient does not divide"
                )));
            }
            let q = &top / lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Precondition(alloc::format!(
                "inexact polynomial division: nonzero remainder"
            )));
        }
        Ok(IntPoly::new(quot))
    }

    /// Renders as a human-readable expression in `var`, descending powers.
    pub fn display(&self, var: &str) -> alloc::string::String {
        use alloc::string::String;
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let first = s.is_empty();
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                let _ = write!(s, " {sign} ");
            }
            let coeff_needed = mag != BigInt::one() || k == 0;
            if coeff_needed {
                let _ = write!(s, "{mag}");
            }
            if k > 0 {
                if coeff_needed {
                    s.push('*');
                }
                let _ = write!(s, "{var}");
                if k > 1 {
                    let _ = write!(s, "^{k}");
                }
            }
        }
        s
    }
}

/// Resultant of two nonzero integer polynomials via the Sylvester matrix.
///
/// Degenerate shapes follow the usual conventions: for constants `c`,
/// `Res(f, c) = c^deg(f)` and `Res(c, g) = c^deg(g)`, so two constants give 1.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    let size = m + n;
    // Sylvester matrix: n rows of f's coefficients (descending) then m rows
    // of g's, each shifted one column per row.
    let mut s = IntMatrix::zero(size, size);
    for r in 0..n {
        for k in 0..=m {
            s[(r, r + k)] = f.coeff(m - k);
        }
    }
    for r in 0..m {
        for k in 0..=n {
            s[(n + r, r + k)] = g.coeff(n - k);
        }
    }
    s.det()
}

/// Determinant of a square matrix given by its columns of integer
/// polynomials (`columns[j][i]` = row i of column j).
///
/// Computed by evaluation-interpolation: the determinant's degree is at most
/// the sum over columns of the max entry degree, so evaluating at that many
/// integer points plus one and interpolating recovers it exactly.
pub fn poly_matrix_det(columns: &[Vec<IntPoly>]) -> Result<IntPoly> {
    let n = columns.len();
    for col in columns {
        if col.len() != n {
            return Err(Error::NonSquare {
                rows: col.len(),
                cols: n,
            });
        }
    }
    if n == 0 {
        return Ok(IntPoly::one());
    }
    // Degree bound: one max-degree entry per column.
    let bound: usize = columns
        .iter()
        .map(|col| col.iter().map(|f| f.degree().unwrap_or(0)).max().unwrap())
        .sum();
    let points: Vec<BigInt> = sample_points(bound + 1);
    let mut values = Vec::with_capacity(points.len());
    for x in &points {
        let m = IntMatrix::from_fn(n, n, |i, j| columns[j][i].eval(x));
        values.push(m.det()?);
    }
    interpolate_integer(&points, &values)
}

/// Distinct small integers 0, 1, -1, 2, -2, ...
fn sample_points(count: usize) -> Vec<BigInt> {
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        if k == 0 {
            pts.push(BigInt::zero());
        } else {
            pts.push(BigInt::from(k));
            if pts.len() < count {
                pts.push(BigInt::from(-k));
            }
        }
        k += 1;
    }
    pts
}

/// Lagrange interpolation through integer data, verified to land in Z[x].
fn interpolate_integer(points: &[BigInt], values: &[BigInt]) -> Result<IntPoly> {
    let n = points.len();
    // Accumulate in Q[x]; rationals clear only at the end.
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in 0..n {
        // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
        let mut basis: Vec<BigRational> = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            let shift = BigRational::from(xj.clone());
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &shift;
            }
            basis = next;
            denom *= BigRational::from(&points[i] - xj);
        }
        let weight = BigRational::from(values[i].clone()) / denom;
        for (a, b) in acc.iter_mut().zip(&basis) {
            *a += b * &weight;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for c in acc {
        if !c.is_integer() {
            return Err(Error::Internal(alloc::format!(
                "interpolation left the integers: coefficient {c}"
            )));
        }
        coeffs.push(c.to_integer());
    }
    Ok(IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn canonical_form_trims_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn arithmetic_basics() {
        let f = p(&[1, 1]); // 1 + x
        let g = p(&[-1, 1]); // -1 + x
        assert_eq!(f.mul(&g), p(&[-1, 0, 1]));
        assert_eq!(f.add(&g), p(&[0, 2]));
        assert_eq!(f.sub(&g), p(&[2]));
        assert_eq!(p(&[0, 0, 3]).derivative(), p(&[0, 6]));
    }

    #[test]
    fn eval_and_monic() {
        let f = p(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(f.eval(&BigInt::from(3)), BigInt::from(7));
        assert!(f.is_monic());
        assert!(!p(&[1, 2]).is_monic());
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = p(&[-1, 0, 1]);
        let g = p(&[1, 1]);
        assert_eq!(f.div_exact(&g).unwrap(), p(&[-1, 1]));
        assert!(p(&[1, 0, 1]).div_exact(&g).is_err()); // remainder 2
    }

    #[test]
    fn matrix_evaluation() {
        // f(A) for f = x^2 - 2, A = A(P_3): eigenvector checks via e.
        let a = IntMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        let f = p(&[-2, 0, 1]);
        let fa = f.eval_matrix(&a);
        let e = vec![BigInt::one(), BigInt::one(), BigInt::one()];
        assert_eq!(fa.mul_vec(&e), f.eval_matrix_vec(&a, &e));
    }

    #[test]
    fn resultant_known_values() {
        // Res(x^2 - 1, x) = -1: the 3x3 Sylvester determinant.
        let f = p(&[-1, 0, 1]);
        let g = p(&[0, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(-1));
        // Res(f, c) = c^deg f for constants.
        assert_eq!(resultant(&f, &p(&[5])).unwrap(), BigInt::from(25));
        assert_eq!(resultant(&p(&[5]), &p(&[7])).unwrap(), BigInt::one());
        assert!(resultant(&f, &IntPoly::zero()).is_err());
    }

    #[test]
    fn resultant_is_product_over_roots() {
        // Res(x - a, x - b) = det [[1, -a], [1, -b]] = a - b.
        for a in -3..4i64 {
            for b in -3..4i64 {
                let f = p(&[-a, 1]);
                let g = p(&[-b, 1]);
                assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(a - b));
            }
        }
    }

    #[test]
    fn resultant_multiplicativity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| loop {
                let d = rng.gen_range(1..4);
                let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-3..4)).collect();
                if c[d] == 0 {
                    c[d] = 1;
                }
                let q = IntPoly::from_i64(&c);
                if !q.is_zero() {
                    return q;
                }
            };
            let f = rand_poly(&mut rng);
            let g = rand_poly(&mut rng);
            let h = rand_poly(&mut rng);
            // Res(f, g h) = Res(f, g) Res(f, h)
            let lhs = resultant(&f, &g.mul(&h)).unwrap();
            let rhs = resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn poly_det_matches_scalar_dets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let n = rng.gen_range(1..5);
            let columns: Vec<Vec<IntPoly>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let d = rng.gen_range(0..3);
                            IntPoly::new((0..=d).map(|_| BigInt::from(rng.gen_range(-3..4i64))).collect())
                        })
                        .collect()
                })
                .collect();
            let det = poly_matrix_det(&columns).unwrap();
            for t in -4..5i64 {
                let x = BigInt::from(t);
                let m = IntMatrix::from_fn(n, n, |i, j| columns[j][i].eval(&x));
                assert_eq!(det.eval(&x), m.det().unwrap(), "mismatch at t={t}");
            }
        }
    }

    #[test]
    fn poly_det_laplace_example() {
        // det [[x, 1], [1, x]] = x^2 - 1.
        let x = IntPoly::monomial(1);
        let one = IntPoly::one();
        let columns = vec![
            vec![x.clone(), one.clone()],
            vec![one.clone(), x.clone()],
        ];
        assert_eq!(poly_matrix_det(&columns).unwrap(), p(&[-1, 0, 1]));
    }

    #[test]
    fn display_formatting() {
        assert_eq!(p(&[-2, 0, 1]).display("x"), "x^2 - 2");
        assert_eq!(p(&[0, -1]).display("x"), "-x");
        assert_eq!(p(&[3]).display("x"), "3");
        assert_eq!(IntPoly::zero().display("x"), "0");
        assert_eq!(p(&[1, 2, 1]).display("y"), "y^2 + 2*y + 1");
    }
}
