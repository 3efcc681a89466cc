//! Dense linear algebra over F_p: ranks, null spaces, invariant subspaces.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::intalg::IntMatrix;
use crate::modalg::{ModPoly, Modulus};

/// Dense matrix over F_p, row-major, entries in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    modulus: Modulus,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zero(modulus: Modulus, rows: usize, cols: usize) -> Self {
        ModMatrix {
            modulus,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(modulus: Modulus, n: usize) -> Self {
        let mut m = ModMatrix::zero(modulus, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_fn(
        modulus: Modulus,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        let p = modulus.get();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % p);
            }
        }
        ModMatrix {
            modulus,
            rows,
            cols,
            data,
        }
    }

    /// Entry-wise reduction of an integer matrix.
    pub fn from_int_matrix(modulus: Modulus, m: &IntMatrix) -> Self {
        ModMatrix::from_fn(modulus, m.rows(), m.cols(), |i, j| {
            modulus.reduce_bigint(&m[(i, j)])
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> ModMatrix {
        ModMatrix::from_fn(self.modulus, self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let m = self.modulus;
        let mut out = ModMatrix::zero(m, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = m.add(out[(i, j)], m.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let m = self.modulus;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for j in 0..self.cols {
                    acc = m.add(acc, m.mul(self[(i, j)], v[j]));
                }
                acc
            })
            .collect()
    }

    /// In-place row reduction to reduced row echelon form; returns the pivot
    /// column of each nonzero row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let m = self.modulus;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&i| self[(i, col)] != 0) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    let t = self[(row, j)];
                    self[(row, j)] = self[(pr, j)];
                    self[(pr, j)] = t;
                }
            }
            let inv = m.inv(self[(row, col)]);
            for j in col..self.cols {
                self[(row, j)] = m.mul(self[(row, j)], inv);
            }
            for i in 0..self.rows {
                if i == row || self[(i, col)] == 0 {
                    continue;
                }
                let f = self[(i, col)];
                for j in col..self.cols {
                    let t = m.mul(f, self[(row, j)]);
                    self[(i, j)] = m.sub(self[(i, j)], t);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space `{v : Mv = 0}`, one vector per free
    /// column, in RREF-induced canonical form.
    pub fn null_space(&self) -> Vec<Vec<u64>> {
        let m = self.modulus;
        let mut r = self.clone();
        let pivots = r.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = m.neg(r[(row, free)]);
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left null space `{x : x^T M = 0}`.
    pub fn left_null_space_basis(&self) -> Vec<Vec<u64>> {
        self.transpose().null_space()
    }

    /// Characteristic polynomial det(xI - M) by the division-free Berkowitz
    /// algorithm, entirely in F_p.
    pub fn char_poly(&self) -> Result<ModPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let m = self.modulus;
        let mut p: Vec<u64> = vec![1];
        for r in 1..=n {
            let a = self[(r - 1, r - 1)];
            let mut t: Vec<u64> = Vec::with_capacity(r + 1);
            t.push(1);
            t.push(m.neg(a));
            if r >= 2 {
                let mut v: Vec<u64> = (0..r - 1).map(|i| self[(i, r - 1)]).collect();
                for _ in 2..=r {
                    let mut dot = 0u64;
                    for j in 0..r - 1 {
                        dot = m.add(dot, m.mul(self[(r - 1, j)], v[j]));
                    }
                    t.push(m.neg(dot));
                    let next: Vec<u64> = (0..r - 1)
                        .map(|i| {
                            let mut acc = 0u64;
                            for j in 0..r - 1 {
                                acc = m.add(acc, m.mul(self[(i, j)], v[j]));
                            }
                            acc
                        })
                        .collect();
                    v = next;
                }
                t.truncate(r + 1);
            }
            let mut next_p = vec![0u64; r + 1];
            for (i, slot) in next_p.iter_mut().enumerate() {
                for (j, &pj) in p.iter().enumerate() {
                    if i >= j && i - j <= r {
                        *slot = m.add(*slot, m.mul(t[i - j], pj));
                    }
                }
            }
            p = next_p;
        }
        p.reverse();
        Ok(ModPoly::new(m, p))
    }
}

impl Index<(usize, usize)> for ModMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ModMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

/// A subspace of F_p^n, held as an RREF basis (rows), so equal subspaces
/// compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    /// RREF matrix whose nonzero rows are the basis; stored with exactly
    /// dim rows.
    basis: ModMatrix,
    ambient: usize,
}

impl Subspace {
    /// Builds the span of the given row vectors.
    pub fn span(modulus: Modulus, ambient: usize, rows: &[Vec<u64>]) -> Self {
        for r in rows {
            assert_eq!(r.len(), ambient, "vector length != ambient dimension");
        }
        let mut m = ModMatrix::from_fn(modulus, rows.len(), ambient, |i, j| rows[i][j]);
        let pivots = m.rref();
        let dim = pivots.len();
        let basis = ModMatrix::from_fn(modulus, dim, ambient, |i, j| m[(i, j)]);
        Subspace { basis, ambient }
    }

    pub fn zero(modulus: Modulus, ambient: usize) -> Self {
        Subspace {
            basis: ModMatrix::zero(modulus, 0, ambient),
            ambient,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.basis.modulus()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Basis vectors as rows (RREF-canonical).
    pub fn basis_rows(&self) -> Vec<Vec<u64>> {
        (0..self.dim())
            .map(|i| (0..self.ambient).map(|j| self.basis[(i, j)]).collect())
            .collect()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // Stack v under the basis: membership iff the rank does not grow.
        let mut m = ModMatrix::from_fn(self.modulus(), self.dim() + 1, self.ambient, |i, j| {
            if i < self.dim() {
                self.basis[(i, j)]
            } else {
                v[j]
            }
        });
        m.rref().len() == self.dim()
    }

    /// Is `M v` in the subspace for every basis vector v?
    pub fn is_invariant_under(&self, m: &ModMatrix) -> bool {
        assert_eq!(m.cols(), self.ambient);
        self.basis_rows()
            .iter()
            .all(|b| self.contains(&m.mul_vec(b)))
    }
}

/// Dimension of the right null space of `m`.
pub fn nullity(m: &ModMatrix) -> usize {
    m.cols() - m.rank()
}

/// Left null space `{x : x^T M = 0}` as a subspace of F_p^rows.
pub fn left_null_space(m: &ModMatrix) -> Subspace {
    Subspace::span(m.modulus(), m.rows(), &m.left_null_space_basis())
}

/// Radical of a subspace: `S ∩ S^perp` under the standard bilinear form.
/// With B a basis-row matrix of S, a combination B^T x is orthogonal to all
/// of S iff (B B^T) x = 0, so the radical is B^T applied to the null space
/// of the Gram matrix.
pub fn radical(s: &Subspace) -> Subspace {
    let b = &s.basis;
    let gram = b.mul(&b.transpose());
    let combos = gram.null_space();
    let bt = b.transpose();
    let vectors: Vec<Vec<u64>> = combos.iter().map(|x| bt.mul_vec(x)).collect();
    Subspace::span(s.modulus(), s.ambient_dim(), &vectors)
}

/// Orthogonal complement `S^perp = {v : b . v = 0 for all b in S}`.
pub fn orthogonal_complement(s: &Subspace) -> Subspace {
    Subspace::span(s.modulus(), s.ambient_dim(), &s.basis.null_space())
}

/// Characteristic polynomial of `a` restricted to an invariant subspace.
///
/// Writes each image A b_i back in the basis (solving B^T y = A b_i) to get
/// the dim x dim matrix of the restriction; errors with [`Error::NotInvariant`]
/// if some image leaves the subspace.
pub fn restricted_char_poly(a: &ModMatrix, s: &Subspace) -> Result<ModPoly> {
    assert_eq!(a.modulus(), s.modulus(), "mixed moduli");
    if a.rows() != a.cols() {
        return Err(Error::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.cols() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            found: s.ambient_dim(),
        });
    }
    let m = s.modulus();
    let k = s.dim();
    if k == 0 {
        return Ok(ModPoly::one(m));
    }
    let rows = s.basis_rows();
    let images: Vec<Vec<u64>> = rows.iter().map(|b| a.mul_vec(b)).collect();
    let n = s.ambient_dim();
    // Augmented system [B^T | A B^T]: after RREF the right block holds the
    // coordinates, because B^T has full column rank k.
    let mut aug = ModMatrix::from_fn(m, n, 2 * k, |i, j| {
        if j < k {
            rows[j][i]
        } else {
            images[j - k][i]
        }
    });
    let pivots = aug.rref();
    // Consistency: every pivot must sit in the left block, and the left
    // block must have full rank k.
    let left_pivots: Vec<usize> = pivots.iter().copied().filter(|&c| c < k).collect();
    if left_pivots.len() != k || pivots.len() != k {
        return Err(Error::NotInvariant);
    }
    // Row r of the solved system gives the coordinates of each image on
    // basis vector r: C[r][i] = coefficient of b_r in A b_i.
    let c = ModMatrix::from_fn(m, k, k, |r, i| aug[(r, k + i)]);
    c.char_poly()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(p: u64) -> Modulus {
        Modulus::new(p).unwrap()
    }

    #[test]
    fn rref_rank_nullspace() {
        // A(P_3) over F_2: rank 2, nullity 1, kernel spanned by (1, 0, 1).
        let a = ModMatrix::from_fn(md(2), 3, 3, |i, j| {
            [[0, 1, 0], [1, 0, 1], [0, 1, 0]][i][j]
        });
        assert_eq!(a.rank(), 2);
        assert_eq!(nullity(&a), 1);
        assert_eq!(a.null_space(), vec![vec![1, 0, 1]]);
    }

    #[test]
    fn null_space_vectors_annihilate() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for p in [2u64, 3, 5, 13] {
            let m = md(p);
            for _ in 0..20 {
                let rows = rng.gen_range(1..6);
                let cols = rng.gen_range(1..6);
                let a = ModMatrix::from_fn(m, rows, cols, |_, _| rng.gen_range(0..p));
                let ns = a.null_space();
                assert_eq!(ns.len(), nullity(&a));
                for v in &ns {
                    assert!(a.mul_vec(v).iter().all(|&x| x == 0));
                }
                // rank-nullity
                assert_eq!(a.rank() + ns.len(), cols);
            }
        }
    }

    #[test]
    fn char_poly_matches_integer_lift() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for p in [2u64, 3, 7] {
            let m = md(p);
            for _ in 0..10 {
                let n = rng.gen_range(1..6);
                let a = ModMatrix::from_fn(m, n, n, |_, _| rng.gen_range(0..p));
                let lifted = IntMatrix::from_fn(n, n, |i, j| a[(i, j)].into());
                let expect = ModPoly::from_int_poly(m, &lifted.char_poly().unwrap());
                assert_eq!(a.char_poly().unwrap(), expect);
            }
        }
    }

    #[test]
    fn subspace_membership_and_canonical_equality() {
        let m = md(5);
        let s1 = Subspace::span(m, 3, &[vec![1, 2, 0], vec![0, 0, 1]]);
        // Same span, different generators (scaled and summed).
        let s2 = Subspace::span(m, 3, &[vec![2, 4, 0], vec![1, 2, 1], vec![3, 6, 2]]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        assert!(s1.contains(&[4, 3, 2]));
        assert!(!s1.contains(&[1, 0, 0]));
    }

    #[test]
    fn radical_of_anisotropic_space_is_zero() {
        let m = md(3);
        // Full space F_3^2: the form is nondegenerate, radical = 0.
        let s = Subspace::span(m, 2, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(radical(&s).dim(), 0);
    }

    #[test]
    fn radical_catches_self_orthogonal_vectors() {
        // (1,1) over F_2 is self-orthogonal: the whole line is its radical.
        let m = md(2);
        let s = Subspace::span(m, 2, &[vec![1, 1]]);
        let r = radical(&s);
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&[1, 1]));
        // (1,1) over F_3 is not: 1 + 1 = 2 != 0.
        let s3 = Subspace::span(md(3), 2, &[vec![1, 1]]);
        assert_eq!(radical(&s3).dim(), 0);
    }

    #[test]
    fn radical_is_contained_in_space_and_complement() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for p in [2u64, 3, 5] {
            let m = md(p);
            for _ in 0..20 {
                let n = rng.gen_range(1..6);
                let k = rng.gen_range(0..=n);
                let gens: Vec<Vec<u64>> = (0..k)
                    .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
                    .collect();
                let s = Subspace::span(m, n, &gens);
                let r = radical(&s);
                let c = orthogonal_complement(&s);
                for v in r.basis_rows() {
                    assert!(s.contains(&v));
                    assert!(c.contains(&v));
                }
                // dim S + dim S^perp = n over any field (the form is
                // nondegenerate on the ambient space).
                assert_eq!(s.dim() + c.dim(), n);
            }
        }
    }

    #[test]
    fn restricted_char_poly_on_eigenline() {
        // A = [[0,1],[1,0]] fixes (1,1): restriction is multiplication by 1.
        let m = md(3);
        let a = ModMatrix::from_fn(m, 2, 2, |i, j| [[0, 1], [1, 0]][i][j]);
        let s = Subspace::span(m, 2, &[vec![1, 1]]);
        let cp = restricted_char_poly(&a, &s).unwrap();
        assert_eq!(cp, ModPoly::new(m, vec![2, 1])); // x - 1
    }

    #[test]
    fn restricted_char_poly_full_space_is_char_poly() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        let m = md(5);
        for _ in 0..10 {
            let n = rng.gen_range(1..5);
            let a = ModMatrix::from_fn(m, n, n, |_, _| rng.gen_range(0..5));
            let full = Subspace::span(
                m,
                n,
                &(0..n)
                    .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
                    .collect::<Vec<_>>(),
            );
            assert_eq!(
                restricted_char_poly(&a, &full).unwrap(),
                a.char_poly().unwrap()
            );
        }
    }

    #[test]
    fn restricted_char_poly_rejects_non_invariant() {
        // A = [[0,1],[0,0]] does not fix span{(0,1)}: A(0,1) = (1,0).
        let m = md(3);
        let a = ModMatrix::from_fn(m, 2, 2, |i, j| [[0, 1], [0, 0]][i][j]);
        let s = Subspace::span(m, 2, &[vec![0, 1]]);
        assert!(matches!(
            restricted_char_poly(&a, &s),
            Err(Error::NotInvariant)
        ));
        let full = Subspace::span(m, 2, &[vec![1, 0], vec![0, 1]]);
        assert!(s.is_invariant_under(&ModMatrix::identity(m, 2)));
        assert!(!s.is_invariant_under(&a));
        assert!(full.is_invariant_under(&a));
    }

    #[test]
    fn left_null_space_is_transpose_kernel() {
        let m = md(3);
        let a = ModMatrix::from_fn(m, 3, 2, |i, j| [[1, 0], [1, 0], [0, 1]][i][j]);
        let lns = left_null_space(&a);
        assert_eq!(lns.dim(), 1);
        // x = (1, 2, 0): x^T A = (1*1 + 2*1, 0) = (0, 0) mod 3.
        assert!(lns.contains(&[1, 2, 0]));
    }
}
