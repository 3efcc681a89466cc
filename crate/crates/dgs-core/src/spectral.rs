//! Spectral invariants over F_p and the rational orthogonal transform
//! between generalized-cospectral controllable graphs.
//!
//! The central object is the modular gcd invariant
//! Phi_p(G) = gcd(chi(A), chi(A+J)) over F_p, together with the
//! quantities hanging off it: its square-free part and "square root"
//! (factors at half multiplicity, rounded up), the minimal annihilator
//! m_p of the all-ones vector, the quotient q = chi / Phi_p, the monic
//! integer lift f_p of chi / sqrt Phi_p, and the p-reduced walk matrix
//! obtained by dividing the tail of the Krylov sequence by p. These
//! feed the certification criteria in [`crate::certify`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::intalg::{self, IntMatrix, IntPoly, RationalMatrix};
use crate::modalg::{self, ModMatrix, ModPoly, Modulus};

/// Everything the analyzer reports about one graph: the generalized
/// spectrum (as the two characteristic polynomials), det W, and one
/// record per examined prime.
#[derive(Debug, Clone)]
pub struct SpectralProfile {
    pub graph6: String,
    pub order: usize,
    pub chi: IntPoly,
    pub chi_complement: IntPoly,
    pub det_walk: BigInt,
    pub primes: Vec<PrimeRecord>,
}

/// The mod-p invariants of one graph at one prime.
#[derive(Debug, Clone)]
pub struct PrimeRecord {
    pub p: u64,
    pub phi: ModPoly,
    pub sfp_phi: ModPoly,
    pub sqrt_phi: ModPoly,
    pub main_poly: ModPoly,
    pub q: ModPoly,
    pub nullity: usize,
    pub f_lift: IntPoly,
    pub r: usize,
}

fn adjacency_mod(g: &Graph, p: Modulus) -> ModMatrix {
    let n = g.order();
    ModMatrix::from_fn(p, n, n, |i, j| u64::from(g.has_edge(i, j)))
}

/// chi(A; x) over F_p, computed natively mod p.
fn char_poly_mod(g: &Graph, p: Modulus) -> ModPoly {
    adjacency_mod(g, p)
        .char_poly()
        .expect("adjacency matrices are square")
}

/// chi(A + J; x) over F_p.
fn char_poly_plus_j_mod(g: &Graph, p: Modulus) -> ModPoly {
    let n = g.order();
    ModMatrix::from_fn(p, n, n, |i, j| u64::from(g.has_edge(i, j)) + 1)
        .char_poly()
        .expect("adjacency matrices are square")
}

/// The modular gcd invariant Phi_p(G) = gcd(chi(A), chi(A+J)) over F_p,
/// monic. Phi_p = 1 exactly when p does not divide det W.
pub fn phi_p(g: &Graph, p: u64) -> Result<ModPoly> {
    let p = Modulus::new(p)?;
    Ok(char_poly_mod(g, p).gcd(&char_poly_plus_j_mod(g, p)))
}

/// The p-main polynomial: the monic polynomial m_p of least degree with
/// m_p(A)e = 0 over F_p, found as the first linear dependency in the
/// Krylov sequence e, Ae, A^2 e, ... Its degree equals rank_p W.
pub fn p_main_poly(g: &Graph, p: u64) -> Result<ModPoly> {
    let p = Modulus::new(p)?;
    let n = g.order();
    let a = adjacency_mod(g, p);
    // Echelon rows carry (pivot column, vector, combination), where the
    // combination expresses the reduced vector in terms of A^k e.
    let mut echelon: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut v = vec![1u64; n];
    for k in 0..=n {
        let mut vec_part = v.clone();
        let mut comb = vec![0u64; n + 1];
        comb[k] = 1;
        for (piv, row_v, row_c) in &echelon {
            let c = vec_part[*piv];
            if c != 0 {
                for (x, y) in vec_part.iter_mut().zip(row_v) {
                    *x = p.sub(*x, p.mul(c, *y));
                }
                for (x, y) in comb.iter_mut().zip(row_c) {
                    *x = p.sub(*x, p.mul(c, *y));
                }
            }
        }
        match vec_part.iter().position(|&x| x != 0) {
            None => {
                // A^k e fell into the span of its predecessors. The
                // combination has coefficient 1 at index k (reductions
                // only touch lower indices), so the result is monic of
                // degree k.
                return Ok(ModPoly::new(p, comb));
            }
            Some(piv) => {
                let inv = p.inv(vec_part[piv]);
                for x in vec_part.iter_mut() {
                    *x = p.mul(*x, inv);
                }
                for x in comb.iter_mut() {
                    *x = p.mul(*x, inv);
                }
                echelon.push((piv, vec_part, comb));
            }
        }
        v = a.mul_vec(&v);
    }
    Err(Error::Internal(String::from(
        "n + 1 Krylov vectors cannot be independent in dimension n",
    )))
}

/// q = (chi mod p) / Phi_p. The division is always exact; a nonzero
/// remainder would mean the gcd computation is broken.
pub fn q_poly(g: &Graph, p: u64) -> Result<ModPoly> {
    let pm = Modulus::new(p)?;
    let chi = char_poly_mod(g, pm);
    let phi = phi_p(g, p)?;
    let (q, rem) = chi.div_rem(&phi)?;
    if !rem.is_zero() {
        return Err(Error::Internal(String::from(
            "characteristic polynomial not divisible by its gcd invariant",
        )));
    }
    Ok(q)
}

/// The monic integer lift of (chi mod p) / sqrt Phi_p, coefficients in
/// {0, ..., p-1}. When p does not divide det W this is just chi mod p.
pub fn f_p_lift(g: &Graph, p: u64) -> Result<IntPoly> {
    let pm = Modulus::new(p)?;
    let chi = char_poly_mod(g, pm);
    let root = modalg::sqrt_poly(&phi_p(g, p)?)?;
    let (f, rem) = chi.div_rem(&root)?;
    if !rem.is_zero() {
        return Err(Error::Internal(String::from(
            "characteristic polynomial not divisible by the square root of its gcd invariant",
        )));
    }
    Ok(f.lift())
}

/// The p-reduced walk matrix
/// [e, Ae, ..., A^(r-1)e, f_p(A)e/p, A f_p(A)e/p, ..., A^(n-1-r) f_p(A)e/p]
/// with r = deg f_p. Every division by p is exact (checked); the inputs
/// must be controllable with p | det W.
pub fn p_reduced_walk_matrix(g: &Graph, p: u64) -> Result<IntMatrix> {
    let n = g.order();
    let w = g.walk_matrix();
    let det = w.det()?;
    if det.is_zero() {
        return Err(Error::NotControllable);
    }
    let pb = BigInt::from(p);
    if !det.is_multiple_of(&pb) {
        return Err(Error::PrimeDoesNotDivide(p));
    }
    let f = f_p_lift(g, p)?;
    let r = f.degree().expect("the lift is monic, never zero");
    debug_assert!(r < n, "p | det W forces deg sqrt Phi_p >= 1");

    let a = g.adjacency_matrix();
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for k in 0..r {
        cols.push(w.column(k));
    }
    let e = vec![BigInt::one(); n];
    let u = f.eval_matrix_vec(&a, &e);
    let mut col: Vec<BigInt> = Vec::with_capacity(n);
    for x in &u {
        let (quot, rem) = x.div_rem(&pb);
        if !rem.is_zero() {
            return Err(Error::Internal(String::from(
                "f_p(A)e is not divisible by p",
            )));
        }
        col.push(quot);
    }
    for _ in 0..(n - r) {
        cols.push(col.clone());
        col = a.mul_vec(&col);
    }
    Ok(IntMatrix::from_columns(n, &cols))
}

/// The closed form of f_2: keep the coefficients of chi at exponents
/// with the parity of n, halve the exponents, and multiply by x when n
/// is odd. Equals (chi / sqrt Phi_2) mod 2 for every graph.
pub fn f2_closed_form(g: &Graph) -> ModPoly {
    let p = Modulus::new(2).expect("2 is prime");
    let n = g.order();
    let chi = char_poly_mod(g, p);
    let mut out = vec![0u64; n / 2 + 1 + n % 2];
    if n % 2 == 0 {
        for e in (0..=n).step_by(2) {
            out[e / 2] = chi.coeff(e);
        }
    } else {
        for e in (1..=n).step_by(2) {
            out[(e + 1) / 2] = chi.coeff(e);
        }
    }
    ModPoly::new(p, out)
}

/// Do G and H share the same generalized spectrum, i.e. are the
/// characteristic polynomials of both the graphs and their complements
/// equal over Z?
pub fn generalized_cospectral(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: h.order(),
        });
    }
    Ok(g.adjacency_matrix().char_poly()? == h.adjacency_matrix().char_poly()?
        && g.complement().adjacency_matrix().char_poly()?
            == h.complement().adjacency_matrix().char_poly()?)
}

/// The unique regular rational orthogonal Q with Q^T W(G) = W(H),
/// for controllable G generalized-cospectral with H. The defining
/// properties Q^T Q = I, Qe = e, and Q^T A(G) Q = A(H) are verified
/// before returning; failure means the preconditions did not hold.
pub fn regular_orthogonal_transform(g: &Graph, h: &Graph) -> Result<RationalMatrix> {
    let n = g.order();
    if h.order() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: h.order(),
        });
    }
    let wg_inv = intalg::rational_inverse(&g.walk_matrix()).map_err(|e| match e {
        Error::Singular => Error::NotControllable,
        other => other,
    })?;
    let qt = RationalMatrix::from_int_matrix(&h.walk_matrix()).mul(&wg_inv);
    let q = qt.transpose();

    let orthogonal = qt.mul(&q).is_identity();
    let row_sums_one = (0..n).all(|i| {
        let sum: num_rational::BigRational = (0..n).map(|j| q[(i, j)].clone()).sum();
        sum.is_one()
    });
    let conjugates = qt
        .mul(&RationalMatrix::from_int_matrix(&g.adjacency_matrix()))
        .mul(&q)
        == RationalMatrix::from_int_matrix(&h.adjacency_matrix());
    if !(orthogonal && row_sums_one && conjugates) {
        return Err(Error::Precondition(String::from(
            "graphs are not generalized cospectral, so no regular orthogonal transform exists",
        )));
    }
    Ok(q)
}

/// The primes a certification examines: 2, plus every odd prime
/// dividing the last invariant factor d_n of W. Since the invariant
/// factors form a divisibility chain, a prime divides det W exactly
/// when it divides d_n, so nothing is missed and only d_n -- which is
/// far smaller than det W -- ever needs factoring.
pub fn certification_primes(g: &Graph) -> Result<Vec<u64>> {
    certification_primes_with_cutoff(g, intalg::DEFAULT_FACTOR_CUTOFF)
}

/// Same, with an explicit trial-division cutoff for factoring d_n.
pub fn certification_primes_with_cutoff(g: &Graph, cutoff: u64) -> Result<Vec<u64>> {
    let w = g.walk_matrix();
    if w.det()?.is_zero() {
        return Ok(vec![2]);
    }
    let snf = intalg::smith_normal_form(&w)?;
    let mut primes = vec![2u64];
    if let Some(dn) = snf.invariant_factors().last() {
        primes.extend(intalg::odd_prime_factors(dn, cutoff)?);
    }
    Ok(primes)
}

impl PrimeRecord {
    pub fn compute(g: &Graph, p: u64) -> Result<PrimeRecord> {
        let pm = Modulus::new(p)?;
        let phi = phi_p(g, p)?;
        let decomposition = phi.squarefree_decomposition()?;
        let f_lift = f_p_lift(g, p)?;
        let r = f_lift.degree().expect("the lift is monic, never zero");
        Ok(PrimeRecord {
            p,
            sfp_phi: decomposition.squarefree_part(),
            sqrt_phi: decomposition.square_root(),
            phi,
            main_poly: p_main_poly(g, p)?,
            q: q_poly(g, p)?,
            nullity: modalg::nullity_p(&g.walk_matrix(), pm),
            f_lift,
            r,
        })
    }
}

impl SpectralProfile {
    /// Profile `g` at the given primes (typically
    /// [`certification_primes`] or a caller-supplied list).
    pub fn compute(g: &Graph, primes: &[u64]) -> Result<SpectralProfile> {
        let mut records = Vec::with_capacity(primes.len());
        for &p in primes {
            records.push(PrimeRecord::compute(g, p)?);
        }
        Ok(SpectralProfile {
            graph6: g.to_graph6(),
            order: g.order(),
            chi: g.adjacency_matrix().char_poly()?,
            chi_complement: g.complement().adjacency_matrix().char_poly()?,
            det_walk: g.walk_matrix().det()?,
            primes: records,
        })
    }
}
