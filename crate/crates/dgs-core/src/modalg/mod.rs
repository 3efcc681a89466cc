//! Linear and polynomial algebra over prime fields F_p.
//!
//! The modulus is a validated prime below 2^61 so that products fit in
//! u128 and sums never overflow. Everything downstream (null spaces,
//! gcds, square-free decompositions) assumes the modulus is genuinely
//! prime; [`Modulus::new`] enforces that once, up front.

mod linalg;
mod poly;

pub use linalg::{
    left_null_space, nullity, orthogonal_complement, radical, restricted_char_poly, ModMatrix,
    Subspace,
};
pub use poly::{ModPoly, SquarefreeDecomposition};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::intalg::is_prime_u64;

/// Upper bound on accepted moduli: keeps `a * b` inside u128 and `a + b`
/// inside u64 without overflow checks on every operation.
pub const MAX_MODULUS: u64 = 1 << 61;

/// A prime modulus, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS || !is_prime_u64(p) {
            return Err(Error::UnsupportedModulus(p));
        }
        Ok(Modulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem; panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.0 != 0, "inverse of zero mod {}", self.0);
        self.pow(a, self.0 - 2)
    }

    /// Canonical representative in `0..p` of an arbitrary integer.
    pub fn reduce_bigint(self, x: &BigInt) -> u64 {
        let p = BigInt::from(self.0);
        let r = x.mod_floor(&p);
        r.to_u64().expect("residue fits u64 by construction")
    }
}

/// Nullity of an integer matrix read mod p.
pub fn nullity_p(m: &crate::intalg::IntMatrix, p: Modulus) -> usize {
    nullity(&ModMatrix::from_int_matrix(p, m))
}

/// Left null space of an integer matrix read mod p.
pub fn left_null_space_p(m: &crate::intalg::IntMatrix, p: Modulus) -> Subspace {
    left_null_space(&ModMatrix::from_int_matrix(p, m))
}

/// Monic gcd of two polynomials over the same prime field.
///
/// Unlike the method form this checks the moduli agree and refuses the
/// all-zero case, so callers handing it externally supplied polynomials
/// get an error instead of a panic.
pub fn poly_gcd(f: &ModPoly, g: &ModPoly) -> Result<ModPoly> {
    if f.modulus().get() != g.modulus().get() {
        return Err(Error::ModulusMismatch {
            left: f.modulus().get(),
            right: g.modulus().get(),
        });
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.gcd(g))
}

/// Square-free part: the product of the distinct irreducible factors,
/// each taken once.
pub fn sfp(f: &ModPoly) -> Result<ModPoly> {
    Ok(f.squarefree_decomposition()?.squarefree_part())
}

/// "Square root": each irreducible factor taken with multiplicity
/// ceil(e / 2). This is the smallest g with f dividing g^2.
pub fn sqrt_poly(f: &ModPoly) -> Result<ModPoly> {
    Ok(f.squarefree_decomposition()?.square_root())
}
