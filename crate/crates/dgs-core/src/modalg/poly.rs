//! Univariate polynomials over F_p.
//!
//! The square-free machinery here is the characteristic-p version: the
//! derivative can vanish without the polynomial being constant, in which
//! case the polynomial is a perfect p-th power and we recurse on its p-th
//! root (coefficient-wise, since a^p = a on F_p).

use alloc::vec;
use alloc::vec::Vec;


use crate::error::{Error, Result};
use crate::intalg::IntPoly;
use crate::modalg::Modulus;

/// Polynomial over F_p, ascending coefficients in `0..p`, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    modulus: Modulus,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(modulus: Modulus, coeffs: Vec<u64>) -> Self {
        let p = modulus.get();
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { modulus, coeffs }
    }

    pub fn zero(modulus: Modulus) -> Self {
        ModPoly {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: Modulus) -> Self {
        ModPoly::new(modulus, vec![1])
    }

    pub fn monomial(modulus: Modulus, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        ModPoly::new(modulus, coeffs)
    }

    /// Reduces an integer polynomial coefficient-wise.
    pub fn from_int_poly(modulus: Modulus, f: &IntPoly) -> Self {
        ModPoly::new(
            modulus,
            f.coeffs().iter().map(|c| modulus.reduce_bigint(c)).collect(),
        )
    }

    /// Lifts back to Z[x] with coefficients in `0..p`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn check_same_modulus(&self, other: &ModPoly) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in polynomial arithmetic"
        );
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        self.check_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.modulus,
            (0..n)
                .map(|k| self.modulus.add(self.coeff(k), other.coeff(k)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.check_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.modulus,
            (0..n)
                .map(|k| self.modulus.sub(self.coeff(k), other.coeff(k)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        self.check_same_modulus(other);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.modulus);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.modulus.add(out[i + j], self.modulus.mul(a, b));
            }
        }
        ModPoly::new(self.modulus, out)
    }

    pub fn scale(&self, c: u64) -> ModPoly {
        ModPoly::new(
            self.modulus,
            self.coeffs.iter().map(|&a| self.modulus.mul(a, c)).collect(),
        )
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> ModPoly {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(l) => self.scale(self.modulus.inv(l)),
        }
    }

    pub fn pow(&self, mut e: u32) -> ModPoly {
        let mut acc = ModPoly::one(self.modulus);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: (quotient, remainder) with divisor nonzero.
    pub fn div_rem(&self, divisor: &ModPoly) -> Result<(ModPoly, ModPoly)> {
        self.check_same_modulus(divisor);
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let m = self.modulus;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((ModPoly::zero(m), self.clone()));
        }
        let lead_inv = m.inv(divisor.leading_coeff().unwrap());
        let qlen = rem.len() - dd;
        let mut quot = vec![0u64; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dd];
            if top == 0 {
                continue;
            }
            let q = m.mul(top, lead_inv);
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = m.sub(rem[k + j], m.mul(q, d));
            }
        }
        Ok((ModPoly::new(m, quot), ModPoly::new(m, rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &ModPoly) -> Result<ModPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Precondition(alloc::format!(
                "inexact division over F_{}",
                self.modulus.get()
            )));
        }
        Ok(q)
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        self.check_same_modulus(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> ModPoly {
        let m = self.modulus;
        ModPoly::new(
            self.modulus,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| m.mul(c, (k as u64) % m.get()))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = m.add(m.mul(acc, x), c);
        }
        acc
    }

    /// p-th root of a polynomial with zero derivative: every exponent that
    /// occurs is a multiple of p, and Frobenius fixes F_p pointwise, so the
    /// root just reindexes coefficients.
    fn pth_root(&self) -> ModPoly {
        let p = self.modulus.get() as usize;
        debug_assert!(self.derivative().is_zero());
        let coeffs: Vec<u64> = self.coeffs.iter().step_by(p).copied().collect();
        ModPoly::new(self.modulus, coeffs)
    }

    /// Square-free decomposition of a monic polynomial: pairwise-coprime
    /// square-free monic factors with distinct multiplicities, whose product
    /// with multiplicities reconstructs the input.
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        let mut parts: Vec<(ModPoly, u32)> = Vec::new();
        decompose(self, 1, &mut parts)?;
        parts.sort_by_key(|(_, e)| *e);
        Ok(SquarefreeDecomposition {
            input: self.clone(),
            parts,
        })
    }
}

/// Recursive worker: appends the square-free parts of `f`, with all
/// multiplicities scaled by `mult_scale` (the accumulated p-power from
/// p-th-root descents).
fn decompose(f: &ModPoly, mult_scale: u32, out: &mut Vec<(ModPoly, u32)>) -> Result<()> {
    if f.is_constant() {
        return Ok(());
    }
    let p = f.modulus().get();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p) = (pth root)^p: recurse with multiplicities times p.
        let root = f.pth_root();
        let scale = mult_scale
            .checked_mul(u32::try_from(p).expect("p fits u32 when derivative vanishes"))
            .expect("multiplicity overflow");
        return decompose(&root, scale, out);
    }
    // Standard Musser loop; it recovers every factor whose multiplicity is
    // not divisible by p, and leaves the p-divisible part in `c`.
    let mut c = f.gcd(&deriv);
    let mut w = f.div_exact(&c)?;
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y)?;
        if !fac.is_constant() {
            out.push((fac.monic(), i * mult_scale));
        }
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    if !c.is_constant() {
        let root = c.pth_root();
        let scale = mult_scale
            .checked_mul(u32::try_from(p).expect("p fits u32 in p-th-power branch"))
            .expect("multiplicity overflow");
        decompose(&root, scale, out)?;
    }
    Ok(())
}

/// Result of [`ModPoly::squarefree_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    input: ModPoly,
    /// (square-free monic factor, multiplicity), multiplicities strictly
    /// increasing and factors pairwise coprime.
    parts: Vec<(ModPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn parts(&self) -> &[(ModPoly, u32)] {
        &self.parts
    }

    /// The square-free part: the product of the distinct irreducible factors,
    /// each taken once.
    pub fn squarefree_part(&self) -> ModPoly {
        let mut acc = ModPoly::one(self.input.modulus());
        for (g, _) in &self.parts {
            acc = acc.mul(g);
        }
        acc
    }

    /// The "square root": each factor taken with multiplicity ceil(e/2).
    /// Its square is divisible by the input, and it is divisible by the
    /// square-free part.
    pub fn square_root(&self) -> ModPoly {
        let mut acc = ModPoly::one(self.input.modulus());
        for (g, e) in &self.parts {
            acc = acc.mul(&g.pow(e.div_ceil(2)));
        }
        acc
    }

    /// Rebuilds the input (sanity handle for tests and audits).
    pub fn reassemble(&self) -> ModPoly {
        let mut acc = ModPoly::one(self.input.modulus());
        for (g, e) in &self.parts {
            acc = acc.mul(&g.pow(*e));
        }
        acc
    }
}
