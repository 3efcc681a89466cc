//! Rooted products and family-preserving constructions.
//!
//! A rooted graph H with root v acts on a seed graph G by the rooted
//! product G∘H: one copy of H per vertex of G, roots identified with
//! the seed vertices, seed edges kept between roots. Three conditions
//! on H — two determinant conditions (C1), a resultant condition (C2),
//! and a symbolic Krylov-determinant condition (C3) — together make
//! the product preserve family-G membership, so iterating the product
//! manufactures arbitrarily large certified-DGS graphs from one seed.
//!
//! Everything here is exact: h(λ) is computed as an actual polynomial
//! (never sampled numerically), and the two determinant identities for
//! the product's adjacency and walk matrices are checked by evaluating
//! both sides in full.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Pow, Signed, Zero};

use crate::certify::{self, DgsCertificate, Verdict};
use crate::error::{Error, Result};
use crate::graphs::{Graph, RootedGraph};
use crate::intalg::{self, IntMatrix, IntPoly};

/// Default ceiling on the order of any constructed product.
pub const DEFAULT_VERTEX_CAP: usize = 96;

/// The three preserver conditions for one rooted graph, with the
/// quantities they are decided from.
#[derive(Debug, Clone)]
pub struct PreserverReport {
    pub graph6: String,
    pub root: usize,
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    /// Exponent with h(λ) = ±λ^k; None when C3 fails.
    pub k: Option<usize>,
    /// Res(χ(H), χ(H−v)).
    pub resultant: BigInt,
    /// h(λ) = det[e, B(λ)e, …, B(λ)^{m−1}e], B(λ) = A(H) + λD_v.
    pub h: IntPoly,
}

fn det_of(g: &Graph) -> BigInt {
    g.adjacency_matrix()
        .det()
        .expect("adjacency matrices are square")
}

/// C1: one of det A(H), det A(H−v) is ±1 and the other is 0.
pub fn check_c1(h: &RootedGraph) -> bool {
    let a = det_of(h.graph()).abs();
    let b = det_of(&h.graph().delete_vertex(h.root()).expect("root is in range")).abs();
    let (zero, one) = (BigInt::zero(), BigInt::from(1));
    (a == one && b == zero) || (a == zero && b == one)
}

/// Res(χ(H), χ(H−v)), the quantity behind C2.
pub fn rooted_resultant(h: &RootedGraph) -> BigInt {
    let chi_h = h
        .graph()
        .adjacency_matrix()
        .char_poly()
        .expect("adjacency matrices are square");
    let chi_hv = h
        .graph()
        .delete_vertex(h.root())
        .expect("root is in range")
        .adjacency_matrix()
        .char_poly()
        .expect("adjacency matrices are square");
    intalg::resultant(&chi_h, &chi_hv).expect("characteristic polynomials are nonzero")
}

/// C2: the resultant of the two characteristic polynomials is ±1.
pub fn check_c2(h: &RootedGraph) -> bool {
    rooted_resultant(h).abs() == BigInt::from(1)
}

/// h(λ) = det[e, B(λ)e, …, B(λ)^{m−1}e] with B(λ) = A(H) + λD_v,
/// computed symbolically.
pub fn c3_polynomial(h: &RootedGraph) -> IntPoly {
    let g = h.graph();
    let m = g.order();
    let root = h.root();
    let lambda = IntPoly::monomial(1);
    // Krylov columns over ℤ[λ]: the next column applies B(λ), which is
    // the neighbour sum plus λ times the root coordinate.
    let mut col: Vec<IntPoly> = (0..m).map(|_| IntPoly::one()).collect();
    let mut columns = Vec::with_capacity(m);
    for _ in 0..m {
        columns.push(col.clone());
        let mut next: Vec<IntPoly> = (0..m)
            .map(|i| {
                let mut s = IntPoly::zero();
                for j in 0..m {
                    if g.has_edge(i, j) {
                        s = s.add(&col[j]);
                    }
                }
                s
            })
            .collect();
        next[root] = next[root].add(&lambda.mul(&col[root]));
        col = next;
    }
    intalg::poly_matrix_det(&columns).expect("Krylov columns are square by construction")
}

/// Is the polynomial exactly ±λ^k? Returns k when so.
fn monomial_exponent(h: &IntPoly) -> Option<usize> {
    let nonzero: Vec<usize> = h
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, _)| k)
        .collect();
    match nonzero[..] {
        [k] if h.coeff(k).abs() == BigInt::from(1) => Some(k),
        _ => None,
    }
}

/// C3: h(λ) = ±λ^k for some k ≥ 0, decided symbolically.
pub fn check_c3(h: &RootedGraph) -> (bool, Option<usize>) {
    let k = monomial_exponent(&c3_polynomial(h));
    (k.is_some(), k)
}

impl PreserverReport {
    pub fn compute(h: &RootedGraph) -> PreserverReport {
        let hp = c3_polynomial(h);
        let k = monomial_exponent(&hp);
        PreserverReport {
            graph6: h.graph().to_graph6(),
            root: h.root(),
            c1: check_c1(h),
            c2: check_c2(h),
            c3: k.is_some(),
            k,
            resultant: rooted_resultant(h),
            h: hp,
        }
    }

    pub fn is_preserver(&self) -> bool {
        self.c1 && self.c2 && self.c3
    }

    /// The first failing condition by name, for error messages.
    fn first_failure(&self) -> Option<&'static str> {
        if !self.c1 {
            Some("C1")
        } else if !self.c2 {
            Some("C2")
        } else if !self.c3 {
            Some("C3")
        } else {
            None
        }
    }
}

/// Checks det A(G∘H) = det(det A(H)·I + det A(H−v)·A(G)) by evaluating
/// both sides.
pub fn det_a_formula_check(g: &Graph, h: &RootedGraph) -> bool {
    let lhs = det_of(&g.rooted_product(h));
    let det_h = det_of(h.graph());
    let det_hv = det_of(&h.graph().delete_vertex(h.root()).expect("root is in range"));
    let a = g.adjacency_matrix();
    let n = g.order();
    let rhs_matrix = IntMatrix::from_fn(n, n, |i, j| {
        let mut entry = &det_hv * &a[(i, j)];
        if i == j {
            entry += &det_h;
        }
        entry
    });
    lhs == rhs_matrix.det().expect("square by construction")
}

/// Checks |det W(G∘H)| = |Res^{n(n−1)/2} · det h(A(G)) · det W(G)^m|.
/// Absolute values only: the identity carries an unresolved sign.
pub fn det_w_formula_check(g: &Graph, h: &RootedGraph) -> bool {
    let lhs = g
        .rooted_product(h)
        .walk_matrix()
        .det()
        .expect("walk matrices are square")
        .abs();
    let n = g.order();
    let m = h.graph().order();
    let res = rooted_resultant(h).pow((n * (n - 1) / 2) as u32);
    let det_h_at_a = c3_polynomial(h)
        .eval_matrix(&g.adjacency_matrix())
        .det()
        .expect("square by construction");
    let det_w = g
        .walk_matrix()
        .det()
        .expect("walk matrices are square")
        .pow(m as u32);
    lhs == (res * det_h_at_a * det_w).abs()
}

/// Iterates G ↦ G∘H `depth` times from a family-G seed through a
/// preserver, certifying every member (seed included) along the way.
pub fn build_dgs_family(
    g: &Graph,
    h: &RootedGraph,
    depth: usize,
) -> Result<Vec<(Graph, DgsCertificate)>> {
    build_dgs_family_with_cap(g, h, depth, DEFAULT_VERTEX_CAP)
}

pub fn build_dgs_family_with_cap(
    g: &Graph,
    h: &RootedGraph,
    depth: usize,
    cap: usize,
) -> Result<Vec<(Graph, DgsCertificate)>> {
    let report = PreserverReport::compute(h);
    if let Some(name) = report.first_failure() {
        return Err(Error::Precondition(format!(
            "rooted graph is not a preserver: condition {name} fails"
        )));
    }
    if !certify::family_g_membership(g)? {
        return Err(Error::Precondition(String::from(
            "seed graph is not a member of family G",
        )));
    }
    let final_order = h
        .graph()
        .order()
        .checked_pow(depth as u32)
        .and_then(|f| f.checked_mul(g.order()))
        .unwrap_or(usize::MAX);
    if final_order > cap {
        return Err(Error::CapExceeded {
            limit: cap,
            requested: final_order,
        });
    }

    let mut members = Vec::with_capacity(depth + 1);
    let mut current = g.clone();
    for step in 0..=depth {
        if step > 0 {
            current = current.rooted_product(h);
        }
        let cert = DgsCertificate::compute(&current)?;
        // The preserver theorem promises membership at every step; an
        // undecided verdict means the cutoff ran out, not a refutation.
        if cert.main == Verdict::Inconclusive || cert.family_g.is_none() {
            return Err(Error::Precondition(String::from(
                "factoring cutoff too small to certify a family member",
            )));
        }
        if cert.main != Verdict::Pass || cert.family_g != Some(true) {
            return Err(Error::Internal(format!(
                "family construction lost certification at step {step}"
            )));
        }
        members.push((current.clone(), cert));
    }
    Ok(members)
}
