//! Canonical forms by branch-and-bound over vertex orderings.
//!
//! The canonical form of a graph is the relabeling minimizing the
//! upper-triangle bit string in graph6 column order. The search places
//! vertices one position at a time; at each step only candidates whose
//! adjacency column (against the placed prefix) is lexicographically
//! minimal can extend to the minimum, so everything else is cut. Among
//! those, candidates related by a transposition automorphism lead to
//! identical completions and collapse to one branch, which keeps highly
//! symmetric graphs (empty, complete, complete multipartite) cheap. A
//! running best string prunes the rest in the usual branch-and-bound
//! way. Intended for small graphs; callers pass a hard size cap.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Default size cap for canonical forms and isomorphism tests.
pub(crate) const DEFAULT_CAP: usize = 10;

pub(crate) fn canonical_form(g: &Graph, cap: usize) -> Result<Graph> {
    let n = g.order();
    if n > cap {
        return Err(Error::CapExceeded {
            limit: cap,
            requested: n,
        });
    }
    if n <= 1 {
        return Ok(g.clone());
    }
    let mut search = Search {
        g,
        n,
        used: vec![false; n],
        perm: Vec::with_capacity(n),
        bits: Vec::with_capacity(n * (n - 1) / 2),
        best: None,
    };
    search.dfs();
    let (perm, _) = search.best.expect("search visits at least one ordering");
    Ok(g.permuted(&perm))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    used: Vec<bool>,
    /// perm[position] = original vertex placed there.
    perm: Vec<usize>,
    /// Upper-triangle bits of the partial relabeling, graph6 order.
    bits: Vec<bool>,
    best: Option<(Vec<usize>, Vec<bool>)>,
}

impl Search<'_> {
    fn dfs(&mut self) {
        if self.perm.len() == self.n {
            let better = match &self.best {
                None => true,
                Some((_, best_bits)) => self.bits < *best_bits,
            };
            if better {
                self.best = Some((self.perm.clone(), self.bits.clone()));
            }
            return;
        }
        // A prefix already beaten by the best string cannot recover:
        // every later bit sits after the first strict difference.
        if let Some((_, best_bits)) = &self.best {
            if self.bits[..] > best_bits[..self.bits.len()] {
                return;
            }
        }

        // Each unplaced vertex would contribute its adjacency column
        // against the prefix; only minimal columns can lead to the
        // minimal string.
        let candidates: Vec<(Vec<bool>, usize)> = (0..self.n)
            .filter(|&v| !self.used[v])
            .map(|v| {
                let col: Vec<bool> =
                    self.perm.iter().map(|&u| self.g.has_edge(u, v)).collect();
                (col, v)
            })
            .collect();
        let min_col = candidates
            .iter()
            .map(|(col, _)| col)
            .min()
            .expect("candidates nonempty below n")
            .clone();

        let mut branch: Vec<usize> = Vec::new();
        'cands: for (col, v) in &candidates {
            if *col != min_col {
                continue;
            }
            // If swapping u and v is an automorphism, their subtrees
            // produce the same strings; keep one.
            for &u in &branch {
                if self.swappable(u, *v) {
                    continue 'cands;
                }
            }
            branch.push(*v);
        }

        for v in branch {
            self.used[v] = true;
            self.perm.push(v);
            self.bits.extend_from_slice(&min_col);
            self.dfs();
            let keep = self.bits.len() - min_col.len();
            self.bits.truncate(keep);
            self.perm.pop();
            self.used[v] = false;
        }
    }

    /// True when the transposition (u v) is an automorphism, i.e. u and
    /// v agree on adjacency to every other vertex.
    fn swappable(&self, u: usize, v: usize) -> bool {
        (0..self.n).all(|w| {
            w == u || w == v || self.g.has_edge(u, w) == self.g.has_edge(v, w)
        })
    }
}
