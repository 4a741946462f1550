//! Exact isotopy decision for small Latin squares.
//!
//! An isotopy from `L` to `M` is a triple `(α, β, γ)` of permutations with
//! `γ(L(x, y)) = M(α(x), β(y))` for all `x, y`. Once α and `β(1)` are fixed
//! the first column forces γ completely and the first row then forces β, so
//! the search runs over α in lexicographic order, carrying for every
//! candidate `β(1)` the partial injections β and γ implied by the rows
//! assigned so far. A branch dies when no candidate survives.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::square::LatinSquare;

pub const MAX_ISOTOPY_ORDER: usize = 8;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsotopyWitness {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl IsotopyWitness {
    pub fn identity(n: usize) -> Self {
        let id = Permutation::identity(n);
        IsotopyWitness { alpha: id.clone(), beta: id.clone(), gamma: id }
    }

    /// The witness for the reverse direction, `M` to `L`.
    pub fn inverse(&self) -> Self {
        IsotopyWitness {
            alpha: self.alpha.inverse(),
            beta: self.beta.inverse(),
            gamma: self.gamma.inverse(),
        }
    }

    /// Chains `self: L → M` with `next: M → N` into a witness `L → N`.
    pub fn then(&self, next: &IsotopyWitness) -> Result<Self> {
        Ok(IsotopyWitness {
            alpha: next.alpha.compose(&self.alpha)?,
            beta: next.beta.compose(&self.beta)?,
            gamma: next.gamma.compose(&self.gamma)?,
        })
    }
}

/// True iff `γ(L(x, y)) = M(α(x), β(y))` for all `n²` pairs.
pub fn verify_witness(l: &LatinSquare, m: &LatinSquare, w: &IsotopyWitness) -> bool {
    let n = l.order();
    if m.order() != n || [&w.alpha, &w.beta, &w.gamma].iter().any(|p| p.order() != n) {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| w.gamma.apply(l.get(x, y)) == m.get(w.alpha.apply(x), w.beta.apply(y))))
}

/// Partial β and γ for one candidate value of `β(1)`.
#[derive(Clone)]
struct Partial {
    beta: Vec<u8>,
    beta_used: u32,
    gamma: Vec<u8>,
    gamma_used: u32,
}

struct Search<'a> {
    n: usize,
    l: &'a LatinSquare,
    m: &'a LatinSquare,
    m_col: Vec<u8>,
}

impl Search<'_> {
    /// Propagates constraints from all assigned rows `alpha[..rows]` to a
    /// fixpoint. Returns false on contradiction.
    fn propagate(&self, alpha: &[u8], p: &mut Partial) -> bool {
        let n = self.n;
        loop {
            let mut changed = false;
            for (x, &r) in alpha.iter().enumerate() {
                let r = r as usize;
                for y in 0..n {
                    let s = self.l.get(x, y);
                    match (p.beta[y], p.gamma[s]) {
                        (UNSET, UNSET) => {}
                        (b, UNSET) => {
                            let t = self.m.get(r, b as usize);
                            if p.gamma_used & (1 << t) != 0 {
                                return false;
                            }
                            p.gamma[s] = t as u8;
                            p.gamma_used |= 1 << t;
                            changed = true;
                        }
                        (UNSET, g) => {
                            let b = self.m_col[r * n + g as usize];
                            if p.beta_used & (1 << b) != 0 {
                                return false;
                            }
                            p.beta[y] = b;
                            p.beta_used |= 1 << b;
                            changed = true;
                        }
                        (b, g) => {
                            if self.m.get(r, b as usize) != g as usize {
                                return false;
                            }
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn dfs(&self, alpha: &mut Vec<u8>, used: u32, live: Vec<(u8, Partial)>) -> Option<IsotopyWitness> {
        let n = self.n;
        if alpha.len() == n {
            let (_, p) = live.into_iter().next()?;
            let to_perm = |v: &[u8]| Permutation::from_raw(v.to_vec());
            return Some(IsotopyWitness {
                alpha: to_perm(alpha),
                beta: to_perm(&p.beta),
                gamma: to_perm(&p.gamma),
            });
        }
        for r in 0..n {
            if used & (1 << r) != 0 {
                continue;
            }
            alpha.push(r as u8);
            let next: Vec<(u8, Partial)> = live
                .iter()
                .filter_map(|(c, p)| {
                    let mut p = p.clone();
                    self.propagate(alpha, &mut p).then_some((*c, p))
                })
                .collect();
            if !next.is_empty() {
                if let Some(w) = self.dfs(alpha, used | (1 << r), next) {
                    alpha.pop();
                    return Some(w);
                }
            }
            alpha.pop();
        }
        None
    }

    fn initial(&self) -> Vec<(u8, Partial)> {
        let n = self.n;
        (0..n as u8)
            .map(|c| {
                let mut beta = vec![UNSET; n];
                beta[0] = c;
                (
                    c,
                    Partial {
                        beta,
                        beta_used: 1 << c,
                        gamma: vec![UNSET; n],
                        gamma_used: 0,
                    },
                )
            })
            .collect()
    }
}

/// Decides whether `l` and `m` are isotopic. Returns the lexicographically
/// least witness in `(α, β, γ)` order, or `None` when the exhaustive search
/// proves there is none.
pub fn are_isotopic(l: &LatinSquare, m: &LatinSquare) -> Result<Option<IsotopyWitness>> {
    let n = l.order();
    if m.order() != n {
        return Err(Error::OrderMismatch { expected: n, found: m.order() });
    }
    if n > MAX_ISOTOPY_ORDER {
        return Err(Error::IsotopyOrderTooLarge { order: n });
    }
    let search = Search { n, l, m, m_col: m.column_index() };
    let witness = (0..n).into_par_iter().find_map_first(|r0| {
        let mut alpha = vec![r0 as u8];
        let live: Vec<(u8, Partial)> = search
            .initial()
            .into_iter()
            .filter_map(|(c, mut p)| search.propagate(&alpha, &mut p).then_some((c, p)))
            .collect();
        if live.is_empty() {
            return None;
        }
        search.dfs(&mut alpha, 1 << r0, live)
    });
    if let Some(w) = &witness {
        assert!(verify_witness(l, m, w), "search produced an invalid witness");
    }
    Ok(witness)
}
