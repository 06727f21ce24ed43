use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::matrix::contingency;
use super::{enumerate_compositions, Composition, MatrixWeight};

/// A tuple `(ω₁, …, ω_k)` of `Ω_k(λ, α)`.
pub type Chain = Vec<MatrixWeight>;

/// Enumerates `Ω_k(λ, α)` for a fixed `λ`, sharing tails between tops.
///
/// The memo is keyed by `(top composition, remaining length)` and lives as
/// long as the enumerator; it is not shared across threads.
pub struct ChainEnumerator {
    lam: Composition,
    above: Vec<Composition>,
    memo: RefCell<HashMap<(Composition, usize), Rc<Vec<Chain>>>>,
}

impl ChainEnumerator {
    pub fn new(lam: &Composition) -> Self {
        let above = enumerate_compositions(lam.n(), lam.r())
            .into_iter()
            .filter(|a| a.strictly_dominates(lam))
            .collect();
        ChainEnumerator {
            lam: lam.clone(),
            above,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn lam(&self) -> &Composition {
        &self.lam
    }

    /// Compositions strictly dominating `λ`, largest first.
    pub fn strictly_above(&self) -> &[Composition] {
        &self.above
    }

    /// `Ω_k(λ, α)` sorted largest first; empty unless `α ▷ λ` and `k ≥ 1`.
    pub fn chains(&self, alpha: &Composition, k: usize) -> Rc<Vec<Chain>> {
        if k == 0 || alpha.n() != self.lam.n() || alpha.r() != self.lam.r() {
            return Rc::new(Vec::new());
        }
        let key = (alpha.clone(), k);
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let mut out: Vec<Chain> = Vec::new();
        if alpha.strictly_dominates(&self.lam) {
            if k == 1 {
                out.extend(steps(alpha, &self.lam).into_iter().map(|w| vec![w]));
            } else {
                for gamma in &self.above {
                    if !alpha.strictly_dominates(gamma) {
                        continue;
                    }
                    let tails = self.chains(gamma, k - 1);
                    if tails.is_empty() {
                        continue;
                    }
                    for w in steps(alpha, gamma) {
                        for tail in tails.iter() {
                            let mut chain = Vec::with_capacity(k);
                            chain.push(w.clone());
                            chain.extend(tail.iter().cloned());
                            out.push(chain);
                        }
                    }
                }
                out.sort_by(|a, b| b.cmp(a));
            }
        }
        let out = Rc::new(out);
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }
}

/// Upper-triangular, non-diagonal matrices with row sums `from` and column
/// sums `to`.
fn steps(from: &Composition, to: &Composition) -> Vec<MatrixWeight> {
    contingency(from.parts(), to.parts(), |s, t| s <= t)
        .into_iter()
        .filter(|w| !w.is_diagonal())
        .collect()
}

/// `Ω_k(λ, α)`, largest first.
pub fn enumerate_chains(lam: &Composition, alpha: &Composition, k: usize) -> Vec<Chain> {
    ChainEnumerator::new(lam).chains(alpha, k).as_ref().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{enumerate_omega, enumerate_partitions, Shift};

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    /// Chains built from the full `Ω(β, γ)` lists with a filter, no memo.
    fn brute_chains(lam: &Composition, alpha: &Composition, k: usize) -> Vec<Chain> {
        let all = enumerate_compositions(lam.n(), lam.r());
        let mut partial: Vec<(Composition, Chain)> = vec![(alpha.clone(), Vec::new())];
        for _ in 0..k {
            let mut next = Vec::new();
            for (top, chain) in &partial {
                for gamma in &all {
                    for w in enumerate_omega(top, gamma) {
                        if w.is_strict_upper() {
                            let mut ch = chain.clone();
                            ch.push(w);
                            next.push((gamma.clone(), ch));
                        }
                    }
                }
            }
            partial = next;
        }
        let mut out: Vec<Chain> = partial
            .into_iter()
            .filter(|(bottom, _)| bottom == lam)
            .map(|(_, ch)| ch)
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    #[test]
    fn chain_examples() {
        let got = enumerate_chains(&c("1,1"), &c("2,0"), 1);
        assert_eq!(got, vec![vec!["1,1/0,0".parse::<MatrixWeight>().unwrap()]]);
        assert!(enumerate_chains(&c("1,1"), &c("2,0"), 2).is_empty());
        assert!(enumerate_chains(&c("1,1"), &c("1,1"), 1).is_empty());
        let lam = c("1,1,1");
        let alpha = c("3,0,0");
        let got = enumerate_chains(&lam, &alpha, 2);
        assert!(!got.is_empty());
        assert_eq!(got, brute_chains(&lam, &alpha, 2));
    }

    #[test]
    fn chains_match_brute_force() {
        for n in 2..=3 {
            for r in 1..=4 {
                for lam in enumerate_partitions(n, r) {
                    let e = ChainEnumerator::new(&lam);
                    for alpha in enumerate_compositions(n, r) {
                        for k in 1..=3 {
                            let got = e.chains(&alpha, k);
                            let want = brute_chains(&lam, &alpha, k);
                            assert_eq!(*got, want, "lam={lam} alpha={alpha} k={k}");
                            for ch in got.iter() {
                                assert_eq!(&ch[0].row_sums(), &alpha);
                                assert_eq!(&ch[k - 1].col_sums(), lam.composition());
                                for pair in ch.windows(2) {
                                    assert_eq!(pair[0].col_sums(), pair[1].row_sums());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chain_counts_survive_shift() {
        for p in [2u64, 3] {
            let s = Shift::new(p, 1).unwrap();
            for n in 2..=3 {
                for r in 1..=4 {
                    for lam in enumerate_partitions(n, r) {
                        let e = ChainEnumerator::new(&lam);
                        let lam_plus = lam.plus_shift(s);
                        let e_plus = ChainEnumerator::new(&lam_plus);
                        for alpha in e.strictly_above().to_vec() {
                            for k in 1..=3 {
                                let lhs: Vec<Chain> = e
                                    .chains(&alpha, k)
                                    .iter()
                                    .map(|ch| ch.iter().map(|w| w.plus_shift(s)).collect())
                                    .collect();
                                let rhs = e_plus.chains(&alpha.plus_shift(s), k);
                                assert_eq!(lhs, *rhs, "p={p} lam={lam} alpha={alpha} k={k}");
                            }
                        }
                    }
                }
            }
        }
    }
}
