//! Symbolic data for three resolutions of `Δ(λ)` by sums of `Sξ_α`: the
//! chain resolution `B_*(λ)`, the hook resolution `P_*(a, b)`, and the
//! box presentation.
//!
//! A map `Sξ_α → Sξ_β` that is right multiplication by `ξ_ω` is recorded
//! by `ω`; matrices appear only after applying `Hom(−, M)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fp::PrimeField;
use crate::schur::SchurAlgebra;
use crate::shapes::{Chain, ChainEnumerator, Composition, MatrixWeight, Partition};
use crate::weyl::box_sources;

/// The summand `M[ω₁, …, ω_k] = Sξ_α` of `B_k(λ)`, `α = ω₁²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainSummand {
    pub top_weight: Composition,
    pub chain: Chain,
}

impl ChainSummand {
    pub fn degree(&self) -> usize {
        self.chain.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowKind {
    /// Right multiplication by `ξ_{ω₁}`.
    Compose(MatrixWeight),
    /// Scalar `(−1)^i c`, where `c` is the coefficient of `ξ_ρ` in
    /// `ξ_{ω_i} ξ_{ω_{i+1}}`; `i` is 1-based.
    Merge { i: usize, rho: MatrixWeight, scalar: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialArrow {
    pub source: ChainSummand,
    pub target: ChainSummand,
    pub kind: ArrowKind,
}

/// `B_*(λ)` over `F_p`, built degree by degree on demand.
pub struct SyResolution {
    lam: Partition,
    chains: ChainEnumerator,
    algebra: SchurAlgebra,
}

impl SyResolution {
    pub fn new(field: PrimeField, lam: &Partition) -> Self {
        SyResolution {
            lam: lam.clone(),
            chains: ChainEnumerator::new(lam.composition()),
            algebra: SchurAlgebra::new(field, lam.n(), lam.r()),
        }
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn algebra(&self) -> &SchurAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    /// `|Ω_k(λ, α)|` for each `α ▷ λ` with a nonzero count.
    pub fn multiplicities(&self, k: usize) -> Vec<(Composition, usize)> {
        if k == 0 {
            return vec![(self.lam.composition().clone(), 1)];
        }
        self.chains
            .strictly_above()
            .iter()
            .map(|a| (a.clone(), self.chains.chains(a, k).len()))
            .filter(|(_, c)| *c > 0)
            .collect()
    }

    /// Summands of `B_k(λ)`: by top weight largest first, then by chain.
    pub fn degree(&self, k: usize) -> Vec<ChainSummand> {
        if k == 0 {
            return vec![ChainSummand {
                top_weight: self.lam.composition().clone(),
                chain: Vec::new(),
            }];
        }
        let mut out = Vec::new();
        for alpha in self.chains.strictly_above() {
            for chain in self.chains.chains(alpha, k).iter() {
                out.push(ChainSummand {
                    top_weight: alpha.clone(),
                    chain: chain.clone(),
                });
            }
        }
        out
    }

    /// Number of summands of `B_k(λ)`, without building them.
    pub fn degree_len(&self, k: usize) -> usize {
        self.multiplicities(k).iter().map(|(_, c)| c).sum()
    }

    /// Components of `∂_k` out of `summand`: the `Compose` arrow first, then
    /// `Merge` arrows by `i` and `ρ` largest first.
    pub fn arrows(&self, summand: &ChainSummand) -> Vec<DifferentialArrow> {
        let k = summand.degree();
        if k == 0 {
            return Vec::new();
        }
        let chain = &summand.chain;
        let compose_target = ChainSummand {
            top_weight: if k == 1 {
                self.lam.composition().clone()
            } else {
                chain[1].row_sums()
            },
            chain: chain[1..].to_vec(),
        };
        let mut out = vec![DifferentialArrow {
            source: summand.clone(),
            target: compose_target,
            kind: ArrowKind::Compose(chain[0].clone()),
        }];
        let f = self.field();
        for i in 1..k {
            for (rho, c) in self.algebra.product(&chain[i - 1], &chain[i]).iter() {
                let mut target_chain = Vec::with_capacity(k - 1);
                target_chain.extend_from_slice(&chain[..i - 1]);
                target_chain.push(rho.clone());
                target_chain.extend_from_slice(&chain[i + 1..]);
                out.push(DifferentialArrow {
                    source: summand.clone(),
                    target: ChainSummand {
                        top_weight: summand.top_weight.clone(),
                        chain: target_chain,
                    },
                    kind: ArrowKind::Merge {
                        i,
                        rho: rho.clone(),
                        scalar: f.mul(f.sign(i), *c),
                    },
                });
            }
        }
        out
    }
}

/// Summands of `B_k(λ)`.
pub fn sy_degree(lam: &Partition, k: usize) -> Vec<ChainSummand> {
    // The field only matters for arrows; any prime will do here.
    SyResolution::new(PrimeField::new(2).expect("2 is prime"), lam).degree(k)
}

/// Arrows out of one summand, with scalars in `F_p`.
pub fn sy_arrows(lam: &Partition, summand: &ChainSummand, p: u64) -> Result<Vec<DifferentialArrow>> {
    let res = SyResolution::new(PrimeField::new(p)?, lam);
    Ok(res.arrows(summand))
}

/// One component of `θ_i(a, b)`: right multiplication by `(−1)^{j+1} ξ_ω`
/// from `P_i[source]` to `P_{i−1}[target]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookArrow {
    pub source: usize,
    pub target: usize,
    /// 1-based split position.
    pub j: usize,
    pub omega: MatrixWeight,
}

impl HookArrow {
    pub fn sign(&self, field: PrimeField) -> u32 {
        field.sign(self.j + 1)
    }
}

/// `P_*(a, b)` for the hook `(a, 1^b)` with compositions padded to `n`.
#[derive(Debug, Clone)]
pub struct HookResolution {
    pub a: u32,
    pub b: usize,
    pub n: usize,
    pub terms: Vec<Vec<Composition>>,
}

impl HookResolution {
    pub fn new(a: u32, b: usize, n: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::invalid("hook needs a >= 1"));
        }
        if b + 1 > n {
            return Err(Error::invalid(format!("hook ({a},1^{b}) needs n >= {}", b + 1)));
        }
        let r = a + b as u32;
        let terms = (0..=b)
            .map(|i| {
                let len = b + 1 - i;
                positive_compositions(r, len)
                    .into_iter()
                    .filter(|c| c[0] >= a && c[0] <= a + i as u32)
                    .map(|mut c| {
                        c.resize(n, 0);
                        Composition::new(c)
                    })
                    .collect()
            })
            .collect();
        Ok(HookResolution { a, b, n, terms })
    }

    pub fn lam(&self) -> Partition {
        Partition::hook(self.a, self.b, self.n).expect("validated in new")
    }

    pub fn len(&self) -> usize {
        self.b
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self, i: usize) -> &[Composition] {
        self.terms.get(i).map_or(&[], |t| t.as_slice())
    }

    /// Components of `θ_i : P_i → P_{i−1}`, `i ≥ 1`.
    pub fn arrows(&self, i: usize) -> Vec<HookArrow> {
        if i == 0 || i > self.b {
            return Vec::new();
        }
        let index: HashMap<&Composition, usize> = self.terms[i - 1]
            .iter()
            .enumerate()
            .map(|(k, c)| (c, k))
            .collect();
        let n = self.n;
        let mut out = Vec::new();
        for (s, beta) in self.terms[i].iter().enumerate() {
            let m = self.b + 1 - i;
            for j in 0..m {
                let bj = beta.part(j);
                for u in (1..bj).rev() {
                    let v = bj - u;
                    let mut alpha = Vec::with_capacity(n);
                    alpha.extend_from_slice(&beta.parts()[..j]);
                    alpha.push(u);
                    alpha.push(v);
                    alpha.extend_from_slice(&beta.parts()[j + 1..m]);
                    alpha.resize(n, 0);
                    let alpha = Composition::new(alpha);
                    let Some(&t) = index.get(&alpha) else {
                        continue;
                    };
                    let mut omega = MatrixWeight::zeros(n);
                    for k in 0..m {
                        let x = beta.part(k);
                        if k < j {
                            omega.set(k, k, x);
                        } else if k == j {
                            omega.set(k, k, u);
                            omega.set(k, k + 1, v);
                        } else {
                            omega.set(k, k + 1, x);
                        }
                    }
                    out.push(HookArrow {
                        source: s,
                        target: t,
                        j: j + 1,
                        omega,
                    });
                }
            }
        }
        out
    }
}

fn positive_compositions(r: u32, len: usize) -> Vec<Vec<u32>> {
    fn go(r: u32, len: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 1 {
            if r >= 1 {
                prefix.push(r);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for x in (1..r).rev() {
            if r - x < (len - 1) as u32 {
                continue;
            }
            prefix.push(x);
            go(r - x, len - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        go(r, len, &mut Vec::new(), &mut out);
    }
    out
}

pub fn hook_resolution(a: u32, b: usize, n: usize) -> Result<HookResolution> {
    HookResolution::new(a, b, n)
}

/// One family `M_i(t) = D(ν)` of the box presentation; `i` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxFamily {
    pub i: usize,
    pub t: u32,
    pub source: Composition,
}

/// `⊕ M_i(t) → D(λ) → Δ(λ) → 0`.
#[derive(Debug, Clone)]
pub struct BoxPresentation {
    pub lam: Partition,
    pub families: Vec<BoxFamily>,
}

pub fn box_presentation(lam: &Partition) -> BoxPresentation {
    BoxPresentation {
        lam: lam.clone(),
        families: box_sources(lam.composition())
            .into_iter()
            .map(|(i, t, source)| BoxFamily { i: i + 1, t, source })
            .collect(),
    }
}
