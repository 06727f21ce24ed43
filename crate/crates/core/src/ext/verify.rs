use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::shapes::{Partition, Shift};
use crate::weyl::WeylModule;

use super::complex::{build_hom_complex, check_pair, Target};
use super::hook::hook_ext_dims;
use super::oracle::hom_dim_oracle;

/// The periodicity statements that can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `Ext^i(Δ(λ), Δ(μ))` for `p^d > r − λ₁`, `μ₂ ≤ λ₁`.
    WeylPeriodicity,
    /// `Ext^i(Δ(λ), L(μ))` for `p^d > r − λ₁`, `λ₁ ≥ r/2`.
    SimplePeriodicity,
    /// `Hom(Δ(λ), Δ(μ))` for `p^d > min(λ₂, μ₁ − λ₁)`, `μ₂ ≤ λ₁`.
    HomBound,
    /// `Ext^i(Δ(a, 1^b), Δ(μ))` for `p^d > i`.
    HookBound,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::WeylPeriodicity,
        Theorem::SimplePeriodicity,
        Theorem::HomBound,
        Theorem::HookBound,
    ];

    /// The numeric selector accepted on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Theorem::WeylPeriodicity => "1.1.1",
            Theorem::SimplePeriodicity => "1.1.2",
            Theorem::HomBound => "6.1",
            Theorem::HookBound => "6.4",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theorem::WeylPeriodicity => "weyl-periodicity",
            Theorem::SimplePeriodicity => "simple-periodicity",
            Theorem::HomBound => "hom-bound",
            Theorem::HookBound => "hook-bound",
        }
    }

    pub fn target(self) -> Target {
        match self {
            Theorem::SimplePeriodicity => Target::Simple,
            _ => Target::Weyl,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Theorem::ALL
            .into_iter()
            .find(|t| t.code() == s || t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem {s:?}; expected one of 1.1.1, 1.1.2, 6.1, 6.4")))
    }
}

/// Named hypothesis inequalities; for [`Theorem::HookBound`] the degree
/// condition `p^d > i` is evaluated per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypotheses {
    pub theorem: Theorem,
    pub shift: u64,
    pub flags: BTreeMap<String, bool>,
}

impl Hypotheses {
    pub fn hold(&self) -> bool {
        self.flags.values().all(|&b| b)
    }

    pub fn hold_at(&self, i: usize) -> bool {
        self.hold() && (self.theorem != Theorem::HookBound || self.shift > i as u64)
    }

    /// The flags, plus `pd_gt_<i>` for each degree when the bound is per degree.
    pub fn flags_through(&self, max_degree: usize) -> BTreeMap<String, bool> {
        let mut flags = self.flags.clone();
        if self.theorem == Theorem::HookBound {
            for i in 0..=max_degree {
                flags.insert(format!("pd_gt_{i}"), self.shift > i as u64);
            }
        }
        flags
    }
}

pub fn check_hypotheses(lam: &Partition, mu: &Partition, p: u64, d: u32, theorem: Theorem) -> Result<Hypotheses> {
    let pd = Shift::new(p, d)?.amount() as i64;
    let r = lam.r() as i64;
    let (l1, l2) = (lam.part(0) as i64, lam.part(1) as i64);
    let (m1, m2) = (mu.part(0) as i64, mu.part(1) as i64);
    let mut flags = BTreeMap::new();
    let mut set = |name: &str, value: bool| {
        flags.insert(name.to_string(), value);
    };
    match theorem {
        Theorem::WeylPeriodicity => {
            set("pd_gt_r_minus_l1", pd > r - l1);
            set("mu2_le_l1", m2 <= l1);
        }
        Theorem::SimplePeriodicity => {
            set("pd_gt_r_minus_l1", pd > r - l1);
            set("l1_ge_half_r", 2 * l1 >= r);
        }
        Theorem::HomBound => {
            set("pd_gt_min_l2_mu1_minus_l1", pd > l2.min(m1 - l1));
            set("mu2_le_l1", m2 <= l1);
        }
        Theorem::HookBound => {
            set("lambda_is_hook", lam.as_hook().is_some());
        }
    }
    Ok(Hypotheses {
        theorem,
        shift: pd as u64,
        flags,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Hypotheses hold and every degree agrees.
    Pass,
    /// Hypotheses hold in some degree that disagrees.
    Fail,
    /// Only degrees outside the hypotheses disagree.
    Sharpness,
    /// Everything agrees but the hypotheses do not hold everywhere.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Sharpness => "SHARPNESS",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }

    /// `covered[i]` says whether the hypotheses apply in degree `i`.
    pub fn judge(covered: &[bool], base: &[usize], shifted: &[usize]) -> Verdict {
        let differs = |i: usize| base.get(i) != shifted.get(i);
        let degrees = base.len().max(shifted.len());
        if (0..degrees).any(|i| covered.get(i).copied().unwrap_or(false) && differs(i)) {
            Verdict::Fail
        } else if (0..degrees).any(differs) {
            Verdict::Sharpness
        } else if (0..degrees).all(|i| covered.get(i).copied().unwrap_or(false)) {
            Verdict::Pass
        } else {
            Verdict::Inconclusive
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub theorem: Theorem,
    pub lam: Partition,
    pub mu: Partition,
    pub shifted_lam: Partition,
    pub shifted_mu: Partition,
    pub p: u64,
    pub d: u32,
    pub target: Target,
    pub hypotheses: Hypotheses,
    pub dims: Vec<usize>,
    pub shifted_dims: Vec<usize>,
    pub verdict: Verdict,
}

impl PeriodicityReport {
    pub fn equal_per_degree(&self) -> Vec<bool> {
        self.dims.iter().zip(&self.shifted_dims).map(|(a, b)| a == b).collect()
    }
}

/// Periodicity in the coefficient module `target`, judged against the
/// matching hypotheses.
pub fn verify_periodicity(
    lam: &Partition,
    mu: &Partition,
    p: u64,
    d: u32,
    target: Target,
    max_degree: usize,
) -> Result<PeriodicityReport> {
    let theorem = match target {
        Target::Weyl => Theorem::WeylPeriodicity,
        Target::Simple => Theorem::SimplePeriodicity,
    };
    verify_theorem(theorem, lam, mu, p, d, max_degree)
}

/// Computes both sides of `theorem` at `(λ, μ)` and `(λ⁺, μ⁺)`.
///
/// Hom comparisons use the box-presentation oracle and report one degree;
/// hook comparisons use `P_*(a, b)` when `λ` is a hook.
pub fn verify_theorem(
    theorem: Theorem,
    lam: &Partition,
    mu: &Partition,
    p: u64,
    d: u32,
    max_degree: usize,
) -> Result<PeriodicityReport> {
    check_pair(lam, mu)?;
    let shift = Shift::new(p, d)?;
    let hypotheses = check_hypotheses(lam, mu, p, d, theorem)?;
    let (lam_s, mu_s) = (lam.plus_shift(shift), mu.plus_shift(shift));
    let target = theorem.target();
    let (dims, shifted_dims) = match (theorem, lam.as_hook()) {
        (Theorem::HomBound, _) => (
            vec![hom_dim_oracle(lam, mu, p)?],
            vec![hom_dim_oracle(&lam_s, &mu_s, p)?],
        ),
        (Theorem::HookBound, Some((a, b))) => (
            hook_ext_dims(a, b, mu, p, max_degree)?,
            hook_ext_dims(a + shift.amount(), b, &mu_s, p, max_degree)?,
        ),
        _ => (
            build_hom_complex(lam, mu, p, target, max_degree)?.ext_dims(),
            build_hom_complex(&lam_s, &mu_s, p, target, max_degree)?.ext_dims(),
        ),
    };
    let covered: Vec<bool> = (0..dims.len()).map(|i| hypotheses.hold_at(i)).collect();
    let verdict = Verdict::judge(&covered, &dims, &shifted_dims);
    Ok(PeriodicityReport {
        theorem,
        lam: lam.clone(),
        mu: mu.clone(),
        shifted_lam: lam_s,
        shifted_mu: mu_s,
        p,
        d,
        target,
        hypotheses,
        dims,
        shifted_dims,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismReport {
    /// Differentials `d^1 … d^k` compared.
    pub differentials_compared: usize,
    pub degree_dims: Vec<usize>,
    pub identical: bool,
    pub mismatch: Option<String>,
}

/// Compares `Hom(B_*(λ), Δ(μ))` with `Hom(B_*(λ⁺), Δ(μ⁺))` entrywise, after
/// matching summands by shifting their chains and SST coordinates by `T ↦ T⁺`.
/// Refuses unless `p^d > r − λ₁` and `μ₂ ≤ λ₁`, where the matching need not
/// exist.
pub fn verify_complex_isomorphism(
    lam: &Partition,
    mu: &Partition,
    p: u64,
    d: u32,
    max_degree: usize,
) -> Result<IsomorphismReport> {
    let hyp = check_hypotheses(lam, mu, p, d, Theorem::WeylPeriodicity)?;
    if !hyp.hold() {
        let failed: Vec<&str> = hyp.flags.iter().filter(|(_, &v)| !v).map(|(k, _)| k.as_str()).collect();
        return Err(Error::HypothesisViolated(format!(
            "the shift by {} does not identify the complexes for λ = {lam}, μ = {mu}: {} fails",
            hyp.shift,
            failed.join(", ")
        )));
    }
    let shift = Shift::new(p, d)?;
    let base = build_hom_complex(lam, mu, p, Target::Weyl, max_degree)?;
    let (lam_s, mu_s) = (lam.plus_shift(shift), mu.plus_shift(shift));
    let shifted = build_hom_complex(&lam_s, &mu_s, p, Target::Weyl, max_degree)?;
    let field = base.complex.field();
    let weyl = WeylModule::new(field, mu);
    let weyl_s = WeylModule::new(field, &mu_s);

    let mismatch = |msg: String| IsomorphismReport {
        differentials_compared: 0,
        degree_dims: base.complex.dims().to_vec(),
        identical: false,
        mismatch: Some(msg),
    };
    if base.degrees.len() != shifted.degrees.len() {
        return Ok(mismatch(format!(
            "{} stored degrees against {}",
            base.degrees.len(),
            shifted.degrees.len()
        )));
    }
    let mut perms = Vec::new();
    for (k, (b, s)) in base.degrees.iter().zip(&shifted.degrees).enumerate() {
        if b.total() != s.total() {
            return Ok(mismatch(format!("degree {k} has dimension {} against {}", b.total(), s.total())));
        }
        let index: HashMap<_, usize> = s.summands.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut perm = vec![usize::MAX; b.total()];
        let mut seen = vec![false; s.total()];
        for (i, x) in b.summands.iter().enumerate() {
            if b.dims[i] == 0 {
                continue;
            }
            let mut xs = x.clone();
            xs.top_weight = x.top_weight.plus_shift(shift);
            xs.chain = x.chain.iter().map(|w| w.plus_shift(shift)).collect();
            let Some(&j) = index.get(&xs) else {
                return Ok(mismatch(format!("degree {k}: no shifted partner for a summand of weight {}", x.top_weight)));
            };
            let (model, model_s) = (weyl.model(&x.top_weight)?, weyl_s.model(&xs.top_weight)?);
            for (c, t) in model.sst().iter().enumerate() {
                let Some(cs) = model_s.sst_index(&t.plus_shift(shift)) else {
                    return Ok(mismatch(format!("degree {k}: tableau {t} has no shifted partner")));
                };
                let target = s.offsets[j] + cs;
                perm[b.offsets[i] + c] = target;
                seen[target] = true;
            }
        }
        if seen.iter().any(|&x| !x) {
            return Ok(mismatch(format!("degree {k}: the matching is not onto")));
        }
        perms.push(perm);
    }
    let diffs = base.complex.differentials();
    for (k, (db, ds)) in diffs.iter().zip(shifted.complex.differentials()).enumerate() {
        let mut triplets = Vec::with_capacity(db.nnz());
        for r in 0..db.rows() {
            for &(c, v) in db.row(r) {
                triplets.push((perms[k + 1][r], perms[k][c], v));
            }
        }
        let moved = SparseMatrix::from_triplets(field, ds.rows(), ds.cols(), triplets);
        if &moved != ds {
            return Ok(IsomorphismReport {
                differentials_compared: k,
                degree_dims: base.complex.dims().to_vec(),
                identical: false,
                mismatch: Some(format!("differential d^{} differs after matching", k + 1)),
            });
        }
    }
    Ok(IsomorphismReport {
        differentials_compared: diffs.len(),
        degree_dims: base.complex.dims().to_vec(),
        identical: true,
        mismatch: None,
    })
}
