use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fp::PrimeField;
use crate::linalg::SparseEchelon;
use crate::shapes::{enumerate_omega, enumerate_sst, Composition, MatrixWeight, Partition, Tableau};

/// The image of one generator of `D(ν)` under the box map `D(ν) → D(μ)`,
/// as sparse terms over monomials `e^{(π)}` of `D(μ)`.
///
/// Column `i` of the generator (exponents `c`) is split as `c' + c''` with
/// `|c''| = t`; `c''` is multiplied into column `i + 1`, which costs
/// `Π_ℓ C(c''_ℓ + e_ℓ, c''_ℓ)`.
pub(crate) fn box_image(
    field: PrimeField,
    generator: &MatrixWeight,
    i: usize,
    t: u32,
) -> Vec<(MatrixWeight, u32)> {
    let n = generator.n();
    let c = generator.column(i);
    let e = generator.column(i + 1);
    let mut out = Vec::new();
    let mut split = vec![0u32; n];
    fn go(
        field: PrimeField,
        generator: &MatrixWeight,
        i: usize,
        c: &[u32],
        e: &[u32],
        l: usize,
        left: u32,
        split: &mut Vec<u32>,
        out: &mut Vec<(MatrixWeight, u32)>,
    ) {
        let n = c.len();
        if l == n {
            if left != 0 {
                return;
            }
            let mut coef = 1 % field.p();
            for ell in 0..n {
                coef = field.mul(coef, field.binomial((split[ell] + e[ell]) as u64, split[ell] as u64));
            }
            if coef == 0 {
                return;
            }
            let mut w = generator.clone();
            for ell in 0..n {
                w.set(ell, i, c[ell] - split[ell]);
                w.set(ell, i + 1, e[ell] + split[ell]);
            }
            out.push((w, coef));
            return;
        }
        let rest: u32 = c[l + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for x in (lo..=c[l].min(left)).rev() {
            split[l] = x;
            go(field, generator, i, c, e, l + 1, left - x, split, out);
        }
        split[l] = 0;
    }
    go(field, generator, i, &c, &e, 0, t, &mut split, &mut out);
    out
}

/// The `(i, t)` pairs indexing the box relations of `Δ(μ)`, with the
/// corresponding `ν` (0-based `i`).
pub(crate) fn box_sources(mu: &Composition) -> Vec<(usize, u32, Composition)> {
    let n = mu.n();
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for t in 1..=mu.part(i + 1) {
            let mut nu = mu.parts().to_vec();
            nu[i] += t;
            nu[i + 1] -= t;
            out.push((i, t, Composition::new(nu)));
        }
    }
    out
}

/// Relation vectors spanning the kernel of `D(μ)_α → Δ(μ)_α`, one per
/// weight-`α` generator of each `M_i(t)`, in the coordinates of
/// `enumerate_omega(α, μ)`.
pub fn box_relation_vectors(mu: &Partition, alpha: &Composition, p: u64) -> Result<Vec<Vec<u32>>> {
    let field = PrimeField::new(p)?;
    check_weight(mu, alpha)?;
    let monomials = enumerate_omega(alpha, mu.composition());
    let index: HashMap<&MatrixWeight, usize> =
        monomials.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut out = Vec::new();
    for (i, t, nu) in box_sources(mu.composition()) {
        for generator in enumerate_omega(alpha, &nu) {
            let mut v = vec![0u32; monomials.len()];
            for (w, c) in box_image(field, &generator, i, t) {
                let k = index[&w];
                v[k] = field.add(v[k], c);
            }
            out.push(v);
        }
    }
    Ok(out)
}

fn check_weight(mu: &Partition, alpha: &Composition) -> Result<()> {
    if mu.n() != alpha.n() || mu.r() != alpha.r() {
        return Err(Error::invalid(format!(
            "weight {alpha} does not match shape {mu} (n and r must agree)"
        )));
    }
    Ok(())
}

/// `Δ(μ)_α` presented as `D(μ)_α` modulo the box relations, with the
/// semistandard classes as basis.
#[derive(Debug, Clone)]
pub struct WeightSpaceModel {
    field: PrimeField,
    mu: Partition,
    alpha: Composition,
    monomials: Vec<MatrixWeight>,
    index: HashMap<MatrixWeight, usize>,
    sst: Vec<Tableau>,
    relation_rank: usize,
    /// Per monomial, its class in SST coordinates.
    normal_form: Vec<Vec<u32>>,
}

impl WeightSpaceModel {
    pub fn build(field: PrimeField, mu: &Partition, alpha: &Composition) -> Result<Self> {
        check_weight(mu, alpha)?;
        let monomials = enumerate_omega(alpha, mu.composition());
        let sst = enumerate_sst(mu, alpha);
        let index: HashMap<MatrixWeight, usize> =
            monomials.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let sst_slot: HashMap<&MatrixWeight, usize> =
            sst.iter().enumerate().map(|(k, t)| (t.matrix(), k)).collect();

        // Column order for elimination: non-semistandard monomials, then
        // semistandard ones. Pivots must land exactly on the former.
        let non_sst: Vec<usize> = (0..monomials.len())
            .filter(|&k| !sst_slot.contains_key(&monomials[k]))
            .collect();
        let mut position = vec![0usize; monomials.len()];
        for (pos, &k) in non_sst.iter().enumerate() {
            position[k] = pos;
        }
        for (k, w) in monomials.iter().enumerate() {
            if let Some(&s) = sst_slot.get(w) {
                position[k] = non_sst.len() + s;
            }
        }

        let mut ech = SparseEchelon::new(field, monomials.len());
        for (i, t, nu) in box_sources(mu.composition()) {
            for generator in enumerate_omega(alpha, &nu) {
                let v: Vec<(usize, u32)> = box_image(field, &generator, i, t)
                    .into_iter()
                    .map(|(w, c)| (position[index[&w]], c))
                    .collect();
                ech.insert(&v);
            }
        }
        let violated = || Error::SstBasisViolated {
            mu: mu.to_string(),
            alpha: alpha.to_string(),
        };
        let relation_rank = ech.rank();
        if ech.pivots() != (0..non_sst.len()).collect::<Vec<_>>() {
            return Err(violated());
        }
        if monomials.len() - relation_rank != sst.len() {
            return Err(violated());
        }

        let k = sst.len();
        let mut normal_form = vec![vec![0u32; k]; monomials.len()];
        for (s, t) in sst.iter().enumerate() {
            normal_form[index[t.matrix()]][s] = 1 % field.p();
        }
        for (pc, row) in ech.into_reduced() {
            let m = non_sst[pc];
            for (c, x) in row {
                if c == pc {
                    continue;
                }
                // Reduced rows only touch semistandard columns besides the pivot.
                let s = c - non_sst.len();
                normal_form[m][s] = field.neg(x);
            }
        }

        Ok(WeightSpaceModel {
            field,
            mu: mu.clone(),
            alpha: alpha.clone(),
            monomials,
            index,
            sst,
            relation_rank,
            normal_form,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    /// `dim Δ(μ)_α`.
    pub fn dim(&self) -> usize {
        self.sst.len()
    }

    pub fn monomials(&self) -> &[MatrixWeight] {
        &self.monomials
    }

    pub fn sst(&self) -> &[Tableau] {
        &self.sst
    }

    pub fn relation_rank(&self) -> usize {
        self.relation_rank
    }

    /// SST coordinates of the class of `e^{(w)}`, `w ∈ Ω(α, μ)`.
    pub fn normal_form(&self, w: &MatrixWeight) -> Option<&[u32]> {
        self.index.get(w).map(|&k| self.normal_form[k].as_slice())
    }

    pub fn sst_index(&self, t: &Tableau) -> Option<usize> {
        self.sst.iter().position(|s| s == t)
    }

    /// Coordinates of `[U]` in the semistandard basis.
    pub fn straighten(&self, u: &Tableau) -> Result<Vec<u32>> {
        if u.shape() != &self.mu || u.weight() != self.alpha {
            return Err(Error::invalid(format!(
                "tableau {u} has shape {} and weight {}, the model is for shape {} and weight {}",
                u.shape(),
                u.weight(),
                self.mu,
                self.alpha
            )));
        }
        Ok(self.normal_form(u.matrix()).expect("monomial of this weight").to_vec())
    }
}

pub fn build_weight_space(mu: &Partition, alpha: &Composition, p: u64) -> Result<WeightSpaceModel> {
    WeightSpaceModel::build(PrimeField::new(p)?, mu, alpha)
}

/// Coordinates of `[U]` over `SST_α(μ)`, where `μ` is the shape of `U` and `α`
/// its weight.
pub fn straighten(u: &Tableau, model: &WeightSpaceModel) -> Result<Vec<u32>> {
    model.straighten(u)
}
