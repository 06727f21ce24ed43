use crate::error::{Error, Result};
use crate::fp::PrimeField;
use crate::linalg::SparseMatrix;
use crate::resolutions::HookResolution;
use crate::shapes::{Partition, Shift};
use crate::weyl::{WeightModule, WeylModule};

use super::complex::{build_hom_complex, check_pair, CochainComplex, Target};

/// `Hom_S(P_*(a, b), Δ(μ))` through degree `max_degree + 1`, with `n = μ.n()`.
pub fn hook_hom_complex(a: u32, b: usize, mu: &Partition, p: u64, max_degree: usize) -> Result<CochainComplex> {
    let field = PrimeField::new(p)?;
    let res = HookResolution::new(a, b, mu.n())?;
    let lam = res.lam();
    check_pair(&lam, mu)?;
    let top = (max_degree + 1).min(b);
    if !mu.dominates(&lam) {
        return Ok(CochainComplex::zero(field, top + 1));
    }
    let weyl = WeylModule::new(field, mu);
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    let mut dims = Vec::new();
    for i in 0..=top {
        let mut off = Vec::new();
        let mut total = 0;
        for beta in res.degree(i) {
            off.push(total);
            total += weyl.weight_dim(beta)?;
        }
        offsets.push(off);
        dims.push(total);
    }
    let mut differentials = Vec::new();
    for i in 1..=top {
        let mut triplets = Vec::new();
        for arrow in res.arrows(i) {
            let a = weyl.act_matrix(&arrow.omega)?;
            let sign = arrow.sign(field);
            let (ox, oy) = (offsets[i][arrow.source], offsets[i - 1][arrow.target]);
            for r in 0..a.rows() {
                for (c, &v) in a.row(r).iter().enumerate() {
                    if v != 0 {
                        triplets.push((ox + r, oy + c, field.mul(sign, v)));
                    }
                }
            }
        }
        differentials.push(SparseMatrix::from_triplets(field, dims[i], dims[i - 1], triplets));
    }
    Ok(CochainComplex::new(field, dims, differentials, top == b))
}

/// `Ext^i(Δ(a, 1^b), Δ(μ))` for `i = 0..=max_degree` via `P_*(a, b)`.
pub fn hook_ext_dims(a: u32, b: usize, mu: &Partition, p: u64, max_degree: usize) -> Result<Vec<usize>> {
    let mut dims = hook_hom_complex(a, b, mu, p, max_degree)?.cohomology_dims();
    dims.resize(max_degree + 1, 0);
    dims.truncate(max_degree + 1);
    Ok(dims)
}

/// The hook pipeline after a shift by `p^d`, compared in degrees `i < p^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedHookCheck {
    pub d: u32,
    pub shifted_dims: Vec<usize>,
    pub degrees_checked: Vec<usize>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookCrossReport {
    pub a: u32,
    pub b: usize,
    pub mu: Partition,
    pub p: u64,
    pub sy_dims: Vec<usize>,
    pub hook_dims: Vec<usize>,
    pub agree: bool,
    /// `Ext^i = 0` for `i > b` in both pipelines.
    pub vanishing: bool,
    pub shifted: Vec<ShiftedHookCheck>,
}

impl HookCrossReport {
    pub fn passed(&self) -> bool {
        self.agree && self.vanishing && self.shifted.iter().all(|s| s.agree)
    }
}

/// Compares the hook and chain pipelines for `λ = (a, 1^b)`, and checks the
/// shifted equality for each `d` in `shifts`.
pub fn hook_ext_crosscheck(
    a: u32,
    b: usize,
    mu: &Partition,
    p: u64,
    max_degree: usize,
    shifts: &[u32],
) -> Result<HookCrossReport> {
    let lam = Partition::hook(a, b, mu.n())?;
    if lam.r() != mu.r() {
        return Err(Error::invalid(format!("hook {lam} and μ = {mu} have different sizes")));
    }
    let hook_dims = hook_ext_dims(a, b, mu, p, max_degree)?;
    let sy_dims = build_hom_complex(&lam, mu, p, Target::Weyl, max_degree)?.ext_dims();
    let vanishing = (b + 1..=max_degree).all(|i| hook_dims[i] == 0 && sy_dims[i] == 0);
    let mut shifted = Vec::new();
    for &d in shifts {
        let shift = Shift::new(p, d)?;
        let pd = shift.amount();
        let shifted_dims = hook_ext_dims(a + pd, b, &mu.plus_shift(shift), p, max_degree)?;
        let degrees_checked: Vec<usize> = (0..=max_degree).filter(|&i| (i as u64) < u64::from(pd)).collect();
        let agree = degrees_checked.iter().all(|&i| shifted_dims[i] == hook_dims[i]);
        shifted.push(ShiftedHookCheck {
            d,
            shifted_dims,
            degrees_checked,
            agree,
        });
    }
    Ok(HookCrossReport {
        a,
        b,
        mu: mu.clone(),
        p,
        agree: sy_dims == hook_dims,
        sy_dims,
        hook_dims,
        vanishing,
        shifted,
    })
}
