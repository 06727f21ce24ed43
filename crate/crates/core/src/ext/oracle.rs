use crate::error::Result;
use crate::fp::PrimeField;
use crate::linalg::SparseEchelon;
use crate::shapes::{MatrixWeight, Partition};
use crate::weyl::{box_image, box_sources, WeightModule, WeylModule};

use super::complex::check_pair;

/// `dim Hom_S(Δ(λ), Δ(μ))` from the box presentation of `Δ(λ)` alone.
///
/// A map `D(λ) → Δ(μ)` is a vector `v ∈ Δ(μ)_λ`; it factors through `Δ(λ)`
/// exactly when every box map `D(ν) → D(λ)` composed with it vanishes, i.e.
/// `Σ c_π ξ_π v = 0` where `Σ c_π e^{(π)}` is the box image of the
/// generator of `D(ν)`.
pub fn hom_dim_oracle(lam: &Partition, mu: &Partition, p: u64) -> Result<usize> {
    let field = PrimeField::new(p)?;
    check_pair(lam, mu)?;
    if !mu.dominates(lam) {
        return Ok(0);
    }
    let weyl = WeylModule::new(field, mu);
    let dim = weyl.weight_dim(lam.composition())?;
    if dim == 0 {
        return Ok(0);
    }
    let mut conditions = SparseEchelon::new(field, dim);
    for (i, t, nu) in box_sources(lam.composition()) {
        let generator = MatrixWeight::diag(&nu);
        let mut block: Option<Vec<Vec<u32>>> = None;
        for (w, c) in box_image(field, &generator, i, t) {
            let a = weyl.act_matrix(&w)?;
            let rows = block.get_or_insert_with(|| vec![vec![0; dim]; a.rows()]);
            for (r, row) in rows.iter_mut().enumerate() {
                for (x, &y) in row.iter_mut().zip(a.row(r)) {
                    *x = field.add(*x, field.mul(c, y));
                }
            }
        }
        for row in block.unwrap_or_default() {
            let sparse: Vec<(usize, u32)> = row.into_iter().enumerate().filter(|&(_, v)| v != 0).collect();
            if !sparse.is_empty() {
                conditions.insert(&sparse);
            }
        }
        if conditions.rank() == dim {
            break;
        }
    }
    Ok(dim - conditions.rank())
}
