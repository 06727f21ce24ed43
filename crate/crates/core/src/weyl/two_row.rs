use crate::error::{Error, Result};
use crate::fp::PrimeField;
use crate::shapes::{MatrixWeight, Partition, Tableau};

use super::model::WeightSpaceModel;

/// Closed-form rewriting of a two-row `[T]` into tableaux whose 1's all sit
/// in the top row. Terms are `(tableau, coefficient)`; an empty list means
/// `[T] = 0`. The result need not be semistandard in the other letters.
pub fn two_row_expansion(t: &Tableau, p: u64) -> Result<Vec<(Tableau, u32)>> {
    let field = PrimeField::new(p)?;
    let mu = t.shape();
    if mu.length() > 2 || mu.n() < 2 {
        return Err(Error::invalid(format!("shape {mu} is not a two-row shape")));
    }
    let n = t.n();
    let a: Vec<u32> = (1..=n).map(|s| t.count(s, 1)).collect();
    let b: Vec<u32> = (1..=n).map(|s| t.count(s, 2)).collect();
    if a[0] + b[0] > mu.part(0) {
        return Ok(Vec::new());
    }
    let sign = field.sign(b[0] as usize);
    let mut out = Vec::new();
    let mut take = vec![0u32; n];
    // i_s for s = 2..n with Σ i_s = b₁ and i_s ≤ a_s
    fn go(
        field: PrimeField,
        mu: &Partition,
        a: &[u32],
        b: &[u32],
        s: usize,
        left: u32,
        take: &mut Vec<u32>,
        sign: u32,
        out: &mut Vec<(Tableau, u32)>,
    ) {
        let n = a.len();
        if s == n {
            if left != 0 {
                return;
            }
            let mut coef = sign;
            let mut w = MatrixWeight::zeros(n);
            w.set(0, 0, a[0] + b[0]);
            for k in 1..n {
                coef = field.mul(coef, field.binomial((b[k] + take[k]) as u64, b[k] as u64));
                w.set(k, 0, a[k] - take[k]);
                w.set(k, 1, b[k] + take[k]);
            }
            if coef != 0 {
                out.push((Tableau::from_matrix(mu, w).expect("shape preserved"), coef));
            }
            return;
        }
        for x in (0..=a[s].min(left)).rev() {
            take[s] = x;
            go(field, mu, a, b, s + 1, left - x, take, sign, out);
        }
        take[s] = 0;
    }
    go(field, mu, &a, &b, 1, b[0], &mut take, sign, &mut out);
    Ok(out)
}

/// SST coordinates of a two-row `[T]`: the closed form, with any remaining
/// non-semistandard terms straightened by the weight-space model.
pub fn two_row_straighten(t: &Tableau, mu: &Partition, p: u64) -> Result<Vec<u32>> {
    if t.shape() != mu {
        return Err(Error::invalid(format!("tableau {t} does not have shape {mu}")));
    }
    let field = PrimeField::new(p)?;
    let model = WeightSpaceModel::build(field, mu, &t.weight())?;
    let mut acc = vec![0u32; model.dim()];
    for (term, c) in two_row_expansion(t, p)? {
        let coords = match model.sst_index(&term) {
            Some(k) => {
                let mut v = vec![0u32; model.dim()];
                v[k] = 1;
                v
            }
            None => model.straighten(&term)?,
        };
        for (a, x) in acc.iter_mut().zip(coords) {
            *a = field.add(*a, field.mul(c, x));
        }
    }
    Ok(acc)
}
