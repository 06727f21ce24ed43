//! Index combinatorics: compositions, tableaux, weight matrices and tensors,
//! dominance chains, and the `p^d` shift on each of them.

mod chains;
mod composition;
mod matrix;
mod tableau;

pub use chains::{enumerate_chains, Chain, ChainEnumerator};
pub use composition::{
    dominates, enumerate_compositions, enumerate_partitions, enumerate_strictly_dominating,
    Composition, Partition,
};
pub use matrix::{enumerate_omega, enumerate_theta, matrix_margins, MatrixWeight, Tensor3};
pub use tableau::{enumerate_sst, matrix_to_tableau, tableau_to_matrix, Tableau};

use crate::error::{Error, Result};

/// The shift amount `p^d` added at the top-left corner of an object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shift {
    amount: u32,
}

impl Shift {
    pub fn new(p: u64, d: u32) -> Result<Shift> {
        if d == 0 {
            return Err(Error::invalid("shift exponent d must be >= 1"));
        }
        let amount = p
            .checked_pow(d)
            .filter(|&x| x <= u32::MAX as u64 / 2)
            .ok_or_else(|| Error::invalid(format!("{p}^{d} is too large")))?;
        Ok(Shift {
            amount: amount as u32,
        })
    }

    pub fn amount(self) -> u32 {
        self.amount
    }
}

pub fn plus_shift_composition(a: &Composition, d: u32, p: u64) -> Result<Composition> {
    Ok(a.plus_shift(Shift::new(p, d)?))
}

pub fn plus_shift_matrix(w: &MatrixWeight, d: u32, p: u64) -> Result<MatrixWeight> {
    Ok(w.plus_shift(Shift::new(p, d)?))
}

pub fn plus_shift_tensor(t: &Tensor3, d: u32, p: u64) -> Result<Tensor3> {
    Ok(t.plus_shift(Shift::new(p, d)?))
}

pub fn plus_shift_tableau(t: &Tableau, d: u32, p: u64) -> Result<Tableau> {
    Ok(t.plus_shift(Shift::new(p, d)?))
}
