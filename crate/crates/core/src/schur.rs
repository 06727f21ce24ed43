//! The Schur algebra `S(n, r)` over `F_p` in the `ξ_ω` basis.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::fp::{FpElement, PrimeField};
use crate::shapes::{enumerate_compositions, enumerate_theta, MatrixWeight, Tensor3};

/// `[θ] = Π_{s,q} (θ²_{sq})! / Π_t θ_{stq}!`, reduced mod `p`.
pub fn structure_constant_in(field: PrimeField, theta: &Tensor3) -> u32 {
    let n = theta.n();
    let mut acc = 1 % field.p();
    let mut parts = Vec::with_capacity(n);
    for s in 0..n {
        for q in 0..n {
            parts.clear();
            parts.extend((0..n).map(|t| theta.get(s, t, q) as u64));
            acc = field.mul(acc, field.multinomial_unchecked(&parts));
            if acc == 0 {
                return 0;
            }
        }
    }
    acc
}

pub fn structure_constant(theta: &Tensor3, p: u64) -> Result<FpElement> {
    let field = PrimeField::new(p)?;
    Ok(field.element(structure_constant_in(field, theta) as u64))
}

/// Terms of `ξ_ω ξ_π`, sorted by `θ²` largest first, zeros dropped.
fn product_terms(field: PrimeField, w: &MatrixWeight, pi: &MatrixWeight) -> Vec<(MatrixWeight, u32)> {
    if w.n() != pi.n() || w.col_sums() != pi.row_sums() {
        return Vec::new();
    }
    let mut terms: BTreeMap<MatrixWeight, u32> = BTreeMap::new();
    for theta in enumerate_theta(w, pi) {
        let c = structure_constant_in(field, &theta);
        if c == 0 {
            continue;
        }
        let slot = terms.entry(theta.second()).or_insert(0);
        *slot = field.add(*slot, c);
    }
    terms.into_iter().rev().filter(|(_, c)| *c != 0).collect()
}

/// A sparse element `Σ c_ω ξ_ω` of `S(n, r)` over `F_p`.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurElement {
    field: PrimeField,
    n: usize,
    r: u32,
    terms: BTreeMap<MatrixWeight, u32>,
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| format!("{c}*xi[{w}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl SchurElement {
    pub fn zero(field: PrimeField, n: usize, r: u32) -> Self {
        SchurElement {
            field,
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(field: PrimeField, w: MatrixWeight) -> Self {
        let mut e = Self::zero(field, w.n(), w.total());
        e.add_term(w, 1);
        e
    }

    /// `Σ_{ν ∈ Λ(n;r)} ξ_{diag ν}`.
    pub fn identity(field: PrimeField, n: usize, r: u32) -> Self {
        let mut e = Self::zero(field, n, r);
        for nu in enumerate_compositions(n, r) {
            e.add_term(MatrixWeight::diag(&nu), 1);
        }
        e
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &MatrixWeight) -> u32 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Terms largest first.
    pub fn terms(&self) -> impl Iterator<Item = (&MatrixWeight, u32)> {
        self.terms.iter().rev().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: MatrixWeight, c: u32) {
        debug_assert!(w.n() == self.n && w.total() == self.r);
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        let f = self.field;
        let slot = self.terms.entry(w).or_insert(0);
        *slot = f.add(*slot, c);
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn scaled(&self, c: u32) -> SchurElement {
        let mut out = Self::zero(self.field, self.n, self.r);
        for (w, &v) in &self.terms {
            out.add_term(w.clone(), self.field.mul(v, c));
        }
        out
    }

    pub fn sum(&self, other: &SchurElement) -> Result<SchurElement> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (w, &v) in &other.terms {
            out.add_term(w.clone(), v);
        }
        Ok(out)
    }

    /// Image under the anti-automorphism `ξ_ω ↦ ξ_{ωᵗ}`.
    pub fn transpose(&self) -> SchurElement {
        let mut out = Self::zero(self.field, self.n, self.r);
        for (w, &v) in &self.terms {
            out.add_term(w.transpose(), v);
        }
        out
    }

    fn check_context(&self, other: &SchurElement) -> Result<()> {
        if self.field != other.field || self.n != other.n || self.r != other.r {
            return Err(Error::invalid(format!(
                "Schur elements from different algebras: (n={}, r={}, p={}) vs (n={}, r={}, p={})",
                self.n,
                self.r,
                self.field.p(),
                other.n,
                other.r,
                other.field.p()
            )));
        }
        Ok(())
    }
}

/// `ξ_ω ξ_π`; zero when `ω¹ ≠ π²`.
pub fn xi_product(w: &MatrixWeight, pi: &MatrixWeight, p: u64) -> Result<SchurElement> {
    let field = PrimeField::new(p)?;
    if w.n() != pi.n() || w.total() != pi.total() {
        return Err(Error::invalid("xi_product needs matrices of equal n and r"));
    }
    let mut out = SchurElement::zero(field, w.n(), w.total());
    for (rho, c) in product_terms(field, w, pi) {
        out.add_term(rho, c);
    }
    Ok(out)
}

/// Bilinear extension of [`xi_product`].
pub fn element_product(x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
    SchurAlgebra::new(x.field, x.n, x.r).mul(x, y)
}

pub fn transpose(w: &MatrixWeight) -> MatrixWeight {
    w.transpose()
}

/// `S(n, r)` over `F_p` with a memo of basis products.
///
/// The memo is per instance and not thread-safe; parallel callers each own
/// one.
pub struct SchurAlgebra {
    field: PrimeField,
    n: usize,
    r: u32,
    cache: RefCell<HashMap<(MatrixWeight, MatrixWeight), Rc<Vec<(MatrixWeight, u32)>>>>,
}

impl SchurAlgebra {
    pub fn new(field: PrimeField, n: usize, r: u32) -> Self {
        SchurAlgebra {
            field,
            n,
            r,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Terms `(ρ, c_ρ)` of `ξ_ω ξ_π`, largest `ρ` first.
    pub fn product(&self, w: &MatrixWeight, pi: &MatrixWeight) -> Rc<Vec<(MatrixWeight, u32)>> {
        let key = (w.clone(), pi.clone());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        let terms = Rc::new(product_terms(self.field, w, pi));
        self.cache.borrow_mut().insert(key, terms.clone());
        terms
    }

    pub fn xi(&self, w: MatrixWeight) -> SchurElement {
        SchurElement::basis(self.field, w)
    }

    pub fn identity(&self) -> SchurElement {
        SchurElement::identity(self.field, self.n, self.r)
    }

    pub fn mul(&self, x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
        x.check_context(y)?;
        if x.n != self.n || x.r != self.r || x.field != self.field {
            return Err(Error::invalid("element does not belong to this algebra"));
        }
        let f = self.field;
        let mut out = SchurElement::zero(f, self.n, self.r);
        for (w, &a) in &x.terms {
            for (pi, &b) in &y.terms {
                let ab = f.mul(a, b);
                for (rho, c) in self.product(w, pi).iter() {
                    out.add_term(rho.clone(), f.mul(ab, *c));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{enumerate_omega, Shift};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn m(s: &str) -> MatrixWeight {
        s.parse().unwrap()
    }

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn all_matrices(n: usize, r: u32) -> Vec<MatrixWeight> {
        let comps = enumerate_compositions(n, r);
        let mut out = Vec::new();
        for a in &comps {
            for b in &comps {
                out.extend(enumerate_omega(a, b));
            }
        }
        out
    }

    /// Product via a direct scan of every tensor in `Λ(n,n,n;r)`, filtered by
    /// margins; the coefficient uses exact integer factorials.
    fn brute_product(w: &MatrixWeight, pi: &MatrixWeight, p: u64) -> BTreeMap<MatrixWeight, u32> {
        let n = w.n();
        let r = w.total();
        let cells = n * n * n;
        let mut out = BTreeMap::new();
        let fact = |k: u32| (1..=k as u128).product::<u128>();
        let mut stack = vec![(0usize, r, Tensor3::zeros(n))];
        while let Some((cell, rem, t)) = stack.pop() {
            if cell == cells - 1 {
                let mut t = t;
                let (s, tt, q) = (cell / (n * n), (cell / n) % n, cell % n);
                t.set(s, tt, q, rem);
                if &t.third() == w && &t.first() == pi {
                    let t2 = t.second();
                    let mut c: u128 = 1;
                    for s in 0..n {
                        for q in 0..n {
                            let mut v = fact(t2.get(s, q));
                            for tt in 0..n {
                                v /= fact(t.get(s, tt, q));
                            }
                            c *= v;
                        }
                    }
                    let c = (c % p as u128) as u32;
                    let slot = out.entry(t2).or_insert(0u32);
                    *slot = (*slot + c) % p as u32;
                }
                continue;
            }
            let (s, tt, q) = (cell / (n * n), (cell / n) % n, cell % n);
            for v in 0..=rem {
                let mut t2 = t.clone();
                t2.set(s, tt, q, v);
                stack.push((cell + 1, rem - v, t2));
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    #[test]
    fn structure_constant_examples() {
        let thetas = enumerate_theta(&m("1,1/0,0"), &m("1,0/1,0"));
        assert_eq!(thetas.len(), 1);
        assert_eq!(structure_constant(&thetas[0], 3).unwrap().value(), 2);
        assert_eq!(structure_constant(&thetas[0], 2).unwrap().value(), 0);
        let mut single = Tensor3::zeros(2);
        single.set(0, 1, 0, 3);
        single.set(1, 0, 1, 2);
        assert_eq!(structure_constant(&single, 5).unwrap().value(), 1);
    }

    #[test]
    fn product_examples() {
        let x = xi_product(&m("1,1/0,0"), &m("1,0/1,0"), 3).unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(x.coefficient(&m("2,0/0,0")), 2);
        assert!(xi_product(&m("1,1/0,0"), &m("1,0/1,0"), 2).unwrap().is_zero());

        let w = m("1,1/0,2");
        let d = MatrixWeight::diag(&w.row_sums());
        let x = xi_product(&d, &w, 5).unwrap();
        assert_eq!(x, SchurElement::basis(field(5), w.clone()));
        let x = xi_product(&w, &MatrixWeight::diag(&w.col_sums()), 5).unwrap();
        assert_eq!(x, SchurElement::basis(field(5), w));

        let r = m("4");
        assert_eq!(
            xi_product(&r, &r, 2).unwrap(),
            SchurElement::basis(field(2), r.clone())
        );
        // not composable
        assert!(xi_product(&m("2,0/0,0"), &m("0,0/0,2"), 3).unwrap().is_zero());
    }

    #[test]
    fn product_matches_brute_force() {
        for p in [2u64, 3] {
            for r in 1..=3 {
                let all = all_matrices(2, r);
                for w in &all {
                    for pi in &all {
                        let got = xi_product(w, pi, p).unwrap();
                        let want = brute_product(w, pi, p);
                        let got: BTreeMap<_, _> =
                            got.terms().map(|(k, v)| (k.clone(), v)).collect();
                        assert_eq!(got, want, "w={w} pi={pi} p={p}");
                    }
                }
            }
        }
        // a few n=3 cases
        let all = all_matrices(3, 2);
        for w in all.iter().step_by(7) {
            for pi in all.iter().step_by(5) {
                let got = xi_product(w, pi, 3).unwrap();
                let got: BTreeMap<_, _> = got.terms().map(|(k, v)| (k.clone(), v)).collect();
                assert_eq!(got, brute_product(w, pi, 3));
            }
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        for p in [2u64, 3] {
            for r in 1..=3 {
                let alg = SchurAlgebra::new(field(p), 2, r);
                let all = all_matrices(2, r);
                for a in &all {
                    for b in all.iter().filter(|b| a.col_sums() == b.row_sums()) {
                        for c in all.iter().filter(|c| b.col_sums() == c.row_sums()) {
                            let (xa, xb, xc) = (alg.xi(a.clone()), alg.xi(b.clone()), alg.xi(c.clone()));
                            let left = alg.mul(&alg.mul(&xa, &xb).unwrap(), &xc).unwrap();
                            let right = alg.mul(&xa, &alg.mul(&xb, &xc).unwrap()).unwrap();
                            assert_eq!(left, right, "{a} {b} {c} p={p}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_random_n3() {
        let mut rng = StdRng::seed_from_u64(7);
        for r in 2..=4 {
            let alg = SchurAlgebra::new(field(3), 3, r);
            let all = all_matrices(3, r);
            for _ in 0..40 {
                let a = all.choose(&mut rng).unwrap();
                let bs: Vec<_> = all.iter().filter(|b| a.col_sums() == b.row_sums()).collect();
                let b = *bs.choose(&mut rng).unwrap();
                let cs: Vec<_> = all.iter().filter(|c| b.col_sums() == c.row_sums()).collect();
                let c = *cs.choose(&mut rng).unwrap();
                let (xa, xb, xc) = (alg.xi(a.clone()), alg.xi(b.clone()), alg.xi(c.clone()));
                let left = alg.mul(&alg.mul(&xa, &xb).unwrap(), &xc).unwrap();
                let right = alg.mul(&xa, &alg.mul(&xb, &xc).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn identity_and_idempotents() {
        for p in [2u64, 3] {
            for r in 0..=3 {
                let alg = SchurAlgebra::new(field(p), 2, r);
                let one = alg.identity();
                for w in all_matrices(2, r) {
                    let x = alg.xi(w);
                    assert_eq!(alg.mul(&x, &one).unwrap(), x);
                    assert_eq!(alg.mul(&one, &x).unwrap(), x);
                    assert!(alg.mul(&x, &SchurElement::zero(field(p), 2, r)).unwrap().is_zero());
                }
                let comps = enumerate_compositions(2, r);
                for a in &comps {
                    for b in &comps {
                        let prod = alg
                            .mul(&alg.xi(MatrixWeight::diag(a)), &alg.xi(MatrixWeight::diag(b)))
                            .unwrap();
                        if a == b {
                            assert_eq!(prod, alg.xi(MatrixWeight::diag(a)));
                        } else {
                            assert!(prod.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_is_anti_automorphism() {
        assert_eq!(transpose(&m("1,1/0,0")), m("1,0/1,0"));
        let d = MatrixWeight::diag(&"2,1".parse().unwrap());
        assert_eq!(transpose(&d), d);
        for p in [2u64, 3] {
            let all = all_matrices(2, 3);
            for w in &all {
                for pi in &all {
                    let lhs = xi_product(w, pi, p).unwrap().transpose();
                    let rhs = xi_product(&pi.transpose(), &w.transpose(), p).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let x = SchurElement::identity(field(2), 2, 2);
        let y = SchurElement::identity(field(3), 2, 2);
        assert!(element_product(&x, &y).is_err());
        let y = SchurElement::identity(field(2), 2, 3);
        assert!(element_product(&x, &y).is_err());
    }

    /// Terms of the shifted product equal the shifted terms, for ω upper
    /// triangular and π upper triangular.
    #[test]
    fn shift_compatibility_upper() {
        for p in [2u64, 3] {
            let s = Shift::new(p, 1).unwrap();
            for r in 1..=3 {
                let all: Vec<_> = all_matrices(2, r)
                    .into_iter()
                    .filter(|w| w.is_upper_triangular())
                    .collect();
                for w in &all {
                    for pi in all.iter().filter(|pi| w.col_sums() == pi.row_sums()) {
                        let base = xi_product(w, pi, p).unwrap();
                        let shifted = xi_product(&w.plus_shift(s), &pi.plus_shift(s), p).unwrap();
                        let expect: Vec<_> =
                            base.terms().map(|(k, c)| (k.plus_shift(s), c)).collect();
                        let got: Vec<_> = shifted.terms().map(|(k, c)| (k.clone(), c)).collect();
                        assert_eq!(got, expect, "w={w} pi={pi} p={p}");
                    }
                }
            }
        }
    }

    /// Same, for π lower triangular with ω¹ ⊵ λ and p^d > r − λ₁.
    #[test]
    fn shift_compatibility_lower() {
        use crate::shapes::enumerate_partitions;
        for p in [2u64, 3, 5] {
            let s = Shift::new(p, 1).unwrap();
            for n in 2..=3 {
                for r in 1..=4u32 {
                    let all = all_matrices(n, r);
                    for lam in enumerate_partitions(n, r) {
                        if p as u32 <= r - lam.part(0) {
                            continue;
                        }
                        for w in all.iter().filter(|w| w.is_upper_triangular()) {
                            if !w.col_sums().dominates(&lam) {
                                continue;
                            }
                            for pi in all.iter().filter(|pi| {
                                pi.is_lower_triangular() && w.col_sums() == pi.row_sums()
                            }) {
                                let base = xi_product(w, pi, p).unwrap();
                                let shifted =
                                    xi_product(&w.plus_shift(s), &pi.plus_shift(s), p).unwrap();
                                let expect: Vec<_> =
                                    base.terms().map(|(k, c)| (k.plus_shift(s), c)).collect();
                                let got: Vec<_> =
                                    shifted.terms().map(|(k, c)| (k.clone(), c)).collect();
                                assert_eq!(got, expect, "w={w} pi={pi} lam={lam} p={p}");
                            }
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn unit_law(p in prop::sample::select(vec![2u64, 3, 5]), r in 0u32..4, pick in 0usize..1000) {
            let all = all_matrices(2, r);
            let w = &all[pick % all.len()];
            let left = MatrixWeight::diag(&w.row_sums());
            prop_assert_eq!(xi_product(&left, w, p).unwrap(), SchurElement::basis(field(p), w.clone()));
        }
    }
}
