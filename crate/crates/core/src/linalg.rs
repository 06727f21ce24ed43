//! Dense matrices over `F_p` with deterministic Gaussian elimination.
//!
//! Pivots are always chosen as the first nonzero entry in the current
//! column, scanning rows top to bottom, so every rank, kernel and echelon
//! form is reproducible bit for bit.

use std::fmt;

use crate::fp::PrimeField;

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {}", self.rows, self.cols, self.field.p())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1 % field.p());
        }
        m
    }

    /// Builds a matrix from rows; entries are reduced mod `p`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v % field.p());
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_to(&mut self, r: usize, c: usize, v: u32) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add(self.data[i], v);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Adds `scale * block` into the window starting at `(row, col)`.
    pub fn add_block(&mut self, row: usize, col: usize, block: &FpMatrix, scale: u32) {
        if scale == 0 {
            return;
        }
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                let v = block.get(r, c);
                if v != 0 {
                    self.add_to(row + r, col + c, self.field.mul(v, scale));
                }
            }
        }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = self.field.p() as u64;
        let mut out = FpMatrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * other.get(k, c) as u64) % p;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out.set(r, c, v as u32);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for (c, &x) in v.iter().enumerate() {
                    if x != 0 {
                        acc = (acc + self.get(r, c) as u64 * x as u64) % p;
                    }
                }
                acc as u32
            })
            .collect()
    }

    /// Brings the matrix to (reduced, if asked) row echelon form in place and
    /// returns the pivot columns. Nonzero rows end up first.
    pub fn echelonize(&mut self, reduced: bool) -> Vec<usize> {
        let f = self.field;
        let p = f.p() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..cols {
            if next == self.rows {
                break;
            }
            let Some(found) = (next..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if found != next {
                for k in 0..cols {
                    self.data.swap(found * cols + k, next * cols + k);
                }
            }
            let inv = f.inv(self.get(next, c)).expect("pivot is nonzero");
            for k in c..cols {
                let i = next * cols + k;
                self.data[i] = f.mul(self.data[i], inv);
            }
            let start = if reduced { 0 } else { next + 1 };
            for r in start..self.rows {
                if r == next {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                let neg = (p - factor as u64) % p;
                for k in c..cols {
                    let pv = self.data[next * cols + k];
                    if pv != 0 {
                        let i = r * cols + k;
                        self.data[i] = ((self.data[i] as u64 + neg * pv as u64) % p) as u32;
                    }
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = self.clone();
        m.echelonize(false).len()
    }

    /// Basis of the right null space `{ v : M v = 0 }`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.echelonize(true);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1 % f.p();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(row, free));
            }
            basis.push(v);
        }
        basis
    }
}

/// A subspace of `F_p^n` held in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let mut m = FpMatrix::from_rows(field, ambient, vectors);
        let pivots = m.echelonize(true);
        let basis = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears the pivot coordinates of `v` using the echelon basis.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            for (slot, &x) in v.iter_mut().zip(row) {
                if x != 0 {
                    *slot = f.sub(*slot, f.mul(c, x));
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates that index a basis of the quotient `F_p^n / self`.
    pub fn complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Image of `v` in the quotient, in the coordinates of [`Self::complement`].
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        self.complement().into_iter().map(|c| w[c]).collect()
    }
}

/// Incremental sparse row reduction. Each stored row is monic at its
/// leading (smallest) column; [`SparseEchelon::into_reduced`] back-substitutes
/// to reduced echelon form.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Option<Vec<(usize, u32)>>>,
    rank: usize,
}

impl SparseEchelon {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        SparseEchelon {
            field,
            ambient,
            rows: vec![None; ambient],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Reduces `v` (sparse, any order, repeated columns allowed) against the
    /// stored rows and keeps the remainder if nonzero. Returns whether the
    /// rank grew.
    pub fn insert(&mut self, v: &[(usize, u32)]) -> bool {
        let f = self.field;
        let mut cur = std::collections::BTreeMap::new();
        for &(c, x) in v {
            debug_assert!(c < self.ambient);
            let slot = cur.entry(c).or_insert(0u32);
            *slot = f.add(*slot, x % f.p());
        }
        cur.retain(|_, x| *x != 0);
        while let Some((&lead, &coef)) = cur.iter().next() {
            match &self.rows[lead] {
                Some(row) => {
                    let neg = f.neg(coef);
                    for &(c, x) in row {
                        let slot = cur.entry(c).or_insert(0);
                        *slot = f.add(*slot, f.mul(neg, x));
                        if *slot == 0 {
                            cur.remove(&c);
                        }
                    }
                }
                None => {
                    let inv = f.inv(coef).expect("nonzero");
                    let row = cur.into_iter().map(|(c, x)| (c, f.mul(x, inv))).collect();
                    self.rows[lead] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|&c| self.rows[c].is_some()).collect()
    }

    /// Reduced echelon rows keyed by pivot column: each row has a 1 at its
    /// pivot and zeros at every other pivot column.
    pub fn into_reduced(mut self) -> Vec<(usize, Vec<(usize, u32)>)> {
        let f = self.field;
        let pivots = self.pivots();
        for &pc in pivots.iter().rev() {
            let row = self.rows[pc].take().expect("pivot row");
            let mut cur: std::collections::BTreeMap<usize, u32> = row.into_iter().collect();
            let later: Vec<usize> = cur
                .keys()
                .copied()
                .filter(|&c| c != pc && self.rows[c].is_some())
                .collect();
            for c in later {
                let coef = match cur.get(&c) {
                    Some(&x) if x != 0 => x,
                    _ => continue,
                };
                let neg = f.neg(coef);
                for &(k, x) in self.rows[c].as_ref().expect("reduced row") {
                    let slot = cur.entry(k).or_insert(0);
                    *slot = f.add(*slot, f.mul(neg, x));
                }
            }
            let row = cur.into_iter().filter(|&(_, x)| x != 0).collect();
            self.rows[pc] = Some(row);
        }
        pivots
            .into_iter()
            .map(|pc| (pc, self.rows[pc].take().expect("pivot row")))
            .collect()
    }
}

/// A row-major sparse matrix over `F_p` with sorted, nonzero entries.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, u32)>>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SparseMatrix {}x{} mod {} ({} nonzeros)",
            self.rows,
            self.cols,
            self.field.p(),
            self.nnz()
        )
    }
}

impl SparseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    /// Sums duplicate `(row, col, value)` triplets; zeros are dropped.
    pub fn from_triplets(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut triplets: Vec<(usize, usize, u32)>,
    ) -> Self {
        triplets.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut data = vec![Vec::new(); rows];
        let mut iter = triplets.into_iter().peekable();
        while let Some((r, c, v)) = iter.next() {
            assert!(r < rows && c < cols, "triplet out of bounds");
            let mut acc = v % field.p();
            while let Some(&(r2, c2, v2)) = iter.peek() {
                if (r2, c2) != (r, c) {
                    break;
                }
                acc = field.add(acc, v2 % field.p());
                iter.next();
            }
            if acc != 0 {
                data[r].push((c, acc));
            }
        }
        SparseMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_dense(m: &FpMatrix) -> Self {
        let mut out = Self::zeros(m.field(), m.rows(), m.cols());
        for r in 0..m.rows() {
            out.data[r] = m
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c, v))
                .collect();
        }
        out
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, u32)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        match self.data[r].binary_search_by_key(&c, |&(k, _)| k) {
            Ok(i) => self.data[r][i].1,
            Err(_) => 0,
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.field, self.rows, self.cols);
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        let mut acc: std::collections::BTreeMap<usize, u32> = std::collections::BTreeMap::new();
        for (r, row) in self.data.iter().enumerate() {
            acc.clear();
            for &(k, a) in row {
                for &(c, b) in &other.data[k] {
                    let slot = acc.entry(c).or_insert(0);
                    *slot = f.add(*slot, f.mul(a, b));
                }
            }
            out.data[r] = acc.iter().filter(|(_, &v)| v != 0).map(|(&c, &v)| (c, v)).collect();
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = SparseEchelon::new(self.field, self.cols);
        for row in &self.data {
            if !row.is_empty() {
                ech.insert(row);
                if ech.rank() == self.cols {
                    break;
                }
            }
        }
        ech.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_and_kernel_small() {
        let m = FpMatrix::from_rows(f(3), 3, &[vec![1, 2, 0], vec![2, 1, 0]]);
        // second row = 2 * first row mod 3
        assert_eq!(m.rank(), 1);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn empty_shapes() {
        let m = FpMatrix::zeros(f(2), 0, 4);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel().len(), 4);
        let m = FpMatrix::zeros(f(2), 3, 0);
        assert_eq!(m.rank(), 0);
        assert!(m.kernel().is_empty());
    }

    #[test]
    fn subspace_projection() {
        let s = Subspace::span(f(5), 3, &[vec![1, 1, 0], vec![2, 2, 0]]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.complement(), vec![1, 2]);
        assert!(s.contains(&[3, 3, 0]));
        assert_eq!(s.project(&[1, 0, 0]), vec![4, 0]);
    }

    #[test]
    fn sparse_matches_dense() {
        let field = f(5);
        let rows = vec![vec![0, 2, 1, 0], vec![0, 4, 2, 0], vec![3, 0, 0, 1], vec![3, 2, 1, 1]];
        let mut sp = SparseEchelon::new(field, 4);
        for r in &rows {
            let v: Vec<(usize, u32)> = r.iter().copied().enumerate().filter(|&(_, x)| x != 0).collect();
            sp.insert(&v);
        }
        let dense = Subspace::span(field, 4, &rows);
        assert_eq!(sp.pivots(), dense.pivots());
        let reduced = sp.into_reduced();
        for ((pc, row), basis) in reduced.iter().zip(dense.basis()) {
            let mut full = vec![0u32; 4];
            for &(c, x) in row {
                full[c] = x;
            }
            assert_eq!(full[*pc], 1);
            assert_eq!(&full, basis);
        }
    }

    #[test]
    fn sparse_matrix_basics() {
        let field = f(3);
        let a = SparseMatrix::from_triplets(field, 2, 3, vec![(0, 0, 1), (0, 0, 1), (1, 2, 2), (1, 1, 3)]);
        assert_eq!(a.get(0, 0), 2);
        assert_eq!(a.get(1, 1), 0);
        assert_eq!(a.nnz(), 2);
        let d = a.to_dense();
        assert_eq!(SparseMatrix::from_dense(&d), a);
        let b = SparseMatrix::from_dense(&FpMatrix::identity(field, 3));
        assert_eq!(a.mul(&b), a);
        assert_eq!(a.rank(), 2);
    }

    proptest! {
        #[test]
        fn sparse_product_and_rank(rows in 0usize..6, mid in 0usize..6, cols in 0usize..6, seed in prop::collection::vec(0u32..5, 72)) {
            let field = f(5);
            let mut a = FpMatrix::zeros(field, rows, mid);
            let mut b = FpMatrix::zeros(field, mid, cols);
            for r in 0..rows { for c in 0..mid { a.set(r, c, seed[r * 6 + c]); } }
            for r in 0..mid { for c in 0..cols { b.set(r, c, seed[36 + r * 6 + c]); } }
            let (sa, sb) = (SparseMatrix::from_dense(&a), SparseMatrix::from_dense(&b));
            prop_assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
            prop_assert_eq!(sa.rank(), a.rank());
        }

        #[test]
        fn sparse_echelon_agrees(rows in 0usize..7, seed in prop::collection::vec(0u32..3, 42)) {
            let field = f(3);
            let dense_rows: Vec<Vec<u32>> = (0..rows).map(|r| seed[r * 6..r * 6 + 6].to_vec()).collect();
            let mut sp = SparseEchelon::new(field, 6);
            for r in &dense_rows {
                let v: Vec<(usize, u32)> = r.iter().copied().enumerate().collect();
                sp.insert(&v);
            }
            let dense = Subspace::span(field, 6, &dense_rows);
            prop_assert_eq!(sp.rank(), dense.dim());
            let reduced = sp.into_reduced();
            for ((_, row), basis) in reduced.iter().zip(dense.basis()) {
                let mut full = vec![0u32; 6];
                for &(c, x) in row { full[c] = x; }
                prop_assert_eq!(&full, basis);
            }
        }

        #[test]
        fn rank_nullity(rows in 0usize..7, cols in 0usize..7, seed in prop::collection::vec(0u32..7, 49)) {
            let field = f(7);
            let mut m = FpMatrix::zeros(field, rows, cols);
            for r in 0..rows { for c in 0..cols { m.set(r, c, seed[r * 7 + c]); } }
            let ker = m.kernel();
            prop_assert_eq!(m.rank() + ker.len(), cols);
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
            prop_assert_eq!(m.transpose().rank(), m.rank());
        }
    }
}
