use std::fmt;
use std::str::FromStr;

use super::{Composition, Shift};
use crate::error::{Error, Result};

/// An `n × n` matrix of nonnegative integers, an element of `Λ(n, n; r)`.
///
/// Margins follow the Schur-algebra convention: [`Self::col_sums`] is `ω¹`
/// and [`Self::row_sums`] is `ω²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixWeight {
    n: usize,
    entries: Vec<u32>,
}

impl MatrixWeight {
    pub fn zeros(n: usize) -> Self {
        MatrixWeight {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("weight matrix must be square"));
        }
        Ok(MatrixWeight {
            n,
            entries: rows.concat(),
        })
    }

    pub(crate) fn from_entries(n: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        MatrixWeight { n, entries }
    }

    pub fn diag(nu: &Composition) -> Self {
        let n = nu.n();
        let mut m = Self::zeros(n);
        for (i, &x) in nu.parts().iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, s: usize, t: usize) -> u32 {
        self.entries[s * self.n + t]
    }

    #[inline]
    pub fn set(&mut self, s: usize, t: usize, v: u32) {
        self.entries[s * self.n + t] = v;
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// `ω¹`: `(ω¹)_t = Σ_s ω_st`.
    pub fn col_sums(&self) -> Composition {
        Composition::new(
            (0..self.n)
                .map(|t| (0..self.n).map(|s| self.get(s, t)).sum())
                .collect(),
        )
    }

    /// `ω²`: `(ω²)_s = Σ_t ω_st`.
    pub fn row_sums(&self) -> Composition {
        Composition::new(
            (0..self.n)
                .map(|s| (0..self.n).map(|t| self.get(s, t)).sum())
                .collect(),
        )
    }

    pub fn column(&self, t: usize) -> Vec<u32> {
        (0..self.n).map(|s| self.get(s, t)).collect()
    }

    pub fn transpose(&self) -> MatrixWeight {
        let mut m = Self::zeros(self.n);
        for s in 0..self.n {
            for t in 0..self.n {
                m.set(t, s, self.get(s, t));
            }
        }
        m
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|s| (0..s).all(|t| self.get(s, t) == 0))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|s| (s + 1..self.n).all(|t| self.get(s, t) == 0))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_upper_triangular() && self.is_lower_triangular()
    }

    /// Membership in `Λ¹(n, n; r)`: upper triangular with at least one
    /// nonzero entry strictly above the diagonal.
    pub fn is_strict_upper(&self) -> bool {
        self.is_upper_triangular() && !self.is_diagonal()
    }

    pub fn plus_shift(&self, shift: Shift) -> MatrixWeight {
        let mut m = self.clone();
        m.entries[0] += shift.amount();
        m
    }

    pub fn minus_shift(&self, shift: Shift) -> Option<MatrixWeight> {
        let mut m = self.clone();
        m.entries[0] = m.entries[0].checked_sub(shift.amount())?;
        Some(m)
    }
}

impl fmt::Display for MatrixWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|s| {
                (0..self.n)
                    .map(|t| self.get(s, t).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Rows separated by `/`, entries by `,`: `"1,1/0,0"`.
impl FromStr for MatrixWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| row.parse::<Composition>().map(|c| c.parts().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        MatrixWeight::from_rows(&rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// An `n × n × n` array of nonnegative integers, an element of `Λ(n, n, n; r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor3 {
    n: usize,
    entries: Vec<u32>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Tensor3 {
            n,
            entries: vec![0; n * n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, s: usize, t: usize, q: usize) -> u32 {
        self.entries[(s * self.n + t) * self.n + q]
    }

    #[inline]
    pub fn set(&mut self, s: usize, t: usize, q: usize, v: u32) {
        self.entries[(s * self.n + t) * self.n + q] = v;
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    fn margin(&self, f: impl Fn(usize, usize, usize) -> (usize, usize)) -> MatrixWeight {
        let n = self.n;
        let mut m = MatrixWeight::zeros(n);
        for s in 0..n {
            for t in 0..n {
                for q in 0..n {
                    let (i, j) = f(s, t, q);
                    m.set(i, j, m.get(i, j) + self.get(s, t, q));
                }
            }
        }
        m
    }

    /// `θ¹_{tq} = Σ_s θ_{stq}`.
    pub fn first(&self) -> MatrixWeight {
        self.margin(|_, t, q| (t, q))
    }

    /// `θ²_{sq} = Σ_t θ_{stq}`.
    pub fn second(&self) -> MatrixWeight {
        self.margin(|s, _, q| (s, q))
    }

    /// `θ³_{st} = Σ_q θ_{stq}`.
    pub fn third(&self) -> MatrixWeight {
        self.margin(|s, t, _| (s, t))
    }

    pub fn plus_shift(&self, shift: Shift) -> Tensor3 {
        let mut t = self.clone();
        t.entries[0] += shift.amount();
        t
    }

    pub fn minus_shift(&self, shift: Shift) -> Option<Tensor3> {
        let mut t = self.clone();
        t.entries[0] = t.entries[0].checked_sub(shift.amount())?;
        Some(t)
    }
}

/// All `n × n` nonnegative integer matrices with the given row and column
/// sums whose support lies in `allowed`. Row-major entries, largest first.
pub(crate) fn contingency(
    row_sums: &[u32],
    col_sums: &[u32],
    allowed: impl Fn(usize, usize) -> bool,
) -> Vec<MatrixWeight> {
    let n = row_sums.len();
    assert_eq!(n, col_sums.len());
    let mut out = Vec::new();
    if row_sums.iter().sum::<u32>() != col_sums.iter().sum::<u32>() {
        return out;
    }
    let mask: Vec<bool> = (0..n * n).map(|i| allowed(i / n, i % n)).collect();
    let last_in_row: Vec<Option<usize>> = (0..n)
        .map(|s| (0..n).rev().find(|&t| mask[s * n + t]))
        .collect();
    let last_in_col: Vec<Option<usize>> = (0..n)
        .map(|t| (0..n).rev().find(|&s| mask[s * n + t]))
        .collect();
    if (0..n).any(|s| last_in_row[s].is_none() && row_sums[s] > 0)
        || (0..n).any(|t| last_in_col[t].is_none() && col_sums[t] > 0)
    {
        return out;
    }

    struct State<'a> {
        n: usize,
        mask: &'a [bool],
        last_in_row: &'a [Option<usize>],
        last_in_col: &'a [Option<usize>],
        row_rem: Vec<u32>,
        col_rem: Vec<u32>,
        cur: Vec<u32>,
        out: &'a mut Vec<MatrixWeight>,
    }

    fn go(st: &mut State<'_>, cell: usize) {
        let n = st.n;
        if cell == n * n {
            if st.row_rem.iter().all(|&x| x == 0) && st.col_rem.iter().all(|&x| x == 0) {
                st.out.push(MatrixWeight::from_entries(n, st.cur.clone()));
            }
            return;
        }
        let (s, t) = (cell / n, cell % n);
        if !st.mask[cell] {
            go(st, cell + 1);
            return;
        }
        // Row capacity left to the right of this cell (inclusive).
        let capacity: u32 = (t..n)
            .filter(|&u| st.mask[s * n + u])
            .map(|u| st.col_rem[u])
            .sum();
        if capacity < st.row_rem[s] {
            return;
        }
        let row_last = st.last_in_row[s] == Some(t);
        let col_last = st.last_in_col[t] == Some(s);
        let hi = st.row_rem[s].min(st.col_rem[t]);
        let (lo, hi) = if row_last {
            if st.row_rem[s] > st.col_rem[t] {
                return;
            }
            (st.row_rem[s], st.row_rem[s])
        } else if col_last {
            if st.col_rem[t] > st.row_rem[s] {
                return;
            }
            (st.col_rem[t], st.col_rem[t])
        } else {
            (0, hi)
        };
        if row_last && col_last && st.row_rem[s] != st.col_rem[t] {
            return;
        }
        for v in (lo..=hi).rev() {
            st.cur[cell] = v;
            st.row_rem[s] -= v;
            st.col_rem[t] -= v;
            go(st, cell + 1);
            st.row_rem[s] += v;
            st.col_rem[t] += v;
        }
        st.cur[cell] = 0;
    }

    let mut st = State {
        n,
        mask: &mask,
        last_in_row: &last_in_row,
        last_in_col: &last_in_col,
        row_rem: row_sums.to_vec(),
        col_rem: col_sums.to_vec(),
        cur: vec![0; n * n],
        out: &mut out,
    };
    go(&mut st, 0);
    out
}

/// Returns `(ω¹, ω²)`: column sums, then row sums.
pub fn matrix_margins(w: &MatrixWeight) -> (Composition, Composition) {
    (w.col_sums(), w.row_sums())
}

/// `Ω(α, β)`: matrices with `ω² = α` (row sums) and `ω¹ = β` (column sums).
pub fn enumerate_omega(alpha: &Composition, beta: &Composition) -> Vec<MatrixWeight> {
    if alpha.n() != beta.n() {
        return Vec::new();
    }
    contingency(alpha.parts(), beta.parts(), |_, _| true)
}

/// All `θ` with `θ³ = w` and `θ¹ = pi`.
///
/// For each middle index `t` the slice `(θ_{s t q})_{s,q}` is an independent
/// contingency table with row sums `w_{st}` and column sums `pi_{tq}`; the
/// result is their cartesian product, sorted largest first.
pub fn enumerate_theta(w: &MatrixWeight, pi: &MatrixWeight) -> Vec<Tensor3> {
    let n = w.n();
    if pi.n() != n || w.total() != pi.total() {
        return Vec::new();
    }
    let mut slices = Vec::with_capacity(n);
    for t in 0..n {
        let rows: Vec<u32> = (0..n).map(|s| w.get(s, t)).collect();
        let cols: Vec<u32> = (0..n).map(|q| pi.get(t, q)).collect();
        let tables = contingency(&rows, &cols, |_, _| true);
        if tables.is_empty() {
            return Vec::new();
        }
        slices.push(tables);
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; n];
    loop {
        let mut theta = Tensor3::zeros(n);
        for (t, &k) in pick.iter().enumerate() {
            let m = &slices[t][k];
            for s in 0..n {
                for q in 0..n {
                    theta.set(s, t, q, m.get(s, q));
                }
            }
        }
        out.push(theta);
        let mut t = n;
        loop {
            if t == 0 {
                out.sort_by(|a, b| b.cmp(a));
                return out;
            }
            t -= 1;
            pick[t] += 1;
            if pick[t] < slices[t].len() {
                break;
            }
            pick[t] = 0;
        }
    }
}
