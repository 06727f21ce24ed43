use std::fmt;

use super::matrix::contingency;
use super::{Composition, MatrixWeight, Partition, Shift};
use crate::error::{Error, Result};

/// A row-semistandard tableau, stored by entry counts: `counts[i][j]` is the
/// number of entries `i+1` in row `j+1`.
///
/// The count matrix is exactly `ω(T)`: its column sums are the shape and its
/// row sums the weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    counts: MatrixWeight,
}

impl Tableau {
    /// The inverse of [`Tableau::matrix`]; fails unless `ω¹` equals `shape`.
    pub fn from_matrix(shape: &Partition, omega: MatrixWeight) -> Result<Self> {
        if omega.n() != shape.n() || &omega.col_sums() != shape.composition() {
            return Err(Error::invalid(format!(
                "matrix {omega} has column sums {}, not the shape {shape}",
                omega.col_sums()
            )));
        }
        Ok(Tableau {
            shape: shape.clone(),
            counts: omega,
        })
    }

    /// Builds from explicit rows of 1-based entries; each row is sorted, since
    /// entries within a row commute.
    pub fn from_rows(rows: &[Vec<u32>], n: usize) -> Result<Self> {
        if rows.len() > n {
            return Err(Error::invalid(format!("{} rows do not fit in n={n}", rows.len())));
        }
        let mut counts = MatrixWeight::zeros(n);
        let mut shape = vec![0u32; n];
        for (j, row) in rows.iter().enumerate() {
            shape[j] = row.len() as u32;
            for &e in row {
                if e == 0 || e as usize > n {
                    return Err(Error::invalid(format!("entry {e} outside 1..={n}")));
                }
                let i = e as usize - 1;
                counts.set(i, j, counts.get(i, j) + 1);
            }
        }
        let shape = Partition::new(shape)?;
        Ok(Tableau { shape, counts })
    }

    /// Parses `"1,2/2,2"`; `n` defaults to the larger of the row count and
    /// the largest entry.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                let row = row.trim();
                if row.is_empty() {
                    return Ok(Vec::new());
                }
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let max_entry = rows.iter().flatten().copied().max().unwrap_or(1) as usize;
        let n = n.unwrap_or_else(|| rows.len().max(max_entry));
        Tableau::from_rows(&rows, n).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical tableau `T_μ`: row `j` filled with `j`.
    pub fn canonical(shape: &Partition) -> Self {
        Tableau {
            shape: shape.clone(),
            counts: MatrixWeight::diag(shape.composition()),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.counts.n()
    }

    /// `ω(T)`.
    pub fn matrix(&self) -> &MatrixWeight {
        &self.counts
    }

    pub fn into_matrix(self) -> MatrixWeight {
        self.counts
    }

    pub fn weight(&self) -> Composition {
        self.counts.row_sums()
    }

    /// Number of entries `entry` (1-based) in row `row` (1-based).
    pub fn count(&self, entry: usize, row: usize) -> u32 {
        self.counts.get(entry - 1, row - 1)
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        (0..n)
            .map(|j| {
                (0..n)
                    .flat_map(|i| std::iter::repeat(i as u32 + 1).take(self.counts.get(i, j) as usize))
                    .collect()
            })
            .collect()
    }

    pub fn is_semistandard(&self) -> bool {
        is_semistandard_matrix(&self.counts)
    }

    /// `T⁺`: the shift amount of extra 1's at the start of the top row.
    pub fn plus_shift(&self, shift: Shift) -> Tableau {
        Tableau {
            shape: self.shape.plus_shift(shift),
            counts: self.counts.plus_shift(shift),
        }
    }

    pub fn minus_shift(&self, shift: Shift) -> Option<Tableau> {
        Some(Tableau {
            shape: self.shape.minus_shift(shift)?,
            counts: self.counts.minus_shift(shift)?,
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .into_iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Column strictness in count form: for every row `j > 1` and value `v`,
/// the number of entries `<= v` in row `j` is at most the number of entries
/// `< v` in row `j - 1`.
pub(crate) fn is_semistandard_matrix(counts: &MatrixWeight) -> bool {
    let n = counts.n();
    for j in 1..n {
        let (mut above, mut here) = (0u32, 0u32);
        for v in 0..n {
            here += counts.get(v, j);
            if here > above {
                return false;
            }
            above += counts.get(v, j - 1);
        }
    }
    true
}

/// `SST_α(μ)`, ordered by `ω(T)` largest first.
pub fn enumerate_sst(mu: &Partition, alpha: &Composition) -> Vec<Tableau> {
    if mu.n() != alpha.n() || mu.r() != alpha.r() {
        return Vec::new();
    }
    // Semistandard forces ω(T) lower triangular.
    contingency(alpha.parts(), mu.parts(), |i, j| i >= j)
        .into_iter()
        .filter(is_semistandard_matrix)
        .map(|counts| Tableau {
            shape: mu.clone(),
            counts,
        })
        .collect()
}

/// `T ↦ ω(T)`.
pub fn tableau_to_matrix(t: &Tableau) -> MatrixWeight {
    t.matrix().clone()
}

/// `ω ↦ T(ω)`, rejecting matrices whose column sums are not `shape`.
pub fn matrix_to_tableau(shape: &Partition, omega: &MatrixWeight) -> Result<Tableau> {
    Tableau::from_matrix(shape, omega.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{enumerate_compositions, enumerate_omega, enumerate_partitions};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    /// Semistandardness checked on explicit rows, independent of the count form.
    fn brute_semistandard(t: &Tableau) -> bool {
        let rows = t.rows();
        for j in 1..rows.len() {
            for (k, e) in rows[j].iter().enumerate() {
                if rows[j - 1].get(k).map_or(true, |above| above >= e) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn sst_examples() {
        let sst = enumerate_sst(&part("2,1,0"), &comp("1,1,1"));
        let shown: Vec<String> = sst.iter().map(|t| t.to_string()).collect();
        assert_eq!(sst.len(), 2);
        assert!(shown.contains(&"1,2/3".to_string()));
        assert!(shown.contains(&"1,3/2".to_string()));

        let mu = part("3,2,1");
        let sst = enumerate_sst(&mu, mu.composition());
        assert_eq!(sst, vec![Tableau::canonical(&mu)]);

        assert!(enumerate_sst(&part("2,2"), &comp("1,3")).is_empty());
    }

    #[test]
    fn count_form_matches_row_form() {
        for n in 1..=3 {
            for r in 0..=5 {
                for mu in enumerate_partitions(n, r) {
                    for alpha in enumerate_compositions(n, r) {
                        let sst = enumerate_sst(&mu, &alpha);
                        let brute: Vec<Tableau> = enumerate_omega(&alpha, mu.composition())
                            .into_iter()
                            .map(|w| Tableau::from_matrix(&mu, w).unwrap())
                            .filter(brute_semistandard)
                            .collect();
                        assert_eq!(sst, brute, "mu={mu} alpha={alpha}");
                        for t in &sst {
                            assert!(t.matrix().is_lower_triangular());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tableau_matrix_bijection() {
        let mu = part("2,2");
        assert_eq!(
            tableau_to_matrix(&Tableau::canonical(&mu)),
            MatrixWeight::diag(mu.composition())
        );
        let t = Tableau::parse("1,2/2,2", None).unwrap();
        let w = tableau_to_matrix(&t);
        assert_eq!(w, "1,0/1,2".parse().unwrap());
        assert_eq!(matrix_to_tableau(&mu, &w).unwrap(), t);
        assert!(matrix_to_tableau(&part("3,1"), &w).is_err());

        // round trip through rows for every row-semistandard filling
        for alpha in enumerate_compositions(3, 4) {
            let mu = part("2,1,1");
            for w in enumerate_omega(&alpha, mu.composition()) {
                let t = matrix_to_tableau(&mu, &w).unwrap();
                let again = Tableau::from_rows(&t.rows(), 3).unwrap();
                assert_eq!(again, t);
                assert_eq!(tableau_to_matrix(&again), w);
            }
        }
    }

    #[test]
    fn parse_normalizes_rows() {
        let t = Tableau::parse("2,1/2,2", Some(2)).unwrap();
        assert_eq!(t.to_string(), "1,2/2,2");
        assert!(Tableau::parse("1,2/1,2,2", None).is_err());
        assert!(Tableau::parse("1,a", None).is_err());
        assert!(Tableau::parse("3", Some(2)).is_err());
    }

    #[test]
    fn shift_examples() {
        let t = Tableau::parse("1,2/2,2", None).unwrap();
        let s = Shift::new(3, 1).unwrap();
        let tp = t.plus_shift(s);
        assert_eq!(tp.shape().parts(), &[5, 2]);
        assert_eq!(tp.count(1, 1), 4);
        assert_eq!(tp.minus_shift(s), Some(t));
    }

    #[test]
    fn sst_shift_bijection() {
        // SST_α(μ) → SST_α⁺(μ⁺) is a bijection whenever μ₂ ≤ α₁.
        for p in [2u64, 3] {
            let s = Shift::new(p, 1).unwrap();
            for n in 1..=3 {
                for r in 0..=5 {
                    for mu in enumerate_partitions(n, r) {
                        for alpha in enumerate_compositions(n, r) {
                            if mu.part(1) > alpha.part(0) {
                                continue;
                            }
                            let lhs: Vec<Tableau> = enumerate_sst(&mu, &alpha)
                                .iter()
                                .map(|t| t.plus_shift(s))
                                .collect();
                            let rhs = enumerate_sst(&mu.plus_shift(s), &alpha.plus_shift(s));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}
