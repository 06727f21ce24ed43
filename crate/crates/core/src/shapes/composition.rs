use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use super::Shift;
use crate::error::{Error, Result};

/// A sequence of nonnegative integers, an element of `Λ(n; r)` with `n` the
/// length and `r` the sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn r(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Pads with trailing zeros to length `n`. Fails if a nonzero part would
    /// be dropped.
    pub fn padded(&self, n: usize) -> Result<Composition> {
        if self.0.iter().skip(n).any(|&x| x != 0) {
            return Err(Error::invalid(format!("{self} does not fit in n={n}")));
        }
        let mut parts = self.0.clone();
        parts.resize(n, 0);
        Ok(Composition(parts))
    }

    /// Number of parts up to the last nonzero one.
    pub fn length(&self) -> usize {
        self.0.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Dominance `self ⊵ other`; both must have the same `n` and `r`.
    pub fn dominates(&self, other: &Composition) -> bool {
        debug_assert_eq!(self.n(), other.n());
        debug_assert_eq!(self.r(), other.r());
        let (mut a, mut b) = (0u32, 0u32);
        for (x, y) in self.0.iter().zip(&other.0) {
            a += x;
            b += y;
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn strictly_dominates(&self, other: &Composition) -> bool {
        self != other && self.dominates(other)
    }

    /// Adds the shift amount to the first part.
    pub fn plus_shift(&self, shift: Shift) -> Composition {
        let mut parts = self.0.clone();
        parts[0] += shift.amount();
        Composition(parts)
    }

    /// Inverse of [`Self::plus_shift`], if the first part is large enough.
    pub fn minus_shift(&self, shift: Shift) -> Option<Composition> {
        let mut parts = self.0.clone();
        parts[0] = parts[0].checked_sub(shift.amount())?;
        Some(Composition(parts))
    }

    /// The weakly decreasing rearrangement.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

/// A weakly decreasing [`Composition`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let c = Composition(parts);
        if !c.is_partition() {
            return Err(Error::invalid(format!("{c} is not weakly decreasing")));
        }
        Ok(Partition(c))
    }

    /// The hook `(a, 1^b)` padded to `n` parts.
    pub fn hook(a: u32, b: usize, n: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::invalid("hook needs a >= 1"));
        }
        let mut parts = vec![a];
        parts.extend(std::iter::repeat(1).take(b));
        Partition::new(parts)?.padded(n)
    }

    pub fn composition(&self) -> &Composition {
        &self.0
    }

    pub fn padded(&self, n: usize) -> Result<Partition> {
        self.0.padded(n).map(Partition)
    }

    pub fn plus_shift(&self, shift: Shift) -> Partition {
        Partition(self.0.plus_shift(shift))
    }

    pub fn minus_shift(&self, shift: Shift) -> Option<Partition> {
        let c = self.0.minus_shift(shift)?;
        c.is_partition().then_some(Partition(c))
    }

    /// If this is a hook `(a, 1^b)`, returns `(a, b)`.
    pub fn as_hook(&self) -> Option<(u32, usize)> {
        let len = self.length();
        let parts = &self.parts()[..len];
        if len == 0 || parts[1..].iter().any(|&x| x != 1) {
            return None;
        }
        Some((parts[0], len - 1))
    }
}

impl Deref for Partition {
    type Target = Composition;
    fn deref(&self) -> &Composition {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c: Composition = s.parse()?;
        Partition::new(c.0)
    }
}

/// Checked dominance `a ⊵ b`.
pub fn dominates(a: &Composition, b: &Composition) -> Result<bool> {
    if a.n() != b.n() || a.r() != b.r() {
        return Err(Error::invalid(format!(
            "dominance needs equal n and r: {a} vs {b}"
        )));
    }
    Ok(a.dominates(b))
}

/// All of `Λ(n; r)`, lexicographically largest first.
pub fn enumerate_compositions(n: usize, r: u32) -> Vec<Composition> {
    fn go(n: usize, r: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if prefix.len() + 1 == n {
            prefix.push(r);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=r).rev() {
            prefix.push(first);
            go(n, r - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    go(n, r, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All partitions of `r` with at most `n` parts, padded to `n`, largest first.
pub fn enumerate_partitions(n: usize, r: u32) -> Vec<Partition> {
    fn go(n: usize, r: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if prefix.len() == n {
            if r == 0 {
                out.push(Partition(Composition(prefix.clone())));
            }
            return;
        }
        for part in (0..=max.min(r)).rev() {
            prefix.push(part);
            go(n, r - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r, r, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All `α ∈ Λ(n; r)` with `α ▷ lam`, in the order of [`enumerate_compositions`].
pub fn enumerate_strictly_dominating(lam: &Composition) -> Vec<Composition> {
    enumerate_compositions(lam.n(), lam.r())
        .into_iter()
        .filter(|a| a.strictly_dominates(lam))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&c(&[2, 0]), &c(&[1, 1])).unwrap());
        assert!(dominates(&c(&[1, 1]), &c(&[1, 1])).unwrap());
        assert!(!dominates(&c(&[1, 2]), &c(&[2, 1])).unwrap());
        assert!(dominates(&c(&[1, 2]), &c(&[1, 1, 1])).is_err());
        assert!(dominates(&c(&[1, 2]), &c(&[1, 1])).is_err());
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(
            enumerate_compositions(2, 2),
            vec![c(&[2, 0]), c(&[1, 1]), c(&[0, 2])]
        );
        assert_eq!(enumerate_compositions(1, 5), vec![c(&[5])]);
        assert_eq!(enumerate_compositions(3, 1).len(), 3);
        for n in 1..5 {
            for r in 0..7u32 {
                let all = enumerate_compositions(n, r);
                // C(r + n - 1, n - 1)
                let mut expected = 1u64;
                for i in 0..(n as u64 - 1) {
                    expected = expected * (r as u64 + n as u64 - 1 - i) / (i + 1);
                }
                assert_eq!(all.len() as u64, expected);
                let mut sorted = all.clone();
                sorted.sort_by(|a, b| b.cmp(a));
                sorted.dedup();
                assert_eq!(sorted, all);
            }
        }
    }

    #[test]
    fn strictly_dominating_examples() {
        assert_eq!(enumerate_strictly_dominating(&c(&[1, 1])), vec![c(&[2, 0])]);
        assert!(enumerate_strictly_dominating(&c(&[4, 0, 0])).is_empty());
        assert_eq!(
            enumerate_strictly_dominating(&c(&[1, 1, 1])),
            vec![c(&[3, 0, 0]), c(&[2, 1, 0]), c(&[2, 0, 1]), c(&[1, 2, 0])]
        );
        let partitions: Vec<_> = enumerate_strictly_dominating(&c(&[1, 1, 1]))
            .into_iter()
            .filter(|a| a.is_partition())
            .collect();
        assert_eq!(partitions, vec![c(&[3, 0, 0]), c(&[2, 1, 0])]);
    }

    #[test]
    fn partitions_and_hooks() {
        assert_eq!(enumerate_partitions(2, 4).len(), 3);
        assert_eq!(enumerate_partitions(4, 4).len(), 5);
        let h = Partition::hook(2, 2, 4).unwrap();
        assert_eq!(h.parts(), &[2, 1, 1, 0]);
        assert_eq!(h.as_hook(), Some((2, 2)));
        assert_eq!("2,2".parse::<Partition>().unwrap().as_hook(), None);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Composition>().is_err());
    }

    #[test]
    fn shift_example() {
        let s = Shift::new(2, 1).unwrap();
        assert_eq!(c(&[1, 1]).plus_shift(s), c(&[3, 1]));
        assert_eq!(c(&[3, 1]).minus_shift(s), Some(c(&[1, 1])));
    }

    #[test]
    fn shift_bijection_on_dominating_sets() {
        for p in [2u64, 3] {
            let s = Shift::new(p, 1).unwrap();
            for n in 1..4 {
                for r in 0..6 {
                    for lam in enumerate_partitions(n, r) {
                        let lhs: Vec<_> = enumerate_compositions(n, r)
                            .into_iter()
                            .filter(|a| a.dominates(&lam))
                            .map(|a| a.plus_shift(s))
                            .collect();
                        let lam_plus = lam.plus_shift(s);
                        let rhs: Vec<_> = enumerate_compositions(n, lam_plus.r())
                            .into_iter()
                            .filter(|b| b.dominates(&lam_plus))
                            .collect();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn dominance_is_a_partial_order(n in 1usize..5, r in 0u32..7, i in 0usize..500, j in 0usize..500, k in 0usize..500) {
            let all = enumerate_compositions(n, r);
            let (a, b, x) = (&all[i % all.len()], &all[j % all.len()], &all[k % all.len()]);
            prop_assert!(a.dominates(a));
            if a.dominates(b) && b.dominates(a) {
                prop_assert_eq!(a, b);
            }
            if a.dominates(b) && b.dominates(x) {
                prop_assert!(a.dominates(x));
            }
        }
    }
}
