//! Arithmetic in the prime field `F_p` and binomial / multinomial
//! coefficients reduced mod `p`.
//!
//! Binomials are evaluated digit by digit in base `p` (Lucas), so no
//! intermediate value ever exceeds a machine word. Every multinomial in the
//! crate goes through [`PrimeField::multinomial`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported characteristic.
pub const MAX_PRIME: u64 = 1 << 16;

/// A prime field `F_p`, `p <= 2^16`. Cheap to copy; carries no tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    #[inline]
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// Centered representative in `(-p/2, p/2]`, used for display.
    pub fn to_signed(self, x: u32) -> i64 {
        let x = x as i64;
        let p = self.p as i64;
        if x > p / 2 {
            x - p
        } else {
            x
        }
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    /// `(-1)^k` as a field element.
    #[inline]
    pub fn sign(self, k: usize) -> u32 {
        if k % 2 == 0 {
            1 % self.p
        } else {
            self.neg(1 % self.p)
        }
    }

    /// `C(a, b)` with `a, b < p`.
    fn small_binomial(self, a: u64, b: u64) -> u32 {
        if b > a {
            return 0;
        }
        let b = b.min(a - b);
        let mut num = 1u32;
        let mut den = 1u32;
        for i in 0..b {
            num = self.mul(num, self.reduce(a - i));
            den = self.mul(den, self.reduce(i + 1));
        }
        // den is a product of integers in [1, p), hence invertible.
        self.mul(num, self.inv(den).expect("nonzero denominator"))
    }

    /// `C(a, b) mod p` via base-`p` digits.
    pub fn binomial(self, mut a: u64, mut b: u64) -> u32 {
        if b > a {
            return 0;
        }
        let p = self.p as u64;
        let mut acc = 1 % self.p;
        while b > 0 {
            let (ad, bd) = (a % p, b % p);
            if bd > ad {
                return 0;
            }
            acc = self.mul(acc, self.small_binomial(ad, bd));
            a /= p;
            b /= p;
        }
        acc
    }

    /// `a! / (a_1! ... a_s!) mod p` as the telescoping product
    /// `C(a, a_1) C(a - a_1, a_2) ...`. Requires `sum(parts) == a`.
    pub fn multinomial(self, a: u64, parts: &[u64]) -> Result<u32> {
        let total: u64 = parts.iter().sum();
        if total != a {
            return Err(Error::invalid(format!(
                "multinomial parts sum to {total}, expected {a}"
            )));
        }
        Ok(self.multinomial_unchecked(parts))
    }

    /// Multinomial coefficient of `parts`, top taken to be their sum.
    pub fn multinomial_unchecked(self, parts: &[u64]) -> u32 {
        let mut rest: u64 = parts.iter().sum();
        let mut acc = 1 % self.p;
        for &part in parts {
            if part == 0 {
                continue;
            }
            acc = self.mul(acc, self.binomial(rest, part));
            if acc == 0 {
                return 0;
            }
            rest -= part;
        }
        acc
    }

    pub fn element(self, value: u64) -> FpElement {
        FpElement {
            value: self.reduce(value),
            field: self,
        }
    }
}

/// An element of `F_p` that remembers its field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    value: u32,
    field: PrimeField,
}

impl FpElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn p(self) -> u32 {
        self.field.p
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FpElement> {
        self.field.inv(self.value).map(|value| FpElement {
            value,
            field: self.field,
        })
    }

    fn check(self, other: FpElement) {
        assert_eq!(self.field, other.field, "mixed characteristics");
    }
}

impl fmt::Debug for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.field.p)
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        self.check(rhs);
        FpElement {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        self.check(rhs);
        FpElement {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        self.check(rhs);
        FpElement {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        FpElement {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

/// `C(a, b) mod p`; zero when `b > a`.
pub fn fp_binomial(a: u64, b: u64, p: u64) -> Result<FpElement> {
    let field = PrimeField::new(p)?;
    Ok(FpElement {
        value: field.binomial(a, b),
        field,
    })
}

/// `a! / (a_1! ... a_s!) mod p`.
pub fn fp_multinomial(a: u64, parts: &[u64], p: u64) -> Result<FpElement> {
    let field = PrimeField::new(p)?;
    Ok(FpElement {
        value: field.multinomial(a, parts)?,
        field,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn big_binomial(a: u64, b: u64) -> BigUint {
        if b > a {
            return BigUint::from(0u32);
        }
        let mut acc = BigUint::from(1u32);
        for i in 0..b {
            acc = acc * BigUint::from(a - i) / BigUint::from(i + 1);
        }
        acc
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(fp_binomial(4, 4, 5).unwrap().value(), 1);
        assert_eq!(fp_binomial(7, 2, 3).unwrap().value(), 0);
        assert_eq!(fp_binomial(5, 2, 3).unwrap().value(), 1);
        assert_eq!(fp_binomial(2, 5, 7).unwrap().value(), 0);
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(fp_multinomial(3, &[3], 2).unwrap().value(), 1);
        assert_eq!(fp_multinomial(4, &[2, 1, 1], 3).unwrap().value(), 0);
        assert_eq!(fp_multinomial(2, &[1, 1], 2).unwrap().value(), 0);
    }

    #[test]
    fn configuration_errors() {
        assert_eq!(fp_binomial(3, 1, 4), Err(Error::NotPrime(4)));
        assert_eq!(fp_binomial(3, 1, 1), Err(Error::NotPrime(1)));
        assert!(matches!(
            fp_binomial(3, 1, 65537),
            Err(Error::PrimeTooLarge(_))
        ));
        assert!(matches!(
            fp_multinomial(4, &[1, 1], 3),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn lucas_matches_big_integers() {
        for p in [2u64, 3, 5, 7] {
            let field = PrimeField::new(p).unwrap();
            for a in 0..=60u64 {
                for b in 0..=a {
                    let expected = big_binomial(a, b) % BigUint::from(p);
                    assert_eq!(
                        BigUint::from(field.binomial(a, b)),
                        expected,
                        "C({a},{b}) mod {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn binomial_shift_congruence() {
        for p in [2u64, 3, 5] {
            let field = PrimeField::new(p).unwrap();
            let mut q = p;
            while q <= 27 {
                for a in 0..=30 {
                    for b in 0..q {
                        assert_eq!(field.binomial(a + q, b), field.binomial(a, b));
                    }
                }
                q *= p;
            }
        }
    }

    fn compositions(total: u64, len: usize) -> Vec<Vec<u64>> {
        if len == 1 {
            return vec![vec![total]];
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in compositions(total - first, len - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn multinomial_shift_congruence() {
        for p in [2u64, 3, 5] {
            let field = PrimeField::new(p).unwrap();
            for q in [p, p * p] {
                for a in 0..=20u64 {
                    for len in 1..=3 {
                        for parts in compositions(a, len) {
                            if a - parts[0] >= q {
                                continue;
                            }
                            let mut shifted = parts.clone();
                            shifted[0] += q;
                            assert_eq!(
                                field.multinomial(a + q, &shifted).unwrap(),
                                field.multinomial(a, &parts).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 101, 65521]),
                        a in 0u64..70000, b in 0u64..70000, c in 0u64..70000) {
            let f = PrimeField::new(p).unwrap();
            let (a, b, c) = (f.element(a), f.element(b), f.element(c));
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a - a, f.element(0));
            prop_assert_eq!(a + (-a), f.element(0));
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), f.element(1));
            } else {
                prop_assert!(a.inv().is_none());
            }
        }
    }
}
