//! Natural-number arithmetic, reduced rationals, and the coprimality
//! propositions the descent relies on.
//!
//! The propositions are exposed as *checked evaluations*: each validates its
//! preconditions and then evaluates the conclusion instead of assuming it.
//! The test suites are what establish them over bounded ranges.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Nonnegative integer. Every operation on it in this crate is checked.
pub type Nat = u64;

pub(crate) fn add(a: Nat, b: Nat) -> Result<Nat> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: Nat, b: Nat) -> Result<Nat> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn square(a: Nat) -> Result<Nat> {
    mul(a, a)
}

pub(crate) fn sub(a: Nat, b: Nat, what: &'static str) -> Result<Nat> {
    a.checked_sub(b).ok_or(Error::Domain(what))
}

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(mut a: Nat, mut b: Nat) -> Nat {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn rel_prime(a: Nat, b: Nat) -> bool {
    gcd(a, b) == 1
}

/// Exactly one of `a`, `b` is even (zero counts as even).
pub fn distinct_parity(a: Nat, b: Nat) -> bool {
    (a % 2) != (b % 2)
}

/// `⌊√n⌋` by Newton iteration on integers.
pub fn isqrt(n: Nat) -> Nat {
    if n < 2 {
        return n;
    }
    // 2^ceil(bits/2) is always >= sqrt(n), so the iteration decreases
    // monotonically onto the floor.
    let bits = 64 - n.leading_zeros();
    let mut x: Nat = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// The square root of `n` when `n` is a perfect square.
pub fn is_square(n: Nat) -> Option<Nat> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Reduced fraction `num/den` with `den >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Nat,
    den: Nat,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: Nat, den: Nat) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(num, den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> Nat {
        self.num
    }

    pub fn den(&self) -> Nat {
        self.den
    }

    /// `self <= 1`.
    pub fn at_most_one(&self) -> bool {
        self.num <= self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

pub fn make_rational(num: Nat, den: Nat) -> Result<Rational> {
    Rational::new(num, den)
}

/// For coprime `n < m` of distinct parity, `m + n` and
/// `m - n` are coprime.
pub fn prop1_holds(m: Nat, n: Nat) -> Result<bool> {
    if n >= m {
        return Err(Error::Domain("prop1 requires n < m"));
    }
    if !rel_prime(m, n) {
        return Err(Error::Domain("prop1 requires m, n relatively prime"));
    }
    if !distinct_parity(m, n) {
        return Err(Error::Domain("prop1 requires m, n of distinct parity"));
    }
    Ok(rel_prime(add(m, n)?, m - n))
}

/// For coprime `n <= m`, `m²` and `n²` are coprime, and so
/// are `m` and `n` with `m² - n²`.
pub fn prop2_holds(m: Nat, n: Nat) -> Result<bool> {
    if n > m {
        return Err(Error::Domain("prop2 requires n <= m"));
    }
    if !rel_prime(m, n) {
        return Err(Error::Domain("prop2 requires m, n relatively prime"));
    }
    let (m2, n2) = (square(m)?, square(n)?);
    let diff = m2 - n2;
    Ok(rel_prime(m2, n2) && rel_prime(m, diff) && rel_prime(n, diff))
}

/// Coprime squares have coprime roots.
pub fn prop3_holds(m: Nat, n: Nat) -> Result<bool> {
    if !rel_prime(square(m)?, square(n)?) {
        return Err(Error::Domain("prop3 requires m^2, n^2 relatively prime"));
    }
    Ok(rel_prime(m, n))
}

/// Pairwise coprime factors whose product is a square are
/// each squares. Returns the roots in input order.
pub fn prop4_decompose(factors: &[Nat]) -> Result<Vec<Nat>> {
    for (i, &a) in factors.iter().enumerate() {
        for (j, &b) in factors.iter().enumerate().skip(i + 1) {
            if !rel_prime(a, b) {
                return Err(Error::NotPairwiseCoprime {
                    first: i,
                    second: j,
                });
            }
        }
    }
    let product = factors.iter().try_fold(1, |acc, &f| mul(acc, f))?;
    if is_square(product).is_none() {
        return Err(Error::ProductNotSquare);
    }
    factors
        .iter()
        .enumerate()
        .map(|(index, &f)| is_square(f).ok_or(Error::InternalNotSquare { index }))
        .collect()
}

/// Gauss's theorem: if `d | ab` and `gcd(a, d) = 1` then `d | b`.
pub fn gauss_divides(d: Nat, a: Nat, b: Nat) -> Result<bool> {
    if d == 0 {
        return Err(Error::Domain("gauss requires d >= 1"));
    }
    if !rel_prime(a, d) {
        return Err(Error::Domain("gauss requires a, d relatively prime"));
    }
    if mul(a, b)? % d != 0 {
        return Err(Error::Domain("gauss requires d to divide a*b"));
    }
    Ok(b.is_multiple_of(d))
}
