//! Pythagorean triples and their `(m, p, q)` parametrization.
//!
//! Every triple `(a, b, c)` with `a² + b² = c²` is one of
//! `(m(q²-p²), 2mpq, m(p²+q²))` or its leg swap, with `q >= 1`, `p <= q`,
//! `p, q` coprime and of distinct parity. Classification follows the unit
//! circle: `(a/c, b/c)` is a rational point, the line through `(-1, 0)` and
//! that point has slope `b/(a+c) = p/q`, and an odd/odd slope is rewritten
//! into the swapped form.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::numeric::{add, distinct_parity, mul, rel_prime, square, Nat, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub a: Nat,
    pub b: Nat,
    pub c: Nat,
}

impl Triple {
    pub const fn new(a: Nat, b: Nat, c: Nat) -> Self {
        Triple { a, b, c }
    }

    /// The same triangle with its legs exchanged.
    pub const fn swapped(self) -> Self {
        Triple {
            a: self.b,
            b: self.a,
            c: self.c,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == 0 || self.b == 0
    }
}

/// Which leg carries the `m(q² - p²)` shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `(m(q²-p²), 2mpq, m(p²+q²))`
    OddFirst,
    /// `(2mpq, m(q²-p²), m(p²+q²))`
    EvenFirst,
}

impl Orientation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Orientation::OddFirst => "odd_first",
            Orientation::EvenFirst => "even_first",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Parametrization {
    pub m: Nat,
    pub p: Nat,
    pub q: Nat,
    pub orientation: Orientation,
}

impl Parametrization {
    pub const ZERO: Parametrization = Parametrization {
        m: 0,
        p: 0,
        q: 1,
        orientation: Orientation::OddFirst,
    };

    /// Builds a parametrization after checking `cond_pq`.
    pub fn new(m: Nat, p: Nat, q: Nat, orientation: Orientation) -> Result<Self> {
        cond_pq(p, q)?;
        Ok(Parametrization {
            m,
            p,
            q,
            orientation,
        })
    }
}

/// `q >= 1`, `p <= q`, `p` and `q` coprime with distinct parities.
pub fn cond_pq(p: Nat, q: Nat) -> Result<()> {
    if q == 0 {
        Err(Error::Domain("q must be positive"))
    } else if p > q {
        Err(Error::Domain("p must not exceed q"))
    } else if !rel_prime(p, q) {
        Err(Error::Domain("p and q must be relatively prime"))
    } else if !distinct_parity(p, q) {
        Err(Error::Domain("p and q must have distinct parities"))
    } else {
        Ok(())
    }
}

pub fn is_pytha(t: Triple) -> Result<bool> {
    Ok(add(square(t.a)?, square(t.b)?)? == square(t.c)?)
}

pub fn generate(param: Parametrization) -> Result<Triple> {
    let Parametrization {
        m,
        p,
        q,
        orientation,
    } = param;
    cond_pq(p, q)?;
    let (p2, q2) = (square(p)?, square(q)?);
    let odd_leg = mul(m, q2 - p2)?;
    let even_leg = mul(mul(2, m)?, mul(p, q)?)?;
    let c = mul(m, add(p2, q2)?)?;
    Ok(match orientation {
        Orientation::OddFirst => Triple::new(odd_leg, even_leg, c),
        Orientation::EvenFirst => Triple::new(even_leg, odd_leg, c),
    })
}

/// Canonical parametrization with `generate(classify(t)) == t`.
pub fn classify(t: Triple) -> Result<Parametrization> {
    if !is_pytha(t)? {
        return Err(Error::NotPythagorean);
    }
    if t.c == 0 {
        return Ok(Parametrization::ZERO);
    }
    let slope = Rational::new(t.b, add(t.a, t.c)?)?;
    let (mut p, mut q) = (slope.num(), slope.den());
    let mut orientation = Orientation::OddFirst;
    if p % 2 == 1 && q % 2 == 1 {
        (p, q) = normalize_odd_odd(p, q)?;
        orientation = Orientation::EvenFirst;
    }
    let norm = add(square(p)?, square(q)?)?;
    if !t.c.is_multiple_of(norm) {
        return Err(Error::InternalNonIntegral);
    }
    Ok(Parametrization {
        m: t.c / norm,
        p,
        q,
        orientation,
    })
}

/// Rational point of the unit circle in the closed first quadrant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CirclePoint {
    x: Rational,
    y: Rational,
}

impl CirclePoint {
    /// Checks `x² + y² = 1` exactly by cross-multiplication in `u128`.
    pub fn new(x: Rational, y: Rational) -> Result<Self> {
        let wide = |a: Nat, b: Nat| a as u128 * b as u128;
        let sq = |v: u128| v.checked_mul(v).ok_or(Error::Overflow);
        let lhs = sq(wide(x.num(), y.den()))?
            .checked_add(sq(wide(y.num(), x.den()))?)
            .ok_or(Error::Overflow)?;
        if lhs != sq(wide(x.den(), y.den()))? {
            return Err(Error::Domain("point is not on the unit circle"));
        }
        Ok(CirclePoint { x, y })
    }

    pub fn x(&self) -> Rational {
        self.x
    }

    pub fn y(&self) -> Rational {
        self.y
    }
}

/// Second intersection of the unit circle with the line of slope `r`
/// through `(-1, 0)`: `((1-r²)/(1+r²), 2r/(1+r²))`.
pub fn circle_point(r: Rational) -> Result<CirclePoint> {
    if !r.at_most_one() {
        return Err(Error::Domain("slope must lie in [0, 1]"));
    }
    let (p, q) = (r.num(), r.den());
    let (p2, q2) = (square(p)?, square(q)?);
    let norm = add(p2, q2)?;
    CirclePoint::new(
        Rational::new(q2 - p2, norm)?,
        Rational::new(mul(2, mul(p, q)?)?, norm)?,
    )
}

/// Slope `y/(x+1)` of the line joining `(-1, 0)` to `pt`.
pub fn slope_of_point(pt: CirclePoint) -> Result<Rational> {
    // Revalidate: the fields are private but a bad point is cheap to reject.
    let pt = CirclePoint::new(pt.x, pt.y)?;
    let (x, y) = (pt.x, pt.y);
    // (yn/yd) / ((xn+xd)/xd)
    Rational::new(
        mul(y.num(), x.den())?,
        mul(y.den(), add(x.num(), x.den())?)?,
    )
}

/// Rewrites an odd/odd slope `p/q` as `((q-p)/2, (q+p)/2)`, which swaps the
/// roles of the two circle coordinates.
pub fn normalize_odd_odd(p: Nat, q: Nat) -> Result<(Nat, Nat)> {
    if p > q {
        return Err(Error::Domain("normalize_odd_odd requires p <= q"));
    }
    if p.is_multiple_of(2) || q.is_multiple_of(2) {
        return Err(Error::Domain("normalize_odd_odd requires p and q odd"));
    }
    if !rel_prime(p, q) {
        return Err(Error::Domain(
            "normalize_odd_odd requires p, q relatively prime",
        ));
    }
    Ok(((q - p) / 2, p + (q - p) / 2))
}

/// All triples with `c <= c_bound` in canonical odd-first form, sorted by
/// `(c, a)`.
pub fn enumerate_triples(
    c_bound: Nat,
    primitive_only: bool,
    include_degenerate: bool,
) -> Result<Vec<Triple>> {
    enumerate_triples_in(0..=c_bound, primitive_only, include_degenerate)
}

/// Like [`enumerate_triples`] restricted to hypotenuses in `c_range`.
///
/// Disjoint ranges yield disjoint outputs, and concatenating the outputs of
/// consecutive ranges gives the output for their union.
pub fn enumerate_triples_in(
    c_range: RangeInclusive<Nat>,
    primitive_only: bool,
    include_degenerate: bool,
) -> Result<Vec<Triple>> {
    let (lo, hi) = (*c_range.start(), *c_range.end());
    let mut out = Vec::new();
    if lo > hi {
        return Ok(out);
    }
    // m = 0 collapses every parametrization onto the zero triple.
    if lo == 0 && include_degenerate && !primitive_only {
        out.push(Triple::new(0, 0, 0));
    }
    let mut q: Nat = 1;
    while square(q)? <= hi {
        for p in 0..q {
            if !(rel_prime(p, q) && distinct_parity(p, q)) {
                continue;
            }
            if p == 0 && !include_degenerate {
                continue;
            }
            let norm = add(square(p)?, square(q)?)?;
            let (m_lo, m_hi) = if primitive_only {
                (1, 1)
            } else {
                (lo.div_ceil(norm).max(1), hi / norm)
            };
            for m in m_lo..=m_hi {
                let t = generate(Parametrization {
                    m,
                    p,
                    q,
                    orientation: Orientation::OddFirst,
                })?;
                if c_range.contains(&t.c) {
                    out.push(t);
                }
            }
        }
        q += 1;
    }
    out.sort_unstable_by_key(|t| (t.c, t.a));
    Ok(out)
}
