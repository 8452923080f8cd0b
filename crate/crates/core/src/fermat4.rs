//! `x⁴ + y⁴ = z⁴` has no positive solutions.
//!
//! After dividing out `gcd(y, z)` a solution needs `z⁴ - y⁴` to be a fourth
//! power, and for coprime `y < z` of distinct parity the state `(y², z²)`
//! is exactly a right-triangle descent state, refuted by
//! [`diophantus20::refute`](crate::diophantus20::refute).

use core::ops::RangeInclusive;

use crate::diophantus20::{refute, DescentState, Refutation, RefutationStage};
use crate::numeric::{add, distinct_parity, gcd, is_square, mul, rel_prime, square, Nat};
use crate::pythagoras::{is_pytha, Triple};
use crate::{Error, Result, Scan};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flt4Candidate {
    pub x: Nat,
    pub y: Nat,
    pub z: Nat,
}

/// `(d, y/d, z/d)` with `d = gcd(y, z)`.
pub fn coprime_reduce(y: Nat, z: Nat) -> Result<(Nat, Nat, Nat)> {
    let d = gcd(y, z);
    if d == 0 {
        return Err(Error::Domain("coprime_reduce requires y, z not both zero"));
    }
    Ok((d, y / d, z / d))
}

fn fourth(n: Nat) -> Result<Nat> {
    square(square(n)?)
}

/// Both refutation routes for a coprime pair: the descent on `(y², z²)`
/// and the direct square test on `(z² + y²)(z² - y²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivRefutation {
    pub state: DescentState,
    /// `(z² + y²)(z² - y²) = z⁴ - y⁴`
    pub value: Nat,
    /// Square root of `value`, if it had one.
    pub direct_root: Option<Nat>,
    pub refutation: Refutation,
}

impl EquivRefutation {
    pub fn stage(&self) -> RefutationStage {
        self.refutation.stage()
    }

    /// Both routes refute: no direct root and a non-internal stage.
    pub fn routes_agree(&self) -> bool {
        self.direct_root.is_none() && !self.stage().is_internal()
    }
}

pub fn dio_equiv_refute(y: Nat, z: Nat) -> Result<EquivRefutation> {
    if y == 0 || y > z {
        return Err(Error::Domain("dio_equiv_refute requires 1 <= y <= z"));
    }
    if !rel_prime(y, z) {
        return Err(Error::Domain(
            "dio_equiv_refute requires y, z relatively prime",
        ));
    }
    if !distinct_parity(y, z) {
        return Err(Error::Domain(
            "dio_equiv_refute requires y, z of distinct parity",
        ));
    }
    let (y2, z2) = (square(y)?, square(z)?);
    let value = mul(add(z2, y2)?, z2 - y2)?;
    let state = DescentState::new(y2, z2)?;
    Ok(EquivRefutation {
        state,
        value,
        direct_root: is_square(value),
        refutation: refute(state)?,
    })
}

/// Whether `(x², y², z²)` is a Pythagorean triple, i.e. `x⁴ + y⁴ = z⁴`.
pub fn pytha_square_view(x: Nat, y: Nat, z: Nat) -> Result<bool> {
    is_pytha(Triple::new(square(x)?, square(y)?, square(z)?))
}

/// Scans `1 <= y < z` with `z` in `z_range` for `z⁴ - y⁴` a fourth power.
pub fn scan_flt4(z_range: RangeInclusive<Nat>) -> Result<Scan<Flt4Candidate>> {
    let mut scan = Scan::empty();
    for z in z_range {
        for y in 1..z {
            scan.checked += 1;
            let (d, yr, zr) = coprime_reduce(y, z)?;
            let diff = fourth(zr)? - fourth(yr)?;
            let Some(root) = is_square(diff) else {
                continue;
            };
            if let Some(xr) = is_square(root) {
                scan.hits.push(Flt4Candidate {
                    x: mul(d, xr)?,
                    y,
                    z,
                });
            }
        }
    }
    Ok(scan)
}

pub fn verify_flt4(bound: Nat) -> Result<Option<Flt4Candidate>> {
    Ok(scan_flt4(1..=bound)?.first())
}
