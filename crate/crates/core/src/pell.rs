//! Reduction of solutions of `10t² − s² = c` to a bounded set of
//! representatives modulo the unit group.
//!
//! Every solution `s + t√10` is `±(a + b√10)·UNIT^K`, possibly after
//! conjugation, with `(a, b)` on the arc of the hyperbola `10b² − a² = c`
//! where `a + b√10` lies between `√c·(√10 − 3)` and `√c·(√10 + 3)`. That arc
//! is exactly the integer box `a² ≤ 9c`, `c ≤ 10b² `, `b² ≤ c`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::arith::{isqrt, perfect_square_root, quad_compare, quad_mul, QuadInt, UNIT, UNIT_INV};
use crate::error::{Error, Result};

/// Upper bound on unit divisions in one reduction; each step shrinks the
/// value by a factor of about 38.97, so 64 covers all of `i128`.
pub const MAX_REDUCTION_STEPS: u32 = 64;

/// A representative `(a, b)` with `10b² − a² = c`, `a ≥ 0`, `b ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FundamentalPair {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl FundamentalPair {
    pub fn as_quad(&self) -> QuadInt {
        QuadInt::new(self.a as i128, self.b as i128)
    }

    /// Whether the pair lies on the hyperbola inside the box.
    pub fn is_valid(&self) -> bool {
        let (a, b, c) = (self.a as u128, self.b as u128, self.c as u128);
        self.b >= 1 && 10 * b * b == a * a + c && a * a <= 9 * c && c <= 10 * b * b && b * b <= c
    }
}

/// Outcome of [`reduce_solution`].
///
/// `sign · X = (a + b√10) · UNIT^K`, where `X = s + t√10` or, when
/// `conjugated` is set, `X = s − t√10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionResult {
    pub pair: FundamentalPair,
    pub exponent: i64,
    pub sign: i8,
    pub conjugated: bool,
}

impl ReductionResult {
    /// Rebuilds `s + t√10` from the pair, exponent, sign and conjugation.
    pub fn reconstruct(&self) -> Result<QuadInt> {
        let mut x = self.pair.as_quad().times_unit_pow(self.exponent)?;
        if self.sign < 0 {
            x = -x;
        }
        if self.conjugated {
            x = x.conj();
        }
        Ok(x)
    }
}

/// All representatives for `c`, sorted by `b`.
pub fn fundamental_pairs(c: u64) -> Vec<FundamentalPair> {
    if c == 0 {
        return Vec::new();
    }
    let c128 = c as u128;
    // smallest b with 10b² ≥ c
    let mut b_lo = isqrt(c128 / 10);
    while 10 * b_lo * b_lo < c128 {
        b_lo += 1;
    }
    let b_hi = isqrt(c128);
    (b_lo.max(1)..=b_hi)
        .filter_map(|b| {
            let a = perfect_square_root(10 * b * b - c128)?;
            debug_assert!(a * a <= 9 * c128);
            Some(FundamentalPair {
                a: a as u64,
                b: b as u64,
                c,
            })
        })
        .collect()
}

/// Reduces a solution of `10t² − s² = c > 0` to its representative pair.
///
/// Instead of a logarithmic formula for `K`, the value `z = ±(s + t√10)` is
/// divided by `UNIT` while `z² > c·UNIT` and multiplied by it while
/// `z² < c·UNIT⁻¹`; since `UNIT = (3 + √10)²` these are exact tests of
/// `z > √c(3 + √10)` and `z < √c(√10 − 3)`. A final `a < 0` is canonicalized
/// through `−conj(z)`, which flips the sign and negates `K`.
pub fn reduce_solution(s: i128, t: i128) -> Result<ReductionResult> {
    let z0 = QuadInt::new(s, t);
    let c = z0.norm()?.checked_neg().ok_or(Error::Overflow("norm"))?;
    if c <= 0 {
        return Err(Error::NonPositiveNorm(c));
    }
    let c_u64 = u64::try_from(c).map_err(|_| Error::Overflow("reduce_solution"))?;

    let (mut z, sign) = if z0.signum() == Ordering::Greater {
        (z0, 1i8)
    } else {
        (-z0, -1i8)
    };

    let upper = UNIT.checked_scale(c)?;
    let lower = UNIT_INV.checked_scale(c)?;
    let mut exponent: i64 = 0;
    let mut steps = 0u32;
    loop {
        let sq = quad_mul(z, z)?;
        if quad_compare(sq, upper) == Ordering::Greater {
            z = quad_mul(z, UNIT_INV)?;
            exponent += 1;
        } else if quad_compare(sq, lower) == Ordering::Less {
            z = quad_mul(z, UNIT)?;
            exponent -= 1;
        } else {
            break;
        }
        steps += 1;
        if steps > MAX_REDUCTION_STEPS {
            return Err(Error::ReductionDiverged(MAX_REDUCTION_STEPS));
        }
    }

    // z > 0 and z·conj(z) = −c force conj(z) < 0, hence b > 0.
    debug_assert!(z.t > 0);
    let (a, b, sign, exponent, conjugated) = if z.s >= 0 {
        (z.s, z.t, sign, exponent, false)
    } else {
        (-z.s, z.t, -sign, -exponent, true)
    };
    let pair = FundamentalPair {
        a: u64::try_from(a).map_err(|_| Error::Overflow("reduce_solution"))?,
        b: u64::try_from(b).map_err(|_| Error::Overflow("reduce_solution"))?,
        c: c_u64,
    };
    debug_assert!(pair.is_valid());
    Ok(ReductionResult {
        pair,
        exponent,
        sign,
        conjugated,
    })
}

/// Whether `c·(√10 − 3)² ≤ (a + b√10)² ≤ c·(√10 + 3)²` holds exactly.
pub fn in_reduction_box(pair: &FundamentalPair) -> Result<bool> {
    let c = pair.c as i128;
    let sq = quad_mul(pair.as_quad(), pair.as_quad())?;
    Ok(quad_compare(sq, UNIT_INV.checked_scale(c)?) != Ordering::Less
        && quad_compare(sq, UNIT.checked_scale(c)?) != Ordering::Greater)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(c: u64) -> Vec<(u64, u64)> {
        fundamental_pairs(c).iter().map(|p| (p.a, p.b)).collect()
    }

    #[test]
    fn pairs_for_worked_example() {
        assert_eq!(pairs(31), vec![(3, 2)]);
    }

    #[test]
    fn pairs_containing_fallback_seed() {
        assert_eq!(10 * 8 * 8 - 22 * 22, 156);
        assert!(pairs(156).contains(&(22, 8)));
    }

    #[test]
    fn empty_box() {
        // exhaustive scan over b ∈ {1, 2}: 10 − 7 = 3 and 40 − 7 = 33 are not squares
        assert!(pairs(7).is_empty());
        assert!(pairs(0).is_empty());
    }

    #[test]
    fn zero_a_allowed() {
        assert_eq!(pairs(40), vec![(0, 2)]);
        assert_eq!(pairs(10), vec![(0, 1)]);
    }

    #[test]
    fn pairs_match_rectangle_scan() {
        for c in 1..=2000u64 {
            let mut brute = Vec::new();
            for b in 1..=50u64 {
                for a in 0..=150u64 {
                    if 10 * b * b == a * a + c && a * a <= 9 * c && b * b <= c {
                        brute.push((a, b));
                    }
                }
            }
            assert_eq!(pairs(c), brute, "c = {c}");
            for p in fundamental_pairs(c) {
                assert!(p.is_valid());
                assert!(in_reduction_box(&p).unwrap(), "{p:?}");
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_solution(177, 56).unwrap();
        assert_eq!((r.pair.a, r.pair.b, r.pair.c), (3, 2, 31));
        assert_eq!((r.exponent, r.sign, r.conjugated), (1, 1, false));

        let r = reduce_solution(3, 2).unwrap();
        assert_eq!((r.pair.a, r.pair.b, r.exponent, r.sign), (3, 2, 0, 1));

        let seed = QuadInt::new(3, 2).checked_mul(UNIT.checked_pow(5).unwrap()).unwrap();
        let r = reduce_solution(seed.s, seed.t).unwrap();
        assert_eq!((r.pair.a, r.pair.b, r.exponent, r.sign), (3, 2, 5, 1));
        assert_eq!(r.reconstruct().unwrap(), seed);
    }

    #[test]
    fn reduce_negative_and_conjugate_inputs() {
        let r = reduce_solution(-177, -56).unwrap();
        assert_eq!((r.pair.a, r.pair.b, r.exponent, r.sign), (3, 2, 1, -1));
        // 3 − 2√10 = −(−3 + 2√10): the pair (−3, 2) canonicalizes through conjugation.
        let r = reduce_solution(3, -2).unwrap();
        assert_eq!((r.pair.a, r.pair.b), (3, 2));
        assert!(r.conjugated);
        assert_eq!(r.reconstruct().unwrap(), QuadInt::new(3, -2));
    }

    #[test]
    fn reduce_rejects_bad_norm() {
        assert_eq!(reduce_solution(1, 0), Err(Error::NonPositiveNorm(-1)));
        assert_eq!(reduce_solution(0, 0), Err(Error::NonPositiveNorm(0)));
    }

    #[test]
    fn reduce_square_c_boundary_pair() {
        // c = 49: (21, 7) sits on the upper boundary of the box.
        let p = FundamentalPair { a: 21, b: 7, c: 49 };
        assert!(p.is_valid());
        for j in 0..6 {
            let z = p.as_quad().times_unit_pow(j).unwrap();
            let r = reduce_solution(z.s, z.t).unwrap();
            assert_eq!((r.pair, r.exponent, r.sign, r.conjugated), (p, j, 1, false));
        }
    }
}
