//! Exact integer primitives.
//!
//! Everything here is integer-only: square roots, modular powers, elements of
//! the ring ℤ[√10] with overflow-checked 128-bit arithmetic, and the signed
//! power subgroup `{±10^m mod p}` used to rule out powers of ten.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The radicand of the ring ℤ[√10].
pub const RADICAND: i128 = 10;

/// Floor square root: the `r` with `r² ≤ n < (r+1)²`.
pub fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

/// Square root of `n` if `n` is a perfect square.
pub fn perfect_square_root(n: u128) -> Option<u128> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// `base^exponent mod m`, result in `[0, m)`. Negative bases are reduced first.
pub fn mod_pow(base: i128, mut exponent: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let m128 = m as u128;
    let mut acc: u128 = 1;
    let mut sq = base.rem_euclid(m as i128) as u128;
    while exponent > 0 {
        if exponent & 1 == 1 {
            acc = acc * sq % m128;
        }
        sq = sq * sq % m128;
        exponent >>= 1;
    }
    Ok(acc as u64)
}

/// Deterministic primality by trial division. Moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `10^x` as a `u128`, or `None` past `10^38`.
pub fn pow10(x: u32) -> Option<u128> {
    10u128.checked_pow(x)
}

/// An element `s + t·√10` of ℤ[√10].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadInt {
    pub s: i128,
    pub t: i128,
}

/// The fundamental unit `19 + 6√10`, of norm `+1`.
pub const UNIT: QuadInt = QuadInt { s: 19, t: 6 };

/// Inverse of [`UNIT`], its conjugate `19 − 6√10`.
pub const UNIT_INV: QuadInt = QuadInt { s: 19, t: -6 };

impl QuadInt {
    pub const ONE: QuadInt = QuadInt { s: 1, t: 0 };

    pub const fn new(s: i128, t: i128) -> Self {
        QuadInt { s, t }
    }

    /// `s − t√10`.
    pub fn conj(self) -> Self {
        QuadInt { s: self.s, t: -self.t }
    }

    /// Field norm `s² − 10t²`.
    pub fn norm(self) -> Result<i128> {
        let s2 = self.s.checked_mul(self.s);
        let t2 = self
            .t
            .checked_mul(self.t)
            .and_then(|v| v.checked_mul(RADICAND));
        match (s2, t2) {
            (Some(a), Some(b)) => a.checked_sub(b).ok_or(Error::Overflow("norm")),
            _ => Err(Error::Overflow("norm")),
        }
    }

    pub fn checked_mul(self, rhs: QuadInt) -> Result<QuadInt> {
        quad_mul(self, rhs)
    }

    /// Multiply by an integer scalar.
    pub fn checked_scale(self, k: i128) -> Result<QuadInt> {
        match (self.s.checked_mul(k), self.t.checked_mul(k)) {
            (Some(s), Some(t)) => Ok(QuadInt { s, t }),
            _ => Err(Error::Overflow("scale")),
        }
    }

    /// `self^k` for `k ≥ 0`.
    pub fn checked_pow(self, k: u32) -> Result<QuadInt> {
        let mut acc = QuadInt::ONE;
        for _ in 0..k {
            acc = quad_mul(acc, self)?;
        }
        Ok(acc)
    }

    /// `self · UNIT^k` for any integer `k`.
    pub fn times_unit_pow(self, k: i64) -> Result<QuadInt> {
        let step = if k >= 0 { UNIT } else { UNIT_INV };
        let mut acc = self;
        for _ in 0..k.unsigned_abs() {
            acc = quad_mul(acc, step)?;
        }
        Ok(acc)
    }

    /// Sign of the real number `s + t√10`.
    pub fn signum(self) -> Ordering {
        quad_compare(self, QuadInt::new(0, 0))
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;

    fn neg(self) -> QuadInt {
        QuadInt { s: -self.s, t: -self.t }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t < 0 {
            write!(f, "{} - {}√10", self.s, self.t.unsigned_abs())
        } else {
            write!(f, "{} + {}√10", self.s, self.t)
        }
    }
}

/// Product in ℤ[√10]: `(x.s·y.s + 10·x.t·y.t, x.s·y.t + x.t·y.s)`.
pub fn quad_mul(x: QuadInt, y: QuadInt) -> Result<QuadInt> {
    let overflow = || Error::Overflow("quad_mul");
    let ss = x.s.checked_mul(y.s).ok_or_else(overflow)?;
    let tt = x
        .t
        .checked_mul(y.t)
        .and_then(|v| v.checked_mul(RADICAND))
        .ok_or_else(overflow)?;
    let st = x.s.checked_mul(y.t).ok_or_else(overflow)?;
    let ts = x.t.checked_mul(y.s).ok_or_else(overflow)?;
    Ok(QuadInt {
        s: ss.checked_add(tt).ok_or_else(overflow)?,
        t: st.checked_add(ts).ok_or_else(overflow)?,
    })
}

/// Exact ordering of the reals `x.s + x.t√10` and `y.s + y.t√10`.
///
/// With `ds = x.s − y.s` and `dt = x.t − y.t` the answer is the sign of
/// `ds + dt·√10`. Four sign cases:
///
/// * `ds ≥ 0, dt ≥ 0`: non-negative, zero only when both vanish.
/// * `ds ≤ 0, dt ≤ 0`: non-positive, zero only when both vanish.
/// * `ds > 0, dt < 0`: positive iff `ds² > 10·dt²`.
/// * `ds < 0, dt > 0`: positive iff `10·dt² > ds²`.
///
/// `ds² = 10·dt²` with `dt ≠ 0` is impossible since √10 is irrational. The
/// squares are formed in 256+ bits, so the comparison never overflows.
pub fn quad_compare(x: QuadInt, y: QuadInt) -> Ordering {
    let ds_sign = x.s.cmp(&y.s);
    let dt_sign = x.t.cmp(&y.t);
    use Ordering::*;
    match (ds_sign, dt_sign) {
        (Equal, o) | (o, Equal) => o,
        (Greater, Greater) => Greater,
        (Less, Less) => Less,
        (Greater, Less) => {
            if wide_square_vs_ten_square(x.s.abs_diff(y.s), x.t.abs_diff(y.t)) == Greater {
                Greater
            } else {
                Less
            }
        }
        (Less, Greater) => {
            if wide_square_vs_ten_square(x.s.abs_diff(y.s), x.t.abs_diff(y.t)) == Greater {
                Less
            } else {
                Greater
            }
        }
    }
}

/// Compares `u²` with `10·v²` exactly.
fn wide_square_vs_ten_square(u: u128, v: u128) -> Ordering {
    let (uh, ul) = mul_wide(u, u);
    let (vh, vl) = mul_wide(v, v);
    // 10·(vh·2^128 + vl) as three limbs.
    let (lo_carry, lo) = mul_wide(vl, 10);
    let (top, mid) = mul_wide(vh, 10);
    let (mid, c) = mid.overflowing_add(lo_carry);
    let top = top + c as u128;
    (0u128, uh, ul).cmp(&(top, mid, lo))
}

/// Full 256-bit product as `(high, low)`.
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a1, a0) = (a >> 64, a & MASK);
    let (b1, b0) = (b >> 64, b & MASK);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & MASK) + (p10 & MASK);
    let lo = (p00 & MASK) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

/// The set `{±10^m mod p : m ≥ 0}` for an odd prime `p` coprime to 10.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPowerSubgroup {
    p: u64,
    members: Vec<bool>,
    order: u64,
}

impl SignedPowerSubgroup {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn contains(&self, residue: u64) -> bool {
        residue < self.p && self.members[residue as usize]
    }

    /// Members in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as u64)
    }
}

/// Closure of `{1, −1}` under multiplication by 10 modulo `p`.
pub fn build_signed_subgroup(p: u64) -> Result<SignedPowerSubgroup> {
    if p == 2 || p == 5 || !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let len = usize::try_from(p).map_err(|_| Error::InvalidPrime(p))?;
    let mut members = vec![false; len];
    let mut order = 0u64;
    let mut e = 1u64;
    loop {
        for r in [e, p - e] {
            if !members[r as usize] {
                members[r as usize] = true;
                order += 1;
            }
        }
        e = ((e as u128 * 10) % p as u128) as u64;
        if e == 1 {
            break;
        }
    }
    Ok(SignedPowerSubgroup { p, members, order })
}
