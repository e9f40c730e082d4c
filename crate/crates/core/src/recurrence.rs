//! The sequence `t_k` with `t₀ = b`, `t₁ = 6a + 19b`, `t_{k+2} = 38t_{k+1} − t_k`,
//! i.e. the √10-coefficient of `(a + b√10)·UNIT^k`, reduced modulo fixed moduli.
//!
//! The companion matrix `[[0, 1], [−1, 38]]` has determinant 1, so it is
//! invertible modulo every `m` and the residue sequence is purely periodic.
//! One period therefore covers every index `k ∈ ℤ`, negative ones included.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Trace of the unit `19 + 6√10`.
pub const TRACE: u64 = 38;

fn seeds(a: i128, b: i128, m: u64) -> (u64, u64) {
    let m = m as i128;
    let t0 = b.rem_euclid(m);
    let t1 = (6 * a.rem_euclid(m) + 19 * t0).rem_euclid(m);
    (t0 as u64, t1 as u64)
}

#[inline]
fn step(prev: u64, cur: u64, m: u64) -> u64 {
    // 38·cur − prev, kept non-negative
    ((TRACE as u128 * cur as u128 + (m - prev) as u128) % m as u128) as u64
}

/// Step budget for period detection: the state space has `m²` points.
fn period_cap(m: u64) -> u128 {
    16u128.saturating_mul(m as u128).saturating_mul(m as u128)
}

/// One full period of `t_k mod m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSequence {
    pub a: i128,
    pub b: i128,
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl ResidueSequence {
    pub fn period(&self) -> u64 {
        self.values.len() as u64
    }

    /// `t_k mod m` for any `k`, negative indices included.
    pub fn at(&self, k: i64) -> u64 {
        self.values[k.rem_euclid(self.values.len() as i64) as usize]
    }
}

/// Unbounded stream `t₀, t₁, t₂, … mod m`.
#[derive(Debug, Clone)]
pub struct Residues {
    prev: u64,
    cur: u64,
    modulus: u64,
}

impl Iterator for Residues {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let out = self.prev;
        let next = step(self.prev, self.cur, self.modulus);
        self.prev = self.cur;
        self.cur = next;
        Some(out)
    }
}

pub fn residues(a: i128, b: i128, m: u64) -> Result<Residues> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let (prev, cur) = seeds(a, b, m);
    Ok(Residues { prev, cur, modulus: m })
}

/// Builds one period of `t_k mod m`, found as the first return of the state
/// pair `(t_k, t_{k+1})` to `(t₀, t₁)`.
pub fn sequence_mod(a: i128, b: i128, m: u64) -> Result<ResidueSequence> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let (t0, t1) = seeds(a, b, m);
    let cap = period_cap(m);
    let mut values = Vec::new();
    let (mut prev, mut cur) = (t0, t1);
    loop {
        values.push(prev);
        let next = step(prev, cur, m);
        prev = cur;
        cur = next;
        if (prev, cur) == (t0, t1) {
            break;
        }
        if values.len() as u128 > cap {
            return Err(Error::PeriodCapExceeded { modulus: m, cap });
        }
    }
    Ok(ResidueSequence {
        a,
        b,
        modulus: m,
        values,
    })
}

/// Indices within one period where `t_k ≡ 0 (mod N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroHitProfile {
    pub modulus: u64,
    pub period: u64,
    pub positions: Vec<u64>,
}

impl ZeroHitProfile {
    /// `(offset, step)` when the hits are exactly one residue class
    /// `offset mod step` across the period.
    pub fn residue_class(&self) -> Option<(u64, u64)> {
        residue_class(&self.positions, self.period)
    }
}

/// `(offset, step)` if `positions` is exactly `{k ∈ [0, period) : k ≡ offset (mod step)}`.
pub fn residue_class(positions: &[u64], period: u64) -> Option<(u64, u64)> {
    let first = *positions.first()?;
    let step = if positions.len() == 1 {
        period
    } else {
        positions[1] - positions[0]
    };
    let exact = period.is_multiple_of(step)
        && first < step
        && positions.len() as u64 == period / step
        && positions.windows(2).all(|w| w[1] - w[0] == step);
    exact.then_some((first, step))
}

pub fn zero_positions(seq: &ResidueSequence) -> ZeroHitProfile {
    ZeroHitProfile {
        modulus: seq.modulus,
        period: seq.period(),
        positions: seq
            .values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 0)
            .map(|(k, _)| k as u64)
            .collect(),
    }
}

/// One index with `t_k ≡ 0 (mod N)` and its residue modulo the prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroHit {
    pub k: u64,
    pub residue: u64,
}

/// Result of a simultaneous scan modulo `N` and `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointScan {
    pub modulus: u64,
    pub prime: u64,
    pub period: u64,
    pub hits: Vec<ZeroHit>,
}

impl JointScan {
    pub fn residues(&self) -> Vec<u64> {
        self.hits.iter().map(|h| h.residue).collect()
    }

    pub fn positions(&self) -> Vec<u64> {
        self.hits.iter().map(|h| h.k).collect()
    }
}

/// Streams `t_k` modulo `n` and `p` together over one joint period (the first
/// `k > 0` where both state pairs are back at their seeds) and records
/// `t_k mod p` at every `k` with `t_k ≡ 0 (mod n)`, ascending in `k`.
pub fn joint_zero_residues(a: i128, b: i128, n: u64, p: u64) -> Result<JointScan> {
    for m in [n, p] {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
    }
    let start_n = seeds(a, b, n);
    let start_p = seeds(a, b, p);
    let cap = period_cap(n).saturating_mul(period_cap(p));
    let (mut sn, mut sp) = (start_n, start_p);
    let mut hits = Vec::new();
    let mut k: u64 = 0;
    loop {
        if sn.0 == 0 {
            hits.push(ZeroHit { k, residue: sp.0 });
        }
        sn = (sn.1, step(sn.0, sn.1, n));
        sp = (sp.1, step(sp.0, sp.1, p));
        k += 1;
        if sn == start_n && sp == start_p {
            break;
        }
        if k as u128 > cap {
            return Err(Error::PeriodCapExceeded { modulus: n, cap });
        }
    }
    Ok(JointScan {
        modulus: n,
        prime: p,
        period: k,
        hits,
    })
}
