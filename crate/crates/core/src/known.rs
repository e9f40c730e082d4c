//! Brute-force enumeration of the values `10^x − y²` in a bounded window, and
//! the per-candidate representation scan used as an independent cross-check.

use serde::{Deserialize, Serialize};

use crate::arith::{isqrt, perfect_square_root, pow10};
use crate::error::{Error, Result};

/// Largest exponent for which `10^x` fits comfortably in 128 bits.
pub const MAX_EXPONENT: u32 = 37;

/// All `v = 10^x − y²` with `0 ≤ x ≤ x_max`, `y ≥ 0` and `0 ≤ v ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownSet {
    pub x_max: u32,
    pub bound: u64,
    pub values: Vec<u64>,
}

impl KnownSet {
    pub fn contains(&self, v: u64) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Lines of the form `index value`, indices starting at 0.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{i} {v}\n"));
        }
        out
    }
}

/// A witness `10^x − y² = c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub x: u32,
    pub y: u128,
}

impl Representation {
    /// `u` with `x = 2u + 1`, for odd exponents.
    pub fn half_exponent(&self) -> Option<u32> {
        (self.x % 2 == 1).then_some((self.x - 1) / 2)
    }

    pub fn value(&self) -> i128 {
        pow10(self.x).expect("exponent checked on construction") as i128 - (self.y * self.y) as i128
    }
}

fn check_exponent(x: u32) -> Result<()> {
    if x > MAX_EXPONENT {
        Err(Error::ExponentTooLarge {
            exponent: x,
            limit: MAX_EXPONENT,
        })
    } else {
        Ok(())
    }
}

/// Enumerates `T(x_max) ∩ [0, bound]`, including `x = 0`.
///
/// For each exponent only the window `y ∈ [isqrt(10^x − bound), isqrt(10^x)]`
/// can land in range, so the scan is `O(√bound)` per exponent.
pub fn known_set(x_max: u32, bound: u64) -> Result<KnownSet> {
    check_exponent(x_max)?;
    let mut values = Vec::new();
    for x in 0..=x_max {
        let p = pow10(x).expect("x <= 37");
        let lo = isqrt(p.saturating_sub(bound as u128));
        let hi = isqrt(p);
        for y in lo..=hi {
            let v = p - y * y;
            if v <= bound as u128 {
                values.push(v as u64);
            }
        }
    }
    values.sort_unstable();
    values.dedup();
    Ok(KnownSet {
        x_max,
        bound,
        values,
    })
}

/// Smallest positive value of `10^x − y²` for even `x ≥ 2`: `2·10^(x/2) − 1`.
pub fn even_exponent_min(x: u32) -> Result<u128> {
    if x < 2 || x % 2 == 1 {
        return Err(Error::OddExponent(x));
    }
    check_exponent(x)?;
    Ok(2 * pow10(x / 2).expect("x <= 37") - 1)
}

/// Smallest-`x` witness of `10^x − y² = c` with `x ≤ x_limit`, found by a
/// perfect-square test of `10^x − c` for every exponent.
pub fn oracle_scan(c: u64, x_limit: u32) -> Result<Option<Representation>> {
    check_exponent(x_limit)?;
    for x in 0..=x_limit {
        let p = pow10(x).expect("x <= 37");
        let Some(rest) = p.checked_sub(c as u128) else {
            continue;
        };
        if let Some(y) = perfect_square_root(rest) {
            return Ok(Some(Representation { x, y }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_prefix_and_tail() {
        let k = known_set(7, 2000).unwrap();
        assert_eq!(&k.values[..8], &[0, 1, 6, 9, 10, 19, 36, 39]);
        assert_eq!(*k.values.last().unwrap(), 1999);
    }

    #[test]
    fn exponent_zero_only() {
        assert_eq!(known_set(0, 2000).unwrap().values, vec![0, 1]);
    }

    #[test]
    fn stopping_condition_and_monotonicity() {
        let mut prev = known_set(0, 2000).unwrap();
        for x in 1..=12 {
            let next = known_set(x, 2000).unwrap();
            assert!(prev.values.iter().all(|v| next.contains(*v)));
            prev = next;
        }
        assert_eq!(known_set(8, 2000).unwrap().values, known_set(7, 2000).unwrap().values);
    }

    #[test]
    fn known_set_rejects_large_exponents() {
        assert!(known_set(38, 10).is_err());
        assert!(known_set(37, 10).is_ok());
    }

    #[test]
    fn even_exponent_minimum() {
        assert_eq!(even_exponent_min(8).unwrap(), 19999);
        assert_eq!(even_exponent_min(6).unwrap(), 1999);
        assert_eq!(even_exponent_min(2).unwrap(), 19);
        for x in [8, 10, 12] {
            assert!(even_exponent_min(x).unwrap() > 2000);
        }
        assert_eq!(even_exponent_min(7), Err(Error::OddExponent(7)));
        assert_eq!(even_exponent_min(0), Err(Error::OddExponent(0)));
    }

    #[test]
    fn even_minimum_matches_brute_force() {
        for x in [2u32, 4, 6] {
            let p = pow10(x).unwrap();
            let brute = (0..=isqrt(p))
                .map(|y| p - y * y)
                .filter(|&v| v > 0)
                .min()
                .unwrap();
            assert_eq!(even_exponent_min(x).unwrap(), brute);
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_scan(31, 37).unwrap(), None);
        assert_eq!(oracle_scan(39, 7).unwrap(), Some(Representation { x: 3, y: 31 }));
        assert_eq!(oracle_scan(0, 1).unwrap(), Some(Representation { x: 0, y: 1 }));
        assert!(oracle_scan(1, 38).is_err());
    }

    #[test]
    fn oracle_agrees_with_known_set() {
        let k = known_set(7, 2000).unwrap();
        for c in 0..=2000u64 {
            let hit = oracle_scan(c, 7).unwrap();
            assert_eq!(hit.is_some(), k.contains(c), "c = {c}");
            if let Some(r) = hit {
                assert_eq!(r.value(), c as i128);
            }
        }
    }

    #[test]
    fn bfile_lines() {
        let k = known_set(7, 2000).unwrap();
        let text = k.to_bfile();
        assert!(text.starts_with("0 0\n1 1\n2 6\n"));
        assert!(text.ends_with(&format!("{} 1999\n", k.len() - 1)));
    }

    #[test]
    fn half_exponent() {
        assert_eq!(Representation { x: 9, y: 0 }.half_exponent(), Some(4));
        assert_eq!(Representation { x: 8, y: 0 }.half_exponent(), None);
    }
}
