//! Drives the exclusion argument over a whole range of candidates.
//!
//! For odd `x = 2u + 1` the equation `10^x − y² = c` reads `10t² − y² = c`
//! with `t = 10^u`. Every solution reduces to a fundamental pair `(a, b)`, and
//! `t` is then `±t_k` for the pair's recurrence at some `k ∈ ℤ`. A hit
//! `t_k = ±10^u` with `u ≥ d` needs `t_k ≡ 0 (mod 10^d)` and
//! `t_k mod p ∈ {±10^m mod p}`; a pair is excluded when no index in one joint
//! period satisfies both. Even exponents beyond the brute-forced range are
//! dismissed by the bound `10^x − y² ≥ 2·10^(x/2) − 1`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{build_signed_subgroup, SignedPowerSubgroup};
use crate::error::{Error, Result};
use crate::known::{even_exponent_min, known_set, oracle_scan, KnownSet, Representation, MAX_EXPONENT};
use crate::pell::{fundamental_pairs, FundamentalPair};
use crate::recurrence::joint_zero_residues;

/// Parameters of one verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifierConfig {
    /// Smallest candidate examined.
    pub value_min: u64,
    /// Largest candidate examined, and the cap of the known set.
    pub value_bound: u64,
    pub known_x_max: u32,
    /// `10^d`: zero hits modulo this force `u ≥ d`.
    pub modulus_n: u64,
    /// Primes tried in order for each pair.
    pub primes: Vec<u64>,
    pub oracle_x_limit: u32,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        VerifierConfig {
            value_min: 0,
            value_bound: 2000,
            known_x_max: 7,
            modulus_n: 10_000,
            primes: vec![160_001, 1601],
            oracle_x_limit: MAX_EXPONENT,
        }
    }
}

impl VerifierConfig {
    /// `d` with `modulus_n = 10^d`, if it is a power of ten above 1.
    pub fn modulus_digits(&self) -> Option<u32> {
        let mut n = self.modulus_n;
        let mut d = 0;
        while n > 1 && n.is_multiple_of(10) {
            n /= 10;
            d += 1;
        }
        (n == 1 && d >= 1).then_some(d)
    }

    /// Smallest odd exponent the modular argument covers: `2d + 1`.
    pub fn min_odd_exponent(&self) -> Option<u32> {
        self.modulus_digits().map(|d| 2 * d + 1)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.value_min > self.value_bound {
            return bad(format!(
                "minimum {} exceeds maximum {}",
                self.value_min, self.value_bound
            ));
        }
        if self.known_x_max > MAX_EXPONENT {
            return bad(format!("x-max {} exceeds {MAX_EXPONENT}", self.known_x_max));
        }
        if self.oracle_x_limit > MAX_EXPONENT {
            return bad(format!(
                "oracle x-max {} exceeds {MAX_EXPONENT}",
                self.oracle_x_limit
            ));
        }
        let Some(d) = self.modulus_digits() else {
            return bad(format!("modulus {} is not 10^d with d >= 1", self.modulus_n));
        };
        if self.primes.is_empty() {
            return bad("prime list is empty".into());
        }
        for &p in &self.primes {
            build_signed_subgroup(p)
                .map_err(|_| Error::InvalidConfig(format!("{p} is not an odd prime coprime to 10")))?;
        }
        // Every odd exponent above the brute-forced range must satisfy u >= d.
        let next_odd = self.known_x_max + 1 + self.known_x_max % 2;
        if next_odd < 2 * d + 1 {
            return bad(format!(
                "modulus 10^{d} only covers odd x >= {}, but x-max {} leaves x = {next_odd} unchecked",
                2 * d + 1,
                self.known_x_max
            ));
        }
        let next_even = self.known_x_max + 2 - self.known_x_max % 2;
        if let Ok(min) = even_exponent_min(next_even) {
            if min <= self.value_bound as u128 {
                return bad(format!(
                    "even x = {next_even} reaches {min} <= {}; raise x-max",
                    self.value_bound
                ));
            }
        }
        Ok(())
    }
}

/// Evidence that one pair (or one prime attempt for it) admits no hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub pair: FundamentalPair,
    pub prime: u64,
    pub joint_period: u64,
    pub zero_positions: Vec<u64>,
    pub residues: Vec<u64>,
    pub subgroup_order: u64,
    pub excluded: bool,
}

impl PairCertificate {
    pub fn zero_hit_count(&self) -> usize {
        self.zero_positions.len()
    }
}

/// Outcome of trying every configured prime on one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairVerdict {
    /// Excluded by the named prime; earlier failed attempts are kept.
    Excluded {
        certificate: PairCertificate,
        failed: Vec<PairCertificate>,
    },
    /// Every prime saw a residue inside its subgroup.
    Inconclusive { attempts: Vec<PairCertificate> },
}

impl PairVerdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self, PairVerdict::Excluded { .. })
    }

    /// The certificate recorded in reports: the excluding one, or the last attempt.
    pub fn summary(&self) -> &PairCertificate {
        match self {
            PairVerdict::Excluded { certificate, .. } => certificate,
            PairVerdict::Inconclusive { attempts } => attempts.last().expect("at least one prime"),
        }
    }

    pub fn attempts(&self) -> Vec<&PairCertificate> {
        match self {
            PairVerdict::Excluded {
                certificate,
                failed,
            } => failed.iter().chain(std::iter::once(certificate)).collect(),
            PairVerdict::Inconclusive { attempts } => attempts.iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCertificate {
    pub c: u64,
    pub pairs: Vec<PairCertificate>,
    /// No fundamental pair exists, so `10t² − s² = c` has no solution at all.
    pub vacuous: bool,
    pub excluded: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenExponentBound {
    pub x: u32,
    pub min_value: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: VerifierConfig,
    pub known_set_size: usize,
    pub candidates_checked: usize,
    pub certificates: Vec<CandidateCertificate>,
    /// Pairs excluded only by a prime after the first.
    pub fallback_pairs: Vec<FundamentalPair>,
    pub even_exponent_bounds: Vec<EvenExponentBound>,
}

impl VerificationReport {
    pub fn is_complete(&self) -> bool {
        self.certificates.iter().all(|c| c.excluded)
    }

    pub fn excluded_count(&self) -> usize {
        self.certificates.iter().filter(|c| c.excluded).count()
    }

    pub fn inconclusive_pairs(&self) -> Vec<FundamentalPair> {
        self.certificates
            .iter()
            .flat_map(|c| c.pairs.iter())
            .filter(|p| !p.excluded)
            .map(|p| p.pair)
            .collect()
    }

    pub fn certificate(&self, c: u64) -> Option<&CandidateCertificate> {
        self.certificates
            .binary_search_by_key(&c, |cert| cert.c)
            .ok()
            .map(|i| &self.certificates[i])
    }
}

/// A validated configuration with its subgroups and known set prebuilt.
#[derive(Debug, Clone)]
pub struct Verifier {
    config: VerifierConfig,
    subgroups: Vec<SignedPowerSubgroup>,
    known: KnownSet,
}

impl Verifier {
    pub fn new(config: VerifierConfig) -> Result<Self> {
        config.validate()?;
        let subgroups = config
            .primes
            .iter()
            .map(|&p| build_signed_subgroup(p))
            .collect::<Result<Vec<_>>>()?;
        let known = known_set(config.known_x_max, config.value_bound)?;
        Ok(Verifier {
            config,
            subgroups,
            known,
        })
    }

    pub fn config(&self) -> &VerifierConfig {
        &self.config
    }

    pub fn known(&self) -> &KnownSet {
        &self.known
    }

    pub fn subgroup(&self, p: u64) -> Option<&SignedPowerSubgroup> {
        self.subgroups.iter().find(|g| g.prime() == p)
    }

    /// Candidates in the configured range, ascending.
    pub fn candidates(&self) -> Vec<u64> {
        (self.config.value_min..=self.config.value_bound)
            .filter(|c| !self.known.contains(*c))
            .collect()
    }

    pub fn exclude_pair(&self, pair: &FundamentalPair) -> Result<PairVerdict> {
        let mut failed = Vec::new();
        for group in &self.subgroups {
            let scan = joint_zero_residues(
                pair.a as i128,
                pair.b as i128,
                self.config.modulus_n,
                group.prime(),
            )?;
            let excluded = scan.hits.iter().all(|h| !group.contains(h.residue));
            let certificate = PairCertificate {
                pair: *pair,
                prime: group.prime(),
                joint_period: scan.period,
                zero_positions: scan.positions(),
                residues: scan.residues(),
                subgroup_order: group.order(),
                excluded,
            };
            if excluded {
                return Ok(PairVerdict::Excluded {
                    certificate,
                    failed,
                });
            }
            failed.push(certificate);
        }
        Ok(PairVerdict::Inconclusive { attempts: failed })
    }

    fn check_candidate(&self, c: u64) -> Result<()> {
        let (min, max) = (self.config.value_min, self.config.value_bound);
        if c < min || c > max {
            return Err(Error::OutOfRange { c, min, max });
        }
        if self.known.contains(c) {
            return Err(Error::KnownValue(c));
        }
        Ok(())
    }

    /// Pair verdicts for `c`, in the order of [`fundamental_pairs`].
    pub fn pair_verdicts(&self, c: u64) -> Result<Vec<PairVerdict>> {
        self.check_candidate(c)?;
        fundamental_pairs(c)
            .iter()
            .map(|p| self.exclude_pair(p))
            .collect()
    }

    pub fn exclude_candidate(&self, c: u64) -> Result<CandidateCertificate> {
        let verdicts = self.pair_verdicts(c)?;
        Ok(self.assemble(c, &verdicts))
    }

    fn assemble(&self, c: u64, verdicts: &[PairVerdict]) -> CandidateCertificate {
        let vacuous = verdicts.is_empty();
        let pairs: Vec<PairCertificate> = verdicts.iter().map(|v| v.summary().clone()).collect();
        let excluded = vacuous || pairs.iter().all(|p| p.excluded);
        CandidateCertificate {
            c,
            pairs,
            vacuous,
            excluded,
        }
    }

    /// Runs every candidate on the current rayon pool. Output order is by `c`
    /// regardless of scheduling.
    pub fn verify(&self) -> Result<VerificationReport> {
        let first_prime = self.config.primes[0];
        let certificates = self
            .candidates()
            .into_par_iter()
            .map(|c| self.exclude_candidate(c))
            .collect::<Result<Vec<_>>>()?;

        let fallback_pairs = certificates
            .iter()
            .flat_map(|c| c.pairs.iter())
            .filter(|p| p.excluded && p.prime != first_prime)
            .map(|p| p.pair)
            .collect();

        let lo = self.config.known_x_max + 1;
        let even_exponent_bounds = (lo..=lo + 4)
            .filter(|x| x % 2 == 0)
            .filter_map(|x| even_exponent_min(x).ok().map(|min_value| EvenExponentBound { x, min_value }))
            .collect::<Vec<_>>();
        if let Some(b) = even_exponent_bounds
            .iter()
            .find(|b| b.min_value <= self.config.value_bound as u128)
        {
            return Err(Error::InvalidConfig(format!(
                "even x = {} reaches {} <= {}",
                b.x, b.min_value, self.config.value_bound
            )));
        }

        let known_set_size = self.known.len();
        Ok(VerificationReport {
            config: self.config.clone(),
            known_set_size,
            candidates_checked: certificates.len(),
            certificates,
            fallback_pairs,
            even_exponent_bounds,
        })
    }
}

pub fn exclude_pair(pair: &FundamentalPair, config: &VerifierConfig) -> Result<PairVerdict> {
    Verifier::new(config.clone())?.exclude_pair(pair)
}

pub fn exclude_candidate(c: u64, config: &VerifierConfig) -> Result<CandidateCertificate> {
    Verifier::new(config.clone())?.exclude_candidate(c)
}

pub fn verify_range(config: &VerifierConfig) -> Result<VerificationReport> {
    Verifier::new(config.clone())?.verify()
}

/// Result of auditing a report against the direct representation scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossCheck {
    Passed,
    /// A candidate marked excluded has a representation `10^x − y² = c`.
    ExcludedButRepresented { c: u64, witness: Representation },
    /// A known value has no representation within the known exponent cap.
    KnownWithoutWitness { c: u64 },
    /// The report's known-set size disagrees with a fresh enumeration.
    KnownSizeMismatch { reported: usize, actual: usize },
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        matches!(self, CrossCheck::Passed)
    }
}

/// Audits `report` with [`oracle_scan`], which shares no code with the
/// pair/recurrence machinery.
pub fn cross_check(report: &VerificationReport, config: &VerifierConfig) -> Result<CrossCheck> {
    let known = known_set(config.known_x_max, config.value_bound)?;
    if config.value_min == 0 && known.len() != report.known_set_size {
        return Ok(CrossCheck::KnownSizeMismatch {
            reported: report.known_set_size,
            actual: known.len(),
        });
    }
    for cert in report.certificates.iter().filter(|c| c.excluded) {
        if let Some(witness) = oracle_scan(cert.c, config.oracle_x_limit)? {
            return Ok(CrossCheck::ExcludedButRepresented { c: cert.c, witness });
        }
    }
    for &v in &known.values {
        if oracle_scan(v, config.known_x_max)?.is_none() {
            return Ok(CrossCheck::KnownWithoutWitness { c: v });
        }
    }
    Ok(CrossCheck::Passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: u64, b: u64) -> FundamentalPair {
        FundamentalPair {
            a,
            b,
            c: 10 * b * b - a * a,
        }
    }

    #[test]
    fn default_config_is_valid() {
        let cfg = VerifierConfig::default();
        cfg.validate().unwrap();
        assert_eq!(cfg.modulus_digits(), Some(4));
        assert_eq!(cfg.min_odd_exponent(), Some(9));
    }

    #[test]
    fn config_rejections() {
        let base = VerifierConfig::default();
        let cases = [
            VerifierConfig { modulus_n: 12_000, ..base.clone() },
            VerifierConfig { modulus_n: 1, ..base.clone() },
            VerifierConfig { primes: vec![], ..base.clone() },
            VerifierConfig { primes: vec![160_001, 5], ..base.clone() },
            VerifierConfig { primes: vec![160_003], ..base.clone() },
            VerifierConfig { value_min: 10, value_bound: 5, ..base.clone() },
            VerifierConfig { oracle_x_limit: 38, ..base.clone() },
            VerifierConfig { known_x_max: 40, ..base.clone() },
            // 10^5 only forces u >= 5, i.e. x >= 11; x = 9 would be unchecked
            VerifierConfig { modulus_n: 100_000, ..base.clone() },
            // x = 8 can reach 19999
            VerifierConfig { value_bound: 20_000, ..base.clone() },
        ];
        for cfg in cases {
            assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))), "{cfg:?}");
        }
        // smaller modulus is weaker but still sound
        VerifierConfig { modulus_n: 1000, ..base.clone() }.validate().unwrap();
        VerifierConfig { known_x_max: 8, ..base }.validate().unwrap();
    }

    #[test]
    fn worked_example_pair() {
        let cfg = VerifierConfig::default();
        let v = exclude_pair(&pair(3, 2), &cfg).unwrap();
        let PairVerdict::Excluded { certificate, failed } = v else {
            panic!("expected exclusion");
        };
        assert!(failed.is_empty());
        assert_eq!(certificate.prime, 160_001);
        assert_eq!(certificate.zero_hit_count(), 8);
        assert_eq!(certificate.subgroup_order, 1250);
        assert_eq!(certificate.joint_period, 40_000);
    }

    #[test]
    fn fallback_pair_needs_second_prime() {
        let cfg = VerifierConfig::default();
        let v = exclude_pair(&pair(22, 8), &cfg).unwrap();
        let PairVerdict::Excluded { certificate, failed } = v else {
            panic!("expected exclusion");
        };
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].prime, 160_001);
        assert!(!failed[0].excluded);
        assert_eq!(certificate.prime, 1601);
        assert_eq!(certificate.subgroup_order, 200);

        let only_first = VerifierConfig { primes: vec![160_001], ..cfg };
        assert!(!exclude_pair(&pair(22, 8), &only_first).unwrap().is_excluded());
    }

    #[test]
    fn candidates_vacuous_and_known() {
        let cfg = VerifierConfig::default();
        let cert = exclude_candidate(7, &cfg).unwrap();
        assert!(cert.vacuous && cert.excluded && cert.pairs.is_empty());

        let cert = exclude_candidate(31, &cfg).unwrap();
        assert!(cert.excluded && !cert.vacuous);
        assert_eq!(cert.pairs.len(), 1);

        let cert = exclude_candidate(156, &cfg).unwrap();
        assert!(cert.excluded);
        let fb = cert.pairs.iter().find(|p| p.pair.a == 22).unwrap();
        assert_eq!(fb.prime, 1601);

        assert_eq!(exclude_candidate(39, &cfg), Err(Error::KnownValue(39)));
        assert!(matches!(exclude_candidate(2001, &cfg), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn small_range_report() {
        let cfg = VerifierConfig { value_bound: 50, ..Default::default() };
        let report = verify_range(&cfg).unwrap();
        let known = known_set(7, 50).unwrap();
        assert_eq!(report.candidates_checked, 51 - known.len());
        assert!(report.is_complete());
        assert!(cross_check(&report, &cfg).unwrap().passed());
    }

    #[test]
    fn tampered_report_fails_cross_check() {
        let cfg = VerifierConfig { value_bound: 50, ..Default::default() };
        let mut report = verify_range(&cfg).unwrap();
        report.certificates.push(CandidateCertificate {
            c: 39,
            pairs: vec![],
            vacuous: true,
            excluded: true,
        });
        assert_eq!(
            cross_check(&report, &cfg).unwrap(),
            CrossCheck::ExcludedButRepresented {
                c: 39,
                witness: Representation { x: 3, y: 31 }
            }
        );
    }

    #[test]
    fn empty_range_cross_check() {
        // [0, 1] is entirely known
        let cfg = VerifierConfig { value_bound: 1, ..Default::default() };
        let report = verify_range(&cfg).unwrap();
        assert_eq!(report.candidates_checked, 0);
        assert!(cross_check(&report, &cfg).unwrap().passed());
    }
}
