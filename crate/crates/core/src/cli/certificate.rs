//! JSON certificate document written by `verify --out`.

use serde::Serialize;

use crate::recurrence::residue_class;
use crate::verifier::{
    CandidateCertificate, EvenExponentBound, PairCertificate, VerificationReport, VerifierConfig,
};

/// Explicit zero-hit lists are cut to this many entries.
pub const SAMPLE_CAP: usize = 64;

#[derive(Debug, Serialize)]
pub struct CertificateFile<'a> {
    pub config: &'a VerifierConfig,
    pub known_set_size: usize,
    pub candidates_checked: usize,
    pub complete: bool,
    /// Exponents beyond which the run rules out new values.
    pub covers_x_above: u32,
    pub even_exponent_bounds: &'a [EvenExponentBound],
    pub candidates: Vec<CandidateEntry>,
    pub fallback_pairs: Vec<PairRef>,
}

#[derive(Debug, Serialize)]
pub struct CandidateEntry {
    pub c: u64,
    pub vacuous: bool,
    pub excluded: bool,
    pub pairs: Vec<PairEntry>,
}

#[derive(Debug, Serialize)]
pub struct PairEntry {
    pub a: u64,
    pub b: u64,
    pub prime: u64,
    pub joint_period: u64,
    pub zero_hit_count: usize,
    pub zero_positions_sample: ZeroSample,
    pub residues: Vec<u64>,
    pub subgroup_order: u64,
    pub excluded: bool,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ZeroSample {
    /// Hits are exactly `k ≡ offset (mod modulus)` within the joint period.
    Class { offset: u64, modulus: u64 },
    List(Vec<u64>),
}

#[derive(Debug, Serialize)]
pub struct PairRef {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

pub fn zero_sample(positions: &[u64], period: u64) -> ZeroSample {
    match residue_class(positions, period) {
        Some((offset, modulus)) => ZeroSample::Class { offset, modulus },
        None => ZeroSample::List(positions.iter().take(SAMPLE_CAP).copied().collect()),
    }
}

fn pair_entry(p: &PairCertificate) -> PairEntry {
    PairEntry {
        a: p.pair.a,
        b: p.pair.b,
        prime: p.prime,
        joint_period: p.joint_period,
        zero_hit_count: p.zero_hit_count(),
        zero_positions_sample: zero_sample(&p.zero_positions, p.joint_period),
        residues: p.residues.clone(),
        subgroup_order: p.subgroup_order,
        excluded: p.excluded,
    }
}

fn candidate_entry(c: &CandidateCertificate) -> CandidateEntry {
    CandidateEntry {
        c: c.c,
        vacuous: c.vacuous,
        excluded: c.excluded,
        pairs: c.pairs.iter().map(pair_entry).collect(),
    }
}

impl<'a> CertificateFile<'a> {
    pub fn from_report(report: &'a VerificationReport) -> Self {
        CertificateFile {
            config: &report.config,
            known_set_size: report.known_set_size,
            candidates_checked: report.candidates_checked,
            complete: report.is_complete(),
            covers_x_above: report.config.known_x_max,
            even_exponent_bounds: &report.even_exponent_bounds,
            candidates: report.certificates.iter().map(candidate_entry).collect(),
            fallback_pairs: report
                .fallback_pairs
                .iter()
                .map(|p| PairRef { a: p.a, b: p.b, c: p.c })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }
}
