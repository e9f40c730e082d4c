//! Certified completeness of the values `10^x − y²` on a bounded range.
//!
//! The known values are enumerated by brute force for small exponents. Every
//! other candidate `c` is ruled out for all larger exponents: even ones by a
//! size bound, odd ones by reducing `10t² − s² = c` to finitely many
//! fundamental pairs in ℤ[√10] and showing, modulo `10^d` and a prime `p`,
//! that no unit multiple of a pair has `t = ±10^u`.

pub mod arith;
pub mod cli;
pub mod error;
pub mod known;
pub mod pell;
pub mod recurrence;
pub mod verifier;

pub use arith::{
    build_signed_subgroup, isqrt, mod_pow, perfect_square_root, quad_compare, quad_mul, QuadInt,
    SignedPowerSubgroup, UNIT,
};
pub use error::{Error, Result};
pub use known::{even_exponent_min, known_set, oracle_scan, KnownSet, Representation};
pub use pell::{fundamental_pairs, reduce_solution, FundamentalPair, ReductionResult};
pub use recurrence::{joint_zero_residues, sequence_mod, zero_positions, JointScan, ResidueSequence, ZeroHitProfile};
pub use verifier::{
    cross_check, exclude_candidate, exclude_pair, verify_range, CandidateCertificate, CrossCheck,
    PairCertificate, PairVerdict, VerificationReport, Verifier, VerifierConfig,
};
