//! Human-readable trace of the exclusion argument for a single candidate.

use std::fmt::Write;

use crate::error::Result;
use crate::pell::fundamental_pairs;
use crate::recurrence::{sequence_mod, zero_positions};
use crate::verifier::{PairVerdict, Verifier};

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn example_trace(verifier: &Verifier, c: u64) -> Result<String> {
    let cfg = verifier.config();
    let verdicts = verifier.pair_verdicts(c)?;
    let pairs = fundamental_pairs(c);
    let n = cfg.modulus_n;
    let mut out = String::new();

    writeln!(out, "candidate c = {c}").unwrap();
    writeln!(
        out,
        "known set: x <= {}, values <= {}: {} values, {c} not among them",
        cfg.known_x_max,
        cfg.value_bound,
        verifier.known().len()
    )
    .unwrap();
    writeln!(out, "fundamental pairs: {}", pairs.len()).unwrap();
    if pairs.is_empty() {
        writeln!(out, "vacuous: no fundamental pairs").unwrap();
        writeln!(out, "verdict: c = {c} excluded").unwrap();
        return Ok(out);
    }

    let mut all_excluded = true;
    for (pair, verdict) in pairs.iter().zip(&verdicts) {
        let (a, b) = (pair.a as i128, pair.b as i128);
        writeln!(
            out,
            "pair (a, b) = ({}, {}): 10*{}^2 - {}^2 = {c}",
            pair.a, pair.b, pair.b, pair.a
        )
        .unwrap();
        writeln!(out, "  seeds: t0 = {b}, t1 = {}", 6 * a + 19 * b).unwrap();
        let seq_n = sequence_mod(a, b, n)?;
        let profile = zero_positions(&seq_n);
        writeln!(out, "  period mod {n}: {}", seq_n.period()).unwrap();
        match profile.residue_class() {
            Some((offset, step)) => writeln!(
                out,
                "  zero hits mod {n} per period: {}, k = {offset} (mod {step})",
                profile.positions.len()
            ),
            None => writeln!(
                out,
                "  zero hits mod {n} per period: {}",
                profile.positions.len()
            ),
        }
        .unwrap();

        for attempt in verdict.attempts() {
            let p = attempt.prime;
            let seq_p = sequence_mod(a, b, p)?;
            writeln!(out, "  prime {p}:").unwrap();
            writeln!(out, "    period mod {p}: {}", seq_p.period()).unwrap();
            writeln!(out, "    joint period: {}", attempt.joint_period).unwrap();
            writeln!(out, "    zero hits in joint period: {}", attempt.zero_hit_count()).unwrap();
            writeln!(out, "    residues mod {p}: {}", join(&attempt.residues)).unwrap();
            writeln!(out, "    signed subgroup order: {}", attempt.subgroup_order).unwrap();
            if attempt.excluded {
                writeln!(out, "    no residue in subgroup: excluded").unwrap();
            } else {
                let inside: Vec<u64> = attempt
                    .residues
                    .iter()
                    .copied()
                    .filter(|&r| verifier.subgroup(p).is_some_and(|g| g.contains(r)))
                    .collect();
                writeln!(out, "    residues in subgroup: {}", join(&inside)).unwrap();
            }
        }
        match verdict {
            PairVerdict::Excluded { certificate, .. } => {
                writeln!(out, "  pair verdict: excluded by p = {}", certificate.prime).unwrap()
            }
            PairVerdict::Inconclusive { .. } => {
                all_excluded = false;
                writeln!(out, "  pair verdict: inconclusive").unwrap()
            }
        }
    }
    if all_excluded {
        writeln!(out, "verdict: c = {c} excluded").unwrap();
    } else {
        writeln!(out, "verdict: c = {c} inconclusive").unwrap();
    }
    Ok(out)
}
