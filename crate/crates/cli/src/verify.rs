use std::io::{self, Write};
use std::time::Instant;

use mwbis_core::generators::{gen_random_regular, GenError};
use mwbis_core::reductions::{
    coverage_target, verify_equivalence, ReductionError, MAX_ENUMERATION_VERTICES,
};
use serde::{Deserialize, Serialize};

use crate::args::VerifyArgs;
use crate::error::CliError;

/// One line of `verify-reduction` output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub m: usize,
    pub x: u64,
    pub target: u64,
    pub clique_found: bool,
    pub mivc_opt: u64,
    pub equivalent: bool,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub trials: u64,
    pub equivalent: u64,
    pub mismatches: u64,
    pub skipped: u64,
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (n, k) = (args.n, args.k);
    coverage_target(n, k).map_err(|e| CliError::user(e.to_string()))?;
    if n > MAX_ENUMERATION_VERTICES {
        return Err(CliError::ResourceCap(
            ReductionError::TooLargeForEnumeration { n }.to_string(),
        ));
    }
    let mut summary = VerifySummary {
        trials: args.trials,
        equivalent: 0,
        mismatches: 0,
        skipped: 0,
    };
    for trial in 0..args.trials {
        let seed = args.seed.wrapping_add(trial);
        let start = Instant::now();
        let g = match gen_random_regular(n, n - 4, seed) {
            Ok(g) => g,
            Err(GenError::RetriesExhausted { attempts }) => {
                eprintln!("trial {trial} skipped: no regular graph after {attempts} restarts");
                summary.skipped += 1;
                continue;
            }
            Err(e) => return Err(CliError::user(e.to_string())),
        };
        let report = match verify_equivalence(&g, k) {
            Ok(r) => r,
            Err(ReductionError::Mismatch(r)) => r,
            Err(e) => return Err(CliError::Mismatch(format!("trial {trial}: {e}"))),
        };
        if report.equivalent {
            summary.equivalent += 1;
        } else {
            summary.mismatches += 1;
        }
        emit(
            out,
            &TrialRecord {
                trial,
                seed,
                n: report.n,
                k: report.k,
                r: report.r,
                m: report.m,
                x: report.x,
                target: report.target,
                clique_found: report.clique_found,
                mivc_opt: report.mivc_opt,
                equivalent: report.equivalent,
                wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            },
        )?;
    }
    emit(out, &summary)?;
    if summary.mismatches > 0 {
        return Err(CliError::Mismatch(format!(
            "{} of {} trials disagree",
            summary.mismatches, args.trials
        )));
    }
    Ok(())
}
