//! Seeded Monte-Carlo decoding trials over random errors of exact weight.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::decoder::Code;
use crate::error::{Error, Result};
use crate::field::Fe;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimRow {
    pub t: usize,
    pub trials: usize,
    pub successes: usize,
    /// Failed trials with `2t < d_u`; always zero for a correct decoder.
    pub failures_within_guarantee: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimReport {
    pub rows: Vec<SimRow>,
}

impl SimReport {
    pub const HEADER: &'static str = "t,trials,successes,failures_within_guarantee";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{}", r.t, r.trials, r.successes, r.failures_within_guarantee);
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some(Self::HEADER) {
            return Err(Error::Parse(format!("report must start with `{}`", Self::HEADER)));
        }
        let rows = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let bad = || Error::Parse(format!("bad report row `{l}`"));
                let f: Vec<usize> = l
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                match f[..] {
                    [t, trials, successes, failures_within_guarantee] => {
                        Ok(SimRow { t, trials, successes, failures_within_guarantee })
                    }
                    _ => Err(bad()),
                }
            })
            .collect::<Result<_>>()?;
        Ok(SimReport { rows })
    }
}

/// SplitMix64 finalizer, used to derive independent per-trial seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn trial_rng(seed: u64, t: usize, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(mix(mix(seed) ^ t as u64) ^ trial as u64))
}

/// A random error vector with exactly `t` nonzero entries.
pub fn random_error<R: Rng>(rng: &mut R, code: &Code, t: usize) -> Vec<Fe> {
    let q = code.field().order();
    let mut e = vec![Fe::ZERO; code.n()];
    for pos in sample(rng, code.n(), t) {
        e[pos] = Fe(rng.gen_range(1..q) as u16);
    }
    e
}

pub fn random_message<R: Rng>(rng: &mut R, code: &Code) -> Vec<Fe> {
    let q = code.field().order();
    (0..code.k()).map(|_| Fe(rng.gen_range(0..q) as u16)).collect()
}

/// Runs `trials` decodings per error weight. Output depends only on the
/// arguments; trials run in parallel with per-trial RNG streams.
pub fn simulate(code: &Code, weights: RangeInclusive<usize>, trials: usize, seed: u64) -> Result<SimReport> {
    if trials == 0 {
        return Err(Error::BadConfig("at least one trial is required".into()));
    }
    if *weights.end() > code.n() {
        return Err(Error::OutOfRange { value: *weights.end() as i64, limit: code.n() as i64 + 1 });
    }
    let f = code.field();
    let mut rows = Vec::new();
    for t in weights {
        let outcomes = (0..trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = trial_rng(seed, t, trial);
                let msg = random_message(&mut rng, code);
                let err = random_error(&mut rng, code, t);
                let v: Vec<Fe> = code
                    .encode(&msg)?
                    .iter()
                    .zip(&err)
                    .map(|(&c, &e)| f.add(c, e))
                    .collect();
                Ok(code.decode(&v)?.message == msg)
            })
            .collect::<Result<Vec<bool>>>()?;
        let successes = outcomes.iter().filter(|&&ok| ok).count();
        let guaranteed = (2 * t as i64) < code.du();
        rows.push(SimRow {
            t,
            trials,
            successes,
            failures_within_guarantee: if guaranteed { trials - successes } else { 0 },
        });
    }
    Ok(SimReport { rows })
}
