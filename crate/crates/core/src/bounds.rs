//! Order bounds: the per-position vote margin `ν(s)`, the bound
//! `d_u = min {ν(s) : s ≤ u nongap}`, and their closed forms for Hermitian
//! codes.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::curve::PlaneCurve;
use crate::decoder::Code;
use crate::error::{Error, Result};
use crate::ideal::EtaBasis;

/// `ν(s) = (1/a) Σ_i max{δ(η_{i'}) − δ(y^i) − s, 0}` where
/// `b·i' ≡ b·i + s (mod a)`.
pub fn nu_for(curve: &PlaneCurve, eta: &EtaBasis, s: i64) -> Result<i64> {
    if curve.is_gap(s) {
        return Err(Error::GapValue(s));
    }
    let (a, b) = (curve.a() as i64, curve.b() as i64);
    let mut total = 0;
    for i in 0..a {
        let target = b * i + s;
        let ip = (0..a)
            .find(|&ip| (target - b * ip).rem_euclid(a) == 0)
            .expect("b is invertible mod a");
        total += (eta.delta(curve, ip as usize) - target).max(0);
    }
    assert!(total % a == 0, "ν({s}) sum {total} is not divisible by δ(x) = {a}");
    Ok(total / a)
}

pub fn nu(code: &Code, s: i64) -> Result<i64> {
    nu_for(code.curve(), code.eta(), s)
}

/// Minimum of `ν` over the nongaps `≤ u`.
pub fn du_for(curve: &PlaneCurve, eta: &EtaBasis, u: i64) -> i64 {
    curve
        .nongaps_upto(u)
        .into_iter()
        .map(|s| nu_for(curve, eta, s).expect("nongap"))
        .min()
        .unwrap_or(0)
}

pub fn du(code: &Code) -> i64 {
    du_for(code.curve(), code.eta(), code.u())
}

fn hermitian_is_gap(q: i64, s: i64) -> bool {
    !(0..q).any(|j| s - (q + 1) * j >= 0 && (s - (q + 1) * j) % q == 0)
}

/// Closed form of `ν(s)` for the full Hermitian code over GF(q²).
pub fn hermitian_nu(q: u32, s: i64) -> Result<i64> {
    let q = q as i64;
    let n = q * q * q;
    if !(0..n).contains(&s) {
        return Err(Error::OutOfRange { value: s, limit: n });
    }
    if hermitian_is_gap(q, s) {
        return Err(Error::GapValue(s));
    }
    let (t, r) = (s / q, s % q);
    Ok((q - r) * (q * q + r - t) + r * (q * q + r - q - t - 1).max(0))
}

/// Closed form of `d_u` for the full Hermitian code over GF(q²).
pub fn hermitian_du(q: u32, u: i64) -> Result<i64> {
    let q = q as i64;
    let n = q * q * q;
    if !(0..n).contains(&u) {
        return Err(Error::OutOfRange { value: u, limit: n });
    }
    if hermitian_is_gap(q, u) {
        return Err(Error::GapValue(u));
    }
    let (a, b) = (u / q, u % q);
    Ok(if b <= a - (q * q - q) { n - a * q } else { n - u })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundRow {
    pub u: i64,
    pub k: usize,
    pub du: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}

impl BoundTable {
    pub const HEADER: &'static str = "u,k,d_u";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{}", r.u, r.k, r.du);
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some(Self::HEADER) {
            return Err(Error::Parse(format!("bound table must start with `{}`", Self::HEADER)));
        }
        let rows = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let f: Vec<&str> = l.split(',').map(str::trim).collect();
                let bad = || Error::Parse(format!("bad bound row `{l}`"));
                if f.len() != 3 {
                    return Err(bad());
                }
                Ok(BoundRow {
                    u: f[0].parse().map_err(|_| bad())?,
                    k: f[1].parse().map_err(|_| bad())?,
                    du: f[2].parse().map_err(|_| bad())?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(BoundTable { rows })
    }
}

/// One row per nongap `u` in `range`.
pub fn bound_table(code: &Code, range: RangeInclusive<i64>) -> BoundTable {
    series(code, range, false)
}

/// One row per integer `u` in `range`; at a gap the row repeats the
/// parameters of the largest nongap below it.
pub fn bound_series(code: &Code, range: RangeInclusive<i64>) -> BoundTable {
    series(code, range, true)
}

fn series(code: &Code, range: RangeInclusive<i64>, include_gaps: bool) -> BoundTable {
    let curve = code.curve();
    let eta = code.eta();
    let mut rows = Vec::new();
    let mut k = 0usize;
    let mut running = i64::MAX;
    for u in 0..=*range.end() {
        if !curve.is_gap(u) {
            k += 1;
            running = running.min(nu_for(curve, eta, u).expect("nongap"));
        }
        if u >= *range.start() && (include_gaps || !curve.is_gap(u)) {
            rows.push(BoundRow { u, k, du: running });
        }
    }
    BoundTable { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn code(q: u32, u: i64) -> Code {
        let f = match q {
            2 => FieldSpec::new(2, 2, &[1, 1, 1]).unwrap(),
            3 => FieldSpec::new(3, 2, &[2, 2, 1]).unwrap(),
            4 => FieldSpec::default_modulus(2, 4).unwrap(),
            _ => unreachable!(),
        };
        Code::hermitian(f, q, u).unwrap()
    }

    /// Direct summation over `i`, written out for the Hermitian case.
    fn nu_brute(q: i64, s: i64) -> i64 {
        (0..q)
            .map(|i| {
                let ip = (s + i) % q;
                (q * q * q + ip * (q + 1) - (q + 1) * i - s).max(0)
            })
            .sum::<i64>()
            / q
    }

    #[test]
    fn nu_examples() {
        let c = code(3, 16);
        assert_eq!(nu(&c, 16).unwrap(), 11);
        assert_eq!(nu_brute(3, 16), 11);
        assert_eq!(hermitian_nu(3, 16).unwrap(), 11);
        assert_eq!(nu(&c, 0).unwrap(), 27);
        assert_eq!(hermitian_nu(3, 0).unwrap(), 27);
        assert!(matches!(nu(&c, 5), Err(Error::GapValue(5))));
        assert!(matches!(hermitian_nu(3, 5), Err(Error::GapValue(5))));
        assert!(matches!(hermitian_nu(3, 27), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn du_examples() {
        assert_eq!(du(&code(3, 16)), 11);
        assert_eq!(hermitian_du(3, 16).unwrap(), 11);
        let c0 = code(3, 0);
        assert_eq!(du(&c0), nu(&c0, 0).unwrap());
        assert_eq!(hermitian_du(4, 60).unwrap(), 4);
        assert_eq!(du(&code(4, 60)), 4);
    }

    #[test]
    fn closed_forms_match_general() {
        for q in [2u32, 3, 4] {
            let n = (q * q * q) as i64;
            let c = code(q, 0);
            for s in 0..n {
                if c.curve().is_gap(s) {
                    continue;
                }
                let general = nu(&c, s).unwrap();
                assert_eq!(hermitian_nu(q, s).unwrap(), general, "q={q} s={s}");
                assert_eq!(nu_brute(q as i64, s), general);
                assert!(general >= n - s);
                assert_eq!(
                    hermitian_du(q, s).unwrap(),
                    du_for(c.curve(), c.eta(), s),
                    "q={q} u={s}"
                );
            }
        }
    }

    #[test]
    fn tables() {
        let c = code(4, 0);
        let t = bound_table(&c, 0..=63);
        assert_eq!(t.rows.len(), 58);
        assert!(t.rows.iter().all(|r| r.du >= 64 - r.u));
        assert!(t.rows.windows(2).all(|w| w[1].du <= w[0].du));
        let mid: Vec<i64> = bound_table(&c, 10..=12).rows.iter().map(|r| r.u).collect();
        assert_eq!(mid, [10, 12]);
        assert_eq!(bound_series(&c, 0..=63).rows.len(), 64);

        let t3 = bound_table(&code(3, 0), 0..=26);
        assert!(t3.rows.contains(&BoundRow { u: 16, k: 14, du: 11 }));
        assert_eq!(BoundTable::from_csv(&t3.to_csv()).unwrap(), t3);
    }
}
