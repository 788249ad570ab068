//! Fixtures for the worked F9 example and a small notation for its tables.
#![allow(dead_code)]

use plane_ag::config::{parse_vector, CodeConfig};
use plane_ag::{Code, Fe, FieldSpec, PairElem, UPoly};

pub const WORKED_CFG: &str = include_str!("../data/worked_f9.cfg");
pub const WORKED_RECEIVED: &str = include_str!("../data/worked_received.txt");

/// Encodings of α^0..α^7 in F9 with α² = α + 1.
pub const ALPHA: [u16; 8] = [1, 3, 4, 7, 2, 6, 8, 5];

pub fn f9() -> FieldSpec {
    FieldSpec::new(3, 2, &[2, 2, 1]).unwrap()
}

pub fn worked_code() -> Code {
    WORKED_CFG.parse::<CodeConfig>().unwrap().build().unwrap()
}

pub fn worked_received() -> Vec<Fe> {
    parse_vector(&f9(), WORKED_RECEIVED).unwrap()
}

/// A single term such as `a7x8` (α⁷x⁸), `2x`, `x12` or `1`.
pub fn term(s: &str) -> (Fe, usize) {
    let s = s.trim();
    let (coef, deg) = match s.split_once('x') {
        Some((c, "")) => (c, 1),
        Some((c, d)) => (c, d.parse().unwrap()),
        None => (s, 0),
    };
    let coef = match coef {
        "" => Fe(1),
        c if c.starts_with('a') => Fe(ALPHA[c[1..].parse::<usize>().unwrap()]),
        c => Fe(c.parse().unwrap()),
    };
    (coef, deg)
}

/// A sum of terms, e.g. `a3x8 + x7 + 2x2`.
pub fn upoly(s: &str) -> UPoly {
    let mut coeffs = vec![Fe(0); 16];
    for t in s.split('+') {
        let (c, d) = term(t);
        coeffs[d] = c;
    }
    UPoly::from_coeffs(coeffs)
}

/// Leading coefficient and x-degree of the six F[x] components of a pair
/// element, in the column order `y²z, yz, z, y², y, 1`.
pub fn leading_cells(e: &PairElem) -> Vec<Option<(Fe, usize)>> {
    let rows = [e.z.row(2), e.z.row(1), e.z.row(0), e.c.row(2), e.c.row(1), e.c.row(0)];
    rows.iter().map(|r| r.degree().map(|d| (r.lc(), d))).collect()
}

/// Parses a row like `[,,1,a7x8,a2x8,x8]`.
pub fn cells(s: &str) -> Vec<Option<(Fe, usize)>> {
    s.trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|c| if c.trim().is_empty() { None } else { Some(term(c)) })
        .collect()
}
