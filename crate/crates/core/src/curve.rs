//! Miura-Kamiya plane curves and their coordinate ring.
//!
//! A curve is `y^a + Σ c_{i,j} x^i y^j + c·x^b = 0` with `gcd(a, b) = 1` and
//! `a·i + b·j < a·b`. Its coordinate ring `R = F[x, y]` is a free `F[x]`-module
//! with basis `1, y, .., y^{a-1}`, so a [`RingElem`] is stored as `a` rows of
//! univariate polynomials in `x`. Elements of `Rz ⊕ R` are [`PairElem`]s.
//!
//! Pole orders at the point at infinity are `δ(x) = a` and `δ(y) = b`; the
//! weighted order `>_s` on `Rz ⊕ R` gives `z` weight `s` and breaks ties by
//! `z > y > x`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Fe, FieldSpec};
use crate::poly::UPoly;

/// Weighted degree with `None` standing for −∞ (the zero element).
pub type Degree = Option<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Fe,
    pub y: Fe,
}

impl Point {
    pub fn new(x: Fe, y: Fe) -> Self {
        Point { x, y }
    }
}

/// A monomial `x^deg_x y^j z^{has_z}` of `Rz ⊕ R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialKey {
    pub has_z: bool,
    pub j: usize,
    pub deg_x: usize,
}

impl MonomialKey {
    /// `δ_s` of the monomial.
    pub fn weight(&self, curve: &PlaneCurve, s: i64) -> i64 {
        let base = (curve.a * self.deg_x + curve.b * self.j) as i64;
        if self.has_z {
            base + s
        } else {
            base
        }
    }

    /// Compares under `>_s`.
    pub fn cmp_s(&self, other: &Self, curve: &PlaneCurve, s: i64) -> Ordering {
        (self.weight(curve, s), self.has_z, self.j).cmp(&(other.weight(curve, s), other.has_z, other.j))
    }
}

impl fmt::Display for MonomialKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.deg_x {
            0 => {}
            1 => parts.push("x".to_string()),
            e => parts.push(format!("x^{e}")),
        }
        match self.j {
            0 => {}
            1 => parts.push("y".to_string()),
            e => parts.push(format!("y^{e}")),
        }
        if self.has_z {
            parts.push("z".to_string());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    field: FieldSpec,
    a: usize,
    b: usize,
    coeffs: BTreeMap<(usize, usize), Fe>,
    c: Fe,
    /// `y^a = Σ_j y_pow_a[j] · y^j`
    y_pow_a: Vec<UPoly>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PlaneCurve {
    pub fn new(
        field: FieldSpec,
        a: usize,
        b: usize,
        coeffs: BTreeMap<(usize, usize), Fe>,
        c: Fe,
    ) -> Result<Self> {
        if a == 0 || b == 0 || gcd(a, b) != 1 {
            return Err(Error::BadCurve(format!("need gcd(a, b) = 1, got a = {a}, b = {b}")));
        }
        if c.is_zero() || c.enc() >= field.order() {
            return Err(Error::BadCurve("coefficient of x^b must be a nonzero element".into()));
        }
        let mut kept = BTreeMap::new();
        for (&(i, j), &v) in &coeffs {
            if v.enc() >= field.order() {
                return Err(Error::BadElement { enc: v.enc(), order: field.order() });
            }
            if j >= a || a * i + b * j >= a * b {
                return Err(Error::BadCurve(format!("term x^{i} y^{j} is not below the curve's degree")));
            }
            if !v.is_zero() {
                kept.insert((i, j), v);
            }
        }

        let mut y_pow_a = vec![UPoly::zero(); a];
        for (&(i, j), &v) in &kept {
            y_pow_a[j].add_scaled_shifted(&field, field.neg(v), i, &UPoly::constant(Fe::ONE));
        }
        y_pow_a[0].add_scaled_shifted(&field, field.neg(c), b, &UPoly::constant(Fe::ONE));

        Ok(PlaneCurve { field, a, b, coeffs: kept, c, y_pow_a })
    }

    /// The Hermitian curve `y^q + y = x^{q+1}` over GF(q²), stored as
    /// `y^q + y − x^{q+1} = 0`.
    pub fn hermitian(field: FieldSpec, q: u32) -> Result<Self> {
        if q < 2 || q.checked_mul(q) != Some(field.order()) {
            return Err(Error::FieldOrderMismatch {
                expected: q.saturating_mul(q),
                actual: field.order(),
            });
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 1), Fe::ONE);
        let c = field.neg(Fe::ONE);
        PlaneCurve::new(field, q as usize, q as usize + 1, coeffs, c)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// `δ(x)`
    pub fn a(&self) -> usize {
        self.a
    }

    /// `δ(y)`
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), Fe> {
        &self.coeffs
    }

    pub fn c(&self) -> Fe {
        self.c
    }

    /// Returns `q` when this is the Hermitian curve over GF(q²).
    pub fn hermitian_q(&self) -> Option<u32> {
        let q = self.a as u32;
        let herm = self.b == self.a + 1
            && q.checked_mul(q) == Some(self.field.order())
            && self.coeffs.len() == 1
            && self.coeffs.get(&(0, 1)) == Some(&Fe::ONE)
            && self.c == self.field.neg(Fe::ONE);
        herm.then_some(q)
    }

    /// Genus of the curve, which is also the number of gaps.
    pub fn genus(&self) -> usize {
        (self.a - 1) * (self.b - 1) / 2
    }

    // -- semigroup ---------------------------------------------------------

    /// The unique `(i, j)` with `j < a` and `a·i + b·j = s`.
    pub fn phi(&self, s: i64) -> Result<(usize, usize)> {
        if s < 0 {
            return Err(Error::GapValue(s));
        }
        let s = s as usize;
        (0..self.a)
            .take_while(|&j| self.b * j <= s)
            .find(|&j| (s - self.b * j).is_multiple_of(self.a))
            .map(|j| ((s - self.b * j) / self.a, j))
            .ok_or(Error::GapValue(s as i64))
    }

    pub fn is_gap(&self, s: i64) -> bool {
        self.phi(s).is_err()
    }

    /// Ascending nongaps `≤ u`.
    pub fn nongaps_upto(&self, u: i64) -> Vec<i64> {
        (0..=u.max(-1)).filter(|&s| !self.is_gap(s)).collect()
    }

    /// `φ_s` as a ring element.
    pub fn phi_elem(&self, s: i64) -> Result<RingElem> {
        let (i, j) = self.phi(s)?;
        Ok(RingElem::monomial(self, Fe::ONE, i, j))
    }

    // -- points ------------------------------------------------------------

    fn partials_at(&self, x: Fe, y: Fe) -> (Fe, Fe, Fe) {
        let f = &self.field;
        let a = self.a as u64;
        let b = self.b as u64;
        let mut e = f.add(f.pow(y, a), f.mul(self.c, f.pow(x, b)));
        let mut ex = f.mul(f.from_int(b as i64), f.mul(self.c, f.pow(x, b - 1)));
        let mut ey = f.mul(f.from_int(a as i64), f.pow(y, a - 1));
        for (&(i, j), &v) in &self.coeffs {
            let (i, j) = (i as u64, j as u64);
            e = f.add(e, f.mul(v, f.mul(f.pow(x, i), f.pow(y, j))));
            if i > 0 {
                let t = f.mul(f.from_int(i as i64), f.mul(v, f.mul(f.pow(x, i - 1), f.pow(y, j))));
                ex = f.add(ex, t);
            }
            if j > 0 {
                let t = f.mul(f.from_int(j as i64), f.mul(v, f.mul(f.pow(x, i), f.pow(y, j - 1))));
                ey = f.add(ey, t);
            }
        }
        (e, ex, ey)
    }

    /// Evaluates the defining polynomial `E` at `(x, y)`.
    pub fn equation_at(&self, p: Point) -> Fe {
        self.partials_at(p.x, p.y).0
    }

    /// True when `p` lies on the curve and is nonsingular.
    pub fn contains(&self, p: Point) -> bool {
        let (e, ex, ey) = self.partials_at(p.x, p.y);
        e.is_zero() && !(ex.is_zero() && ey.is_zero())
    }

    /// All nonsingular affine rational points, ordered by `(enc(x), enc(y))`.
    pub fn points(&self) -> Vec<Point> {
        let f = &self.field;
        f.elements()
            .flat_map(|x| f.elements().map(move |y| Point::new(x, y)))
            .filter(|&p| self.contains(p))
            .collect()
    }

    // -- ring arithmetic ---------------------------------------------------

    /// Product in `R`, reduced to y-degree below `a`.
    pub fn mul(&self, f: &RingElem, g: &RingElem) -> RingElem {
        let fs = &self.field;
        let a = self.a;
        let mut prod = vec![UPoly::zero(); 2 * a - 1];
        for (j1, r1) in f.rows.iter().enumerate() {
            if r1.is_zero() {
                continue;
            }
            for (j2, r2) in g.rows.iter().enumerate() {
                if r2.is_zero() {
                    continue;
                }
                let t = r1.mul(fs, r2);
                prod[j1 + j2] = prod[j1 + j2].add(fs, &t);
            }
        }
        for j in (a..2 * a - 1).rev() {
            let top = std::mem::take(&mut prod[j]);
            if top.is_zero() {
                continue;
            }
            for (jj, rel) in self.y_pow_a.iter().enumerate() {
                if !rel.is_zero() {
                    let t = top.mul(fs, rel);
                    prod[j - a + jj] = prod[j - a + jj].add(fs, &t);
                }
            }
        }
        prod.truncate(a);
        RingElem { rows: prod }
    }

    pub fn eval(&self, f: &RingElem, p: Point) -> Fe {
        let fs = &self.field;
        f.rows
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, row| fs.add(fs.mul(acc, p.y), row.eval(fs, p.x)))
    }

    /// `zpart(P)·zval + cpart(P)`
    pub fn pair_eval(&self, f: &PairElem, p: Point, zval: Fe) -> Fe {
        let fs = &self.field;
        fs.add(fs.mul(self.eval(&f.z, p), zval), self.eval(&f.c, p))
    }

    /// Leading monomial and coefficient of `f` under `>_s`.
    pub fn lt_s(&self, f: &PairElem, s: i64) -> Result<(MonomialKey, Fe)> {
        let z_terms = f.z.rows.iter().enumerate().filter_map(|(j, r)| {
            r.degree().map(|d| (MonomialKey { has_z: true, j, deg_x: d }, r.lc()))
        });
        let c_terms = f.c.rows.iter().enumerate().filter_map(|(j, r)| {
            r.degree().map(|d| (MonomialKey { has_z: false, j, deg_x: d }, r.lc()))
        });
        z_terms
            .chain(c_terms)
            .max_by(|x, y| x.0.cmp_s(&y.0, self, s))
            .ok_or(Error::ZeroElement)
    }

    /// Leading monomial and coefficient of a ring element under `>_δ`.
    pub fn lt_delta(&self, f: &RingElem) -> Result<(MonomialKey, Fe)> {
        f.rows
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.degree().map(|d| (MonomialKey { has_z: false, j, deg_x: d }, r.lc())))
            .max_by(|x, y| x.0.cmp_s(&y.0, self, 0))
            .ok_or(Error::ZeroElement)
    }

    /// `δ(f)`, the pole order at infinity.
    pub fn delta(&self, f: &RingElem) -> Degree {
        f.rows
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.degree().map(|d| (self.a * d + self.b * j) as i64))
            .max()
    }

    /// `δ_s(F)`
    pub fn delta_s(&self, f: &PairElem, s: i64) -> Degree {
        let dz = self.delta(&f.z).map(|d| d + s);
        dz.max(self.delta(&f.c))
    }

    /// Substitutes `z ↦ z + w·φ_s`.
    pub fn subst_z(&self, f: &PairElem, w: Fe, s: i64) -> Result<PairElem> {
        let (i, j) = self.phi(s)?;
        if w.is_zero() {
            return Ok(f.clone());
        }
        let phi = RingElem::monomial(self, w, i, j);
        let extra = self.mul(&f.z, &phi);
        Ok(PairElem { z: f.z.clone(), c: f.c.add(&self.field, &extra) })
    }
}

/// An element of `R`, as `a` rows: `rows[j]` is the coefficient of `y^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    rows: Vec<UPoly>,
}

impl RingElem {
    pub fn zero(curve: &PlaneCurve) -> Self {
        RingElem { rows: vec![UPoly::zero(); curve.a] }
    }

    pub fn one(curve: &PlaneCurve) -> Self {
        RingElem::monomial(curve, Fe::ONE, 0, 0)
    }

    /// `c·x^i·y^j`; `j` may exceed `a − 1`, in which case the result is reduced.
    pub fn monomial(curve: &PlaneCurve, c: Fe, i: usize, j: usize) -> Self {
        if j < curve.a {
            let mut e = RingElem::zero(curve);
            e.rows[j] = UPoly::monomial(c, i);
            return e;
        }
        let y = RingElem::monomial(curve, Fe::ONE, 0, 1);
        let mut acc = RingElem::monomial(curve, c, i, curve.a - 1);
        for _ in curve.a - 1..j {
            acc = curve.mul(&acc, &y);
        }
        acc
    }

    /// Builds from explicit rows; fails unless there are exactly `a` rows.
    pub fn from_rows(curve: &PlaneCurve, rows: Vec<UPoly>) -> Result<Self> {
        if rows.len() != curve.a {
            return Err(Error::LengthMismatch { expected: curve.a, actual: rows.len() });
        }
        Ok(RingElem { rows })
    }

    /// A polynomial in `x` times `y^j` (`j < a`).
    pub fn from_row(curve: &PlaneCurve, j: usize, row: UPoly) -> Self {
        let mut e = RingElem::zero(curve);
        e.rows[j] = row;
        e
    }

    pub fn rows(&self) -> &[UPoly] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &UPoly {
        &self.rows[j]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(UPoly::is_zero)
    }

    pub fn add(&self, f: &FieldSpec, o: &RingElem) -> RingElem {
        RingElem { rows: self.rows.iter().zip(&o.rows).map(|(x, y)| x.add(f, y)).collect() }
    }

    pub fn sub(&self, f: &FieldSpec, o: &RingElem) -> RingElem {
        RingElem { rows: self.rows.iter().zip(&o.rows).map(|(x, y)| x.sub(f, y)).collect() }
    }

    pub fn scale(&self, f: &FieldSpec, c: Fe) -> RingElem {
        RingElem { rows: self.rows.iter().map(|r| r.scale(f, c)).collect() }
    }

    /// Multiplies by `x^e`.
    pub fn shift_x(&self, e: usize) -> RingElem {
        RingElem { rows: self.rows.iter().map(|r| r.shift(e)).collect() }
    }

    /// Multiplies by a polynomial in `x` (an `F[x]`-scalar).
    pub fn mul_upoly(&self, f: &FieldSpec, p: &UPoly) -> RingElem {
        RingElem { rows: self.rows.iter().map(|r| r.mul(f, p)).collect() }
    }

    /// `self += c·x^e·o`
    pub fn add_scaled_shifted(&mut self, f: &FieldSpec, c: Fe, e: usize, o: &RingElem) {
        for (r, orow) in self.rows.iter_mut().zip(&o.rows) {
            r.add_scaled_shifted(f, c, e, orow);
        }
    }
}

fn fmt_row(row: &UPoly) -> String {
    if row.is_zero() {
        "0".to_string()
    } else {
        row.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Rows separated by `|`, each a comma-separated list of encodings
/// (constant term first).
impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(fmt_row).collect();
        write!(f, "{}", rows.join(" | "))
    }
}

impl FromStr for RingElem {
    type Err = Error;

    /// Parses the textual form; the number of rows is taken from the input and
    /// must be checked against a curve with [`RingElem::from_rows`] if needed.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('|')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u16>()
                            .map(Fe)
                            .map_err(|_| Error::Parse(format!("bad coefficient `{t}`")))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(UPoly::from_coeffs)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RingElem { rows })
    }
}

/// `z·zpart + cpart` in `Rz ⊕ R`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairElem {
    pub z: RingElem,
    pub c: RingElem,
}

impl PairElem {
    pub fn from_const(curve: &PlaneCurve, c: RingElem) -> Self {
        PairElem { z: RingElem::zero(curve), c }
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.c.is_zero()
    }

    pub fn add(&self, f: &FieldSpec, o: &PairElem) -> PairElem {
        PairElem { z: self.z.add(f, &o.z), c: self.c.add(f, &o.c) }
    }

    pub fn sub(&self, f: &FieldSpec, o: &PairElem) -> PairElem {
        PairElem { z: self.z.sub(f, &o.z), c: self.c.sub(f, &o.c) }
    }

    pub fn scale(&self, f: &FieldSpec, c: Fe) -> PairElem {
        PairElem { z: self.z.scale(f, c), c: self.c.scale(f, c) }
    }

    pub fn shift_x(&self, e: usize) -> PairElem {
        PairElem { z: self.z.shift_x(e), c: self.c.shift_x(e) }
    }

    /// `self += c·x^e·o`
    pub fn add_scaled_shifted(&mut self, f: &FieldSpec, c: Fe, e: usize, o: &PairElem) {
        self.z.add_scaled_shifted(f, c, e, &o.z);
        self.c.add_scaled_shifted(f, c, e, &o.c);
    }
}

impl fmt::Display for PairElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z: {} ; c: {}", self.z, self.c)
    }
}

impl FromStr for PairElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("pair element `{s}`, expected `z: .. ; c: ..`"));
        let (zs, cs) = s.split_once(';').ok_or_else(bad)?;
        let zs = zs.trim().strip_prefix("z:").ok_or_else(bad)?;
        let cs = cs.trim().strip_prefix("c:").ok_or_else(bad)?;
        Ok(PairElem { z: zs.parse()?, c: cs.parse()? })
    }
}
