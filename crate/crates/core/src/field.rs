//! Small finite fields GF(p^k) in a polynomial basis.
//!
//! An element is stored as its base-p digit packing: the coordinate vector
//! `(c_0, .., c_{k-1})` of `c_0 + c_1 α + .. + c_{k-1} α^{k-1}` is encoded as
//! `c_0 + c_1 p + .. + c_{k-1} p^{k-1}`. The encoding doubles as a total
//! order, which the decoder uses for deterministic tie-breaking.
//!
//! Fields are tiny (at most [`MAX_ORDER`] elements), so the full addition and
//! multiplication tables are built once at construction.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted by [`FieldSpec::new`].
pub const MAX_ORDER: u32 = 256;

/// A field element, identified by its canonical encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn enc(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
    order: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// A validated description of GF(p^k) together with its arithmetic tables.
///
/// Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct FieldSpec {
    t: Arc<Tables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({})", self)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.modulus == other.t.modulus
    }
}

impl Eq for FieldSpec {}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Remainder of `num` modulo the monic `den`, both over GF(p), constant term first.
fn poly_rem_mod_p(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (j, &c) in den.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Brute-force irreducibility: no monic factor of degree 1..=k/2 divides `m`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut x = low;
            for _ in 0..d {
                cand.push(x % p);
                x /= p;
            }
            cand.push(1);
            if poly_rem_mod_p(m, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^k) from a monic modulus given as `k + 1` base-p digits,
    /// constant term first.
    pub fn new(p: u32, k: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        if k == 0 || modulus.len() != k as usize + 1 {
            return Err(Error::DegreeMismatch { k, digits: modulus.len() });
        }
        if let Some(&d) = modulus.iter().find(|&&d| d >= p) {
            return Err(Error::BadDigit { digit: d, p });
        }
        if modulus[k as usize] != 1 {
            return Err(Error::DegreeMismatch { k, digits: modulus.len() });
        }
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, k })?;
        if !is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus);
        }

        let q = order as usize;
        let digits = |e: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(k as usize);
            let mut x = e;
            for _ in 0..k {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let pack = |v: &[u32]| -> u16 { v.iter().rev().fold(0u32, |acc, &c| acc * p + c) as u16 };

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..order {
            let da = digits(a);
            for b in 0..order {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * q + b as usize] = pack(&sum);

                let mut prod = vec![0u32; 2 * k as usize - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = poly_rem_mod_p(&prod, modulus, p);
                r.resize(k as usize, 0);
                mul[a as usize * q + b as usize] = pack(&r);
            }
        }
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16;
            if a != 0 {
                inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u16;
            }
        }

        Ok(FieldSpec {
            t: Arc::new(Tables { p, k, modulus: modulus.to_vec(), order, add, mul, neg, inv }),
        })
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        FieldSpec::new(p, 1, &[0, 1])
    }

    /// First irreducible monic modulus of degree `k` in encoding order.
    pub fn default_modulus(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, k })?;
        for low in 0..order {
            let mut m = Vec::with_capacity(k as usize + 1);
            let mut x = low;
            for _ in 0..k {
                m.push(x % p);
                x /= p;
            }
            m.push(1);
            if is_irreducible(&m, p) {
                return FieldSpec::new(p, k, &m);
            }
        }
        Err(Error::ReducibleModulus)
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }

    pub fn k(&self) -> u32 {
        self.t.k
    }

    pub fn order(&self) -> u32 {
        self.t.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// Decimal encoding of the modulus digit string (including the leading 1).
    pub fn modulus_enc(&self) -> u32 {
        self.t.modulus.iter().rev().fold(0, |acc, &d| acc * self.t.p + d)
    }

    pub fn element(&self, enc: u32) -> Result<Fe> {
        if enc < self.t.order {
            Ok(Fe(enc as u16))
        } else {
            Err(Error::BadElement { enc, order: self.t.order })
        }
    }

    /// Embeds an integer via its residue mod p.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.t.p as i64) as u16)
    }

    /// Base-p coordinates of `a` in the polynomial basis.
    pub fn coords(&self, a: Fe) -> Vec<u32> {
        let mut x = a.enc();
        (0..self.t.k)
            .map(|_| {
                let c = x % self.t.p;
                x /= self.t.p;
                c
            })
            .collect()
    }

    /// The class of the indeterminate, α. Equals `p` for k ≥ 2.
    pub fn generator_alpha(&self) -> Fe {
        if self.t.k == 1 {
            Fe(0)
        } else {
            Fe(self.t.p as u16)
        }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.t.add[a.0 as usize * self.t.order as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.t.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.t.mul[a.0 as usize * self.t.order as usize + b.0 as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Fe(self.t.inv[a.0 as usize]))
        }
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.t.order).map(|e| Fe(e as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (1..self.t.order).map(|e| Fe(e as u16))
    }
}

/// Prints the field name `p^k/m`, `m` being [`FieldSpec::modulus_enc`].
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}/{}", self.t.p, self.t.k, self.modulus_enc())
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("field name `{s}`, expected p^k/m"));
        let (pk, m) = s.trim().split_once('/').ok_or_else(bad)?;
        let (p, k) = pk.split_once('^').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let k: u32 = k.trim().parse().map_err(|_| bad())?;
        let mut m: u64 = m.trim().parse().map_err(|_| bad())?;
        if p < 2 {
            return Err(Error::NonPrimeP(p));
        }
        let mut digits = Vec::new();
        while m > 0 {
            digits.push((m % p as u64) as u32);
            m /= p as u64;
        }
        FieldSpec::new(p, k, &digits)
    }
}
