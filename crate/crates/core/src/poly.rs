//! Dense univariate polynomials over a [`FieldSpec`], constant term first.

use crate::field::{Fe, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct UPoly {
    coeffs: Vec<Fe>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fe) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    /// `c·x^e`
    pub fn monomial(c: Fe, e: usize) -> Self {
        let mut v = vec![Fe::ZERO; e + 1];
        v[e] = c;
        UPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    /// Coefficient of `x^e`; `e` may be negative, giving zero.
    pub fn coeff(&self, e: i64) -> Fe {
        if e < 0 {
            return Fe::ZERO;
        }
        self.coeffs.get(e as usize).copied().unwrap_or(Fe::ZERO)
    }

    pub fn add(&self, f: &FieldSpec, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| f.add(self.coeff(i as i64), other.coeff(i as i64)))
            .collect();
        UPoly::from_coeffs(v)
    }

    pub fn sub(&self, f: &FieldSpec, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| f.sub(self.coeff(i as i64), other.coeff(i as i64)))
            .collect();
        UPoly::from_coeffs(v)
    }

    pub fn scale(&self, f: &FieldSpec, c: Fe) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Fe::ZERO; e];
        v.extend_from_slice(&self.coeffs);
        UPoly { coeffs: v }
    }

    pub fn mul(&self, f: &FieldSpec, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        UPoly::from_coeffs(v)
    }

    /// `self += c·x^e·other`
    pub fn add_scaled_shifted(&mut self, f: &FieldSpec, c: Fe, e: usize, other: &UPoly) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + e;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, Fe::ZERO);
        }
        for (j, &b) in other.coeffs.iter().enumerate() {
            self.coeffs[e + j] = f.add(self.coeffs[e + j], f.mul(c, b));
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn eval(&self, f: &FieldSpec, x: Fe) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `∏ (x − r)` over the given roots.
    pub fn from_roots(f: &FieldSpec, roots: impl IntoIterator<Item = Fe>) -> UPoly {
        roots.into_iter().fold(UPoly::constant(Fe::ONE), |acc, r| {
            acc.mul(f, &UPoly::from_coeffs(vec![f.neg(r), Fe::ONE]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_degrees() {
        let p = UPoly::from_coeffs(vec![Fe(1), Fe(0), Fe(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(UPoly::from_coeffs(vec![Fe(0)]).degree(), None);
    }

    #[test]
    fn roots_vanish() {
        let f = FieldSpec::new(3, 2, &[2, 2, 1]).unwrap();
        let all: Vec<Fe> = f.elements().collect();
        let p = UPoly::from_roots(&f, all.iter().copied());
        assert_eq!(p.degree(), Some(9));
        // x^9 - x
        let expect = UPoly::monomial(Fe::ONE, 9).sub(&f, &UPoly::monomial(Fe::ONE, 1));
        assert_eq!(p, expect);
        for x in all {
            assert!(p.eval(&f, x).is_zero());
        }
    }

    #[test]
    fn add_scaled_shifted_matches_mul() {
        let f = FieldSpec::prime(5).unwrap();
        let a = UPoly::from_coeffs(vec![Fe(1), Fe(2), Fe(3)]);
        let b = UPoly::from_coeffs(vec![Fe(4), Fe(1)]);
        let mut acc = a.clone();
        acc.add_scaled_shifted(&f, Fe(3), 2, &b);
        let expect = a.add(&f, &b.mul(&f, &UPoly::monomial(Fe(3), 2)));
        assert_eq!(acc, expect);
    }
}
