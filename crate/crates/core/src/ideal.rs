//! Interpolation over a point set: the Lagrange basis `h_i`, the interpolant
//! `h_v = Σ v_i h_i`, and a Gröbner basis `η_0, .., η_{a-1}` of the ideal of
//! functions vanishing on every point.

use std::collections::{BTreeMap, HashSet};

use crate::curve::{PlaneCurve, Point, RingElem};
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::poly::UPoly;

fn check_distinct(points: &[Point]) -> Result<()> {
    let mut seen = HashSet::new();
    for p in points {
        if !seen.insert(*p) {
            return Err(Error::DuplicatePoint(p.x.enc(), p.y.enc()));
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct LagrangeBasis {
    hs: Vec<RingElem>,
}

impl LagrangeBasis {
    /// `h_i = h_{i,x}(x)·h_{i,y}(y)`, normalized so `h_i(P_i) = 1`, where
    /// `h_{i,x}` kills every other x-coordinate and `h_{i,y}` kills the other
    /// y-coordinates above the same x.
    pub fn new(curve: &PlaneCurve, points: &[Point]) -> Result<Self> {
        check_distinct(points)?;
        let f = curve.field();
        let mut fibres: BTreeMap<Fe, Vec<Fe>> = BTreeMap::new();
        for p in points {
            fibres.entry(p.x).or_default().push(p.y);
        }

        let mut hs = Vec::with_capacity(points.len());
        for p in points {
            let hx = UPoly::from_roots(f, fibres.keys().copied().filter(|&x| x != p.x));
            let hy = UPoly::from_roots(f, fibres[&p.x].iter().copied().filter(|&y| y != p.y));
            if hy.degree().unwrap_or(0) >= curve.a() {
                return Err(Error::PointNotOnCurve(p.x.enc(), p.y.enc()));
            }
            let norm = f.mul(hx.eval(f, p.x), hy.eval(f, p.y));
            let norm_inv = f.inv(norm)?;
            let hx = hx.scale(f, norm_inv);
            let rows = (0..curve.a()).map(|j| hx.scale(f, hy.coeff(j as i64))).collect();
            hs.push(RingElem::from_rows(curve, rows)?);
        }
        Ok(LagrangeBasis { hs })
    }

    pub fn len(&self) -> usize {
        self.hs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hs.is_empty()
    }

    pub fn hs(&self) -> &[RingElem] {
        &self.hs
    }

    /// The interpolant `h_v = Σ v_i h_i`.
    pub fn interpolate(&self, curve: &PlaneCurve, v: &[Fe]) -> Result<RingElem> {
        if v.len() != self.hs.len() {
            return Err(Error::LengthMismatch { expected: self.hs.len(), actual: v.len() });
        }
        let f = curve.field();
        let mut acc = RingElem::zero(curve);
        for (&vi, h) in v.iter().zip(&self.hs) {
            acc.add_scaled_shifted(f, vi, 0, h);
        }
        Ok(acc)
    }
}

/// A Gröbner basis of a vanishing ideal with `deg_y LT(η_i) = i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaBasis {
    etas: Vec<RingElem>,
    lt_deg_x: Vec<usize>,
}

impl EtaBasis {
    pub fn etas(&self) -> &[RingElem] {
        &self.etas
    }

    /// `deg_x LT(η_i)` for each `i`.
    pub fn lt_deg_x(&self) -> &[usize] {
        &self.lt_deg_x
    }

    /// `Σ deg_x LT(η_i)`, the number of points.
    pub fn colength(&self) -> usize {
        self.lt_deg_x.iter().sum()
    }

    /// `δ(η_i)`
    pub fn delta(&self, curve: &PlaneCurve, i: usize) -> i64 {
        (curve.a() * self.lt_deg_x[i] + curve.b() * i) as i64
    }
}

/// Computes the vanishing basis point by point.
///
/// Starting from `1, y, .., y^{a-1}` (the ideal of the empty set), each new
/// point picks as pivot the non-vanishing element with the smallest leading
/// term, clears the other non-vanishing elements against it, and multiplies
/// the pivot by `x − α`. Leading y-degrees stay distinct throughout, and the
/// final basis is inter-reduced and monic.
pub fn vanishing_basis(curve: &PlaneCurve, points: &[Point]) -> Result<EtaBasis> {
    check_distinct(points)?;
    let f = curve.field();
    let a = curve.a();
    let mut basis: Vec<RingElem> = (0..a).map(|j| RingElem::monomial(curve, Fe::ONE, 0, j)).collect();
    let mut degs = vec![0usize; a];

    for p in points {
        let vals: Vec<Fe> = basis.iter().map(|e| curve.eval(e, *p)).collect();
        // Weights a·deg + b·j are pairwise distinct, so the minimum is unique.
        let Some(pivot) = (0..a)
            .filter(|&j| !vals[j].is_zero())
            .min_by_key(|&j| a * degs[j] + curve.b() * j)
        else {
            // Every element already vanishes: the point is not a simple zero.
            return Err(Error::PointNotOnCurve(p.x.enc(), p.y.enc()));
        };
        let pinv = f.inv(vals[pivot])?;
        let pe = basis[pivot].clone();
        for j in 0..a {
            if j != pivot && !vals[j].is_zero() {
                let c = f.neg(f.mul(vals[j], pinv));
                basis[j].add_scaled_shifted(f, c, 0, &pe);
            }
        }
        let lin = UPoly::from_coeffs(vec![f.neg(p.x), Fe::ONE]);
        basis[pivot] = pe.mul_upoly(f, &lin);
        degs[pivot] += 1;
    }

    inter_reduce(curve, &mut basis, &degs)?;
    for e in basis.iter_mut() {
        let (_, lc) = curve.lt_delta(e)?;
        *e = e.scale(f, f.inv(lc)?);
    }
    Ok(EtaBasis { etas: basis, lt_deg_x: degs })
}

/// Removes every non-leading term divisible by another element's leading term.
fn inter_reduce(curve: &PlaneCurve, basis: &mut [RingElem], degs: &[usize]) -> Result<()> {
    let f = curve.field().clone();
    let a = curve.a();
    let lcs: Vec<Fe> = basis
        .iter()
        .map(|e| curve.lt_delta(e).map(|(_, c)| c))
        .collect::<Result<_>>()?;
    for i in 0..a {
        loop {
            // Largest reducible term outside the leading position.
            let lt_weight = (a * degs[i] + curve.b() * i) as i64;
            let mut best: Option<(i64, usize, usize)> = None;
            for (j, &dj) in degs.iter().enumerate() {
                let row = basis[i].row(j);
                for (e, c) in row.coeffs().iter().enumerate().rev() {
                    if e < dj {
                        break;
                    }
                    let w = (a * e + curve.b() * j) as i64;
                    if !c.is_zero() && w < lt_weight && best.is_none_or(|b| w > b.0) {
                        best = Some((w, j, e));
                        break;
                    }
                }
            }
            let Some((_, j, e)) = best else { break };
            let c = basis[i].row(j).coeff(e as i64);
            let factor = f.neg(f.div(c, lcs[j])?);
            let other = basis[j].clone();
            basis[i].add_scaled_shifted(&f, factor, e - degs[j], &other);
        }
    }
    Ok(())
}

/// `η_i = y^i (x^{q²} − x)`, the vanishing basis of all affine points of the
/// Hermitian curve.
pub fn hermitian_eta(curve: &PlaneCurve) -> Result<EtaBasis> {
    let q = curve
        .hermitian_q()
        .ok_or_else(|| Error::BadCurve("not a Hermitian curve".into()))?;
    let f = curve.field();
    let q2 = (q * q) as usize;
    let base = UPoly::monomial(Fe::ONE, q2).sub(f, &UPoly::monomial(Fe::ONE, 1));
    let etas = (0..curve.a()).map(|j| RingElem::from_row(curve, j, base.clone())).collect();
    Ok(EtaBasis { etas, lt_deg_x: vec![q2; curve.a()] })
}
