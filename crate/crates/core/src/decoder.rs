//! Evaluation encoding and interpolation-based unique decoding.
//!
//! Decoding keeps a Gröbner basis `{g_i, f_i}` of the module of z-linear
//! interpolants through `(P_j, v_j)` with respect to `>_s`, and walks `s` down
//! to zero. Each step pairs every `f_i` with a `g_{i'}`, collects a candidate
//! coefficient `w_i` from each pair, takes a weighted majority vote when `s`
//! is a message position, and rebases the basis for `>_{s-1}`. The votes at
//! the nongaps `s ≤ u` form the recovered message.

use std::collections::BTreeMap;
use std::fmt;

use crate::bounds;
use crate::curve::{PairElem, PlaneCurve, Point, RingElem};
use crate::error::{Error, Result};
use crate::field::{Fe, FieldSpec};
use crate::ideal::{vanishing_basis, EtaBasis, LagrangeBasis};

/// The evaluation code `C_u` on a fixed ordered point set.
#[derive(Debug, Clone)]
pub struct Code {
    curve: PlaneCurve,
    points: Vec<Point>,
    u: i64,
    nongaps: Vec<i64>,
    lagrange: LagrangeBasis,
    eta: EtaBasis,
    du: i64,
}

impl Code {
    pub fn new(curve: PlaneCurve, points: Vec<Point>, u: i64) -> Result<Self> {
        for p in &points {
            if !curve.contains(*p) {
                return Err(Error::PointNotOnCurve(p.x.enc(), p.y.enc()));
            }
        }
        if u < 0 || u >= points.len() as i64 {
            return Err(Error::DegreeCapTooLarge { u, n: points.len() });
        }
        let lagrange = LagrangeBasis::new(&curve, &points)?;
        let eta = vanishing_basis(&curve, &points)?;
        let nongaps = curve.nongaps_upto(u);
        let mut code = Code { curve, points, u, nongaps, lagrange, eta, du: 0 };
        code.du = bounds::du(&code);
        Ok(code)
    }

    /// Uses every rational point in the default `(enc(x), enc(y))` order.
    pub fn with_all_points(curve: PlaneCurve, u: i64) -> Result<Self> {
        let points = curve.points();
        Code::new(curve, points, u)
    }

    pub fn hermitian(field: FieldSpec, q: u32, u: i64) -> Result<Self> {
        Code::with_all_points(PlaneCurve::hermitian(field, q)?, u)
    }

    pub fn curve(&self) -> &PlaneCurve {
        &self.curve
    }

    pub fn field(&self) -> &FieldSpec {
        self.curve.field()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.nongaps.len()
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    /// Message positions `s_1 < .. < s_k`.
    pub fn nongaps(&self) -> &[i64] {
        &self.nongaps
    }

    pub fn lagrange(&self) -> &LagrangeBasis {
        &self.lagrange
    }

    pub fn eta(&self) -> &EtaBasis {
        &self.eta
    }

    /// The order bound `d_u`.
    pub fn du(&self) -> i64 {
        self.du
    }

    /// Errors of weight up to this value are always corrected.
    pub fn radius(&self) -> usize {
        ((self.du - 1) / 2).max(0) as usize
    }

    /// `μ = Σ m_i φ_{s_i}` as a ring element.
    pub fn message_poly(&self, message: &[Fe]) -> Result<RingElem> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch { expected: self.k(), actual: message.len() });
        }
        let f = self.field();
        let mut mu = RingElem::zero(&self.curve);
        for (&m, &s) in message.iter().zip(&self.nongaps) {
            let (i, j) = self.curve.phi(s)?;
            mu.add_scaled_shifted(f, m, 0, &RingElem::monomial(&self.curve, Fe::ONE, i, j));
        }
        Ok(mu)
    }

    pub fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        let mu = self.message_poly(message)?;
        Ok(self.points.iter().map(|&p| self.curve.eval(&mu, p)).collect())
    }

    pub fn decode(&self, v: &[Fe]) -> Result<Decoded> {
        let mut state = DecoderState::init(self, v)?;
        while state.s >= 0 {
            state.step(self)?;
        }
        self.finish(v, &state)
    }

    /// Like [`Code::decode`], also returning one record per value of `s`.
    pub fn decode_trace(&self, v: &[Fe]) -> Result<(Decoded, Vec<StepRecord>)> {
        let mut state = DecoderState::init(self, v)?;
        let mut trace = Vec::with_capacity(state.s as usize + 1);
        while state.s >= 0 {
            trace.push(state.step(self)?);
        }
        Ok((self.finish(v, &state)?, trace))
    }

    fn finish(&self, v: &[Fe], state: &DecoderState) -> Result<Decoded> {
        let message: Vec<Fe> = self
            .nongaps
            .iter()
            .map(|s| state.votes.get(s).copied().unwrap_or(Fe::ZERO))
            .collect();
        let codeword = self.encode(&message)?;
        let error_weight = hamming(v, &codeword);
        let within_guarantee = (2 * error_weight as i64) < self.du;
        Ok(Decoded { message, codeword, error_weight, within_guarantee })
    }
}

pub fn hamming(a: &[Fe], b: &[Fe]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub message: Vec<Fe>,
    pub codeword: Vec<Fe>,
    /// Hamming distance between the input and the re-encoded codeword.
    pub error_weight: usize,
    /// `2·error_weight < d_u`
    pub within_guarantee: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairEntry {
    pub i_prime: usize,
    pub k: i64,
    pub c: i64,
    pub c_bar: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingData {
    pub entries: Vec<PairEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    /// `s > u` or `s` a gap: candidates are recorded, the chosen value is 0.
    Settle,
    /// `s ≤ u` nongap: majority vote on the coefficient of `φ_s`.
    Vote,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::Settle => "settle",
            Phase::Vote => "vote",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoteResult {
    pub phase: Phase,
    pub w_i: Vec<Fe>,
    pub mu_i: Vec<Fe>,
    pub chosen: Fe,
    /// `Σ c̄_i` over the `i` voting for each candidate (vote phase only).
    pub tally: BTreeMap<Fe, i64>,
}

/// How a pair `(f_i, g_{i'})` was updated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RebaseCase {
    /// `w_i = w`: both substituted.
    Keep,
    /// `w_i ≠ w`, `c_i > 0`: `f_i` becomes the new `g_{i'}`.
    Swap,
    /// `w_i ≠ w`, `c_i ≤ 0`: `f_i` is corrected by a multiple of `g_{i'}`.
    Cancel,
}

impl fmt::Display for RebaseCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RebaseCase::Keep => "keep",
            RebaseCase::Swap => "swap",
            RebaseCase::Cancel => "cancel",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub s: i64,
    pub pairing: PairingData,
    pub vote: VoteResult,
    pub cases: Vec<RebaseCase>,
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} phase={} w={}", self.s, self.vote.phase, self.vote.chosen)?;
        if self.vote.phase == Phase::Vote {
            let tally: Vec<String> = self.vote.tally.iter().map(|(w, t)| format!("{w}:{t}")).collect();
            write!(f, " tally={}", tally.join(","))?;
        }
        for (i, e) in self.pairing.entries.iter().enumerate() {
            write!(
                f,
                "\n  f{} g{} c={} w={} {}",
                i, e.i_prime, e.c, self.vote.w_i[i], self.cases[i]
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoderState {
    s: i64,
    g: Vec<PairElem>,
    f: Vec<PairElem>,
    nu: Vec<Fe>,
    votes: BTreeMap<i64, Fe>,
}

impl DecoderState {
    /// The basis `{η_i, y^i(z − h_v)}`, valid for `>_s` with
    /// `s = max(δ(h_v), u)`.
    pub fn init(code: &Code, v: &[Fe]) -> Result<Self> {
        let curve = &code.curve;
        let fs = curve.field();
        let hv = code.lagrange.interpolate(curve, v)?;
        let s = curve.delta(&hv).unwrap_or(i64::MIN).max(code.u);
        let a = curve.a();

        let g = code
            .eta
            .etas()
            .iter()
            .map(|e| PairElem::from_const(curve, e.clone()))
            .collect();
        let f = (0..a)
            .map(|i| {
                let yi = RingElem::monomial(curve, Fe::ONE, 0, i);
                let c = curve.mul(&yi, &hv).scale(fs, fs.neg(Fe::ONE));
                PairElem { z: yi, c }
            })
            .collect();
        let nu = code
            .eta
            .etas()
            .iter()
            .map(|e| curve.lt_delta(e).map(|(_, lc)| lc))
            .collect::<Result<_>>()?;
        Ok(DecoderState { s, g, f, nu, votes: BTreeMap::new() })
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn g(&self) -> &[PairElem] {
        &self.g
    }

    pub fn f(&self) -> &[PairElem] {
        &self.f
    }

    pub fn nu(&self) -> &[Fe] {
        &self.nu
    }

    /// Votes `w_s` decided so far, keyed by `s`.
    pub fn votes(&self) -> &BTreeMap<i64, Fe> {
        &self.votes
    }

    /// `v^{(s)} = v − Σ ev(w_{s'} φ_{s'})` over the votes taken so far.
    pub fn shifted_received(&self, code: &Code, v: &[Fe]) -> Result<Vec<Fe>> {
        let curve = &code.curve;
        let fs = curve.field();
        let mut out = v.to_vec();
        for (&s, &w) in &self.votes {
            if w.is_zero() {
                continue;
            }
            let phi = curve.phi_elem(s)?;
            for (o, p) in out.iter_mut().zip(&code.points) {
                *o = fs.sub(*o, fs.mul(w, curve.eval(&phi, *p)));
            }
        }
        Ok(out)
    }

    /// Runs pairing, voting and rebasing for the current `s`.
    pub fn step(&mut self, code: &Code) -> Result<StepRecord> {
        let pairing = pairing(self, code)?;
        let vote = voting(self, code, &pairing)?;
        let s = self.s;
        let cases = rebasing(self, code, &pairing, &vote)?;
        Ok(StepRecord { s, pairing, vote, cases })
    }

    /// Checks the structural invariants against the received vector `v`,
    /// returning a description of each violation.
    pub fn invariant_violations(&self, code: &Code, v: &[Fe]) -> Vec<String> {
        let curve = &code.curve;
        let s = self.s;
        let mut bad = Vec::new();

        match self.shifted_received(code, v) {
            Ok(vs) => {
                for (idx, p) in code.points.iter().enumerate() {
                    for (name, elems) in [("g", &self.g), ("f", &self.f)] {
                        for (i, e) in elems.iter().enumerate() {
                            if !curve.pair_eval(e, *p, vs[idx]).is_zero() {
                                bad.push(format!("s={s}: {name}{i} does not vanish at point {idx}"));
                            }
                        }
                    }
                }
            }
            Err(e) => bad.push(format!("s={s}: {e}")),
        }

        let mut sum = 0usize;
        for i in 0..curve.a() {
            match curve.lt_s(&self.g[i], s) {
                Ok((m, lc)) => {
                    if m.has_z || m.j != i {
                        bad.push(format!("s={s}: LT(g{i}) = {m} is not a y^{i} term"));
                    }
                    if lc != self.nu[i] {
                        bad.push(format!("s={s}: nu{i} = {} but LC(g{i}) = {lc}", self.nu[i]));
                    }
                }
                Err(e) => bad.push(format!("s={s}: g{i}: {e}")),
            }
            match curve.lt_s(&self.f[i], s) {
                Ok((m, _)) if !m.has_z || m.j != i => {
                    bad.push(format!("s={s}: LT(f{i}) = {m} is not a y^{i}z term"))
                }
                Err(e) => bad.push(format!("s={s}: f{i}: {e}")),
                _ => {}
            }
            let d = self.g[i].c.row(i).degree();
            let a_ii = self.f[i].z.row(i).degree();
            match (a_ii, d) {
                (Some(x), Some(y)) => {
                    sum += x + y;
                    if y > code.eta.lt_deg_x()[i] {
                        bad.push(format!("s={s}: deg d{i}{i} = {y} exceeds deg_x LT(eta{i})"));
                    }
                }
                _ => bad.push(format!("s={s}: zero diagonal entry at index {i}")),
            }
        }
        if sum != code.n() {
            bad.push(format!("s={s}: degree sum {sum} != n = {}", code.n()));
        }
        bad
    }
}

/// Matches each `f_i` with `g_{i'}` via `δ(a_{i,i} y^i) + s = a·k_i + b·i'`.
pub fn pairing(state: &DecoderState, code: &Code) -> Result<PairingData> {
    let curve = &code.curve;
    let (a, b) = (curve.a() as i64, curve.b() as i64);
    let entries = (0..curve.a())
        .map(|i| {
            let a_ii = state.f[i].z.row(i).degree().ok_or(Error::InternalPivotZero(state.s))?;
            let total = a * a_ii as i64 + b * i as i64 + state.s;
            let i_prime = (0..curve.a())
                .find(|&ip| (total - b * ip as i64).rem_euclid(a) == 0)
                .expect("gcd(a, b) = 1 makes b invertible mod a");
            let k = (total - b * i_prime as i64).div_euclid(a);
            let d = state.g[i_prime].c.row(i_prime).degree().ok_or(Error::InternalPivotZero(state.s))?;
            let c = d as i64 - k;
            Ok(PairEntry { i_prime, k, c, c_bar: c.max(0) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PairingData { entries })
}

pub fn voting(state: &DecoderState, code: &Code, pairing: &PairingData) -> Result<VoteResult> {
    let curve = &code.curve;
    let fs = curve.field();
    let s = state.s;
    let a = curve.a();
    let vote_phase = s <= code.u && !curve.is_gap(s);

    let mut w_i = Vec::with_capacity(a);
    let mut mu_i = Vec::with_capacity(a);
    for (i, e) in pairing.entries.iter().enumerate() {
        let b_coeff = state.f[i].c.row(e.i_prime).coeff(e.k);
        if !vote_phase {
            let w = if e.k >= 0 { fs.neg(b_coeff) } else { Fe::ZERO };
            w_i.push(w);
            mu_i.push(Fe::ONE);
        } else {
            let a_row = RingElem::from_row(curve, i, state.f[i].z.row(i).clone());
            let prod = curve.mul(&a_row, &curve.phi_elem(s)?);
            let (m, mu) = curve.lt_delta(&prod)?;
            debug_assert_eq!((m.j, m.deg_x as i64), (e.i_prime, e.k));
            w_i.push(fs.neg(fs.div(b_coeff, mu)?));
            mu_i.push(mu);
        }
    }

    let mut tally = BTreeMap::new();
    let chosen = if vote_phase {
        for (w, e) in w_i.iter().zip(&pairing.entries) {
            *tally.entry(*w).or_insert(0) += e.c_bar;
        }
        // Highest tally wins; ties go to the smallest encoding.
        let best = tally.values().copied().max().unwrap_or(0);
        *tally.iter().find(|(_, &t)| t == best).map(|(w, _)| w).unwrap()
    } else {
        Fe::ZERO
    };
    Ok(VoteResult { phase: if vote_phase { Phase::Vote } else { Phase::Settle }, w_i, mu_i, chosen, tally })
}

/// Updates the basis from `>_s` to `>_{s-1}` and records the vote.
pub fn rebasing(
    state: &mut DecoderState,
    code: &Code,
    pairing: &PairingData,
    vote: &VoteResult,
) -> Result<Vec<RebaseCase>> {
    let curve = &code.curve;
    let fs = curve.field();
    let s = state.s;
    let w = vote.chosen;
    let substitute = |e: &PairElem| -> Result<PairElem> {
        if vote.phase == Phase::Vote {
            curve.subst_z(e, w, s)
        } else {
            Ok(e.clone())
        }
    };

    let mut g = state.g.clone();
    let mut f = state.f.clone();
    let mut nu = state.nu.clone();
    let mut cases = Vec::with_capacity(curve.a());
    for (i, e) in pairing.entries.iter().enumerate() {
        let ip = e.i_prime;
        let g_bar = substitute(&state.g[ip])?;
        let f_bar = substitute(&state.f[i])?;
        let wi = vote.w_i[i];
        if wi == w {
            g[ip] = g_bar;
            f[i] = f_bar;
            cases.push(RebaseCase::Keep);
            continue;
        }
        let scale = fs.mul(vote.mu_i[i], fs.sub(w, wi));
        let nu_ip = state.nu[ip];
        if nu_ip.is_zero() {
            return Err(Error::InternalPivotZero(s));
        }
        let factor = fs.neg(fs.div(scale, nu_ip)?);
        if e.c > 0 {
            let mut nf = f_bar.shift_x(e.c as usize);
            nf.add_scaled_shifted(fs, factor, 0, &g_bar);
            g[ip] = f_bar;
            f[i] = nf;
            nu[ip] = scale;
            cases.push(RebaseCase::Swap);
        } else {
            let mut nf = f_bar;
            nf.add_scaled_shifted(fs, factor, (-e.c) as usize, &g_bar);
            g[ip] = g_bar;
            f[i] = nf;
            cases.push(RebaseCase::Cancel);
        }
    }

    if vote.phase == Phase::Vote {
        state.votes.insert(s, w);
    }
    state.g = g;
    state.f = f;
    state.nu = nu;
    state.s = s - 1;
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f4() -> FieldSpec {
        FieldSpec::new(2, 2, &[1, 1, 1]).unwrap()
    }

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[2, 2, 1]).unwrap()
    }

    #[test]
    fn code_parameters() {
        let code = Code::hermitian(f9(), 3, 16).unwrap();
        assert_eq!((code.n(), code.k(), code.du()), (27, 14, 11));
        assert_eq!(code.radius(), 5);
        assert!(matches!(Code::hermitian(f9(), 3, 27), Err(Error::DegreeCapTooLarge { .. })));
    }

    #[test]
    fn encode_basics() {
        let code = Code::hermitian(f9(), 3, 16).unwrap();
        assert_eq!(code.encode(&[Fe::ZERO; 14]).unwrap(), vec![Fe::ZERO; 27]);
        let mut m = vec![Fe::ZERO; 14];
        m[0] = Fe::ONE;
        assert_eq!(code.encode(&m).unwrap(), vec![Fe::ONE; 27]);
        assert!(matches!(code.encode(&m[..3]), Err(Error::LengthMismatch { expected: 14, actual: 3 })));
    }

    #[test]
    fn zero_vector_starts_at_u() {
        let code = Code::hermitian(f9(), 3, 16).unwrap();
        let st = DecoderState::init(&code, &[Fe::ZERO; 27]).unwrap();
        assert_eq!(st.s(), 16);
        for (i, f) in st.f().iter().enumerate() {
            assert!(f.c.is_zero());
            assert_eq!(f.z, RingElem::monomial(code.curve(), Fe::ONE, 0, i));
        }
        assert!(st.invariant_violations(&code, &[Fe::ZERO; 27]).is_empty());
        let d = code.decode(&[Fe::ZERO; 27]).unwrap();
        assert_eq!(d.message, vec![Fe::ZERO; 14]);
        assert!(d.within_guarantee);
    }

    #[test]
    fn round_trip_without_errors() {
        let code = Code::hermitian(f9(), 3, 16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let m: Vec<Fe> = (0..14).map(|_| Fe(rng.gen_range(0..9))).collect();
            let c = code.encode(&m).unwrap();
            let (d, trace) = code.decode_trace(&c).unwrap();
            assert_eq!(d.message, m);
            assert_eq!(d.error_weight, 0);
            for rec in trace.iter().filter(|r| r.vote.phase == Phase::Vote) {
                let nonzero: Vec<_> = rec.vote.tally.iter().filter(|(_, &t)| t > 0).collect();
                assert!(nonzero.len() <= 1, "split vote at s={}", rec.s);
                assert!(rec.vote.w_i.iter().all(|&w| w == rec.vote.chosen));
            }
        }
    }

    #[test]
    fn q2_single_errors_exhaustive() {
        let code = Code::hermitian(f4(), 2, 4).unwrap();
        assert!(code.du() >= 3);
        let zero = vec![Fe::ZERO; code.n()];
        for pos in 0..code.n() {
            for val in code.field().nonzero_elements() {
                let mut v = zero.clone();
                v[pos] = val;
                let d = code.decode(&v).unwrap();
                assert_eq!(d.message, vec![Fe::ZERO; code.k()]);
                assert_eq!(d.error_weight, 1);
                assert!(d.within_guarantee);
            }
        }
    }

    #[test]
    fn single_error_state_vanishes() {
        let code = Code::hermitian(f9(), 3, 16).unwrap();
        let mut v = vec![Fe::ZERO; 27];
        v[9] = Fe(4);
        let mut st = DecoderState::init(&code, &v).unwrap();
        assert!(st.invariant_violations(&code, &v).is_empty());
        while st.s() >= 0 {
            st.step(&code).unwrap();
            assert!(st.invariant_violations(&code, &v).is_empty());
        }
    }

    #[test]
    fn gap_steps_leave_basis_alone_when_unanimous() {
        let code = Code::hermitian(f9(), 3, 16).unwrap();
        let c = code.encode(&(0..14).map(|i| Fe(i as u16 % 9)).collect::<Vec<_>>()).unwrap();
        let mut st = DecoderState::init(&code, &c).unwrap();
        while st.s() > 5 {
            st.step(&code).unwrap();
        }
        let before = (st.g().to_vec(), st.f().to_vec());
        let rec = st.step(&code).unwrap();
        assert_eq!(rec.vote.phase, Phase::Settle);
        assert!(rec.cases.iter().all(|&c| c == RebaseCase::Keep));
        assert_eq!((st.g().to_vec(), st.f().to_vec()), before);
    }

    #[test]
    fn degenerate_rank_one_curve() {
        // a = 1: y = -(c x^b) on the curve y + c·x^2 = 0, i.e. a Reed-Solomon-like code.
        let f = FieldSpec::prime(7).unwrap();
        let curve = PlaneCurve::new(f.clone(), 1, 2, Default::default(), Fe(1)).unwrap();
        let code = Code::with_all_points(curve, 3).unwrap();
        assert_eq!(code.n(), 7);
        let m = vec![Fe(1), Fe(2), Fe(3), Fe(4)];
        let mut v = code.encode(&m).unwrap();
        v[2] = f.add(v[2], Fe(5));
        let (d, trace) = code.decode_trace(&v).unwrap();
        for r in &trace {
            assert_eq!(r.pairing.entries[0].i_prime, 0);
        }
        assert_eq!(d.message, m);
    }

    #[test]
    fn deterministic() {
        let code = Code::hermitian(f9(), 3, 16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let v: Vec<Fe> = (0..27).map(|_| Fe(rng.gen_range(0..9))).collect();
        assert_eq!(code.decode_trace(&v).unwrap(), code.decode_trace(&v).unwrap());
    }
}
