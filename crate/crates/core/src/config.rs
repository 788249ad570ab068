//! On-disk formats: the code configuration document and flat vectors.
//!
//! A configuration is a list of `key = value` lines; `#` starts a comment.
//!
//! ```text
//! field  = 3^2/17          # p^k/m, m = modulus digits read as a base-p number
//! curve  = hermitian       # or `mk`
//! q      = 3               # hermitian only
//! u      = 16
//! points = all             # or an explicit list `x:y, x:y, ..`
//! ```
//!
//! Instead of `field`, the keys `p`, `k` and `modulus = d0,d1,..,dk`
//! (constant digit first) may be given. A general Miura-Kamiya curve
//! `y^a + Σ c_ij x^i y^j + c·x^b` uses `curve = mk` with keys `a`, `b`, `c` and
//! `coeffs = i:j:value, ..`. All field elements are decimal encodings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::curve::{PlaneCurve, Point};
use crate::decoder::Code;
use crate::error::{Error, Result};
use crate::field::{Fe, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveKind {
    Hermitian { q: u32 },
    MiuraKamiya { a: usize, b: usize, coeffs: BTreeMap<(usize, usize), u32>, c: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointsSpec {
    All,
    Explicit(Vec<(u32, u32)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeConfig {
    pub field: FieldSpec,
    pub curve: CurveKind,
    pub u: i64,
    pub points: PointsSpec,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadConfig(msg.into())
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim().parse().map_err(|_| bad(format!("`{key}` expects an integer, got `{v}`")))
}

fn parse_list(key: &str, v: &str, arity: usize) -> Result<Vec<Vec<u32>>> {
    v.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let parts: Vec<&str> = t.split(':').collect();
            if parts.len() != arity {
                return Err(bad(format!("`{key}` entry `{t}` needs {arity} `:`-separated fields")));
            }
            parts.iter().map(|p| parse_num(key, p)).collect()
        })
        .collect()
}

impl CodeConfig {
    pub fn build_curve(&self) -> Result<PlaneCurve> {
        let f = self.field.clone();
        match &self.curve {
            CurveKind::Hermitian { q } => PlaneCurve::hermitian(f, *q),
            CurveKind::MiuraKamiya { a, b, coeffs, c } => {
                let coeffs = coeffs
                    .iter()
                    .map(|(&k, &v)| f.element(v).map(|e| (k, e)))
                    .collect::<Result<_>>()?;
                let c = f.element(*c)?;
                PlaneCurve::new(f, *a, *b, coeffs, c)
            }
        }
    }

    pub fn build(&self) -> Result<Code> {
        let curve = self.build_curve()?;
        let points = match &self.points {
            PointsSpec::All => curve.points(),
            PointsSpec::Explicit(list) => list
                .iter()
                .map(|&(x, y)| Ok(Point::new(self.field.element(x)?, self.field.element(y)?)))
                .collect::<Result<_>>()?,
        };
        Code::new(curve, points, self.u)
    }
}

impl FromStr for CodeConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut kv: BTreeMap<String, String> = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("line {}: expected `key = value`", no + 1)))?;
            let k = k.trim().to_ascii_lowercase();
            if kv.insert(k.clone(), v.trim().to_string()).is_some() {
                return Err(bad(format!("duplicate key `{k}`")));
            }
        }
        let mut take = |k: &str| kv.remove(k);

        let field = match (take("field"), take("p"), take("k"), take("modulus")) {
            (Some(name), None, None, None) => name.parse::<FieldSpec>().map_err(|e| bad(e.to_string()))?,
            (None, Some(p), Some(k), Some(m)) => {
                let digits: Vec<u32> = m.split(',').map(|d| parse_num("modulus", d)).collect::<Result<_>>()?;
                FieldSpec::new(parse_num("p", &p)?, parse_num("k", &k)?, &digits)
                    .map_err(|e| bad(e.to_string()))?
            }
            _ => return Err(bad("give either `field` or all of `p`, `k`, `modulus`")),
        };

        let kind = take("curve").ok_or_else(|| bad("missing `curve`"))?;
        let curve = match kind.as_str() {
            "hermitian" => {
                let q = take("q").ok_or_else(|| bad("hermitian curve needs `q`"))?;
                CurveKind::Hermitian { q: parse_num("q", &q)? }
            }
            "mk" => {
                let mut need = |k: &str| take(k).ok_or_else(|| bad(format!("mk curve needs `{k}`")));
                let a = parse_num("a", &need("a")?)?;
                let b = parse_num("b", &need("b")?)?;
                let c = parse_num("c", &need("c")?)?;
                let coeffs = match take("coeffs") {
                    Some(list) => parse_list("coeffs", &list, 3)?
                        .into_iter()
                        .map(|t| ((t[0] as usize, t[1] as usize), t[2]))
                        .collect(),
                    None => BTreeMap::new(),
                };
                CurveKind::MiuraKamiya { a, b, coeffs, c }
            }
            other => return Err(bad(format!("unknown curve kind `{other}`"))),
        };

        let u = parse_num("u", &take("u").ok_or_else(|| bad("missing `u`"))?)?;
        let points = match take("points").as_deref() {
            None | Some("all") => PointsSpec::All,
            Some(list) => PointsSpec::Explicit(
                parse_list("points", list, 2)?.into_iter().map(|t| (t[0], t[1])).collect(),
            ),
        };
        if let Some(k) = kv.keys().next() {
            return Err(bad(format!("unknown key `{k}`")));
        }
        Ok(CodeConfig { field, curve, u, points })
    }
}

impl fmt::Display for CodeConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field = {}", self.field)?;
        match &self.curve {
            CurveKind::Hermitian { q } => {
                writeln!(f, "curve = hermitian")?;
                writeln!(f, "q = {q}")?;
            }
            CurveKind::MiuraKamiya { a, b, coeffs, c } => {
                writeln!(f, "curve = mk")?;
                writeln!(f, "a = {a}")?;
                writeln!(f, "b = {b}")?;
                writeln!(f, "c = {c}")?;
                if !coeffs.is_empty() {
                    let list: Vec<String> = coeffs.iter().map(|((i, j), v)| format!("{i}:{j}:{v}")).collect();
                    writeln!(f, "coeffs = {}", list.join(", "))?;
                }
            }
        }
        writeln!(f, "u = {}", self.u)?;
        match &self.points {
            PointsSpec::All => writeln!(f, "points = all"),
            PointsSpec::Explicit(list) => {
                let list: Vec<String> = list.iter().map(|(x, y)| format!("{x}:{y}")).collect();
                writeln!(f, "points = {}", list.join(", "))
            }
        }
    }
}

/// Parses a flat comma-separated list of element encodings.
pub fn parse_vector(field: &FieldSpec, text: &str) -> Result<Vec<Fe>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let enc: u32 = t.parse().map_err(|_| Error::Parse(format!("bad element `{t}`")))?;
            field.element(enc)
        })
        .collect()
}

pub fn format_vector(v: &[Fe]) -> String {
    v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const HERM3: &str = "field = 3^2/17\ncurve = hermitian\nq = 3\nu = 16\npoints = all\n";

    #[test]
    fn hermitian_config() {
        let cfg: CodeConfig = HERM3.parse().unwrap();
        assert_eq!(cfg.to_string(), HERM3);
        let code = cfg.build().unwrap();
        assert_eq!((code.n(), code.k(), code.du()), (27, 14, 11));
    }

    #[test]
    fn digit_form_and_comments() {
        let text = "# F9\np = 3\nk = 2\nmodulus = 2,2,1  # x^2 - x - 1\ncurve = hermitian\nq = 3\nu = 10\n";
        let cfg: CodeConfig = text.parse().unwrap();
        assert_eq!(cfg.field.to_string(), "3^2/17");
        assert_eq!(cfg.points, PointsSpec::All);
    }

    #[test]
    fn mk_config_matches_hermitian() {
        // y^3 + y - x^4 over F9, spelled out as a general curve; -1 encodes as 2.
        let text = "field = 3^2/17\ncurve = mk\na = 3\nb = 4\nc = 2\ncoeffs = 0:1:1\nu = 16\npoints = all\n";
        let cfg: CodeConfig = text.parse().unwrap();
        assert_eq!(cfg.to_string(), text);
        let herm = HERM3.parse::<CodeConfig>().unwrap().build_curve().unwrap();
        assert_eq!(cfg.build_curve().unwrap(), herm);
    }

    #[test]
    fn rejects_bad_configs() {
        for text in [
            "curve = hermitian\nq = 3\nu = 16\n",
            "field = 3^2/17\ncurve = hermitian\nu = 16\n",
            "field = 3^2/17\ncurve = hermitian\nq = 3\nu = 16\nextra = 1\n",
            "field = 3^2/16\ncurve = hermitian\nq = 3\nu = 16\n",
            "field = 3^2/17\ncurve = elliptic\nu = 1\n",
            "field = 3^2/17\nfield = 3^2/17\n",
        ] {
            assert!(matches!(text.parse::<CodeConfig>(), Err(Error::BadConfig(_))), "{text}");
        }
        let off_curve = "field = 3^2/17\ncurve = hermitian\nq = 3\nu = 1\npoints = 0:0, 0:1\n";
        assert!(matches!(
            off_curve.parse::<CodeConfig>().unwrap().build(),
            Err(Error::PointNotOnCurve(0, 1))
        ));
    }

    #[test]
    fn vectors() {
        let f = FieldSpec::new(3, 2, &[2, 2, 1]).unwrap();
        let v = parse_vector(&f, " 0, 4,\n8 ,2").unwrap();
        assert_eq!(v, vec![Fe(0), Fe(4), Fe(8), Fe(2)]);
        assert_eq!(format_vector(&v), "0,4,8,2");
        assert!(parse_vector(&f, "9").is_err());
        assert!(parse_vector(&f, "x").is_err());
    }

    proptest! {
        #[test]
        fn vector_round_trip(v in proptest::collection::vec(0u16..9, 0..40)) {
            let f = FieldSpec::new(3, 2, &[2, 2, 1]).unwrap();
            let v: Vec<Fe> = v.into_iter().map(Fe).collect();
            prop_assert_eq!(parse_vector(&f, &format_vector(&v)).unwrap(), v);
        }

        #[test]
        fn config_round_trip(u in 0i64..27, pts in proptest::collection::vec((0u32..9, 0u32..9), 0..6), explicit: bool) {
            let cfg = CodeConfig {
                field: FieldSpec::new(3, 2, &[2, 2, 1]).unwrap(),
                curve: CurveKind::Hermitian { q: 3 },
                u,
                points: if explicit { PointsSpec::Explicit(pts) } else { PointsSpec::All },
            };
            prop_assert_eq!(cfg.to_string().parse::<CodeConfig>().unwrap(), cfg);
        }
    }
}
