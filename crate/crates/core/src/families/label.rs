use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, parse_rational, powi, rational_root, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    Real,
    Complex,
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" | "real" | "Real" => Ok(FieldTag::Real),
            "C" | "c" | "complex" | "Complex" => Ok(FieldTag::Complex),
            _ => Err(Error::Parse(format!("unknown field {s:?}, expected R or C"))),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::Real => "R",
            FieldTag::Complex => "C",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    /// The nilpotent algebra `n(n,1)` itself.
    Nilradical,
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    /// The unique `(n+2)`-dimensional extension.
    Snp2,
}

impl FamilyKind {
    pub const SOLVABLE: [FamilyKind; 7] = [
        FamilyKind::S1,
        FamilyKind::S2,
        FamilyKind::S3,
        FamilyKind::S4,
        FamilyKind::S5,
        FamilyKind::S6,
        FamilyKind::Snp2,
    ];

    /// Number of non-nilpotent basis elements.
    pub fn outer_count(self) -> usize {
        match self {
            FamilyKind::Nilradical => 0,
            FamilyKind::Snp2 => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Nilradical => "n(n,1)",
            FamilyKind::S1 => "s(n+1,1)",
            FamilyKind::S2 => "s(n+1,2)",
            FamilyKind::S3 => "s(n+1,3)",
            FamilyKind::S4 => "s(n+1,4)",
            FamilyKind::S5 => "s(n+1,5)",
            FamilyKind::S6 => "s(n+1,6)",
            FamilyKind::Snp2 => "s(n+2)",
        }
    }
}

/// A point of one of the families: kind, nilradical dimension `n` and
/// parameters (`beta` for S1, `a_3..a_{n-1}` for S6, empty otherwise).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyLabel {
    kind: FamilyKind,
    n: usize,
    params: Vec<Rational>,
}

fn check_n(n: usize) -> Result<()> {
    match n {
        3 => Err(Error::BadDimension("n must be at least 4; n(3,1) ≃ h(1)".into())),
        n if n < 4 => Err(Error::BadDimension(format!("n must be at least 4, got {n}"))),
        _ => Ok(()),
    }
}

impl FamilyLabel {
    pub fn nilradical(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self::plain(FamilyKind::Nilradical, n))
    }

    fn plain(kind: FamilyKind, n: usize) -> Self {
        FamilyLabel {
            kind,
            n,
            params: Vec::new(),
        }
    }

    /// `beta = 2-n` yields the S3 label; `beta` in `{0, n-2}` is rejected.
    pub fn s1(n: usize, beta: Rational) -> Result<Self> {
        check_n(n)?;
        let ni = n as i64;
        if beta == int(2 - ni) {
            return Ok(Self::plain(FamilyKind::S3, n));
        }
        if beta.is_zero() {
            return Err(Error::InvalidParameter(
                "beta = 0 is s(n+1,2), not s(n+1,1)".into(),
            ));
        }
        if beta == int(ni - 2) {
            return Err(Error::InvalidParameter(format!(
                "beta = n-2 = {} is excluded from s(n+1,1)",
                ni - 2
            )));
        }
        Ok(FamilyLabel {
            kind: FamilyKind::S1,
            n,
            params: vec![beta],
        })
    }

    /// Parameters `a_3, a_4, ...`; a short list is padded with zeros up to
    /// `a_{n-1}`.
    pub fn s6(n: usize, mut a: Vec<Rational>) -> Result<Self> {
        check_n(n)?;
        if a.len() > n - 3 {
            return Err(Error::InvalidParameter(format!(
                "s(n+1,6) with n={n} takes at most {} parameters, got {}",
                n - 3,
                a.len()
            )));
        }
        a.resize(n - 3, Rational::zero());
        if a.iter().all(Zero::is_zero) {
            return Err(Error::InvalidParameter(
                "all a_j = 0 is s(n+1,4), not s(n+1,6)".into(),
            ));
        }
        Ok(FamilyLabel {
            kind: FamilyKind::S6,
            n,
            params: a,
        })
    }

    /// Label of a parameter-free kind.
    pub fn simple(kind: FamilyKind, n: usize) -> Result<Self> {
        check_n(n)?;
        match kind {
            FamilyKind::S1 | FamilyKind::S6 => Err(Error::InvalidParameter(format!(
                "{} needs parameters",
                kind.name()
            ))),
            _ => Ok(Self::plain(kind, n)),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    /// Dimension of the whole algebra.
    pub fn dim(&self) -> usize {
        self.n + self.kind.outer_count()
    }

    /// `(alpha, beta)` of the single outer derivation, for one-outer kinds.
    pub fn alpha_beta(&self) -> Option<(Rational, Rational)> {
        let n = self.n as i64;
        Some(match self.kind {
            FamilyKind::S1 => (int(1), self.params[0].clone()),
            FamilyKind::S2 => (int(1), int(0)),
            FamilyKind::S3 => (int(1), int(2 - n)),
            FamilyKind::S4 | FamilyKind::S6 => (int(0), int(1)),
            FamilyKind::S5 => (int(1), int(1)),
            FamilyKind::Nilradical | FamilyKind::Snp2 => return None,
        })
    }

    /// The representative of this label's isomorphism class chosen by the
    /// classifier. Only S6 parameters change.
    pub fn canonicalize(&self, field: FieldTag) -> Result<FamilyLabel> {
        if self.kind != FamilyKind::S6 {
            return Ok(self.clone());
        }
        let (params, _) = normalize_s6(&self.params, field)?;
        Ok(FamilyLabel {
            params,
            ..self.clone()
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad family label {s:?}"));
        let mut parts = s.splitn(3, ':');
        let head = parts.next().ok_or_else(bad)?;
        let n: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let param = parts.next();
        let kind = match head {
            "n(n,1)" => FamilyKind::Nilradical,
            "s(n+1,1)" => FamilyKind::S1,
            "s(n+1,2)" => FamilyKind::S2,
            "s(n+1,3)" => FamilyKind::S3,
            "s(n+1,4)" => FamilyKind::S4,
            "s(n+1,5)" => FamilyKind::S5,
            "s(n+1,6)" => FamilyKind::S6,
            "s(n+2)" => FamilyKind::Snp2,
            _ => return Err(bad()),
        };
        match (kind, param) {
            (FamilyKind::S1, Some(p)) => {
                let beta = p.strip_prefix("beta=").ok_or_else(bad)?;
                Self::s1(n, parse_rational(beta)?)
            }
            (FamilyKind::S6, Some(p)) => {
                let list = p
                    .strip_prefix("a=[")
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(bad)?;
                let a = if list.is_empty() {
                    Vec::new()
                } else {
                    list.split(',').map(parse_rational).collect::<Result<_>>()?
                };
                Self::s6(n, a)
            }
            (FamilyKind::Nilradical, None) => Self::nilradical(n),
            (FamilyKind::S1 | FamilyKind::S6, None) => Err(Error::Parse(format!(
                "{} needs a parameter in {s:?}",
                kind.name()
            ))),
            (_, None) => Self::simple(kind, n),
            (_, Some(_)) => Err(Error::Parse(format!(
                "{} takes no parameters",
                kind.name()
            ))),
        }
    }
}

impl FromStr for FamilyLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind.name(), self.n)?;
        match self.kind {
            FamilyKind::S1 => write!(f, ":beta={}", self.params[0]),
            FamilyKind::S6 => {
                let a: Vec<String> = self.params.iter().map(ToString::to_string).collect();
                write!(f, ":a=[{}]", a.join(","))
            }
            _ => Ok(()),
        }
    }
}

impl Serialize for FamilyLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FamilyLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Normal form of S6 parameters `a_3..a_{n-1}` under `a_j -> a_j w^(1-j)`.
///
/// Only `t = w^d` matters, `d` being the gcd of `j-1` over the nonzero
/// entries. Returns the normalized parameters and, when it is rational, a
/// scaling factor `w` realizing them.
pub fn normalize_s6(a: &[Rational], field: FieldTag) -> Result<(Vec<Rational>, Option<Rational>)> {
    let support: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).map(|i| i + 3).collect();
    if support.is_empty() {
        return Err(Error::InvalidParameter("all a_j = 0".into()));
    }
    let d = support.iter().fold(0u32, |g, &j| g.gcd(&(j as u32 - 1)));
    let e = |j: usize| (j as u32 - 1) / d;
    let at = |j: usize| &a[j - 3];
    let irrational = |j: usize| {
        Error::IrrationalNormalization(format!(
            "a_{j} = {} has no rational root of order {}",
            at(j),
            e(j)
        ))
    };
    let apply = |t: &Rational| -> Vec<Rational> {
        (0..a.len())
            .map(|i| &a[i] * powi(t, -(e(i + 3) as i64)))
            .collect()
    };
    let t = match field {
        FieldTag::Complex => {
            let j = support[0];
            let ej = e(j);
            if ej % 2 == 1 {
                rational_root(at(j), ej).ok_or_else(|| irrational(j))?
            } else if at(j).is_positive() {
                let r = rational_root(at(j), ej).ok_or_else(|| irrational(j))?;
                let odd = *support
                    .iter()
                    .find(|&&k| e(k) % 2 == 1)
                    .expect("exponents are coprime");
                if apply(&r)[odd - 3].is_negative() {
                    -r
                } else {
                    r
                }
            } else {
                return Err(Error::IrrationalNormalization(format!(
                    "a_{j} = {} needs an imaginary scaling",
                    at(j)
                )));
            }
        }
        FieldTag::Real => match support.iter().find(|&&j| j % 2 == 0) {
            Some(&j) => rational_root(at(j), e(j)).ok_or_else(|| irrational(j))?,
            None => {
                let j = support[0];
                rational_root(&at(j).abs(), e(j)).ok_or_else(|| irrational(j))?
            }
        },
    };
    let omega = if t.is_negative() && d % 2 == 0 {
        None
    } else {
        rational_root(&t, d)
    };
    debug_assert!(omega.as_ref().is_none_or(|w| powi(w, d as i64) == t));
    Ok((apply(&t), omega))
}
