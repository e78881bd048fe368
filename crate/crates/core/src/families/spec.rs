use num_traits::Zero;
use serde_json::{json, Value};

use super::build::{build_nilradical, canonical_derivation};
use super::transform::{has_standard_nilradical, outer_derivation};
use crate::algebra::{is_derivation, LieAlgebra};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, QMatrix, Rational};

/// Raw extension data: derivations `D^i` of `n(n,1)` by which the outer
/// elements `f_i` act, and the `e_1` coefficient `gamma` of `[f_1, f_2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub n: usize,
    pub derivations: Vec<QMatrix>,
    pub gamma: Rational,
}

impl ExtensionSpec {
    pub fn new(n: usize, derivations: Vec<QMatrix>, gamma: Rational) -> Self {
        ExtensionSpec {
            n,
            derivations,
            gamma,
        }
    }

    pub fn p(&self) -> usize {
        self.derivations.len()
    }

    fn outer_labels(&self) -> Vec<String> {
        match self.p() {
            1 => vec!["f".into()],
            p => (1..=p).map(|i| format!("f{i}")).collect(),
        }
    }

    /// The algebra `n(n,1) + span{f_i}` with `[f_i, e_a] = D^i(e_a)` and, for
    /// two outer elements, `[f_1, f_2] = z + gamma e_1` where `z` is the
    /// element of the nilradical with `ad_z = [D^1, D^2]` and no `e_1` part.
    pub fn extension_algebra(&self) -> Result<LieAlgebra> {
        let n = self.n;
        let nil = build_nilradical(n)?;
        let p = self.p();
        if p == 0 || p > 2 {
            return Err(Error::Unsupported(format!(
                "{p} outer elements; n(n,1) admits at most 2"
            )));
        }
        for (i, d) in self.derivations.iter().enumerate() {
            if !is_derivation(&nil, d)? {
                return Err(Error::NotADerivation(format!("D^{}", i + 1)));
            }
        }
        let dim = n + p;
        let pad = |v: &[Rational]| {
            let mut v = v.to_vec();
            v.resize(dim, Rational::zero());
            v
        };
        let mut brackets: Vec<(usize, usize, Vec<Rational>)> = nil
            .brackets()
            .map(|(a, b, v)| (a, b, pad(v)))
            .collect();
        for (i, d) in self.derivations.iter().enumerate() {
            for k in 0..n {
                brackets.push((n + i, k, pad(d.row(k))));
            }
        }
        if p == 2 {
            let (d1, d2) = (&self.derivations[0], &self.derivations[1]);
            // ad_{[f1,f2]} = ad_f1 ad_f2 - ad_f2 ad_f1, i.e. D2 D1 - D1 D2 on rows
            let target = &(d2 * d1) - &(d1 * d2);
            let cols: Vec<QMatrix> = (0..n)
                .map(|a| nil.ad_matrix(&nil.basis_vector(a)).expect("basis vector"))
                .collect();
            let system = QMatrix::from_rows(
                (0..n * n)
                    .map(|k| cols.iter().map(|c| c.entries()[k].clone()).collect())
                    .collect(),
            );
            let mut z = system
                .solve(target.entries())
                .ok_or(Error::CommutatorNotInner)?;
            z[0] += &self.gamma;
            brackets.push((n, n + 1, pad(&z)));
        } else if !self.gamma.is_zero() {
            return Err(Error::InvalidParameter(
                "gamma needs two outer elements".into(),
            ));
        }
        let mut labels = nil.labels().to_vec();
        labels.extend(self.outer_labels());
        LieAlgebra::new(labels, brackets)
    }

    /// Reads back the derivations of an extension whose first `n` basis
    /// vectors carry the `n(n,1)` table and whose last one or two are outer.
    pub fn extract(l: &LieAlgebra) -> Result<ExtensionSpec> {
        let dim = l.dim();
        let n = (1..=2)
            .filter(|&p| dim >= p + 4)
            .map(|p| dim - p)
            .find(|&n| has_standard_nilradical(l, n))
            .ok_or_else(|| {
                Error::InvalidParameter(
                    "expected basis e1..en of n(n,1) followed by one or two outer elements"
                        .into(),
                )
            })?;
        let derivations = (n..dim)
            .map(|f| outer_derivation(l, n, f))
            .collect::<Result<Vec<_>>>()?;
        let gamma = if dim - n == 2 {
            l.basis_bracket(n, n + 1)[0].clone()
        } else {
            Rational::zero()
        };
        Ok(ExtensionSpec {
            n,
            derivations,
            gamma,
        })
    }

    /// Parses `{"n": 6, "derivations": [...], "gamma": "0"}`. A derivation
    /// is either `{"alpha": .., "beta": .., "a": [a_3, .., a_n]}` (canonical
    /// shape, short `a` padded with zeros) or `{"matrix": [[..], ..]}`.
    /// Numbers may be JSON integers or strings such as `"3/2"`.
    pub fn from_json(text: &str) -> Result<ExtensionSpec> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("spec JSON: {e}")))?;
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| Error::Parse("spec needs integer field \"n\"".into()))?
            as usize;
        if n < 4 {
            build_nilradical(n)?;
        }
        let gamma = match v.get("gamma") {
            None | Some(Value::Null) => Rational::zero(),
            Some(g) => json_rational(g)?,
        };
        let list = v["derivations"]
            .as_array()
            .ok_or_else(|| Error::Parse("spec needs array field \"derivations\"".into()))?;
        let derivations = list
            .iter()
            .map(|d| json_derivation(n, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExtensionSpec {
            n,
            derivations,
            gamma,
        })
    }

    pub fn to_json(&self) -> Value {
        let ders: Vec<Value> = self
            .derivations
            .iter()
            .map(|d| {
                let rows: Vec<Vec<String>> = d
                    .row_vecs()
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect();
                json!({ "matrix": rows })
            })
            .collect();
        json!({ "n": self.n, "derivations": ders, "gamma": self.gamma.to_string() })
    }
}

fn json_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(x) if x.is_i64() => parse_rational(&x.to_string()),
        _ => Err(Error::Parse(format!("expected a rational, got {v}"))),
    }
}

fn json_derivation(n: usize, d: &Value) -> Result<QMatrix> {
    if let Some(rows) = d.get("matrix") {
        let rows = rows
            .as_array()
            .ok_or_else(|| Error::Parse("\"matrix\" must be an array of rows".into()))?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(json_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if parsed.len() != n || parsed.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: parsed.len(),
            });
        }
        return Ok(QMatrix::from_rows(parsed));
    }
    let alpha = json_rational(d.get("alpha").unwrap_or(&Value::from(0)))?;
    let beta = json_rational(d.get("beta").unwrap_or(&Value::from(0)))?;
    let a = match d.get("a") {
        None => Vec::new(),
        Some(list) => list
            .as_array()
            .ok_or_else(|| Error::Parse("\"a\" must be an array".into()))?
            .iter()
            .map(json_rational)
            .collect::<Result<Vec<_>>>()?,
    };
    if a.len() > n - 2 {
        return Err(Error::InvalidParameter(format!(
            "at most {} entries a_3..a_n, got {}",
            n - 2,
            a.len()
        )));
    }
    Ok(canonical_derivation(n, &alpha, &beta, &a))
}
