use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational};

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets `[e_a, e_b]` with `a < b` are stored; antisymmetry supplies
/// the rest. Omitted brackets are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl LieAlgebra {
    /// Builds the algebra and checks the Jacobi identity.
    pub fn new<I>(labels: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let l = Self::new_unchecked(labels, brackets)?;
        let bad = l.jacobi_check();
        if !bad.is_empty() {
            return Err(Error::JacobiViolation(bad.len()));
        }
        Ok(l)
    }

    /// Builds the table without checking the Jacobi identity.
    ///
    /// Repeated or reversed pairs are accumulated with the antisymmetric
    /// sign, so `[b,a] = -v` is the same as `[a,b] = v`.
    pub fn new_unchecked<I>(labels: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let n = labels.len();
        if n == 0 {
            return Err(Error::BadDimension("empty basis".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Parse(format!("duplicate basis label {l}")));
            }
        }
        let mut table: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        for (a, b, v) in brackets {
            if a >= n || b >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: a.max(b) + 1,
                });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            if a == b {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::InvalidParameter(format!(
                        "[{0},{0}] must vanish",
                        labels[a]
                    )));
                }
                continue;
            }
            let (key, v) = if a < b {
                ((a, b), v)
            } else {
                ((b, a), v.into_iter().map(|x| -x).collect())
            };
            let entry = table
                .entry(key)
                .or_insert_with(|| vec![Rational::zero(); n]);
            for (e, x) in entry.iter_mut().zip(v) {
                *e += x;
            }
        }
        table.retain(|_, v| v.iter().any(|x| !x.is_zero()));
        Ok(LieAlgebra { labels, table })
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        Self::new_unchecked(labels, []).expect("valid abelian algebra")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Nonzero brackets `[e_a, e_b]` with `a < b`, in index order.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rational])> {
        self.table.iter().map(|(&(a, b), v)| (a, b, v.as_slice()))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    pub fn basis_vector(&self, a: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[a] = Rational::one();
        v
    }

    /// `[e_a, e_b]` as a coordinate vector.
    pub fn basis_bracket(&self, a: usize, b: usize) -> Vec<Rational> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => self
                .table
                .get(&(a, b))
                .cloned()
                .unwrap_or_else(|| vec![Rational::zero(); self.dim()]),
            std::cmp::Ordering::Greater => self
                .table
                .get(&(b, a))
                .map(|v| v.iter().map(|x| -x).collect())
                .unwrap_or_else(|| vec![Rational::zero(); self.dim()]),
            std::cmp::Ordering::Equal => vec![Rational::zero(); self.dim()],
        }
    }

    /// Structure constant `c^k_{ab}`: the `e_k` coefficient of `[e_a, e_b]`.
    pub fn structure_constant(&self, a: usize, b: usize, k: usize) -> Rational {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => self
                .table
                .get(&(a, b))
                .map_or_else(Rational::zero, |v| v[k].clone()),
            std::cmp::Ordering::Greater => self
                .table
                .get(&(b, a))
                .map_or_else(Rational::zero, |v| -v[k].clone()),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); n];
        for (&(a, b), v) in &self.table {
            let c = &x[a] * &y[b] - &x[b] * &y[a];
            if c.is_zero() {
                continue;
            }
            for (o, vk) in out.iter_mut().zip(v) {
                if !vk.is_zero() {
                    *o += &c * vk;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_x` in the row convention: row `a` holds `[x, e_a]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<QMatrix> {
        let rows = (0..self.dim())
            .map(|a| self.bracket(x, &self.basis_vector(a)))
            .collect::<Result<Vec<_>>>()?;
        Ok(QMatrix::from_rows(rows))
    }

    /// Basis triples `a < b < c` on which the Jacobi identity fails.
    pub fn jacobi_check(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let e = |a| self.basis_vector(a);
        let br = |x: &[Rational], y: &[Rational]| self.bracket(x, y).expect("dimensions match");
        let mut bad = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let t1 = br(&self.basis_bracket(a, b), &e(c));
                    let t2 = br(&self.basis_bracket(b, c), &e(a));
                    let t3 = br(&self.basis_bracket(c, a), &e(b));
                    if t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .any(|((x, y), z)| !(x + y + z).is_zero())
                    {
                        bad.push((a, b, c));
                    }
                }
            }
        }
        bad
    }

    /// The same algebra written in the basis whose `i`-th element is row `i`
    /// of `t` (coordinates in the current basis). Labels are kept.
    pub fn change_basis(&self, t: &QMatrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: t.rows(),
            });
        }
        let inv = t
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("singular basis change".into()))?;
        let rows = t.row_vecs();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket(&rows[a], &rows[b])?;
                brackets.push((a, b, inv.left_mul_vec(&v)));
            }
        }
        Self::new_unchecked(self.labels.clone(), brackets)
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<LieAlgebra> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: labels.len(),
            });
        }
        Self::new_unchecked(
            labels,
            self.table.iter().map(|(&(a, b), v)| (a, b, v.clone())),
        )
    }
}
