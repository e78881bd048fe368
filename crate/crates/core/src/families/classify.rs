use num_traits::{One, Zero};

use super::label::{normalize_s6, FamilyKind, FamilyLabel, FieldTag};
use super::spec::ExtensionSpec;
use super::transform::{
    apply_basis_change, canonical_parameters, outer_derivation, reduce_to_canonical, BasisChange,
};
use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exact::{int, QMatrix, Rational};

/// Result of classifying an extension of `n(n,1)`.
#[derive(Clone, Debug)]
pub struct Classification {
    pub label: FamilyLabel,
    /// The input algebra after the normalizing changes of basis. It equals
    /// the table built from `label`, up to basis labels. `None` when the
    /// normalizing scaling is irrational (S6 only).
    pub normalized: Option<LieAlgebra>,
}

struct Tracker {
    l: LieAlgebra,
    n: usize,
}

impl Tracker {
    fn derivation(&self, i: usize) -> QMatrix {
        outer_derivation(&self.l, self.n, self.n + i).expect("nilradical is an ideal")
    }

    fn params(&self, i: usize) -> (Rational, Rational, Vec<Rational>) {
        canonical_parameters(&self.derivation(i))
    }

    fn reduce(&mut self) -> Result<()> {
        self.l = reduce_to_canonical(&self.l, self.n)?;
        Ok(())
    }

    fn change(&mut self, t: BasisChange) -> Result<()> {
        self.l = apply_basis_change(&self.l, self.n, &t)?.0;
        self.reduce()
    }

    /// Replaces the outer basis vectors by the combinations in the rows of
    /// `rho` (`p x p`).
    fn mix_outer(&mut self, rho: &QMatrix) -> Result<()> {
        let dim = self.l.dim();
        let mut t = QMatrix::identity(dim);
        for i in 0..rho.rows() {
            for j in 0..rho.cols() {
                t[(self.n + i, self.n + j)] = rho[(i, j)].clone();
            }
        }
        self.l = self.l.change_basis(&t)?;
        Ok(())
    }

    /// Clears `a_3..a_{n-1}` of outer derivation `i`, whose `alpha` is 1.
    fn clear_toeplitz(&mut self, i: usize) -> Result<()> {
        let n = self.n;
        for j in 3..n {
            let a = self.params(i).2[j - 3].clone();
            if !a.is_zero() {
                self.change(BasisChange::u_only(n, j - 1, -a / int(j as i64 - 1)))?;
            }
        }
        Ok(())
    }
}

pub fn classify_extension(spec: &ExtensionSpec, field: FieldTag) -> Result<Classification> {
    classify_algebra(&spec.extension_algebra()?, field)
}

/// Classifies an algebra whose first `n` basis vectors carry the `n(n,1)`
/// table and whose remaining one or two basis vectors act on it.
pub fn classify_algebra(l: &LieAlgebra, field: FieldTag) -> Result<Classification> {
    let spec = ExtensionSpec::extract(l)?;
    let mut tr = Tracker {
        l: l.clone(),
        n: spec.n,
    };
    tr.reduce()?;
    match spec.p() {
        1 => classify_one(tr, field),
        2 => classify_two(tr),
        p => Err(Error::Unsupported(format!("{p} outer elements"))),
    }
}

fn classify_one(mut tr: Tracker, field: FieldTag) -> Result<Classification> {
    let n = tr.n;
    let ni = n as i64;
    let (alpha, beta, _) = tr.params(0);
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::NilpotentInput);
    }
    if !alpha.is_zero() {
        tr.mix_outer(&QMatrix::diag(&[alpha.recip()]))?;
        tr.clear_toeplitz(0)?;
        let (_, beta, a) = tr.params(0);
        let an = a[n - 3].clone();
        let one = Rational::one();
        if !an.is_zero() {
            if beta != one {
                tr.change(BasisChange::v_only(n, n - 1, -&an / (&beta - &one)))?;
            } else {
                tr.change(BasisChange::Scaling {
                    omega: one.clone(),
                    tau: an,
                })?;
                return Ok(Classification {
                    label: FamilyLabel::simple(FamilyKind::S5, n)?,
                    normalized: Some(tr.l),
                });
            }
        }
        let label = if beta.is_zero() {
            FamilyLabel::simple(FamilyKind::S2, n)?
        } else if beta == int(2 - ni) {
            FamilyLabel::simple(FamilyKind::S3, n)?
        } else if beta == int(ni - 2) {
            return Err(Error::ExcludedParameter(format!(
                "alpha = 1, beta = n-2 = {}: excluded from s(n+1,1)",
                ni - 2
            )));
        } else {
            FamilyLabel::s1(n, beta)?
        };
        return Ok(Classification {
            label,
            normalized: Some(tr.l),
        });
    }
    tr.mix_outer(&QMatrix::diag(&[beta.recip()]))?;
    let an = tr.params(0).2[n - 3].clone();
    if !an.is_zero() {
        tr.change(BasisChange::v_only(n, n - 1, -an))?;
    }
    let a: Vec<Rational> = tr.params(0).2[..n - 3].to_vec();
    if a.iter().all(Zero::is_zero) {
        return Ok(Classification {
            label: FamilyLabel::simple(FamilyKind::S4, n)?,
            normalized: Some(tr.l),
        });
    }
    let (params, omega) = normalize_s6(&a, field)?;
    let normalized = match omega {
        Some(omega) => {
            tr.change(BasisChange::Scaling {
                omega,
                tau: Rational::one(),
            })?;
            Some(tr.l)
        }
        None => None,
    };
    Ok(Classification {
        label: FamilyLabel::s6(n, params)?,
        normalized,
    })
}

fn classify_two(mut tr: Tracker) -> Result<Classification> {
    let n = tr.n;
    let (a1, b1, _) = tr.params(0);
    let (a2, b2, _) = tr.params(1);
    let m = QMatrix::from_rows(vec![vec![a1, b1], vec![a2, b2]]);
    let rho = m.inverse().ok_or_else(|| {
        Error::NotNilIndependent("a combination of the outer derivations is nilpotent".into())
    })?;
    tr.mix_outer(&rho)?;
    tr.reduce()?;
    tr.clear_toeplitz(0)?;
    let an = tr.params(0).2[n - 3].clone();
    if !an.is_zero() {
        // beta - alpha = -1 for the first derivation
        tr.change(BasisChange::v_only(n, n - 1, an))?;
    }
    if tr.params(1).2.iter().any(|x| !x.is_zero()) {
        return Err(Error::CommutatorNotInner);
    }
    let br = tr.l.basis_bracket(n, n + 1);
    if br[1..].iter().any(|x| !x.is_zero()) {
        return Err(Error::CommutatorNotInner);
    }
    let gamma = br[0].clone();
    if !gamma.is_zero() {
        let d11 = tr.derivation(1)[(0, 0)].clone();
        let mut t = QMatrix::identity(tr.l.dim());
        t[(n, 0)] = gamma / d11;
        tr.l = tr.l.change_basis(&t)?;
    }
    Ok(Classification {
        label: FamilyLabel::simple(FamilyKind::Snp2, n)?,
        normalized: Some(tr.l),
    })
}
