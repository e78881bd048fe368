use crate::error::{Error, Result};
use crate::exact::{factorial, Polynomial, Rational};

/// The polynomial invariant `xi_k` of `n(n,1)`, `0 <= k <= n-3`, in `n`
/// variables:
///
/// `xi_0 = e_1`,
/// `xi_k = (-1)^k k/(k+1)! e_2^(k+1) + sum_{j<k} (-1)^j/j! e_2^j e_{k+2-j} e_1^(k-j)`.
pub fn xi(n: usize, k: usize) -> Result<Polynomial> {
    xi_in(n, k, n)
}

/// `xi_k` written in `nvars >= n` variables, the first `n` being `e_1..e_n`.
pub fn xi_in(n: usize, k: usize, nvars: usize) -> Result<Polynomial> {
    if n < 3 || k > n - 3 {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: n.saturating_sub(3),
        });
    }
    assert!(nvars >= n);
    let mono = |e1: u32, e2: u32, other: Option<(usize, u32)>, c: Rational| {
        let mut exps = vec![0u32; nvars];
        exps[0] += e1;
        exps[1] += e2;
        if let Some((i, p)) = other {
            exps[i] += p;
        }
        Polynomial::monomial(nvars, exps, c)
    };
    if k == 0 {
        return Ok(Polynomial::var(nvars, 0));
    }
    let sign = |j: usize| if j % 2 == 0 { 1i64 } else { -1 };
    let k32 = k as u32;
    let lead = Rational::new(
        (sign(k) * k as i64).into(),
        factorial(k32 + 1),
    );
    let mut p = mono(0, k32 + 1, None, lead);
    for j in 0..k {
        let c = Rational::new(sign(j).into(), factorial(j as u32));
        // e_{k+2-j} is variable index k+1-j
        p = &p + &mono((k - j) as u32, j as u32, Some((k + 1 - j, 1)), c);
    }
    Ok(p)
}
