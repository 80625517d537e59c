use rayon::prelude::*;

use super::{check_stratum_invariant, FuncEqData, Stratification};
use crate::error::{Error, Result};
use crate::field::{Field, FieldEndo};
use crate::series::{trunc_inv, trunc_mul, Poly, TruncSeries};

fn stratum_product<F: Field, L: Stratification<F>>(
    l: &L,
    i: usize,
    order: usize,
) -> Result<TruncSeries<F>> {
    let stratum = l.stratum(i)?;
    stratum
        .par_iter()
        .map(|v| {
            let lv = l.euler_factor(v)?;
            check_stratum_invariant(v, i, &lv)?;
            Ok(lv.truncate(order))
        })
        .try_reduce(
            || TruncSeries::one(order),
            |a, b| Ok(trunc_mul(&a, &b, order)),
        )
}

/// `[D]_{n'} * prod_{i=n0}^{n1} prod_{v in V_i} [L_v^{-1}]_{n'}`, truncated
/// at degree `n'`.
pub fn alg_rationality<F: Field, L: Stratification<F>>(
    l: &L,
    d: &Poly<F>,
    n0: usize,
    n1: usize,
    nprime: usize,
) -> Result<TruncSeries<F>> {
    if n0 > n1 + 1 || n1 > nprime {
        return Err(Error::InvalidInput(format!(
            "bounds must satisfy n0 <= n1 <= n', got ({n0}, {n1}, {nprime})"
        )));
    }
    let mut p = TruncSeries::one(nprime);
    for i in n0.max(1)..=n1 {
        p = trunc_mul(&p, &stratum_product(l, i, nprime)?, nprime);
    }
    let p = trunc_inv(&p, nprime)?;
    Ok(trunc_mul(&p, &d.truncate(nprime), nprime))
}

/// The `M_k` recursion of the coefficient algorithm, reading `P_i` from `p`.
pub(crate) fn m_recursion<F: Field>(
    p: &[F],
    d: &Poly<F>,
    m: usize,
    f: &F,
    c: FieldEndo,
) -> Vec<F> {
    let dd = d.degree();
    let dc: Vec<F> = d.coeffs().iter().map(|x| x.apply(c)).collect();
    let pc: Vec<F> = p.iter().take(m + 1).map(|x| x.apply(c)).collect();
    let mut big_m: Vec<F> = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut h = F::one();
        let kp = dd.min(k);
        let mut mk = F::zero();
        for i in 0..=k {
            if k - i <= kp {
                if let Some(pi) = pc.get(i) {
                    mk += &(pi.clone() * &d.coeffs()[dd - (k - i)] * &h);
                }
            }
            if (1..=kp).contains(&i) {
                mk -= &(big_m[k - i].clone() * &dc[i] * &h);
            }
            h = h * f;
        }
        big_m.push(mk);
    }
    big_m
}

/// Runs [`alg_rationality`] with `(D, 1, n1, n')` and returns `P` with the
/// coefficients `M_0..M_m` satisfying `N_{n-k} = eps * M_k`.
pub fn alg_coefficients<F: Field, L: Stratification<F>>(
    l: &L,
    d: &Poly<F>,
    m: usize,
    n1: usize,
    nprime: usize,
    f: &F,
    c: FieldEndo,
) -> Result<(TruncSeries<F>, Vec<F>)> {
    if m > n1 {
        return Err(Error::InvalidInput(format!("m = {m} exceeds n1 = {n1}")));
    }
    let p = alg_rationality(l, d, 1, n1, nprime)?;
    let big_m = m_recursion(p.coeffs(), d, m, f, c);
    Ok((p, big_m))
}

/// The numerator `N`, using the functional equation for its upper half.
pub fn alg_funceq<F: Field, L: Stratification<F>>(l: &L, feq: &FuncEqData<F>) -> Result<Poly<F>> {
    let eps = feq
        .epsilon
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("epsilon is required".into()))?;
    let n = feq.n;
    if n == 0 {
        return Ok(Poly::one());
    }
    let n1 = n / 2;
    let m = n - n1 - 1;
    let (p, big_m) = alg_coefficients(l, &feq.d_poly, m, n1, n1, &feq.f(), feq.c)?;
    let mut coeffs: Vec<F> = p.coeffs().to_vec();
    coeffs.resize(n + 1, F::zero());
    for k in (n - m)..=n {
        coeffs[k] = eps.clone() * &big_m[n - k];
    }
    Ok(Poly::new(coeffs))
}

/// Recovers `eps` from the lower half of `N`.
pub fn alg_epsilon<F: Field, L: Stratification<F>>(l: &L, feq: &FuncEqData<F>) -> Result<F> {
    let n = feq.n;
    let n1 = n.div_ceil(2);
    let m = n1;
    let (p, big_m) = alg_coefficients(l, &feq.d_poly, m, n1, n, &feq.f(), feq.c)?;
    let k = ((n - m)..=n)
        .find(|&k| !big_m[n - k].is_zero())
        .ok_or_else(|| Error::Inconsistent("every M_k vanishes, so D_d = 0".into()))?;
    let rk = if n1 < k {
        let q = alg_rationality(l, &Poly::one(), n1 + 1, k, k)?;
        trunc_mul(&p.truncate(k), &q, k).coeff(k)
    } else {
        p.coeff(k)
    };
    rk.checked_div(&big_m[n - k])
}

/// `N` from the Euler product over all strata up to `n`, without the
/// functional equation.
pub fn full_product<F: Field, L: Stratification<F>>(l: &L, feq: &FuncEqData<F>) -> Result<Poly<F>> {
    Ok(alg_rationality(l, &feq.d_poly, 1, feq.n, feq.n)?.to_poly())
}
