use num_complex::Complex64;
use serde::Serialize;

use super::alg::m_recursion;
use super::{CheckOutcome, FuncEqData};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::Poly;

/// The `M_k` of the coefficient recursion with `N` in place of `P`, for
/// `k = 0..=n`.
pub fn coefficient_relation<F: Field>(n_poly: &Poly<F>, feq: &FuncEqData<F>) -> Vec<F> {
    let mut coeffs = n_poly.coeffs().to_vec();
    coeffs.resize(feq.n + 1, F::zero());
    m_recursion(&coeffs, &feq.d_poly, feq.n, &feq.f(), feq.c)
}

/// Checks `N_{n-k} = eps * M_k` for every `k` exactly.
pub fn verify_functional_equation<F: Field>(n_poly: &Poly<F>, feq: &FuncEqData<F>) -> CheckOutcome {
    let Some(eps) = feq.epsilon.as_ref() else {
        return CheckOutcome::fail("no epsilon supplied");
    };
    if n_poly.degree() > feq.n {
        return CheckOutcome::fail(format!("deg N = {} exceeds n = {}", n_poly.degree(), feq.n));
    }
    let m = coefficient_relation(n_poly, feq);
    let bad: Vec<usize> = (0..=feq.n)
        .filter(|&k| n_poly.coeff(feq.n - k) != eps.clone() * &m[k])
        .collect();
    if bad.is_empty() {
        CheckOutcome::pass(format!("N_(n-k) = eps M_k for k = 0..{}", feq.n))
    } else {
        CheckOutcome::fail(format!("N_(n-k) != eps M_k for k in {bad:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RhReport {
    pub passed: bool,
    pub expected_modulus: f64,
    pub moduli: Vec<f64>,
    pub max_relative_error: f64,
}

impl RhReport {
    pub fn outcome(&self) -> CheckOutcome {
        let detail = format!(
            "{} roots, expected modulus {:.10}, max relative error {:.3e}",
            self.moduli.len(),
            self.expected_modulus,
            self.max_relative_error
        );
        let c = if self.passed {
            CheckOutcome::pass(detail)
        } else {
            CheckOutcome::fail(detail)
        };
        c.with_residual(self.max_relative_error)
    }
}

const MAX_ITER: usize = 2000;

fn horner(b: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    let az = z.norm();
    for c in b.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        bound = bound * az + c.norm();
    }
    (p, dp, bound)
}

/// All complex roots by Aberth-Ehrlich iteration; roots that end up within
/// a small cluster are replaced by the cluster mean.
fn aberth(b: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = b.len() - 1;
    let rho = (b[0].norm() / b[n].norm()).powf(1.0 / n as f64);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(rho, std::f64::consts::TAU * j as f64 / n as f64 + 0.4))
        .collect();
    let mut done = false;
    for _ in 0..MAX_ITER {
        done = true;
        for j in 0..n {
            let (p, dp, bound) = horner(b, z[j]);
            if p.norm() <= 8.0 * f64::EPSILON * bound {
                continue;
            }
            let ratio = if dp.norm() == 0.0 {
                Complex64::new(1e-8, 1e-8)
            } else {
                p / dp
            };
            let s: Complex64 = (0..n)
                .filter(|&k| k != j)
                .map(|k| (z[j] - z[k]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[j] -= step;
            if step.norm() > 1e-15 * (1.0 + z[j].norm()) {
                done = false;
            }
        }
        if done {
            break;
        }
    }
    if !done {
        return Err(Error::RootFindingDiverged(MAX_ITER));
    }
    let mut cluster: Vec<usize> = (0..n).collect();
    for j in 0..n {
        for k in 0..j {
            if (z[j] - z[k]).norm() < 1e-4 * (1.0 + z[j].norm()) {
                let (a, b) = (cluster[j], cluster[k]);
                for c in cluster.iter_mut() {
                    if *c == a {
                        *c = b;
                    }
                }
            }
        }
    }
    let mut out = z.clone();
    for j in 0..n {
        if cluster[j] != j {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&k| cluster[k] == j).collect();
        let mean = members.iter().map(|&k| z[k]).sum::<Complex64>() / members.len() as f64;
        let root = polish(&derivative(b, members.len() - 1), mean);
        for k in members {
            out[k] = root;
        }
    }
    Ok(out)
}

/// Coefficients of the `r`-th derivative.
fn derivative(b: &[Complex64], r: usize) -> Vec<Complex64> {
    let mut d = b.to_vec();
    for _ in 0..r {
        d = d.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    }
    d
}

/// Newton iteration from `z`; a root of multiplicity `m` of the polynomial
/// is a simple root of its `(m-1)`-th derivative.
fn polish(b: &[Complex64], mut z: Complex64) -> Complex64 {
    if b.len() < 2 {
        return z;
    }
    for _ in 0..100 {
        let (p, dp, _) = horner(b, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Checks that every root of `N` has modulus `q^{-(w+1)/2}` to relative
/// tolerance `tol`.
pub fn verify_riemann_hypothesis<F: Field>(n_poly: &Poly<F>, q: u64, w: i64, tol: f64) -> Result<RhReport> {
    if n_poly.is_zero() {
        return Err(Error::InvalidInput("N is zero".into()));
    }
    let r = (q as f64).powf(-((w + 1) as f64) / 2.0);
    if n_poly.degree() == 0 {
        // no roots, nothing to check
        return Ok(RhReport {
            passed: true,
            expected_modulus: r,
            moduli: vec![],
            max_relative_error: 0.0,
        });
    }
    let mut scale = 1.0;
    let b: Vec<Complex64> = n_poly
        .coeffs()
        .iter()
        .map(|c| {
            let v = c.to_complex() * scale;
            scale *= r;
            v
        })
        .collect();
    let roots = aberth(&b)?;
    let moduli: Vec<f64> = roots.iter().map(|z| z.norm() * r).collect();
    let max_relative_error = moduli.iter().map(|m| (m / r - 1.0).abs()).fold(0.0, f64::max);
    Ok(RhReport {
        passed: max_relative_error <= tol,
        expected_modulus: r,
        moduli,
        max_relative_error,
    })
}

/// Compares `|eps|` with `q^{(deg f + (2g-2) dim)(w+1)/2}`.
pub fn verify_epsilon_modulus<F: Field>(eps: &F, feq: &FuncEqData<F>, tol: f64) -> CheckOutcome {
    let expected = (feq.q as f64).powf(feq.expected_degree_gap() as f64 * (feq.w + 1) as f64 / 2.0);
    let got = eps.to_complex().norm();
    let rel = (got / expected - 1.0).abs();
    let detail = format!("|eps| = {got:.10}, expected {expected:.10}");
    let c = if rel <= tol {
        CheckOutcome::pass(detail)
    } else {
        CheckOutcome::fail(detail)
    };
    c.with_residual(rel)
}
