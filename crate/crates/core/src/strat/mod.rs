//! Stratifications of Euler factors and the algorithms that turn them into
//! numerators and epsilon factors.

mod alg;
mod places;
mod synthetic;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldEndo};
use crate::series::Poly;

pub use alg::{alg_coefficients, alg_epsilon, alg_funceq, alg_rationality, full_product};
pub use places::{PlaceSource, PlaceStratification};
pub use synthetic::{synthetic_stratification, SyntheticStratification};
pub use verify::{
    coefficient_relation, verify_epsilon_modulus, verify_functional_equation,
    verify_riemann_hypothesis, RhReport,
};

/// A function `v -> L_v(T)` with `V_i` the indices whose Euler factor is
/// `1 + O(T^i)` with a nonzero `T^i` term.
pub trait Stratification<F: Field>: Sync {
    type Index: fmt::Debug + Send + Sync;

    /// The finite set `V_i`. `V_0` is always empty.
    fn stratum(&self, i: usize) -> Result<Vec<Self::Index>>;

    fn euler_factor(&self, v: &Self::Index) -> Result<Poly<F>>;
}

/// Checks that `L_v` belongs to `V_i`.
pub fn check_stratum_invariant<F: Field>(
    index: &dyn fmt::Debug,
    i: usize,
    l: &Poly<F>,
) -> Result<()> {
    let fail = |reason: String| Error::StratumInvariant {
        index: format!("{index:?}"),
        degree: i,
        reason,
    };
    if !l.coeff(0).is_one() {
        return Err(fail("constant term is not 1".into()));
    }
    if let Some(j) = (1..i).find(|&j| !l.coeff(j).is_zero()) {
        return Err(fail(format!("nonzero coefficient in degree {j}")));
    }
    if l.coeff(i).is_zero() {
        return Err(fail(format!("coefficient in degree {i} vanishes")));
    }
    Ok(())
}

/// The data entering the functional equation
/// `L(T) = eps * T^{n-d} * L(f / T)^c` with `f = q^{-(w+1)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FuncEqData<F> {
    pub d_poly: Poly<F>,
    pub n: usize,
    pub q: u64,
    pub w: i64,
    pub c: FieldEndo,
    pub epsilon: Option<F>,
    pub genus: u64,
    pub dim: u64,
    pub conductor_degree: u64,
}

impl<F: Field> FuncEqData<F> {
    pub fn d(&self) -> usize {
        self.d_poly.degree()
    }

    /// `q^{-(w+1)}` as an exact rational.
    pub fn f_rational(&self) -> BigRational {
        let q = BigRational::from_integer(BigInt::from(self.q));
        let e = self.w + 1;
        if e >= 0 {
            q.pow(e as i32).recip()
        } else {
            q.pow((-e) as i32)
        }
    }

    pub fn f(&self) -> F {
        F::from_rational(&self.f_rational())
    }

    /// `deg f + (2g - 2) dim`, which must equal `n - d`.
    pub fn expected_degree_gap(&self) -> i64 {
        self.conductor_degree as i64 + (2 * self.genus as i64 - 2) * self.dim as i64
    }

    pub fn validate(&self) -> Result<()> {
        if self.q < 2 {
            return Err(Error::InvalidInput(format!("q = {} is not a field size", self.q)));
        }
        if !self.d_poly.coeff(0).is_one() {
            return Err(Error::InvalidInput("D must have constant term 1".into()));
        }
        let gap = self.n as i64 - self.d() as i64;
        if gap != self.expected_degree_gap() {
            return Err(Error::InvalidInput(format!(
                "n - deg D = {gap} but deg f + (2g - 2) dim = {}",
                self.expected_degree_gap()
            )));
        }
        Ok(())
    }

    pub fn with_epsilon(mut self, eps: F) -> Self {
        self.epsilon = Some(eps);
        self
    }
}

/// Outcome of one verification pass.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub detail: String,
}

impl CheckOutcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        CheckOutcome {
            passed: true,
            residual: None,
            detail: detail.into(),
        }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        CheckOutcome {
            passed: false,
            residual: None,
            detail: detail.into(),
        }
    }

    pub fn with_residual(mut self, r: f64) -> Self {
        self.residual = Some(r);
        self
    }
}

/// `L = N / D` together with `eps` and any checks that were run.
#[derive(Clone, Debug, PartialEq)]
pub struct LResult<F> {
    pub numerator: Poly<F>,
    pub denominator: Poly<F>,
    pub epsilon: F,
    pub checks: BTreeMap<String, CheckOutcome>,
}

impl<F: Field> LResult<F> {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|c| c.passed)
    }
}
