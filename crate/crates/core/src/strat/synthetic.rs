use super::Stratification;
use crate::error::Result;
use crate::field::Field;
use crate::series::{trunc_inv, trunc_mul, Poly, TruncSeries};

/// One index per degree `i` with Euler factor `1 + a_i T^i`.
#[derive(Clone, Debug)]
pub struct SyntheticStratification<F> {
    factors: Vec<(usize, Poly<F>)>,
}

impl<F: Field> SyntheticStratification<F> {
    pub fn factors(&self) -> &[(usize, Poly<F>)] {
        &self.factors
    }
}

/// Chooses `a_i` degree by degree so that `prod_i (1 + a_i T^i)^{-1}`
/// agrees with `target` through `max_degree`.
pub fn synthetic_stratification<F: Field>(
    target: &TruncSeries<F>,
    max_degree: usize,
) -> SyntheticStratification<F> {
    let mut acc = TruncSeries::<F>::one(max_degree);
    let mut factors = Vec::new();
    for i in 1..=max_degree {
        let mut a = acc.coeff(i);
        a -= &target.coeff(i);
        if a.is_zero() {
            continue;
        }
        let mut c = vec![F::zero(); i + 1];
        c[0] = F::one();
        c[i] = a;
        let l = Poly::new(c);
        let inv = trunc_inv(&l.truncate(max_degree), max_degree).expect("unit constant term");
        acc = trunc_mul(&acc, &inv, max_degree);
        factors.push((i, l));
    }
    SyntheticStratification { factors }
}

impl<F: Field> Stratification<F> for SyntheticStratification<F> {
    type Index = usize;

    fn stratum(&self, i: usize) -> Result<Vec<usize>> {
        Ok(self
            .factors
            .iter()
            .position(|(d, _)| *d == i)
            .into_iter()
            .collect())
    }

    fn euler_factor(&self, v: &usize) -> Result<Poly<F>> {
        Ok(self.factors[*v].1.clone())
    }
}
