//! The three worked examples through the public API, plus numerical checks
//! and invariance under reordering of each stratum.

use std::fmt::Debug;

use lffc_core::dirfn::{dirichlet_stratification, CharComponent, DirichletChar};
use lffc_core::ellfn::{ell_stratification, EllCurveOverFqT};
use lffc_core::ffpoly::{parse_poly, parse_ratfunc, FqField};
use lffc_core::strat::{
    full_product, verify_epsilon_modulus, verify_functional_equation, verify_riemann_hypothesis,
};
use lffc_core::zetafn::{zeta_stratification, HyperellipticModel, ZetaCurve};
use lffc_core::{
    alg_epsilon, alg_funceq, CycloElem, Field, FuncEqData, Poly, Rational, Result, Stratification,
};

/// Hands out each stratum back to front.
struct Reversed<'a, S>(&'a S);

impl<F: Field, S: Stratification<F>> Stratification<F> for Reversed<'_, S>
where
    S::Index: Debug + Send + Sync,
{
    type Index = S::Index;

    fn stratum(&self, i: usize) -> Result<Vec<S::Index>> {
        let mut v = self.0.stratum(i)?;
        v.reverse();
        Ok(v)
    }

    fn euler_factor(&self, v: &S::Index) -> Result<Poly<F>> {
        self.0.euler_factor(v)
    }
}

fn check_all<F: Field, L: Stratification<F>>(l: &L, feq: &FuncEqData<F>, expected: &Poly<F>)
where
    L::Index: Debug + Send + Sync,
{
    let eps = alg_epsilon(l, feq).unwrap();
    let feq = feq.clone().with_epsilon(eps.clone());
    let n = alg_funceq(l, &feq).unwrap();
    assert_eq!(&n, expected);
    assert_eq!(&full_product(l, &feq).unwrap(), expected);
    assert!(verify_functional_equation(&n, &feq).passed);
    let rh = verify_riemann_hypothesis(&n, feq.q, feq.w, 1e-8).unwrap();
    assert!(rh.passed, "{rh:?}");
    assert!(verify_epsilon_modulus(&eps, &feq, 1e-9).passed);

    let r = Reversed(l);
    assert_eq!(alg_epsilon(&r, &feq).unwrap(), eps);
    assert_eq!(&alg_funceq(&r, &feq).unwrap(), expected);
}

#[test]
fn genus_three_curve_over_f3() {
    let k = FqField::new(3, 1).unwrap();
    let c = HyperellipticModel::new(parse_poly(&k, "t^7 - t + 1").unwrap()).unwrap();
    let (l, feq) = zeta_stratification::<Rational>(ZetaCurve::Hyperelliptic(c));
    check_all(&l, &feq, &Poly::from_ints(&[1, 3, 6, 12, 18, 27, 27]));
}

#[test]
fn elliptic_curve_over_f7_t() {
    let k = FqField::new(7, 1).unwrap();
    let a = ["t", "0", "0", "0", "t^2 + 2"].map(|s| parse_ratfunc(&k, s).unwrap());
    let e = EllCurveOverFqT::new(&k, a).unwrap();
    let (l, feq) = ell_stratification::<Rational>(e).unwrap();
    assert_eq!(feq.n, 5);
    check_all(&l, &feq, &Poly::from_ints(&[1, 0, 49, 343, 0, 16807]));
}

#[test]
fn dirichlet_character_over_f3() {
    let k = FqField::new(3, 1).unwrap();
    let comps = ["t^2 - t - 1:t:zeta8^1", "t^2 + 1:t + 1:zeta4^1", "t^2 + t - 1:t:zeta2^1"]
        .iter()
        .map(|s| CharComponent::parse(&k, s).unwrap())
        .collect();
    let chi = DirichletChar::new(&k, comps).unwrap();
    let (l, feq) = dirichlet_stratification(chi).unwrap();
    let c = CycloElem::integer;
    let i = CycloElem::root_of_unity(4, 1);
    let z8 = CycloElem::root_of_unity(8, 1);
    let z83 = CycloElem::root_of_unity(8, 3);
    let expected = Poly::new(vec![
        c(1),
        c(1),
        i.clone() + c(1),
        c(2) * &z83 - i.clone() - c(1),
        c(3) * &z83 - c(3) * &i - c(3) * &z8,
        c(9) * &z83 - c(9) * &i - c(9) * &z8,
    ]);
    check_all(&l, &feq, &expected);
}
