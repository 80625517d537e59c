//! Exact computation of L-functions and epsilon factors for stratified
//! representations of global function fields.
//!
//! The algorithms in [`strat`] are generic over the coefficient field; the
//! backends ([`zetafn`], [`ellfn`], [`dirfn`]) supply Euler factors.
//!
//! ```
//! use lffc_core::ffpoly::{parse_poly, FqField};
//! use lffc_core::zetafn::{zeta_stratification, HyperellipticModel, ZetaCurve};
//! use lffc_core::{alg_epsilon, alg_funceq, Rational};
//!
//! let k = FqField::new(3, 1)?;
//! let curve = ZetaCurve::Hyperelliptic(HyperellipticModel::new(parse_poly(&k, "t^7 - t + 1")?)?);
//! let (strat, feq) = zeta_stratification::<Rational>(curve);
//! let n = alg_funceq(&strat, &feq)?;
//! assert_eq!(n.to_string(), "1 + 3*T + 6*T^2 + 12*T^3 + 18*T^4 + 27*T^5 + 27*T^6");
//! assert_eq!(alg_epsilon(&strat, &feq)?, Rational::from_integer(9.into()));
//! # Ok::<(), lffc_core::Error>(())
//! ```

pub mod cyclo;
pub mod dirfn;
pub mod ellfn;
pub mod error;
pub mod ffpoly;
pub mod field;
pub mod series;
pub mod strat;
pub mod zetafn;

pub use cyclo::CycloElem;
pub use error::{Error, Result};
pub use field::{Field, FieldEndo};
pub use series::{trunc_inv, trunc_mul, Poly, TruncSeries};
pub use strat::{
    alg_coefficients, alg_epsilon, alg_funceq, alg_rationality, synthetic_stratification,
    CheckOutcome, FuncEqData, LResult, Stratification,
};

pub type Rational = num_rational::BigRational;

pub type RationalPoly = Poly<Rational>;
pub type RationalSeries = TruncSeries<Rational>;
pub type RationalFuncEq = FuncEqData<Rational>;
pub type RationalSynthetic = strat::SyntheticStratification<Rational>;

pub type CycloPoly = Poly<CycloElem>;
pub type CycloSeries = TruncSeries<CycloElem>;
pub type CycloFuncEq = FuncEqData<CycloElem>;
pub type CycloSynthetic = strat::SyntheticStratification<CycloElem>;

pub type FloatPoly = Poly<f64>;
pub type FloatSeries = TruncSeries<f64>;
pub type Float32Poly = Poly<f32>;
pub type Float32Series = TruncSeries<f32>;
