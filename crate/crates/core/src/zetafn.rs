//! Zeta functions of `F_q(t)` and of hyperelliptic function fields, as
//! the L-function of the trivial representation.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ffpoly::{mobius, FqField, FqPoly};
use crate::field::{Field, FieldEndo};
use crate::series::Poly;
use crate::strat::{FuncEqData, Stratification};

/// The curve `u^2 = f(t)` over a field of odd characteristic.
#[derive(Clone, Debug)]
pub struct HyperellipticModel {
    f: FqPoly,
    genus: u64,
}

impl HyperellipticModel {
    pub fn new(f: FqPoly) -> Result<Self> {
        if f.field().characteristic() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        let deg = f
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidInput("f must be non-constant".into()))?;
        if f.gcd(&f.derivative()).degree() != Some(0) {
            return Err(Error::SingularCurve(format!("{f} is not square-free")));
        }
        Ok(HyperellipticModel {
            f,
            genus: (deg as u64 - 1) / 2,
        })
    }

    pub fn f(&self) -> &FqPoly {
        &self.f
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn base(&self) -> &FqField {
        self.f.field()
    }
}

/// Either the rational function field or a hyperelliptic one.
#[derive(Clone, Debug)]
pub enum ZetaCurve {
    Rational(FqField),
    Hyperelliptic(HyperellipticModel),
}

impl ZetaCurve {
    pub fn base(&self) -> &FqField {
        match self {
            ZetaCurve::Rational(k) => k,
            ZetaCurve::Hyperelliptic(c) => c.base(),
        }
    }

    pub fn genus(&self) -> u64 {
        match self {
            ZetaCurve::Rational(_) => 0,
            ZetaCurve::Hyperelliptic(c) => c.genus(),
        }
    }
}

fn extension(base: &FqField, i: usize) -> Result<FqField> {
    FqField::new(base.characteristic(), base.degree() * i as u32)
}

/// `#C(F_{q^i})`.
pub fn point_count(c: &HyperellipticModel, i: usize) -> Result<u64> {
    let base = c.base();
    let ext = extension(base, i)?;
    let emb = base.embedding_into(&ext)?;
    let affine: i64 = ext
        .elements()
        .par_bridge()
        .map(|x| 1 + ext.quadratic_character(c.f.eval_in(&ext, &emb, x)).unwrap() as i64)
        .sum();
    let deg = c.f.degree().unwrap_or(0);
    let infinite = if deg % 2 == 1 {
        1
    } else if ext.quadratic_character(emb[c.f.leading().0 as usize])? == 1 {
        2
    } else {
        0
    };
    Ok((affine + infinite) as u64)
}

/// `a_1..a_r` with `a_i = #C(F_{q^i})`.
pub fn point_counts(c: &HyperellipticModel, r: usize) -> Result<Vec<u64>> {
    (1..=r).map(|i| point_count(c, i)).collect()
}

fn counts_of(curve: &ZetaCurve, r: usize) -> Result<Vec<u64>> {
    match curve {
        ZetaCurve::Rational(k) => Ok((1..=r as u32).map(|i| k.size().pow(i) + 1).collect()),
        ZetaCurve::Hyperelliptic(c) => point_counts(c, r),
    }
}

/// Moebius inversion `b_i = (1/i) sum_{d | i} mu(i/d) a_d`.
fn invert_counts(a: &[u64]) -> Result<Vec<u64>> {
    (1..=a.len())
        .map(|i| {
            let s: i128 = (1..=i)
                .filter(|d| i % d == 0)
                .map(|d| mobius((i / d) as u64) as i128 * a[d - 1] as i128)
                .sum();
            if s < 0 || s % i as i128 != 0 {
                return Err(Error::Inconsistent(format!(
                    "point counts {a:?} give a non-integral number of places of degree {i}"
                )));
            }
            Ok((s / i as i128) as u64)
        })
        .collect()
}

/// Number of places of each degree `1..=r`.
pub fn places_by_degree(curve: &ZetaCurve, r: usize) -> Result<Vec<u64>> {
    invert_counts(&counts_of(curve, r)?)
}

/// `V_i` consists of `b_i` anonymous places with Euler factor `1 - T^i`.
pub struct ZetaStratification {
    curve: ZetaCurve,
    counts: Mutex<Vec<u64>>,
}

impl ZetaStratification {
    pub fn curve(&self) -> &ZetaCurve {
        &self.curve
    }

    fn places_of_degree(&self, i: usize) -> Result<u64> {
        let mut a = self.counts.lock().unwrap();
        if a.len() < i {
            let more = match &self.curve {
                ZetaCurve::Rational(_) => counts_of(&self.curve, i)?,
                ZetaCurve::Hyperelliptic(c) => {
                    let mut v = a.clone();
                    for j in v.len() + 1..=i {
                        v.push(point_count(c, j)?);
                    }
                    v
                }
            };
            *a = more;
        }
        Ok(*invert_counts(&a[..i])?.last().unwrap())
    }
}

impl<F: Field> Stratification<F> for ZetaStratification {
    type Index = (usize, u64);

    fn stratum(&self, i: usize) -> Result<Vec<(usize, u64)>> {
        if i == 0 {
            return Ok(vec![]);
        }
        Ok((0..self.places_of_degree(i)?).map(|k| (i, k)).collect())
    }

    fn euler_factor(&self, v: &(usize, u64)) -> Result<Poly<F>> {
        let mut c = vec![F::zero(); v.0 + 1];
        c[0] = F::one();
        c[v.0] = -F::one();
        Ok(Poly::new(c))
    }
}

/// The stratification with `D = (1-T)(1-qT)`, `n = 2g`, `w = 0`, `c = id`
/// and `eps = q^{g-1}`.
pub fn zeta_stratification<F: Field>(curve: ZetaCurve) -> (ZetaStratification, FuncEqData<F>) {
    let q = curve.base().size();
    let g = curve.genus();
    let qq = BigRational::from_integer(BigInt::from(q));
    let eps = if g == 0 { qq.recip() } else { qq.pow(g as u32 - 1) };
    let feq = FuncEqData {
        d_poly: Poly::new(vec![F::one(), F::from_int(-(q as i64 + 1)), F::from_int(q as i64)]),
        n: 2 * g as usize,
        q,
        w: 0,
        c: FieldEndo::Identity,
        epsilon: Some(F::from_rational(&eps)),
        genus: g,
        dim: 1,
        conductor_degree: 0,
    };
    let strat = ZetaStratification {
        curve,
        counts: Mutex::new(Vec::new()),
    };
    (strat, feq)
}
