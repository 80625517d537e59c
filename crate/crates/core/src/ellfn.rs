//! Elliptic curves over `F_q(t)` in characteristic at least 5.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffpoly::{monic_irreducibles, FqElem, FqField, FqPoly, Place, RatFunc};
use crate::field::{Field, FieldEndo};
use crate::series::Poly;
use crate::strat::{FuncEqData, PlaceSource, PlaceStratification};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with coefficients in
/// `F_q(t)`.
#[derive(Clone, Debug)]
pub struct EllCurveOverFqT {
    field: FqField,
    a: [RatFunc; 5],
    /// Integral short model `y^2 = x^3 + A x + B`.
    short_a: FqPoly,
    short_b: FqPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionType {
    Good,
    SplitMultiplicative,
    NonsplitMultiplicative,
    Additive,
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionType::Good => "good",
            ReductionType::SplitMultiplicative => "split-multiplicative",
            ReductionType::NonsplitMultiplicative => "nonsplit-multiplicative",
            ReductionType::Additive => "additive",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionData {
    pub place: Place,
    pub kind: ReductionType,
    /// Trace of Frobenius at good places, `+1`/`-1` at split/non-split
    /// multiplicative places, 0 at additive ones.
    pub a_v: i64,
    pub cond_exp: u32,
    /// Valuation of the minimal discriminant.
    pub disc_val: u32,
    /// `v(c4)` of the minimal model, `None` when `c4 = 0`.
    pub c4_val: Option<u32>,
}

impl ReductionData {
    pub fn euler_factor<F: Field>(&self, q: u64) -> Poly<F> {
        let e = self.place.degree();
        let mut c = vec![F::zero(); 2 * e + 1];
        c[0] = F::one();
        match self.kind {
            ReductionType::Good => {
                c[e] = F::from_int(-self.a_v);
                c[2 * e] = F::from_int(q.pow(e as u32) as i64);
            }
            ReductionType::SplitMultiplicative => c[e] = -F::one(),
            ReductionType::NonsplitMultiplicative => c[e] = F::one(),
            ReductionType::Additive => {}
        }
        Poly::new(c)
    }

    /// Additive with `3 v(c4) < v(Delta)`.
    pub fn potentially_multiplicative(&self) -> bool {
        self.kind == ReductionType::Additive && self.c4_val.is_some_and(|a| 3 * a < self.disc_val)
    }
}

/// A short model localized at one place: `pi` is the uniformizer as a
/// polynomial in the local variable (`t`, or `s = 1/t` at infinity).
struct LocalModel {
    pi: FqPoly,
    a: FqPoly,
    b: FqPoly,
}

fn val(p: &FqPoly, pi: &FqPoly) -> Option<u32> {
    p.valuation(pi)
}

fn exact_div(p: &FqPoly, d: &FqPoly) -> FqPoly {
    let (q, r) = p.div_rem(d).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    q
}

fn disc_of(a: &FqPoly, b: &FqPoly) -> FqPoly {
    a.pow(3).scale_by_int(4).add(&b.pow(2).scale_by_int(27))
}

trait ScaleInt {
    fn scale_by_int(&self, n: i64) -> Self;
}

impl ScaleInt for FqPoly {
    fn scale_by_int(&self, n: i64) -> Self {
        self.scale(self.field().from_int(n))
    }
}

impl EllCurveOverFqT {
    /// Builds the curve from `[a1, a2, a3, a4, a6]`.
    pub fn new(field: &FqField, a: [RatFunc; 5]) -> Result<Self> {
        if field.characteristic() < 5 {
            return Err(Error::Unsupported(format!(
                "elliptic curves need characteristic at least 5, got {}",
                field.characteristic()
            )));
        }
        let [a1, a2, a3, a4, a6] = &a;
        let b2 = a1.mul(a1).add(&a2.scale_int(4));
        let b4 = a4.scale_int(2).add(&a1.mul(a3));
        let b6 = a3.mul(a3).add(&a6.scale_int(4));
        let c4 = b2.mul(&b2).sub(&b4.scale_int(24));
        let c6 = b2
            .pow(3)
            .neg()
            .add(&b2.mul(&b4).scale_int(36))
            .sub(&b6.scale_int(216));
        let big_a = c4.scale_int(-27);
        let big_b = c6.scale_int(-54);
        let da = big_a.den();
        let db = big_b.den();
        let u = exact_div(&da.mul(db), &da.gcd(db));
        let short_a = big_a.mul(&RatFunc::from_poly(u.pow(4)));
        let short_b = big_b.mul(&RatFunc::from_poly(u.pow(6)));
        let (short_a, short_b) = match (short_a.as_poly(), short_b.as_poly()) {
            (Some(x), Some(y)) => (x.clone(), y.clone()),
            _ => return Err(Error::Inconsistent("denominators survived clearing".into())),
        };
        if disc_of(&short_a, &short_b).is_zero() {
            return Err(Error::SingularCurve("the discriminant vanishes".into()));
        }
        Ok(EllCurveOverFqT {
            field: field.clone(),
            a,
            short_a,
            short_b,
        })
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn a_invariants(&self) -> &[RatFunc; 5] {
        &self.a
    }

    /// The integral short model `(A, B)`.
    pub fn short_model(&self) -> (&FqPoly, &FqPoly) {
        (&self.short_a, &self.short_b)
    }

    /// `4A^3 + 27B^2` of the integral short model.
    pub fn discriminant(&self) -> FqPoly {
        disc_of(&self.short_a, &self.short_b)
    }

    fn local_model(&self, v: &Place) -> LocalModel {
        match v {
            Place::Finite(p) => LocalModel {
                pi: p.clone(),
                a: self.short_a.clone(),
                b: self.short_b.clone(),
            },
            Place::Infinity => {
                let da = self.short_a.degree().unwrap_or(0);
                let db = self.short_b.degree().unwrap_or(0);
                let k = da.div_ceil(4).max(db.div_ceil(6));
                LocalModel {
                    pi: FqPoly::t(&self.field),
                    a: if self.short_a.is_zero() {
                        self.short_a.clone()
                    } else {
                        self.short_a.reversed(4 * k)
                    },
                    b: if self.short_b.is_zero() {
                        self.short_b.clone()
                    } else {
                        self.short_b.reversed(6 * k)
                    },
                }
            }
        }
    }

    /// The local model with `v(A) < 4` or `v(B) < 6`.
    fn minimal_model(&self, v: &Place) -> LocalModel {
        let m = self.local_model(v);
        let s = match (val(&m.a, &m.pi), val(&m.b, &m.pi)) {
            (Some(x), Some(y)) => (x / 4).min(y / 6),
            (Some(x), None) => x / 4,
            (None, Some(y)) => y / 6,
            (None, None) => unreachable!("nonzero discriminant"),
        };
        if s == 0 {
            return m;
        }
        LocalModel {
            a: exact_div(&m.a, &m.pi.pow(4 * s as u64)),
            b: exact_div(&m.b, &m.pi.pow(6 * s as u64)),
            pi: m.pi,
        }
    }

    /// Reduction type, trace and conductor exponent at `v`.
    pub fn reduce_at_place(&self, v: &Place) -> Result<ReductionData> {
        let m = self.minimal_model(v);
        let disc_val = val(&disc_of(&m.a, &m.b), &m.pi).expect("nonzero discriminant");
        let c4_val = val(&m.a, &m.pi);
        let (kind, a_v, cond_exp) = if disc_val == 0 {
            (ReductionType::Good, trace_in_residue_field(&m)?, 0)
        } else if c4_val == Some(0) {
            if residue_character(&m.b.scale_by_int(6), &m.pi)? == 1 {
                (ReductionType::SplitMultiplicative, 1, 1)
            } else {
                (ReductionType::NonsplitMultiplicative, -1, 1)
            }
        } else {
            (ReductionType::Additive, 0, 2)
        };
        Ok(ReductionData {
            place: v.clone(),
            kind,
            a_v,
            cond_exp,
            disc_val,
            c4_val,
        })
    }

    /// `a_v = q_v + 1 - #E(k(v))` at a good place.
    pub fn trace_at_good_place(&self, v: &Place) -> Result<i64> {
        let r = self.reduce_at_place(v)?;
        if r.kind != ReductionType::Good {
            return Err(Error::InvalidInput(format!("{v} is a place of bad reduction")));
        }
        Ok(r.a_v)
    }

    /// Bad places, from the irreducible factors of the discriminant and the
    /// place at infinity.
    pub fn bad_places(&self) -> Result<Vec<ReductionData>> {
        let mut out = Vec::new();
        let inf = self.reduce_at_place(&Place::Infinity)?;
        if inf.kind != ReductionType::Good {
            out.push(inf);
        }
        let mut primes = self.discriminant().irreducible_factors()?;
        primes.sort();
        for p in primes {
            let r = self.reduce_at_place(&Place::Finite(p))?;
            if r.kind != ReductionType::Good {
                out.push(r);
            }
        }
        Ok(out)
    }

    pub fn conductor(&self) -> Result<Conductor> {
        let places = self.bad_places()?;
        let degree = places
            .iter()
            .map(|r| r.cond_exp as usize * r.place.degree())
            .sum::<usize>();
        if places.is_empty() {
            return Err(Error::ConstantCurve);
        }
        if degree < 4 {
            return Err(Error::Inconsistent(format!(
                "conductor degree {degree} is below 4 for a non-constant curve"
            )));
        }
        Ok(Conductor { places, degree })
    }

    /// `eps = q^n * prod_v s_v` from the local sign table.
    pub fn root_number(&self) -> Result<BigRational> {
        let c = self.conductor()?;
        let q = self.field.size();
        let mut sign = 1i64;
        for r in &c.places {
            sign *= local_sign(&self.field, r)?;
        }
        let qn = BigInt::from(q).pow(c.n() as u32);
        Ok(BigRational::from_integer(qn * sign))
    }
}

/// Local root number at a bad place.
pub fn local_sign(field: &FqField, r: &ReductionData) -> Result<i64> {
    let jacobi = |a: i64| -> Result<i64> {
        let chi = field.quadratic_character(field.from_int(a))? as i64;
        Ok(chi.pow(r.place.degree() as u32))
    };
    Ok(match r.kind {
        ReductionType::Good => 1,
        ReductionType::SplitMultiplicative => -1,
        ReductionType::NonsplitMultiplicative => 1,
        ReductionType::Additive if r.potentially_multiplicative() => jacobi(-1)?,
        ReductionType::Additive => match r.disc_val % 12 {
            0 => 1,
            4 | 8 => jacobi(-3)?,
            3 | 9 => jacobi(-2)?,
            _ => jacobi(-1)?,
        },
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Conductor {
    pub places: Vec<ReductionData>,
    pub degree: usize,
}

impl Conductor {
    /// `deg f - 4`.
    pub fn n(&self) -> usize {
        self.degree - 4
    }
}

/// Value of `x^{(q_v - 1)/2}` in `F_q[t]/(pi)`: 0, 1 or -1.
fn residue_character(x: &FqPoly, pi: &FqPoly) -> Result<i8> {
    let r = x.rem(pi)?;
    if r.is_zero() {
        return Ok(0);
    }
    let qv = pi.field().size().pow(pi.degree().unwrap() as u32);
    let e = r.pow_mod((qv - 1) / 2, pi)?;
    Ok(if e.is_one() { 1 } else { -1 })
}

/// `F_{q^d}` for the residue field of `pi`, with the coefficient embedding
/// and a root of `pi`.
fn residue_field(pi: &FqPoly) -> Result<(FqField, Vec<FqElem>, FqElem)> {
    let base = pi.field();
    let d = pi.degree().unwrap() as u32;
    let ext = FqField::new(base.characteristic(), base.degree() * d)?;
    let emb = base.embedding_into(&ext)?;
    let root = (0..ext.size() as u32)
        .into_par_iter()
        .map(FqElem)
        .find_first(|&x| pi.eval_in(&ext, &emb, x).is_zero())
        .ok_or_else(|| Error::Inconsistent(format!("{pi} has no root in its residue field")))?;
    Ok((ext, emb, root))
}

fn trace_in_residue_field(m: &LocalModel) -> Result<i64> {
    let (ext, emb, root) = residue_field(&m.pi)?;
    let a = m.a.eval_in(&ext, &emb, root);
    let b = m.b.eval_in(&ext, &emb, root);
    let s: i64 = (0..ext.size() as u32)
        .into_par_iter()
        .map(|x| {
            let x = FqElem(x);
            let y = ext.add(ext.mul(ext.add(ext.mul(x, x), a), x), b);
            ext.quadratic_character(y).unwrap() as i64
        })
        .sum();
    Ok(-s)
}

/// `(1 - aT + qT^2)(1 - aqT + q^3T^2)` for `E0: y^2 = x^3 + Ax + B` over
/// `F_q`.
pub fn constant_curve_denominator<F: Field>(field: &FqField, a: FqElem, b: FqElem) -> Result<Poly<F>> {
    let four_a3 = field.mul(field.from_int(4), field.pow(a, 3));
    let disc = field.add(four_a3, field.mul(field.from_int(27), field.mul(b, b)));
    if disc.is_zero() {
        return Err(Error::SingularCurve("constant curve is singular".into()));
    }
    let s: i64 = field
        .elements()
        .map(|x| {
            let y = field.add(field.mul(field.add(field.mul(x, x), a), x), b);
            field.quadratic_character(y).unwrap() as i64
        })
        .sum();
    Ok(constant_denominator_from_trace(-s, field.size()))
}

/// `N(E0, T) N(E0, qT)` with `N(E0, T) = 1 - aT + qT^2`.
pub fn constant_denominator_from_trace<F: Field>(a: i64, q: u64) -> Poly<F> {
    let q = q as i64;
    let n0 = Poly::from_ints(&[1, -a, q]);
    n0.mul(&n0.scale_variable(&F::from_int(q)))
}

/// Places of `F_q(t)` with their reduction data.
pub struct EllSource {
    curve: EllCurveOverFqT,
}

impl EllSource {
    pub fn curve(&self) -> &EllCurveOverFqT {
        &self.curve
    }
}

impl<F: Field> PlaceSource<F> for EllSource {
    type Place = Place;

    fn places_of_degree(&self, e: usize) -> Result<Vec<Place>> {
        let mut out = Vec::new();
        if e == 1 {
            out.push(Place::Infinity);
        }
        out.extend(monic_irreducibles(&self.curve.field, e).into_iter().map(Place::Finite));
        Ok(out)
    }

    fn local_factor(&self, v: &Place) -> Result<Poly<F>> {
        Ok(self.curve.reduce_at_place(v)?.euler_factor(self.curve.field.size()))
    }
}

pub type EllStratification<F> = PlaceStratification<F, EllSource>;

/// The stratification of a non-constant curve, with `D = 1`, `w = 1`,
/// `c = id` and `eps` from the local sign table.
pub fn ell_stratification<F: Field>(curve: EllCurveOverFqT) -> Result<(EllStratification<F>, FuncEqData<F>)> {
    let cond = curve.conductor()?;
    let eps = curve.root_number()?;
    let feq = FuncEqData {
        d_poly: Poly::one(),
        n: cond.n(),
        q: curve.field.size(),
        w: 1,
        c: FieldEndo::Identity,
        epsilon: Some(F::from_rational(&eps)),
        genus: 0,
        dim: 2,
        conductor_degree: cond.degree as u64,
    };
    Ok((PlaceStratification::new(EllSource { curve }), feq))
}
