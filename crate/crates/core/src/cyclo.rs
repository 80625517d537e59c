//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! Elements are stored on the power basis `1, zeta, ..., zeta^(phi(m)-1)`
//! reduced modulo the m-th cyclotomic polynomial, so equality within one
//! conductor is coordinate equality. Mixed-conductor arithmetic lifts both
//! operands to `Q(zeta_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{parse_rational, rational_to_wire, Field};

type Cache = Mutex<HashMap<u32, Arc<Vec<BigInt>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, integer coefficients from low to high degree.
///
/// Computed as `(x^m - 1) / prod_{d | m, d < m} Phi_d(x)`, recursively.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    if let Some(p) = cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &phi_d);
        }
    }
    let poly = Arc::new(num);
    cache().lock().unwrap().insert(m, poly.clone());
    poly
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Reduces a coefficient vector (any length) modulo `Phi_m`.
fn reduce(mut coeffs: Vec<BigRational>, m: u32) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    if coeffs.len() <= deg {
        coeffs.resize(deg, BigRational::zero());
        return coeffs;
    }
    for i in (deg..coeffs.len()).rev() {
        if coeffs[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut coeffs[i], BigRational::zero());
        for (j, pj) in phi.iter().enumerate().take(deg) {
            if !pj.is_zero() {
                coeffs[i - deg + j] -= &c * BigRational::from_integer(pj.clone());
            }
        }
    }
    coeffs.truncate(deg);
    coeffs
}

/// An element of `Q(zeta_m)` on the reduced power basis.
#[derive(Clone, Debug)]
pub struct CycloElem {
    m: u32,
    coords: Vec<BigRational>,
}

impl CycloElem {
    /// Builds an element from power-basis coordinates (any length; reduced).
    pub fn new(m: u32, coords: Vec<BigRational>) -> Self {
        assert!(m >= 1, "conductor must be positive");
        CycloElem {
            m,
            coords: reduce(coords, m),
        }
    }

    pub fn rational(r: BigRational) -> Self {
        CycloElem {
            m: 1,
            coords: vec![r],
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// `zeta_m^e`, with `e` taken modulo `m`.
    pub fn root_of_unity(m: u32, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as usize;
        let mut coords = vec![BigRational::zero(); e + 1];
        coords[e] = BigRational::one();
        Self::new(m, coords)
    }

    pub fn zeta(m: u32) -> Self {
        Self::root_of_unity(m, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Rewrites the element in `Q(zeta_target)`; `target` must be a multiple of the conductor.
    pub fn lift(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.m),
            "cannot lift Q(zeta_{}) into Q(zeta_{})",
            self.m,
            target
        );
        if target == self.m {
            return self.clone();
        }
        let step = (target / self.m) as usize;
        let mut coords = vec![BigRational::zero(); target as usize];
        for (i, c) in self.coords.iter().enumerate() {
            coords[i * step] += c;
        }
        Self::new(target, coords)
    }

    /// The same element written over the smallest `Q(zeta_d)` that holds it.
    pub fn canonical(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::rational(r);
        }
        (2..self.m)
            .filter(|d| self.m.is_multiple_of(*d))
            .find_map(|d| self.descend(d))
            .unwrap_or_else(|| self.clone())
    }

    /// Solves `x = sum_j y_j zeta_d^j` in `Q(zeta_m)`; `None` when `x` is not in `Q(zeta_d)`.
    fn descend(&self, d: u32) -> Option<Self> {
        let n = self.coords.len();
        let k = euler_phi(d) as usize;
        // augmented n x (k + 1) system, columns are the lifted basis of Q(zeta_d)
        let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); k + 1]; n];
        for j in 0..k {
            let col = Self::root_of_unity(d, j as i64).lift(self.m);
            for (i, c) in col.coords.iter().enumerate() {
                rows[i][j] = c.clone();
            }
        }
        for (i, c) in self.coords.iter().enumerate() {
            rows[i][k] = c.clone();
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..k {
            let Some(p) = (r..n).find(|&i| !rows[i][j].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][j].recip();
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..n {
                if i != r && !rows[i][j].is_zero() {
                    let f = rows[i][j].clone();
                    for c in 0..=k {
                        let t = &f * &rows[r][c];
                        rows[i][c] -= t;
                    }
                }
            }
            pivots.push(j);
            r += 1;
        }
        if rows[r..].iter().any(|row| !row[k].is_zero()) {
            return None;
        }
        let mut y = vec![BigRational::zero(); k];
        for (i, &j) in pivots.iter().enumerate() {
            y[j] = rows[i][k].clone();
        }
        Some(Self::new(d, y))
    }

    /// Returns the rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        // Rationals sit on the constant coordinate in every power basis.
        if self.coords.iter().skip(1).all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.m == other.m {
            return (self.clone(), other.clone());
        }
        let l = self.m.lcm(&other.m);
        (self.lift(l), other.lift(l))
    }

    /// Image under `zeta -> zeta^-1`.
    pub fn conjugate(&self) -> Self {
        let m = self.m as usize;
        let mut coords = vec![BigRational::zero(); m.max(1)];
        for (i, c) in self.coords.iter().enumerate() {
            coords[(m - i) % m] += c;
        }
        Self::new(self.m, coords)
    }

    /// Evaluates at `zeta_m = exp(2 pi i / m)`.
    pub fn complex_embed(&self) -> Complex64 {
        let m = self.m as f64;
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = 2.0 * std::f64::consts::PI * i as f64 / m;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coords.len() == 1 {
            return Ok(CycloElem {
                m: self.m,
                coords: vec![self.coords[0].recip()],
            });
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.m)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let s = qpoly::inverse_mod(&self.coords, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Self::new(self.m, s))
    }
}

/// Dense polynomial helpers over `Q`, used for inversion modulo `Phi_m`.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn trim(p: &mut Vec<BigRational>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = a.to_vec();
        trim(&mut rem);
        let db = b.len() - 1;
        if rem.len() < b.len() {
            return (vec![], rem);
        }
        let lead_inv = b[db].recip();
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + db] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
            quot[i] = c;
        }
        trim(&mut rem);
        (quot, rem)
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(&mut out);
        out
    }

    /// `s` with `s * a = 1 mod modulus`, by the extended Euclidean algorithm.
    pub(super) fn inverse_mod(a: &[BigRational], modulus: &[BigRational]) -> Option<Vec<BigRational>> {
        let mut r0 = modulus.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r1);
        let mut s0: Vec<BigRational> = vec![];
        let mut s1 = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is the gcd; it must be a nonzero constant.
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].recip();
        Some(s0.into_iter().map(|x| x * &c).collect())
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.coords == other.coords;
        }
        let (a, b) = self.common(other);
        a.coords == b.coords
    }
}

impl Eq for CycloElem {}

impl Zero for CycloElem {
    fn zero() -> Self {
        Self::integer(0)
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl One for CycloElem {
    fn one() -> Self {
        Self::integer(1)
    }
}

impl<'a> AddAssign<&'a CycloElem> for CycloElem {
    fn add_assign(&mut self, rhs: &'a CycloElem) {
        if self.m != rhs.m {
            let (a, b) = self.common(rhs);
            *self = a;
            for (x, y) in self.coords.iter_mut().zip(&b.coords) {
                *x += y;
            }
            return;
        }
        for (x, y) in self.coords.iter_mut().zip(&rhs.coords) {
            *x += y;
        }
    }
}

impl<'a> SubAssign<&'a CycloElem> for CycloElem {
    fn sub_assign(&mut self, rhs: &'a CycloElem) {
        if self.m != rhs.m {
            let (a, b) = self.common(rhs);
            *self = a;
            for (x, y) in self.coords.iter_mut().zip(&b.coords) {
                *x -= y;
            }
            return;
        }
        for (x, y) in self.coords.iter_mut().zip(&rhs.coords) {
            *x -= y;
        }
    }
}

impl<'a> Mul<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;

    fn mul(self, rhs: &'a CycloElem) -> CycloElem {
        if self.m != rhs.m {
            let (a, b) = self.common(rhs);
            return &a * &b;
        }
        if self.coords.len() == 1 {
            return CycloElem {
                m: self.m,
                coords: vec![&self.coords[0] * &rhs.coords[0]],
            };
        }
        let n = self.coords.len();
        let mut out = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coords.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        CycloElem::new(self.m, out)
    }
}

impl<'a> Mul<&'a CycloElem> for CycloElem {
    type Output = CycloElem;

    fn mul(self, rhs: &'a CycloElem) -> CycloElem {
        &self * rhs
    }
}

impl Mul for CycloElem {
    type Output = CycloElem;

    fn mul(self, rhs: CycloElem) -> CycloElem {
        &self * &rhs
    }
}

impl MulAssign<&CycloElem> for CycloElem {
    fn mul_assign(&mut self, rhs: &CycloElem) {
        *self = &*self * rhs;
    }
}

impl Add for CycloElem {
    type Output = CycloElem;

    fn add(mut self, rhs: CycloElem) -> CycloElem {
        self += &rhs;
        self
    }
}

impl Sub for CycloElem {
    type Output = CycloElem;

    fn sub(mut self, rhs: CycloElem) -> CycloElem {
        self -= &rhs;
        self
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;

    fn neg(self) -> CycloElem {
        CycloElem {
            m: self.m,
            coords: self.coords.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Field for CycloElem {
    fn inv(&self) -> Result<Self> {
        self.inverse()
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::rational(r.clone())
    }

    fn to_complex(&self) -> Complex64 {
        self.complex_embed()
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.canonical();
        let mut wrote = false;
        for (i, c) in e.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if wrote {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let basis = match i {
                0 => String::new(),
                1 => format!("zeta{}", e.m),
                _ => format!("zeta{}^{}", e.m, i),
            };
            if basis.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{basis}")?;
            } else {
                write!(f, "{abs}*{basis}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CycloElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.canonical();
        let mut st = serializer.serialize_struct("CycloElem", 2)?;
        st.serialize_field("m", &c.m)?;
        let coords: Vec<String> = c.coords.iter().map(rational_to_wire).collect();
        st.serialize_field("coords", &coords)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CycloElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            m: u32,
            coords: Vec<String>,
        }
        let w = Wire::deserialize(deserializer)?;
        if w.m == 0 {
            return Err(de::Error::custom("conductor must be positive"));
        }
        let coords = w
            .coords
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        let expected = euler_phi(w.m) as usize;
        if coords.len() != expected {
            return Err(de::Error::custom(format!(
                "expected {expected} coordinates for m = {}, got {}",
                w.m,
                coords.len()
            )));
        }
        Ok(CycloElem::new(w.m, coords))
    }
}
