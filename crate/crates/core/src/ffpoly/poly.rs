use std::fmt;
use std::hash::{Hash, Hasher};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{FqElem, FqField};
use crate::error::{Error, Result};

/// A dense polynomial in `t` over `F_q`, coefficients from low to high degree.
#[derive(Clone)]
pub struct FqPoly {
    field: FqField,
    coeffs: Vec<FqElem>,
}

impl FqPoly {
    pub fn new(field: &FqField, mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FqPoly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds a polynomial from integer coefficients reduced mod p.
    pub fn from_ints(field: &FqField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FqField) -> Self {
        Self::new(field, vec![])
    }

    pub fn one(field: &FqField) -> Self {
        Self::constant(field, FqElem::ONE)
    }

    pub fn constant(field: &FqField, c: FqElem) -> Self {
        Self::new(field, vec![c])
    }

    /// The variable `t`.
    pub fn t(field: &FqField) -> Self {
        Self::new(field, vec![FqElem::ZERO, FqElem::ONE])
    }

    /// `t^n`.
    pub fn monomial(field: &FqField, n: usize) -> Self {
        let mut c = vec![FqElem::ZERO; n + 1];
        c[n] = FqElem::ONE;
        Self::new(field, c)
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FqElem::ONE
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FqElem::ONE
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: FqElem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![FqElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.leading())?;
        let mut quot = vec![FqElem::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, b));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `true` when `divisor` divides `self`.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        matches!(self.rem(divisor), Ok(r) if r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            base = base.mul_mod(&base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Inverse modulo `modulus`, when `gcd(self, modulus) = 1`.
    pub fn inv_mod(&self, modulus: &Self) -> Result<Self> {
        let f = &self.field;
        let mut r0 = modulus.clone();
        let mut r1 = self.rem(modulus)?;
        let mut s0 = Self::zero(f);
        let mut s1 = Self::one(f);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return Err(Error::DivisionByZero);
        }
        let c = f.inv(r0.leading())?;
        s0.scale(c).rem(modulus)
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: FqElem) -> FqElem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FqElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates in an extension field through the given coefficient embedding.
    pub fn eval_in(&self, ext: &FqField, embedding: &[FqElem], x: FqElem) -> FqElem {
        self.coeffs.iter().rev().fold(FqElem::ZERO, |acc, &c| {
            ext.add(ext.mul(acc, x), embedding[c.0 as usize])
        })
    }

    /// Multiplicity of `prime` as a factor; `None` for the zero polynomial.
    pub fn valuation(&self, prime: &Self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(prime).ok()?;
            if !r.is_zero() {
                return Some(v);
            }
            v += 1;
            cur = q;
        }
    }

    /// Coefficients reversed against `t^n`: returns `t^n * self(1/t)`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.coeffs.len() <= n + 1, "reversal degree below polynomial degree");
        let mut c = vec![FqElem::ZERO; n + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[n - i] = a;
        }
        Self::new(&self.field, c)
    }

    /// `t^{q^e} mod self` for `e = 1..=upto`, by iterated Frobenius.
    fn frobenius_powers(&self, upto: usize) -> Vec<Self> {
        let q = self.field.size();
        let mut out = Vec::with_capacity(upto);
        let mut x = Self::t(&self.field).rem(self).expect("nonzero modulus");
        for _ in 0..upto {
            x = x.pow_mod(q, self).expect("nonzero modulus");
            out.push(x.clone());
        }
        out
    }

    /// Rabin-style irreducibility test: `t^{q^d} = t mod f`, and
    /// `gcd(f, t^{q^e} - t) = 1` for every proper divisor `e` of `d`.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let t = Self::t(&self.field);
        let powers = self.frobenius_powers(d);
        for e in 1..d {
            if d % e == 0 && self.gcd(&powers[e - 1].sub(&t)).degree() != Some(0) {
                return false;
            }
        }
        powers[d - 1] == t.rem(self).expect("nonzero modulus")
    }

    /// Distinct monic irreducible factors (without multiplicity).
    ///
    /// Distinct-degree splitting followed by Cantor-Zassenhaus for odd `q`;
    /// the random choices come from a fixed seed so results are deterministic.
    pub fn irreducible_factors(&self) -> Result<Vec<FqPoly>> {
        if self.is_zero() {
            return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
        }
        let f = &self.field;
        let mut g = self.monic();
        let t = Self::t(f);
        let mut out = Vec::new();
        let mut d = 0;
        let mut frob = t.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        while g.degree().unwrap_or(0) > 0 {
            d += 1;
            frob = frob.rem(&g)?.pow_mod(f.size(), &g)?;
            let h = g.gcd(&frob.sub(&t));
            if h.degree().unwrap_or(0) == 0 {
                continue;
            }
            let mut parts = Vec::new();
            equal_degree_split(&h, d, &mut rng, &mut parts)?;
            for p in parts {
                while g.divisible_by(&p) {
                    g = g.div_rem(&p)?.0;
                }
                out.push(p);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Lexicographic index of a monic polynomial: `sum c_i q^i` over the
    /// non-leading coefficients.
    pub(crate) fn lex_key(&self) -> (usize, Vec<FqElem>) {
        let mut rev: Vec<FqElem> = self.coeffs.clone();
        rev.reverse();
        (self.coeffs.len(), rev)
    }
}

fn equal_degree_split(h: &FqPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FqPoly>) -> Result<()> {
    let n = h.degree().unwrap_or(0);
    if n == d {
        out.push(h.monic());
        return Ok(());
    }
    let f = h.field().clone();
    if f.characteristic() == 2 {
        return Err(Error::Unsupported("equal-degree factorization in characteristic 2".into()));
    }
    let q = f.size();
    loop {
        let a = FqPoly::new(
            &f,
            (0..n).map(|_| FqElem(rng.gen_range(0..q as u32))).collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // a^{(q^d - 1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}
        let mut conj = a.rem(h)?;
        let mut norm = conj.clone();
        for _ in 1..d {
            conj = conj.pow_mod(q, h)?;
            norm = norm.mul_mod(&conj, h)?;
        }
        let b = norm.pow_mod((q - 1) / 2, h)?.sub(&FqPoly::one(&f));
        let g = h.gcd(&b);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let other = h.div_rem(&g)?.0;
            equal_degree_split(&g, d, rng, out)?;
            equal_degree_split(&other, d, rng, out)?;
            return Ok(());
        }
    }
}

impl PartialEq for FqPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field.same_as(&other.field)
    }
}

impl Eq for FqPoly {}

impl Hash for FqPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FqPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for FqPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lex_key().cmp(&other.lex_key())
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = field.format_elem(c);
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            match (i, c == FqElem::ONE) {
                (0, _) => write!(f, "{cs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{cs}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{cs}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> FqField {
        FqField::new(p, 1).unwrap()
    }

    #[test]
    fn division_and_gcd() {
        let k = f(7);
        let a = FqPoly::from_ints(&k, &[1, 0, 1]); // t^2 + 1
        let b = FqPoly::from_ints(&k, &[3, 1]); // t + 3
        let prod = a.mul(&b);
        let (q, r) = prod.div_rem(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(prod.gcd(&a.mul(&FqPoly::from_ints(&k, &[1, 1]))), a);
        assert_eq!(prod.valuation(&b), Some(1));
        assert_eq!(prod.mul(&b).valuation(&b), Some(2));
        assert!(a.div_rem(&FqPoly::zero(&k)).is_err());
    }

    #[test]
    fn modular_inverse() {
        let k = f(3);
        let m = FqPoly::from_ints(&k, &[2, 2, 1]); // t^2 - t - 1 over F_3 (written t^2 + 2t + 2)
        for a in [FqPoly::t(&k), FqPoly::from_ints(&k, &[1, 1]), FqPoly::from_ints(&k, &[2])] {
            let inv = a.inv_mod(&m).unwrap();
            assert!(a.mul_mod(&inv, &m).unwrap().is_one());
        }
        assert!(m.inv_mod(&m).is_err());
    }

    #[test]
    fn irreducibility_catches_mixed_degree_products() {
        let k = f(2);
        // (t^2 + t + 1)(t^3 + t + 1) has no roots and no quadratic factor
        // visible to the degree-1 gcd test alone.
        let a = FqPoly::from_ints(&k, &[1, 1, 1]);
        let b = FqPoly::from_ints(&k, &[1, 1, 0, 1]);
        assert!(a.is_irreducible() && b.is_irreducible());
        assert!(!a.mul(&b).is_irreducible());
    }

    #[test]
    fn factoring_recovers_distinct_primes() {
        let k = f(7);
        let p1 = FqPoly::from_ints(&k, &[3, 1]);
        let p2 = FqPoly::from_ints(&k, &[1, 0, 1]);
        let p3 = FqPoly::from_ints(&k, &[2, 0, 1]);
        let p4 = FqPoly::from_ints(&k, &[3, 2, 1]);
        let prod = p1.pow(3).mul(&p2).mul(&p3.pow(2)).mul(&p4).scale(k.from_int(5));
        let mut expected = vec![p1, p2, p3, p4];
        expected.sort();
        assert_eq!(prod.irreducible_factors().unwrap(), expected);
    }

    #[test]
    fn display() {
        let k = f(7);
        assert_eq!(FqPoly::from_ints(&k, &[3, 2, 1]).to_string(), "t^2 + 2*t + 3");
        let k9 = FqField::new(3, 2).unwrap();
        let w = k9.generator();
        let p = FqPoly::new(&k9, vec![w, k9.add(w, FqElem::ONE), FqElem::ONE]);
        assert_eq!(p.to_string(), "t^2 + (w + 1)*t + w");
    }

    #[test]
    fn reversal() {
        let k = f(5);
        let p = FqPoly::from_ints(&k, &[1, 2]);
        assert_eq!(p.reversed(3), FqPoly::from_ints(&k, &[0, 0, 2, 1]));
    }
}
