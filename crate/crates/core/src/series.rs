//! Exact polynomials and truncated power series over a coefficient field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldEndo};

/// A polynomial in `T`, coefficients from low to high degree, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![F::one()],
        }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| F::from_int(x)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a.clone() * b);
                }
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let mut c = self.coeff(i);
                    c += &other.coeff(i);
                    c
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// `P(c T)`.
    pub fn scale_variable(&self, c: &F) -> Self {
        let mut h = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * &h);
            h = h * c;
        }
        Self::new(out)
    }

    /// Applies a field endomorphism coefficientwise.
    pub fn apply(&self, endo: FieldEndo) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.apply(endo)).collect())
    }

    pub fn truncate(&self, order: usize) -> TruncSeries<F> {
        TruncSeries::from_poly(self, order)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

fn write_terms<F: Field + fmt::Display>(f: &mut fmt::Formatter<'_>, coeffs: &[F]) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let s = if s.contains(' ') { format!("({s})") } else { s };
        let s = match (first, s.strip_prefix('-')) {
            (true, _) => s,
            (false, Some(abs)) => {
                write!(f, " - ")?;
                abs.to_string()
            }
            (false, None) => {
                write!(f, " + ")?;
                s
            }
        };
        first = false;
        match i {
            0 => write!(f, "{s}")?,
            1 => write!(f, "{s}*T")?,
            _ => write!(f, "{s}*T^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// A power series known modulo `T^{order+1}`: the truncation `[P(T)]_order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> TruncSeries<F> {
    /// Pads or truncates `coeffs` to length `order + 1`.
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order + 1, F::zero());
        TruncSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![F::one()], order)
    }

    pub fn from_poly(p: &Poly<F>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn set_coeff(&mut self, i: usize, c: F) {
        self.coeffs[i] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn to_poly(&self) -> Poly<F> {
        Poly::new(self.coeffs.clone())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

impl<F: Field + fmt::Display> fmt::Display for TruncSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)?;
        write!(f, " + O(T^{})", self.order() + 1)
    }
}

/// `[a * b]_order`; missing coefficients of shorter inputs count as zero.
pub fn trunc_mul<F: Field>(a: &TruncSeries<F>, b: &TruncSeries<F>, order: usize) -> TruncSeries<F> {
    let mut out = vec![F::zero(); order + 1];
    for (i, x) in a.coeffs.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate().take(order + 1 - i) {
            if !y.is_zero() {
                out[i + j] += &(x.clone() * y);
            }
        }
    }
    TruncSeries { coeffs: out }
}

/// `[a^{-1}]_order` by the triangular recurrence
/// `b_0 = 1/a_0`, `b_k = -(sum_{j=1}^k a_j b_{k-j}) / a_0`.
pub fn trunc_inv<F: Field>(a: &TruncSeries<F>, order: usize) -> Result<TruncSeries<F>> {
    let a0 = a.coeff(0);
    if a0.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let a0_inv = a0.inv()?;
    let mut b: Vec<F> = Vec::with_capacity(order + 1);
    b.push(a0_inv.clone());
    for k in 1..=order {
        let mut s = F::zero();
        for j in 1..=k.min(a.order()) {
            let aj = &a.coeffs[j];
            if !aj.is_zero() {
                s += &(aj.clone() * &b[k - j]);
            }
        }
        b.push(-(s * &a0_inv));
    }
    Ok(TruncSeries { coeffs: b })
}
