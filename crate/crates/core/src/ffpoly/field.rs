use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Fields up to this size carry discrete log/exp tables.
const TABLE_LIMIT: u64 = 1 << 22;

/// An element of `F_{p^k}`, encoded as `sum c_i p^i` where `c_i` are the
/// coordinates on the polynomial basis `1, w, ..., w^{k-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem(pub u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `log(1 + g^d)`, or `NO_LOG` when `g^d = -1`.
    zech: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

struct Inner {
    p: u32,
    k: u32,
    q: u64,
    /// Monic defining polynomial over `F_p`, low to high; `[0, 1]` when `k = 1`.
    modulus: Vec<u32>,
    primitive: FqElem,
    tables: Option<Tables>,
}

/// The finite field `F_{p^k}`, defined by the lexicographically first monic
/// irreducible polynomial of degree `k` over `F_p`.
///
/// Handles are cheap to clone; construction is cached per `(p, k)`.
#[derive(Clone)]
pub struct FqField {
    inner: Arc<Inner>,
}

type FieldCache = Mutex<HashMap<(u32, u32), FqField>>;

fn field_cache() -> &'static FieldCache {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FqField {
    /// The field with `p^k` elements.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{k} is too large")))?;
        if let Some(f) = field_cache().lock().unwrap().get(&(p, k)) {
            return Ok(f.clone());
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            let prime = FqField::new(p, 1)?;
            super::first_monic_irreducible(&prime, k as usize)
                .coeffs()
                .iter()
                .map(|c| c.0)
                .collect()
        };
        let mut inner = Inner {
            p,
            k,
            q,
            modulus,
            primitive: FqElem::ONE,
            tables: None,
        };
        inner.primitive = find_primitive(&inner);
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        let field = FqField {
            inner: Arc::new(inner),
        };
        field_cache()
            .lock()
            .unwrap()
            .insert((p, k), field.clone());
        Ok(field)
    }

    /// Parses a field size written as `q` or `p^k`.
    pub fn from_size_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (p, k) = match s.split_once('^') {
            Some((p, k)) => {
                let p: u32 = p.trim().parse().map_err(|_| Error::parse(s, "bad prime"))?;
                let k: u32 = k.trim().parse().map_err(|_| Error::parse(s, "bad exponent"))?;
                (p, k)
            }
            None => {
                let q: u64 = s.parse().map_err(|_| Error::parse(s, "bad field size"))?;
                prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?
            }
        };
        FqField::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn size(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> FqElem {
        self.inner.primitive
    }

    /// The polynomial-basis generator `w` (equal to the image of `x`).
    pub fn generator(&self) -> FqElem {
        if self.inner.k == 1 {
            // F_p has no separate generator; w is read as the identity map.
            FqElem::ONE
        } else {
            FqElem(self.inner.p)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.inner.q as u32).map(FqElem)
    }

    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.inner.p as i64) as u32)
    }

    pub fn from_coords(&self, coords: &[u32]) -> FqElem {
        encode(&self.inner, coords)
    }

    pub fn coords(&self, a: FqElem) -> Vec<u32> {
        decode(&self.inner, a)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.inner.p;
        if self.inner.k == 1 {
            return FqElem(((a.0 as u64 + b.0 as u64) % p as u64) as u32);
        }
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        match &self.inner.tables {
            Some(t) => zech_add(t, self.inner.q - 1, a, b),
            None => digit_add(p, a, b),
        }
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        let p = self.inner.p;
        if self.inner.k == 1 {
            return FqElem((p - a.0) % p);
        }
        if p == 2 || a.is_zero() {
            return a;
        }
        if let Some(t) = &self.inner.tables {
            // -1 = g^(n/2)
            let n = self.inner.q - 1;
            return FqElem(t.exp[((t.log[a.0 as usize] as u64 + n / 2) % n) as usize]);
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        FqElem(out)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.is_zero() || b.is_zero() {
            return FqElem::ZERO;
        }
        if let Some(t) = &self.inner.tables {
            let n = self.inner.q - 1;
            let e = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % n;
            return FqElem(t.exp[e as usize]);
        }
        slow_mul(&self.inner, a, b)
    }

    pub fn pow(&self, a: FqElem, mut e: u64) -> FqElem {
        if e == 0 {
            return FqElem::ONE;
        }
        if a.is_zero() {
            return FqElem::ZERO;
        }
        if let Some(t) = &self.inner.tables {
            let n = self.inner.q - 1;
            let l = (t.log[a.0 as usize] as u128 * (e % n) as u128 % n as u128) as usize;
            return FqElem(t.exp[l]);
        }
        let mut base = a;
        let mut acc = FqElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.inner.q - 2))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Discrete logarithm to the base [`primitive_element`](Self::primitive_element).
    pub fn log(&self, a: FqElem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        match &self.inner.tables {
            Some(t) => Some(t.log[a.0 as usize] as u64),
            None => {
                let g = self.inner.primitive;
                let mut x = FqElem::ONE;
                for e in 0..self.inner.q - 1 {
                    if x == a {
                        return Some(e);
                    }
                    x = self.mul(x, g);
                }
                None
            }
        }
    }

    /// Legendre-type symbol: 0 for zero, 1 for nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self, a: FqElem) -> Result<i8> {
        if self.inner.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if a.is_zero() {
            return Ok(0);
        }
        if let Some(t) = &self.inner.tables {
            return Ok(if t.log[a.0 as usize] % 2 == 0 { 1 } else { -1 });
        }
        Ok(if self.pow(a, (self.inner.q - 1) / 2) == FqElem::ONE {
            1
        } else {
            -1
        })
    }

    /// Images of every element of `self` inside `ext`, indexed by encoding.
    ///
    /// `ext` must have the same characteristic and a degree divisible by ours.
    pub fn embedding_into(&self, ext: &FqField) -> Result<Vec<FqElem>> {
        if ext.characteristic() != self.characteristic() || !ext.degree().is_multiple_of(self.degree()) {
            return Err(Error::InvalidField(format!(
                "F_{} does not embed into F_{}",
                self.size(),
                ext.size()
            )));
        }
        let root = if self.degree() == 1 {
            FqElem::ONE
        } else {
            // Roots of our modulus lie in the unique subfield of order q.
            let cofactor = (ext.size() - 1) / (self.size() - 1);
            let g = ext.pow(ext.primitive_element(), cofactor);
            let mut x = g;
            let mut found = None;
            for _ in 0..self.size() - 1 {
                let v = self
                    .modulus()
                    .iter()
                    .rev()
                    .fold(FqElem::ZERO, |acc, &c| ext.add(ext.mul(acc, x), ext.from_int(c as i64)));
                if v.is_zero() {
                    found = Some(x);
                    break;
                }
                x = ext.mul(x, g);
            }
            found.ok_or_else(|| Error::Inconsistent("no root of the defining polynomial".into()))?
        };
        Ok(self
            .elements()
            .map(|a| {
                self.coords(a)
                    .iter()
                    .rev()
                    .fold(FqElem::ZERO, |acc, &c| ext.add(ext.mul(acc, root), ext.from_int(c as i64)))
            })
            .collect())
    }

    /// Renders an element on the generator `w`.
    pub fn format_elem(&self, a: FqElem) -> String {
        if self.inner.k == 1 {
            return a.0.to_string();
        }
        let coords = self.coords(a);
        let mut terms = Vec::new();
        for (i, &c) in coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub(crate) fn same_as(&self, other: &FqField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.k == other.inner.k)
    }
}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.inner.q)
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for FqField {}

fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = prime_factors(q);
    if p.len() != 1 {
        return None;
    }
    let p = p[0];
    let mut k = 0;
    let mut n = q;
    while n > 1 {
        n /= p;
        k += 1;
    }
    Some((p as u32, k))
}

fn decode(inner: &Inner, a: FqElem) -> Vec<u32> {
    let mut x = a.0;
    (0..inner.k)
        .map(|_| {
            let d = x % inner.p;
            x /= inner.p;
            d
        })
        .collect()
}

fn encode(inner: &Inner, coords: &[u32]) -> FqElem {
    FqElem(
        coords
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * inner.p + c % inner.p),
    )
}

fn slow_mul(inner: &Inner, a: FqElem, b: FqElem) -> FqElem {
    let p = inner.p as u64;
    if inner.k == 1 {
        return FqElem((a.0 as u64 * b.0 as u64 % p) as u32);
    }
    let k = inner.k as usize;
    let x = decode(inner, a);
    let y = decode(inner, b);
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
        }
    }
    for i in (k..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..k {
            let m = inner.modulus[j] as u64;
            prod[i - k + j] = (prod[i - k + j] + (p - c) * m) % p;
        }
    }
    let digits: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
    encode(inner, &digits)
}

fn slow_pow(inner: &Inner, a: FqElem, mut e: u64) -> FqElem {
    let mut base = a;
    let mut acc = FqElem::ONE;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(inner, acc, base);
        }
        base = slow_mul(inner, base, base);
        e >>= 1;
    }
    acc
}

fn find_primitive(inner: &Inner) -> FqElem {
    let n = inner.q - 1;
    if n == 1 {
        return FqElem::ONE;
    }
    let factors = prime_factors(n);
    (2..inner.q as u32)
        .map(FqElem)
        .find(|&g| factors.iter().all(|&r| slow_pow(inner, g, n / r) != FqElem::ONE))
        .expect("multiplicative group of a finite field is cyclic")
}

fn digit_add(p: u32, a: FqElem, b: FqElem) -> FqElem {
    let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
    while x > 0 || y > 0 {
        let d = (x % p + y % p) % p;
        out += d * place;
        x /= p;
        y /= p;
        place = place.wrapping_mul(p);
    }
    FqElem(out)
}

/// `g^la + g^lb = g^la (1 + g^(lb - la))`.
fn zech_add(t: &Tables, n: u64, a: FqElem, b: FqElem) -> FqElem {
    let la = t.log[a.0 as usize] as u64;
    let lb = t.log[b.0 as usize] as u64;
    let z = t.zech[((lb + n - la) % n) as usize];
    if z == NO_LOG {
        FqElem::ZERO
    } else {
        FqElem(t.exp[((la + z as u64) % n) as usize])
    }
}

fn build_tables(inner: &Inner) -> Tables {
    let n = (inner.q - 1) as usize;
    let mut exp = vec![0u32; n];
    let mut log = vec![0u32; inner.q as usize];
    let mut x = FqElem::ONE;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = x.0;
        log[x.0 as usize] = i as u32;
        x = slow_mul(inner, x, inner.primitive);
    }
    let zech = exp
        .iter()
        .map(|&e| match digit_add(inner.p, FqElem::ONE, FqElem(e)) {
            FqElem::ZERO => NO_LOG,
            s => log[s.0 as usize],
        })
        .collect();
    Tables { exp, log, zech }
}
