//! Primitive Dirichlet characters of `F_q(t)` with square-free modulus.

use num_integer::Integer;

use crate::cyclo::CycloElem;
use crate::error::{Error, Result};
use crate::ffpoly::{monic_irreducibles, parse_poly, DiscreteLog, FqField, FqPoly, Place};
use crate::field::FieldEndo;
use crate::series::Poly;
use crate::strat::{FuncEqData, PlaceSource, PlaceStratification};

/// The character of `(F_q[t]/P)^x` sending `base` to `zeta_m^e`.
#[derive(Clone, Debug)]
pub struct CharComponent {
    prime: FqPoly,
    base: FqPoly,
    m: u32,
    e: u32,
    dlog: DiscreteLog,
}

impl CharComponent {
    pub fn new(prime: FqPoly, base: FqPoly, m: u32, e: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("root of unity order must be positive".into()));
        }
        if !prime.is_monic() || !prime.is_irreducible() {
            return Err(Error::InvalidInput(format!("{prime} is not monic irreducible")));
        }
        let dlog = DiscreteLog::new(&prime, &base)?;
        let e = e.rem_euclid(m as i64) as u32;
        let (m, e) = reduce_root(m, e);
        if m == 1 {
            return Err(Error::InvalidInput(format!("component at {prime} is trivial")));
        }
        if dlog.group_order() % m as u64 != 0 {
            return Err(Error::InvalidInput(format!(
                "zeta{m}^{e} has order {m}, which does not divide |(F_q[t]/({prime}))^x| = {}",
                dlog.group_order()
            )));
        }
        Ok(CharComponent {
            prime,
            base,
            m,
            e,
            dlog,
        })
    }

    /// Parses `"<P>:<base>:zeta<m>^<e>"`, e.g. `"t^2 - t - 1:t:zeta8^1"`.
    pub fn parse(field: &FqField, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [p, b, z] = parts.as_slice() else {
            return Err(Error::parse(s, "expected <prime>:<base>:zeta<m>^<e>"));
        };
        let (m, e) = parse_root(z.trim()).ok_or_else(|| Error::parse(s, "bad root of unity"))?;
        Self::new(parse_poly(field, p)?, parse_poly(field, b)?, m, e)
    }

    pub fn prime(&self) -> &FqPoly {
        &self.prime
    }

    pub fn base(&self) -> &FqPoly {
        &self.base
    }

    /// `(m, e)` with the image of the base equal to `zeta_m^e`, in lowest
    /// terms.
    pub fn image(&self) -> (u32, u32) {
        (self.m, self.e)
    }

    /// `k` with the value at `a` equal to `zeta_m^k`, or `None` when `P | a`.
    pub fn exponent(&self, a: &FqPoly) -> Result<Option<u64>> {
        if a.rem(&self.prime)?.is_zero() {
            return Ok(None);
        }
        let l = self.dlog.log(a)?;
        Ok(Some((l % self.m as u64) * self.e as u64 % self.m as u64))
    }

    pub fn eval(&self, a: &FqPoly) -> Result<CycloElem> {
        Ok(match self.exponent(a)? {
            None => CycloElem::integer(0),
            Some(k) => CycloElem::root_of_unity(self.m, k as i64),
        })
    }
}

fn reduce_root(m: u32, e: u32) -> (u32, u32) {
    let g = m.gcd(&e);
    if e == 0 {
        (1, 0)
    } else {
        (m / g, e / g)
    }
}

fn parse_root(s: &str) -> Option<(u32, i64)> {
    let rest = s.strip_prefix("zeta")?;
    match rest.split_once('^') {
        Some((m, e)) => Some((m.trim().parse().ok()?, e.trim().parse().ok()?)),
        None => Some((rest.trim().parse().ok()?, 1)),
    }
}

/// A product of components at distinct primes.
#[derive(Clone, Debug)]
pub struct DirichletChar {
    field: FqField,
    components: Vec<CharComponent>,
    modulus: FqPoly,
    conductor: u32,
}

impl DirichletChar {
    pub fn new(field: &FqField, components: Vec<CharComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::TrivialCharacter);
        }
        let mut modulus = FqPoly::one(field);
        for (i, c) in components.iter().enumerate() {
            if !c.prime.field().same_as(field) {
                return Err(Error::InvalidInput("components over different fields".into()));
            }
            if components[..i].iter().any(|d| d.prime == c.prime) {
                return Err(Error::InvalidInput(format!("repeated prime {}", c.prime)));
            }
            modulus = modulus.mul(&c.prime);
        }
        let conductor = components.iter().fold(1u32, |acc, c| acc.lcm(&c.m));
        Ok(DirichletChar {
            field: field.clone(),
            components,
            modulus,
            conductor,
        })
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn components(&self) -> &[CharComponent] {
        &self.components
    }

    pub fn modulus(&self) -> &FqPoly {
        &self.modulus
    }

    /// `M` with every value in `Q(zeta_M)`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `k` with `chi(a) = zeta_M^k`, or `None` when `a` is not a unit.
    fn exponent(&self, a: &FqPoly) -> Result<Option<u64>> {
        let big_m = self.conductor as u64;
        let mut k = 0;
        for c in &self.components {
            match c.exponent(a)? {
                None => return Ok(None),
                Some(x) => k = (k + x * (big_m / c.m as u64)) % big_m,
            }
        }
        Ok(Some(k))
    }

    pub fn eval(&self, a: &FqPoly) -> Result<CycloElem> {
        Ok(match self.exponent(a)? {
            None => CycloElem::integer(0),
            Some(k) => CycloElem::root_of_unity(self.conductor, k as i64),
        })
    }

    /// Whether `chi` is trivial on `F_q^x`, tested on a generator.
    pub fn trivial_on_constants(&self) -> Result<bool> {
        let g = FqPoly::constant(&self.field, self.field.primitive_element());
        Ok(self.exponent(&g)? == Some(0))
    }

    /// `chi(v)` at a place; 0 at ramified places.
    pub fn eval_place(&self, v: &Place) -> Result<CycloElem> {
        match v {
            Place::Finite(p) => self.eval(p),
            Place::Infinity => Ok(CycloElem::integer(if self.trivial_on_constants()? { 1 } else { 0 })),
        }
    }

    /// `deg f(chi) = deg P + alpha_inf`.
    pub fn conductor_degree(&self) -> Result<u64> {
        let inf = if self.trivial_on_constants()? { 0 } else { 1 };
        Ok(self.modulus.degree().unwrap() as u64 + inf)
    }
}

/// `chi(a)`.
pub fn char_eval(chi: &DirichletChar, a: &FqPoly) -> Result<CycloElem> {
    chi.eval(a)
}

/// Whether the restriction of `chi` to the constants is trivial.
pub fn restrict_to_constants(chi: &DirichletChar) -> Result<bool> {
    chi.trivial_on_constants()
}

pub struct DirichletSource {
    chi: DirichletChar,
}

impl DirichletSource {
    pub fn character(&self) -> &DirichletChar {
        &self.chi
    }
}

impl PlaceSource<CycloElem> for DirichletSource {
    type Place = Place;

    fn places_of_degree(&self, e: usize) -> Result<Vec<Place>> {
        let mut out = Vec::new();
        if e == 1 {
            out.push(Place::Infinity);
        }
        out.extend(monic_irreducibles(&self.chi.field, e).into_iter().map(Place::Finite));
        Ok(out)
    }

    fn local_factor(&self, v: &Place) -> Result<Poly<CycloElem>> {
        let e = v.degree();
        let mut c = vec![CycloElem::integer(0); e + 1];
        c[0] = CycloElem::integer(1);
        c[e] = -self.chi.eval_place(v)?;
        Ok(Poly::new(c))
    }
}

pub type DirichletStratification = PlaceStratification<CycloElem, DirichletSource>;

/// `D = 1`, `n = deg f(chi) - 2`, `w = 0`, `c = cc`; `eps` is left for the
/// epsilon algorithm.
pub fn dirichlet_stratification(
    chi: DirichletChar,
) -> Result<(DirichletStratification, FuncEqData<CycloElem>)> {
    let deg_f = chi.conductor_degree()?;
    if deg_f < 2 {
        return Err(Error::InvalidInput(format!(
            "conductor degree {deg_f} is too small for a primitive character"
        )));
    }
    let feq = FuncEqData {
        d_poly: Poly::one(),
        n: deg_f as usize - 2,
        q: chi.field.size(),
        w: 0,
        c: FieldEndo::ComplexConjugation,
        epsilon: None,
        genus: 0,
        dim: 1,
        conductor_degree: deg_f,
    };
    Ok((PlaceStratification::new(DirichletSource { chi }), feq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strat::{alg_epsilon, alg_funceq, alg_rationality, full_product, Stratification};
    use num_traits::Zero;

    fn z(m: u32, e: i64) -> CycloElem {
        CycloElem::root_of_unity(m, e)
    }

    fn example() -> DirichletChar {
        let k = FqField::new(3, 1).unwrap();
        let comps = ["t^2 - t - 1:t:zeta8^1", "t^2 + 1:t + 1:zeta4^1", "t^2 + t - 1:t:zeta2^1"]
            .iter()
            .map(|s| CharComponent::parse(&k, s).unwrap())
            .collect();
        DirichletChar::new(&k, comps).unwrap()
    }

    fn p(s: &str) -> FqPoly {
        parse_poly(&FqField::new(3, 1).unwrap(), s).unwrap()
    }

    #[test]
    fn component_values_from_the_table() {
        let chi = example();
        let c = chi.components();
        let i = z(4, 1);
        assert_eq!(c[1].eval(&p("t - 1")).unwrap(), -i.clone());
        assert_eq!(c[0].eval(&p("t - 1")).unwrap(), -z(8, 3));
        assert_eq!(c[0].eval(&p("t^3 + t^2 - t + 1")).unwrap(), -z(8, 1));
        assert_eq!(c[2].eval(&p("t^3 - t^2 - t - 1")).unwrap(), z(2, 1));
        assert!(c[1].eval(&p("t^2 + 1")).unwrap().is_zero());
        assert_eq!(chi.eval(&p("t")).unwrap(), z(8, 1));
        assert_eq!(chi.eval(&p("t + 1")).unwrap(), z(1, 0));
        assert_eq!(chi.eval(&p("t^3 + t^2 + t - 1")).unwrap(), -i);
        assert!(chi.eval(&p("t^3 + t")).unwrap().is_zero());
        assert_eq!(chi.conductor(), 8);
    }

    #[test]
    fn ramified_at_infinity() {
        let chi = example();
        assert!(!restrict_to_constants(&chi).unwrap());
        // t^4 = 2 mod t^2 - t - 1, so chi(2) picks up zeta8^4 = -1
        assert_eq!(chi.eval(&p("2")).unwrap(), z(2, 1));
        assert!(chi.eval_place(&Place::Infinity).unwrap().is_zero());
        assert_eq!(chi.conductor_degree().unwrap(), 7);
    }

    #[test]
    fn quadratic_character_trivial_on_constants() {
        // over F_3, (F_3[t]/(t^2+1))^x is cyclic of order 8 and 2 = g^4 for
        // any generator g; a quadratic image makes the constants trivial
        let k = FqField::new(3, 1).unwrap();
        let c = CharComponent::parse(&k, "t^2 + 1:t + 1:zeta2^1").unwrap();
        let chi = DirichletChar::new(&k, vec![c]).unwrap();
        assert!(restrict_to_constants(&chi).unwrap());
        for a in k.elements().filter(|a| !a.is_zero()) {
            assert_eq!(chi.eval(&FqPoly::constant(&k, a)).unwrap(), z(1, 0));
        }
        assert_eq!(chi.eval_place(&Place::Infinity).unwrap(), z(1, 0));
    }

    #[test]
    fn multiplicativity() {
        let chi = example();
        let k = chi.field().clone();
        let polys: Vec<FqPoly> = (1..40u64)
            .map(|n| {
                let c: Vec<i64> = (0..4).map(|j| ((n / 3u64.pow(j)) % 3) as i64).collect();
                FqPoly::from_ints(&k, &c)
            })
            .filter(|f| !f.is_zero() && f.gcd(chi.modulus()).is_one())
            .collect();
        for a in &polys {
            for b in &polys {
                let lhs = chi.eval(&a.mul(b)).unwrap();
                assert_eq!(lhs, chi.eval(a).unwrap() * &chi.eval(b).unwrap());
                assert!((lhs.complex_embed().norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_bad_components() {
        let k = FqField::new(3, 1).unwrap();
        // t^2 is not a generator of (F_3[t]/(t^2+1))^x
        assert!(matches!(CharComponent::parse(&k, "t^2 + 1:t:zeta4^1"), Err(Error::NotAGenerator(_))));
        assert!(CharComponent::parse(&k, "t^2 + 1:t + 1:zeta3^1").is_err());
        assert!(CharComponent::parse(&k, "t^2 + 1:t + 1:zeta4^4").is_err());
        assert!(CharComponent::parse(&k, "t^2 + 1:t + 1").is_err());
        assert!(CharComponent::parse(&k, "t^2 + t + 1:t:zeta2^1").is_err());
        assert_eq!(DirichletChar::new(&k, vec![]).unwrap_err(), Error::TrivialCharacter);
    }

    #[test]
    fn example_numerator_and_epsilon() {
        let (l, feq) = dirichlet_stratification(example()).unwrap();
        assert_eq!(feq.n, 5);
        let i = z(4, 1);
        let z8 = z(8, 1);
        let z83 = z(8, 3);
        let p3 = alg_rationality(&l, &feq.d_poly, 1, 3, 3).unwrap();
        let c = |x: i64| CycloElem::integer(x);
        let expect_p = vec![c(1), c(1), i.clone() + c(1), c(2) * &z83 - i.clone() - c(1)];
        assert_eq!(p3.coeffs(), expect_p.as_slice());
        let eps = alg_epsilon(&l, &feq).unwrap();
        let expect_eps = c(9) * &z83 - c(9) * &i - c(9) * &z8;
        assert_eq!(eps, expect_eps);
        let feq = feq.with_epsilon(eps.clone());
        let n = alg_funceq(&l, &feq).unwrap();
        let mut expect = expect_p.clone();
        // N_4 = eps * M_1 = eps / 3
        expect.push(c(3) * &z83 - c(3) * &i - c(3) * &z8);
        expect.push(eps);
        assert_eq!(n.coeffs(), expect.as_slice());
        assert_eq!(full_product(&l, &feq).unwrap(), n);
        // 15 places of degree <= 3 appear in the table, 11 unramified
        let unramified = (1..=3).map(|i| l.stratum(i).unwrap().len()).sum::<usize>();
        assert_eq!(unramified, 11);
    }
}
