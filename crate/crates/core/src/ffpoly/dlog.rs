use std::collections::HashMap;

use super::field::prime_factors;
use super::poly::FqPoly;
use crate::error::{Error, Result};

/// Baby-step giant-step discrete logarithms in `(F_q[t]/P)^x` for an
/// irreducible `P`, with the baby-step table built once.
#[derive(Clone, Debug)]
pub struct DiscreteLog {
    modulus: FqPoly,
    order: u64,
    step: u64,
    baby: HashMap<FqPoly, u64>,
    giant: FqPoly,
}

impl DiscreteLog {
    /// Prepares logarithms to `base`, which must generate the unit group.
    pub fn new(modulus: &FqPoly, base: &FqPoly) -> Result<Self> {
        let d = modulus
            .degree()
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::InvalidInput("modulus must be non-constant".into()))?;
        let q = modulus.field().size();
        let order = q
            .checked_pow(d as u32)
            .ok_or_else(|| Error::Unsupported(format!("unit group of F_{q}[t]/({modulus}) is too large")))?
            - 1;
        let base = base.rem(modulus)?;
        if !is_generator(&base, modulus, order)? {
            return Err(Error::NotAGenerator(format!("{base} mod ({modulus})")));
        }
        let step = (order as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(step as usize);
        let mut x = FqPoly::one(modulus.field());
        for j in 0..step {
            baby.entry(x.clone()).or_insert(j);
            x = x.mul_mod(&base, modulus)?;
        }
        // base^{-step}
        let giant = base.pow_mod(order - step % order, modulus)?;
        Ok(DiscreteLog {
            modulus: modulus.clone(),
            order,
            step,
            baby,
            giant,
        })
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    /// The least `e >= 0` with `base^e = target`.
    pub fn log(&self, target: &FqPoly) -> Result<u64> {
        let mut gamma = target.rem(&self.modulus)?;
        if gamma.is_zero() {
            return Err(Error::NoDiscreteLog(format!("{target} is not a unit mod ({})", self.modulus)));
        }
        for i in 0..=self.step {
            if let Some(&j) = self.baby.get(&gamma) {
                return Ok((i * self.step + j) % self.order);
            }
            gamma = gamma.mul_mod(&self.giant, &self.modulus)?;
        }
        Err(Error::NoDiscreteLog(format!("{target} mod ({})", self.modulus)))
    }
}

fn is_generator(base: &FqPoly, modulus: &FqPoly, order: u64) -> Result<bool> {
    if base.is_zero() {
        return Ok(false);
    }
    for r in prime_factors(order) {
        if base.pow_mod(order / r, modulus)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One-shot logarithm of `target` to `base` modulo an irreducible `modulus`.
pub fn unit_discrete_log(modulus: &FqPoly, base: &FqPoly, target: &FqPoly) -> Result<u64> {
    DiscreteLog::new(modulus, base)?.log(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::FqField;

    #[test]
    fn fixture_logs() {
        let k = FqField::new(3, 1).unwrap();
        let p = FqPoly::from_ints(&k, &[-1, -1, 1]); // t^2 - t - 1
        let t = FqPoly::t(&k);
        assert_eq!(unit_discrete_log(&p, &t, &FqPoly::from_ints(&k, &[2])).unwrap(), 4);
        assert_eq!(unit_discrete_log(&p, &t, &t).unwrap(), 1);
        let p2 = FqPoly::from_ints(&k, &[1, 0, 1]); // t^2 + 1
        let g = FqPoly::from_ints(&k, &[1, 1]);
        let cube = g.pow_mod(3, &p2).unwrap();
        assert_eq!(unit_discrete_log(&p2, &g, &cube).unwrap(), 3);
    }

    #[test]
    fn non_generator_is_rejected() {
        let k = FqField::new(3, 1).unwrap();
        let p2 = FqPoly::from_ints(&k, &[1, 0, 1]);
        // t has order 4 in F_9^x since t^2 = -1
        let err = DiscreteLog::new(&p2, &FqPoly::t(&k)).unwrap_err();
        assert!(matches!(err, Error::NotAGenerator(_)));
        let dl = DiscreteLog::new(&p2, &FqPoly::from_ints(&k, &[1, 1])).unwrap();
        assert!(matches!(dl.log(&p2), Err(Error::NoDiscreteLog(_))));
    }
}
