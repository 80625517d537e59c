use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use super::Stratification;
use crate::error::Result;
use crate::field::Field;
use crate::series::Poly;

/// A source of places graded by degree, each with an Euler factor.
pub trait PlaceSource<F: Field>: Sync {
    type Place: fmt::Debug + Clone + Send + Sync;

    fn places_of_degree(&self, e: usize) -> Result<Vec<Self::Place>>;

    fn local_factor(&self, v: &Self::Place) -> Result<Poly<F>>;
}

type Graded<P, F> = Arc<Vec<(P, Poly<F>)>>;

/// Turns a [`PlaceSource`] into a stratification: a place lands in `V_i`
/// for the lowest `i` where its Euler factor has a nonzero coefficient,
/// and in no stratum when the factor is 1.
pub struct PlaceStratification<F: Field, S: PlaceSource<F>> {
    source: S,
    cache: Mutex<HashMap<usize, Graded<S::Place, F>>>,
}

impl<F: Field, S: PlaceSource<F>> PlaceStratification<F, S> {
    pub fn new(source: S) -> Self {
        PlaceStratification {
            source,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn source(&self) -> &S {
        &self.source
    }

    /// All places of degree `e` with their Euler factors, computed once.
    pub fn factors_of_degree(&self, e: usize) -> Result<Graded<S::Place, F>> {
        if let Some(hit) = self.cache.lock().unwrap().get(&e) {
            return Ok(hit.clone());
        }
        let places = self.source.places_of_degree(e)?;
        let factors = places
            .into_par_iter()
            .map(|v| {
                let l = self.source.local_factor(&v)?;
                Ok((v, l))
            })
            .collect::<Result<Vec<_>>>()?;
        let factors = Arc::new(factors);
        self.cache.lock().unwrap().insert(e, factors.clone());
        Ok(factors)
    }
}

fn first_nonconstant(l: &Poly<impl Field>) -> Option<usize> {
    (1..l.coeffs().len()).find(|&j| !l.coeffs()[j].is_zero())
}

impl<F: Field, S: PlaceSource<F>> Stratification<F> for PlaceStratification<F, S> {
    type Index = (S::Place, Poly<F>);

    fn stratum(&self, i: usize) -> Result<Vec<Self::Index>> {
        let mut out = Vec::new();
        if i == 0 {
            return Ok(out);
        }
        for e in (1..=i).filter(|e| i.is_multiple_of(*e)) {
            for (v, l) in self.factors_of_degree(e)?.iter() {
                if first_nonconstant(l) == Some(i) {
                    out.push((v.clone(), l.clone()));
                }
            }
        }
        Ok(out)
    }

    fn euler_factor(&self, v: &Self::Index) -> Result<Poly<F>> {
        Ok(v.1.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational as Q;

    struct Toy;

    impl PlaceSource<Q> for Toy {
        type Place = (usize, usize);

        fn places_of_degree(&self, e: usize) -> Result<Vec<(usize, usize)>> {
            Ok((0..e + 1).map(|k| (e, k)).collect())
        }

        fn local_factor(&self, v: &(usize, usize)) -> Result<Poly<Q>> {
            let (e, k) = *v;
            let mut c = vec![0; 2 * e + 1];
            c[0] = 1;
            match k {
                0 => {}
                1 => c[2 * e] = 5,
                _ => c[e] = -(k as i64),
            }
            Ok(Poly::from_ints(&c))
        }
    }

    #[test]
    fn strata_follow_the_first_nonzero_coefficient() {
        let s = PlaceStratification::new(Toy);
        let deg = |i| {
            let mut v: Vec<_> = s.stratum(i).unwrap().into_iter().map(|x| x.0).collect();
            v.sort();
            v
        };
        assert!(deg(0).is_empty());
        assert!(deg(1).is_empty());
        assert_eq!(deg(2), vec![(1, 1), (2, 2)]);
        assert_eq!(deg(4), vec![(2, 1), (4, 2), (4, 3), (4, 4)]);
    }
}
