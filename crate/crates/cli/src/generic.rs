//! Stratifications read from a JSON description.
//!
//! ```json
//! {"q": 3, "w": 0, "c": "id", "genus": 0, "dim": 1, "conductor_degree": 4,
//!  "D": ["1"], "n": 2, "epsilon": "3",
//!  "places": [{"degree": 1, "euler": ["1", "-1"]}, ...]}
//! ```
//!
//! Coefficients are rationals (`"n/d"` or integers) or cyclotomic elements.
//! The place list must cover every degree the algorithms will visit.

use lffc_core::strat::{PlaceSource, PlaceStratification};
use lffc_core::{FieldEndo, FuncEqData, Poly};
use serde::Deserialize;
use serde_json::Value;

use crate::wire::{poly_from_wire, WireField};
use crate::CliError;

#[derive(Deserialize)]
struct RawPlace {
    degree: usize,
    euler: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    q: u64,
    w: i64,
    c: FieldEndo,
    genus: u64,
    dim: u64,
    conductor_degree: u64,
    #[serde(rename = "D")]
    d: Value,
    n: usize,
    #[serde(default)]
    epsilon: Option<Value>,
    places: Vec<RawPlace>,
}

pub struct GenericSource<F> {
    places: Vec<(usize, Poly<F>)>,
}

impl<F> GenericSource<F> {
    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }
}

impl<F: WireField> PlaceSource<F> for GenericSource<F> {
    type Place = usize;

    fn places_of_degree(&self, e: usize) -> lffc_core::Result<Vec<usize>> {
        Ok((0..self.places.len()).filter(|&k| self.places[k].0 == e).collect())
    }

    fn local_factor(&self, v: &usize) -> lffc_core::Result<Poly<F>> {
        Ok(self.places[*v].1.clone())
    }
}

pub type GenericStratification<F> = PlaceStratification<F, GenericSource<F>>;

pub fn parse_generic<F: WireField>(
    v: &Value,
) -> Result<(GenericStratification<F>, FuncEqData<F>), CliError> {
    let raw: RawFile = serde_json::from_value(v.clone())
        .map_err(|e| CliError::Input(format!("stratification file: {e}")))?;
    let mut places = Vec::with_capacity(raw.places.len());
    for (k, p) in raw.places.iter().enumerate() {
        if p.degree == 0 {
            return Err(CliError::Input(format!("place {k} has degree 0")));
        }
        places.push((p.degree, poly_from_wire(&p.euler)?));
    }
    let epsilon = raw.epsilon.as_ref().map(F::from_wire).transpose()?;
    let feq = FuncEqData {
        d_poly: poly_from_wire(&raw.d)?,
        n: raw.n,
        q: raw.q,
        w: raw.w,
        c: raw.c,
        epsilon,
        genus: raw.genus,
        dim: raw.dim,
        conductor_degree: raw.conductor_degree,
    };
    if feq.q < 2 {
        return Err(CliError::Input(format!("q = {} is not a field size", feq.q)));
    }
    if !feq.d_poly.coeff(0).is_one() {
        return Err(CliError::Input("D must have constant term 1".into()));
    }
    Ok((PlaceStratification::new(GenericSource { places }), feq))
}
