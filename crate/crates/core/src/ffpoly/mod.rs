//! Finite fields, polynomials over them, and the places of `F_q(t)`.

mod dlog;
mod field;
mod parse;
mod place;
mod poly;
mod ratfunc;

pub use dlog::{unit_discrete_log, DiscreteLog};
pub use field::{FqElem, FqField};
pub use parse::{parse_elem, parse_poly, parse_ratfunc};
pub use place::Place;
pub use poly::FqPoly;
pub use ratfunc::RatFunc;

/// All monic irreducible polynomials of degree exactly `d`, in lexicographic
/// order of their coefficients read from the top down.
pub fn monic_irreducibles(field: &FqField, d: usize) -> Vec<FqPoly> {
    assert!(d >= 1, "degree must be positive");
    let q = field.size();
    let count = q
        .checked_pow(d as u32)
        .expect("enumeration size overflows u64");
    let mut out = Vec::new();
    let mut coeffs = vec![FqElem::ZERO; d + 1];
    coeffs[d] = FqElem::ONE;
    for n in 0..count {
        let mut x = n;
        for c in coeffs.iter_mut().take(d) {
            *c = FqElem((x % q) as u32);
            x /= q;
        }
        let p = FqPoly::new(field, coeffs.clone());
        if p.is_irreducible() {
            out.push(p);
        }
    }
    out
}

/// The lexicographically first monic irreducible of degree `d`.
pub fn first_monic_irreducible(field: &FqField, d: usize) -> FqPoly {
    let q = field.size();
    let mut coeffs = vec![FqElem::ZERO; d + 1];
    coeffs[d] = FqElem::ONE;
    for n in 0.. {
        let mut x: u64 = n;
        for c in coeffs.iter_mut().take(d) {
            *c = FqElem((x % q) as u32);
            x /= q;
        }
        let p = FqPoly::new(field, coeffs.clone());
        if p.is_irreducible() {
            return p;
        }
    }
    unreachable!("irreducibles exist in every degree")
}

/// Places of `F_q(t)` of degree at most `r`: infinity first (if requested),
/// then finite places by degree and lexicographic order.
pub fn places_up_to(field: &FqField, r: usize, include_infinity: bool) -> Vec<Place> {
    let mut out = Vec::new();
    if include_infinity && r >= 1 {
        out.push(Place::Infinity);
    }
    for d in 1..=r {
        out.extend(monic_irreducibles(field, d).into_iter().map(Place::Finite));
    }
    out
}

/// The Moebius function.
pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of monic irreducibles of degree `d` over `F_q`, by Gauss's formula.
pub fn count_monic_irreducibles(q: u64, d: u64) -> u64 {
    let total: i128 = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| mobius(d / e) as i128 * (q as i128).pow(e as u32))
        .sum();
    (total / d as i128) as u64
}
