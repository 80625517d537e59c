use std::cmp::Ordering;
use std::fmt;

use super::poly::FqPoly;

/// A place of the rational function field `F_q(t)`: a monic irreducible
/// polynomial, or the degree-one place at infinity `1/t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Place {
    Infinity,
    Finite(FqPoly),
}

impl Place {
    pub fn degree(&self) -> usize {
        match self {
            Place::Infinity => 1,
            Place::Finite(p) => p.degree().expect("place generators are nonzero"),
        }
    }

    pub fn generator(&self) -> Option<&FqPoly> {
        match self {
            Place::Infinity => None,
            Place::Finite(p) => Some(p),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

/// Infinity first, then by degree and lexicographic coefficients.
impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
            (Place::Infinity, _) => Ordering::Less,
            (_, Place::Infinity) => Ordering::Greater,
            (Place::Finite(a), Place::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "1/t"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
