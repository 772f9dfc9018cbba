//! Exact fields: the rationals and prime fields of odd characteristic.
//!
//! Elements are plain values; all arithmetic goes through a field handle
//! (`f.add(&a, &b)`), so the same generic code runs over both.

mod arith;
mod poly;
mod prime;
mod rational;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::error::Result;

pub use arith::{
    factor, hilbert_at_prime, is_probable_prime, legendre, split_valuation, sqrt_mod_prime, squarefree_part,
};
pub use poly::TruncPoly;
pub use prime::PrimeField;
pub use rational::{Rationals, DEFAULT_FACTOR_BOUND};

/// Commutative ring operations.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self::Elem>>(&self, items: I) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A field of characteristic 0 or an odd prime.
pub trait Field: Ring {
    /// 0 for the rationals, p for the prime field.
    fn characteristic(&self) -> u64;
    /// "Q" or "F:p".
    fn name(&self) -> String;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Canonical representative of a nonzero element modulo squares.
    fn square_class(&self, a: &Self::Elem) -> Result<SquareClass>;
    /// Field element for a square class representative.
    fn class_element(&self, c: &SquareClass) -> Self::Elem;
    /// A square root if one exists, choosing the least one for prime fields
    /// and the positive one over the rationals.
    fn sqrt_if_square(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Canonical representative of a nonzero element modulo fourth powers.
    fn fourth_power_class(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// Whether the nonzero `c` is a norm from k(sqrt d).
    fn is_quadratic_norm(&self, c: &Self::Elem, d: &Self::Elem) -> Result<bool>;
    /// Uniform integer in `[-bound, bound]`, cast into the field.
    fn random_small<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Self::Elem {
        self.from_i64(rng.gen_range(-bound..=bound))
    }
    fn format(&self, a: &Self::Elem) -> String;
    /// Shorter rendering for human-facing summaries.
    fn display(&self, a: &Self::Elem) -> String {
        self.format(a)
    }
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    /// Rational view of an element, available only over the rationals.
    fn to_rational(&self, a: &Self::Elem) -> Option<BigRational>;
    /// The rational field handle when this field is the rationals.
    fn rationals(&self) -> Option<&Rationals>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn is_square(&self, a: &Self::Elem) -> bool {
        self.sqrt_if_square(a).is_some()
    }

    fn from_ratio(&self, n: i64, d: i64) -> Option<Self::Elem> {
        self.div(&self.from_i64(n), &self.from_i64(d))
    }
}

/// Nonzero element modulo squares, stored as a canonical integer:
/// the signed squarefree integer over the rationals and 1 or the least
/// quadratic nonresidue over a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(pub BigInt);

impl SquareClass {
    pub fn one() -> Self {
        SquareClass(BigInt::from(1))
    }

    pub fn is_trivial(&self) -> bool {
        self.0 == BigInt::from(1)
    }
}

impl Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A place of the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Prime(BigInt),
}

impl Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// The field norm u^2 - d v^2 from k(sqrt d).
pub fn quad_ext_norm<F: Field>(f: &F, u: &F::Elem, v: &F::Elem, d: &F::Elem) -> F::Elem {
    f.sub(&f.square(u), &f.mul(d, &f.square(v)))
}
