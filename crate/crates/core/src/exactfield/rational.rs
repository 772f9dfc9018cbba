use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::arith::{factor, hilbert_at_prime, squarefree_part};
use super::{Field, Place, Ring, SquareClass};
use crate::error::{Error, Result};

/// Trial-division bound used by default when factoring.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// The field of rational numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals {
    pub factor_bound: u64,
}

impl Default for Rationals {
    fn default() -> Self {
        Rationals { factor_bound: DEFAULT_FACTOR_BOUND }
    }
}

fn int_of(a: &BigRational) -> BigInt {
    a.numer() * a.denom()
}

impl Rationals {
    pub fn new() -> Self {
        Self::default()
    }

    /// Hilbert symbol (a, b)_v of two nonzero rationals.
    pub fn hilbert_symbol(&self, a: &BigRational, b: &BigRational, v: &Place) -> Result<i8> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(match v {
            Place::Real => {
                if a.is_negative() && b.is_negative() {
                    -1
                } else {
                    1
                }
            }
            Place::Prime(p) => hilbert_at_prime(&int_of(a), &int_of(b), p),
        })
    }

    /// Primes dividing the squarefree part of any of the given nonzero values.
    pub fn odd_support(&self, values: &[BigRational]) -> Result<BTreeSet<BigInt>> {
        let mut out = BTreeSet::new();
        for v in values {
            for (p, e) in factor(&int_of(v), self.factor_bound)? {
                if e % 2 == 1 {
                    out.insert(p);
                }
            }
        }
        Ok(out)
    }

    /// The real place, 2, and every prime in the support of the values.
    pub fn relevant_places(&self, values: &[BigRational]) -> Result<BTreeSet<Place>> {
        let mut places: BTreeSet<Place> = BTreeSet::new();
        places.insert(Place::Real);
        places.insert(Place::Prime(BigInt::from(2)));
        for p in self.odd_support(values)? {
            places.insert(Place::Prime(p));
        }
        Ok(places)
    }

    pub fn integer(&self, n: BigInt) -> BigRational {
        BigRational::from_integer(n)
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

impl Field for Rationals {
    fn characteristic(&self) -> u64 {
        0
    }

    fn name(&self) -> String {
        "Q".to_string()
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn square_class(&self, a: &BigRational) -> Result<SquareClass> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(SquareClass(squarefree_part(&int_of(a), self.factor_bound)?))
    }

    fn class_element(&self, c: &SquareClass) -> BigRational {
        BigRational::from_integer(c.0.clone())
    }

    fn sqrt_if_square(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let (n, d) = (a.numer(), a.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(BigRational::new(rn, rd))
        } else {
            None
        }
    }

    fn fourth_power_class(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        // n/d = n d^3 / d^4
        let d = a.denom();
        let m = a.numer() * d * d * d;
        let mut r = BigInt::one();
        for (p, e) in factor(&m, self.factor_bound)? {
            for _ in 0..(e % 4) {
                r *= &p;
            }
        }
        if m.is_negative() {
            r = -r;
        }
        Ok(BigRational::from_integer(r))
    }

    fn is_quadratic_norm(&self, c: &BigRational, d: &BigRational) -> Result<bool> {
        if c.is_zero() || d.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.is_square(d) {
            return Ok(true);
        }
        for v in self.relevant_places(&[c.clone(), d.clone()])? {
            if self.hilbert_symbol(c, d, &v)? == -1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn format(&self, a: &BigRational) -> String {
        format!("{}/{}", a.numer(), a.denom())
    }

    fn display(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }

    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }

    fn rationals(&self) -> Option<&Rationals> {
        Some(self)
    }
}
