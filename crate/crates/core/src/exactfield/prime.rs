use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::arith::{is_prime_u64, sqrt_mod_prime};
use super::{Field, Rationals, Ring, SquareClass};
use crate::error::{Error, Result};

/// The prime field F_p for an odd prime p below 2^32.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    nonresidue: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::UnsupportedCharacteristic(2));
        }
        if p >= 1 << 32 || !is_prime_u64(p) {
            return Err(Error::Parse(format!("{p} is not an odd prime below 2^32")));
        }
        let mut n = 2;
        while pow_mod(n, (p - 1) / 2, p) == 1 {
            n += 1;
        }
        Ok(PrimeField { p, nonresidue: n })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// The least quadratic nonresidue.
    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Whether a nonzero element is a square.
    pub fn legendre(&self, a: u64) -> i8 {
        if a == 0 {
            0
        } else if self.pow(a, (self.p - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }
}

fn pow_mod(a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Ring for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

impl Field for PrimeField {
    fn characteristic(&self) -> u64 {
        self.p
    }

    fn name(&self) -> String {
        format!("F:{}", self.p)
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }

    fn square_class(&self, a: &u64) -> Result<SquareClass> {
        match self.legendre(*a) {
            0 => Err(Error::ZeroInput),
            1 => Ok(SquareClass::one()),
            _ => Ok(SquareClass(BigInt::from(self.nonresidue))),
        }
    }

    fn class_element(&self, c: &SquareClass) -> u64 {
        c.0.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    fn sqrt_if_square(&self, a: &u64) -> Option<u64> {
        sqrt_mod_prime(*a, self.p)
    }

    fn fourth_power_class(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::ZeroInput);
        }
        let g = 4u64.gcd(&(self.p - 1));
        let e = (self.p - 1) / g;
        let ai = self.inv(a).unwrap();
        (1..self.p)
            .find(|r| self.pow(r * ai % self.p, e) == 1)
            .ok_or_else(|| Error::Internal("no fourth-power representative".into()))
    }

    fn is_quadratic_norm(&self, c: &u64, d: &u64) -> Result<bool> {
        if *c == 0 || *d == 0 {
            return Err(Error::ZeroInput);
        }
        // Every nonzero element of a finite field is a norm from its
        // quadratic extension.
        Ok(true)
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64> {
        let q = Rationals::default().parse(s)?;
        rational_to_prime(self, &q)
    }

    fn to_rational(&self, _a: &u64) -> Option<BigRational> {
        None
    }

    fn rationals(&self) -> Option<&Rationals> {
        None
    }
}

/// Reduces a rational with denominator prime to p.
pub fn rational_to_prime(f: &PrimeField, q: &BigRational) -> Result<u64> {
    let p = BigInt::from(f.p);
    let n = q.numer().mod_floor(&p).to_u64().unwrap();
    let d = q.denom().mod_floor(&p).to_u64().unwrap();
    let di = f
        .inv(&d)
        .ok_or_else(|| Error::Parse(format!("denominator of {q} vanishes mod {}", f.p)))?;
    Ok(f.mul(&n, &di))
}
