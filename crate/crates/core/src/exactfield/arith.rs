//! Integer arithmetic used by the field layer: primality, factorization,
//! Legendre and Hilbert symbols.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const SMALL_PRIMES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with the first twenty prime bases. Deterministic below
/// 3.3e24 and a very strong probable-prime test above.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let bp = BigInt::from(p);
        if n == &bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &SMALL_PRIMES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic primality for machine-sized candidates such as field moduli.
pub fn is_prime_u64(n: u64) -> bool {
    is_probable_prime(&BigInt::from(n))
}

fn pollard_brent(n: &BigInt, c: u64, max_iter: usize) -> Option<BigInt> {
    let c = BigInt::from(c);
    let f = |x: &BigInt| (x * x + &c) % n;
    let mut y = BigInt::from(2);
    let mut r = 1usize;
    let mut q = BigInt::one();
    let mut g = BigInt::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let m = 64usize;
    let mut iters = 0usize;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += m;
            iters += m;
        }
        r *= 2;
        if iters > max_iter {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn split_cofactor(n: BigInt, out: &mut Vec<BigInt>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_probable_prime(&n) {
        out.push(n);
        return Ok(());
    }
    let r = n.sqrt();
    if &r * &r == n {
        split_cofactor(r.clone(), out)?;
        return split_cofactor(r, out);
    }
    for c in 1..40u64 {
        if let Some(d) = pollard_brent(&n, c, 2_000_000) {
            let e = &n / &d;
            split_cofactor(d, out)?;
            return split_cofactor(e, out);
        }
    }
    Err(Error::FactorizationBoundExceeded { value: n.to_string() })
}

/// Factors `|n|` into primes with multiplicity, sorted ascending.
///
/// Trial division runs up to `bound`. A leftover cofactor below `bound^2`
/// is prime; a larger one is split with Pollard-Brent, and
/// `FactorizationBoundExceeded` is returned if that fails.
pub fn factor(n: &BigInt, bound: u64) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut m = n.abs();
    let mut primes: Vec<BigInt> = Vec::new();
    let next = |d: u64| if d == 2 { 3 } else { d + 2 };
    let mut d: u64 = 2;
    while d <= bound {
        if let Some(mut small) = m.to_u64() {
            while d <= bound && d.saturating_mul(d) <= small {
                while small % d == 0 {
                    primes.push(BigInt::from(d));
                    small /= d;
                }
                d = next(d);
            }
            m = BigInt::from(small);
            break;
        }
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        loop {
            let (q, r) = m.div_rem(&bd);
            if !r.is_zero() {
                break;
            }
            primes.push(bd.clone());
            m = q;
        }
        d = next(d);
    }
    if !m.is_one() {
        let b = BigInt::from(bound);
        if m < &b * &b {
            primes.push(m);
        } else {
            split_cofactor(m, &mut primes)?;
        }
    }
    primes.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Ok(out)
}

/// Signed squarefree part of a nonzero integer.
pub fn squarefree_part(n: &BigInt, bound: u64) -> Result<BigInt> {
    let mut r = BigInt::one();
    for (p, e) in factor(n, bound)? {
        if e % 2 == 1 {
            r *= p;
        }
    }
    if n.sign() == Sign::Minus {
        r = -r;
    }
    Ok(r)
}

/// p-adic valuation of a nonzero integer and its unit part.
pub fn split_valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            break;
        }
        m = q;
        v += 1;
    }
    (v, m)
}

/// Legendre symbol (a/p) for an odd prime p, returned as -1, 0 or 1.
pub fn legendre(a: &BigInt, p: &BigInt) -> i8 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Hilbert symbol (a, b)_p for nonzero integers at a finite prime p.
pub fn hilbert_at_prime(a: &BigInt, b: &BigInt, p: &BigInt) -> i8 {
    let (alpha, u) = split_valuation(a, p);
    let (beta, v) = split_valuation(b, p);
    if p == &BigInt::from(2) {
        let m8 = |x: &BigInt| x.mod_floor(&BigInt::from(8)).to_u32().unwrap();
        let eps = |x: u32| ((x + 8 - 1) / 2) % 2;
        let omega = |x: u32| ((x * x - 1) / 8) % 2;
        let (u8_, v8) = (m8(&u), m8(&v));
        let e = eps(u8_) * eps(v8) + alpha * omega(v8) + beta * omega(u8_);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let half = ((p - 1u32) / 2u32).mod_floor(&BigInt::from(2));
        let mut s: i8 = if (alpha * beta) % 2 == 1 && half.is_one() { -1 } else { 1 };
        if beta % 2 == 1 {
            s *= legendre(&u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre(&v, p);
        }
        s
    }
}

/// Least nonnegative square root of `a` modulo an odd prime `p`, if any.
pub fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    let pw = |b: u64, e: u64| -> u64 {
        let (mut r, mut b, mut e) = (1u128, b as u128 % p as u128, e);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u128;
            }
            b = b * b % p as u128;
            e >>= 1;
        }
        r as u64
    };
    if pw(a, (p - 1) / 2) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pw(z, (p - 1) / 2) != p - 1 {
        z += 1;
    }
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut m = s;
    let mut c = pw(z, q);
    let mut t = pw(a, q);
    let mut r = pw(a, (q + 1) / 2);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul(tt, tt);
            i += 1;
        }
        let b = pw(c, 1u64 << (m - i - 1));
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Some(r.min(p - r))
}
