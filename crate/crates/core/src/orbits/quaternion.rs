//! Quaternion algebra classes, described by their ternary trace-zero norm
//! form and, over the rationals, by their ramification set.

use num_bigint::BigInt;

use crate::error::Result;
use crate::exactfield::{is_probable_prime, Field, Place, Rationals, SquareClass};
use crate::quadforms::{invariants_of_diagonal, is_isotropic, FormInvariants, PfisterSpec, QuadraticForm};

/// A quaternion algebra up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionClass<E> {
    pub split: bool,
    /// Invariants of the pure quaternion norm (ternary, trivial discriminant).
    pub ternary: FormInvariants,
    /// Places where the algebra ramifies (rationals only).
    pub ramified: Option<Vec<Place>>,
    /// `<<a, b>>` with matching ramification, found by bounded search.
    pub pfister: Option<PfisterSpec<E>>,
}

fn ramification_of(q: &Rationals, a: &BigInt, b: &BigInt) -> Result<Vec<Place>> {
    let (ar, br) = (q.integer(a.clone()), q.integer(b.clone()));
    let mut out = Vec::new();
    for v in q.relevant_places(&[ar.clone(), br.clone()])? {
        if q.hilbert_symbol(&ar, &br, &v)? == -1 {
            out.push(v);
        }
    }
    Ok(out)
}

/// Small search for `(a, b)` whose Hilbert symbol is -1 exactly on `ram`.
fn search_pfister(q: &Rationals, ram: &[Place]) -> Result<Option<(BigInt, BigInt)>> {
    let one = BigInt::from(1);
    if ram.is_empty() {
        return Ok(Some((one.clone(), one)));
    }
    let mut odd = BigInt::from(1);
    for v in ram {
        if let Place::Prime(p) = v {
            if p != &BigInt::from(2) {
                odd *= p;
            }
        }
    }
    let mut a_list: Vec<BigInt> = Vec::new();
    for base in [BigInt::from(1), BigInt::from(2), odd.clone(), &odd * 2] {
        for s in [1, -1] {
            let a = &base * s;
            if !a_list.contains(&a) {
                a_list.push(a);
            }
        }
    }
    let mut b_list: Vec<BigInt> = vec![1.into(), (-1).into(), 2.into(), (-2).into()];
    let mut n = 3u64;
    while n < 20_000 {
        if is_probable_prime(&BigInt::from(n)) {
            for m in [1i64, -1, 2, -2] {
                b_list.push(BigInt::from(n) * m);
            }
        }
        n += 2;
    }
    for a in &a_list {
        for b in &b_list {
            if ramification_of(q, a, b)? == ram {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

impl<E: Clone> QuaternionClass<E> {
    /// The class whose pure norm form has the given invariants.
    pub fn from_ternary<F: Field<Elem = E>>(f: &F, ternary: &FormInvariants) -> Result<Self> {
        match f.rationals() {
            None => Ok(Self::split_class(f)),
            Some(q) => {
                // ramified at v iff s_v(pure norm) differs from (-1,-1)_v,
                // which is -1 exactly at 2 and the real place.
                let mut ram: Vec<Place> = Vec::new();
                let neg = ternary.hasse_negative.clone().unwrap_or_default();
                let special = [Place::Real, Place::Prime(BigInt::from(2))];
                for v in neg.iter() {
                    if !special.contains(v) {
                        ram.push(v.clone());
                    }
                }
                for v in special.iter() {
                    if !neg.contains(v) {
                        ram.push(v.clone());
                    }
                }
                ram.sort();
                let pf = search_pfister(q, &ram)?.map(|(a, b)| PfisterSpec {
                    slots: vec![f.class_element(&SquareClass(a)), f.class_element(&SquareClass(b))],
                });
                Ok(QuaternionClass { split: ram.is_empty(), ternary: ternary.clone(), ramified: Some(ram), pfister: pf })
            }
        }
    }

    /// The split class `<<1, 1>>`, whose pure norm is `<-1, -1, 1>`.
    pub fn split_class<F: Field<Elem = E>>(f: &F) -> Self {
        let m1 = f.neg(&f.one());
        let ternary = invariants_of_diagonal(f, &[m1.clone(), m1, f.one()]).expect("unit entries");
        QuaternionClass {
            split: true,
            ternary,
            ramified: f.rationals().map(|_| Vec::new()),
            pfister: Some(PfisterSpec { slots: vec![f.one(), f.one()] }),
        }
    }
}

/// The class from a diagonal ternary form of trivial discriminant.
pub fn quaternion_from_diagonal<F: Field>(f: &F, d: &[F::Elem; 3]) -> Result<QuaternionClass<F::Elem>> {
    let inv = invariants_of_diagonal(f, d)?;
    let class = QuaternionClass::from_ternary(f, &inv)?;
    debug_assert_eq!(class.split, is_isotropic(f, &QuadraticForm::diagonal(f, d))?);
    Ok(class)
}
