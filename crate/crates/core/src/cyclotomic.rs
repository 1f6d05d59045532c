//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A value is stored at its minimal conductor `n` as a dense coefficient
//! vector over `ζ_n^0, …, ζ_n^{n-1}`, reduced onto a fixed basis: for every
//! prime power `q = p^a` exactly dividing `n`, exponents `k` whose leading
//! base-`p` digit of `k mod q` equals `p - 1` are eliminated with the relation
//! `Σ_t ζ_n^{k + t·n/p} = 0`. The surviving exponents number `φ(n)` and form
//! a basis, so the reduced vector is unique and equality is plain vector
//! equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `Σ coords[k] ζ_conductor^k` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: usize,
    coords: Vec<Rational>,
}

/// `(p, p^a)` for every prime `p` dividing `n`.
fn prime_powers(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

fn least_primitive_root(p: usize) -> usize {
    if p == 2 {
        return 1;
    }
    let factors: Vec<usize> = prime_powers(p - 1).into_iter().map(|(f, _)| f).collect();
    (2..p)
        .find(|&g| factors.iter().all(|&f| mod_pow(g, (p - 1) / f, p) != 1))
        .expect("every prime has a primitive root")
}

fn mod_pow(mut b: usize, mut e: usize, m: usize) -> usize {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Rewrites `coords` (length `n`) onto the canonical basis.
fn reduce(n: usize, coords: &mut [Rational]) {
    for (p, q) in prime_powers(n) {
        let step = n / p;
        let lead = q / p;
        for k in 0..n {
            if (k % q) / lead != p - 1 || coords[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut coords[k], Rational::zero());
            for t in 1..p {
                let j = (k + t * step) % n;
                coords[j] -= &c;
            }
        }
    }
}

fn galois_image(n: usize, coords: &[Rational], g: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (k, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            out[k * g % n] += c;
        }
    }
    reduce(n, &mut out);
    out
}

/// If the value lies in `Q(ζ_{n/p})`, its coordinates there.
fn try_descend(n: usize, coords: &[Rational], p: usize, q: usize) -> Option<Vec<Rational>> {
    let m = n / p;
    if q > p {
        // Gal(Q(ζ_n)/Q(ζ_m)) is generated by ζ ↦ ζ^{1+m}; the trace keeps
        // exponents divisible by p.
        if galois_image(n, coords, 1 + m) != coords {
            return None;
        }
        let mut out = vec![Rational::zero(); m];
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() && k % p == 0 {
                out[k / p] += c;
            }
        }
        reduce(m, &mut out);
        return Some(out);
    }
    // p exactly divides n: the relative Galois group is (Z/p)^×.
    if p > 2 {
        let r = least_primitive_root(p);
        // g ≡ r (mod p), g ≡ 1 (mod m)
        let m_inv = mod_pow(m % p, p - 2, p);
        let t = (r + p - 1) % p * m_inv % p;
        let g = 1 + m * t;
        if galois_image(n, coords, g) != coords {
            return None;
        }
    }
    // ζ_n^k = ζ_p^{ks} ζ_m^{kt} with s·m + t·p = 1, ζ_p = ζ_n^m, ζ_m = ζ_n^p.
    let egcd = (m as i64).extended_gcd(&(p as i64));
    let s = egcd.x.rem_euclid(p as i64) as usize;
    let t = egcd.y.rem_euclid(m as i64) as usize;
    let pm1 = Rational::from_integer(BigInt::from(p - 1));
    let mut out = vec![Rational::zero(); m];
    for (k, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let a = k * s % p;
        let b = k * t % m;
        if a == 0 {
            out[b] += c;
        } else {
            out[b] -= c / &pm1;
        }
    }
    reduce(m, &mut out);
    Some(out)
}

fn minimize(mut n: usize, mut coords: Vec<Rational>) -> (usize, Vec<Rational>) {
    'outer: loop {
        if n == 1 {
            break;
        }
        for (p, q) in prime_powers(n) {
            if let Some(c) = try_descend(n, &coords, p, q) {
                n /= p;
                coords = c;
                continue 'outer;
            }
        }
        break;
    }
    (n, coords)
}

fn embed(value: &Cyclotomic, target: usize) -> Vec<Rational> {
    let n = value.conductor;
    debug_assert_eq!(target % n, 0);
    let scale = target / n;
    let mut out = vec![Rational::zero(); target];
    for (k, c) in value.coords.iter().enumerate() {
        if !c.is_zero() {
            out[k * scale] = c.clone();
        }
    }
    if scale != 1 {
        reduce(target, &mut out);
    }
    out
}

impl Cyclotomic {
    /// Canonicalizes an arbitrary coefficient vector over `ζ_n^k`.
    pub fn from_coords(n: usize, mut coords: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclotomic conductor must be positive".into()));
        }
        if coords.len() != n {
            return Err(Error::InvalidInput(format!(
                "expected {n} coordinates, got {}",
                coords.len()
            )));
        }
        reduce(n, &mut coords);
        let (conductor, coords) = minimize(n, coords);
        Ok(Cyclotomic { conductor, coords })
    }

    /// `Σ_k multiplicities[k] ζ_n^k` for integer multiplicities.
    pub fn from_integer_coords(n: usize, ints: &[i64]) -> Result<Self> {
        let coords = ints.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect();
        Self::from_coords(n, coords)
    }

    /// `ζ_n^k`.
    pub fn root(n: usize, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("root of unity of order 0".into()));
        }
        let mut coords = vec![Rational::zero(); n];
        coords[k.rem_euclid(n as i64) as usize] = Rational::one();
        Self::from_coords(n, coords)
    }

    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coords: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coords: vec![r],
        }
    }

    pub fn from_int(x: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(x)))
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coords[0].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coords[0])
    }

    /// The integer value when `self ∈ Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|i| i64::try_from(i).ok())
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
            .expect("-1 is a unit modulo every conductor")
    }

    /// The field automorphism `ζ_n ↦ ζ_n^k` with `n` the conductor.
    pub fn galois(&self, k: usize) -> Result<Self> {
        let n = self.conductor;
        if k.gcd(&n) != 1 {
            return Err(Error::InvalidInput(format!(
                "{k} is not a unit modulo the conductor {n}"
            )));
        }
        Ok(Cyclotomic {
            conductor: n,
            coords: galois_image(n, &self.coords, k % n),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Division by a nonzero rational.
    pub fn div_rational(&self, r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        Ok(self.scale(&r.recip()))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            let coords: Vec<Rational> = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
            let (conductor, coords) = minimize(self.conductor, coords);
            return Cyclotomic { conductor, coords };
        }
        let l = self.conductor.lcm(&other.conductor);
        let mut a = embed(self, l);
        for (x, y) in a.iter_mut().zip(embed(other, l)) {
            *x += y;
        }
        let (conductor, coords) = minimize(l, a);
        Cyclotomic { conductor, coords }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        let l = self.conductor.lcm(&other.conductor);
        let a = embed(self, l);
        let b = embed(other, l);
        let mut out = vec![Rational::zero(); l];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[(i + j) % l] += x * y;
                }
            }
        }
        reduce(l, &mut out);
        let (conductor, coords) = minimize(l, out);
        Cyclotomic { conductor, coords }
    }

    pub fn neg_ref(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_ref(rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_ref(&rhs.neg_ref())
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_ref(rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc.add_ref(&x))
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc.add_ref(x))
    }
}

impl From<i64> for Cyclotomic {
    fn from(x: i64) -> Self {
        Cyclotomic::from_int(x)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.conductor;
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "z{n}^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicWire {
    conductor: usize,
    coords: Vec<(String, String)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicWire {
            conductor: self.conductor,
            coords: self
                .coords
                .iter()
                .map(|c| (c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = CyclotomicWire::deserialize(d)?;
        let coords = wire
            .coords
            .iter()
            .map(|(p, q)| {
                let p: BigInt = p.parse().map_err(D::Error::custom)?;
                let q: BigInt = q.parse().map_err(D::Error::custom)?;
                if q.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Rational::new(p, q))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Cyclotomic::from_coords(wire.conductor, coords).map_err(D::Error::custom)
    }
}
