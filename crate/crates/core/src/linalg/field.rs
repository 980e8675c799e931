//! Coefficient fields: prime fields GF(p) and the rationals.
//!
//! A field value carries whatever runtime data its arithmetic needs (the
//! modulus for GF(p)); elements are plain data and every operation goes
//! through the field. Matrices and modules store their field by value.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::poly;

/// Serializable description of a field choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u32),
    Rational,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(101)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "p={p}"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s.eq_ignore_ascii_case("rational") || s.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rational);
        }
        let digits = s.strip_prefix("p=").or_else(|| s.strip_prefix("GF")).unwrap_or(s);
        let digits = digits.trim_start_matches('(').trim_end_matches(')');
        let p: u32 = digits.parse().map_err(|_| format!("unrecognised field `{s}`"))?;
        if !is_prime(p as u64) || p >= (1 << 31) {
            return Err(format!("{p} is not a prime below 2^31"));
        }
        Ok(FieldSpec::Prime(p))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;
    /// Distinct roots lying in the field of the polynomial with
    /// coefficients listed from the constant term upwards.
    fn roots(&self, poly: &[Self::Elem]) -> Vec<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Option<Self::Elem>;
    fn spec(&self) -> FieldSpec;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let inv = self.inv(b).expect("division by zero");
        self.mul(a, &inv)
    }

    /// All elements, when the field is small enough to enumerate.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        match self.order() {
            Some(q) if q <= 1 << 16 => Some((0..q as i64).map(|v| self.from_i64(v)).collect()),
            _ => None,
        }
    }
}

/// GF(p) for a prime `p < 2^31`, elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Self {
        assert!(is_prime(p as u64) && p < (1 << 31), "{p} is not a prime below 2^31");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, base: u32, mut exp: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField::new(101)
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p as u64 - 2))
        }
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn order(&self) -> Option<u64> {
        Some(self.p as u64)
    }

    fn roots(&self, poly: &[u32]) -> Vec<u32> {
        let f = poly::trim(self, poly.to_vec());
        if f.len() <= 1 {
            return Vec::new();
        }
        if self.p <= 4096 {
            return (0..self.p).filter(|x| self.is_zero(&poly::eval(self, &f, x))).collect();
        }
        // Restrict to the split part gcd(f, x^p - x), then split by random
        // translates (Cantor-Zassenhaus, degree-one factors only).
        let x = vec![0, 1];
        let xp = poly::pow_mod(self, &x, self.p as u64, &f);
        let g = poly::gcd(self, &f, &poly::sub(self, &xp, &x));
        let mut out = Vec::new();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0x5eed);
        split_linear(self, g, &mut out, &mut rng);
        out.sort_unstable();
        out
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Option<u32> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            let d = self.from_i64(d);
            return self.inv(&d).map(|di| self.mul(&self.from_i64(n), &di));
        }
        s.parse::<i64>().ok().map(|v| self.from_i64(v))
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
}

fn split_linear<R: Rng>(f: &PrimeField, g: Vec<u32>, out: &mut Vec<u32>, rng: &mut R) {
    let deg = g.len().saturating_sub(1);
    if deg == 0 {
        return;
    }
    if deg == 1 {
        // g = g0 + g1 x
        let root = f.neg(&f.div(&g[0], &g[1]));
        out.push(root);
        return;
    }
    if f.p == 2 {
        for x in 0..2u32 {
            if f.is_zero(&poly::eval(f, &g, &x)) {
                out.push(x);
            }
        }
        return;
    }
    loop {
        let a = rng.gen_range(0..f.p);
        let shifted = vec![a, 1];
        let h = poly::pow_mod(f, &shifted, (f.p as u64 - 1) / 2, &g);
        let h = poly::sub(f, &h, &[1]);
        let d = poly::gcd(f, &g, &h);
        let dd = d.len().saturating_sub(1);
        if dd > 0 && dd < deg {
            let (q, _) = poly::divrem(f, &g, &d);
            split_linear(f, d, out, rng);
            split_linear(f, q, out, rng);
            return;
        }
    }
}

/// The rationals, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
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
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-9..=9))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }

    fn roots(&self, poly: &[BigRational]) -> Vec<BigRational> {
        let f = poly::trim(self, poly.to_vec());
        if f.len() <= 1 {
            return Vec::new();
        }
        // Clear denominators, then apply the rational root theorem.
        let lcm = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = f.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let mut out = Vec::new();
        let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if lowest > 0 {
            out.push(BigRational::zero());
        }
        let ints = &ints[lowest..];
        if ints.len() <= 1 {
            return out;
        }
        let (Some(a0), Some(an)) = (divisor_list(&ints[0]), divisor_list(ints.last().unwrap())) else {
            return out;
        };
        let mut seen = std::collections::BTreeSet::new();
        for p in &a0 {
            for q in &an {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(BigInt::from(*p) * sign, BigInt::from(*q));
                    if seen.insert(cand.clone()) && poly::eval(self, &f, &cand).is_zero() {
                        out.push(cand);
                    }
                }
            }
        }
        out
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Option<BigRational> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            return Some(BigRational::new(n, d));
        }
        s.parse::<BigInt>().ok().map(BigRational::from_integer)
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
}

/// Positive divisors of |n|, or `None` when |n| is too large to factor by
/// trial division.
fn divisor_list(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > 1u64 << 40 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(101);
        assert_eq!(f.add(&100, &5), 4);
        assert_eq!(f.sub(&3, &5), 99);
        assert_eq!(f.mul(&f.inv(&7).unwrap(), &7), 1);
        assert_eq!(f.from_i64(-1), 100);
        assert!(f.inv(&0).is_none());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("p=101".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(101));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!("p=100".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn roots_small_and_large_primes() {
        let f = PrimeField::new(101);
        // (x-3)(x-5) = x^2 - 8x + 15
        let poly = vec![15, f.from_i64(-8), 1];
        assert_eq!(f.roots(&poly), vec![3, 5]);
        let big = PrimeField::new(1_000_003);
        let poly = vec![big.from_i64(15), big.from_i64(-8), 1];
        assert_eq!(big.roots(&poly), vec![3, 5]);
        // x^2 + 1 has no roots mod 1_000_003 (= 3 mod 4)
        assert!(big.roots(&[1, 0, 1]).is_empty());
    }

    #[test]
    fn rational_roots() {
        let q = Rationals;
        // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
        let poly = vec![q.from_i64(1), q.from_i64(-3), q.from_i64(2)];
        let mut r = q.roots(&poly);
        r.sort();
        assert_eq!(r, vec![q.parse("1/2").unwrap(), q.one()]);
        assert_eq!(q.roots(&[q.zero(), q.zero(), q.one()]), vec![q.zero()]);
    }
}
