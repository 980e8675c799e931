//! Dense univariate polynomials over a [`Field`], coefficients from the
//! constant term upwards. Only what root finding and characteristic
//! polynomials need.

use super::field::Field;

pub fn trim<F: Field>(f: &F, mut p: Vec<F::Elem>) -> Vec<F::Elem> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

pub fn eval<F: Field>(f: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    p.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
            f.sub(&x, &y)
        })
        .collect();
    trim(f, out)
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let b = trim(f, b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(f, a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b.last().unwrap()).unwrap();
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(r.last().unwrap(), &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = f.sub(&r[shift + j], &f.mul(&c, bj));
        }
        q[shift] = c;
        r = trim(f, r);
        if r.is_empty() {
            break;
        }
    }
    (trim(f, q), r)
}

/// Monic greatest common divisor (empty when both inputs vanish).
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut a = trim(f, a.to_vec());
    let mut b = trim(f, b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        let inv = f.inv(&lead).unwrap();
        a = a.iter().map(|c| f.mul(c, &inv)).collect();
    }
    a
}

pub fn pow_mod<F: Field>(f: &F, base: &[F::Elem], mut exp: u64, modulus: &[F::Elem]) -> Vec<F::Elem> {
    let mut acc = vec![f.one()];
    let mut b = divrem(f, base, modulus).1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = divrem(f, &mul(f, &acc, &b), modulus).1;
        }
        b = divrem(f, &mul(f, &b, &b), modulus).1;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;

    #[test]
    fn division_identity() {
        let f = PrimeField::new(7);
        let a = vec![3, 1, 4, 1, 5];
        let b = vec![2, 6, 1];
        let (q, r) = divrem(&f, &a, &b);
        let back = sub(&f, &mul(&f, &q, &b), &sub(&f, &[], &r));
        assert_eq!(back, trim(&f, a));
        assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = PrimeField::new(101);
        let common = vec![f.from_i64(-2), 1];
        let a = mul(&f, &common, &[f.from_i64(5), 1]);
        let b = mul(&f, &common, &[f.from_i64(9), 1]);
        assert_eq!(gcd(&f, &a, &b), common);
    }
}
