//! Dense polynomial kernels, generic over the coefficient field.
//!
//! Polynomials are `Vec<F::Elem>` low-to-high with trailing zeros trimmed;
//! the empty vector is the zero polynomial. These functions assume all
//! inputs already belong to the same field.

use alloc::vec::Vec;

use crate::coeff::CoeffField;
use crate::{Error, Result};

pub(crate) fn trim<F: CoeffField>(f: &F, v: &mut Vec<F::Elem>) {
    while v.last().is_some_and(|c| f.is_zero(c)) {
        v.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub(crate) fn deg<F: CoeffField>(v: &[F::Elem]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub(crate) fn x_poly<F: CoeffField>(f: &F) -> Vec<F::Elem> {
    alloc::vec![f.zero(), f.one()]
}

pub(crate) fn add<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(core::cmp::max(a.len(), b.len()));
    for i in 0..core::cmp::max(a.len(), b.len()) {
        let c = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(c);
    }
    trim(f, &mut out);
    out
}

pub(crate) fn sub<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(core::cmp::max(a.len(), b.len()));
    for i in 0..core::cmp::max(a.len(), b.len()) {
        let c = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => f.neg(y),
            (None, None) => unreachable!(),
        };
        out.push(c);
    }
    trim(f, &mut out);
    out
}

pub(crate) fn mul<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &t);
        }
    }
    trim(f, &mut out);
    out
}

pub(crate) fn scale<F: CoeffField>(f: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    if f.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|x| f.mul(x, c)).collect()
}

/// Quotient and remainder; errors on a zero divisor.
#[allow(clippy::type_complexity)]
pub(crate) fn divrem<F: CoeffField>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Result<(Vec<F::Elem>, Vec<F::Elem>)> {
    if b.is_empty() {
        return Err(Error::DivisionByZero);
    }
    if a.len() < b.len() {
        return Ok((Vec::new(), a.to_vec()));
    }
    let lead = b.last().expect("nonempty");
    let lead_inv = if *lead == f.one() {
        None
    } else {
        Some(f.inv(lead)?)
    };
    let mut rem = a.to_vec();
    let mut quot = alloc::vec![f.zero(); a.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let top = rem.last().expect("nonempty");
        let c = match &lead_inv {
            Some(inv) => f.mul(top, inv),
            None => top.clone(),
        };
        quot[shift] = f.add(&quot[shift], &c);
        // The monomials below the leading one; the leading term cancels by
        // construction.
        for (j, m) in b.iter().take(b.len() - 1).enumerate() {
            let t = f.mul(&c, m);
            rem[shift + j] = f.sub(&rem[shift + j], &t);
        }
        rem.pop();
        trim(f, &mut rem);
    }
    trim(f, &mut quot);
    Ok((quot, rem))
}

pub(crate) fn rem<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    Ok(divrem(f, a, b)?.1)
}

pub(crate) fn make_monic<F: CoeffField>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = f.inv(lc).expect("leading coefficient is nonzero");
            scale(f, a, &inv)
        }
    }
}

/// Monic gcd; errors when both inputs are zero.
pub(crate) fn gcd<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if a.is_empty() && b.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    while !r1.is_empty() {
        let r = rem(f, &r0, &r1)?;
        r0 = core::mem::take(&mut r1);
        r1 = r;
    }
    Ok(make_monic(f, &r0))
}

pub(crate) fn mulmod<F: CoeffField>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    m: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    rem(f, &mul(f, a, b), m)
}

/// `base^exp mod m` by square-and-multiply.
pub(crate) fn powmod<F: CoeffField>(
    f: &F,
    base: &[F::Elem],
    mut exp: u128,
    m: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    let mut result = rem(f, &[f.one()], m)?;
    let mut b = rem(f, base, m)?;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(f, &result, &b, m)?;
        }
        exp >>= 1;
        if exp > 0 {
            b = mulmod(f, &b, &b, m)?;
        }
    }
    Ok(result)
}

/// Deterministic irreducibility test (Rabin).
///
/// `poly` of degree r over a field of cardinality q is irreducible iff
/// `x^(q^r) ≡ x (mod poly)` and `gcd(x^(q^(r/ℓ)) − x, poly) = 1` for every
/// prime ℓ dividing r. The q-powers are computed incrementally, one
/// Frobenius step per degree.
pub(crate) fn rabin_irreducible<F: CoeffField>(f: &F, poly: &[F::Elem]) -> Result<bool> {
    let r = match deg::<F>(poly) {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if r == 1 {
        return Ok(true);
    }
    let q = f.cardinality();
    let monic = make_monic(f, poly);
    let x = x_poly(f);
    let checkpoints: Vec<usize> = prime_divisors(r as u64)
        .into_iter()
        .map(|l| r / l as usize)
        .collect();
    let mut h = rem(f, &x, &monic)?;
    for i in 1..=r {
        h = powmod(f, &h, q, &monic)?;
        if checkpoints.contains(&i) {
            let g = gcd(f, &sub(f, &h, &x), &monic)?;
            if deg::<F>(&g) != Some(0) {
                return Ok(false);
            }
        }
    }
    Ok(h == rem(f, &x, &monic)?)
}

/// Distinct prime divisors of n, ascending.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
