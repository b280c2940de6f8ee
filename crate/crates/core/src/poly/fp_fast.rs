//! Prime-field fast path for the sweep-critical tests.
//!
//! Sweeps factor millions of small polynomials over F_p; the generic kernel
//! pays for extension-field generality on every coefficient move. This
//! module redoes just the irreducibility test and the squarefree/
//! distinct-degree classification on raw `u64` coefficient vectors
//! (low-to-high, trailing zeros trimmed, p < 2^31). Results must agree with
//! the generic kernel exactly; the test suite checks that on random inputs.

use alloc::vec::Vec;

use super::kernel::prime_divisors;

#[inline(always)]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn invm(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i128) as u64
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a·b mod m` for monic m. Products are accumulated per output coefficient
/// in u128 and reduced once.
fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = alloc::vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += (x * y) as u128;
        }
    }
    let mut wide: Vec<u64> = acc.iter().map(|&v| (v % p as u128) as u64).collect();
    reduce_by_monic(&mut wide, m, p);
    wide
}

/// In-place reduction by a monic modulus.
fn reduce_by_monic(v: &mut Vec<u64>, m: &[u64], p: u64) {
    let deg_m = m.len() - 1;
    while v.len() > deg_m {
        let c = v.pop().expect("nonempty");
        if c == 0 {
            continue;
        }
        let shift = v.len() - deg_m;
        for (j, &mj) in m.iter().take(deg_m).enumerate() {
            v[shift + j] = subm(v[shift + j], c * mj % p, p);
        }
    }
    trim(v);
}

/// `base^exp mod m` for monic m.
fn powmod(base: &[u64], mut exp: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = alloc::vec![1u64];
    if m.len() == 1 {
        return Vec::new();
    }
    let mut b = base.to_vec();
    reduce_by_monic(&mut b, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(&result, &b, m, p);
        }
        exp >>= 1;
        if exp > 0 {
            b = mulmod(&b, &b, m, p);
        }
    }
    result
}

/// Remainder `a mod b` for arbitrary nonzero b.
fn rem_poly(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    debug_assert!(!b.is_empty());
    let mut r = a.to_vec();
    trim(&mut r);
    let lead = *b.last().expect("nonempty");
    let lead_inv = if lead == 1 { 1 } else { invm(lead, p) };
    while r.len() >= b.len() && !r.is_empty() {
        let c = *r.last().expect("nonempty") * lead_inv % p;
        let shift = r.len() - b.len();
        for (j, &bj) in b.iter().take(b.len() - 1).enumerate() {
            r[shift + j] = subm(r[shift + j], c * bj % p, p);
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Exact quotient when `b` divides `a`.
fn div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return r;
    }
    let lead = *b.last().expect("nonempty");
    let lead_inv = if lead == 1 { 1 } else { invm(lead, p) };
    let mut quot = alloc::vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let c = *r.last().expect("nonempty") * lead_inv % p;
        let shift = r.len() - b.len();
        quot[shift] = c;
        for (j, &bj) in b.iter().take(b.len() - 1).enumerate() {
            r[shift + j] = subm(r[shift + j], c * bj % p, p);
        }
        r.pop();
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "division was not exact");
    quot
}

/// Monic gcd.
fn gcd_poly(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let r = rem_poly(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    if let Some(&lead) = r0.last() {
        if lead != 1 {
            let inv = invm(lead, p);
            for c in &mut r0 {
                *c = *c * inv % p;
            }
        }
    }
    r0
}

fn derivative(f: &[u64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * (i as u64 % p) % p)
        .collect();
    trim(&mut out);
    out
}

/// `x^(q^i) mod f` chain step: raises to the q-th power once.
#[inline]
fn frobenius_step(h: &[u64], q: u64, f: &[u64], p: u64) -> Vec<u64> {
    powmod(h, q as u128, f, p)
}

/// Deterministic Rabin irreducibility test over F_p (f need not be monic).
pub(crate) fn rabin(f: &[u64], p: u64) -> bool {
    let mut f = f.to_vec();
    trim(&mut f);
    let r = f.len() - 1;
    debug_assert!(r >= 1);
    if r == 1 {
        return true;
    }
    if *f.last().expect("nonempty") != 1 {
        let inv = invm(*f.last().expect("nonempty"), p);
        for c in &mut f {
            *c = *c * inv % p;
        }
    }
    let x = alloc::vec![0u64, 1];
    let checkpoints: Vec<usize> = prime_divisors(r as u64)
        .into_iter()
        .map(|l| r / l as usize)
        .collect();
    let mut h = x.clone();
    for i in 1..=r {
        h = frobenius_step(&h, p, &f, p);
        if checkpoints.contains(&i) {
            // gcd(h − x, f) must be constant.
            let mut diff = h.clone();
            while diff.len() < 2 {
                diff.push(0);
            }
            diff[1] = subm(diff[1], 1, p);
            trim(&mut diff);
            let g = gcd_poly(&diff, &f, p);
            if g.len() != 1 {
                return false;
            }
        }
    }
    h == x
}

/// Squarefree test plus distinct-degree type, fused.
///
/// Returns `None` when f is not squarefree (or has vanishing derivative),
/// otherwise the partition of deg f by irreducible-factor degrees.
pub(crate) fn squarefree_type(f: &[u64], p: u64) -> Option<Vec<u32>> {
    let mut f = f.to_vec();
    trim(&mut f);
    debug_assert!(f.len() >= 2);
    if *f.last().expect("nonempty") != 1 {
        let inv = invm(*f.last().expect("nonempty"), p);
        for c in &mut f {
            *c = *c * inv % p;
        }
    }
    let fp = derivative(&f, p);
    if fp.is_empty() {
        return None;
    }
    if gcd_poly(&f, &fp, p).len() != 1 {
        return None;
    }

    let mut parts = Vec::new();
    let mut rest = f;
    let x = alloc::vec![0u64, 1];
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            parts.push((rest.len() - 1) as u32);
            break;
        }
        h = frobenius_step(&h, p, &rest, p);
        let mut diff = h.clone();
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = subm(diff[1], 1, p);
        trim(&mut diff);
        let g = gcd_poly(&diff, &rest, p);
        if g.len() > 1 {
            let count = (g.len() - 1) / d;
            for _ in 0..count {
                parts.push(d as u32);
            }
            rest = div_exact(&rest, &g, p);
            h = rem_poly(&h, &rest, p);
        }
    }
    Some(parts)
}
