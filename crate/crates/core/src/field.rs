//! Prime fields `F_p` and extension fields `F_{p^ν}` with exact arithmetic.
//!
//! Extension fields are represented in the polynomial basis relative to a
//! deterministically chosen modulus: the lexicographically smallest monic
//! irreducible polynomial of degree ν over `F_p` (constant coefficient
//! scanned fastest). `make` is therefore a pure function of `(p, ν)`, and a
//! `(p, ν)` pair identifies a field completely.

use arrayvec::ArrayVec;
use serde::{Deserialize, Serialize};

use crate::rng::SplitMix64;
use crate::{Error, Result};

/// Largest extension degree supported by the inline element representation.
pub const MAX_EXTENSION_DEGREE: usize = 16;

/// Default cap on the field cardinality `q = p^ν`.
pub const DEFAULT_CARDINALITY_CAP: u64 = 1 << 40;

/// Coordinates of a field element: ν residues mod p, low degree first.
pub type Coords = ArrayVec<u64, MAX_EXTENSION_DEGREE>;

/// An element of `F_{p^ν}` in polynomial-basis coordinates.
///
/// The representation is canonical — exactly ν coordinates, each in
/// `[0, p)` — so equality and ordering are plain coordinate comparisons.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem {
    coords: Coords,
}

impl FieldElem {
    /// Polynomial-basis coordinates, low degree first (length ν).
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// A finite field `F_{p^ν}` with its modulus pinned down.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDescriptor {
    p: u64,
    nu: u32,
    /// Monic irreducible modulus over `F_p`, low-to-high coefficients
    /// (length ν+1). Empty for prime fields.
    modulus: ArrayVec<u64, { MAX_EXTENSION_DEGREE + 1 }>,
    #[serde(skip)]
    q: u64,
}

// `q` is derived, so equality/serde work off (p, nu, modulus) alone; the
// Deserialize path restores it via `restore_cardinality`.
impl FieldDescriptor {
    /// Builds `F_{p^ν}` with the default cardinality cap.
    pub fn make(p: u64, nu: u32) -> Result<Self> {
        Self::make_with_cap(p, nu, DEFAULT_CARDINALITY_CAP)
    }

    /// Builds `F_{p^ν}`, rejecting cardinalities above `cap`.
    pub fn make_with_cap(p: u64, nu: u32, cap: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::unsupported(alloc::format!(
                "characteristic {p} exceeds 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if nu == 0 || nu as usize > MAX_EXTENSION_DEGREE {
            return Err(Error::unsupported(alloc::format!(
                "extension degree {nu} outside 1..={MAX_EXTENSION_DEGREE}"
            )));
        }
        let q = checked_pow(p, nu, cap).ok_or_else(|| {
            Error::unsupported(alloc::format!("cardinality {p}^{nu} exceeds cap {cap}"))
        })?;
        let modulus = if nu == 1 {
            ArrayVec::new()
        } else {
            let m = find_irreducible_modulus(p, nu)?;
            m.into_iter().collect()
        };
        Ok(FieldDescriptor { p, nu, modulus, q })
    }

    /// Recomputes the derived cardinality after deserialization and checks
    /// the descriptor's invariants.
    pub fn restore_cardinality(&mut self, cap: u64) -> Result<()> {
        let rebuilt = Self::make_with_cap(self.p, self.nu, cap)?;
        if rebuilt.modulus != self.modulus {
            return Err(Error::invalid(alloc::string::String::from(
                "modulus does not match the deterministic choice for (p, nu)",
            )));
        }
        self.q = rebuilt.q;
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    /// Cardinality `q = p^ν`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients low-to-high (empty for prime fields).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coords: core::iter::repeat_n(0, self.nu as usize).collect(),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_u64(1)
    }

    /// Embeds an integer residue into the prime subfield.
    pub fn from_u64(&self, value: u64) -> FieldElem {
        let mut coords: Coords = core::iter::repeat_n(0, self.nu as usize).collect();
        coords[0] = value % self.p;
        FieldElem { coords }
    }

    /// Embeds a signed integer residue into the prime subfield.
    pub fn from_i64(&self, value: i64) -> FieldElem {
        self.from_u64(value.rem_euclid(self.p as i64) as u64)
    }

    /// Builds an element from explicit coordinates (length must be ν).
    pub fn elem(&self, coords: &[u64]) -> Result<FieldElem> {
        if coords.len() != self.nu as usize {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElem {
            coords: coords.iter().map(|&c| c % self.p).collect(),
        })
    }

    fn check(&self, a: &FieldElem) -> Result<()> {
        if a.coords.len() != self.nu as usize {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_unchecked(a, b))
    }

    pub fn neg(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        Ok(self.neg_unchecked(a))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    #[inline]
    pub(crate) fn add_unchecked(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let mut coords = Coords::new();
        for (&x, &y) in a.coords.iter().zip(&b.coords) {
            coords.push(addm(x, y, self.p));
        }
        FieldElem { coords }
    }

    #[inline]
    pub(crate) fn sub_unchecked(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let mut coords = Coords::new();
        for (&x, &y) in a.coords.iter().zip(&b.coords) {
            coords.push(subm(x, y, self.p));
        }
        FieldElem { coords }
    }

    #[inline]
    pub(crate) fn neg_unchecked(&self, a: &FieldElem) -> FieldElem {
        let mut coords = Coords::new();
        for &x in a.coords.iter() {
            coords.push(subm(0, x, self.p));
        }
        FieldElem { coords }
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        if self.nu == 1 {
            let mut coords = Coords::new();
            coords.push(mulm(a.coords[0], b.coords[0], self.p));
            return FieldElem { coords };
        }
        let nu = self.nu as usize;
        // Schoolbook convolution with u128 accumulators, then reduction by
        // the monic modulus.
        let mut acc = [0u128; 2 * MAX_EXTENSION_DEGREE - 1];
        for (i, &x) in a.coords.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coords.iter().enumerate() {
                acc[i + j] += (x * y) as u128;
            }
        }
        let mut wide: ArrayVec<u64, { 2 * MAX_EXTENSION_DEGREE - 1 }> = acc
            [..2 * nu - 1]
            .iter()
            .map(|&v| (v % self.p as u128) as u64)
            .collect();
        for i in (nu..2 * nu - 1).rev() {
            let c = wide[i];
            if c == 0 {
                continue;
            }
            wide[i] = 0;
            for (j, &m) in self.modulus.iter().take(nu).enumerate() {
                let t = mulm(c, m, self.p);
                wide[i - nu + j] = subm(wide[i - nu + j], t, self.p);
            }
        }
        FieldElem {
            coords: wide[..nu].iter().copied().collect(),
        }
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.nu == 1 {
            return Ok(FieldElem {
                coords: core::iter::once(invm(a.coords[0], self.p)).collect(),
            });
        }
        // Extended Euclid between the element (as a polynomial over F_p) and
        // the modulus.
        let coeffs: alloc::vec::Vec<u64> = a.coords.iter().copied().collect();
        let inv = fp_poly_invmod(&coeffs, &self.modulus, self.p)
            .expect("nonzero element is invertible modulo an irreducible modulus");
        let mut coords: Coords = inv.into_iter().collect();
        while coords.len() < self.nu as usize {
            coords.push(0);
        }
        Ok(FieldElem { coords })
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        let binv = self.inv(b)?;
        self.mul(a, &binv)
    }

    /// Exponentiation by square-and-multiply; `pow(a, 0)` is 1 even for zero.
    pub fn pow(&self, a: &FieldElem, e: u128) -> Result<FieldElem> {
        self.check(a)?;
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(result)
    }

    /// `a^(p^power)`. The Frobenius has order ν, so `power` reduces mod ν.
    pub fn frobenius(&self, a: &FieldElem, power: u32) -> Result<FieldElem> {
        self.check(a)?;
        let steps = power % self.nu;
        let mut out = a.clone();
        for _ in 0..steps {
            out = self.pow(&out, self.p as u128)?;
        }
        Ok(out)
    }

    /// The element at position `index` in base-p little-endian coordinate
    /// order: coordinate j is digit j of `index` in base p.
    pub fn elem_by_index(&self, index: u64) -> FieldElem {
        debug_assert!(index < self.q);
        let mut coords = Coords::new();
        let mut rest = index;
        for _ in 0..self.nu {
            coords.push(rest % self.p);
            rest /= self.p;
        }
        FieldElem { coords }
    }

    /// Inverse of [`Self::elem_by_index`].
    pub fn index_of(&self, a: &FieldElem) -> u64 {
        let mut idx = 0u64;
        for &c in a.coords.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// All q elements exactly once, in base-p little-endian coordinate order.
    pub fn enumerate(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(move |i| self.elem_by_index(i))
    }

    /// Uniform random element.
    pub fn sample(&self, rng: &mut SplitMix64) -> FieldElem {
        self.elem_by_index(rng.next_below(self.q))
    }
}

#[inline(always)]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline(always)]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline(always)]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^31, so the product fits in u64.
    (a * b) % p
}

fn invm(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a nonzero mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

fn checked_pow(p: u64, nu: u32, cap: u64) -> Option<u64> {
    let mut q: u64 = 1;
    for _ in 0..nu {
        q = q.checked_mul(p)?;
        if q > cap {
            return None;
        }
    }
    Some(q)
}

/// Deterministic primality by trial division (inputs are < 2^31).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree ν
/// over `F_p`, scanning the non-leading coefficient vector `(c_0, …, c_{ν−1})`
/// in base-p counting order. Returned low-to-high, length ν+1.
pub fn find_irreducible_modulus(p: u64, nu: u32) -> Result<alloc::vec::Vec<u64>> {
    if nu < 2 {
        return Err(Error::invalid(alloc::string::String::from(
            "modulus search needs degree >= 2",
        )));
    }
    let prime = FieldDescriptor::make(p, 1)?;
    let total = checked_pow(p, nu, u64::MAX)
        .ok_or_else(|| Error::unsupported(alloc::string::String::from("modulus scan too large")))?;
    for idx in 0..total {
        let mut coeffs = alloc::vec::Vec::with_capacity(nu as usize + 1);
        let mut rest = idx;
        for _ in 0..nu {
            coeffs.push(prime.from_u64(rest % p));
            rest /= p;
        }
        coeffs.push(prime.one());
        let candidate = crate::poly::Poly::from_coeffs(prime.clone(), coeffs);
        if crate::poly::is_irreducible(&candidate)? {
            return Ok(candidate
                .coeffs()
                .iter()
                .map(|c| c.coords()[0])
                .collect());
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Extended-Euclid inverse of `a` modulo `m`, both over `F_p` (dense
/// low-to-high coefficient vectors). Returns `None` when gcd(a, m) ≠ 1.
fn fp_poly_invmod(a: &[u64], m: &[u64], p: u64) -> Option<alloc::vec::Vec<u64>> {
    use alloc::vec::Vec;

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    let mut r0: Vec<u64> = m.to_vec();
    let mut r1: Vec<u64> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<u64> = alloc::vec![];
    let mut s1: Vec<u64> = alloc::vec![1];

    while !r1.is_empty() {
        // divrem(r0, r1) over F_p
        let mut rem = r0.clone();
        let mut quot: Vec<u64> = alloc::vec![0; rem.len().saturating_sub(r1.len()) + 1];
        let lead_inv = invm(*r1.last().unwrap(), p);
        while rem.len() >= r1.len() && !rem.is_empty() {
            let shift = rem.len() - r1.len();
            let c = mulm(*rem.last().unwrap(), lead_inv, p);
            quot[shift] = addm(quot[shift], c, p);
            for (j, &mc) in r1.iter().enumerate() {
                rem[shift + j] = subm(rem[shift + j], mulm(c, mc, p), p);
            }
            trim(&mut rem);
        }
        trim(&mut quot);
        // s_next = s0 - q * s1
        let mut qs = alloc::vec![0u64; quot.len() + s1.len()];
        for (i, &qc) in quot.iter().enumerate() {
            for (j, &sc) in s1.iter().enumerate() {
                qs[i + j] = addm(qs[i + j], mulm(qc, sc, p), p);
            }
        }
        let mut s_next = alloc::vec![0u64; core::cmp::max(s0.len(), qs.len())];
        for (i, slot) in s_next.iter_mut().enumerate() {
            let x = s0.get(i).copied().unwrap_or(0);
            let y = qs.get(i).copied().unwrap_or(0);
            *slot = subm(x, y, p);
        }
        trim(&mut s_next);
        r0 = core::mem::take(&mut r1);
        r1 = rem;
        s0 = core::mem::take(&mut s1);
        s1 = s_next;
    }

    if r0.len() != 1 {
        return None;
    }
    // Normalize so the gcd is 1 exactly.
    let scale = invm(r0[0], p);
    Some(s0.into_iter().map(|c| mulm(c, scale, p)).collect())
}
