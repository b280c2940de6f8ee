//! Coefficient-field abstraction for the polynomial kernels.
//!
//! The dense-polynomial algorithms (division, gcd, modular powering, the
//! Rabin irreducibility test) are written once against [`CoeffField`] and
//! instantiated at two coefficient domains: the concrete `F_{p^ν}` of
//! [`FieldDescriptor`], and [`QuotientField`], the extension `F_q[y]/(f)`
//! used by the Capelli irreducibility route.

use alloc::vec::Vec;

use crate::field::{FieldDescriptor, FieldElem};
use crate::{Error, Result};

pub(crate) trait CoeffField {
    type Elem: Clone + PartialEq + Ord + core::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// Field cardinality, which must fit in a u128.
    fn cardinality(&self) -> u128;
}

impl CoeffField for FieldDescriptor {
    type Elem = FieldElem;

    #[inline]
    fn zero(&self) -> FieldElem {
        FieldDescriptor::zero(self)
    }

    #[inline]
    fn one(&self) -> FieldElem {
        FieldDescriptor::one(self)
    }

    #[inline]
    fn is_zero(&self, a: &FieldElem) -> bool {
        a.is_zero()
    }

    #[inline]
    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add_unchecked(a, b)
    }

    #[inline]
    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.sub_unchecked(a, b)
    }

    #[inline]
    fn neg(&self, a: &FieldElem) -> FieldElem {
        self.neg_unchecked(a)
    }

    #[inline]
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul_unchecked(a, b)
    }

    fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        FieldDescriptor::inv(self, a)
    }

    fn cardinality(&self) -> u128 {
        self.q() as u128
    }
}

/// The residue field `F_q[y]/(modulus)` for a monic irreducible `modulus`.
///
/// Elements are dense coefficient vectors over the base field, degree below
/// `deg modulus`, trailing zeros trimmed (so the representation is canonical
/// and `Ord` works coordinate-wise).
pub(crate) struct QuotientField<'a> {
    base: &'a FieldDescriptor,
    /// Monic modulus coefficients, low-to-high.
    modulus: &'a [FieldElem],
}

impl<'a> QuotientField<'a> {
    /// Caller guarantees `modulus` is monic and irreducible over `base`.
    pub fn new(base: &'a FieldDescriptor, modulus: &'a [FieldElem]) -> Result<Self> {
        let degree = modulus.len().saturating_sub(1);
        if degree == 0 {
            return Err(Error::ConstantPolynomial);
        }
        // The Rabin test over this field powers by its cardinality, so q^deg
        // must stay within u128 range with headroom for squaring exponents.
        let bits = 128u32 - (CoeffField::cardinality(base)).leading_zeros();
        if bits as usize * degree > 100 {
            return Err(Error::unsupported(alloc::format!(
                "quotient field cardinality q^{degree} too large"
            )));
        }
        Ok(QuotientField { base, modulus })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The residue class of `y`, i.e. a root of the modulus.
    pub fn generator(&self) -> Vec<FieldElem> {
        if self.degree() == 1 {
            // y ≡ −c₀ for a monic linear modulus y + c₀.
            let r = self.base.neg(&self.modulus[0]).expect("same field");
            if r.is_zero() {
                alloc::vec![]
            } else {
                alloc::vec![r]
            }
        } else {
            alloc::vec![FieldDescriptor::zero(self.base), FieldDescriptor::one(self.base)]
        }
    }

    /// Embeds a base-field element as a constant residue.
    pub fn embed(&self, c: &FieldElem) -> Vec<FieldElem> {
        if c.is_zero() {
            alloc::vec![]
        } else {
            alloc::vec![c.clone()]
        }
    }

    fn reduce(&self, mut v: Vec<FieldElem>) -> Vec<FieldElem> {
        let deg_m = self.degree();
        while v.len() > deg_m {
            let c = v.pop().expect("nonempty");
            if c.is_zero() {
                continue;
            }
            let shift = v.len() - deg_m;
            for (j, m) in self.modulus.iter().take(deg_m).enumerate() {
                let t = self.base.mul(&c, m).expect("same field");
                v[shift + j] = self.base.sub(&v[shift + j], &t).expect("same field");
            }
        }
        while v.last().is_some_and(FieldElem::is_zero) {
            v.pop();
        }
        v
    }
}

impl CoeffField for QuotientField<'_> {
    type Elem = Vec<FieldElem>;

    fn zero(&self) -> Vec<FieldElem> {
        Vec::new()
    }

    fn one(&self) -> Vec<FieldElem> {
        alloc::vec![FieldDescriptor::one(self.base)]
    }

    fn is_zero(&self, a: &Vec<FieldElem>) -> bool {
        a.is_empty()
    }

    fn add(&self, a: &Vec<FieldElem>, b: &Vec<FieldElem>) -> Vec<FieldElem> {
        let mut out = Vec::with_capacity(core::cmp::max(a.len(), b.len()));
        for i in 0..core::cmp::max(a.len(), b.len()) {
            let zero = FieldDescriptor::zero(self.base);
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            out.push(self.base.add(x, y).expect("same field"));
        }
        while out.last().is_some_and(FieldElem::is_zero) {
            out.pop();
        }
        out
    }

    fn sub(&self, a: &Vec<FieldElem>, b: &Vec<FieldElem>) -> Vec<FieldElem> {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Vec<FieldElem>) -> Vec<FieldElem> {
        a.iter()
            .map(|c| self.base.neg(c).expect("same field"))
            .collect()
    }

    fn mul(&self, a: &Vec<FieldElem>, b: &Vec<FieldElem>) -> Vec<FieldElem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut acc = alloc::vec![FieldDescriptor::zero(self.base); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = self.base.mul(x, y).expect("same field");
                acc[i + j] = self.base.add(&acc[i + j], &t).expect("same field");
            }
        }
        self.reduce(acc)
    }

    fn inv(&self, a: &Vec<FieldElem>) -> Result<Vec<FieldElem>> {
        if a.is_empty() {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid of a against the modulus, over the base field.
        let mut r0: Vec<FieldElem> = self.modulus.to_vec();
        let mut r1: Vec<FieldElem> = a.clone();
        let mut s0: Vec<FieldElem> = Vec::new();
        let mut s1: Vec<FieldElem> = alloc::vec![FieldDescriptor::one(self.base)];
        let trim = |v: &mut Vec<FieldElem>| {
            while v.last().is_some_and(FieldElem::is_zero) {
                v.pop();
            }
        };
        trim(&mut r0);
        trim(&mut r1);
        while !r1.is_empty() {
            let lead_inv = self.base.inv(r1.last().expect("nonempty"))?;
            let mut rem = r0.clone();
            let mut quot = alloc::vec![
                FieldDescriptor::zero(self.base);
                rem.len().saturating_sub(r1.len()) + 1
            ];
            while rem.len() >= r1.len() && !rem.is_empty() {
                let shift = rem.len() - r1.len();
                let c = self
                    .base
                    .mul(rem.last().expect("nonempty"), &lead_inv)
                    .expect("same field");
                quot[shift] = self.base.add(&quot[shift], &c).expect("same field");
                for (j, m) in r1.iter().enumerate() {
                    let t = self.base.mul(&c, m).expect("same field");
                    rem[shift + j] = self.base.sub(&rem[shift + j], &t).expect("same field");
                }
                trim(&mut rem);
            }
            // s_next = s0 − quot·s1
            let mut qs = alloc::vec![FieldDescriptor::zero(self.base); quot.len() + s1.len()];
            for (i, qc) in quot.iter().enumerate() {
                if qc.is_zero() {
                    continue;
                }
                for (j, sc) in s1.iter().enumerate() {
                    let t = self.base.mul(qc, sc).expect("same field");
                    qs[i + j] = self.base.add(&qs[i + j], &t).expect("same field");
                }
            }
            let mut s_next = Vec::new();
            for i in 0..core::cmp::max(s0.len(), qs.len()) {
                let zero = FieldDescriptor::zero(self.base);
                let x = s0.get(i).unwrap_or(&zero);
                let y = qs.get(i).unwrap_or(&zero);
                s_next.push(self.base.sub(x, y).expect("same field"));
            }
            trim(&mut s_next);
            r0 = core::mem::take(&mut r1);
            r1 = rem;
            s0 = core::mem::take(&mut s1);
            s1 = s_next;
        }
        if r0.len() != 1 {
            // Modulus was not irreducible after all.
            return Err(Error::DivisionByZero);
        }
        let scale = self.base.inv(&r0[0])?;
        Ok(s0
            .into_iter()
            .map(|c| self.base.mul(&c, &scale).expect("same field"))
            .collect())
    }

    fn cardinality(&self) -> u128 {
        (self.base.q() as u128).pow(self.degree() as u32)
    }
}
