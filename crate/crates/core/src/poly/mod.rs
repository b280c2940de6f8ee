//! Univariate polynomial algebra over a [`FieldDescriptor`].
//!
//! `Poly` is dense, low-to-high, with the canonical invariant that the
//! coefficient vector is empty (zero polynomial) or ends in a nonzero
//! leading coefficient. Cross-field operations are rejected with
//! [`Error::FieldMismatch`].

mod factor;
mod fp_fast;
mod kernel;

pub use factor::{factor, factor_type, is_irreducible, FactorOutcome, Factorization, RamifiedPattern};

use alloc::vec::Vec;

use serde::Serialize;

use crate::field::{FieldDescriptor, FieldElem};
use crate::{Error, Result};

/// Rabin irreducibility over any coefficient field (used by the Capelli
/// route, where the coefficients live in an extension).
pub(crate) fn rabin_over<F: crate::coeff::CoeffField>(
    field: &F,
    coeffs: &[F::Elem],
) -> Result<bool> {
    kernel::rabin_irreducible(field, coeffs)
}

/// Dense univariate polynomial over a described finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldDescriptor,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    /// Builds a polynomial, trimming trailing zeros to canonical form.
    pub fn from_coeffs(field: FieldDescriptor, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    /// Convenience constructor from prime-subfield residues, low-to-high.
    pub fn from_ints(field: &FieldDescriptor, residues: &[i64]) -> Self {
        let coeffs = residues.iter().map(|&r| field.from_i64(r)).collect();
        Poly::from_coeffs(field.clone(), coeffs)
    }

    pub fn zero(field: &FieldDescriptor) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldDescriptor) -> Self {
        Poly::constant(field, field.one())
    }

    pub fn x(field: &FieldDescriptor) -> Self {
        Poly::from_coeffs(
            field.clone(),
            alloc::vec![field.zero(), field.one()],
        )
    }

    pub fn constant(field: &FieldDescriptor, c: FieldElem) -> Self {
        Poly::from_coeffs(field.clone(), alloc::vec![c])
    }

    /// The monomial `c·x^deg`.
    pub fn monomial(field: &FieldDescriptor, c: FieldElem, deg: usize) -> Self {
        let mut coeffs = alloc::vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(field.clone(), coeffs)
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        kernel::deg::<FieldDescriptor>(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(&self.field.one())
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn wrap(&self, coeffs: Vec<FieldElem>) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.wrap(kernel::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.wrap(kernel::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.wrap(kernel::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, c: &FieldElem) -> Result<Poly> {
        Ok(self.wrap(kernel::scale(&self.field, &self.coeffs, c)))
    }

    /// Quotient and remainder with `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let (q, r) = kernel::divrem(&self.field, &self.coeffs, &divisor.coeffs)?;
        Ok((self.wrap(q), self.wrap(r)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.wrap(kernel::gcd(&self.field, &self.coeffs, &other.coeffs)?))
    }

    pub fn make_monic(&self) -> Poly {
        self.wrap(kernel::make_monic(&self.field, &self.coeffs))
    }

    /// Formal derivative. Vanishes identically on p-th powers.
    pub fn derivative(&self) -> Poly {
        let field = self.field.clone();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let factor = field.from_u64(i as u64 % field.p());
                field.mul(c, &factor).expect("same field")
            })
            .collect();
        Poly::from_coeffs(field, coeffs)
    }

    pub fn eval(&self, at: &FieldElem) -> Result<FieldElem> {
        let field = &self.field;
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.mul(&acc, at)?;
            acc = field.add(&acc, c)?;
        }
        Ok(acc)
    }

    /// Substitution `self(other)`, by Horner's rule in the polynomial ring.
    pub fn compose(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let mut acc = Poly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other)?;
            acc = acc.add(&Poly::constant(&self.field, c.clone()))?;
        }
        Ok(acc)
    }

    /// `self^exp` in the polynomial ring.
    pub fn pow(&self, mut exp: u64) -> Result<Poly> {
        let mut result = Poly::one(&self.field);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Separability: gcd(f, f′) constant and f′ not identically zero.
    pub fn is_squarefree_separable(&self) -> Result<bool> {
        if self.degree().is_none() {
            return Err(Error::ZeroPolynomial);
        }
        let d = self.derivative();
        if d.is_zero() {
            return Ok(false);
        }
        Ok(self.gcd(&d)?.degree() == Some(0))
    }
}

/// Resultant of two nonzero polynomials, by the Euclidean remainder sequence
/// with the standard leading-coefficient and sign corrections. Agrees with
/// the Sylvester-matrix determinant.
pub fn resultant(f: &Poly, g: &Poly) -> Result<FieldElem> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field().clone();
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = field.one();
    loop {
        let da = a.degree().expect("nonzero");
        let db = b.degree().expect("nonzero");
        if db == 0 {
            let c = b.leading_coeff().expect("nonzero").clone();
            let cpow = field.pow(&c, da as u128)?;
            return field.mul(&acc, &cpow);
        }
        let r = a.divrem(&b)?.1;
        if r.is_zero() {
            // Nonconstant common factor.
            return Ok(field.zero());
        }
        let dr = r.degree().expect("nonzero");
        // Res(a, b) = (−1)^(da·db) · lc(b)^(da − dr) · Res(b, r)
        let lc_pow = field.pow(b.leading_coeff().expect("nonzero"), (da - dr) as u128)?;
        acc = field.mul(&acc, &lc_pow)?;
        if (da * db) % 2 == 1 {
            acc = field.neg(&acc)?;
        }
        a = b;
        b = r;
    }
}

/// Discriminant with the convention
/// `disc(f) = (−1)^(r(r−1)/2) · Res(f, f′) / lc(f)`, `r = deg f`.
///
/// Returns zero exactly when f is not squarefree or f′ vanishes identically
/// (the inseparable case; callers distinguish it via `f.derivative()`).
pub fn discriminant(f: &Poly) -> Result<FieldElem> {
    let r = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(r) => r,
    };
    let field = f.field().clone();
    let fp = f.derivative();
    if fp.is_zero() {
        return Ok(field.zero());
    }
    let res = resultant(f, &fp)?;
    let lc_inv = field.inv(f.leading_coeff().expect("nonzero"))?;
    let mut disc = field.mul(&res, &lc_inv)?;
    if (r * (r - 1) / 2) % 2 == 1 {
        disc = field.neg(&disc)?;
    }
    Ok(disc)
}

/// Why a polynomial failed (or could not be given) the Morse verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorseDiagnostic {
    /// p ≤ deg f, so critical-point counting is not meaningful.
    CharacteristicTooSmall,
    /// f′ = 0 identically.
    DerivativeVanishes,
    /// f′ has a repeated root (a degenerate critical point).
    DegenerateCriticalPoint,
    /// Two critical points share a critical value.
    RepeatedCriticalValue,
}

/// Outcome of the Morse-condition check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorseReport {
    pub derivative_squarefree: bool,
    pub critical_values_distinct: bool,
    pub is_morse: bool,
    pub degenerate_detail: Option<MorseDiagnostic>,
}

/// Checks whether f is Morse: f′ squarefree and all critical values distinct.
///
/// The critical-value polynomial `D(s) = Res_t(f(t) − s, f′(t))` is built by
/// evaluating the resultant at `deg f′ + 1` sample points and interpolating;
/// f is Morse iff f′ is squarefree and D is squarefree. Meaningful only for
/// p > deg f; smaller characteristics get a `CharacteristicTooSmall`
/// diagnostic rather than a verdict.
pub fn is_morse(f: &Poly) -> Result<MorseReport> {
    let r = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(r) if r < 2 => return Err(Error::DegreeTooSmall(r as u32)),
        Some(r) => r,
    };
    let field = f.field().clone();
    if field.p() <= r as u64 {
        return Ok(MorseReport {
            derivative_squarefree: false,
            critical_values_distinct: false,
            is_morse: false,
            degenerate_detail: Some(MorseDiagnostic::CharacteristicTooSmall),
        });
    }
    let fp = f.derivative();
    if fp.is_zero() {
        return Ok(MorseReport {
            derivative_squarefree: false,
            critical_values_distinct: false,
            is_morse: false,
            degenerate_detail: Some(MorseDiagnostic::DerivativeVanishes),
        });
    }
    let derivative_squarefree = fp.is_squarefree_separable()?;

    let m = fp.degree().expect("nonzero");
    if field.q() <= m as u64 {
        return Err(Error::unsupported(alloc::format!(
            "need q > {m} sample points for critical-value interpolation"
        )));
    }
    // D(s) by evaluation at s_0, …, s_m and Lagrange interpolation.
    let samples: Vec<FieldElem> = (0..=m as u64).map(|i| field.elem_by_index(i)).collect();
    let values = samples
        .iter()
        .map(|s| {
            let shifted = f.sub(&Poly::constant(&field, s.clone()))?;
            resultant(&shifted, &fp)
        })
        .collect::<Result<Vec<FieldElem>>>()?;
    let d_poly = interpolate(&field, &samples, &values)?;
    let critical_values_distinct = match d_poly.degree() {
        None => false, // identically zero resultant cannot happen with f′ ≠ 0
        Some(0) => true,
        Some(_) => d_poly.is_squarefree_separable()?,
    };

    let degenerate_detail = if !derivative_squarefree {
        Some(MorseDiagnostic::DegenerateCriticalPoint)
    } else if !critical_values_distinct {
        Some(MorseDiagnostic::RepeatedCriticalValue)
    } else {
        None
    };
    Ok(MorseReport {
        derivative_squarefree,
        critical_values_distinct,
        is_morse: derivative_squarefree && critical_values_distinct,
        degenerate_detail,
    })
}

/// Lagrange interpolation through distinct nodes.
fn interpolate(field: &FieldDescriptor, xs: &[FieldElem], ys: &[FieldElem]) -> Result<Poly> {
    let mut acc = Poly::zero(field);
    for (i, xi) in xs.iter().enumerate() {
        // basis_i = Π_{j≠i} (x − x_j) / (x_i − x_j)
        let mut numer = Poly::one(field);
        let mut denom = field.one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let lin = Poly::from_coeffs(
                field.clone(),
                alloc::vec![field.neg(xj)?, field.one()],
            );
            numer = numer.mul(&lin)?;
            denom = field.mul(&denom, &field.sub(xi, xj)?)?;
        }
        let coeff = field.div(&ys[i], &denom)?;
        acc = acc.add(&numer.scale(&coeff)?)?;
    }
    Ok(acc)
}
