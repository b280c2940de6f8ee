//! Complete factorization over finite fields.
//!
//! Pipeline: squarefree decomposition (with p-th-root descent when the
//! derivative vanishes), distinct-degree splitting via `x^(q^i) mod f`, then
//! equal-degree splitting — the power split `gcd(h^((q^d−1)/2) − 1, f)` for
//! odd q and the trace-map split in characteristic 2. The random choices in
//! equal-degree splitting are seeded from the input polynomial itself and
//! the factor list is canonicalized afterward, so output is a pure function
//! of the input.

use alloc::vec::Vec;

use serde::Serialize;

use super::kernel;
use super::Poly;
use crate::cycle_type::CycleType;
use crate::field::{FieldDescriptor, FieldElem};
use crate::rng::{fold_seed, SplitMix64};
use crate::{Error, Result};

/// `unit · Π factorᵐ` with monic, pairwise distinct, irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElem,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, field: &FieldDescriptor) -> Result<Poly> {
        let mut acc = Poly::constant(field, self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as u64)?)?;
        }
        Ok(acc)
    }

    /// Total degree counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| f.degree().unwrap_or(0) * *m as usize)
            .sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, m)| m == 1)
    }

    /// Factor degrees with multiplicity as a partition of the total degree.
    pub fn cycle_type(&self) -> CycleType {
        let mut parts = Vec::new();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                parts.push(f.degree().unwrap_or(0) as u32);
            }
        }
        CycleType::new(parts).expect("factor degrees are positive")
    }
}

/// Multiplicity pattern of a non-squarefree polynomial: `(degree, multiplicity)`
/// pairs sorted by descending degree then descending multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamifiedPattern {
    pub pattern: Vec<(u32, u32)>,
}

/// What `factor_type` sees: a Frobenius-style partition for squarefree
/// inputs, or the ramification pattern otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorOutcome {
    Squarefree(CycleType),
    Ramified(RamifiedPattern),
}

/// Complete factorization into monic irreducibles.
pub fn factor(f: &Poly) -> Result<Factorization> {
    let field = f.field().clone();
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let unit = f.leading_coeff().expect("nonzero").clone();
    if deg == 0 {
        return Ok(Factorization {
            unit,
            factors: Vec::new(),
        });
    }
    let monic = f.make_monic();
    // Seed the equal-degree splitter from the input so factor() is
    // deterministic without threading a seed through every caller.
    let mut rng = SplitMix64::new(fold_seed(
        core::iter::once(field.q())
            .chain(monic.coeffs().iter().map(|c| field.index_of(c))),
    ));

    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in squarefree_parts(&monic)? {
        for (d, product) in distinct_degree_parts(&part)? {
            for irreducible in equal_degree_split(&product, d, &mut rng)? {
                factors.push((irreducible, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        da.cmp(&db).then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(Factorization { unit, factors })
}

/// Deterministic Rabin irreducibility test.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    if f.field().nu() == 1 {
        match f.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(_) => {}
        }
        let raw: Vec<u64> = f.coeffs().iter().map(|c| c.coords()[0]).collect();
        return Ok(super::fp_fast::rabin(&raw, f.field().p()));
    }
    kernel::rabin_irreducible(f.field(), f.coeffs())
}

/// Factorization type of f: its partition of factor degrees when squarefree,
/// or the ramification pattern otherwise.
///
/// The squarefree path needs only distinct-degree splitting (the d-degree
/// product of k irreducibles contributes k parts equal to d), so sweeps can
/// classify without running the full equal-degree machinery.
pub fn factor_type(f: &Poly) -> Result<FactorOutcome> {
    if f.degree().ok_or(Error::ZeroPolynomial)? == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if f.field().nu() == 1 {
        let raw: Vec<u64> = f.coeffs().iter().map(|c| c.coords()[0]).collect();
        if let Some(parts) = super::fp_fast::squarefree_type(&raw, f.field().p()) {
            return Ok(FactorOutcome::Squarefree(CycleType::new(parts)?));
        }
        return ramified_pattern(f);
    }
    if f.is_squarefree_separable()? {
        let monic = f.make_monic();
        let mut parts = Vec::new();
        for (d, product) in distinct_degree_parts(&monic)? {
            let count = product.degree().expect("nonzero") / d;
            for _ in 0..count {
                parts.push(d as u32);
            }
        }
        Ok(FactorOutcome::Squarefree(CycleType::new(parts)?))
    } else {
        ramified_pattern(f)
    }
}

fn ramified_pattern(f: &Poly) -> Result<FactorOutcome> {
    let full = factor(f)?;
    let mut pattern: Vec<(u32, u32)> = full
        .factors
        .iter()
        .map(|(p, m)| (p.degree().unwrap_or(0) as u32, *m))
        .collect();
    pattern.sort_by(|a, b| b.cmp(a));
    Ok(FactorOutcome::Ramified(RamifiedPattern { pattern }))
}

/// Squarefree decomposition of a monic polynomial in characteristic p.
///
/// Returns pairwise-coprime squarefree monic parts with their multiplicities;
/// parts of multiplicity divisible by p are reached through p-th-root
/// descent `f(t) = g(t^p)`.
fn squarefree_parts(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let field = f.field().clone();
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let fp = f.derivative();
    if fp.is_zero() {
        let root = pth_root(f)?;
        let inner = squarefree_parts(&root)?;
        return Ok(inner
            .into_iter()
            .map(|(g, m)| (g, m * field.p() as u32))
            .collect());
    }

    let mut out = Vec::new();
    // c collects factors of multiplicity ≥ 2 (and the p-divisible tail);
    // w is the product of factors with multiplicity not divisible by p.
    let mut c = f.gcd(&fp)?;
    let mut w = f.divrem(&c)?.0;
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c)?;
        let part = w.divrem(&y)?.0;
        if part.degree().is_some_and(|d| d > 0) {
            out.push((part, i));
        }
        w = y;
        c = c.divrem(&w)?.0;
        i += 1;
    }
    if c.degree().is_some_and(|d| d > 0) {
        let root = pth_root(&c)?;
        for (g, m) in squarefree_parts(&root)? {
            out.push((g, m * field.p() as u32));
        }
    }
    Ok(out)
}

/// For f with f′ = 0 (so f(t) = g(t^p)), recovers g by taking p-th roots of
/// the surviving coefficients: the root of c is c^(p^(ν−1)).
fn pth_root(f: &Poly) -> Result<Poly> {
    let field = f.field().clone();
    let p = field.p() as usize;
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    debug_assert_eq!(deg % p, 0);
    let mut coeffs = Vec::with_capacity(deg / p + 1);
    for i in 0..=deg / p {
        let c = &f.coeffs()[i * p];
        coeffs.push(field.frobenius(c, field.nu() - 1)?);
    }
    Ok(Poly::from_coeffs(field, coeffs))
}

/// Distinct-degree splitting of a monic squarefree polynomial: returns
/// `(d, product of all irreducible factors of degree d)` for each occupied d.
fn distinct_degree_parts(f: &Poly) -> Result<Vec<(usize, Poly)>> {
    let field = f.field().clone();
    let q = field.q() as u128;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Poly::x(&field);
    let mut h = x.clone();
    let mut d = 0usize;
    while let Some(deg_rest) = rest.degree() {
        if deg_rest == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg_rest {
            out.push((deg_rest, rest));
            break;
        }
        h = Poly::from_coeffs(
            field.clone(),
            kernel::powmod(&field, h.coeffs(), q, rest.coeffs())?,
        );
        let g = rest.gcd(&h.sub(&x)?)?;
        if g.degree().is_some_and(|dg| dg > 0) {
            out.push((d, g.clone()));
            rest = rest.divrem(&g)?.0;
            h = Poly::from_coeffs(
                field.clone(),
                kernel::rem(&field, h.coeffs(), rest.coeffs())?,
            );
        }
    }
    Ok(out)
}

/// Splits a monic product of irreducibles all of degree d into the factors.
fn equal_degree_split(f: &Poly, d: usize, rng: &mut SplitMix64) -> Result<Vec<Poly>> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == d {
        return Ok(alloc::vec![f.clone()]);
    }
    let field = f.field().clone();
    // A split attempt needs at most a few tries in expectation; the bound
    // only guards against implementation bugs.
    for _ in 0..10_000 {
        let candidate = random_poly_below(&field, deg, rng);
        if candidate.degree().is_none() {
            continue;
        }
        let shared = f.gcd(&candidate)?;
        let split = if shared.degree().is_some_and(|s| s > 0 && s < deg) {
            Some(shared)
        } else if field.p() == 2 {
            trace_split(f, d, &candidate)?
        } else {
            power_split(f, d, &candidate)?
        };
        if let Some(g) = split {
            let rest = f.divrem(&g)?.0;
            let mut out = equal_degree_split(&g, d, rng)?;
            out.extend(equal_degree_split(&rest, d, rng)?);
            return Ok(out);
        }
    }
    Err(Error::invalid(alloc::string::String::from(
        "equal-degree splitting failed to converge",
    )))
}

/// Odd-q split: b = a^((q^d − 1)/2) mod f lands on ±1 independently per
/// factor, so gcd(b − 1, f) is proper with probability ≥ 1/2.
///
/// The exponent is taken as norm-then-power: a^(1 + q + … + q^(d−1)) raised
/// to (q − 1)/2, keeping every exponent within u128.
fn power_split(f: &Poly, d: usize, a: &Poly) -> Result<Option<Poly>> {
    let field = f.field().clone();
    let q = field.q() as u128;
    let mut norm = kernel::rem(&field, a.coeffs(), f.coeffs())?;
    let acc = norm.clone();
    for _ in 1..d {
        norm = kernel::powmod(&field, &norm, q, f.coeffs())?;
        norm = kernel::mulmod(&field, &norm, &acc, f.coeffs())?;
    }
    let b = kernel::powmod(&field, &norm, (q - 1) / 2, f.coeffs())?;
    let b_minus_1 = kernel::sub(&field, &b, &[field.one()]);
    let g = f.gcd(&Poly::from_coeffs(field.clone(), b_minus_1))?;
    let deg = f.degree().expect("nonzero");
    Ok(g
        .degree()
        .filter(|&s| s > 0 && s < deg)
        .map(|_| g))
}

/// Characteristic-2 split via the absolute trace
/// `T(a) = a + a² + a⁴ + … + a^(2^(νd−1)) mod f`, which is 0 or 1
/// independently on each degree-d factor.
fn trace_split(f: &Poly, d: usize, a: &Poly) -> Result<Option<Poly>> {
    let field = f.field().clone();
    let two_power_degree = field.nu() as usize * d;
    let mut term = kernel::rem(&field, a.coeffs(), f.coeffs())?;
    let mut trace = term.clone();
    for _ in 1..two_power_degree {
        term = kernel::mulmod(&field, &term, &term, f.coeffs())?;
        trace = kernel::add(&field, &trace, &term);
    }
    let g = f.gcd(&Poly::from_coeffs(field.clone(), trace))?;
    let deg = f.degree().expect("nonzero");
    Ok(g
        .degree()
        .filter(|&s| s > 0 && s < deg)
        .map(|_| g))
}

fn random_poly_below(field: &FieldDescriptor, deg: usize, rng: &mut SplitMix64) -> Poly {
    let coeffs = (0..deg).map(|_| field.sample(rng)).collect();
    Poly::from_coeffs(field.clone(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn field(p: u64, nu: u32) -> FieldDescriptor {
        FieldDescriptor::make(p, nu).unwrap()
    }

    #[test]
    fn factor_split_quadratic_f5() {
        // x² + 1 = (x+2)(x+3) over F_5.
        let f5 = field(5, 1);
        let f = Poly::from_ints(&f5, &[1, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(
            fac.factors[0].0,
            Poly::from_ints(&f5, &[2, 1]),
        );
        assert_eq!(
            fac.factors[1].0,
            Poly::from_ints(&f5, &[3, 1]),
        );
        assert_eq!(fac.expand(&f5).unwrap(), f);
    }

    #[test]
    fn factor_quartic_f3() {
        // x⁴ + 1 = (x² + x + 2)(x² + 2x + 2) over F_3.
        let f3 = field(3, 1);
        let f = Poly::from_ints(&f3, &[1, 0, 0, 0, 1]);
        let fac = factor(&f).unwrap();
        let expect = vec![
            Poly::from_ints(&f3, &[2, 1, 1]),
            Poly::from_ints(&f3, &[2, 2, 1]),
        ];
        let got: Vec<Poly> = fac.factors.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn factor_frobenius_square_f2() {
        // x² + 1 = (x+1)² over F_2.
        let f2 = field(2, 1);
        let f = Poly::from_ints(&f2, &[1, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0], (Poly::from_ints(&f2, &[1, 1]), 2));
    }

    #[test]
    fn factor_inseparable_descent() {
        // t⁵ + 1 = (t + 1)⁵ over F_5 (derivative vanishes, p-th-root path).
        let f5 = field(5, 1);
        let f = Poly::from_ints(&f5, &[1, 0, 0, 0, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(Poly::from_ints(&f5, &[1, 1]), 5)]);
    }

    #[test]
    fn irreducibility_examples() {
        let f3 = field(3, 1);
        assert!(is_irreducible(&Poly::from_ints(&f3, &[1, 0, 1])).unwrap());
        let f5 = field(5, 1);
        assert!(!is_irreducible(&Poly::from_ints(&f5, &[1, 0, 1])).unwrap());
        assert_eq!(
            is_irreducible(&Poly::from_ints(&f5, &[3])),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            is_irreducible(&Poly::zero(&f5)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn count_monic_irreducible_quadratics_f5() {
        // Exhaustive count must give (q² − q)/2 = 10.
        let f5 = field(5, 1);
        let mut count = 0;
        for c0 in 0..5 {
            for c1 in 0..5 {
                let f = Poly::from_ints(&f5, &[c0, c1, 1]);
                if is_irreducible(&f).unwrap() {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 10);
    }

    #[test]
    fn factor_type_examples() {
        // x³ + x = x(x−10)(x+10) over F_101.
        let f101 = field(101, 1);
        let f = Poly::from_ints(&f101, &[0, 1, 0, 1]);
        assert_eq!(
            factor_type(&f).unwrap(),
            FactorOutcome::Squarefree(CycleType::new(vec![1, 1, 1]).unwrap())
        );

        let f3 = field(3, 1);
        let g = Poly::from_ints(&f3, &[1, 0, 1]);
        assert_eq!(
            factor_type(&g).unwrap(),
            FactorOutcome::Squarefree(CycleType::single(2))
        );

        // (x+1)²(x+2) over F_5 is ramified with pattern [(1,2),(1,1)].
        let f5 = field(5, 1);
        let r = Poly::from_ints(&f5, &[1, 2, 1])
            .mul(&Poly::from_ints(&f5, &[2, 1]))
            .unwrap();
        assert_eq!(
            factor_type(&r).unwrap(),
            FactorOutcome::Ramified(RamifiedPattern {
                pattern: vec![(1, 2), (1, 1)]
            })
        );
    }

    #[test]
    fn factor_type_matches_full_factorization() {
        let f9 = field(3, 2);
        let mut rng = SplitMix64::new(7);
        for _ in 0..200 {
            let deg = 1 + (rng.next_below(6) as usize);
            let mut coeffs: Vec<FieldElem> =
                (0..deg).map(|_| f9.sample(&mut rng)).collect();
            coeffs.push(f9.one());
            let f = Poly::from_coeffs(f9.clone(), coeffs);
            let full = factor(&f).unwrap();
            match factor_type(&f).unwrap() {
                FactorOutcome::Squarefree(t) => {
                    assert!(full.is_squarefree());
                    assert_eq!(t, full.cycle_type());
                }
                FactorOutcome::Ramified(_) => assert!(!full.is_squarefree()),
            }
        }
    }

    #[test]
    fn factor_char2_extension_field() {
        // Septics over F_{2^11} exercise the trace-map splitter.
        let f2k = field(2, 11);
        let t = f2k.elem_by_index(1234);
        // x⁷ + t·x³ + 1
        let mut coeffs = vec![f2k.one(), f2k.zero(), f2k.zero(), t];
        coeffs.extend(core::iter::repeat_n(f2k.zero(), 3));
        coeffs.push(f2k.one());
        let f = Poly::from_coeffs(f2k.clone(), coeffs);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.expand(&f2k).unwrap(), f);
        assert_eq!(fac.degree(), 7);
        for (p, _) in &fac.factors {
            assert!(is_irreducible(p).unwrap());
        }
    }

    #[test]
    fn factor_is_deterministic() {
        let f7 = field(7, 1);
        // Product of three linears and a quadratic, squared.
        let f = Poly::from_ints(&f7, &[3, 1])
            .mul(&Poly::from_ints(&f7, &[5, 1]))
            .unwrap()
            .mul(&Poly::from_ints(&f7, &[1, 1, 1]))
            .unwrap()
            .mul(&Poly::from_ints(&f7, &[3, 1]))
            .unwrap();
        let a = factor(&f).unwrap();
        let b = factor(&f).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.expand(&f7).unwrap(), f);
    }
}
