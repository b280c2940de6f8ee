//! Parametric composition families `F(t, Φ(a, t))` over a finite field.
//!
//! A family couples a bivariate polynomial F — monic in x — with a monic
//! template `Φ(a, t) = t^d + Σ_{i ∈ support} a_i t^i` whose supported
//! coefficients are free parameters. Specializing the parameters at a
//! concrete tuple yields a monic degree-`n·d` polynomial in t; sweeping all
//! tuples is how every statistical experiment in this crate observes the
//! family.

use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::coeff::QuotientField;
use crate::field::{FieldDescriptor, FieldElem};
use crate::poly::{self, Poly};
use crate::{Error, Result};

/// Default cap on the degree of iterated specializations.
pub const DEFAULT_DEGREE_CAP: u64 = 4096;

/// A polynomial in x whose coefficients are polynomials in t, monic in x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    field: FieldDescriptor,
    /// Entry j is the t-polynomial coefficient of x^j; the last entry is the
    /// constant polynomial 1.
    coeffs_x: Vec<Poly>,
}

impl BivariatePoly {
    pub fn new(field: FieldDescriptor, coeffs_x: Vec<Poly>) -> Result<Self> {
        if coeffs_x.len() < 2 {
            return Err(Error::invalid(String::from(
                "bivariate polynomial needs degree >= 1 in x",
            )));
        }
        if coeffs_x.iter().any(|c| c.field() != &field) {
            return Err(Error::FieldMismatch);
        }
        let lead = coeffs_x.last().expect("nonempty");
        if *lead != Poly::one(&field) {
            return Err(Error::NotMonicInX);
        }
        Ok(BivariatePoly { field, coeffs_x })
    }

    /// The identity `F(t, x) = x`.
    pub fn identity_x(field: &FieldDescriptor) -> Self {
        BivariatePoly {
            field: field.clone(),
            coeffs_x: alloc::vec![Poly::zero(field), Poly::one(field)],
        }
    }

    /// Degree in x.
    pub fn n(&self) -> u32 {
        (self.coeffs_x.len() - 1) as u32
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn coeffs_x(&self) -> &[Poly] {
        &self.coeffs_x
    }

    /// Substitutes a t-polynomial for x: `Σ_j c_j(t) · sub(t)^j` by Horner.
    pub fn substitute_x(&self, sub: &Poly) -> Result<Poly> {
        let mut acc = Poly::zero(&self.field);
        for c in self.coeffs_x.iter().rev() {
            acc = acc.mul(sub)?;
            acc = acc.add(c)?;
        }
        Ok(acc)
    }

    /// Plugs in a concrete t-value, leaving a univariate polynomial in x.
    pub fn at_t(&self, t: &FieldElem) -> Result<Poly> {
        let coeffs = self
            .coeffs_x
            .iter()
            .map(|c| c.eval(t))
            .collect::<Result<Vec<FieldElem>>>()?;
        Ok(Poly::from_coeffs(self.field.clone(), coeffs))
    }
}

/// The monic template `Φ(a, t) = t^d + Σ_{i ∈ support} a_i t^i`.
///
/// The support is a strictly increasing list of exponents below d; each
/// supported exponent carries one free coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericTemplate {
    pub d: u32,
    pub support: Vec<u32>,
}

impl GenericTemplate {
    pub fn new(d: u32, support: Vec<u32>) -> Result<Self> {
        // d = 1 (a bare t + a₀) is a degenerate control family, accepted
        // here and flagged by validate_family.
        if d < 1 {
            return Err(Error::invalid(String::from("template degree d must be >= 1")));
        }
        if support.is_empty() {
            return Err(Error::invalid(String::from("template support is empty")));
        }
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(String::from(
                "template support must be strictly increasing",
            )));
        }
        if *support.last().expect("nonempty") >= d {
            // A free coefficient on t^d would destroy monicity.
            return Err(Error::invalid(String::from(
                "template support must stay below the degree",
            )));
        }
        Ok(GenericTemplate { d, support })
    }

    /// Largest supported exponent.
    pub fn max_support(&self) -> u32 {
        *self.support.last().expect("support is nonempty")
    }

    /// Number of free coefficients.
    pub fn params(&self) -> usize {
        self.support.len()
    }
}

/// A family `F(t, Φ(a, t))` over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    field: FieldDescriptor,
    f: BivariatePoly,
    phi: GenericTemplate,
    /// Fixture key when this spec came from the registry.
    fixture: Option<String>,
}

impl FamilySpec {
    pub fn new(f: BivariatePoly, phi: GenericTemplate) -> Result<Self> {
        let field = f.field().clone();
        Ok(FamilySpec {
            field,
            f,
            phi,
            fixture: None,
        })
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn f(&self) -> &BivariatePoly {
        &self.f
    }

    pub fn phi(&self) -> &GenericTemplate {
        &self.phi
    }

    pub fn fixture(&self) -> Option<&str> {
        self.fixture.as_deref()
    }

    /// Composed degree r = n·d.
    pub fn r(&self) -> u32 {
        self.f.n() * self.phi.d
    }

    /// Number of free coefficients.
    pub fn params(&self) -> usize {
        self.phi.params()
    }

    /// Builds `Φ_A(t) = t^d + Σ A_i t^i` for a concrete tuple.
    pub fn phi_at(&self, tuple: &SpecTuple) -> Result<Poly> {
        if tuple.values.len() != self.params() {
            return Err(Error::ArityMismatch {
                expected: self.params(),
                got: tuple.values.len(),
            });
        }
        let mut coeffs = alloc::vec![self.field.zero(); self.phi.d as usize + 1];
        coeffs[self.phi.d as usize] = self.field.one();
        for (slot, value) in self.phi.support.iter().zip(&tuple.values) {
            if value.coords().len() != self.field.nu() as usize {
                return Err(Error::FieldMismatch);
            }
            coeffs[*slot as usize] = value.clone();
        }
        Ok(Poly::from_coeffs(self.field.clone(), coeffs))
    }
}

/// A concrete coefficient tuple, ordered by ascending supported exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecTuple {
    pub values: Vec<FieldElem>,
}

impl SpecTuple {
    pub fn new(values: Vec<FieldElem>) -> Self {
        SpecTuple { values }
    }
}

/// Specializes the family at a tuple: a monic polynomial of degree n·d in t.
pub fn specialize(spec: &FamilySpec, tuple: &SpecTuple) -> Result<Poly> {
    let phi = spec.phi_at(tuple)?;
    let out = spec.f.substitute_x(&phi)?;
    debug_assert_eq!(out.degree(), Some(spec.r() as usize));
    debug_assert!(out.is_monic());
    Ok(out)
}

/// The k-fold self-composition `G_A ∘ … ∘ G_A` of the specialization, of
/// degree (n·d)^k.
pub fn iterate_specialize(
    spec: &FamilySpec,
    tuple: &SpecTuple,
    k: u32,
    degree_cap: u64,
) -> Result<Poly> {
    if k == 0 {
        return Err(Error::invalid(String::from("iterate depth must be >= 1")));
    }
    let mut degree: u64 = 1;
    for _ in 0..k {
        degree = degree.saturating_mul(spec.r() as u64);
    }
    if degree > degree_cap {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: degree_cap,
        });
    }
    let base = specialize(spec, tuple)?;
    let mut out = base.clone();
    for _ in 1..k {
        out = out.compose(&base)?;
    }
    Ok(out)
}

/// True iff gcd(f, f′) is constant and f′ does not vanish identically.
pub fn separability_check(f: &Poly) -> Result<bool> {
    f.is_squarefree_separable()
}

/// Irreducibility of the composition f∘g decided through the extension
/// field: f must be irreducible over F_q, and with `E = F_q[y]/(f)` and β
/// the residue of y, `g(X) − β` must be irreducible over E.
///
/// Independent of (and checked in the tests against) running the
/// irreducibility test on the expanded composition directly.
pub fn capelli_irreducible(f: &Poly, g: &Poly) -> Result<bool> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    let field = f.field().clone();
    if f.degree().ok_or(Error::ZeroPolynomial)? == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if g.degree().ok_or(Error::ZeroPolynomial)? == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !poly::is_irreducible(f)? {
        return Ok(false);
    }
    let f_monic = f.make_monic();
    let ext = QuotientField::new(&field, f_monic.coeffs())?;
    let beta = ext.generator();
    // g with coefficients embedded into E, minus β.
    let mut g_ext: Vec<Vec<FieldElem>> = g.coeffs().iter().map(|c| ext.embed(c)).collect();
    use crate::coeff::CoeffField;
    g_ext[0] = CoeffField::sub(&ext, &g_ext[0], &beta);
    while g_ext.last().is_some_and(|c| c.is_empty()) {
        g_ext.pop();
    }
    crate::poly::rabin_over(&ext, &g_ext)
}

/// Hypothesis warnings attached to a validation verdict. These flag inputs
/// outside the regime where the symmetric-group conclusions are guaranteed;
/// sweeps still run on them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisWarning {
    /// p ≤ n·d.
    SmallCharacteristic,
    /// n·d ≤ 3.
    SmallComposedDegree,
    /// The template's constant coefficient is not free (0 ∉ support).
    ConstantTermNotFree,
    /// Only the constant coefficient is free (max support = 0).
    NoMiddleCoefficient,
}

/// Outcome of the generic-irreducibility certificate search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "witness_t")]
pub enum IrreducibilityCertificate {
    /// F(t₀, x) is irreducible of full degree in x at this witness, which
    /// forces irreducibility over the rational function field.
    Certified(u64),
    /// No witness across all of F_q; says nothing either way.
    Inconclusive,
}

/// What `validate_family` found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub separable_in_x: bool,
    pub irreducible_in_x: IrreducibilityCertificate,
    pub warnings: Vec<HypothesisWarning>,
}

/// Checks the family hypotheses: monicity in x (hard error), separability in
/// x sampled at several t-values, and an irreducibility certificate found by
/// searching t₀ over the field. Hypothesis violations that the experiments
/// deliberately explore (small characteristic, tiny degree, missing free
/// coefficients) surface as warnings, not errors.
pub fn validate_family(spec: &FamilySpec) -> Result<ValidationReport> {
    let field = spec.field().clone();
    let f = spec.f();
    let n = f.n();
    let r = spec.r();

    let mut warnings = Vec::new();
    if field.p() <= r as u64 {
        warnings.push(HypothesisWarning::SmallCharacteristic);
    }
    if r <= 3 {
        warnings.push(HypothesisWarning::SmallComposedDegree);
    }
    if !spec.phi().support.contains(&0) {
        warnings.push(HypothesisWarning::ConstantTermNotFree);
    }
    if spec.phi().max_support() == 0 {
        warnings.push(HypothesisWarning::NoMiddleCoefficient);
    }

    // Separability in x: the x-discriminant must be nonzero at some sampled
    // t (a nonzero function has few roots; three samples are plenty at the
    // field sizes in scope, and small fields just sample everything).
    let separable_in_x = if n == 1 {
        true
    } else {
        let sample_count = core::cmp::min(field.q(), 3.max(n as u64 + 1));
        let mut found = false;
        for i in 0..sample_count {
            let at_t = f.at_t(&field.elem_by_index(i))?;
            if at_t.degree() == Some(n as usize)
                && !poly::discriminant(&at_t)?.is_zero()
            {
                found = true;
                break;
            }
        }
        found
    };

    // Irreducibility in x over F_q(t), certified by one good specialization.
    let irreducible_in_x = if n == 1 {
        IrreducibilityCertificate::Certified(0)
    } else {
        let mut cert = IrreducibilityCertificate::Inconclusive;
        for i in 0..field.q() {
            let at_t = f.at_t(&field.elem_by_index(i))?;
            if at_t.degree() == Some(n as usize) && poly::is_irreducible(&at_t)? {
                cert = IrreducibilityCertificate::Certified(i);
                break;
            }
        }
        cert
    };

    Ok(ValidationReport {
        separable_in_x,
        irreducible_in_x,
        warnings,
    })
}

/// Resolves a named fixture over the given field.
///
/// - `chowla-n3`: t³ + t + a₀ (F(t,x) = x + t, Φ = t³ + a₀).
/// - `compose-demo`: (t² + a₁t + a₀)² − t (F(t,x) = x² − t, Φ = t² + a₁t + a₀).
/// - `quad-generic`: t² + a₁t + a₀ (F = x).
/// - `cubic-generic`: t³ + a₁t + a₀ (F = x).
/// - `serre-psl32`: t⁷ + a₃t³ + 1 (F(t,x) = x + 1, Φ = t⁷ + a₃t³); requires
///   characteristic 2.
pub fn fixture(key: &str, field: &FieldDescriptor) -> Result<FamilySpec> {
    let spec = match key {
        "chowla-n3" => {
            // F(t, x) = x + t
            let f = BivariatePoly::new(
                field.clone(),
                alloc::vec![Poly::x(field), Poly::one(field)],
            )?;
            let phi = GenericTemplate::new(3, alloc::vec![0])?;
            FamilySpec::new(f, phi)?
        }
        "compose-demo" => {
            // F(t, x) = x² − t
            let minus_t = Poly::x(field).scale(&field.from_i64(-1))?;
            let f = BivariatePoly::new(
                field.clone(),
                alloc::vec![minus_t, Poly::zero(field), Poly::one(field)],
            )?;
            let phi = GenericTemplate::new(2, alloc::vec![0, 1])?;
            FamilySpec::new(f, phi)?
        }
        "quad-generic" => {
            let phi = GenericTemplate::new(2, alloc::vec![0, 1])?;
            FamilySpec::new(BivariatePoly::identity_x(field), phi)?
        }
        "cubic-generic" => {
            let phi = GenericTemplate::new(3, alloc::vec![0, 1])?;
            FamilySpec::new(BivariatePoly::identity_x(field), phi)?
        }
        "serre-psl32" => {
            if field.p() != 2 {
                return Err(Error::FixtureCharacteristic {
                    key: String::from(key),
                    p: 2,
                });
            }
            // F(t, x) = x + 1
            let f = BivariatePoly::new(
                field.clone(),
                alloc::vec![Poly::one(field), Poly::one(field)],
            )?;
            let phi = GenericTemplate::new(7, alloc::vec![3])?;
            FamilySpec::new(f, phi)?
        }
        _ => return Err(Error::UnknownFixture(String::from(key))),
    };
    Ok(FamilySpec {
        fixture: Some(String::from(key)),
        ..spec
    })
}

/// The fixture keys [`fixture`] understands.
pub const FIXTURE_KEYS: &[&str] = &[
    "chowla-n3",
    "compose-demo",
    "quad-generic",
    "cubic-generic",
    "serre-psl32",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use alloc::vec;

    fn f(p: u64) -> FieldDescriptor {
        FieldDescriptor::make(p, 1).unwrap()
    }

    #[test]
    fn specialize_identity_composition() {
        // F = x, Φ: d=3 support {0,1}, A = (1, 1) over F_5 → t³ + t + 1.
        let f5 = f(5);
        let spec = fixture("cubic-generic", &f5).unwrap();
        let tuple = SpecTuple::new(vec![f5.one(), f5.one()]);
        let p = specialize(&spec, &tuple).unwrap();
        assert_eq!(p, Poly::from_ints(&f5, &[1, 1, 0, 1]));
    }

    #[test]
    fn specialize_compose_demo_origin() {
        // A = (0,0) over F_101: (t²)² − t = t⁴ − t.
        let f101 = f(101);
        let spec = fixture("compose-demo", &f101).unwrap();
        let tuple = SpecTuple::new(vec![f101.zero(), f101.zero()]);
        let p = specialize(&spec, &tuple).unwrap();
        assert_eq!(p, Poly::from_ints(&f101, &[0, -1, 0, 0, 1]));
        assert_eq!(spec.r(), 4);
        assert_eq!(spec.params(), 2);
    }

    #[test]
    fn specialize_chowla_shape() {
        let f101 = f(101);
        let spec = fixture("chowla-n3", &f101).unwrap();
        assert_eq!(spec.r(), 3);
        assert_eq!(spec.params(), 1);
        let tuple = SpecTuple::new(vec![f101.from_u64(7)]);
        let p = specialize(&spec, &tuple).unwrap();
        assert_eq!(p, Poly::from_ints(&f101, &[7, 1, 0, 1]));
    }

    #[test]
    fn serre_fixture_shape_and_characteristic() {
        let f2k = FieldDescriptor::make(2, 3).unwrap();
        let spec = fixture("serre-psl32", &f2k).unwrap();
        assert_eq!(spec.r(), 7);
        let t = f2k.elem(&[1, 1, 0]).unwrap();
        let p = specialize(&spec, &SpecTuple::new(vec![t.clone()])).unwrap();
        assert_eq!(p.degree(), Some(7));
        assert_eq!(p.coeffs()[3], t);
        assert_eq!(p.coeffs()[0], f2k.one());

        assert!(matches!(
            fixture("serre-psl32", &f(5)),
            Err(Error::FixtureCharacteristic { .. })
        ));
    }

    #[test]
    fn unknown_fixture_key() {
        assert!(matches!(
            fixture("nope", &f(5)),
            Err(Error::UnknownFixture(_))
        ));
    }

    #[test]
    fn iterate_example_f3() {
        // Φ = t² + 1 over F_3 (F = x), k = 2 → (t²+1)² + 1 = t⁴ + 2t² + 2.
        let f3 = f(3);
        let spec = fixture("quad-generic", &f3).unwrap();
        let tuple = SpecTuple::new(vec![f3.one(), f3.zero()]);
        let it = iterate_specialize(&spec, &tuple, 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(it, Poly::from_ints(&f3, &[2, 0, 2, 0, 1]));
    }

    #[test]
    fn iterate_base_case_and_degree_law() {
        let f101 = f(101);
        let spec = fixture("compose-demo", &f101).unwrap();
        let tuple = SpecTuple::new(vec![f101.from_u64(3), f101.from_u64(8)]);
        let k1 = iterate_specialize(&spec, &tuple, 1, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(k1, specialize(&spec, &tuple).unwrap());
        let k2 = iterate_specialize(&spec, &tuple, 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(k2.degree(), Some(16));
        // Composition associativity: iterate(k+1) = iterate(k) ∘ specialize.
        let k3 = iterate_specialize(&spec, &tuple, 3, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(k3, k2.compose(&k1).unwrap());
    }

    #[test]
    fn iterate_degree_cap() {
        let f101 = f(101);
        let spec = fixture("compose-demo", &f101).unwrap();
        let tuple = SpecTuple::new(vec![f101.zero(), f101.zero()]);
        assert!(matches!(
            iterate_specialize(&spec, &tuple, 7, DEFAULT_DEGREE_CAP),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn arity_mismatch_rejected() {
        let f5 = f(5);
        let spec = fixture("compose-demo", &f5).unwrap();
        let tuple = SpecTuple::new(vec![f5.one()]);
        assert!(matches!(
            specialize(&spec, &tuple),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn capelli_examples_f3() {
        let f3 = f(3);
        // x⁴ + 1 factors over F_3, so (x²+1)∘(x²) is not irreducible.
        let fq = Poly::from_ints(&f3, &[1, 0, 1]);
        let g_sq = Poly::from_ints(&f3, &[0, 0, 1]);
        assert!(!capelli_irreducible(&fq, &g_sq).unwrap());
        // (x²+1)∘(x²+x) is irreducible over F_3.
        let g_sx = Poly::from_ints(&f3, &[0, 1, 1]);
        assert!(capelli_irreducible(&fq, &g_sx).unwrap());
        // Reducible outer polynomial always fails.
        let reducible = Poly::from_ints(&f3, &[2, 0, 1]); // x²+2 = (x+1)(x+2)
        assert!(!capelli_irreducible(&reducible, &g_sq).unwrap());
    }

    #[test]
    fn capelli_agrees_with_direct_factorization() {
        for p in [3u64, 5, 7] {
            let field = f(p);
            let mut rng = SplitMix64::new(p);
            for _ in 0..60 {
                let df = 1 + rng.next_below(3) as usize;
                let dg = 1 + rng.next_below(3) as usize;
                let mut fc: Vec<FieldElem> =
                    (0..df).map(|_| field.sample(&mut rng)).collect();
                fc.push(field.one());
                let mut gc: Vec<FieldElem> =
                    (0..dg).map(|_| field.sample(&mut rng)).collect();
                gc.push(field.one());
                let fp = Poly::from_coeffs(field.clone(), fc);
                let gp = Poly::from_coeffs(field.clone(), gc);
                let via_capelli = capelli_irreducible(&fp, &gp).unwrap();
                let direct = poly::is_irreducible(&fp.compose(&gp).unwrap()).unwrap();
                assert_eq!(via_capelli, direct, "p={p} f={fp:?} g={gp:?}");
            }
        }
    }

    #[test]
    fn separability_examples() {
        let f5 = f(5);
        assert!(separability_check(&Poly::from_ints(&f5, &[1, 1, 0, 1])).unwrap());
        let f7 = f(7);
        assert!(!separability_check(&Poly::from_ints(&f7, &[1, 2, 1])).unwrap());
        // t⁵ + 1 over F_5: derivative vanishes identically.
        assert!(!separability_check(&Poly::from_ints(&f5, &[1, 0, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn validate_compose_demo() {
        let f101 = f(101);
        let spec = fixture("compose-demo", &f101).unwrap();
        let report = validate_family(&spec).unwrap();
        assert!(report.separable_in_x);
        assert!(matches!(
            report.irreducible_in_x,
            IrreducibilityCertificate::Certified(_)
        ));
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn validate_x2_minus_t_char2_inseparable() {
        let f2 = f(2);
        let minus_t = Poly::x(&f2).scale(&f2.from_i64(-1)).unwrap();
        let biv = BivariatePoly::new(
            f2.clone(),
            vec![minus_t, Poly::zero(&f2), Poly::one(&f2)],
        )
        .unwrap();
        let spec = FamilySpec::new(biv, GenericTemplate::new(2, vec![0, 1]).unwrap()).unwrap();
        let report = validate_family(&spec).unwrap();
        assert!(!report.separable_in_x);
    }

    #[test]
    fn validate_identity_family_trivial() {
        let f101 = f(101);
        let spec = fixture("quad-generic", &f101).unwrap();
        let report = validate_family(&spec).unwrap();
        assert!(report.separable_in_x);
        assert_eq!(
            report.irreducible_in_x,
            IrreducibilityCertificate::Certified(0)
        );
        // r = 2 ≤ 3 is flagged.
        assert!(report
            .warnings
            .contains(&HypothesisWarning::SmallComposedDegree));
    }

    #[test]
    fn validate_warns_on_hypothesis_violations() {
        let f2k = FieldDescriptor::make(2, 3).unwrap();
        let spec = fixture("serre-psl32", &f2k).unwrap();
        let report = validate_family(&spec).unwrap();
        assert!(report
            .warnings
            .contains(&HypothesisWarning::SmallCharacteristic));
        assert!(report
            .warnings
            .contains(&HypothesisWarning::ConstantTermNotFree));
    }

    #[test]
    fn non_monic_in_x_rejected() {
        let f5 = f(5);
        let out = BivariatePoly::new(
            f5.clone(),
            vec![Poly::zero(&f5), Poly::from_ints(&f5, &[2])],
        );
        assert_eq!(out.unwrap_err(), Error::NotMonicInX);
    }

    #[test]
    fn template_support_validation() {
        assert!(GenericTemplate::new(3, vec![0, 1]).is_ok());
        assert!(GenericTemplate::new(3, vec![1, 0]).is_err());
        assert!(GenericTemplate::new(3, vec![0, 3]).is_err());
        assert!(GenericTemplate::new(1, vec![0]).is_ok());
        assert!(GenericTemplate::new(1, vec![1]).is_err());
        assert!(GenericTemplate::new(3, vec![]).is_err());
    }

    #[test]
    fn ramified_fraction_shrinks_with_field_size() {
        // The non-squarefree locus is a proper subvariety, so its density
        // drops as q grows.
        let count_ramified = |q: u64| -> (u64, u64) {
            let field = f(q);
            let spec = fixture("compose-demo", &field).unwrap();
            let mut ram = 0;
            let mut total = 0;
            for i in 0..q {
                for j in 0..q {
                    let tuple = SpecTuple::new(vec![
                        field.elem_by_index(i),
                        field.elem_by_index(j),
                    ]);
                    let p = specialize(&spec, &tuple).unwrap();
                    if !p.is_squarefree_separable().unwrap() {
                        ram += 1;
                    }
                    total += 1;
                }
            }
            (ram, total)
        };
        let (ram_small, total_small) = count_ramified(11);
        let (ram_big, total_big) = count_ramified(101);
        let frac_small = ram_small as f64 / total_small as f64;
        let frac_big = ram_big as f64 / total_big as f64;
        assert!(
            frac_big < frac_small,
            "ramified fraction should shrink: {frac_small} vs {frac_big}"
        );
    }
}
