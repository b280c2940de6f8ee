//! Property tests for the polynomial ring layer.

use cyclotype_core::field::FieldDescriptor;
use cyclotype_core::poly::Poly;

use proptest::prelude::*;

fn arb_field() -> impl Strategy<Value = FieldDescriptor> {
    prop_oneof![
        Just(FieldDescriptor::make(2, 1).unwrap()),
        Just(FieldDescriptor::make(5, 1).unwrap()),
        Just(FieldDescriptor::make(101, 1).unwrap()),
        Just(FieldDescriptor::make(3, 2).unwrap()),
        Just(FieldDescriptor::make(2, 3).unwrap()),
    ]
}

fn arb_poly(field: FieldDescriptor) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(0u64..1_000, 0..8).prop_map(move |raw| {
        let coeffs = raw.iter().map(|&v| field.from_u64(v)).collect();
        Poly::from_coeffs(field.clone(), coeffs)
    })
}

fn arb_field_polys(n: usize) -> impl Strategy<Value = Vec<Poly>> {
    arb_field().prop_flat_map(move |field| {
        proptest::collection::vec(arb_poly(field.clone()), n)
    })
}

proptest! {
    #[test]
    fn ring_distributivity(polys in arb_field_polys(3)) {
        let (f, g, h) = (&polys[0], &polys[1], &polys[2]);
        let lhs = f.add(g).unwrap().mul(h).unwrap();
        let rhs = f.mul(h).unwrap().add(&g.mul(h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divrem_reconstructs(polys in arb_field_polys(2)) {
        let (f, g) = (&polys[0], &polys[1]);
        prop_assume!(!g.is_zero());
        let (q, r) = f.divrem(g).unwrap();
        let back = q.mul(g).unwrap().add(&r).unwrap();
        prop_assert_eq!(&back, f);
        if let (Some(dr), Some(dg)) = (r.degree(), g.degree()) {
            prop_assert!(dr < dg);
        }
    }

    #[test]
    fn gcd_divides_both(polys in arb_field_polys(2)) {
        let (f, g) = (&polys[0], &polys[1]);
        prop_assume!(!f.is_zero() || !g.is_zero());
        let d = f.gcd(g).unwrap();
        prop_assert!(!d.is_zero());
        for input in [f, g] {
            if !input.is_zero() {
                let (_, r) = input.divrem(&d).unwrap();
                prop_assert!(r.is_zero());
            }
        }
    }

    #[test]
    fn compose_degrees_multiply(polys in arb_field_polys(2)) {
        let (f, g) = (&polys[0], &polys[1]);
        prop_assume!(f.degree().is_some_and(|d| d >= 1));
        prop_assume!(g.degree().is_some_and(|d| d >= 1));
        let c = f.compose(g).unwrap();
        prop_assert_eq!(
            c.degree(),
            Some(f.degree().unwrap() * g.degree().unwrap())
        );
    }

    #[test]
    fn derivative_is_linear(polys in arb_field_polys(2)) {
        let (f, g) = (&polys[0], &polys[1]);
        let lhs = f.add(g).unwrap().derivative();
        let rhs = f.derivative().add(&g.derivative()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
