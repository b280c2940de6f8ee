//! Field-axiom and structure checks across the standard test fields.

use cyclotype_core::field::FieldDescriptor;
use cyclotype_core::rng::SplitMix64;

fn test_fields() -> Vec<FieldDescriptor> {
    [(2, 1), (3, 1), (5, 1), (3, 2), (5, 2), (2, 8)]
        .into_iter()
        .map(|(p, nu)| FieldDescriptor::make(p, nu).unwrap())
        .collect()
}

#[test]
fn field_axioms_on_random_triples() {
    for field in test_fields() {
        let mut rng = SplitMix64::new(field.q());
        for _ in 0..10_000 {
            let a = field.sample(&mut rng);
            let b = field.sample(&mut rng);
            let c = field.sample(&mut rng);

            // Associativity and commutativity.
            let ab_c = field
                .add(&field.add(&a, &b).unwrap(), &c)
                .unwrap();
            let a_bc = field
                .add(&a, &field.add(&b, &c).unwrap())
                .unwrap();
            assert_eq!(ab_c, a_bc);
            assert_eq!(field.add(&a, &b).unwrap(), field.add(&b, &a).unwrap());
            let abc_left = field
                .mul(&field.mul(&a, &b).unwrap(), &c)
                .unwrap();
            let abc_right = field
                .mul(&a, &field.mul(&b, &c).unwrap())
                .unwrap();
            assert_eq!(abc_left, abc_right);
            assert_eq!(field.mul(&a, &b).unwrap(), field.mul(&b, &a).unwrap());

            // Distributivity.
            let lhs = field
                .mul(&a, &field.add(&b, &c).unwrap())
                .unwrap();
            let rhs = field
                .add(&field.mul(&a, &b).unwrap(), &field.mul(&a, &c).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);

            // Additive and multiplicative inverses.
            let neg = field.neg(&a).unwrap();
            assert!(field.add(&a, &neg).unwrap().is_zero());
            if !a.is_zero() {
                let inv = field.inv(&a).unwrap();
                assert_eq!(field.mul(&a, &inv).unwrap(), field.one());
                assert_eq!(field.div(&b, &a).unwrap(), field.mul(&b, &inv).unwrap());
            }
        }
    }
}

#[test]
fn frobenius_is_additive() {
    for field in test_fields() {
        let p = field.p();
        let mut rng = SplitMix64::new(p + 17);
        for _ in 0..2_000 {
            let a = field.sample(&mut rng);
            let b = field.sample(&mut rng);
            let sum_pow = field
                .pow(&field.add(&a, &b).unwrap(), p as u128)
                .unwrap();
            let pow_sum = field
                .add(
                    &field.pow(&a, p as u128).unwrap(),
                    &field.pow(&b, p as u128).unwrap(),
                )
                .unwrap();
            assert_eq!(sum_pow, pow_sum);
        }
    }
}

#[test]
fn enumeration_is_exact() {
    for field in test_fields() {
        let elems: std::collections::BTreeSet<_> = field.enumerate().collect();
        assert_eq!(elems.len() as u64, field.q());
    }
}

#[test]
fn multiplicative_group_has_full_order_element() {
    // Search for a generator of order q−1 (guaranteed: the group is cyclic).
    for field in test_fields() {
        let q = field.q();
        let order_divisors: Vec<u64> = (1..=q - 1).filter(|d| (q - 1) % d == 0).collect();
        let mut found = false;
        'outer: for i in 1..q {
            let g = field.elem_by_index(i);
            for &d in &order_divisors {
                if field.pow(&g, d as u128).unwrap() == field.one() {
                    if d == q - 1 {
                        found = true;
                        break 'outer;
                    }
                    break; // order is a proper divisor; try the next element
                }
            }
        }
        assert!(found, "no primitive element found in F_{q}");
    }
}

#[test]
fn make_field_is_reproducible_bytewise() {
    for (p, nu) in [(2u64, 8u32), (3, 2), (5, 2), (7, 1), (2, 11)] {
        let a = FieldDescriptor::make(p, nu).unwrap();
        let b = FieldDescriptor::make(p, nu).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}

#[test]
fn descriptor_roundtrips_through_serde() {
    let a = FieldDescriptor::make(3, 2).unwrap();
    let json = serde_json::to_string(&a).unwrap();
    let mut back: FieldDescriptor = serde_json::from_str(&json).unwrap();
    back.restore_cardinality(1 << 40).unwrap();
    assert_eq!(a, back);
    assert_eq!(back.q(), 9);
}
