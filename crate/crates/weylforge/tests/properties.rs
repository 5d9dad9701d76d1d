//! Property tests for the structural invariants: exact serialization
//! round-trips, reflection algebra, chamber projection, and norm axioms
//! under random inputs.

use proptest::prelude::*;
use weylforge::exact::{self, dot, format_q, parse_q, q, Q};
use weylforge::normforge::certify::CertifyOptions;
use weylforge::normforge::{build_product_norm, ProductSpec};
use weylforge::rootsys::{build_root_system, TypeLabel};
use weylforge::weylgrp::generate_weyl_group;

fn arb_q() -> impl Strategy<Value = Q> {
    (any::<i32>(), 1i32..10_000).prop_map(|(n, d)| q(n as i64, d as i64))
}

proptest! {
    #[test]
    fn rational_string_round_trip(x in arb_q()) {
        let s = format_q(&x);
        let back = parse_q(&s).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn reflection_is_isometric_involution(
        v in prop::collection::vec(-20i64..20, 3),
        a in prop::collection::vec(-5i64..5, 3),
    ) {
        let alpha = exact::qvec_from_i64(&a);
        prop_assume!(!exact::is_zero_vec(&alpha));
        let vv = exact::qvec_from_i64(&v);
        let rv = exact::reflect(&vv, &alpha);
        // involution
        prop_assert_eq!(exact::reflect(&rv, &alpha), vv.clone());
        // preserves the inner product with itself
        prop_assert_eq!(dot(&rv, &rv), dot(&vv, &vv));
        // negates alpha-component: <rv, a> = -<v, a>
        prop_assert_eq!(dot(&rv, &alpha), -dot(&vv, &alpha));
    }

    #[test]
    fn chamber_representative_is_dominant_and_orbit_constant(
        coords in prop::collection::vec(-9i64..9, 3),
        gens in prop::collection::vec(0usize..2, 0..6),
    ) {
        let b3 = generate_weyl_group(build_root_system(TypeLabel::B, 3).unwrap(), 1_000_000).unwrap();
        let v = exact::qvec_from_i64(&coords);
        let rep = b3.chamber_representative(&v);
        for s in b3.system.simple_roots() {
            prop_assert!(dot(&rep, s) >= Q::from_integer(0.into()));
        }
        // moving v around its orbit never changes the representative
        let mut moved = v.clone();
        for g in gens {
            moved = b3.apply_generator(g, &moved);
        }
        prop_assert_eq!(b3.chamber_representative(&moved), rep);
    }

    #[test]
    fn product_norm_axioms(
        x in prop::collection::vec(-3.0f64..3.0, 5),
        y in prop::collection::vec(-3.0f64..3.0, 5),
        t in 0.01f64..20.0,
    ) {
        let norm = build_product_norm(&ProductSpec {
            c1: 1.0,
            c2: 0.5,
            p: 3.0,
            dims: vec![2, 3],
            scales: None,
        }).unwrap();
        let lx = norm.evaluate(&x);
        let ly = norm.evaluate(&y);
        prop_assert!(lx >= 0.0);
        // homogeneity
        let tx: Vec<f64> = x.iter().map(|v| t * v).collect();
        prop_assert!((norm.evaluate(&tx) - t * lx).abs() <= 1e-10 * (1.0 + t * lx));
        // subadditivity
        let sum: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        prop_assert!(norm.evaluate(&sum) <= lx + ly + 1e-10);
        // fundamental tensor is zero-homogeneous: g(2x) = g(x)
        if lx > 1e-6 {
            let gx = norm.fundamental_tensor(&x).unwrap();
            let x2: Vec<f64> = x.iter().map(|v| 2.0 * v).collect();
            let gx2 = norm.fundamental_tensor(&x2).unwrap();
            for (a, b) in gx.iter().zip(&gx2) {
                prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
            }
        }
    }
}

#[test]
fn root_system_json_round_trip_is_exact_for_all_types() {
    for (label, rank) in [
        (TypeLabel::A, 3),
        (TypeLabel::B, 3),
        (TypeLabel::C, 3),
        (TypeLabel::BC, 2),
        (TypeLabel::D, 4),
        (TypeLabel::F4, 4),
        (TypeLabel::G2, 2),
        (TypeLabel::E6, 6),
    ] {
        let rs = build_root_system(label, rank).unwrap();
        let json = serde_json::to_string(&rs.to_json_value()).unwrap();
        let parsed: weylforge::rootsys::RootSystemJson = serde_json::from_str(&json).unwrap();
        let back = weylforge::rootsys::RootSystem::from_json_value(&parsed).unwrap();
        assert_eq!(back.roots, rs.roots);
        assert_eq!(back.fundamental_weights, rs.fundamental_weights);
    }
}

#[test]
fn e7_generators_build_in_generator_only_mode() {
    // the orbit power-sum representation keeps cost at orbit size, so the
    // generator set of the 2.9M-element group builds without enumeration
    let system = build_root_system(TypeLabel::E7, 7).unwrap();
    let group = generate_weyl_group(system, 1).unwrap();
    assert!(!group.is_enumerated());
    let gens = weylforge::invariants::homogeneous_generators(&group).unwrap();
    assert_eq!(
        gens.iter().map(|g| g.degree).collect::<Vec<_>>(),
        weylforge::invariants::chevalley_degrees(TypeLabel::E7, 7).unwrap()
    );
    // exact invariance spot check under the first and last generators
    let points = weylforge::invariants::rational_span_points(&group, 3, 17);
    for p in &gens {
        for h in &points {
            let val = p.eval_q(h);
            for g in [0, 6] {
                assert_eq!(p.eval_q(&group.apply_generator(g, h)), val);
            }
        }
    }
}

#[test]
fn certificates_are_seed_deterministic() {
    let norm = build_product_norm(&ProductSpec {
        c1: 1.0,
        c2: 1.0,
        p: 2.0,
        dims: vec![2, 2],
        scales: None,
    })
    .unwrap();
    let opts = CertifyOptions {
        per_pair: 256,
        random: 512,
        seed: 99,
        ..Default::default()
    };
    let a = norm.certify(&opts);
    let b = norm.certify(&opts);
    assert_eq!(weylforge::jsonfmt::to_string(&a).unwrap(), weylforge::jsonfmt::to_string(&b).unwrap());
}
