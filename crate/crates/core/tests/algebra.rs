//! Algebra-layer checks: parsing, differentiation, weight systems, Milnor
//! numbers and root enumeration, with the invariants run under proptest.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use stratlab_core::algebra::{
    milnor_orlik, nth_roots, parse_polynomial, quasihomogeneous_weights, weighted_euler,
    ApproxComplex, BigReal, Coeff, ExactComplex, MultiPoly, RootInput, WeightSystem,
};

const BS364: &str = "x^5 + t*x*y^6 + y^7*z + z^15";
const VARS4: [&str; 4] = ["x", "y", "z", "t"];

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn parse_bs364_has_four_unit_terms() {
    let p = parse_polynomial(BS364, &VARS4).unwrap();
    assert_eq!(p.num_terms(), 4);
    for (_, c) in p.terms() {
        assert_eq!(*c, ExactComplex::one());
    }
    let map: Vec<_> = p.terms().map(|(e, _)| e.clone()).collect();
    assert!(map.contains(&vec![5, 0, 0, 0]));
    assert!(map.contains(&vec![1, 6, 0, 1]));
    assert!(map.contains(&vec![0, 7, 1, 0]));
    assert!(map.contains(&vec![0, 0, 15, 0]));
}

#[test]
fn parse_zero_is_empty() {
    let p = parse_polynomial("0", &VARS4).unwrap();
    assert!(p.is_zero());
}

#[test]
fn parse_imaginary_coefficient() {
    let p = parse_polynomial("x^2 - i*y", &["x", "y"]).unwrap();
    assert_eq!(p.num_terms(), 2);
    let mut found_x2 = false;
    let mut found_y = false;
    for (e, c) in p.terms() {
        match e.as_slice() {
            [2, 0] => {
                assert_eq!(*c, ExactComplex::one());
                found_x2 = true;
            }
            [0, 1] => {
                assert_eq!(*c, ExactComplex::i().neg());
                found_y = true;
            }
            _ => panic!("unexpected term {e:?}"),
        }
    }
    assert!(found_x2 && found_y);
}

#[test]
fn parse_reports_positions() {
    let err = parse_polynomial("x^2 + w", &["x", "y"]).unwrap_err();
    assert_eq!(err.pos, 6);
    assert!(err.msg.contains("unknown variable"));
    let err = parse_polynomial("x^", &["x"]).unwrap_err();
    assert_eq!(err.pos, 2);
}

#[test]
fn parse_complex_paren_coefficients() {
    let p = parse_polynomial("(1+2i)*x + (3/2-i)*y + 2i", &["x", "y"]).unwrap();
    let coeff_of = |exps: &[u32]| {
        p.terms()
            .find(|(e, _)| e.as_slice() == exps)
            .map(|(_, c)| c.clone())
            .unwrap()
    };
    assert_eq!(
        coeff_of(&[1, 0]),
        ExactComplex::new(rational(1, 1), rational(2, 1))
    );
    assert_eq!(
        coeff_of(&[0, 1]),
        ExactComplex::new(rational(3, 2), rational(-1, 1))
    );
    assert_eq!(
        coeff_of(&[0, 0]),
        ExactComplex::new(rational(0, 1), rational(2, 1))
    );
}

#[test]
fn derivative_matches_hand_computation() {
    let p = parse_polynomial(BS364, &VARS4).unwrap();
    let px = p.differentiate("x").unwrap();
    let expected = parse_polynomial("5*x^4 + t*y^6", &VARS4).unwrap();
    assert_eq!(px, expected);

    let pz = p.differentiate("z").unwrap();
    let expected = parse_polynomial("y^7 + 15*z^14", &VARS4).unwrap();
    assert_eq!(pz, expected);

    let c = parse_polynomial("7", &VARS4).unwrap();
    assert!(c.differentiate("x").unwrap().is_zero());

    assert!(p.differentiate("nope").is_err());
}

#[test]
fn quasihomogeneous_weights_of_corpus_families() {
    let p = parse_polynomial(BS364, &VARS4).unwrap();
    let ws = quasihomogeneous_weights(&p, Some("t")).unwrap();
    assert_eq!(ws.weights, vec![3, 2, 1]);
    assert_eq!(ws.degree, 15);
    assert_eq!(ws.param_weight, 0);

    // x^3 + t*x*y^a + y^b*z + z^(3a) with a = 3
    let p = parse_polynomial("x^3 + t*x*y^3 + y^4*z + z^9", &VARS4).unwrap();
    let ws = quasihomogeneous_weights(&p, Some("t")).unwrap();
    assert_eq!(ws.weights, vec![3, 2, 1]);
    assert_eq!(ws.degree, 9);
}

#[test]
fn non_quasihomogeneous_family_is_absent() {
    // independent oracle: the weight system x6/y5/z12 forced by the pure
    // powers fails on the mixed term, so the linear system has no solution
    let p = parse_polynomial("z^12 + z*y^3*x + t*y^2*x^3 + x^6 + y^5", &VARS4).unwrap();
    assert!(quasihomogeneous_weights(&p, Some("t")).is_none());
}

#[test]
fn milnor_orlik_reproduces_family_values() {
    assert_eq!(milnor_orlik(&WeightSystem::new(vec![3, 2, 1], 15)).unwrap(), 364);
    assert_eq!(milnor_orlik(&WeightSystem::new(vec![3, 2, 1], 9)).unwrap(), 56);
    // (a,2,1;3a) gives (3a-1)(3a-2); a = 5
    assert_eq!(milnor_orlik(&WeightSystem::new(vec![5, 2, 1], 15)).unwrap(), 182);
    assert_eq!(milnor_orlik(&WeightSystem::new(vec![1, 1, 1], 2)).unwrap(), 1);
    assert!(milnor_orlik(&WeightSystem::new(vec![3, 2, 16], 15)).is_err());
}

#[test]
fn nth_roots_of_minus_eight() {
    let roots = nth_roots(&RootInput::Exact(ExactComplex::from_integer(-8)), 16).unwrap();
    assert_eq!(roots.len(), 16);
    // closed-form oracle: modulus 8^(1/16), arguments pi(2k+1)/16
    let expected_modulus = 8f64.powf(1.0 / 16.0);
    for (k, root) in roots.iter().enumerate() {
        let (re, im) = root.value.to_f64_pair();
        let arg = std::f64::consts::PI * (2.0 * k as f64 + 1.0) / 16.0;
        assert!((re - expected_modulus * arg.cos()).abs() < 1e-12);
        assert!((im - expected_modulus * arg.sin()).abs() < 1e-12);
        let q = root.angle_pi.as_ref().unwrap();
        assert_eq!(q, &rational(2 * k as i64 + 1, 16));
        assert_eq!(format!("{}", root.modulus), "8^(1/16)");
        assert!(root.residual.to_f64() < 1e-12);
    }
}

#[test]
fn fourth_roots_of_unity() {
    let roots = nth_roots(&RootInput::Exact(ExactComplex::one()), 4).unwrap();
    let got: Vec<(f64, f64)> = roots.iter().map(|r| r.value.to_f64_pair()).collect();
    let expected = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
    for ((gr, gi), (er, ei)) in got.iter().zip(expected) {
        assert!((gr - er).abs() < 1e-25 && (gi - ei).abs() < 1e-25);
    }
}

#[test]
fn tenth_roots_of_minus_two() {
    let roots = nth_roots(&RootInput::Exact(ExactComplex::from_integer(-2)), 10).unwrap();
    assert_eq!(roots.len(), 10);
    for root in &roots {
        assert!(root.residual.to_f64() < 1e-12);
        let v = root.value.powi(10);
        let (re, im) = v.to_f64_pair();
        assert!((re + 2.0).abs() < 1e-20 && im.abs() < 1e-20);
    }
}

#[test]
fn root_error_cases() {
    assert!(nth_roots(&RootInput::Exact(ExactComplex::zero()), 4).is_err());
    assert!(nth_roots(&RootInput::Exact(ExactComplex::one()), 0).is_err());
}

#[test]
fn roots_of_general_complex_value() {
    let v = ExactComplex::new(rational(3, 1), rational(4, 1));
    let roots = nth_roots(&RootInput::Exact(v), 5).unwrap();
    for root in &roots {
        assert!(root.residual.to_f64() < 1e-12);
        assert!(root.angle_pi.is_none());
        // |root| = 5^(1/5); modulus descriptor is (25)^(1/10)
        assert_eq!(root.modulus.degree, 10);
        assert_eq!(root.modulus.radicand, rational(25, 1));
    }
}

#[test]
fn evaluate_simple_points() {
    let p = parse_polynomial("x^2 + y^2", &["x", "y"]).unwrap().to_approx();
    let point = [
        ApproxComplex::from_f64_pair(3.0, 0.0),
        ApproxComplex::from_f64_pair(4.0, 0.0),
    ];
    let out = p.evaluate_at(&point);
    assert!((out.value.to_f64_pair().0 - 25.0).abs() < 1e-20);

    let q = parse_polynomial("x - y", &["x", "y"]).unwrap().to_approx();
    let c = ApproxComplex::from_f64_pair(0.7311, -0.25);
    let out = q.evaluate_at(&[c.clone(), c]);
    // symmetric point: exact cancellation within the error bound
    assert!(out.value.modulus_sq().to_f64() <= out.error_bound.to_f64().powi(2).max(1e-60));
}

#[test]
fn evaluate_unbound_variable_errors() {
    let p = parse_polynomial("x + y", &["x", "y"]).unwrap().to_approx();
    let mut point = std::collections::BTreeMap::new();
    point.insert("x".to_string(), ApproxComplex::one());
    assert!(p.evaluate(&point).is_err());
}

fn arb_exact() -> impl Strategy<Value = ExactComplex> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, c, d)| ExactComplex::new(rational(a, b), rational(c, d)))
}

fn arb_poly3() -> impl Strategy<Value = MultiPoly<ExactComplex>> {
    proptest::collection::vec(
        (
            proptest::collection::vec(0u32..5, 3),
            arb_exact(),
        ),
        0..6,
    )
    .prop_map(|terms| {
        MultiPoly::from_terms(&["x", "y", "t"], terms.into_iter().map(|(e, c)| (e, c)))
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(p in arb_poly3()) {
        let text = format!("{p}");
        let back = parse_polynomial(&text, &["x", "y", "t"]).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn differentiation_is_linear(p in arb_poly3(), q in arb_poly3()) {
        let sum = p.add(&q).unwrap();
        let lhs = sum.differentiate("y").unwrap();
        let rhs = p.differentiate("y").unwrap().add(&q.differentiate("y").unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_rule_holds(p in arb_poly3(), q in arb_poly3()) {
        let prod = p.mul(&q).unwrap();
        let lhs = prod.differentiate("x").unwrap();
        let rhs = p.differentiate("x").unwrap().mul(&q).unwrap()
            .add(&p.mul(&q.differentiate("x").unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// Euler identity on the corpus families: `sum w_i x_i dF/dx_i = d * F`.
#[test]
fn euler_identity_on_corpus_families() {
    let families: [(&str, [&str; 4]); 4] = [
        (BS364, VARS4),
        ("x^3 + t*x*y^3 + y^4*z + z^9", VARS4),
        ("x^3 + t*x*y^5 + y^7*z + z^15", VARS4),
        ("x^3 + t*x*y^7 + y^10*z + z^21", VARS4),
    ];
    for (text, vars) in families {
        let p = parse_polynomial(text, &vars).unwrap();
        let ws = quasihomogeneous_weights(&p, Some("t")).unwrap();
        let euler = weighted_euler(&p, &ws, Some("t")).unwrap();
        let scaled = p.scale(&ExactComplex::from_integer(ws.degree as i64));
        assert_eq!(euler, scaled, "Euler identity fails for {text}");
        // and the Milnor number is a positive integer
        assert!(milnor_orlik(&ws).unwrap() > 0);
    }
}

#[test]
fn exact_modulus_is_exact() {
    let c = ExactComplex::new(rational(3, 7), rational(-2, 5));
    // (3/7)^2 + (2/5)^2 = 9/49 + 4/25 = 421/1225
    assert_eq!(c.modulus_sq(), rational(421, 1225));
}

#[test]
fn bigreal_roundtrips_rationals() {
    let r = rational(-355, 113);
    let x = BigReal::from_rational(&r);
    assert!((x.to_f64() + 355.0 / 113.0).abs() < 1e-12);
    assert!(BigReal::from_rational(&BigRational::zero()).is_zero());
    assert!(x.is_negative());
    assert!(x.abs().to_f64() > 0.0);
}
