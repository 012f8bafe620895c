//! Regularity-layer checks: limit verdicts, directions, the valuation
//! test, sines and spirals, cross-checked against hand-expanded leading
//! terms and numeric sampling.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use stratlab_core::algebra::{
    nth_roots, parse_polynomial, ApproxComplex, BigReal, Coeff, ExactComplex, MultiPoly,
    RootInput,
};
use stratlab_core::regularity::{
    analyze_arc, limit_direction, limit_ratio_a, limit_ratio_delta, numeric_trace_rows,
    probe_ring_max, sine_subspace_subspace, sine_vector_subspace, spiral_angle,
    valuation_equivalence_check, CircleArc, DirectionClass, ExpSqrtSpiral, LimitOutcome,
    LogSpiral, PairingConvention, SineError,
};
use stratlab_core::series::{refine_onto_hypersurface, Arc, TruncSeries, Valuation};

const VARS4: [&str; 4] = ["x", "y", "z", "t"];
const SPATIAL: [&str; 3] = ["x", "y", "z"];

fn int(n: i64) -> ExactComplex {
    ExactComplex::from_integer(n)
}

fn mono(e: u32, c: i64, trunc: u32) -> TruncSeries<ExactComplex> {
    TruncSeries::monomial(e, int(c), trunc)
}

fn bs364() -> MultiPoly<ExactComplex> {
    parse_polynomial("x^5 + t*x*y^6 + y^7*z + z^15", &VARS4).unwrap()
}

/// The unit-coefficient failure-shaped arc, refined onto the surface.
fn refined_unit_arc(target: u32) -> Arc<ExactComplex> {
    let arc = Arc::new(
        "s",
        vec![
            ("x".into(), mono(8, 1, 400)),
            ("y".into(), mono(5, 1, 400)),
            ("z".into(), mono(5, 4, 400)),
            ("t".into(), mono(2, -5, 400)),
        ],
    )
    .unwrap();
    refine_onto_hypersurface(&bs364(), &arc, "z", target).unwrap()
}

#[test]
fn condition_a_holds_along_unit_failure_arc() {
    let arc = refined_unit_arc(120);
    let out = limit_ratio_a(&bs364(), &arc, &SPATIAL, "t").unwrap();
    // val(dF/dt . arc) = 38 > val(grad_x) = 35
    assert!(out.is_zero(), "expected Zero, got {out}");
}

#[test]
fn condition_a_fails_along_real_example_arc() {
    // family y^20 = t^4 x^6 + x^10; arc (u^2, 2^(1/20) u, u^2)
    let h = parse_polynomial("y^20 - t^4*x^6 - x^10", &["x", "y", "t"]).unwrap();
    let ha = h.to_approx();
    let c = nth_roots(&RootInput::Exact(int(2)), 20).unwrap()[0].value.clone();
    let arc = Arc::new(
        "u",
        vec![
            (
                "x".into(),
                TruncSeries::monomial(2, ApproxComplex::one(), 200),
            ),
            ("y".into(), TruncSeries::monomial(1, c, 200)),
            (
                "t".into(),
                TruncSeries::monomial(2, ApproxComplex::one(), 200),
            ),
        ],
    )
    .unwrap();
    let out = limit_ratio_a(&ha, &arc, &["x", "y"], "t").unwrap();
    // dF/dt = -4 u^18 while grad -> -16 u^18: the ratio tends to 1/4
    let v = out.finite_value().expect("finite limit");
    assert!((v - 0.25).abs() < 1e-12, "got {v}");
}

#[test]
fn condition_a_trivial_when_f_ignores_parameter() {
    let f = parse_polynomial("x^2 + y^2", &["x", "y", "t"]).unwrap();
    let arc = Arc::new(
        "s",
        vec![
            ("x".into(), TruncSeries::monomial(1, int(1), 100)),
            ("y".into(), TruncSeries::monomial(1, ExactComplex::i(), 100)),
            ("t".into(), TruncSeries::monomial(1, int(1), 100)),
        ],
    )
    .unwrap();
    let out = limit_ratio_a(&f, &arc, &["x", "y"], "t").unwrap();
    assert!(out.is_zero());
}

#[test]
fn delta_limits_along_unit_arc_are_two_over_sqrt85() {
    // leading vectors (0, 1, 4) and (0, -2, 1): |(-2) + 4| / (sqrt17 sqrt5)
    let arc = refined_unit_arc(120);
    let f = bs364();
    for pairing in [PairingConvention::Bilinear, PairingConvention::Hermitian] {
        let out = limit_ratio_delta(&f, &arc, &SPATIAL, pairing).unwrap();
        match out {
            LimitOutcome::Finite { value, value_sq } => {
                assert!((value - 2.0 / 85f64.sqrt()).abs() < 1e-12, "{pairing}: {value}");
                assert_eq!(
                    value_sq.unwrap(),
                    BigRational::new(BigInt::from(4), BigInt::from(85)),
                    "{pairing}"
                );
            }
            other => panic!("{pairing}: expected Finite, got {other}"),
        }
    }
}

/// An on-surface arc with val(t) >= val(X): the (b^pi) quotient vanishes.
fn high_parameter_arc() -> Arc<ExactComplex> {
    let arc = Arc::new(
        "s",
        vec![
            ("x".into(), mono(3, 1, 300)),
            ("y".into(), mono(1, 1, 300)),
            ("z".into(), TruncSeries::zero(300)),
            ("t".into(), mono(3, 1, 300)),
        ],
    )
    .unwrap();
    refine_onto_hypersurface(&bs364(), &arc, "z", 150).unwrap()
}

#[test]
fn delta_limit_vanishes_when_parameter_dominates() {
    let arc = high_parameter_arc();
    let out = limit_ratio_delta(&bs364(), &arc, &SPATIAL, PairingConvention::Bilinear).unwrap();
    assert!(out.is_zero(), "got {out}");
}

#[test]
fn secant_and_normal_directions_along_unit_arc() {
    let arc = refined_unit_arc(120);
    let spatial: Vec<_> = SPATIAL
        .iter()
        .map(|v| arc.component(v).unwrap().clone())
        .collect();
    let secant = limit_direction(&spatial).unwrap();
    let expected = DirectionClass::new(vec![int(0), int(1), int(4)]).unwrap();
    assert!(secant.approx_eq(&expected, 1e-12));

    let f = bs364();
    let grad: Vec<_> = SPATIAL
        .iter()
        .map(|v| {
            stratlab_core::series::compose(&f.differentiate(v).unwrap(), &arc).unwrap()
        })
        .collect();
    let normal = limit_direction(&grad).unwrap();
    let expected = DirectionClass::new(vec![int(0), int(-2), int(1)]).unwrap();
    assert!(normal.approx_eq(&expected, 1e-12));
}

#[test]
fn single_component_direction_is_an_axis() {
    let comps = vec![
        TruncSeries::zero(50),
        mono(3, 7, 50),
        TruncSeries::zero(50),
    ];
    let d = limit_direction(&comps).unwrap();
    let expected = DirectionClass::new(vec![int(0), int(1), int(0)]).unwrap();
    assert_eq!(d, expected);
}

#[test]
fn valuation_test_on_unit_failure_arc() {
    let arc = refined_unit_arc(130);
    let eq = valuation_equivalence_check(&bs364(), &arc, &SPATIAL, "t", 120).unwrap();
    // val(sum x_i dF/dx_i) = 40 is NOT greater than val(X) + val(J) = 5 + 35
    assert!(!eq.ineq1);
    // val(t) + val(dF/dt) = 2 + 38 = 40, also not greater
    assert!(!eq.ineq2);
    assert!(eq.agree);
    let lookup = |label: &str| {
        eq.table
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| *v)
            .unwrap()
    };
    assert_eq!(lookup("val(X)"), Valuation::Finite(5));
    assert_eq!(lookup("val(J_X F)"), Valuation::Finite(35));
    assert_eq!(lookup("val(sum x_i dF/dx_i)"), Valuation::Finite(40));
    assert_eq!(lookup("val(t)"), Valuation::Finite(2));
    assert_eq!(lookup("val(dF/dt)"), Valuation::Finite(38));
}

#[test]
fn valuation_test_when_parameter_dominates() {
    let arc = high_parameter_arc();
    let eq = valuation_equivalence_check(&bs364(), &arc, &SPATIAL, "t", 120).unwrap();
    assert!(eq.ineq1 && eq.ineq2 && eq.agree);
}

#[test]
fn valuation_test_on_smooth_controls() {
    // F = x*y - t^4 along (s, s^3, s): both inequalities hold
    let f = parse_polynomial("x*y - t^4", &["x", "y", "t"]).unwrap();
    let arc = Arc::new(
        "s",
        vec![
            ("x".into(), mono(1, 1, 200)),
            ("y".into(), mono(3, 1, 200)),
            ("t".into(), mono(1, 1, 200)),
        ],
    )
    .unwrap();
    let eq = valuation_equivalence_check(&f, &arc, &["x", "y"], "t", 150).unwrap();
    assert!(eq.ineq1 && eq.ineq2 && eq.agree);

    // F = x + t along (-s, s): the secant pairing survives at leading
    // order, so both inequalities fail, and they still agree
    let f = parse_polynomial("x + t", &["x", "t"]).unwrap();
    let arc = Arc::new(
        "s",
        vec![("x".into(), mono(1, -1, 200)), ("t".into(), mono(1, 1, 200))],
    )
    .unwrap();
    let eq = valuation_equivalence_check(&f, &arc, &["x"], "t", 150).unwrap();
    assert!(!eq.ineq1 && !eq.ineq2 && eq.agree);
}

#[test]
fn valuation_test_rejects_off_surface_arcs() {
    let arc = Arc::new(
        "s",
        vec![
            ("x".into(), mono(1, 1, 200)),
            ("y".into(), mono(1, 1, 200)),
            ("z".into(), mono(1, 1, 200)),
            ("t".into(), mono(1, 1, 200)),
        ],
    )
    .unwrap();
    assert!(valuation_equivalence_check(&bs364(), &arc, &SPATIAL, "t", 120).is_err());
}

#[test]
fn pairing_conventions_agree_on_real_leading_data() {
    // real-coefficient arcs: the two conventions produce the same outcome
    let f = bs364();
    let cases: Vec<Arc<ExactComplex>> = vec![refined_unit_arc(120), high_parameter_arc()];
    for arc in cases {
        let b = limit_ratio_delta(&f, &arc, &SPATIAL, PairingConvention::Bilinear).unwrap();
        let h = limit_ratio_delta(&f, &arc, &SPATIAL, PairingConvention::Hermitian).unwrap();
        match (&b, &h) {
            (LimitOutcome::Zero, LimitOutcome::Zero) => {}
            (
                LimitOutcome::Finite { value: vb, .. },
                LimitOutcome::Finite { value: vh, .. },
            ) => assert!((vb - vh).abs() < 1e-12),
            other => panic!("outcomes disagree: {other:?}"),
        }
    }
}

#[test]
fn limit_outcomes_are_reparametrization_invariant() {
    let f = bs364();
    let arc = refined_unit_arc(120);
    for k in [2u32, 3] {
        let ra = arc.reparam(k);
        assert!(limit_ratio_a(&f, &ra, &SPATIAL, "t").unwrap().is_zero());
        let before = limit_ratio_delta(&f, &arc, &SPATIAL, PairingConvention::Hermitian)
            .unwrap()
            .finite_value()
            .unwrap();
        let after = limit_ratio_delta(&f, &ra, &SPATIAL, PairingConvention::Hermitian)
            .unwrap()
            .finite_value()
            .unwrap();
        assert!((before - after).abs() < 1e-12);
    }
}

// ---------------------------------------------------------------------
// sine calculus

#[test]
fn sine_vector_subspace_basics() {
    let t = vec![vec![1.0, 0.0, 0.0]];
    assert!(sine_vector_subspace(&[2.0, 0.0, 0.0], &t).unwrap() < 1e-15);
    assert!((sine_vector_subspace(&[0.0, 3.0, 0.0], &t).unwrap() - 1.0).abs() < 1e-15);
    let s = sine_vector_subspace(&[1.0, 1.0, 0.0], &t).unwrap();
    assert!((s - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
    assert_eq!(
        sine_vector_subspace(&[0.0, 0.0, 0.0], &t),
        Err(SineError::ZeroVector)
    );
    let dep = vec![vec![1.0, 0.0, 0.0], vec![2.0, 0.0, 0.0]];
    assert_eq!(
        sine_vector_subspace(&[0.0, 1.0, 0.0], &dep),
        Err(SineError::DependentBasis)
    );
}

#[test]
fn sine_subspace_subspace_basics() {
    let t = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
    let s_inside = vec![vec![1.0, 1.0, 0.0]];
    assert!(sine_subspace_subspace(&s_inside, &t).unwrap() < 1e-14);
    let s_orth = vec![vec![0.0, 0.0, 1.0]];
    assert!((sine_subspace_subspace(&s_orth, &t).unwrap() - 1.0).abs() < 1e-14);
}

#[test]
fn dihedral_planes_have_sine_of_dihedral_angle() {
    // oracle: the angle between the planes' normals
    for phi in [0.1, 0.45, 1.0, std::f64::consts::FRAC_PI_2] {
        let s = vec![vec![1.0, 0.0, 0.0], vec![0.0, phi.cos(), phi.sin()]];
        let t = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
        let got = sine_subspace_subspace(&s, &t).unwrap();
        // oracle: sine of the angle between the plane normals
        let n_s = [0.0, -phi.sin(), phi.cos()];
        let n_t = [0.0, 0.0, 1.0];
        let cx = n_s[1] * n_t[2] - n_s[2] * n_t[1];
        let cy = n_s[2] * n_t[0] - n_s[0] * n_t[2];
        let cz = n_s[0] * n_t[1] - n_s[1] * n_t[0];
        let oracle = (cx * cx + cy * cy + cz * cz).sqrt();
        assert!((got - oracle).abs() < 1e-12, "phi={phi}: {got} vs {oracle}");
        assert!((got - phi.sin()).abs() < 1e-12);
    }
}

#[test]
fn sine_triangle_inequality_on_random_triples() {
    // deterministic pseudo-random triples
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    };
    for _ in 0..200 {
        let v: Vec<Vec<f64>> = (0..3)
            .map(|_| (0..4).map(|_| next()).collect())
            .collect();
        if v.iter().any(|x| x.iter().map(|c| c * c).sum::<f64>() < 1e-3) {
            continue;
        }
        let sin01 = sine_vector_subspace(&v[0], &[v[1].clone()]).unwrap();
        let sin12 = sine_vector_subspace(&v[1], &[v[2].clone()]).unwrap();
        let sin02 = sine_vector_subspace(&v[0], &[v[2].clone()]).unwrap();
        assert!(sin02 <= sin01 + sin12 + 1e-12);
    }
}

// ---------------------------------------------------------------------
// spirals

#[test]
fn log_spiral_has_constant_secant_angle() {
    let beta = std::f64::consts::FRAC_PI_4;
    let spiral = LogSpiral { beta };
    for k in 0..10 {
        let t = -3.0 + 1.3 * k as f64;
        let s = spiral_angle(&spiral, t).unwrap();
        assert!((s - beta.sin()).abs() < 1e-12, "t={t}: {s}");
    }
}

#[test]
fn circle_secant_is_orthogonal_to_tangent() {
    let s = spiral_angle(&CircleArc { radius: 2.0 }, 0.37).unwrap();
    assert!((s - 1.0).abs() < 1e-14);
}

#[test]
fn flat_spiral_approaches_orthogonality() {
    let spiral = ExpSqrtSpiral;
    let s2 = spiral_angle(&spiral, 1e2).unwrap();
    let s3 = spiral_angle(&spiral, 1e3).unwrap();
    let s4 = spiral_angle(&spiral, 1e4).unwrap();
    assert!(s2 < s3 && s3 < s4);
    assert!(s4 >= 0.99);
}

// ---------------------------------------------------------------------
// probes (smoke level; the calibrated bands live in the acceptance suite)

#[test]
fn probe_finds_the_failure_scale_of_example_one() {
    let h = parse_polynomial("y^6 - t^6*x^2 - x^6", &["x", "y", "t"]).unwrap();
    let out = probe_ring_max(&h, "x", "y", "t", 0.1, 32).unwrap();
    assert!(out.surface_points > 0);
    assert!(
        out.max_bpi > 0.35 && out.max_bpi < 0.6,
        "max_bpi = {}",
        out.max_bpi
    );
    assert!(out.max_a < out.max_bpi);
}

#[test]
fn probe_rejects_bad_inputs() {
    let h = parse_polynomial("y^6 - t^6*x^2 - x^6", &["x", "y", "t"]).unwrap();
    assert!(probe_ring_max(&h, "x", "y", "t", 0.0, 32).is_err());
    assert!(probe_ring_max(&h, "x", "y", "t", 0.1, 16).is_err());
    let complex = parse_polynomial("y^2 - i*x^2", &["x", "y", "t"]).unwrap();
    assert!(probe_ring_max(&complex, "x", "y", "t", 0.1, 32).is_err());
}

// ---------------------------------------------------------------------
// the delta-quantity sampled as a real angle equals the quotient

#[test]
fn sampled_secant_angle_matches_algebraic_quotient() {
    // pair each arc point with its projection (0, t): the secant is the
    // spatial part, and the sine of its angle to the tangent plane of
    // {F = 0} equals |sum x_i dF/dx_i| / (|x| |grad F|) by construction
    let f = bs364();
    let fa = f.to_approx();
    let arc = refined_unit_arc(120);
    for s in [1e-1, 1e-2] {
        let sr = BigReal::from_f64(s);
        let point = arc.eval_at(&sr);

        // realify the secant (x-part, 0) in R^8
        let mut secant = Vec::new();
        for v in SPATIAL {
            let (re, im) = point[v].to_f64_pair();
            secant.extend_from_slice(&[re, im]);
        }
        secant.extend_from_slice(&[0.0, 0.0]);

        // tangent space of {F=0}: orthogonal complement of span{W, iW},
        // W = conj grad F (all four variables)
        let mut w = Vec::new();
        let mut grads = Vec::new();
        for v in VARS4 {
            let g = fa
                .differentiate(v)
                .unwrap()
                .evaluate(&point)
                .unwrap()
                .value;
            let (re, im) = g.to_f64_pair();
            // conj grad realified: (re, -im)
            w.extend_from_slice(&[re, -im]);
            grads.push((re, im));
        }
        let iw: Vec<f64> = w
            .chunks(2)
            .flat_map(|c| [-c[1], c[0]])
            .collect();

        // basis of the complement: project the standard basis off w, iw
        let mut basis: Vec<Vec<f64>> = Vec::new();
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        let mut frame = vec![normalize(&w), normalize(&iw)];
        for k in 0..8 {
            let mut e = vec![0.0; 8];
            e[k] = 1.0;
            for u in &frame {
                let c = dot(&e, u);
                for (ei, ui) in e.iter_mut().zip(u) {
                    *ei -= c * ui;
                }
            }
            let n = dot(&e, &e).sqrt();
            if n > 1e-9 {
                let e: Vec<f64> = e.iter().map(|x| x / n).collect();
                frame.push(e.clone());
                basis.push(e);
            }
        }
        assert_eq!(basis.len(), 6);

        let sampled = sine_vector_subspace(&secant, &basis).unwrap();

        // algebraic quotient with the full gradient norm
        let mut num = (0.0, 0.0);
        let mut xnorm_sq = 0.0;
        for (v, g) in SPATIAL.iter().zip(&grads) {
            let (xr, xi) = point[*v].to_f64_pair();
            num.0 += xr * g.0 - xi * g.1;
            num.1 += xr * g.1 + xi * g.0;
            xnorm_sq += xr * xr + xi * xi;
        }
        let gnorm_sq: f64 = grads.iter().map(|(re, im)| re * re + im * im).sum();
        let quotient = (num.0 * num.0 + num.1 * num.1).sqrt() / (xnorm_sq * gnorm_sq).sqrt();

        assert!(
            (sampled - quotient).abs() < 1e-9,
            "s={s}: sampled {sampled} vs quotient {quotient}"
        );
    }
}

fn normalize(v: &[f64]) -> Vec<f64> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter().map(|x| x / n).collect()
}

// ---------------------------------------------------------------------
// full per-arc report

#[test]
fn analyze_arc_produces_consistent_report() {
    let f = bs364();
    let arc = refined_unit_arc(130);
    let report = analyze_arc(&f, &arc, &SPATIAL, "t", 120, &[1e-1, 1e-2, 1e-3]).unwrap();
    assert!(report.verdict_a.is_zero());
    assert!(report.check_consistency().is_ok());
    assert!(!report.whitney_b_consistent); // bilinear limit is 2/sqrt(85) != 0
    assert!((report.delta_bound - 2.0 / 85f64.sqrt()).abs() < 1e-12);
    assert_eq!(report.rows.len(), 3);
    // numeric quotient approaches the exact limit
    let last = report.rows.last().unwrap();
    assert!((last.ratio_bilinear - 2.0 / 85f64.sqrt()).abs() < 1e-2);
}

#[test]
fn trace_rows_match_leading_behaviour() {
    let f = bs364();
    let arc = refined_unit_arc(120);
    let rows = numeric_trace_rows(&f, &arc, &SPATIAL, "t", &[1e-2, 1e-3]).unwrap();
    for row in &rows {
        // condition (a): ratio ~ s^3 scale decay
        assert!(row.ratio_a < 0.1);
        assert!(row.ratio_bilinear <= 1.0 + 1e-12);
        assert!(row.ratio_hermitian <= 1.0 + 1e-12);
    }
    assert!(rows[1].ratio_a < rows[0].ratio_a);
}

