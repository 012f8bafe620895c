//! Point evaluation under severe leading-term cancellation.
//!
//! At the point `(s^8, s^5, 4 s^5, -5 s^2)` with `s = 1/10`, the three
//! lowest-order terms of the family polynomial cancel exactly and the true
//! value is `4^15 * 10^-75` — twenty-six orders of magnitude below the
//! cancelled terms. Hitting 1e-10 relative accuracy through that
//! cancellation needs more than the default 34 digits, so this test (the
//! only settings-mutating one, kept in its own process) raises the
//! precision to 50 digits.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use stratlab_core::algebra::{parse_polynomial, ApproxComplex, BigReal, Coeff, ExactComplex};
use stratlab_core::series::{compose, Arc, TruncSeries};
use stratlab_core::settings;

#[test]
fn evaluate_through_cancellation_at_fifty_digits() {
    settings::set_precision_digits(50);

    let f = parse_polynomial("x^5 + t*x*y^6 + y^7*z + z^15", &["x", "y", "z", "t"]).unwrap();

    // oracle: exact series composition along the arc, evaluated at s = 1/10
    let trunc = 200;
    let arc = Arc::new(
        "s",
        vec![
            (
                "x".into(),
                TruncSeries::monomial(8, ExactComplex::one(), trunc),
            ),
            (
                "y".into(),
                TruncSeries::monomial(5, ExactComplex::one(), trunc),
            ),
            (
                "z".into(),
                TruncSeries::monomial(5, ExactComplex::from_integer(4), trunc),
            ),
            (
                "t".into(),
                TruncSeries::monomial(2, ExactComplex::from_integer(-5), trunc),
            ),
        ],
    )
    .unwrap();
    let series = compose(&f, &arc).unwrap();
    assert_eq!(series.terms().len(), 1);
    let (exp, coeff) = series.leading().unwrap();
    // exact oracle value: 4^15 * 10^-75
    let ten = BigRational::new(BigInt::from(1), BigInt::from(10));
    let mut oracle = coeff.re().clone();
    for _ in 0..exp {
        oracle *= &ten;
    }
    assert!(!oracle.is_zero());

    // the evaluation path: exact decimal point coordinates, rounded once
    let point: Vec<ApproxComplex> = [
        BigRational::new(BigInt::from(1), BigInt::from(10u64.pow(8))),
        BigRational::new(BigInt::from(1), BigInt::from(10u64.pow(5))),
        BigRational::new(BigInt::from(4), BigInt::from(10u64.pow(5))),
        BigRational::new(BigInt::from(-5), BigInt::from(100)),
    ]
    .iter()
    .map(|r| ApproxComplex::from_rationals(r, &BigRational::zero()))
    .collect();

    let out = f.to_approx().evaluate_at(&point);
    let oracle_real = BigReal::from_rational(&oracle);
    let rel = out
        .value
        .sub(&ApproxComplex::from_real(oracle_real.clone()))
        .modulus()
        .div(&oracle_real.abs());
    assert!(
        rel.to_f64() < 1e-10,
        "relative error {} exceeds 1e-10",
        rel.to_f64()
    );

    // and the recorded error bound covers the true deviation
    assert!(out.error_bound.to_f64() >= 0.0);
    let true_dev = out
        .value
        .sub(&ApproxComplex::from_real(oracle_real))
        .modulus();
    assert!(true_dev.cmp(&out.error_bound) != std::cmp::Ordering::Greater);

    settings::set_precision_digits(settings::DEFAULT_DIGITS);
}
