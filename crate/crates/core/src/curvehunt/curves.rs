//! Leading-coefficient constraints and the failure-curve list.
//!
//! For an arc with the forced exponent pattern, normalised to x-leading
//! coefficient 1, write the y/z/t leading coefficients as `a`, `b`, `c`.
//! Vanishing of the head of `dF/dx . arc` forces `c = -p / a^q`; vanishing
//! of the head of `F . arc` then forces `b = (p-1) / a^r`; and complex
//! proportionality of the secant and normal leading vectors (the Hermitian
//! ratio reaching 1) pins `a^(2r+2) = (p-1) (r (p-1) - p q)`.

use alloc::fmt;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{
    nth_roots, ApproxComplex, BigReal, Coeff, ExactComplex, Root, RootError, RootInput,
};
use crate::series::{compose, Arc, TruncSeries, Valuation};
use crate::settings;

use super::pattern::{solve_exponent_pattern, ExponentPattern};
use super::shape::BsFamilyShape;

/// Closed-form coefficient constraints for a family shape.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoefficientRules {
    pub shape: BsFamilyShape,
    /// `c = c_num / a^q`
    pub c_num: i64,
    /// `b = b_num / a^r`
    pub b_num: i64,
    /// `a^root_degree = root_rhs`
    pub root_degree: u32,
    pub root_rhs: i64,
}

impl fmt::Display for CoefficientRules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "c = {}/a^{}, b = {}/a^{}, a^{} = {}",
            self.c_num,
            self.shape.q(),
            self.b_num,
            self.shape.r(),
            self.root_degree,
            self.root_rhs
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CurveError {
    /// The closed forms failed their symbolic leading-term validation.
    RulesValidation(String),
    /// The exponent-pattern solver did not return exactly one primitive
    /// pattern for this shape.
    PatternCount(usize),
    Root(RootError),
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::RulesValidation(msg) => write!(f, "coefficient rules failed validation: {msg}"),
            CurveError::PatternCount(n) => {
                write!(f, "expected exactly one primitive exponent pattern, found {n}")
            }
            CurveError::Root(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CurveError {}

impl From<RootError> for CurveError {
    fn from(e: RootError) -> Self {
        CurveError::Root(e)
    }
}

/// Derive the closed-form coefficient constraints from the shape.
pub fn solve_coefficients(shape: &BsFamilyShape) -> CoefficientRules {
    let p = shape.p() as i64;
    let q = shape.q() as i64;
    let r = shape.r() as i64;
    CoefficientRules {
        shape: *shape,
        c_num: -p,
        b_num: p - 1,
        root_degree: (2 * r + 2) as u32,
        root_rhs: (p - 1) * (r * (p - 1) - p * q),
    }
}

/// One enumerated weak-Whitney failure curve: the arc with initial terms
/// `(s^vx, a s^vy, b s^vz, c s^vt)`.
#[derive(Clone, Debug)]
pub struct FailureCurve {
    pub index: u32,
    pub shape: BsFamilyShape,
    pub pattern: ExponentPattern,
    pub rules: CoefficientRules,
    /// Root of `a^(2r+2) = root_rhs`, with its polar description.
    pub a: Root,
    pub b: ApproxComplex,
    pub c: ApproxComplex,
    /// `|a^(2r+2) - rhs| / |rhs|`.
    pub root_residual: BigReal,
    /// `|1 + c a^q + b a^r|` (head of `F . arc` at leading order).
    pub head_residual: BigReal,
}

impl FailureCurve {
    /// The curve's arc at the given truncation order.
    pub fn arc(&self, trunc: u32) -> Arc<ApproxComplex> {
        let one = ApproxComplex::one();
        Arc::new(
            "s",
            alloc::vec![
                (
                    "x".into(),
                    TruncSeries::monomial(self.pattern.nu_x, one, trunc)
                ),
                (
                    "y".into(),
                    TruncSeries::monomial(self.pattern.nu_y, self.a.value.clone(), trunc)
                ),
                (
                    "z".into(),
                    TruncSeries::monomial(self.pattern.nu_z, self.b.clone(), trunc)
                ),
                (
                    "t".into(),
                    TruncSeries::monomial(self.pattern.nu_t, self.c.clone(), trunc)
                ),
            ],
        )
        .expect("distinct component names")
    }
}

/// Enumerate all failure curves of the shape: one per root of the
/// coefficient condition. The closed forms are re-validated against an
/// exact leading-term expansion before any root is used.
pub fn enumerate_failure_curves(shape: &BsFamilyShape) -> Result<Vec<FailureCurve>, CurveError> {
    let rules = solve_coefficients(shape);
    validate_rules(shape, &rules)?;

    let patterns = solve_exponent_pattern(shape, 60);
    if patterns.len() != 1 {
        return Err(CurveError::PatternCount(patterns.len()));
    }
    let pattern = patterns[0];

    let roots = nth_roots(
        &RootInput::Exact(ExactComplex::from_integer(rules.root_rhs)),
        rules.root_degree,
    )?;

    let p_num = ApproxComplex::from_real(BigReal::from_i64(shape.p() as i64));
    let b_num = ApproxComplex::from_real(BigReal::from_i64(rules.b_num));
    let one = ApproxComplex::one();

    let mut curves = Vec::with_capacity(roots.len());
    for (index, root) in roots.into_iter().enumerate() {
        let a = root.value.clone();
        let a_q = a.powi(shape.q());
        let a_r = a.powi(shape.r());
        let c = p_num.neg().div(&a_q).expect("root is nonzero");
        let b = b_num.div(&a_r).expect("root is nonzero");
        let head = one.add(&c.mul(&a_q)).add(&b.mul(&a_r));
        curves.push(FailureCurve {
            index: index as u32,
            shape: *shape,
            pattern,
            rules,
            root_residual: root.residual.clone(),
            a: root,
            b,
            c,
            head_residual: head.modulus(),
        });
    }
    Ok(curves)
}

/// Validate the closed forms against an exact composition at a rational
/// sample value of `a`: the heads of `F . arc` and `dF/dx . arc` must
/// cancel, and the leading coefficients of `dF/dy . arc` and `dF/dz . arc`
/// must match the symbolic values `(r(p-1) - pq)/a` and `a^r` that feed the
/// root condition.
fn validate_rules(shape: &BsFamilyShape, rules: &CoefficientRules) -> Result<(), CurveError> {
    let patterns = solve_exponent_pattern(shape, 60);
    let Some(pattern) = patterns.first() else {
        return Err(CurveError::PatternCount(0));
    };
    let fail = |msg: &str| Err(CurveError::RulesValidation(String::from(msg)));

    let f = shape.family_poly();
    let a0 = ExactComplex::from_ratio(2, 1);
    let a_q = exact_pow(&a0, shape.q());
    let a_r = exact_pow(&a0, shape.r());
    let c0 = ExactComplex::from_integer(rules.c_num)
        .div(&a_q)
        .expect("nonzero");
    let b0 = ExactComplex::from_integer(rules.b_num)
        .div(&a_r)
        .expect("nonzero");

    let trunc = settings::default_trunc().max(8 * pattern.nu_x * shape.p());
    let arc = Arc::new(
        "s",
        alloc::vec![
            (
                "x".into(),
                TruncSeries::monomial(pattern.nu_x, ExactComplex::one(), trunc)
            ),
            ("y".into(), TruncSeries::monomial(pattern.nu_y, a0.clone(), trunc)),
            ("z".into(), TruncSeries::monomial(pattern.nu_z, b0, trunc)),
            ("t".into(), TruncSeries::monomial(pattern.nu_t, c0, trunc)),
        ],
    )
    .expect("distinct component names");

    let head_order = shape.p() * pattern.nu_x;
    let composed = compose(&f, &arc).expect("arc binds all variables");
    if composed.valuation().lower_bound() <= head_order {
        return fail("head of F along the arc did not cancel");
    }

    let fx = f.differentiate("x").expect("variable x");
    let fx_order = (shape.p() - 1) * pattern.nu_x;
    let fx_composed = compose(&fx, &arc).expect("arc binds all variables");
    if fx_composed.valuation().lower_bound() <= fx_order {
        return fail("head of dF/dx along the arc did not cancel");
    }

    let grad_order = shape.p() * pattern.nu_x - pattern.nu_y;
    let r_factor = ExactComplex::from_integer(
        shape.r() as i64 * (shape.p() as i64 - 1) - shape.p() as i64 * shape.q() as i64,
    );
    let fy = f.differentiate("y").expect("variable y");
    let fy_composed = compose(&fy, &arc).expect("arc binds all variables");
    match fy_composed.valuation() {
        Valuation::Finite(v) if v == grad_order => {
            let (_, lead) = fy_composed.leading().expect("finite");
            let expected = r_factor.div(&a0).expect("nonzero");
            if *lead != expected {
                return fail("leading coefficient of dF/dy does not match (r(p-1)-pq)/a");
            }
        }
        _ => return fail("dF/dy has unexpected valuation along the arc"),
    }

    let fz = f.differentiate("z").expect("variable z");
    let fz_composed = compose(&fz, &arc).expect("arc binds all variables");
    match fz_composed.valuation() {
        Valuation::Finite(v) if v == grad_order => {
            let (_, lead) = fz_composed.leading().expect("finite");
            if *lead != a_r {
                return fail("leading coefficient of dF/dz does not match a^r");
            }
        }
        _ => return fail("dF/dz has unexpected valuation along the arc"),
    }

    // the root condition encodes proportionality of (0, a, b) and
    // (0, R/a, a^r): cross-multiplied, a^(2r+2) = (p-1) R
    let lhs = rules.root_rhs;
    let rhs = (shape.p() as i64 - 1)
        * (shape.r() as i64 * (shape.p() as i64 - 1) - shape.p() as i64 * shape.q() as i64);
    if lhs != rhs {
        return fail("root condition right-hand side does not match (p-1)(r(p-1)-pq)");
    }
    Ok(())
}

fn exact_pow(base: &ExactComplex, e: u32) -> ExactComplex {
    let mut acc = ExactComplex::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}
