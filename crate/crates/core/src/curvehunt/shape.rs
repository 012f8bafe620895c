//! The two-parameter family shape `F = x^p + t*x*y^q + y^r*z + z^k`.

use alloc::fmt;

use crate::algebra::{Coeff, ExactComplex, MultiPoly};

pub const SHAPE_VARS: [&str; 4] = ["x", "y", "z", "t"];
pub const SPATIAL_VARS: [&str; 3] = ["x", "y", "z"];
pub const PARAM_VAR: &str = "t";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShapeError {
    /// Not one of the admissible instances: (5,6,7,15), or
    /// (3, q, r, 3q) with 3q = 2r + 1 and q >= 3.
    NotAdmissible,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::NotAdmissible => write!(
                f,
                "shape must be (5,6,7,15) or (3,q,r,3q) with 3q = 2r+1, q >= 3"
            ),
        }
    }
}

impl core::error::Error for ShapeError {}

/// Exponents of `x^p + t*x*y^q + y^r*z + z^k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BsFamilyShape {
    p: u32,
    q: u32,
    r: u32,
    k: u32,
}

impl BsFamilyShape {
    pub fn new(p: u32, q: u32, r: u32, k: u32) -> Result<Self, ShapeError> {
        let classic = (p, q, r, k) == (5, 6, 7, 15);
        let series = p == 3 && q >= 3 && k == 3 * q && 3 * q == 2 * r + 1;
        if classic || series {
            Ok(Self { p, q, r, k })
        } else {
            Err(ShapeError::NotAdmissible)
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of failure curves: one per root of the coefficient
    /// condition, a binomial of degree `2r + 2`.
    pub fn root_count(&self) -> u32 {
        2 * self.r + 2
    }

    /// The family polynomial over `(x, y, z, t)`.
    pub fn family_poly(&self) -> MultiPoly<ExactComplex> {
        MultiPoly::from_terms(
            &SHAPE_VARS,
            [
                (alloc::vec![self.p, 0, 0, 0], ExactComplex::one()),
                (alloc::vec![1, self.q, 0, 1], ExactComplex::one()),
                (alloc::vec![0, self.r, 1, 0], ExactComplex::one()),
                (alloc::vec![0, 0, self.k, 0], ExactComplex::one()),
            ],
        )
    }

    /// Recognise a polynomial of this exact shape (unit coefficients).
    pub fn detect(p: &MultiPoly<ExactComplex>) -> Option<Self> {
        let vars: alloc::vec::Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
        if vars != SHAPE_VARS {
            return None;
        }
        let mut pp = None;
        let mut qq = None;
        let mut rr = None;
        let mut kk = None;
        if p.num_terms() != 4 {
            return None;
        }
        for (exps, c) in p.terms() {
            if *c != ExactComplex::one() {
                return None;
            }
            match exps.as_slice() {
                [a, 0, 0, 0] if *a > 0 => pp = Some(*a),
                [1, b, 0, 1] if *b > 0 => qq = Some(*b),
                [0, b, 1, 0] if *b > 0 => rr = Some(*b),
                [0, 0, cpow, 0] if *cpow > 1 => kk = Some(*cpow),
                _ => return None,
            }
        }
        Self::new(pp?, qq?, rr?, kk?).ok()
    }
}

impl fmt::Display for BsFamilyShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.p, self.q, self.r, self.k)
    }
}
