//! Exponent patterns of (b)-violating arcs.
//!
//! Along an arc of the family `x^p + t*x*y^q + y^r*z + z^k`, failure of
//! Whitney's condition (b) forces the component valuations
//! `(v_x, v_y, v_z, v_t)` to satisfy
//!
//! ```text
//! v_x > v_y = v_z > v_t
//! v_x + v_t       = (r - q) v_y + v_z
//! (p - 1) v_x     = v_t + q v_y
//! ```

use alloc::collections::BTreeSet;
use alloc::fmt;
use alloc::vec::Vec;

use num_integer::Integer;

use super::shape::BsFamilyShape;

/// A valuation pattern `(v_x, v_y, v_z, v_t)`, positive integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ExponentPattern {
    pub nu_x: u32,
    pub nu_y: u32,
    pub nu_z: u32,
    pub nu_t: u32,
}

impl ExponentPattern {
    pub fn new(nu_x: u32, nu_y: u32, nu_z: u32, nu_t: u32) -> Self {
        Self {
            nu_x,
            nu_y,
            nu_z,
            nu_t,
        }
    }

    /// All three constraints, in exact integer arithmetic.
    pub fn satisfies(&self, shape: &BsFamilyShape) -> bool {
        let (x, y, z, t) = (
            self.nu_x as i64,
            self.nu_y as i64,
            self.nu_z as i64,
            self.nu_t as i64,
        );
        let (p, q, r) = (shape.p() as i64, shape.q() as i64, shape.r() as i64);
        let ordering = x > y && y == z && z > t && t >= 1;
        let balance = x + t == (r - q) * y + z;
        let head = (p - 1) * x == t + q * y;
        ordering && balance && head
    }

    /// Divide out the gcd of the four entries.
    pub fn primitive(&self) -> Self {
        let g = self
            .nu_x
            .gcd(&self.nu_y)
            .gcd(&self.nu_z)
            .gcd(&self.nu_t)
            .max(1);
        Self {
            nu_x: self.nu_x / g,
            nu_y: self.nu_y / g,
            nu_z: self.nu_z / g,
            nu_t: self.nu_t / g,
        }
    }

    pub fn scale(&self, k: u32) -> Self {
        Self {
            nu_x: self.nu_x * k,
            nu_y: self.nu_y * k,
            nu_z: self.nu_z * k,
            nu_t: self.nu_t * k,
        }
    }
}

impl fmt::Display for ExponentPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.nu_x, self.nu_y, self.nu_z, self.nu_t)
    }
}

/// All primitive patterns with entries up to `bound` satisfying the three
/// constraints. The scan runs over `(v_y, v_t)`; the head constraint then
/// determines `v_x` uniquely, so the enumeration is exhaustive.
pub fn solve_exponent_pattern(shape: &BsFamilyShape, bound: u32) -> Vec<ExponentPattern> {
    let mut out: BTreeSet<ExponentPattern> = BTreeSet::new();
    let p1 = (shape.p() - 1) as u64;
    let q = shape.q() as u64;
    for m in 1..=bound as u64 {
        for t in 1..m {
            let num = t + q * m;
            if num % p1 != 0 {
                continue;
            }
            let x = num / p1;
            if x > bound as u64 {
                continue;
            }
            let candidate =
                ExponentPattern::new(x as u32, m as u32, m as u32, t as u32);
            if candidate.satisfies(shape) {
                out.insert(candidate.primitive());
            }
        }
    }
    out.into_iter().collect()
}
