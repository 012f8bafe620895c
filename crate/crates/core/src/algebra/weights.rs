//! Quasihomogeneous weight systems and the weighted-homogeneous Milnor
//! number.

use alloc::fmt;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactComplex, MultiPoly, PolyError};

/// Weights certifying that every term of a polynomial has the same weighted
/// degree. The parameter variable (when present) carries weight zero, so
/// `t`-terms are weighted by their spatial exponents only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightSystem {
    /// One positive weight per non-parameter variable, in variable order.
    pub weights: Vec<u64>,
    /// Weight of the parameter variable. Zero in every family handled here.
    pub param_weight: i64,
    /// Weighted degree shared by all terms.
    pub degree: u64,
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>, degree: u64) -> Self {
        Self {
            weights,
            param_weight: 0,
            degree,
        }
    }

    /// Per-term check that this weight system certifies `p` (parameter
    /// variable `param` weighted by `param_weight`).
    pub fn certifies(&self, p: &MultiPoly<ExactComplex>, param: Option<&str>) -> bool {
        let spatial: Vec<usize> = (0..p.vars().len())
            .filter(|&i| Some(p.vars()[i].as_str()) != param)
            .collect();
        if spatial.len() != self.weights.len() {
            return false;
        }
        p.terms().all(|(exps, _)| {
            let wd: i128 = spatial
                .iter()
                .zip(&self.weights)
                .map(|(&i, &w)| exps[i] as i128 * w as i128)
                .sum();
            let param_part: i128 = match param.and_then(|t| p.var_index(t)) {
                Some(ti) => exps[ti] as i128 * self.param_weight as i128,
                None => 0,
            };
            wd + param_part == self.degree as i128
        })
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({};{})", ws.join(","), self.degree)
    }
}

/// `sum_i w_i x_i dp/dx_i` over the non-parameter variables. For a
/// certified weight system this equals `degree * p` exactly.
pub fn weighted_euler(
    p: &MultiPoly<ExactComplex>,
    ws: &WeightSystem,
    param: Option<&str>,
) -> Result<MultiPoly<ExactComplex>, PolyError> {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mut acc = MultiPoly::zero(&vars);
    let spatial: Vec<&str> = vars
        .iter()
        .copied()
        .filter(|v| Some(*v) != param)
        .collect();
    for (v, &w) in spatial.iter().zip(&ws.weights) {
        let term = p
            .differentiate(v)?
            .mul_var(v)?
            .scale(&ExactComplex::from_integer(w as i64));
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Search for a weight system with parameter weight 0 certifying every term
/// of `p`, by solving the exact integer linear system over the exponent
/// vectors. Returns the primitive (gcd-reduced) weight vector, or `None`
/// when no positive solution exists.
pub fn quasihomogeneous_weights(
    p: &MultiPoly<ExactComplex>,
    param: Option<&str>,
) -> Option<WeightSystem> {
    if p.is_zero() {
        return None;
    }
    let spatial: Vec<usize> = (0..p.vars().len())
        .filter(|&i| Some(p.vars()[i].as_str()) != param)
        .collect();
    let ncols = spatial.len() + 1; // weights plus the degree

    // rows: sum_j e_j w_j - d = 0
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (exps, _) in p.terms() {
        let mut row: Vec<BigRational> = spatial
            .iter()
            .map(|&i| BigRational::from_integer(BigInt::from(exps[i])))
            .collect();
        row.push(-BigRational::one());
        if !rows.contains(&row) {
            rows.push(row);
        }
    }

    let basis = nullspace(&mut rows, ncols);
    if basis.is_empty() {
        return None;
    }
    if basis.len() == 1 {
        return positive_primitive(&basis[0]).map(|(w, d)| WeightSystem::new(w, d));
    }

    // Underdetermined systems: search small integer combinations of the
    // basis and keep the smallest positive solution.
    let mut best: Option<(Vec<u64>, u64)> = None;
    let range: i64 = 8;
    let dims = basis.len().min(4);
    let mut combo = alloc::vec![-range; dims];
    loop {
        let mut v = alloc::vec![BigRational::zero(); ncols];
        for (c, b) in combo.iter().zip(&basis) {
            if *c == 0 {
                continue;
            }
            let factor = BigRational::from_integer(BigInt::from(*c));
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += &factor * bi;
            }
        }
        if let Some((w, d)) = positive_primitive(&v) {
            let better = match &best {
                None => true,
                Some((bw, bd)) => (d, &w) < (*bd, bw),
            };
            if better {
                best = Some((w, d));
            }
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == dims {
                return best.map(|(w, d)| WeightSystem::new(w, d));
            }
            combo[k] += 1;
            if combo[k] <= range {
                break;
            }
            combo[k] = -range;
            k += 1;
        }
    }
}

/// Reduced nullspace basis of the row system (exact Gaussian elimination).
fn nullspace(rows: &mut Vec<Vec<BigRational>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }

    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = alloc::vec![BigRational::zero(); ncols];
        v[fc] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -rows[r][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scale a rational vector `(w..., d)` to a primitive positive integer
/// solution; `None` if any entry fails positivity.
fn positive_primitive(v: &[BigRational]) -> Option<(Vec<u64>, u64)> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    // orient so the degree (last entry) is positive
    let d = ints.last()?.clone();
    if d.is_zero() {
        return None;
    }
    if d.is_negative() {
        for x in ints.iter_mut() {
            *x = -x.clone();
        }
    }
    if ints.iter().any(|x| !x.is_positive()) {
        return None;
    }
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if !gcd.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &gcd;
        }
    }
    let mut out: Vec<u64> = Vec::with_capacity(ints.len());
    for x in &ints {
        out.push(x.to_u64()?);
    }
    let d = out.pop()?;
    Some((out, d))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MilnorError {
    /// Some weight is >= the degree: not isolated-singularity weight data.
    InvalidWeights,
    /// The product formula did not give an integer.
    NonIntegerProduct(String),
}

impl fmt::Display for MilnorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MilnorError::InvalidWeights => {
                write!(f, "weights must all be smaller than the degree")
            }
            MilnorError::NonIntegerProduct(v) => {
                write!(f, "weight product is not an integer: {v}")
            }
        }
    }
}

impl core::error::Error for MilnorError {}

/// Milnor number of a weighted-homogeneous isolated singularity:
/// `prod_i (d - w_i) / w_i`, exactly.
pub fn milnor_orlik(ws: &WeightSystem) -> Result<u64, MilnorError> {
    if ws.weights.iter().any(|&w| w == 0 || w >= ws.degree) {
        return Err(MilnorError::InvalidWeights);
    }
    let mut acc = BigRational::one();
    for &w in &ws.weights {
        let num = BigInt::from(ws.degree - w);
        let den = BigInt::from(w);
        acc *= BigRational::new(num, den);
    }
    if !acc.is_integer() {
        return Err(MilnorError::NonIntegerProduct(alloc::format!("{acc}")));
    }
    acc.to_integer()
        .to_u64()
        .ok_or(MilnorError::InvalidWeights)
}
