//! Real sine-of-angle calculus between vectors and subspaces.
//!
//! `sin(theta(v, T))` is the norm of the projection of `v/|v|` onto the
//! orthogonal complement of `T`; between subspaces it is the sine of the
//! largest principal angle.

use alloc::fmt;
use alloc::vec::Vec;

const DEP_TOL: f64 = 1e-12;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SineError {
    ZeroVector,
    DependentBasis,
    DimensionMismatch,
}

impl fmt::Display for SineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SineError::ZeroVector => write!(f, "zero vector has no direction"),
            SineError::DependentBasis => write!(f, "basis vectors are dependent"),
            SineError::DimensionMismatch => write!(f, "vectors have mismatched dimensions"),
        }
    }
}

impl core::error::Error for SineError {}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// Modified Gram-Schmidt with re-orthogonalisation; errors on dependence.
fn orthonormalize(basis: &[Vec<f64>]) -> Result<Vec<Vec<f64>>, SineError> {
    let mut q: Vec<Vec<f64>> = Vec::with_capacity(basis.len());
    let dim = match basis.first() {
        Some(b) => b.len(),
        None => return Ok(q),
    };
    for b in basis {
        if b.len() != dim {
            return Err(SineError::DimensionMismatch);
        }
        let scale = norm(b);
        if scale == 0.0 {
            return Err(SineError::DependentBasis);
        }
        let mut v = b.clone();
        for _ in 0..2 {
            for u in &q {
                let c = dot(&v, u);
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= c * ui;
                }
            }
        }
        let r = norm(&v);
        if r < DEP_TOL * scale {
            return Err(SineError::DependentBasis);
        }
        for vi in v.iter_mut() {
            *vi /= r;
        }
        q.push(v);
    }
    Ok(q)
}

/// Residual of `v` after projecting onto the span of the orthonormal `q`.
fn residual(v: &[f64], q: &[Vec<f64>]) -> Vec<f64> {
    let mut r = v.to_vec();
    for u in q {
        let c = dot(&r, u);
        for (ri, ui) in r.iter_mut().zip(u) {
            *ri -= c * ui;
        }
    }
    r
}

/// Sine of the angle between a nonzero vector and a subspace.
pub fn sine_vector_subspace(v: &[f64], t_basis: &[Vec<f64>]) -> Result<f64, SineError> {
    let nv = norm(v);
    if nv == 0.0 {
        return Err(SineError::ZeroVector);
    }
    if let Some(b) = t_basis.first() {
        if b.len() != v.len() {
            return Err(SineError::DimensionMismatch);
        }
    }
    let q = orthonormalize(t_basis)?;
    let r = residual(v, &q);
    Ok((norm(&r) / nv).min(1.0))
}

/// Sine of the largest principal angle between two subspaces:
/// `sup { sin(theta(s, T)) : s in S, s != 0 }`.
pub fn sine_subspace_subspace(
    s_basis: &[Vec<f64>],
    t_basis: &[Vec<f64>],
) -> Result<f64, SineError> {
    let qs = orthonormalize(s_basis)?;
    let qt = orthonormalize(t_basis)?;
    if qs.is_empty() {
        return Ok(0.0);
    }
    if let (Some(a), Some(b)) = (qs.first(), qt.first()) {
        if a.len() != b.len() {
            return Err(SineError::DimensionMismatch);
        }
    }
    // rows: residuals of the orthonormal S-basis against T
    let rows: Vec<Vec<f64>> = qs.iter().map(|u| residual(u, &qt)).collect();
    // largest singular value of the residual map = sqrt(lambda_max(R R^T))
    let k = rows.len();
    let mut gram = alloc::vec![alloc::vec![0.0f64; k]; k];
    for i in 0..k {
        for j in 0..k {
            gram[i][j] = dot(&rows[i], &rows[j]);
        }
    }
    let lambda = jacobi_max_eigenvalue(&mut gram);
    Ok(libm::sqrt(lambda.clamp(0.0, 1.0)))
}

/// Largest eigenvalue of a small symmetric matrix by cyclic Jacobi sweeps.
fn jacobi_max_eigenvalue(m: &mut [Vec<f64>]) -> f64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    for _ in 0..32 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += m[i][j] * m[i][j];
            }
        }
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + libm::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut best = m[0][0];
    for i in 1..m.len() {
        if m[i][i] > best {
            best = m[i][i];
        }
    }
    best
}
