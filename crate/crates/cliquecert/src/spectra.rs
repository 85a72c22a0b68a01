//! Dense symmetric eigen-analysis: full spectra by cyclic Jacobi rotations,
//! PSD verdicts with an explicit relative tolerance, spectral norms,
//! numerical rank, and extraction of clique-indexed principal blocks.
//!
//! Matrices are normalized by their largest absolute entry before the
//! eigensolve; reports carry that scale and eigenvalues are returned in the
//! units of the input.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::BigRational;
use crate::graphs::Graph;
use crate::ratmat::RatMat;
use crate::{Error, Result};

/// Row-major dense matrix of floats.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatMat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl FloatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> f64>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_ratmat(m: &RatMat) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| rat_to_f64(m.get(i, j)))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Largest |A(i,j) − A(j,i)| over a square matrix.
    pub fn max_asymmetry(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..i {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// AᵀA, the square of the singular values' matrix.
    pub fn gram_of_columns(&self) -> FloatMat {
        let mut out = FloatMat::zeros(self.cols, self.cols);
        for i in 0..self.cols {
            for j in 0..=i {
                let mut acc = 0.0;
                for k in 0..self.rows {
                    acc += self.get(k, i) * self.get(k, j);
                }
                out.set(i, j, acc);
                out.set(j, i, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(x).map(|(a, b)| a * b).sum()
            })
            .collect()
    }
}

/// Converts an exact rational to the nearest f64 without overflowing on
/// large numerators or denominators: both are shifted down to a safe bit
/// length first and the lost exponent is reapplied at the end.
pub fn rat_to_f64(v: &BigRational) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let numer = v.numer();
    let denom = v.denom();
    let nb = numer.bits() as i64;
    let db = denom.bits() as i64;
    let shift_n = (nb - 64).max(0);
    let shift_d = (db - 64).max(0);
    let n2 = (numer >> shift_n as usize).to_f64().expect("<= 64 bits");
    let d2 = (denom >> shift_d as usize).to_f64().expect("<= 64 bits");
    let diff = shift_n - shift_d;
    if diff > 1024 {
        return if numer.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
    }
    if diff < -1100 {
        return 0.0;
    }
    (n2 / d2) * 2.0f64.powi(diff as i32)
}

/// Result of a symmetric eigensolve, in the units of the input matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub dimension: usize,
    /// Smallest and largest eigenvalue.
    pub min: f64,
    pub max: f64,
    /// PSD verdict: min ≥ −tolerance·max(1, |max|).
    pub psd: bool,
    /// Relative tolerance the verdict used.
    pub tolerance: f64,
    /// Largest absolute entry of the input; the eigensolver ran on the
    /// input divided by this.
    pub scale: f64,
    /// All eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
}

/// Default relative tolerance for PSD verdicts.
pub const DEFAULT_PSD_TOL: f64 = 1e-9;

/// Convergence target for the Jacobi iteration: off-diagonal Frobenius mass
/// below this multiple of the total Frobenius norm.
const JACOBI_OFF_TARGET: f64 = 1e-14;

const JACOBI_MAX_SWEEPS: usize = 60;

/// Largest relative asymmetry accepted by the symmetric eigensolver.
const SYMMETRY_REL_TOL: f64 = 1e-12;

fn check_symmetric(m: &FloatMat) -> Result<()> {
    if m.rows() != m.cols() {
        return Err(Error::InvalidInput(format!(
            "expected a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let scale = m.max_abs();
    if m.max_asymmetry() > SYMMETRY_REL_TOL * scale.max(1.0) {
        return Err(Error::InvalidInput(
            "matrix is not symmetric within 1e-12 relative".into(),
        ));
    }
    Ok(())
}

/// Cyclic Jacobi on a normalized copy of `m`.  Returns eigenvalues ascending
/// and, when requested, the matching eigenvector columns.
fn jacobi_core(m: &FloatMat, want_vectors: bool) -> Result<(Vec<f64>, Option<FloatMat>, f64)> {
    let dim = m.rows();
    let scale = m.max_abs();
    if dim == 0 || scale == 0.0 {
        let vecs = want_vectors.then(|| FloatMat::identity(dim));
        return Ok((vec![0.0; dim], vecs, scale));
    }
    let mut a: Vec<f64> = m.data.iter().map(|v| v / scale).collect();
    let mut v: Option<Vec<f64>> = want_vectors.then(|| {
        let mut id = vec![0.0; dim * dim];
        for i in 0..dim {
            id[i * dim + i] = 1.0;
        }
        id
    });
    let fro: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = JACOBI_OFF_TARGET * fro;
    let trace_in: f64 = (0..dim).map(|i| a[i * dim + i]).sum();

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = {
            let mut acc = 0.0;
            for p in 0..dim {
                for q in p + 1..dim {
                    let x = a[p * dim + q];
                    acc += 2.0 * x * x;
                }
            }
            acc.sqrt()
        };
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..dim {
            for q in p + 1..dim {
                let apq = a[p * dim + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * dim + p];
                let aqq = a[q * dim + q];
                // Skip rotations that cannot change the diagonal at working
                // precision.
                if apq.abs() <= f64::EPSILON * 1e-2 * (app.abs() + aqq.abs()).max(f64::MIN_POSITIVE)
                {
                    a[p * dim + q] = 0.0;
                    a[q * dim + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e153 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // The matrix stays exactly symmetric throughout, so one
                // contiguous pass over rows p and q plus a mirror into the
                // columns applies the full two-sided rotation.
                {
                    let (head, tail) = a.split_at_mut(q * dim);
                    let row_p = &mut head[p * dim..p * dim + dim];
                    let row_q = &mut tail[..dim];
                    for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
                        let (xp, xq) = (*x, *y);
                        *x = c * xp - s * xq;
                        *y = s * xp + c * xq;
                    }
                }
                a[p * dim + p] = app - t * apq;
                a[q * dim + q] = aqq + t * apq;
                a[p * dim + q] = 0.0;
                a[q * dim + p] = 0.0;
                for i in 0..dim {
                    a[i * dim + p] = a[p * dim + i];
                    a[i * dim + q] = a[q * dim + i];
                }
                if let Some(vm) = v.as_mut() {
                    for i in 0..dim {
                        let vip = vm[i * dim + p];
                        let viq = vm[i * dim + q];
                        vm[i * dim + p] = c * vip - s * viq;
                        vm[i * dim + q] = s * vip + c * viq;
                    }
                }
            }
        }
    }
    if !converged {
        return Err(Error::NonConvergence(format!(
            "Jacobi did not reach off-diagonal target in {JACOBI_MAX_SWEEPS} sweeps (dim {dim})"
        )));
    }
    let trace_out: f64 = (0..dim).map(|i| a[i * dim + i]).sum();
    if (trace_out - trace_in).abs() > 1e-9 * fro.max(1.0) {
        return Err(Error::NonConvergence(format!(
            "Jacobi trace drift {:e} exceeds self-check budget",
            (trace_out - trace_in).abs()
        )));
    }

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| {
        a[i * dim + i]
            .partial_cmp(&a[j * dim + j])
            .expect("eigenvalues are finite")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * dim + i] * scale).collect();
    let vectors = v.map(|vm| {
        FloatMat::from_fn(dim, dim, |i, j| vm[i * dim + order[j]])
    });
    Ok((eigenvalues, vectors, scale))
}

fn report_from(eigenvalues: Vec<f64>, scale: f64, tolerance: f64) -> SpectrumReport {
    let dimension = eigenvalues.len();
    let min = eigenvalues.first().copied().unwrap_or(0.0);
    let max = eigenvalues.last().copied().unwrap_or(0.0);
    SpectrumReport {
        dimension,
        min,
        max,
        psd: min >= -tolerance * max.abs().max(1.0),
        tolerance,
        scale,
        eigenvalues,
    }
}

/// Full spectrum of a symmetric matrix via cyclic Jacobi, with the PSD
/// verdict at the default tolerance.
pub fn eigenvalues_symmetric(m: &FloatMat) -> Result<SpectrumReport> {
    is_psd(m, DEFAULT_PSD_TOL)
}

/// Full spectrum plus a PSD verdict at the given relative tolerance:
/// PSD means min ≥ −rel_tol·max(1, |largest eigenvalue|).
pub fn is_psd(m: &FloatMat, rel_tol: f64) -> Result<SpectrumReport> {
    check_symmetric(m)?;
    let (eigenvalues, _, scale) = jacobi_core(m, false)?;
    Ok(report_from(eigenvalues, scale, rel_tol))
}

/// Eigenvalues (ascending) together with orthonormal eigenvector columns:
/// column j of the returned matrix belongs to eigenvalue j.
pub fn symmetric_eigen(m: &FloatMat) -> Result<(Vec<f64>, FloatMat)> {
    check_symmetric(m)?;
    let (eigenvalues, vectors, _) = jacobi_core(m, true)?;
    Ok((eigenvalues, vectors.expect("requested")))
}

/// Largest singular value.  Square inputs that are symmetric to working
/// precision are symmetrized as (A+Aᵀ)/2 and solved directly; anything else
/// goes through the eigenvalues of AᵀA.
pub fn spectral_norm(m: &FloatMat) -> Result<f64> {
    if m.rows() == m.cols() {
        let scale = m.max_abs();
        if m.rows() == 0 {
            return Ok(0.0);
        }
        if m.max_asymmetry() <= SYMMETRY_REL_TOL * scale.max(1.0) {
            let sym = FloatMat::from_fn(m.rows(), m.cols(), |i, j| {
                0.5 * (m.get(i, j) + m.get(j, i))
            });
            let (eigenvalues, _, _) = jacobi_core(&sym, false)?;
            let lo = eigenvalues.first().copied().unwrap_or(0.0);
            let hi = eigenvalues.last().copied().unwrap_or(0.0);
            return Ok(lo.abs().max(hi.abs()));
        }
    }
    let gram = m.gram_of_columns();
    let (eigenvalues, _, _) = jacobi_core(&gram, false)?;
    Ok(eigenvalues.last().copied().unwrap_or(0.0).max(0.0).sqrt())
}

/// Number of eigenvalues with |λ| above the threshold; the default
/// threshold is 1e−8 times the largest absolute entry.
pub fn numerical_rank(m: &FloatMat, threshold: Option<f64>) -> Result<usize> {
    check_symmetric(m)?;
    let cut = threshold.unwrap_or(1e-8 * m.max_abs());
    let (eigenvalues, _, _) = jacobi_core(m, false)?;
    Ok(eigenvalues.iter().filter(|l| l.abs() > cut).count())
}

/// Restricts a matrix indexed by all r-subsets (colex order) to the rows and
/// columns whose subsets are cliques of the graph, preserving order.
pub fn clique_principal_submatrix(m: &RatMat, graph: &Graph, r: usize) -> Result<RatMat> {
    let ix = crate::combinat::SubsetIndexer::new(graph.n(), r)?;
    if m.rows() != ix.dim() || m.cols() != ix.dim() {
        return Err(Error::InvalidInput(format!(
            "matrix is {}x{} but C({},{}) = {}",
            m.rows(),
            m.cols(),
            graph.n(),
            r,
            ix.dim()
        )));
    }
    let keep: Vec<usize> = ix
        .iter()
        .enumerate()
        .filter(|(_, s)| graph.is_clique(s))
        .map(|(i, _)| i)
        .collect();
    Ok(m.principal_submatrix(&keep))
}
