//! The Johnson association scheme on r-subsets of an n-element ground set:
//! the intersection-indicator D-basis, the PSD P-basis, exact change of
//! basis, and closed-form spectra on the scheme's common eigenspaces.
//!
//! Every matrix whose (I, J) entry depends only on |I∩J| lives in this
//! algebra, so its full spectrum reduces to r+1 exact rational eigenvalues
//! with known multiplicities.  The expectation matrix of the certificate is
//! the central example.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinat::{
    binom, binom_rat, binomial, intersection_size, pow2, BigRational, SubsetIndexer,
};
use crate::ratmat::RatMat;
use crate::{Error, Result};

/// Which basis a coefficient vector is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Indicator basis: D_ℓ has entry 1 exactly when |I∩J| = ℓ.
    D,
    /// PSD basis: P_t has entry C(|I∩J|, t).
    P,
}

/// A scheme element written as coefficients against one basis: the matrix
/// `sum_i coeffs[i] * B_i` where `B` is D or P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeVector {
    n: usize,
    r: usize,
    basis: Basis,
    coeffs: Vec<BigRational>,
}

impl SchemeVector {
    /// Requires `2r <= n` and exactly `r + 1` coefficients.
    pub fn new(n: usize, r: usize, basis: Basis, coeffs: Vec<BigRational>) -> Result<Self> {
        check_scheme_params(n, r)?;
        if coeffs.len() != r + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients for r = {r}, got {}",
                r + 1,
                coeffs.len()
            )));
        }
        Ok(Self { n, r, basis, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// Exact spectrum of a scheme element: eigenvalue λ_j on the level-j common
/// eigenspace, whose dimension is m_j = C(n,j) − C(n,j−1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSpectrum {
    pub eigenvalues: Vec<BigRational>,
    pub multiplicities: Vec<BigInt>,
}

impl LevelSpectrum {
    /// `sum_j m_j * λ_j`, which must equal the matrix trace.
    pub fn trace(&self) -> BigRational {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .map(|(l, m)| l * BigRational::from_integer(m.clone()))
            .sum()
    }

    /// Smallest eigenvalue across levels.
    pub fn min_eigenvalue(&self) -> &BigRational {
        self.eigenvalues.iter().min().expect("r+1 >= 1 levels")
    }
}

fn check_scheme_params(n: usize, r: usize) -> Result<()> {
    if 2 * r > n {
        return Err(Error::InvalidInput(format!(
            "scheme needs r <= n/2, got r = {r}, n = {n}"
        )));
    }
    Ok(())
}

/// The D-basis matrix D_ℓ over r-subsets: entry 1 iff |I∩J| = ℓ.
pub fn assemble_d(n: usize, r: usize, l: usize) -> Result<RatMat> {
    check_scheme_params(n, r)?;
    if l > r {
        return Err(Error::InvalidInput(format!(
            "intersection size {l} exceeds subset size {r}"
        )));
    }
    assemble_by_intersection(n, r, |i| if i == l { rat_one() } else { BigRational::zero() })
}

/// The P-basis matrix P_t over r-subsets: entry C(|I∩J|, t).
pub fn assemble_p(n: usize, r: usize, t: usize) -> Result<RatMat> {
    check_scheme_params(n, r)?;
    if t > r {
        return Err(Error::InvalidInput(format!(
            "basis index {t} exceeds subset size {r}"
        )));
    }
    assemble_by_intersection(n, r, |i| binom_rat(i, t as isize))
}

/// P_t assembled the slow structural way, as the sum over all t-sets T of
/// the rank-one product u_T u_Tᵀ with u_T(I) = [T ⊆ I].  Used to cross-check
/// [`assemble_p`].
pub fn assemble_p_rank_one(n: usize, r: usize, t: usize) -> Result<RatMat> {
    check_scheme_params(n, r)?;
    if t > r {
        return Err(Error::InvalidInput(format!(
            "basis index {t} exceeds subset size {r}"
        )));
    }
    let ix = SubsetIndexer::new(n, r)?;
    let dim = ix.dim();
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let mut m = RatMat::zeros(dim, dim);
    for tset in SubsetIndexer::new(n, t)?.iter() {
        let u: Vec<bool> = subsets
            .iter()
            .map(|s| intersection_size(s, &tset) == t)
            .collect();
        for i in 0..dim {
            if !u[i] {
                continue;
            }
            for j in 0..dim {
                if u[j] {
                    let v = m.get(i, j) + rat_one();
                    m.set(i, j, v);
                }
            }
        }
    }
    apply_subset_labels(&mut m, &ix);
    Ok(m)
}

fn rat_one() -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

fn assemble_by_intersection<F: Fn(usize) -> BigRational>(
    n: usize,
    r: usize,
    entry: F,
) -> Result<RatMat> {
    let ix = SubsetIndexer::new(n, r)?;
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let dim = subsets.len();
    let by_size: Vec<BigRational> = (0..=r).map(&entry).collect();
    let mut m = RatMat::from_fn(dim, dim, |i, j| {
        by_size[intersection_size(&subsets[i], &subsets[j])].clone()
    });
    apply_subset_labels(&mut m, &ix);
    Ok(m)
}

fn apply_subset_labels(m: &mut RatMat, ix: &SubsetIndexer) {
    let labels: Vec<String> = ix.iter().map(|s| SubsetIndexer::label(&s)).collect();
    m.set_labels(labels.clone(), labels)
        .expect("labels match dimension by construction");
}

/// Assembles any scheme vector into its dense matrix.
pub fn assemble(vec: &SchemeVector) -> Result<RatMat> {
    let by_size: Vec<BigRational> = match vec.basis {
        Basis::D => vec.coeffs.clone(),
        Basis::P => {
            // Entry at intersection size i is sum_t coeffs[t]*C(i,t).
            (0..=vec.r)
                .map(|i| {
                    vec.coeffs
                        .iter()
                        .enumerate()
                        .map(|(t, c)| c * binom_rat(i, t as isize))
                        .sum()
                })
                .collect()
        }
    };
    assemble_by_intersection(vec.n, vec.r, |i| by_size[i].clone())
}

/// Change of basis D → P: if the element is `sum_ℓ d_ℓ D_ℓ` then it equals
/// `sum_t p_t P_t` with `p_t = sum_{ℓ<=t} (−1)^{t−ℓ} C(t,ℓ) d_ℓ`.
pub fn d_to_p(vec: &SchemeVector) -> Result<SchemeVector> {
    if vec.basis != Basis::D {
        return Err(Error::InvalidInput("d_to_p expects a D-basis vector".into()));
    }
    let p: Vec<BigRational> = (0..=vec.r)
        .map(|t| {
            let mut acc = BigRational::zero();
            for l in 0..=t {
                let sign = if (t - l) % 2 == 0 { 1 } else { -1 };
                acc += binom_rat(t, l as isize) * &vec.coeffs[l] * crate::combinat::rat(sign);
            }
            acc
        })
        .collect();
    SchemeVector::new(vec.n, vec.r, Basis::P, p)
}

/// Change of basis P → D: `d_ℓ = sum_{t<=ℓ} C(ℓ,t) p_t`, the inverse of
/// [`d_to_p`].
pub fn p_to_d(vec: &SchemeVector) -> Result<SchemeVector> {
    if vec.basis != Basis::P {
        return Err(Error::InvalidInput("p_to_d expects a P-basis vector".into()));
    }
    let d: Vec<BigRational> = (0..=vec.r)
        .map(|l| {
            (0..=l)
                .map(|t| binom_rat(l, t as isize) * &vec.coeffs[t])
                .sum()
        })
        .collect();
    SchemeVector::new(vec.n, vec.r, Basis::D, d)
}

/// Closed-form eigenvalue of P_t on level j:
/// `C(n−t−j, r−t) * C(r−j, t−j)` when `j <= t`, zero otherwise.
pub fn p_eigenvalue(n: usize, r: usize, t: usize, j: usize) -> BigRational {
    if j > t {
        return BigRational::zero();
    }
    let first = binomial(n.saturating_sub(t + j), (r - t) as isize);
    let second = binomial(r - j, (t - j) as isize);
    BigRational::from_integer(first * second)
}

/// Exact spectrum of a scheme element: λ_j is linear over the P-basis, so
/// any vector is converted to P-coefficients and evaluated level by level.
pub fn scheme_spectrum(vec: &SchemeVector) -> Result<LevelSpectrum> {
    let p = match vec.basis {
        Basis::P => vec.clone(),
        Basis::D => d_to_p(vec)?,
    };
    let eigenvalues: Vec<BigRational> = (0..=p.r)
        .map(|j| {
            (0..=p.r)
                .map(|t| &p.coeffs[t] * p_eigenvalue(p.n, p.r, t, j))
                .sum()
        })
        .collect();
    let multiplicities: Vec<BigInt> = (0..=p.r)
        .map(|j| binom(p.n, j) - binomial(p.n, j as isize - 1))
        .collect();
    Ok(LevelSpectrum {
        eigenvalues,
        multiplicities,
    })
}

/// Upper bound on the level-j eigenvalue of an element with nonnegative
/// D-coefficients `a_ℓ`: `sum_{t>=j} b_t λ_j(P_t)` with
/// `b_t = sum_{ℓ<=t} C(t,ℓ) a_ℓ`.  Overestimates because it drops the
/// alternating signs of the exact change of basis.
pub fn q_upper_bound(vec: &SchemeVector, j: usize) -> Result<BigRational> {
    if vec.basis != Basis::D {
        return Err(Error::InvalidInput(
            "q_upper_bound expects a D-basis vector".into(),
        ));
    }
    if j > vec.r {
        return Err(Error::InvalidInput(format!(
            "level {j} exceeds r = {}",
            vec.r
        )));
    }
    if let Some(bad) = vec.coeffs.iter().find(|c| c.is_negative()) {
        return Err(Error::InvalidInput(format!(
            "q_upper_bound needs nonnegative coefficients, found {bad}"
        )));
    }
    let mut acc = BigRational::zero();
    for t in j..=vec.r {
        let b_t: BigRational = (0..=t)
            .map(|l| binom_rat(t, l as isize) * &vec.coeffs[l])
            .sum();
        acc += b_t * p_eigenvalue(vec.n, vec.r, t, j);
    }
    Ok(acc)
}

/// D-coefficients of the expectation matrix of the certificate over
/// G(n,1/2):
/// `e_ℓ = C(n−2r+ℓ, ℓ) * C(k, 2r−ℓ)/C(2r, 2r−ℓ) * 2^{−r² − C(ℓ,2)}`.
pub fn expectation_coefficients(n: usize, r: usize, k: usize) -> Result<SchemeVector> {
    check_scheme_params(n, r)?;
    let coeffs: Vec<BigRational> = (0..=r)
        .map(|l| {
            let sets = binom_rat(n - 2 * r + l, l as isize);
            let ratio = binom_rat(k, (2 * r - l) as isize) / binom_rat(2 * r, (2 * r - l) as isize);
            let exponent = -((r * r) as i64) - (l as i64) * (l as i64 - 1) / 2;
            sets * ratio * pow2(exponent)
        })
        .collect();
    SchemeVector::new(n, r, Basis::D, coeffs)
}

/// P-coefficients of the expectation matrix, `a_t = sum_{ℓ<=t} (−1)^{t−ℓ}
/// C(t,ℓ) e_ℓ`.
pub fn e_p_coefficients(n: usize, r: usize, k: usize) -> Result<SchemeVector> {
    d_to_p(&expectation_coefficients(n, r, k)?)
}

/// The level-r eigenvalue of the expectation matrix, with the positivity
/// flag that makes it the minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinEigReport {
    /// The top P-coefficient a_r, always the level-r eigenvalue.
    pub value: BigRational,
    /// True when every P-coefficient is strictly positive, in which case
    /// `value` is the smallest eigenvalue of the whole matrix.
    pub all_positive: bool,
}

/// Reports the expectation matrix's level-r eigenvalue a_r together with
/// whether all P-coefficients are positive; when they are, a_r is the least
/// eigenvalue because every level satisfies λ_j >= a_r·λ_j(P_r) = a_r.
pub fn e_min_eigenvalue(n: usize, r: usize, k: usize) -> Result<MinEigReport> {
    let p = e_p_coefficients(n, r, k)?;
    Ok(MinEigReport {
        value: p.coeffs[r].clone(),
        all_positive: p.coeffs.iter().all(Signed::is_positive),
    })
}

/// P-coefficients of the knapsack certificate matrix in closed form:
/// `a_t = C(k, 2r) * C(n−k, t)/C(k−2r+t, t)`.
pub fn knapsack_p_coefficients(n: usize, r: usize, k: usize) -> Result<SchemeVector> {
    check_scheme_params(n, r)?;
    if k < 2 * r || k > n {
        return Err(Error::InvalidInput(format!(
            "knapsack closed form needs 2r <= k <= n, got r = {r}, k = {k}, n = {n}"
        )));
    }
    let g0 = binom_rat(k, (2 * r) as isize);
    let coeffs: Vec<BigRational> = (0..=r)
        .map(|t| &g0 * binom_rat(n - k, t as isize) / binom_rat(k - 2 * r + t, t as isize))
        .collect();
    SchemeVector::new(n, r, Basis::P, coeffs)
}
