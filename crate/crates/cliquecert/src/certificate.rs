//! The dual certificate: a moment functional on vertex subsets, the moment
//! matrices M and M′ it induces, the exact decomposition M′ = E + L + Δ,
//! the locally random matrices R_a with their lifts, the knapsack
//! certificate on the complete graph, and exact axiom, kernel, and Gram
//! feasibility checks.
//!
//! Everything here is exact rational arithmetic; floating point appears
//! only inside [`gram_feasibility`], which delegates to [`crate::spectra`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::{
    binom, binom_rat, intersection_size, pow2, set_difference, set_union, BigRational,
    FullIndexer, SubsetIndexer,
};
use crate::graphs::Graph;
use crate::ratmat::RatMat;
use crate::spectra::{self, FloatMat};
use crate::{Error, Result};

/// Hard cap on C(n, r) for certificate matrices; beyond this the dense
/// rational representation stops being reasonable.
pub const CERTIFICATE_DIM_CAP: usize = 5000;

/// The (n, r, k) triple together with the derived per-intersection scalars
/// of the certificate:
/// β(i) = C(k,2r−i)/C(2r,2r−i),
/// α(i) = β(i)·C(n−2r+i, i)·2^{−r²−C(i,2)},
/// p(i) = 2^{−(r−i)²}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateParams {
    n: usize,
    r: usize,
    k: usize,
}

impl CertificateParams {
    /// Requires `2r <= n` and `C(n,r) <= 5000`.  A `k < 2r` is accepted but
    /// flagged degenerate: β(0) = 0 wipes out part of the certificate.
    pub fn new(n: usize, r: usize, k: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("certificate needs r >= 1".into()));
        }
        if 2 * r > n {
            return Err(Error::InvalidInput(format!(
                "certificate needs 2r <= n, got r = {r}, n = {n}"
            )));
        }
        let dim = binom(n, r);
        if dim > BigInt::from(CERTIFICATE_DIM_CAP) {
            return Err(Error::Capacity(format!(
                "C({n},{r}) = {dim} exceeds the certificate cap {CERTIFICATE_DIM_CAP}"
            )));
        }
        Ok(Self { n, r, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// True when k < 2r, where β(0) = 0 degenerates the certificate.
    pub fn degenerate(&self) -> bool {
        self.k < 2 * self.r
    }

    /// β(i) = C(k, 2r−i)/C(2r, 2r−i) for 0 ≤ i ≤ r.
    ///
    /// # Panics
    /// If `i > r`.
    pub fn beta(&self, i: usize) -> BigRational {
        assert!(i <= self.r, "beta index {i} exceeds r = {}", self.r);
        let m = (2 * self.r - i) as isize;
        binom_rat(self.k, m) / binom_rat(2 * self.r, m)
    }

    /// α(i) = β(i)·C(n−2r+i, i)·2^{−r²−C(i,2)} for 0 ≤ i ≤ r.
    ///
    /// # Panics
    /// If `i > r`.
    pub fn alpha(&self, i: usize) -> BigRational {
        assert!(i <= self.r, "alpha index {i} exceeds r = {}", self.r);
        let exponent = -((self.r * self.r) as i64) - (i as i64) * (i as i64 - 1) / 2;
        self.beta(i) * binom_rat(self.n - 2 * self.r + i, i as isize) * pow2(exponent)
    }

    /// p(i) = 2^{−(r−i)²}, the chance that all (r−i)² cross edges between
    /// two r-sets sharing i vertices are present.
    ///
    /// # Panics
    /// If `i > r`.
    pub fn p(&self, i: usize) -> BigRational {
        assert!(i <= self.r, "p index {i} exceeds r = {}", self.r);
        let a = (self.r - i) as i64;
        pow2(-(a * a))
    }

    /// Indexer over the r-subsets that label rows of M and M′.
    pub fn indexer(&self) -> SubsetIndexer {
        SubsetIndexer::new(self.n, self.r).expect("validated in new")
    }

    /// Indexer over all subsets of size at most r (the full moment matrix).
    pub fn full_indexer(&self) -> FullIndexer {
        FullIndexer::new(self.n, self.r).expect("validated in new")
    }
}

/// The moment functional of the certificate evaluated on every subset of
/// size at most 2r: value(I) = deg_G(I)·C(k,|I|)/C(2r,|I|).
#[derive(Debug, Clone)]
pub struct MomentFunctional {
    params: CertificateParams,
    graph: Graph,
    /// values[s][rank] for the colex rank within size s.
    values: Vec<Vec<BigRational>>,
}

impl MomentFunctional {
    pub fn new(graph: &Graph, params: &CertificateParams) -> Result<Self> {
        if graph.n() != params.n() {
            return Err(Error::InvalidInput(format!(
                "graph has {} vertices, params expect {}",
                graph.n(),
                params.n()
            )));
        }
        let (n, r, k) = (params.n, params.r, params.k);
        let mut values = Vec::with_capacity(2 * r + 1);
        for s in 0..=2 * r {
            let factor = binom_rat(k, s as isize) / binom_rat(2 * r, s as isize);
            let ix = SubsetIndexer::new(n, s)?;
            let mut level = Vec::with_capacity(ix.dim());
            for set in ix.iter() {
                let deg = graph.clique_degree(&set, r)?;
                level.push(BigRational::from_integer(deg) * &factor);
            }
            values.push(level);
        }
        Ok(Self {
            params: params.clone(),
            graph: graph.clone(),
            values,
        })
    }

    pub fn params(&self) -> &CertificateParams {
        &self.params
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// value(I) for a sorted subset of size at most 2r.
    pub fn value(&self, set: &[usize]) -> Result<&BigRational> {
        let s = set.len();
        if s > 2 * self.params.r {
            return Err(Error::InvalidInput(format!(
                "set of size {s} exceeds 2r = {}",
                2 * self.params.r
            )));
        }
        let rank = SubsetIndexer::new(self.params.n, s)?.rank(set)?;
        Ok(&self.values[s][rank])
    }
}

/// value(I) computed directly from the graph, without building the full
/// functional: deg_G(I)·C(k,|I|)/C(2r,|I|).
pub fn moment_value(graph: &Graph, params: &CertificateParams, set: &[usize]) -> Result<BigRational> {
    let s = set.len();
    if s > 2 * params.r {
        return Err(Error::InvalidInput(format!(
            "set of size {s} exceeds 2r = {}",
            2 * params.r
        )));
    }
    SubsetIndexer::new(params.n, s)?.rank(set)?;
    let deg = graph.clique_degree(set, params.r)?;
    let factor = binom_rat(params.k, s as isize) / binom_rat(2 * params.r, s as isize);
    Ok(BigRational::from_integer(deg) * factor)
}

fn subset_labels(ix: &SubsetIndexer) -> Vec<String> {
    ix.iter().map(|s| SubsetIndexer::label(&s)).collect()
}

/// The moment matrix over r-subsets: entry (I, J) = value(I ∪ J).
pub fn build_m(graph: &Graph, params: &CertificateParams) -> Result<RatMat> {
    let func = MomentFunctional::new(graph, params)?;
    let ix = params.indexer();
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let dim = subsets.len();
    let mut m = RatMat::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let u = set_union(&subsets[i], &subsets[j]);
            let v = func.value(&u)?.clone();
            m.set(j, i, v.clone());
            m.set(i, j, v);
        }
    }
    let labels = subset_labels(&ix);
    m.set_labels(labels.clone(), labels)?;
    Ok(m)
}

/// The moment matrix over all subsets of size at most r, sizes ascending
/// and colex within each size: entry (I, J) = value(I ∪ J).
pub fn build_full_moment_matrix(graph: &Graph, params: &CertificateParams) -> Result<RatMat> {
    let func = MomentFunctional::new(graph, params)?;
    let ix = params.full_indexer();
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let dim = subsets.len();
    let mut m = RatMat::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let u = set_union(&subsets[i], &subsets[j]);
            let v = func.value(&u)?.clone();
            m.set(j, i, v.clone());
            m.set(i, j, v);
        }
    }
    let labels = ix.labels();
    m.set_labels(labels.clone(), labels)?;
    Ok(m)
}

fn cross_edges_present(graph: &Graph, left: &[usize], right: &[usize]) -> bool {
    left.iter()
        .all(|&u| right.iter().all(|&v| graph.has_edge(u, v)))
}

/// The filled moment matrix M′: entry (I, J) is β(|I∩J|) times the number
/// of (2r−|I∪J|)-cliques in the common neighborhood of I∪J when every cross
/// edge between I∖J and J∖I is present, and zero otherwise.  Unlike M it
/// does not vanish on non-clique index sets.
pub fn build_m_prime(graph: &Graph, params: &CertificateParams) -> Result<RatMat> {
    if graph.n() != params.n() {
        return Err(Error::InvalidInput(format!(
            "graph has {} vertices, params expect {}",
            graph.n(),
            params.n()
        )));
    }
    let ix = params.indexer();
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let dim = subsets.len();
    let betas: Vec<BigRational> = (0..=params.r).map(|i| params.beta(i)).collect();
    let mut m = RatMat::zeros(dim, dim);
    for a in 0..dim {
        for b in a..dim {
            let (sa, sb) = (&subsets[a], &subsets[b]);
            let i = intersection_size(sa, sb);
            let left = set_difference(sa, sb);
            let right = set_difference(sb, sa);
            if !cross_edges_present(graph, &left, &right) {
                continue;
            }
            let union = set_union(sa, sb);
            let mask = graph.common_neighbors_mask(&union);
            let count = graph.count_cliques_in(&mask, 2 * params.r - union.len());
            let v = &betas[i] * BigRational::from_integer(BigInt::from(count));
            m.set(b, a, v.clone());
            m.set(a, b, v);
        }
    }
    let labels = subset_labels(&ix);
    m.set_labels(labels.clone(), labels)?;
    Ok(m)
}

/// M′ assembled literally as the sum over all 2r-sets T of the one-term
/// matrices M_T, for cross-checking [`build_m_prime`] at small n.  M_T has
/// entry β(|I∩J|) at (I, J) when I ∪ J ⊆ T and every edge of T outside
/// E(I) ∪ E(J) is present.
pub fn build_m_prime_brute_force(graph: &Graph, params: &CertificateParams) -> Result<RatMat> {
    if graph.n() != params.n() {
        return Err(Error::InvalidInput(format!(
            "graph has {} vertices, params expect {}",
            graph.n(),
            params.n()
        )));
    }
    let ix = params.indexer();
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let dim = subsets.len();
    let betas: Vec<BigRational> = (0..=params.r).map(|i| params.beta(i)).collect();
    let mut m = RatMat::zeros(dim, dim);
    let t_ix = SubsetIndexer::new(params.n, 2 * params.r)?;
    for t in t_ix.iter() {
        for a in 0..dim {
            if !subsets[a].iter().all(|v| t.contains(v)) {
                continue;
            }
            for b in 0..dim {
                if !subsets[b].iter().all(|v| t.contains(v)) {
                    continue;
                }
                let (sa, sb) = (&subsets[a], &subsets[b]);
                // Every edge of T except those inside I or inside J must be
                // present.
                let mut ok = true;
                'scan: for (x_pos, &x) in t.iter().enumerate() {
                    for &y in &t[x_pos + 1..] {
                        let inside_a = sa.contains(&x) && sa.contains(&y);
                        let inside_b = sb.contains(&x) && sb.contains(&y);
                        if !inside_a && !inside_b && !graph.has_edge(x, y) {
                            ok = false;
                            break 'scan;
                        }
                    }
                }
                if ok {
                    let i = intersection_size(sa, sb);
                    let v = m.get(a, b) + &betas[i];
                    m.set(a, b, v);
                }
            }
        }
    }
    let labels = subset_labels(&ix);
    m.set_labels(labels.clone(), labels)?;
    Ok(m)
}

/// The expectation matrix E: entry (I, J) = α(|I∩J|), the exact mean of M′
/// over G(n, 1/2).
pub fn build_expectation(params: &CertificateParams) -> Result<RatMat> {
    let ix = params.indexer();
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let dim = subsets.len();
    let alphas: Vec<BigRational> = (0..=params.r).map(|i| params.alpha(i)).collect();
    let mut m = RatMat::from_fn(dim, dim, |a, b| {
        alphas[intersection_size(&subsets[a], &subsets[b])].clone()
    });
    let labels = subset_labels(&ix);
    m.set_labels(labels.clone(), labels)?;
    Ok(m)
}

/// The locally random part L: at intersection size i, the entry is
/// α(i)·(1−p(i))/p(i) when all cross edges are present and −α(i) when one
/// is missing; the diagonal (i = r) is zero since p(r) = 1.  Its mean over
/// G(n, 1/2) is the zero matrix.
pub fn build_l(graph: &Graph, params: &CertificateParams) -> Result<RatMat> {
    if graph.n() != params.n() {
        return Err(Error::InvalidInput(format!(
            "graph has {} vertices, params expect {}",
            graph.n(),
            params.n()
        )));
    }
    let ix = params.indexer();
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let dim = subsets.len();
    let hit: Vec<BigRational> = (0..=params.r)
        .map(|i| {
            let p = params.p(i);
            params.alpha(i) * (BigRational::one() - &p) / p
        })
        .collect();
    let miss: Vec<BigRational> = (0..=params.r).map(|i| -params.alpha(i)).collect();
    let mut m = RatMat::zeros(dim, dim);
    for a in 0..dim {
        for b in a + 1..dim {
            let (sa, sb) = (&subsets[a], &subsets[b]);
            let i = intersection_size(sa, sb);
            let left = set_difference(sa, sb);
            let right = set_difference(sb, sa);
            let v = if cross_edges_present(graph, &left, &right) {
                hit[i].clone()
            } else {
                miss[i].clone()
            };
            m.set(b, a, v.clone());
            m.set(a, b, v);
        }
    }
    let labels = subset_labels(&ix);
    m.set_labels(labels.clone(), labels)?;
    Ok(m)
}

/// The exact three-part split of the filled moment matrix.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub params: CertificateParams,
    pub e: RatMat,
    pub l: RatMat,
    pub delta: RatMat,
}

impl Decomposition {
    /// E + L + Δ, which must reproduce M′ entrywise.
    pub fn sum(&self) -> RatMat {
        self.e.add(&self.l).add(&self.delta)
    }
}

/// Splits M′ into E + L + Δ with Δ = M′ − E − L computed exactly.
pub fn decompose(graph: &Graph, params: &CertificateParams) -> Result<Decomposition> {
    let m_prime = build_m_prime(graph, params)?;
    let e = build_expectation(params)?;
    let l = build_l(graph, params)?;
    let delta = m_prime.sub(&e).sub(&l);
    Ok(Decomposition {
        params: params.clone(),
        e,
        l,
        delta,
    })
}

/// The locally random matrix R_a over a-subsets: on disjoint pairs the
/// entry is 2^{a²}−1 when all a² cross edges are present and −1 otherwise;
/// intersecting pairs are zero.  Entrywise mean over G(n, 1/2) is zero.
pub fn build_r_a(graph: &Graph, a: usize) -> Result<crate::ratmat::IntMat> {
    let n = graph.n();
    if 2 * a > n {
        return Err(Error::InvalidInput(format!(
            "R_a needs 2a <= n, got a = {a}, n = {n}"
        )));
    }
    if a * a > 62 {
        return Err(Error::Capacity(format!("2^{} entries overflow", a * a)));
    }
    let ix = SubsetIndexer::new(n, a)?;
    let dim = ix.dim();
    if dim > CERTIFICATE_DIM_CAP {
        return Err(Error::Capacity(format!(
            "C({n},{a}) = {dim} exceeds the dense cap {CERTIFICATE_DIM_CAP}"
        )));
    }
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let full = (1i64 << (a * a)) - 1;
    let mut m = crate::ratmat::IntMat::zeros(dim, dim);
    for x in 0..dim {
        for y in x..dim {
            let (sx, sy) = (&subsets[x], &subsets[y]);
            if intersection_size(sx, sy) != 0 {
                continue;
            }
            let v = if cross_edges_present(graph, sx, sy) {
                full
            } else {
                -1
            };
            m.set(x, y, v);
            m.set(y, x, v);
        }
    }
    Ok(m)
}

/// Lifts a matrix over (r−i)-subsets to one over r-subsets: the (I, J)
/// entry is X(I∖J, J∖I) when |I∩J| = i and zero otherwise.
pub fn lift(x: &RatMat, i: usize, r: usize, n: usize) -> Result<RatMat> {
    if i > r {
        return Err(Error::InvalidInput(format!(
            "intersection size {i} exceeds r = {r}"
        )));
    }
    let a = r - i;
    let small = SubsetIndexer::new(n, a)?;
    if x.rows() != small.dim() || x.cols() != small.dim() {
        return Err(Error::InvalidInput(format!(
            "lift input is {}x{} but C({n},{a}) = {}",
            x.rows(),
            x.cols(),
            small.dim()
        )));
    }
    let big = SubsetIndexer::new(n, r)?;
    let subsets: Vec<Vec<usize>> = big.iter().collect();
    let dim = subsets.len();
    let mut out = RatMat::zeros(dim, dim);
    for p in 0..dim {
        for q in 0..dim {
            let (sp, sq) = (&subsets[p], &subsets[q]);
            if intersection_size(sp, sq) != i {
                continue;
            }
            let left = small.rank(&set_difference(sp, sq))?;
            let right = small.rank(&set_difference(sq, sp))?;
            out.set(p, q, x.get(left, right).clone());
        }
    }
    let labels = subset_labels(&big);
    out.set_labels(labels.clone(), labels)?;
    Ok(out)
}

/// Outcome of the exact dual-certificate axiom check.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    /// Non-clique sets with a nonzero value (must be empty).
    pub nonclique_violations: Vec<String>,
    /// Sets where (|I|−k)·value(I) + Σ_{j∉I} value(I∪{j}) ≠ 0 (must be
    /// empty).
    pub recurrence_violations: Vec<String>,
}

impl AxiomReport {
    pub fn is_clean(&self) -> bool {
        self.nonclique_violations.is_empty() && self.recurrence_violations.is_empty()
    }
}

/// Verifies, exactly in rationals, that the functional annihilates
/// non-cliques and satisfies the downward recurrence
/// (|I|−k)·value(I) + Σ_{j∉I} value(I∪{j}) = 0 for every |I| < 2r.
pub fn check_axioms(func: &MomentFunctional) -> Result<AxiomReport> {
    let params = func.params();
    let graph = func.graph();
    let (n, r, k) = (params.n(), params.r(), params.k());
    let mut nonclique = Vec::new();
    let mut recurrence = Vec::new();
    for s in 0..=2 * r {
        for set in SubsetIndexer::new(n, s)?.iter() {
            let v = func.value(&set)?;
            if !graph.is_clique(&set) && !v.is_zero() {
                nonclique.push(SubsetIndexer::label(&set));
            }
            if s < 2 * r {
                let mut acc = v * crate::combinat::rat(s as i64 - k as i64);
                for j in 0..n {
                    if set.binary_search(&j).is_err() {
                        let sup = set_union(&set, &[j]);
                        acc += func.value(&sup)?;
                    }
                }
                if !acc.is_zero() {
                    recurrence.push(SubsetIndexer::label(&set));
                }
            }
        }
    }
    Ok(AxiomReport {
        nonclique_violations: nonclique,
        recurrence_violations: recurrence,
    })
}

/// Outcome of the exact kernel-vector check on the full moment matrix.
#[derive(Debug, Clone, Serialize)]
pub struct KernelReport {
    /// Sets J with M·f_J ≠ 0 (must be empty).
    pub f_violations: Vec<String>,
    /// Non-clique r-sets whose matrix column is nonzero (must be empty).
    pub e_violations: Vec<String>,
    /// Σ_{ℓ<r} C(n,ℓ) plus the number of non-clique r-sets: a lower bound
    /// on the kernel dimension once all products vanish.
    pub kernel_lower_bound: usize,
    /// Number of non-clique r-sets, for reference.
    pub nonclique_r_sets: usize,
}

impl KernelReport {
    pub fn is_clean(&self) -> bool {
        self.f_violations.is_empty() && self.e_violations.is_empty()
    }
}

/// Verifies exactly that the vectors f_J (entry 1 on J∪{j} for j ∉ J and
/// |J|−k on J, for every |J| < r) and the unit vectors of non-clique r-sets
/// annihilate the full moment matrix, and reports the implied kernel
/// dimension lower bound.
pub fn check_kernel_vectors(
    m_full: &RatMat,
    graph: &Graph,
    params: &CertificateParams,
) -> Result<KernelReport> {
    let ix = params.full_indexer();
    if m_full.rows() != ix.dim() || m_full.cols() != ix.dim() {
        return Err(Error::InvalidInput(format!(
            "full moment matrix is {}x{}, expected dimension {}",
            m_full.rows(),
            m_full.cols(),
            ix.dim()
        )));
    }
    let (n, r, k) = (params.n(), params.r(), params.k());
    let dim = ix.dim();
    let mut f_violations = Vec::new();
    let mut small_count = 0usize;
    for s in 0..r {
        for j_set in SubsetIndexer::new(n, s)?.iter() {
            small_count += 1;
            // Sparse support of f_J: (rank, coefficient) pairs.
            let mut support: Vec<(usize, BigRational)> = Vec::with_capacity(n - s + 1);
            support.push((
                ix.rank(&j_set)?,
                crate::combinat::rat(s as i64 - k as i64),
            ));
            for j in 0..n {
                if j_set.binary_search(&j).is_err() {
                    support.push((ix.rank(&set_union(&j_set, &[j]))?, BigRational::one()));
                }
            }
            let clean = (0..dim).all(|row| {
                support
                    .iter()
                    .map(|(col, coef)| m_full.get(row, *col) * coef)
                    .sum::<BigRational>()
                    .is_zero()
            });
            if !clean {
                f_violations.push(SubsetIndexer::label(&j_set));
            }
        }
    }
    let mut e_violations = Vec::new();
    let mut nonclique_r_sets = 0usize;
    for set in SubsetIndexer::new(n, r)?.iter() {
        if graph.is_clique(&set) {
            continue;
        }
        nonclique_r_sets += 1;
        let col = ix.rank(&set)?;
        if (0..dim).any(|row| !m_full.get(row, col).is_zero()) {
            e_violations.push(SubsetIndexer::label(&set));
        }
    }
    Ok(KernelReport {
        f_violations,
        e_violations,
        kernel_lower_bound: small_count + nonclique_r_sets,
        nonclique_r_sets,
    })
}

/// The knapsack certificate matrix over subsets of size at most r:
/// entry (I, J) = C(n−s, 2r−s)·C(k,s)/C(2r,s) with s = |I∪J|.  Identical
/// to the full moment matrix of the complete graph.
pub fn build_grigoriev(n: usize, r: usize, k: usize) -> Result<RatMat> {
    let params = CertificateParams::new(n, r, k)?;
    let ix = params.full_indexer();
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let dim = subsets.len();
    let by_size: Vec<BigRational> = (0..=2 * r)
        .map(|s| {
            binom_rat(n - s, (2 * r - s) as isize) * binom_rat(k, s as isize)
                / binom_rat(2 * r, s as isize)
        })
        .collect();
    let mut m = RatMat::from_fn(dim, dim, |a, b| {
        by_size[set_union(&subsets[a], &subsets[b]).len()].clone()
    });
    let labels = ix.labels();
    m.set_labels(labels.clone(), labels)?;
    Ok(m)
}

/// Outcome of the Gram feasibility check: the normalized moment matrix is
/// factored into vectors U_S and every relaxation constraint is measured.
#[derive(Debug, Clone, Serialize)]
pub struct GramReport {
    pub dimension: usize,
    /// Relative PSD/clipping tolerance the check ran with.
    pub tolerance: f64,
    /// Σ_i ‖U_{i}‖², which must equal k.
    pub objective: f64,
    /// ‖U_∅‖², which must equal 1.
    pub empty_norm: f64,
    /// Largest |⟨U_u, U_v⟩| over non-edges (must be ~0).
    pub max_nonedge_product: f64,
    /// Largest spread of inner products within one union class.
    pub max_union_inconsistency: f64,
    /// Smallest and largest inner product overall (must be within
    /// [−tol, 1+tol]).
    pub min_product: f64,
    pub max_product: f64,
    /// Human-readable violations; empty iff feasible.
    pub violations: Vec<String>,
    pub feasible: bool,
}

/// Factors the normalized full moment matrix into Gram vectors and checks
/// the clique-relaxation constraints: orthogonality across non-edges,
/// consistency of inner products on equal unions, products within
/// [−tol, 1+tol], unit pseudo-probability mass, and objective value k.
///
/// The matrix is normalized by its (∅,∅) entry N_{2r}(G) first; a zero
/// there is a degenerate certificate, and a normalized eigenvalue below
/// −tol·scale is a PSD failure.
pub fn gram_feasibility(
    m_full: &RatMat,
    graph: &Graph,
    params: &CertificateParams,
    tol: f64,
) -> Result<GramReport> {
    let ix = params.full_indexer();
    if m_full.rows() != ix.dim() || m_full.cols() != ix.dim() {
        return Err(Error::InvalidInput(format!(
            "full moment matrix is {}x{}, expected dimension {}",
            m_full.rows(),
            m_full.cols(),
            ix.dim()
        )));
    }
    let total = m_full.get(0, 0);
    if total.is_zero() {
        return Err(Error::Degenerate(format!(
            "graph has no {}-clique, the functional is identically zero",
            2 * params.r()
        )));
    }
    let normalized = m_full.scale(&total.recip());
    let floats = FloatMat::from_ratmat(&normalized);
    let scale = floats.max_abs();
    let (evals, vecs) = spectra::symmetric_eigen(&floats)?;
    let min_eig = evals.first().copied().unwrap_or(0.0);
    if min_eig < -tol * scale {
        return Err(Error::NotPsd {
            min_eigenvalue: min_eig,
            tolerance: tol,
        });
    }
    let dim = floats.rows();
    // Gram factor W with rows indexed like the matrix: W[s][j] =
    // sqrt(max(λ_j, 0))·V[s][j]; inner products of rows reproduce the
    // normalized matrix up to clipping error.
    let roots: Vec<f64> = evals.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let w = FloatMat::from_fn(dim, dim, |s, j| roots[j] * vecs.get(s, j));
    let product = |a: usize, b: usize| -> f64 {
        (0..dim).map(|j| w.get(a, j) * w.get(b, j)).sum()
    };

    let mut violations = Vec::new();
    let empty_norm = product(0, 0);
    if (empty_norm - 1.0).abs() > tol {
        violations.push(format!("|U_empty|^2 = {empty_norm} differs from 1"));
    }

    let n = params.n();
    let single = |v: usize| ix.offset(1) + v;
    let mut objective = 0.0;
    for v in 0..n {
        objective += product(single(v), single(v));
    }
    let k = params.k() as f64;
    if (objective - k).abs() > tol {
        violations.push(format!("objective {objective} differs from k = {k}"));
    }

    let mut max_nonedge = 0.0f64;
    for u in 0..n {
        for v in u + 1..n {
            if !graph.has_edge(u, v) {
                let p = product(single(u), single(v)).abs();
                if p > max_nonedge {
                    max_nonedge = p;
                }
            }
        }
    }
    if max_nonedge > tol {
        violations.push(format!(
            "non-edge inner product {max_nonedge} exceeds tolerance"
        ));
    }

    // Group all index pairs by the union of their subsets; inner products
    // within one class must agree, and every product must look like a
    // probability.
    let subsets: Vec<Vec<usize>> = ix.iter().collect();
    let union_ix = FullIndexer::new(n, 2 * params.r())?;
    let mut class_range: Vec<Option<(f64, f64)>> = vec![None; union_ix.dim()];
    let mut min_product = f64::INFINITY;
    let mut max_product = f64::NEG_INFINITY;
    for a in 0..dim {
        for b in a..dim {
            let p = product(a, b);
            min_product = min_product.min(p);
            max_product = max_product.max(p);
            let u = union_ix.rank(&set_union(&subsets[a], &subsets[b]))?;
            class_range[u] = Some(match class_range[u] {
                None => (p, p),
                Some((lo, hi)) => (lo.min(p), hi.max(p)),
            });
        }
    }
    let max_union_inconsistency = class_range
        .iter()
        .flatten()
        .map(|(lo, hi)| hi - lo)
        .fold(0.0f64, f64::max);
    if max_union_inconsistency > tol {
        violations.push(format!(
            "inner products with equal unions spread by {max_union_inconsistency}"
        ));
    }
    if min_product < -tol || max_product > 1.0 + tol {
        violations.push(format!(
            "inner products [{min_product}, {max_product}] leave [-tol, 1+tol]"
        ));
    }

    Ok(GramReport {
        dimension: dim,
        tolerance: tol,
        objective,
        empty_norm,
        max_nonedge_product: max_nonedge,
        max_union_inconsistency,
        min_product,
        max_product,
        feasible: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rat;
    use crate::graphs::{enumerate_all_graphs, sample_gnp_half};
    use crate::johnson;

    fn params(n: usize, r: usize, k: usize) -> CertificateParams {
        CertificateParams::new(n, r, k).unwrap()
    }

    #[test]
    fn params_validation_and_scalars() {
        assert!(CertificateParams::new(3, 2, 4).is_err());
        assert!(CertificateParams::new(10, 0, 2).is_err());
        assert!(CertificateParams::new(200, 3, 6).is_err());
        let p = params(10, 2, 3);
        assert!(p.degenerate());
        assert!(p.beta(0).is_zero());
        let p = params(10, 2, 4);
        assert!(!p.degenerate());
        assert_eq!(p.p(2), rat(1));
        assert_eq!(p.p(0), pow2(-4));
        assert_eq!(p.beta(2), rat(1));
        // alpha matches the johnson-side expectation coefficients.
        let e = johnson::expectation_coefficients(10, 2, 4).unwrap();
        for i in 0..=2 {
            assert_eq!(p.alpha(i), e.coeffs()[i]);
        }
    }

    #[test]
    fn exponent_identity() {
        for (n, r, k) in [(8usize, 2usize, 4usize), (10, 2, 5), (12, 3, 7), (6, 1, 2)] {
            let p = params(n, r, k);
            for i in 0..=r {
                let lhs = p.beta(i)
                    * pow2(
                        -((2 * r) as i64 * (2 * r as i64 - 1) / 2)
                            + (2 * r - i) as i64 * ((2 * r - i) as i64 - 1) / 2,
                    )
                    * binom_rat(n - 2 * r + i, i as isize);
                assert_eq!(lhs, p.alpha(i) / p.p(i), "n {n} r {r} k {k} i {i}");
            }
        }
    }

    #[test]
    fn moment_value_examples() {
        let k4 = Graph::complete(4).unwrap();
        let p = params(4, 1, 2);
        assert_eq!(moment_value(&k4, &p, &[0, 1]).unwrap(), rat(1));

        let mut path = Graph::new(4).unwrap();
        path.set_edge(0, 1, true);
        path.set_edge(1, 2, true);
        assert_eq!(moment_value(&path, &p, &[0, 2]).unwrap(), rat(0));

        let k5 = Graph::complete(5).unwrap();
        let p = params(5, 2, 4);
        assert_eq!(moment_value(&k5, &p, &[]).unwrap(), rat(5));
        assert!(moment_value(&k5, &p, &[0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn functional_matches_direct_values() {
        let g = sample_gnp_half(9, 4).unwrap();
        let p = params(9, 2, 4);
        let func = MomentFunctional::new(&g, &p).unwrap();
        for s in 0..=4usize {
            for set in SubsetIndexer::new(9, s).unwrap().iter() {
                assert_eq!(
                    func.value(&set).unwrap(),
                    &moment_value(&g, &p, &set).unwrap()
                );
            }
        }
        assert!(func.value(&[0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn m_on_special_graphs() {
        // Complete graph: every entry follows the closed form in |I∪J|.
        let p = params(6, 2, 4);
        let m = build_m(&Graph::complete(6).unwrap(), &p).unwrap();
        let ix = p.indexer();
        let subsets: Vec<Vec<usize>> = ix.iter().collect();
        for a in 0..subsets.len() {
            for b in 0..subsets.len() {
                let s = set_union(&subsets[a], &subsets[b]).len();
                let expect = binom_rat(6 - s, (4 - s) as isize) * binom_rat(4, s as isize)
                    / binom_rat(4, s as isize);
                assert_eq!(m.get(a, b), &expect);
            }
        }
        // Edgeless: zero matrix.
        assert!(build_m(&Graph::new(6).unwrap(), &p).unwrap().is_zero());
        // A graph with no 4-clique: zero matrix.
        let mut c5 = Graph::new(6).unwrap();
        for i in 0..5 {
            c5.set_edge(i, (i + 1) % 5, true);
        }
        assert!(build_m(&c5, &p).unwrap().is_zero());
    }

    #[test]
    fn full_matrix_entries() {
        let g = sample_gnp_half(8, 1).unwrap();
        let p = params(8, 2, 4);
        let full = build_full_moment_matrix(&g, &p).unwrap();
        let ix = p.full_indexer();
        assert_eq!(full.get(0, 0), &BigRational::from_integer(g.count_cliques(4)));
        for v in 0..8 {
            let col = ix.rank(&[v]).unwrap();
            let expect = BigRational::from_integer(g.clique_degree(&[v], 2).unwrap())
                * rat(4)
                / rat(4);
            assert_eq!(full.get(col, 0), &expect);
        }
        // Rows of non-clique r-sets vanish.
        for set in SubsetIndexer::new(8, 2).unwrap().iter() {
            if !g.is_clique(&set) {
                let row = ix.rank(&set).unwrap();
                assert!((0..full.cols()).all(|c| full.get(row, c).is_zero()));
            }
        }
    }

    #[test]
    fn m_prime_at_r1_is_degree_plus_adjacency() {
        let g = sample_gnp_half(7, 2).unwrap();
        let p = params(7, 1, 2);
        let mp = build_m_prime(&g, &p).unwrap();
        for u in 0..7 {
            assert_eq!(mp.get(u, u), &rat(g.degree(u) as i64));
            for v in 0..7 {
                if u != v {
                    let expect = rat(g.has_edge(u, v) as i64);
                    assert_eq!(mp.get(u, v), &expect);
                }
            }
        }
    }

    #[test]
    fn m_prime_agrees_with_m_on_clique_pairs() {
        for seed in 0..6 {
            let g = sample_gnp_half(10, seed).unwrap();
            let p = params(10, 2, 4);
            let m = build_m(&g, &p).unwrap();
            let mp = build_m_prime(&g, &p).unwrap();
            let subsets: Vec<Vec<usize>> = p.indexer().iter().collect();
            for a in 0..subsets.len() {
                for b in 0..subsets.len() {
                    if g.is_clique(&subsets[a]) && g.is_clique(&subsets[b]) {
                        assert_eq!(m.get(a, b), mp.get(a, b), "seed {seed} ({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn m_prime_matches_brute_force_sum() {
        for seed in 0..4 {
            for (n, r, k) in [(6usize, 1usize, 2usize), (7, 2, 4), (8, 2, 5)] {
                let g = sample_gnp_half(n, seed * 13 + n as u64).unwrap();
                let p = params(n, r, k);
                assert_eq!(
                    build_m_prime(&g, &p).unwrap(),
                    build_m_prime_brute_force(&g, &p).unwrap(),
                    "seed {seed} n {n} r {r}"
                );
            }
        }
    }

    #[test]
    fn expectation_is_exact_average_of_m_prime() {
        let p = params(4, 1, 2);
        let e = build_expectation(&p).unwrap();
        assert_eq!(e.get(0, 0), &BigRational::new(3.into(), 2.into()));
        assert_eq!(e.get(0, 1), &BigRational::new(1.into(), 2.into()));
        let mut acc = RatMat::zeros(4, 4);
        let mut graphs = 0i64;
        for g in enumerate_all_graphs(4).unwrap() {
            acc = acc.add(&build_m_prime(&g, &p).unwrap());
            graphs += 1;
        }
        assert_eq!(acc.scale(&rat(graphs).recip()), {
            let mut expect = e.clone();
            expect
                .set_labels(acc.row_labels().to_vec(), acc.col_labels().to_vec())
                .unwrap();
            expect
        });
    }

    #[test]
    fn expectation_matches_scheme_assembly() {
        for (n, r, k) in [(8usize, 2usize, 4usize), (10, 2, 5), (9, 1, 3)] {
            let p = params(n, r, k);
            let direct = build_expectation(&p).unwrap();
            let via_scheme =
                johnson::assemble(&johnson::expectation_coefficients(n, r, k).unwrap()).unwrap();
            assert_eq!(direct, via_scheme);
        }
    }

    #[test]
    fn l_has_zero_diagonal_and_zero_mean() {
        let p = params(4, 1, 2);
        let mut acc = RatMat::zeros(4, 4);
        let mut graphs = 0i64;
        for g in enumerate_all_graphs(4).unwrap() {
            let l = build_l(&g, &p).unwrap();
            for i in 0..4 {
                assert!(l.get(i, i).is_zero());
            }
            acc = acc.add(&l);
            graphs += 1;
        }
        assert!(acc.scale(&rat(graphs).recip()).is_zero());
        // r=1, disjoint sets with the edge present: entry alpha(0).
        let k4 = Graph::complete(4).unwrap();
        let l = build_l(&k4, &p).unwrap();
        assert_eq!(l.get(0, 1), &p.alpha(0));
    }

    #[test]
    fn decomposition_is_exact_and_supported() {
        for seed in 0..5 {
            let g = sample_gnp_half(9, 100 + seed).unwrap();
            let p = params(9, 2, 4);
            let d = decompose(&g, &p).unwrap();
            assert_eq!(d.sum(), build_m_prime(&g, &p).unwrap());
            let subsets: Vec<Vec<usize>> = p.indexer().iter().collect();
            for a in 0..subsets.len() {
                for b in 0..subsets.len() {
                    let left = set_difference(&subsets[a], &subsets[b]);
                    let right = set_difference(&subsets[b], &subsets[a]);
                    if !cross_edges_present(&g, &left, &right) {
                        assert!(d.delta.get(a, b).is_zero(), "seed {seed} ({a},{b})");
                    }
                }
            }
        }
        // r=1: delta vanishes off the diagonal entirely.
        let g = sample_gnp_half(8, 3).unwrap();
        let d = decompose(&g, &params(8, 1, 2)).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                if a != b {
                    assert!(d.delta.get(a, b).is_zero());
                }
            }
        }
    }

    #[test]
    fn r_a_matrix_values() {
        let k6 = Graph::complete(6).unwrap();
        let r2 = build_r_a(&k6, 2).unwrap();
        let ix = SubsetIndexer::new(6, 2).unwrap();
        let a = ix.rank(&[0, 1]).unwrap();
        let b = ix.rank(&[2, 3]).unwrap();
        let c = ix.rank(&[1, 2]).unwrap();
        assert_eq!(r2.get(a, b), 15);
        assert_eq!(r2.get(a, c), 0);

        // a=1: zeros on the diagonal, +1 edges, -1 non-edges.
        let g = sample_gnp_half(6, 9).unwrap();
        let r1 = build_r_a(&g, 1).unwrap();
        for u in 0..6 {
            assert_eq!(r1.get(u, u), 0);
            for v in 0..6 {
                if u != v {
                    assert_eq!(r1.get(u, v), if g.has_edge(u, v) { 1 } else { -1 });
                }
            }
        }

        // Exact mean over all graphs on 4 vertices is the zero matrix.
        let mut acc = RatMat::zeros(6, 6);
        for g in enumerate_all_graphs(4).unwrap() {
            acc = acc.add(&build_r_a(&g, 2).unwrap().to_rat());
        }
        assert!(acc.is_zero());

        assert!(build_r_a(&k6, 4).is_err());
    }

    #[test]
    fn lift_definition_and_l_identity() {
        let g = sample_gnp_half(8, 21).unwrap();
        let p = params(8, 2, 4);
        let l = build_l(&g, &p).unwrap();
        let ix = p.indexer();
        let subsets: Vec<Vec<usize>> = ix.iter().collect();
        for i in 0..=2usize {
            let ra = build_r_a(&g, 2 - i).unwrap().to_rat();
            let lifted = lift(&ra, i, 2, 8).unwrap().scale(&p.alpha(i));
            for a in 0..subsets.len() {
                for b in 0..subsets.len() {
                    let want = if intersection_size(&subsets[a], &subsets[b]) == i {
                        l.get(a, b).clone()
                    } else {
                        rat(0)
                    };
                    assert_eq!(lifted.get(a, b), &want, "i {i} ({a},{b})");
                }
            }
        }
        // i=0 copies entries on disjoint pairs and zeroes the rest.
        let x = build_r_a(&g, 2).unwrap().to_rat();
        let lifted = lift(&x, 0, 2, 8).unwrap();
        for a in 0..subsets.len() {
            for b in 0..subsets.len() {
                if intersection_size(&subsets[a], &subsets[b]) == 0 {
                    assert_eq!(lifted.get(a, b), x.get(a, b));
                } else {
                    assert!(lifted.get(a, b).is_zero());
                }
            }
        }
        assert!(lift(&x, 1, 2, 8).is_err());
    }

    #[test]
    fn axioms_hold_and_detector_fires() {
        let g = sample_gnp_half(12, 8).unwrap();
        let p = params(12, 2, 4);
        let func = MomentFunctional::new(&g, &p).unwrap();
        let report = check_axioms(&func).unwrap();
        assert!(report.is_clean());

        // Edgeless graph: everything is zero, trivially consistent.
        let empty = Graph::new(12).unwrap();
        let func = MomentFunctional::new(&empty, &p).unwrap();
        assert!(check_axioms(&func).unwrap().is_clean());

        // A corrupted value must be flagged.
        let g = sample_gnp_half(8, 8).unwrap();
        let p8 = params(8, 2, 4);
        let mut func = MomentFunctional::new(&g, &p8).unwrap();
        func.values[1][0] += rat(1);
        let report = check_axioms(&func).unwrap();
        assert!(!report.is_clean());
    }

    #[test]
    fn kernel_vectors_annihilate_exactly() {
        let g = sample_gnp_half(10, 15).unwrap();
        let p = params(10, 2, 4);
        let full = build_full_moment_matrix(&g, &p).unwrap();
        let report = check_kernel_vectors(&full, &g, &p).unwrap();
        assert!(report.is_clean());
        let noncliques = SubsetIndexer::new(10, 2)
            .unwrap()
            .iter()
            .filter(|s| !g.is_clique(s))
            .count();
        assert_eq!(report.kernel_lower_bound, 1 + 10 + noncliques);

        // Complete graph: bound is just the small-set count.
        let k10 = Graph::complete(10).unwrap();
        let full = build_full_moment_matrix(&k10, &p).unwrap();
        let report = check_kernel_vectors(&full, &k10, &p).unwrap();
        assert!(report.is_clean());
        assert_eq!(report.kernel_lower_bound, 11);
    }

    #[test]
    fn grigoriev_equals_complete_graph_moments() {
        let p = params(8, 2, 5);
        let gr = build_grigoriev(8, 2, 5).unwrap();
        let full = build_full_moment_matrix(&Graph::complete(8).unwrap(), &p).unwrap();
        assert_eq!(gr, full);
        assert_eq!(gr.get(0, 0), &binom_rat(8, 4));
    }

    #[test]
    fn gram_feasible_on_complete_graph() {
        let p = params(7, 2, 4);
        let k7 = Graph::complete(7).unwrap();
        let full = build_full_moment_matrix(&k7, &p).unwrap();
        let report = gram_feasibility(&full, &k7, &p, 1e-6).unwrap();
        assert!(report.feasible, "violations: {:?}", report.violations);
        assert!((report.objective - 4.0).abs() < 1e-6);
        assert!((report.empty_norm - 1.0).abs() < 1e-6);
    }

    #[test]
    fn gram_degenerate_without_cliques() {
        let p = params(6, 2, 4);
        let empty = Graph::new(6).unwrap();
        let full = build_full_moment_matrix(&empty, &p).unwrap();
        assert!(matches!(
            gram_feasibility(&full, &empty, &p, 1e-6),
            Err(Error::Degenerate(_))
        ));
    }
}
