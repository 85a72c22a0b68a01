//! Monte Carlo and exact-enumeration harness: samples graphs, builds the
//! certificate matrices, and compares empirical statistics against the
//! closed-form bounds.  Trials are independent, seeded by mixing the
//! master seed with the trial index, and run in parallel; reports are
//! bit-identical for a given config regardless of thread count.

use std::collections::BTreeMap;
use std::io::Write;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds;
use crate::certificate::{self, build_m, build_m_prime, build_r_a, CertificateParams};
use crate::combinat::{binom, binom_rat, pow2, FullIndexer, SubsetIndexer};
use crate::graphs::{enumerate_all_graphs, mix_seed, sample_gnp_half, Graph, SplitMix64};
use crate::ratmat::RatMat;
use crate::spectra::{self, rat_to_f64, FloatMat};
use crate::{Error, Result};

/// Dimension above which R_a norms switch from the dense eigensolver to
/// the matrix-free route.
const DENSE_NORM_CUTOFF: usize = 300;

/// Hard cap on C(n,a) for [`norm_r_a`]; the matrix-free route stores a few
/// vectors of this length, never the matrix.
pub const NORM_DIM_CAP: usize = 12000;

/// Parameters shared by every trial of an experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub trials: usize,
    pub master_seed: u64,
    /// Tail parameter fed to the theory thresholds.
    pub eps: f64,
    /// Relative PSD tolerance for eigenvalue verdicts.
    pub psd_tol: f64,
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidInput("need at least one trial".into()));
        }
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(Error::InvalidInput(format!(
                "epsilon must lie in (0,1), got {}",
                self.eps
            )));
        }
        if !(self.psd_tol > 0.0) {
            return Err(Error::InvalidInput(format!(
                "psd tolerance must be positive, got {}",
                self.psd_tol
            )));
        }
        Ok(())
    }

    /// The seed for one trial: the (trial+1)-th output of the generator
    /// seeded with the master seed.
    pub fn trial_seed(&self, trial: usize) -> u64 {
        mix_seed(self.master_seed, trial as u64)
    }
}

/// One trial's outcome.  The meaning of `statistic` and `center` is fixed
/// by each experiment; `violation` always means the trial left the
/// theory's tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRow {
    pub trial: usize,
    pub seed: u64,
    pub statistic: f64,
    pub center: f64,
    pub threshold: f64,
    pub violation: bool,
}

/// Aggregate over all trials.  `extra` carries experiment-specific fields
/// (PSD rates, norm ratios) keyed by name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub violation_count: usize,
    pub violation_rate: f64,
    pub empirical_mean: f64,
    pub empirical_max_dev: f64,
    pub theory_threshold: f64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, Value>,
}

/// A full experiment: config echo, per-trial rows, and the summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub name: String,
    pub config: TrialConfig,
    pub rows: Vec<TrialRow>,
    pub summary: Summary,
}

impl ExperimentReport {
    fn assemble(
        name: &str,
        config: &TrialConfig,
        rows: Vec<TrialRow>,
        theory_threshold: f64,
        extra: BTreeMap<String, Value>,
    ) -> Self {
        let violation_count = rows.iter().filter(|r| r.violation).count();
        let mean = rows.iter().map(|r| r.statistic).sum::<f64>() / rows.len() as f64;
        let max_dev = rows
            .iter()
            .map(|r| (r.statistic - r.center).abs())
            .fold(0.0f64, f64::max);
        ExperimentReport {
            name: name.into(),
            config: config.clone(),
            rows,
            summary: Summary {
                violation_count,
                violation_rate: violation_count as f64 / config.trials as f64,
                empirical_mean: mean,
                empirical_max_dev: max_dev,
                theory_threshold,
                extra,
            },
        }
    }

    /// Sampling slack for violation-rate assertions: 3·√(ε(1−ε)/trials).
    pub fn rate_slack(&self) -> f64 {
        let e = self.config.eps;
        3.0 * (e * (1.0 - e) / self.config.trials as f64).sqrt()
    }

    /// Writes the per-trial rows as CSV with the fixed header
    /// `trial,seed,statistic,center,threshold,violation`.
    pub fn to_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "trial,seed,statistic,center,threshold,violation")?;
        for row in &self.rows {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                row.trial,
                row.seed,
                row.statistic,
                row.center,
                row.threshold,
                row.violation as u8
            )?;
        }
        Ok(())
    }
}

fn big_to_f64(v: &num_bigint::BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}

/// Samples graphs and reports how often M′ and the clique block of M are
/// PSD.  Per trial, `statistic` is the minimum eigenvalue of M′, `center`
/// is 0, `threshold` echoes the relative PSD tolerance, and `violation`
/// flags a failure of the structural implication "M′ PSD ⇒ clique block
/// of M PSD", which the theory demands on every graph.  The summary's
/// `extra` carries both PSD rates and the per-trial verdicts.
pub fn psd_frequency(config: &TrialConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let params = CertificateParams::new(config.n, config.r, config.k)?;
    let outcomes: Vec<(TrialRow, bool, bool, f64)> = (0..config.trials)
        .into_par_iter()
        .map(|trial| -> Result<(TrialRow, bool, bool, f64)> {
            let seed = config.trial_seed(trial);
            let g = sample_gnp_half(config.n, seed)?;
            let m_prime = build_m_prime(&g, &params)?;
            let mp_spec = spectra::is_psd(&FloatMat::from_ratmat(&m_prime), config.psd_tol)?;
            let m = build_m(&g, &params)?;
            let block = spectra::clique_principal_submatrix(&m, &g, config.r)?;
            let block_spec = spectra::is_psd(&FloatMat::from_ratmat(&block), config.psd_tol)?;
            let violation = mp_spec.psd && !block_spec.psd;
            Ok((
                TrialRow {
                    trial,
                    seed,
                    statistic: mp_spec.min,
                    center: 0.0,
                    threshold: config.psd_tol,
                    violation,
                },
                mp_spec.psd,
                block_spec.psd,
                block_spec.min,
            ))
        })
        .collect::<Result<_>>()?;
    let (rows, mp_psd, block_psd, block_min): (Vec<_>, Vec<_>, Vec<_>, Vec<_>) =
        unzip4(outcomes);
    let trials = config.trials as f64;
    let mut extra = BTreeMap::new();
    extra.insert(
        "mprime_psd_rate".into(),
        json!(mp_psd.iter().filter(|&&b| b).count() as f64 / trials),
    );
    extra.insert(
        "block_psd_rate".into(),
        json!(block_psd.iter().filter(|&&b| b).count() as f64 / trials),
    );
    extra.insert("mprime_psd".into(), json!(mp_psd));
    extra.insert("block_psd".into(), json!(block_psd));
    extra.insert("block_min_eigenvalues".into(), json!(block_min));
    Ok(ExperimentReport::assemble(
        "psd_frequency",
        config,
        rows,
        config.psd_tol,
        extra,
    ))
}

fn unzip4<A, B, C, D>(v: Vec<(A, B, C, D)>) -> (Vec<A>, Vec<B>, Vec<C>, Vec<D>) {
    let mut a = Vec::with_capacity(v.len());
    let mut b = Vec::with_capacity(v.len());
    let mut c = Vec::with_capacity(v.len());
    let mut d = Vec::with_capacity(v.len());
    for (x, y, z, w) in v {
        a.push(x);
        b.push(y);
        c.push(z);
        d.push(w);
    }
    (a, b, c, d)
}

/// Counts a-cliques per sampled graph and compares the deviation from the
/// exact mean 2^{−C(a,2)}·C(n,a) against the large-deviation threshold.
pub fn concentration_cliques(config: &TrialConfig, a: usize) -> Result<ExperimentReport> {
    config.validate()?;
    if a > config.n {
        return Err(Error::InvalidInput(format!(
            "clique size {a} exceeds n = {}",
            config.n
        )));
    }
    let center_exact =
        pow2(-((a * (a.saturating_sub(1)) / 2) as i64)) * binom_rat(config.n, a as isize);
    let center = rat_to_f64(&center_exact);
    let threshold = bounds::clique_count_threshold(a, config.n, config.eps)?.value;
    let rows: Vec<TrialRow> = (0..config.trials)
        .into_par_iter()
        .map(|trial| -> Result<TrialRow> {
            let seed = config.trial_seed(trial);
            let g = sample_gnp_half(config.n, seed)?;
            let statistic = big_to_f64(&g.count_cliques(a));
            Ok(TrialRow {
                trial,
                seed,
                statistic,
                center,
                threshold,
                violation: (statistic - center).abs() > threshold,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ExperimentReport::assemble(
        "concentration_cliques",
        config,
        rows,
        threshold,
        BTreeMap::new(),
    ))
}

/// Clique degree of the fixed set I = {0, …, i−1}, conditioned on I being
/// a clique by forcing its internal edges present after sampling.  The
/// deviation from the exact conditional center is compared against the
/// degree threshold.
pub fn concentration_degree(config: &TrialConfig, i: usize) -> Result<ExperimentReport> {
    config.validate()?;
    if i > 2 * config.r {
        return Err(Error::InvalidInput(format!(
            "set size {i} exceeds 2r = {}",
            2 * config.r
        )));
    }
    if i > config.n {
        return Err(Error::InvalidInput(format!(
            "set size {i} exceeds n = {}",
            config.n
        )));
    }
    let (report, center_exact) =
        bounds::degree_threshold(config.r, i, config.n, config.eps)?;
    let center = rat_to_f64(&center_exact);
    let threshold = report.value;
    let set: Vec<usize> = (0..i).collect();
    let rows: Vec<TrialRow> = (0..config.trials)
        .into_par_iter()
        .map(|trial| -> Result<TrialRow> {
            let seed = config.trial_seed(trial);
            let mut g = sample_gnp_half(config.n, seed)?;
            for u in 0..i {
                for v in u + 1..i {
                    g.set_edge(u, v, true);
                }
            }
            let statistic = big_to_f64(&g.clique_degree(&set, config.r)?);
            Ok(TrialRow {
                trial,
                seed,
                statistic,
                center,
                threshold,
                violation: (statistic - center).abs() > threshold,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ExperimentReport::assemble(
        "concentration_degree",
        config,
        rows,
        threshold,
        BTreeMap::new(),
    ))
}

/// Matrix-free application of R_a: only the graph and a few vectors of
/// length C(n,a) are held, never the matrix.
struct RaOperator<'g> {
    graph: &'g Graph,
    a: usize,
    subsets: Vec<Vec<usize>>,
    /// For each row V, the ranks of all subsets of V in the ≤a indexer,
    /// each with the parity sign (−1)^{|U|} used for the disjointness sum.
    signed_subsets: Vec<Vec<(usize, f64)>>,
    /// binomials[v][j] = C(v, j) for incremental colex ranking.
    binomials: Vec<Vec<usize>>,
    factor: f64,
}

impl<'g> RaOperator<'g> {
    fn new(graph: &'g Graph, a: usize) -> Result<Self> {
        let n = graph.n();
        if a == 0 || 2 * a > n {
            return Err(Error::InvalidInput(format!(
                "R_a needs 1 <= a <= n/2, got a = {a}, n = {n}"
            )));
        }
        let ix = SubsetIndexer::new(n, a)?;
        if ix.dim() > NORM_DIM_CAP {
            return Err(Error::Capacity(format!(
                "C({n},{a}) = {} exceeds the norm cap {NORM_DIM_CAP}",
                ix.dim()
            )));
        }
        let subsets: Vec<Vec<usize>> = ix.iter().collect();
        let full = FullIndexer::new(n, a)?;
        let signed_subsets = subsets
            .iter()
            .map(|set| {
                let mut list = Vec::with_capacity(1 << a);
                for mask in 0u32..(1 << a) {
                    let sub: Vec<usize> = (0..a)
                        .filter(|&b| mask >> b & 1 == 1)
                        .map(|b| set[b])
                        .collect();
                    let sign = if sub.len() % 2 == 0 { 1.0 } else { -1.0 };
                    list.push((full.rank(&sub).expect("subset in range"), sign));
                }
                list
            })
            .collect();
        let mut binomials = vec![vec![0usize; a + 1]; n + 1];
        for (v, row) in binomials.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = binom(v, j).to_usize().expect("small binomial");
            }
        }
        Ok(Self {
            graph,
            a,
            subsets,
            signed_subsets,
            binomials,
            factor: (1u64 << (a * a)) as f64,
        })
    }

    fn dim(&self) -> usize {
        self.subsets.len()
    }

    /// Sums x over all a-subsets of `cands`, walking combinations in colex
    /// order with an incrementally maintained rank.
    fn neighborhood_sum(&self, cands: &[usize], x: &[f64]) -> f64 {
        let a = self.a;
        let mut acc = 0.0;
        // chosen[d] is the candidate index for depth d; rank accumulates
        // C(v, depth+1) per chosen vertex v.
        let mut stack: Vec<(usize, usize)> = Vec::with_capacity(a);
        let mut start = 0usize;
        let mut rank = 0usize;
        loop {
            if stack.len() == a {
                acc += x[rank];
            } else if cands.len() + stack.len() >= a + start {
                // Descend: pick cands[start] at the next depth.
                let depth = stack.len() + 1;
                let v = cands[start];
                stack.push((start, self.binomials[v][depth]));
                rank += self.binomials[v][depth];
                start += 1;
                continue;
            }
            // Backtrack to the deepest frame that can advance.
            loop {
                match stack.pop() {
                    None => return acc,
                    Some((idx, contrib)) => {
                        rank -= contrib;
                        let depth = stack.len() + 1;
                        if idx + 1 + (a - depth) < cands.len() {
                            let v = cands[idx + 1];
                            stack.push((idx + 1, self.binomials[v][depth]));
                            rank += self.binomials[v][depth];
                            start = idx + 2;
                            break;
                        }
                    }
                }
            }
        }
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        // Superset sums over the ≤a indexer: g[U] = Σ_{W ⊇ U} x_W.
        let full = FullIndexer::new(self.graph.n(), self.a).expect("validated");
        let mut g = vec![0.0; full.dim()];
        for (w, list) in self.signed_subsets.iter().enumerate() {
            for &(rank, _) in list {
                g[rank] += x[w];
            }
        }
        self.subsets
            .iter()
            .zip(&self.signed_subsets)
            .map(|(set, list)| {
                let disjoint: f64 = list.iter().map(|&(rank, sign)| sign * g[rank]).sum();
                let cands = self.graph.common_neighbors(set);
                self.factor * self.neighborhood_sum(&cands, x) - disjoint
            })
            .collect()
    }
}

/// Extreme eigenvalues of a symmetric operator by the Krylov iteration
/// with full reorthogonalization and a deterministic start vector.
fn lanczos_extremes<F: Fn(&[f64]) -> Vec<f64>>(
    matvec: F,
    dim: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if dim == 0 {
        return Ok((0.0, 0.0));
    }
    let mut rng = SplitMix64::new(seed);
    let mut v: Vec<f64> = (0..dim)
        .map(|_| if rng.next_u64() & 1 == 1 { 1.0 } else { -1.0 })
        .collect();
    let norm = (dim as f64).sqrt();
    v.iter_mut().for_each(|e| *e /= norm);

    let max_iter = dim.min(240);
    let mut basis: Vec<Vec<f64>> = vec![v];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut last_extremes: Option<(f64, f64)> = None;
    let mut scale = 1.0f64;

    let extremes_of = |alphas: &[f64], betas: &[f64]| -> Result<(f64, f64)> {
        let j = alphas.len();
        let mut t = FloatMat::zeros(j, j);
        for (i, &al) in alphas.iter().enumerate() {
            t.set(i, i, al);
            if i + 1 < j {
                t.set(i, i + 1, betas[i]);
                t.set(i + 1, i, betas[i]);
            }
        }
        let rep = spectra::eigenvalues_symmetric(&t)?;
        Ok((rep.min, rep.max))
    };

    for j in 0..max_iter {
        let vj = basis[j].clone();
        let mut w = matvec(&vj);
        if j > 0 {
            let beta = betas[j - 1];
            let prev = &basis[j - 1];
            w.iter_mut().zip(prev).for_each(|(e, p)| *e -= beta * p);
        }
        let alpha: f64 = w.iter().zip(&vj).map(|(a, b)| a * b).sum();
        w.iter_mut().zip(&vj).for_each(|(e, p)| *e -= alpha * p);
        // Two passes of reorthogonalization against the whole basis keep
        // the recurrence honest in floating point.
        for _ in 0..2 {
            for u in &basis {
                let proj: f64 = w.iter().zip(u).map(|(a, b)| a * b).sum();
                w.iter_mut().zip(u).for_each(|(e, p)| *e -= proj * p);
            }
        }
        alphas.push(alpha);
        scale = scale.max(alpha.abs());
        let beta = w.iter().map(|e| e * e).sum::<f64>().sqrt();
        let exhausted = beta <= 1e-12 * scale.max(1.0);
        let check_now = exhausted || j + 1 == max_iter || (j >= 20 && (j + 1) % 16 == 0);
        if check_now {
            let current = extremes_of(&alphas, &betas)?;
            if let Some(prev) = last_extremes {
                let tol = 1e-11 * scale.max(1.0);
                if exhausted
                    || ((current.0 - prev.0).abs() <= tol && (current.1 - prev.1).abs() <= tol)
                {
                    return Ok(current);
                }
            }
            if exhausted {
                return Ok(current);
            }
            last_extremes = Some(current);
        }
        if exhausted {
            break;
        }
        scale = scale.max(beta);
        betas.push(beta);
        let next: Vec<f64> = w.iter().map(|e| e / beta).collect();
        basis.push(next);
    }
    extremes_of(&alphas, &betas)
}

/// Spectral norm of R_a on one graph, choosing the dense eigensolver for
/// small dimensions and the matrix-free Krylov route above
/// [`DENSE_NORM_CUTOFF`].
fn r_a_norm(graph: &Graph, a: usize, seed: u64) -> Result<f64> {
    let dim = {
        let d = binom(graph.n(), a);
        d.to_usize()
            .ok_or_else(|| Error::Capacity(format!("C({},{a}) overflows", graph.n())))?
    };
    if dim <= DENSE_NORM_CUTOFF {
        let dense = build_r_a(graph, a)?.to_rat();
        spectra::spectral_norm(&FloatMat::from_ratmat(&dense))
    } else {
        let op = RaOperator::new(graph, a)?;
        let (lo, hi) = lanczos_extremes(|x| op.apply(x), op.dim(), seed ^ 0x6C62_272E_07BB_0142)?;
        Ok(lo.abs().max(hi.abs()))
    }
}

/// Spectral norm of R_a per sampled graph against the theory bound
/// 2^{a²+2a+2}·ln(n/ε)·n^{a−1/2}.  `center` is 0, so the deviation is the
/// norm itself.  The summary's `extra` records the per-trial ratios
/// norm/n^{a−1/2}, the route taken, and whether the bound's n ≥ 100 side
/// condition holds.
pub fn norm_r_a(config: &TrialConfig, a: usize) -> Result<ExperimentReport> {
    config.validate()?;
    let bound = bounds::r_a_norm_bound(a, config.n, config.eps)?;
    let threshold = bound.value;
    let rows: Vec<TrialRow> = (0..config.trials)
        .into_par_iter()
        .map(|trial| -> Result<TrialRow> {
            let seed = config.trial_seed(trial);
            let g = sample_gnp_half(config.n, seed)?;
            let statistic = r_a_norm(&g, a, seed)?;
            Ok(TrialRow {
                trial,
                seed,
                statistic,
                center: 0.0,
                threshold,
                violation: statistic > threshold,
            })
        })
        .collect::<Result<_>>()?;
    let scale = (config.n as f64).powf(a as f64 - 0.5);
    let ratios: Vec<f64> = rows.iter().map(|r| r.statistic / scale).collect();
    let dim = binom(config.n, a).to_usize().unwrap_or(usize::MAX);
    let mut extra = BTreeMap::new();
    extra.insert("bound_valid".into(), json!(bound.valid));
    extra.insert("ratios".into(), json!(ratios));
    extra.insert(
        "route".into(),
        json!(if dim <= DENSE_NORM_CUTOFF {
            "dense"
        } else {
            "matrix_free"
        }),
    );
    Ok(ExperimentReport::assemble(
        "norm_r_a", config, rows, threshold, extra,
    ))
}

/// Outcome of the exact enumeration oracle: either every identity held
/// over all graphs, or the first discrepancy found.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub graphs: usize,
    pub pass: bool,
    pub first_discrepancy: Option<String>,
}

/// Enumerates every graph on n ≤ 5 vertices and checks, in exact rational
/// arithmetic, that the averages obey avg(M′) = E, avg(L) = 0,
/// avg(Δ) = 0, and avg(M)(I,J) = 2^{−C(2r,2)}·C(n−s,2r−s)·C(k,s)/C(2r,s)
/// with s = |I∪J|.
pub fn exact_expectation_oracle(n: usize, r: usize, k: usize) -> Result<OracleReport> {
    if n > 5 {
        return Err(Error::Capacity(format!(
            "exact enumeration is limited to n <= 5, got {n}"
        )));
    }
    let params = CertificateParams::new(n, r, k)?;
    let dim = params.indexer().dim();
    let mut sum_m = RatMat::zeros(dim, dim);
    let mut sum_mp = RatMat::zeros(dim, dim);
    let mut sum_l = RatMat::zeros(dim, dim);
    let mut sum_delta = RatMat::zeros(dim, dim);
    let mut graphs = 0i64;
    for g in enumerate_all_graphs(n)? {
        let d = certificate::decompose(&g, &params)?;
        sum_m = sum_m.add(&build_m(&g, &params)?);
        sum_mp = sum_mp.add(&d.sum());
        sum_l = sum_l.add(&d.l);
        sum_delta = sum_delta.add(&d.delta);
        graphs += 1;
    }
    let inv = crate::combinat::rat(graphs).recip();
    let avg_m = sum_m.scale(&inv);
    let avg_mp = sum_mp.scale(&inv);
    let avg_l = sum_l.scale(&inv);
    let avg_delta = sum_delta.scale(&inv);

    let mut discrepancy: Option<String> = None;
    let e = certificate::build_expectation(&params)?;
    let subsets: Vec<Vec<usize>> = params.indexer().iter().collect();
    'scan: for a in 0..dim {
        for b in 0..dim {
            if avg_mp.get(a, b) != e.get(a, b) {
                discrepancy = Some(format!(
                    "avg(M') at ({a},{b}) is {}, expectation matrix says {}",
                    avg_mp.get(a, b),
                    e.get(a, b)
                ));
                break 'scan;
            }
            if !avg_l.get(a, b).is_zero() {
                discrepancy = Some(format!("avg(L) at ({a},{b}) is {}", avg_l.get(a, b)));
                break 'scan;
            }
            if !avg_delta.get(a, b).is_zero() {
                discrepancy =
                    Some(format!("avg(Delta) at ({a},{b}) is {}", avg_delta.get(a, b)));
                break 'scan;
            }
            let s = crate::combinat::set_union(&subsets[a], &subsets[b]).len();
            let expect = pow2(-((r * (2 * r - 1)) as i64))
                * binom_rat(n - s, (2 * r - s) as isize)
                * binom_rat(k, s as isize)
                / binom_rat(2 * r, s as isize);
            if avg_m.get(a, b) != &expect {
                discrepancy = Some(format!(
                    "avg(M) at ({a},{b}) is {}, closed form says {expect}",
                    avg_m.get(a, b)
                ));
                break 'scan;
            }
        }
    }
    Ok(OracleReport {
        n,
        r,
        k,
        graphs: graphs as usize,
        pass: discrepancy.is_none(),
        first_discrepancy: discrepancy,
    })
}

/// Sweep outcome of [`gap_probe`]: the minimum eigenvalue of M′ for each
/// k in the range, and the largest k still numerically PSD.
#[derive(Debug, Clone, Serialize)]
pub struct GapProbeReport {
    pub n: usize,
    pub r: usize,
    pub seed: Option<u64>,
    pub k_values: Vec<usize>,
    pub min_eigenvalues: Vec<f64>,
    pub psd: Vec<bool>,
    pub largest_psd_k: Option<usize>,
}

/// Sweeps k over `k_range` on one graph and records where M′ stops being
/// numerically PSD.  Entries of M′ depend on k only through β, so the
/// graph structure is computed once.  Report-only: nothing is asserted.
pub fn gap_probe_on(graph: &Graph, r: usize, k_range: (usize, usize)) -> Result<GapProbeReport> {
    let (k_lo, k_hi) = k_range;
    if k_lo < 2 * r || k_hi > graph.n() || k_lo > k_hi {
        return Err(Error::InvalidInput(format!(
            "k range [{k_lo},{k_hi}] must sit inside [2r, n] = [{}, {}]",
            2 * r,
            graph.n()
        )));
    }
    let mut k_values = Vec::new();
    let mut min_eigenvalues = Vec::new();
    let mut psd = Vec::new();
    let mut largest = None;
    for k in k_lo..=k_hi {
        let params = CertificateParams::new(graph.n(), r, k)?;
        let m_prime = build_m_prime(graph, &params)?;
        let rep = spectra::eigenvalues_symmetric(&FloatMat::from_ratmat(&m_prime))?;
        if rep.psd {
            largest = Some(k);
        }
        k_values.push(k);
        min_eigenvalues.push(rep.min);
        psd.push(rep.psd);
    }
    Ok(GapProbeReport {
        n: graph.n(),
        r,
        seed: None,
        k_values,
        min_eigenvalues,
        psd,
        largest_psd_k: largest,
    })
}

/// [`gap_probe_on`] for one graph sampled from G(n, 1/2) with the given
/// seed.
pub fn gap_probe(
    n: usize,
    r: usize,
    seed: u64,
    k_range: (usize, usize),
) -> Result<GapProbeReport> {
    let g = sample_gnp_half(n, seed)?;
    let mut report = gap_probe_on(&g, r, k_range)?;
    report.seed = Some(seed);
    Ok(report)
}
