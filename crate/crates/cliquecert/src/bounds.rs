//! Closed-form tail and norm bounds used to judge the experiments:
//! trace-method norm bounds, clique-count and clique-degree deviation
//! thresholds, the bounded-difference tail, the Gershgorin row bound, and
//! the k threshold under which the certificate stays positive definite.
//!
//! All logarithms are natural logs.  Every evaluator is a pure function of
//! its arguments; the `valid` flag only records whether the theorem behind
//! the formula applies to the inputs, it never blocks evaluation.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{binom_rat, pow2, rat_to_string, BigRational};
use crate::spectra::FloatMat;
use crate::{Error, Result};

/// A bound evaluation: the formula's value together with the inputs it was
/// computed from and whether the side conditions of the underlying theorem
/// hold.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub inputs: BTreeMap<String, Value>,
    pub value: f64,
    pub valid: bool,
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidInput(format!(
            "epsilon must lie in (0,1), got {eps}"
        )));
    }
    Ok(())
}

fn check_n_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    Ok(())
}

fn factorial_f64(a: usize) -> f64 {
    (1..=a).map(|v| v as f64).product()
}

/// Norm bound from the trace method:
/// (B/a!)·(2e·a·(ln(n^z/ε)/(2y) + 1))^y·n^{a−y/2}.
///
/// `valid` requires n ≥ 10, 1 ≤ y ≤ 2a, and z ≥ 0.  The optimizing trace
/// power q = ⌈ln(n^z/ε)/(2y)⌉ is echoed in the inputs for reference.
pub fn trace_method_bound(
    a: usize,
    y: usize,
    z: f64,
    b_const: f64,
    n: usize,
    eps: f64,
) -> Result<BoundReport> {
    check_eps(eps)?;
    check_n_positive(n)?;
    if a == 0 {
        return Err(Error::InvalidInput("a must be at least 1".into()));
    }
    if y == 0 {
        return Err(Error::InvalidInput("y must be at least 1".into()));
    }
    if !(b_const >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "B must be nonnegative, got {b_const}"
        )));
    }
    let nf = n as f64;
    let log_term = (z * nf.ln() - eps.ln()) / (2.0 * y as f64);
    let q = log_term.ceil().max(1.0);
    let value = (b_const / factorial_f64(a))
        * (2.0 * std::f64::consts::E * a as f64 * (log_term + 1.0)).powi(y as i32)
        * nf.powf(a as f64 - y as f64 / 2.0);
    let valid = n >= 10 && y >= 1 && y <= 2 * a && z >= 0.0;
    let mut inputs = BTreeMap::new();
    inputs.insert("a".into(), json!(a));
    inputs.insert("y".into(), json!(y));
    inputs.insert("z".into(), json!(z));
    inputs.insert("B".into(), json!(b_const));
    inputs.insert("n".into(), json!(n));
    inputs.insert("eps".into(), json!(eps));
    inputs.insert("q".into(), json!(q as u64));
    Ok(BoundReport {
        name: "trace_method_bound".into(),
        inputs,
        value,
        valid,
    })
}

/// Norm bound for the locally random matrix R_a with failure chance ε:
/// 2^{a²+2a+2}·ln(n/ε)·n^{a−1/2}.  `valid` requires n ≥ 100.
pub fn r_a_norm_bound(a: usize, n: usize, eps: f64) -> Result<BoundReport> {
    check_eps(eps)?;
    check_n_positive(n)?;
    let exponent = a * a + 2 * a + 2;
    if exponent > 1023 {
        return Err(Error::Capacity(format!(
            "2^{exponent} overflows a double"
        )));
    }
    let nf = n as f64;
    let value = 2f64.powi(exponent as i32) * (nf / eps).ln() * nf.powf(a as f64 - 0.5);
    let mut inputs = BTreeMap::new();
    inputs.insert("a".into(), json!(a));
    inputs.insert("n".into(), json!(n));
    inputs.insert("eps".into(), json!(eps));
    Ok(BoundReport {
        name: "r_a_norm_bound".into(),
        inputs,
        value,
        valid: n >= 100,
    })
}

/// Deviation threshold for the number of a-cliques: (ln(64/ε))²·n^{a−1}.
/// `valid` requires n ≥ 10.
pub fn clique_count_threshold(a: usize, n: usize, eps: f64) -> Result<BoundReport> {
    check_eps(eps)?;
    check_n_positive(n)?;
    let nf = n as f64;
    let value = (64.0 / eps).ln().powi(2) * nf.powf(a as f64 - 1.0);
    let mut inputs = BTreeMap::new();
    inputs.insert("a".into(), json!(a));
    inputs.insert("n".into(), json!(n));
    inputs.insert("eps".into(), json!(eps));
    Ok(BoundReport {
        name: "clique_count_threshold".into(),
        inputs,
        value,
        valid: n >= 10,
    })
}

/// Deviation threshold for the clique degree of an i-set in the r-certificate,
/// 2·(ln(128/ε))²·n^{2r−i−1/2}, together with the exact conditional center
/// 2^{−C(2r,2)+C(i,2)}·C(n−i, 2r−i).  `valid` requires n ≥ 10.
pub fn degree_threshold(
    r: usize,
    i: usize,
    n: usize,
    eps: f64,
) -> Result<(BoundReport, BigRational)> {
    check_eps(eps)?;
    check_n_positive(n)?;
    if i > 2 * r {
        return Err(Error::InvalidInput(format!(
            "set size {i} exceeds 2r = {}",
            2 * r
        )));
    }
    if i > n {
        return Err(Error::InvalidInput(format!(
            "set size {i} exceeds n = {n}"
        )));
    }
    let tr = 2 * r;
    let center = pow2(
        -((tr * (tr - 1) / 2) as i64) + (i as i64) * (i as i64 - 1) / 2,
    ) * binom_rat(n - i, (tr - i) as isize);
    let nf = n as f64;
    let value = 2.0 * (128.0 / eps).ln().powi(2) * nf.powf(tr as f64 - i as f64 - 0.5);
    let mut inputs = BTreeMap::new();
    inputs.insert("r".into(), json!(r));
    inputs.insert("i".into(), json!(i));
    inputs.insert("n".into(), json!(n));
    inputs.insert("eps".into(), json!(eps));
    inputs.insert("center".into(), json!(rat_to_string(&center)));
    let report = BoundReport {
        name: "degree_threshold".into(),
        inputs,
        value,
        valid: n >= 10,
    };
    Ok((report, center))
}

/// Bounded-difference tail over `num_vars` independent coordinates, each
/// moving the statistic by at most `c`: min(1, 2·exp(−2t²/(num_vars·c²))).
///
/// Callers must supply t ≥ 0 and c > 0.
pub fn mcdiarmid_tail(num_vars: usize, c: f64, t: f64) -> f64 {
    assert!(num_vars > 0, "need at least one coordinate");
    assert!(c > 0.0, "per-coordinate bound must be positive");
    assert!(t >= 0.0, "deviation must be nonnegative");
    let tail = 2.0 * (-2.0 * t * t / (num_vars as f64 * c * c)).exp();
    tail.min(1.0)
}

/// Largest absolute row sum, an upper bound on the spectral norm of a
/// symmetric matrix.
pub fn gershgorin_bound(m: &FloatMat) -> f64 {
    assert_eq!(m.rows(), m.cols(), "row-sum bound needs a square matrix");
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).abs()).sum())
        .fold(0.0f64, f64::max)
}

/// The clique-size threshold 2^{−cr}·(√n/ln n)^{1/r} below which the
/// certificate remains positive definite with high probability.  The
/// theorem's regime is c > 0; c = 0 reads off the undamped base quantity.
pub fn k_threshold(n: f64, r: usize, c: f64) -> f64 {
    assert!(n >= 3.0, "threshold needs n >= 3");
    assert!(r >= 1, "threshold needs r >= 1");
    2f64.powf(-c * r as f64) * (n.sqrt() / n.ln()).powf(1.0 / r as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rat;
    use crate::graphs::SplitMix64;
    use crate::spectra;
    use num_traits::One;

    #[test]
    fn trace_method_examples() {
        let rep = trace_method_bound(1, 1, 1.0, 1.0, 100, 0.1).unwrap();
        assert!((rep.value - 242.13789307217274).abs() < 1e-9);
        assert!(rep.valid);
        assert_eq!(rep.inputs["q"], serde_json::json!(4));

        assert!(!trace_method_bound(1, 1, 1.0, 1.0, 9, 0.1).unwrap().valid);
        assert!(!trace_method_bound(1, 3, 1.0, 1.0, 100, 0.1).unwrap().valid);
        assert!(!trace_method_bound(1, 1, -0.5, 1.0, 100, 0.1).unwrap().valid);
        assert!(trace_method_bound(1, 1, 1.0, 1.0, 100, 1.5).is_err());
        assert!(trace_method_bound(0, 1, 1.0, 1.0, 100, 0.1).is_err());
        assert!(trace_method_bound(1, 0, 1.0, 1.0, 100, 0.1).is_err());
    }

    #[test]
    fn r_a_norm_examples() {
        let rep = r_a_norm_bound(1, 100, 0.01).unwrap();
        assert!((rep.value - 2947.308919032379).abs() < 1e-9);
        assert!(rep.valid);
        let near_one = r_a_norm_bound(1, 100, 1.0 - 1e-12).unwrap();
        assert!((near_one.value - 1473.6544595161895).abs() < 1e-6);
        assert!(!r_a_norm_bound(1, 99, 0.01).unwrap().valid);
        assert!(r_a_norm_bound(1, 100, 0.0).is_err());
    }

    #[test]
    fn clique_count_examples() {
        let rep = clique_count_threshold(3, 50, 0.05).unwrap();
        assert!((rep.value - 127971.30226346204).abs() < 1e-6);
        assert!(rep.valid);
        // a = 1: the threshold has no n dependence.
        let a = clique_count_threshold(1, 50, 0.05).unwrap().value;
        let b = clique_count_threshold(1, 5000, 0.05).unwrap().value;
        assert_eq!(a, b);
        let tight = clique_count_threshold(1, 50, 0.64).unwrap();
        assert!((tight.value - 21.207592441913597).abs() < 1e-12);
    }

    #[test]
    fn degree_threshold_examples() {
        // Center at i = 2r is exactly 1 regardless of n.
        for (r, n) in [(1usize, 10usize), (2, 30), (3, 50)] {
            let (_, center) = degree_threshold(r, 2 * r, n, 0.1).unwrap();
            assert_eq!(center, rat(1));
        }
        let (rep, center) = degree_threshold(2, 2, 50, 0.01).unwrap();
        assert_eq!(center, BigRational::new(141.into(), 4.into()));
        assert_eq!(rep.inputs["center"], serde_json::json!("141/4"));
        let (rep, _) = degree_threshold(1, 0, 100, 0.1).unwrap();
        assert!((rep.value - 102377.04181076965).abs() < 1e-6);
        assert!(degree_threshold(1, 3, 100, 0.1).is_err());
    }

    #[test]
    fn mcdiarmid_examples() {
        assert_eq!(mcdiarmid_tail(100, 1.0, 0.0), 1.0);
        let half = mcdiarmid_tail(100, 1.0, (50.0 * 4f64.ln()).sqrt());
        assert!((half - 0.5).abs() < 1e-12);
        let eighth = mcdiarmid_tail(100, 1.0, (50.0 * 16f64.ln()).sqrt());
        assert!((eighth - 0.125).abs() < 1e-12);
    }

    #[test]
    fn mcdiarmid_inversion_gives_half_eps() {
        // t = sqrt(ln(4/eps))·n^{2r−i−1/2} with c = n^{2r−i−1} over n−i
        // coordinates lands at or below eps/2.
        for (r, i, n) in [(1usize, 0usize, 20usize), (2, 1, 40), (2, 3, 60)] {
            for eps in [0.5f64, 0.1, 0.01] {
                let power = (2 * r - i) as f64;
                let t = (4.0 / eps).ln().sqrt() * (n as f64).powf(power - 0.5);
                let c = (n as f64).powf(power - 1.0);
                let tail = mcdiarmid_tail(n - i, c, t);
                assert!(tail <= eps / 2.0, "r {r} i {i} n {n} eps {eps}: {tail}");
            }
        }
    }

    #[test]
    fn gershgorin_examples() {
        assert_eq!(gershgorin_bound(&FloatMat::identity(5)), 1.0);
        assert_eq!(gershgorin_bound(&FloatMat::from_fn(6, 6, |_, _| 1.0)), 6.0);
        let mut rng = SplitMix64::new(7);
        let mut m = FloatMat::zeros(50, 50);
        for i in 0..50 {
            for j in i..50 {
                let v = (rng.next_u64() as f64 / u64::MAX as f64) * 2.0 - 1.0;
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        let row_bound = gershgorin_bound(&m);
        let norm = spectra::spectral_norm(&m).unwrap();
        assert!(row_bound >= norm - 1e-8 * m.max_abs());
    }

    #[test]
    fn k_threshold_examples() {
        let e2 = std::f64::consts::E * std::f64::consts::E;
        let v = k_threshold(e2, 1, 0.0);
        assert!((v - std::f64::consts::E / 2.0).abs() < 1e-12);
        // Monotone in n for fixed r, c.
        let mut last = 0.0;
        for n in [10.0, 100.0, 1000.0, 1e6] {
            let v = k_threshold(n, 2, 0.5);
            assert!(v > last);
            last = v;
        }
        // Vanishes as r grows when c > 0.
        assert!(k_threshold(1e6, 60, 1.0) < 1e-15);
    }

    #[test]
    fn r_a_norm_dominates_trace_specialization() {
        for a in 1..=4usize {
            for n in [100usize, 1000, 1_000_000] {
                for eps in [0.9, 0.1, 1e-6] {
                    let b = 2f64.powi((a * a) as i32);
                    let spec_value =
                        trace_method_bound(a, 1, 1.0, b, n, eps).unwrap().value
                            * 2f64.powi(2 * a as i32);
                    let ra = r_a_norm_bound(a, n, eps).unwrap().value;
                    assert!(
                        ra >= spec_value,
                        "a {a} n {n} eps {eps}: {ra} < {spec_value}"
                    );
                }
            }
        }
    }

    #[test]
    fn evaluation_is_reproducible() {
        let r1 = trace_method_bound(2, 3, 1.5, 4.0, 500, 0.02).unwrap();
        let r2 = trace_method_bound(2, 3, 1.5, 4.0, 500, 0.02).unwrap();
        assert_eq!(r1.value.to_bits(), r2.value.to_bits());
        let j = serde_json::to_value(&r1).unwrap();
        assert_eq!(j["name"], "trace_method_bound");
        assert!(j["inputs"]["n"].is_u64());
        assert!(j["value"].is_f64());
    }

    #[test]
    fn values_are_nonnegative() {
        assert!(trace_method_bound(3, 6, 0.0, 0.0, 10, 0.5).unwrap().value >= 0.0);
        assert!(r_a_norm_bound(0, 1, 0.5).unwrap().value >= 0.0);
        assert!(clique_count_threshold(1, 1, 0.999).unwrap().value >= 0.0);
        let one = BigRational::one();
        let (_, center) = degree_threshold(1, 2, 2, 0.5).unwrap();
        assert_eq!(center, one);
    }
}
