//! C ABI for the cliquecert library.
//!
//! Conventions, which every function below follows:
//!
//! - Fallible calls return a [`CcStatus`]; `CC_STATUS_OK` is zero.  Output
//!   parameters are written only on success.
//! - [`cc_last_error_message`] returns the message for the most recent
//!   failure on the calling thread, or null if the last call succeeded.
//! - Strings returned through `char*` outputs are owned by the caller and
//!   must be released with [`cc_string_free`].  Handles are opaque and are
//!   released with their matching `*_free`; a null handle is accepted and
//!   ignored there.
//! - Structured results (spectra, check reports, experiment summaries)
//!   cross the boundary as JSON documents rather than C structs, so the
//!   schema can grow without breaking the ABI.
//!
//! Panics never unwind across the boundary: they are caught and surfaced
//! as `CC_STATUS_PANIC` with the panic text in the error message.

use std::cell::RefCell;
use std::ffi::{c_char, c_double, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cliquecert::bounds::{
    clique_count_threshold, degree_threshold, gershgorin_bound, k_threshold, mcdiarmid_tail,
    r_a_norm_bound, trace_method_bound,
};
use cliquecert::certificate::{
    build_expectation, build_full_moment_matrix, build_grigoriev, build_m, build_m_prime,
    check_axioms, check_kernel_vectors, gram_feasibility, CertificateParams, MomentFunctional,
};
use cliquecert::experiments::{
    concentration_cliques, concentration_degree, exact_expectation_oracle, gap_probe,
    norm_r_a, psd_frequency, TrialConfig,
};
use cliquecert::graphs::{plant_clique, sample_gnp_half, Graph};
use cliquecert::ratmat::RatMat;
use cliquecert::spectra::{is_psd, FloatMat};
use cliquecert::{Error, Result};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    /// A parameter was out of range or inconsistent.
    InvalidInput = 1,
    /// The request exceeds a hard size cap.
    Capacity = 2,
    /// The certificate degenerates on this input.
    Degenerate = 3,
    /// A matrix required to be PSD is not.
    NotPsd = 4,
    /// An iterative method failed to converge.
    NonConvergence = 5,
    /// File input/output failed.
    Io = 6,
    /// A file or string had the wrong format.
    Parse = 7,
    /// JSON serialization failed.
    Json = 8,
    /// A null handle or output pointer was passed.
    NullPointer = 9,
    /// An internal panic was caught at the boundary.
    Panic = 10,
}

/// Opaque graph handle.
pub struct CcGraph(Graph);

/// Opaque exact-rational matrix handle.
pub struct CcMatrix(RatMat);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    let stored = CString::new(sanitized).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(err: &Error) -> CcStatus {
    match err {
        Error::InvalidInput(_) => CcStatus::InvalidInput,
        Error::Capacity(_) => CcStatus::Capacity,
        Error::Degenerate(_) => CcStatus::Degenerate,
        Error::NotPsd { .. } => CcStatus::NotPsd,
        Error::NonConvergence(_) => CcStatus::NonConvergence,
        Error::Io(_) => CcStatus::Io,
        Error::Parse(_) => CcStatus::Parse,
        Error::Json(_) => CcStatus::Json,
    }
}

/// Runs `f`, writes its value through `out` on success, and converts
/// errors and panics into status codes plus a stored message.
fn run<T, F>(out: *mut T, f: F) -> CcStatus
where
    F: FnOnce() -> Result<T>,
{
    if out.is_null() {
        set_error("output pointer is null");
        return CcStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(value)) => {
            clear_error();
            unsafe { out.write(value) };
            CcStatus::Ok
        }
        Ok(Err(err)) => {
            set_error(&err.to_string());
            status_of(&err)
        }
        Err(payload) => {
            let text = payload
                .downcast_ref::<&str>()
                .map(|s| (*s).to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic with non-string payload".into());
            set_error(&format!("panic: {text}"));
            CcStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(handle: *const CcGraph) -> Result<&'a Graph> {
    handle
        .as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| Error::InvalidInput("graph handle is null".into()))
}

unsafe fn matrix_ref<'a>(handle: *const CcMatrix) -> Result<&'a RatMat> {
    handle
        .as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| Error::InvalidInput("matrix handle is null".into()))
}

unsafe fn path_str<'a>(path: *const c_char) -> Result<&'a str> {
    if path.is_null() {
        return Err(Error::InvalidInput("path is null".into()));
    }
    CStr::from_ptr(path)
        .to_str()
        .map_err(|_| Error::InvalidInput("path is not valid UTF-8".into()))
}

fn boxed_graph(g: Graph) -> *mut CcGraph {
    Box::into_raw(Box::new(CcGraph(g)))
}

fn boxed_matrix(m: RatMat) -> *mut CcMatrix {
    Box::into_raw(Box::new(CcMatrix(m)))
}

fn c_string(s: String) -> Result<*mut c_char> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Error::InvalidInput("string contains an interior NUL".into()))
}

fn json_string<T: serde::Serialize>(value: &T) -> Result<*mut c_char> {
    c_string(serde_json::to_string_pretty(value)?)
}

/// Returns the library version as a caller-owned string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_version(out: *mut *mut c_char) -> CcStatus {
    run(out, || c_string(env!("CARGO_PKG_VERSION").to_string()))
}

/// Returns the message of the most recent failure on this thread as a
/// caller-owned string, or null if the last call succeeded.
///
/// # Safety
/// Always safe; the returned string must be freed with `cc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cc_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|msg| msg.clone().into_raw())
            .unwrap_or(std::ptr::null_mut())
    })
}

/// Releases a string returned by this library.  Null is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned by this library, or null,
/// and must not be used after this call.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Samples the random graph on `n` vertices with edge probability 1/2.
///
/// # Safety
/// `out` must be a valid pointer; the handle it receives must be released
/// with `cc_graph_free`.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_sample(n: usize, seed: u64, out: *mut *mut CcGraph) -> CcStatus {
    run(out, || Ok(boxed_graph(sample_gnp_half(n, seed)?)))
}

/// Completes a uniformly random `k`-subset of the graph into a clique.
///
/// # Safety
/// `graph` must be a live graph handle; `out` as in `cc_graph_sample`.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_plant(
    graph: *const CcGraph,
    k: usize,
    seed: u64,
    out: *mut *mut CcGraph,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        Ok(boxed_graph(plant_clique(g, k, seed)?))
    })
}

/// Reads a graph from the text format produced by `cc_graph_write`.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` as in `cc_graph_sample`.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_read(path: *const c_char, out: *mut *mut CcGraph) -> CcStatus {
    run(out, || {
        let path = path_str(path)?;
        Ok(boxed_graph(Graph::from_file(path)?))
    })
}

/// Writes a graph as an edge list with an `n m` header line.
///
/// # Safety
/// `graph` must be a live graph handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_write(graph: *const CcGraph, path: *const c_char) -> CcStatus {
    let mut unit = ();
    run(&mut unit, || {
        let g = graph_ref(graph)?;
        g.to_file(path_str(path)?)
    })
}

/// Number of vertices; zero for a null handle.
///
/// # Safety
/// `graph` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_n(graph: *const CcGraph) -> usize {
    graph.as_ref().map(|h| h.0.n()).unwrap_or(0)
}

/// Number of edges; zero for a null handle.
///
/// # Safety
/// `graph` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_edge_count(graph: *const CcGraph) -> usize {
    graph.as_ref().map(|h| h.0.edge_count()).unwrap_or(0)
}

/// Writes whether the edge `{u,v}` is present.
///
/// # Safety
/// `graph` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_has_edge(
    graph: *const CcGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        if u >= g.n() || v >= g.n() {
            return Err(Error::InvalidInput(format!(
                "edge ({u},{v}) out of range 0..{}",
                g.n()
            )));
        }
        Ok(g.has_edge(u, v))
    })
}

/// Writes the exact number of `a`-cliques as a caller-owned decimal
/// string (counts overflow fixed-width integers quickly).
///
/// # Safety
/// `graph` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_clique_count(
    graph: *const CcGraph,
    a: usize,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        c_string(g.count_cliques(a).to_string())
    })
}

/// Releases a graph handle.  Null is ignored.
///
/// # Safety
/// `graph` must be a handle from this library, or null, and must not be
/// used after this call.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_free(graph: *mut CcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Builds the moment matrix over r-subsets (zero outside clique pairs).
///
/// # Safety
/// `graph` must be a live graph handle; the matrix handle written to
/// `out` must be released with `cc_matrix_free`.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_m(
    graph: *const CcGraph,
    r: usize,
    k: usize,
    out: *mut *mut CcMatrix,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        let params = CertificateParams::new(g.n(), r, k)?;
        Ok(boxed_matrix(build_m(g, &params)?))
    })
}

/// Builds the filled moment matrix (the sum of contributions over all
/// 2r-sets, nonzero off clique pairs as well).
///
/// # Safety
/// As in `cc_matrix_m`.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_m_prime(
    graph: *const CcGraph,
    r: usize,
    k: usize,
    out: *mut *mut CcMatrix,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        let params = CertificateParams::new(g.n(), r, k)?;
        Ok(boxed_matrix(build_m_prime(g, &params)?))
    })
}

/// Builds the full moment matrix over all subsets of size at most r.
///
/// # Safety
/// As in `cc_matrix_m`.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_full_moment(
    graph: *const CcGraph,
    r: usize,
    k: usize,
    out: *mut *mut CcMatrix,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        let params = CertificateParams::new(g.n(), r, k)?;
        Ok(boxed_matrix(build_full_moment_matrix(g, &params)?))
    })
}

/// Builds the expectation of the filled moment matrix over the random
/// graph, which depends only on (n, r, k).
///
/// # Safety
/// `out` as in `cc_matrix_m`.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_expectation(
    n: usize,
    r: usize,
    k: usize,
    out: *mut *mut CcMatrix,
) -> CcStatus {
    run(out, || {
        let params = CertificateParams::new(n, r, k)?;
        Ok(boxed_matrix(build_expectation(&params)?))
    })
}

/// Builds the complete-graph certificate matrix for the knapsack regime.
///
/// # Safety
/// `out` as in `cc_matrix_m`.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_grigoriev(
    n: usize,
    r: usize,
    k: usize,
    out: *mut *mut CcMatrix,
) -> CcStatus {
    run(out, || Ok(boxed_matrix(build_grigoriev(n, r, k)?)))
}

/// Reads a matrix from the CSV format produced by `cc_matrix_write_csv`.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` as in `cc_matrix_m`.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_read_csv(
    path: *const c_char,
    out: *mut *mut CcMatrix,
) -> CcStatus {
    run(out, || {
        let path = path_str(path)?;
        Ok(boxed_matrix(RatMat::from_csv_file(path)?))
    })
}

/// Writes a matrix as labeled CSV with exact rational entries.
///
/// # Safety
/// `matrix` must be a live matrix handle and `path` a NUL-terminated
/// string.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_write_csv(
    matrix: *const CcMatrix,
    path: *const c_char,
) -> CcStatus {
    let mut unit = ();
    run(&mut unit, || {
        let m = matrix_ref(matrix)?;
        m.to_csv_file(path_str(path)?)
    })
}

/// Number of rows; zero for a null handle.
///
/// # Safety
/// `matrix` must be a live matrix handle or null.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_rows(matrix: *const CcMatrix) -> usize {
    matrix.as_ref().map(|h| h.0.rows()).unwrap_or(0)
}

/// Number of columns; zero for a null handle.
///
/// # Safety
/// `matrix` must be a live matrix handle or null.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_cols(matrix: *const CcMatrix) -> usize {
    matrix.as_ref().map(|h| h.0.cols()).unwrap_or(0)
}

/// Writes the exact entry at `(i, j)` as a caller-owned string in
/// `numerator/denominator` form (plain integer when the denominator is 1).
///
/// # Safety
/// `matrix` must be a live matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_entry(
    matrix: *const CcMatrix,
    i: usize,
    j: usize,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || {
        let m = matrix_ref(matrix)?;
        if i >= m.rows() || j >= m.cols() {
            return Err(Error::InvalidInput(format!(
                "entry ({i},{j}) out of range {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        c_string(cliquecert::combinat::rat_to_string(m.get(i, j)))
    })
}

/// Releases a matrix handle.  Null is ignored.
///
/// # Safety
/// `matrix` must be a handle from this library, or null, and must not be
/// used after this call.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_free(matrix: *mut CcMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// Computes the full spectrum of a symmetric matrix and writes a JSON
/// report with eigenvalues, extremes, scale, and the PSD verdict at the
/// given relative tolerance.
///
/// # Safety
/// `matrix` must be a live matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_spectrum_json(
    matrix: *const CcMatrix,
    psd_tol: c_double,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || {
        let m = matrix_ref(matrix)?;
        let report = is_psd(&FloatMat::from_ratmat(m), psd_tol)?;
        json_string(&report)
    })
}

/// Runs the clique-axiom and recurrence checks of the moment functional
/// on a graph and writes the violation report as JSON.
///
/// # Safety
/// `graph` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_check_axioms_json(
    graph: *const CcGraph,
    r: usize,
    k: usize,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        let params = CertificateParams::new(g.n(), r, k)?;
        let func = MomentFunctional::new(g, &params)?;
        json_string(&check_axioms(&func)?)
    })
}

/// Verifies the exact kernel vectors of the full moment matrix on a graph
/// and writes the report (violations and kernel lower bound) as JSON.
///
/// # Safety
/// `graph` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_check_kernel_json(
    graph: *const CcGraph,
    r: usize,
    k: usize,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        let params = CertificateParams::new(g.n(), r, k)?;
        let m_full = build_full_moment_matrix(g, &params)?;
        json_string(&check_kernel_vectors(&m_full, g, &params)?)
    })
}

/// Factors the normalized full moment matrix into Gram vectors, measures
/// every relaxation constraint, and writes the report as JSON.  Fails
/// with the degenerate or not-PSD status when the factorization does not
/// exist on this graph.
///
/// # Safety
/// `graph` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_gram_feasibility_json(
    graph: *const CcGraph,
    r: usize,
    k: usize,
    tol: c_double,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || {
        let g = graph_ref(graph)?;
        let params = CertificateParams::new(g.n(), r, k)?;
        let m_full = build_full_moment_matrix(g, &params)?;
        json_string(&gram_feasibility(&m_full, g, &params, tol)?)
    })
}

/// Experiment selector for `cc_experiment_json`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcExperiment {
    /// PSD frequency of the filled matrix and the clique block of the
    /// moment matrix; `param` is unused.
    PsdFrequency = 0,
    /// Clique-count concentration; `param` is the clique size a.
    Cliques = 1,
    /// Clique-degree concentration; `param` is the root size i.
    Degree = 2,
    /// Operator norm of the local random matrix; `param` is the index a.
    NormRA = 3,
}

/// Runs one Monte Carlo experiment and writes the full report (config
/// echo, per-trial rows, summary) as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn cc_experiment_json(
    which: CcExperiment,
    n: usize,
    r: usize,
    k: usize,
    trials: usize,
    master_seed: u64,
    eps: c_double,
    psd_tol: c_double,
    param: usize,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || {
        let config = TrialConfig {
            n,
            r,
            k,
            trials,
            master_seed,
            eps,
            psd_tol,
        };
        let report = match which {
            CcExperiment::PsdFrequency => psd_frequency(&config)?,
            CcExperiment::Cliques => concentration_cliques(&config, param)?,
            CcExperiment::Degree => concentration_degree(&config, param)?,
            CcExperiment::NormRA => norm_r_a(&config, param)?,
        };
        json_string(&report)
    })
}

/// Averages every certificate piece over all graphs on `n` vertices and
/// compares against the closed forms, exactly; writes the report as JSON.
/// Refuses n > 5.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_oracle_json(
    n: usize,
    r: usize,
    k: usize,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || json_string(&exact_expectation_oracle(n, r, k)?))
}

/// Probes the largest k for which the filled matrix stays numerically PSD
/// on one sampled graph; writes the report as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_gap_probe_json(
    n: usize,
    r: usize,
    seed: u64,
    k_min: usize,
    k_max: usize,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || json_string(&gap_probe(n, r, seed, (k_min, k_max))?))
}

/// Evaluates the trace-method norm bound and writes the report (value,
/// echoed inputs, validity flag) as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_trace_method_bound_json(
    a: usize,
    y: usize,
    z: c_double,
    b_const: c_double,
    n: usize,
    eps: c_double,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || json_string(&trace_method_bound(a, y, z, b_const, n, eps)?))
}

/// Evaluates the closed-form tail bound on the local operator norm and
/// writes the report as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_r_a_norm_bound_json(
    a: usize,
    n: usize,
    eps: c_double,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || json_string(&r_a_norm_bound(a, n, eps)?))
}

/// Evaluates the clique-count deviation threshold and writes the report
/// as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_clique_count_threshold_json(
    a: usize,
    n: usize,
    eps: c_double,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || json_string(&clique_count_threshold(a, n, eps)?))
}

/// Evaluates the clique-degree deviation threshold and writes the report
/// as JSON (the exact conditional center is echoed in the inputs).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_degree_threshold_json(
    r: usize,
    i: usize,
    n: usize,
    eps: c_double,
    out: *mut *mut c_char,
) -> CcStatus {
    run(out, || {
        let (report, _center) = degree_threshold(r, i, n, eps)?;
        json_string(&report)
    })
}

/// Writes the two-sided bounded-difference tail probability for
/// `num_vars` variables with per-variable influence `c` at deviation `t`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_mcdiarmid_tail(
    num_vars: usize,
    c: c_double,
    t: c_double,
    out: *mut c_double,
) -> CcStatus {
    run(out, || Ok(mcdiarmid_tail(num_vars, c, t)))
}

/// Writes the clique-number threshold below which the certificate regime
/// applies, with explicit constant `constant_c`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_k_threshold(
    n: c_double,
    r: usize,
    constant_c: c_double,
    out: *mut c_double,
) -> CcStatus {
    run(out, || Ok(k_threshold(n, r, constant_c)))
}

/// Writes the Gershgorin disc bound on the spectral norm of a matrix.
///
/// # Safety
/// `matrix` must be a live matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_gershgorin_bound(
    matrix: *const CcMatrix,
    out: *mut c_double,
) -> CcStatus {
    run(out, || {
        let m = matrix_ref(matrix)?;
        Ok(gershgorin_bound(&FloatMat::from_ratmat(m)))
    })
}
