//! C ABI surface over the mkvc library: opaque handles, status codes, and a
//! thread-local last-error message. See `include/mkvc.h` for the generated
//! header.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};

use mkvc::exact;
use mkvc::gen;
use mkvc::graph::{BipartiteGraph, Side, Solution};
use mkvc::solver;

/// Opaque graph handle.
pub struct MkvcGraph(BipartiteGraph);

/// Opaque solution handle.
pub struct MkvcSolution(Solution);

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MkvcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidK = 4,
    CapExceeded = 5,
    InvalidParams = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = sanitized);
}

/// Message describing the most recent failure on this thread. The pointer is
/// valid until the next failing mkvc call on the same thread.
#[no_mangle]
pub extern "C" fn mkvc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> MkvcStatus {
    if out.is_null() {
        set_error("null output pointer");
        return MkvcStatus::NullArgument;
    }
    *out = Box::into_raw(Box::new(value));
    MkvcStatus::Ok
}

/// Parses a graph from `bkvc` text.
///
/// # Safety
/// `text` must be a valid NUL-terminated C string; `out` must be a valid
/// pointer. On success `*out` owns a graph that must be released with
/// [`mkvc_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_parse(
    text: *const c_char,
    out: *mut *mut MkvcGraph,
) -> MkvcStatus {
    if text.is_null() {
        set_error("null text pointer");
        return MkvcStatus::NullArgument;
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(t) => t,
        Err(e) => {
            set_error(&format!("input is not UTF-8: {e}"));
            return MkvcStatus::InvalidUtf8;
        }
    };
    match BipartiteGraph::parse_bkvc(text) {
        Ok(g) => write_out(out, MkvcGraph(g)),
        Err(e) => {
            set_error(&e.to_string());
            MkvcStatus::ParseError
        }
    }
}

/// Generates a bipartite G(nA, nB, p) instance.
///
/// # Safety
/// `out` must be a valid pointer; the result must be freed with
/// [`mkvc_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_gnp(
    n_a: usize,
    n_b: usize,
    p: f64,
    seed: u64,
    out: *mut *mut MkvcGraph,
) -> MkvcStatus {
    match gen::gen_gnp(n_a, n_b, p, seed) {
        Ok(g) => write_out(out, MkvcGraph(g)),
        Err(e) => {
            set_error(&e.to_string());
            MkvcStatus::InvalidParams
        }
    }
}

/// Generates a semi-regular instance (every A-degree `dA`, every B-degree `dB`).
///
/// # Safety
/// As [`mkvc_graph_gnp`].
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_semiregular(
    n_a: usize,
    n_b: usize,
    d_a: usize,
    d_b: usize,
    seed: u64,
    out: *mut *mut MkvcGraph,
) -> MkvcStatus {
    match gen::gen_semiregular(n_a, n_b, d_a, d_b, seed) {
        Ok(g) => write_out(out, MkvcGraph(g)),
        Err(e) => {
            set_error(&e.to_string());
            MkvcStatus::InvalidParams
        }
    }
}

/// Generates a planted-cover stress instance; `out_k` receives the planted
/// budget `k1 + k2`.
///
/// # Safety
/// `out` and `out_k` must be valid pointers; the graph must be freed with
/// [`mkvc_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_planted(
    n_a: usize,
    n_b: usize,
    k1: usize,
    k2: usize,
    d_hub: usize,
    d_noise: usize,
    seed: u64,
    out: *mut *mut MkvcGraph,
    out_k: *mut usize,
) -> MkvcStatus {
    if out_k.is_null() {
        set_error("null out_k pointer");
        return MkvcStatus::NullArgument;
    }
    match gen::gen_planted(n_a, n_b, k1, k2, d_hub, d_noise, seed) {
        Ok((g, k)) => {
            *out_k = k;
            write_out(out, MkvcGraph(g))
        }
        Err(e) => {
            set_error(&e.to_string());
            MkvcStatus::InvalidParams
        }
    }
}

/// # Safety
/// `graph` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_na(graph: *const MkvcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n_a())
}

/// # Safety
/// `graph` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_nb(graph: *const MkvcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n_b())
}

/// # Safety
/// `graph` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_m(graph: *const MkvcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Serializes the graph back to canonical `bkvc` text. The returned string
/// must be released with [`mkvc_string_free`].
///
/// # Safety
/// `graph` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_to_text(graph: *const MkvcGraph) -> *mut c_char {
    match graph.as_ref() {
        Some(g) => CString::new(g.0.to_bkvc()).map_or(std::ptr::null_mut(), CString::into_raw),
        None => std::ptr::null_mut(),
    }
}

/// # Safety
/// `graph` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn mkvc_graph_free(graph: *mut MkvcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `s` must come from [`mkvc_graph_to_text`] and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn mkvc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn solve_with<F>(graph: *const MkvcGraph, out: *mut *mut MkvcSolution, f: F) -> MkvcStatus
where
    F: FnOnce(&BipartiteGraph) -> Result<Solution, (MkvcStatus, String)>,
{
    let g = match graph.as_ref() {
        Some(g) => &g.0,
        None => {
            set_error("null graph handle");
            return MkvcStatus::NullArgument;
        }
    };
    match f(g) {
        Ok(sol) => write_out(out, MkvcSolution(sol)),
        Err((status, msg)) => {
            set_error(&msg);
            status
        }
    }
}

/// Runs the 0.7-approximation split solver.
///
/// # Safety
/// `graph` must be a live handle; `out` must be valid and the solution freed
/// with [`mkvc_solution_free`].
#[no_mangle]
pub unsafe extern "C" fn mkvc_solve_comb07(
    graph: *const MkvcGraph,
    k: usize,
    out: *mut *mut MkvcSolution,
) -> MkvcStatus {
    solve_with(graph, out, |g| {
        solver::solve_comb07(g, k)
            .map(|(sol, _)| sol)
            .map_err(|e| (MkvcStatus::InvalidK, e.to_string()))
    })
}

/// Runs the greedy baseline.
///
/// # Safety
/// As [`mkvc_solve_comb07`].
#[no_mangle]
pub unsafe extern "C" fn mkvc_solve_greedy(
    graph: *const MkvcGraph,
    k: usize,
    out: *mut *mut MkvcSolution,
) -> MkvcStatus {
    solve_with(graph, out, |g| {
        solver::solve_greedy(g, k).map_err(|e| (MkvcStatus::InvalidK, e.to_string()))
    })
}

/// Runs the exact solver; refuses when the smaller side exceeds `cap`.
///
/// # Safety
/// As [`mkvc_solve_comb07`].
#[no_mangle]
pub unsafe extern "C" fn mkvc_solve_exact(
    graph: *const MkvcGraph,
    k: usize,
    cap: usize,
    out: *mut *mut MkvcSolution,
) -> MkvcStatus {
    solve_with(graph, out, |g| {
        exact::solve_exact(g, k, cap).map_err(|e| {
            let status = match e {
                exact::ExactError::CapExceeded { .. } => MkvcStatus::CapExceeded,
                exact::ExactError::NaiveCapExceeded { .. } => MkvcStatus::CapExceeded,
                exact::ExactError::KOutOfRange { .. } => MkvcStatus::InvalidK,
            };
            (status, e.to_string())
        })
    })
}

/// Checks `10·comb07 >= 7·exact` on one instance. `out_holds` receives 1 or 0.
///
/// # Safety
/// `graph` must be a live handle; `out_alg`, `out_opt`, `out_holds` must be
/// valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mkvc_check_theorem(
    graph: *const MkvcGraph,
    k: usize,
    cap: usize,
    out_alg: *mut u64,
    out_opt: *mut u64,
    out_holds: *mut c_int,
) -> MkvcStatus {
    let g = match graph.as_ref() {
        Some(g) => &g.0,
        None => {
            set_error("null graph handle");
            return MkvcStatus::NullArgument;
        }
    };
    if out_alg.is_null() || out_opt.is_null() || out_holds.is_null() {
        set_error("null output pointer");
        return MkvcStatus::NullArgument;
    }
    match mkvc::analysis::check_theorem(g, k, cap) {
        Ok(report) => {
            *out_alg = report.alg;
            *out_opt = report.opt;
            *out_holds = report.verdict as c_int;
            MkvcStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            match e {
                mkvc::analysis::AnalysisError::Exact(exact::ExactError::CapExceeded { .. }) => {
                    MkvcStatus::CapExceeded
                }
                _ => MkvcStatus::InvalidK,
            }
        }
    }
}

/// # Safety
/// `solution` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mkvc_solution_coverage(solution: *const MkvcSolution) -> u64 {
    solution.as_ref().map_or(0, |s| s.0.coverage)
}

/// # Safety
/// `solution` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mkvc_solution_len(solution: *const MkvcSolution) -> usize {
    solution.as_ref().map_or(0, |s| s.0.len())
}

/// Reads vertex `i` of the solution: side as `'A'`/`'B'` plus 1-based index.
/// Returns [`MkvcStatus::InvalidParams`] when `i` is out of range.
///
/// # Safety
/// `solution` must be a live handle; `out_side` and `out_index` must be
/// valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mkvc_solution_vertex(
    solution: *const MkvcSolution,
    i: usize,
    out_side: *mut c_char,
    out_index: *mut u32,
) -> MkvcStatus {
    let sol = match solution.as_ref() {
        Some(s) => &s.0,
        None => {
            set_error("null solution handle");
            return MkvcStatus::NullArgument;
        }
    };
    if out_side.is_null() || out_index.is_null() {
        set_error("null output pointer");
        return MkvcStatus::NullArgument;
    }
    match sol.vertices.get(i) {
        Some(v) => {
            *out_side = match v.side {
                Side::A => b'A' as c_char,
                Side::B => b'B' as c_char,
            };
            *out_index = v.index;
            MkvcStatus::Ok
        }
        None => {
            set_error(&format!("vertex index {i} out of range"));
            MkvcStatus::InvalidParams
        }
    }
}

/// # Safety
/// `solution` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn mkvc_solution_free(solution: *mut MkvcSolution) {
    if !solution.is_null() {
        drop(Box::from_raw(solution));
    }
}
