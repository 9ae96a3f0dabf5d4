//! C ABI over `mdim-core`.
//!
//! Graphs and solver results cross the boundary as opaque handles that the
//! caller releases with the matching `*_free` function. Every fallible call
//! returns an [`MdimStatus`]; on failure a message for the calling thread is
//! available from [`mdim_last_error`]. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mdim_core::constructions::{build_family, FamilySpec};
use mdim_core::formats::{emit_graph6, parse_graph6};
use mdim_core::harness::{run_suite, Suite, SuiteConfig, DEFAULT_SEED};
use mdim_core::structure::{all_have_maximal_neighbor, cut_vertices_and_blocks};
use mdim_core::{Error, Graph, VertexSet};

/// Result codes shared by all fallible functions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdimStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Disconnected = 4,
    TooLarge = 5,
    VerificationFailed = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct MdimGraph(Graph);

/// Opaque solver result handle.
pub struct MdimResult(mdim_core::MdimResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> MdimStatus {
    match err {
        Error::Disconnected => MdimStatus::Disconnected,
        Error::OrderOutOfRange { .. } | Error::ProductTooLarge(..) => MdimStatus::TooLarge,
        Error::Graph6(_) | Error::EdgeList { .. } | Error::InvalidFamily(_) => MdimStatus::ParseError,
        _ => MdimStatus::InvalidArgument,
    }
}

fn fail(status: MdimStatus, msg: impl Into<String>) -> MdimStatus {
    set_error(msg);
    status
}

/// Runs `f` with the error slot cleared and panics converted to a status.
fn guard(f: impl FnOnce() -> Result<(), MdimStatus>) -> MdimStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MdimStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(MdimStatus::Panic, "internal panic"),
    }
}

fn core_err(err: Error) -> MdimStatus {
    fail(status_of(&err), err.to_string())
}

unsafe fn graph_ref<'a>(g: *const MdimGraph) -> Result<&'a Graph, MdimStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| fail(MdimStatus::NullPointer, "graph handle is null"))
}

unsafe fn out_ref<'a, T>(out: *mut T) -> Result<&'a mut T, MdimStatus> {
    out.as_mut().ok_or_else(|| fail(MdimStatus::NullPointer, "output pointer is null"))
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, MdimStatus> {
    if s.is_null() {
        return Err(fail(MdimStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(MdimStatus::InvalidArgument, "string is not UTF-8"))
}

fn boxed_graph(g: Graph) -> *mut MdimGraph {
    Box::into_raw(Box::new(MdimGraph(g)))
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn mdim_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ..`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mdim_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut MdimGraph,
) -> MdimStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(MdimStatus::NullPointer, "edge array is null"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::from_edge_list(n, &pairs).map_err(core_err)?;
        *out = boxed_graph(g);
        Ok(())
    })
}

/// Decodes one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mdim_graph_from_graph6(text: *const c_char, out: *mut *mut MdimGraph) -> MdimStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let g = parse_graph6(c_str(text)?).map_err(core_err)?;
        *out = boxed_graph(g);
        Ok(())
    })
}

/// Builds a family member from a spec such as `lambda:5,5` or
/// `random_tree:8:seed=3`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mdim_graph_build_family(spec: *const c_char, out: *mut *mut MdimGraph) -> MdimStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let spec: FamilySpec = c_str(spec)?.parse().map_err(core_err)?;
        let g = build_family(&spec).map_err(core_err)?;
        *out = boxed_graph(g);
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn mdim_graph_free(g: *mut MdimGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mdim_graph_order(g: *const MdimGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Edge count; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mdim_graph_edge_count(g: *const MdimGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// graph6 encoding without newline; release with [`mdim_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mdim_graph_to_graph6(g: *const MdimGraph, out: *mut *mut c_char) -> MdimStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let text = emit_graph6(graph_ref(g)?);
        *out = CString::new(text).map_err(|_| fail(MdimStatus::Panic, "NUL in graph6"))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mdim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn vertex_set(g: &Graph, vertices: *const usize, len: usize) -> Result<VertexSet, MdimStatus> {
    if len == 0 {
        return Ok(VertexSet::empty());
    }
    if vertices.is_null() {
        return Err(fail(MdimStatus::NullPointer, "vertex array is null"));
    }
    let slice = std::slice::from_raw_parts(vertices, len);
    if let Some(&v) = slice.iter().find(|&&v| v >= g.order()) {
        return Err(core_err(Error::VertexOutOfRange { v, n: g.order() }));
    }
    Ok(slice.iter().copied().collect())
}

/// Whether `vertices` distinguishes every pair of vertices and edges.
///
/// # Safety
/// `g` must be a live handle, `vertices` must hold `len` values, `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn mdim_is_mixed_resolving_set(
    g: *const MdimGraph,
    vertices: *const usize,
    len: usize,
    out: *mut bool,
) -> MdimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out_ref(out)?;
        let w = vertex_set(g, vertices, len)?;
        *out = mdim_core::solver::is_mixed_resolving_set(g, w).map_err(core_err)?;
        Ok(())
    })
}

/// Exact mixed metric dimension; release the result with [`mdim_result_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mdim_solve(g: *const MdimGraph, use_pruning: bool, out: *mut *mut MdimResult) -> MdimStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let r = mdim_core::mdim_exact(graph_ref(g)?, use_pruning).map_err(core_err)?;
        *out = Box::into_raw(Box::new(MdimResult(r)));
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn mdim_result_dimension(r: *const MdimResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.dimension)
}

/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn mdim_result_nodes_searched(r: *const MdimResult) -> u64 {
    r.as_ref().map_or(0, |r| r.0.nodes_searched)
}

/// Copies up to `capacity` basis vertices in ascending order into `buf` and
/// returns the basis size, so a short buffer can be detected.
///
/// # Safety
/// `r` must be null or a live result handle; `buf` must have room for
/// `capacity` values (or be null when `capacity` is 0).
#[no_mangle]
pub unsafe extern "C" fn mdim_result_basis(r: *const MdimResult, buf: *mut usize, capacity: usize) -> usize {
    let Some(r) = r.as_ref() else {
        return 0;
    };
    let basis = r.0.basis.to_vec();
    if !buf.is_null() {
        let k = basis.len().min(capacity);
        ptr::copy_nonoverlapping(basis.as_ptr(), buf, k);
    }
    basis.len()
}

/// # Safety
/// `r` must be null or a live result handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mdim_result_free(r: *mut MdimResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Every vertex has a neighbor adjacent to all its other neighbors.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mdim_all_have_maximal_neighbor(g: *const MdimGraph, out: *mut bool) -> MdimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out)? = all_have_maximal_neighbor(g);
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mdim_cut_vertex_count(g: *const MdimGraph, out: *mut usize) -> MdimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out_ref(out)?;
        *out = cut_vertices_and_blocks(g).map_err(core_err)?.cut_vertices.len();
        Ok(())
    })
}

/// Runs a verification suite by name (`characterization`, `delta`,
/// `g6-uniqueness`, `cut-bound`, `class-formulas`, `products`, `solver`).
/// `trials = 0` selects the default count. Returns
/// `MDIM_STATUS_VERIFICATION_FAILED` when the suite finds a counterexample.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `instances` may be null.
#[no_mangle]
pub unsafe extern "C" fn mdim_verify_suite(
    suite: *const c_char,
    trials: u64,
    seed: u64,
    instances: *mut u64,
) -> MdimStatus {
    guard(|| {
        let name = c_str(suite)?;
        let suite = match name {
            "characterization" => Suite::Characterization,
            "delta" => Suite::Delta,
            "g6-uniqueness" => Suite::G6Uniqueness,
            "cut-bound" => Suite::CutBound,
            "class-formulas" => Suite::ClassFormulas,
            "products" => Suite::Products,
            "solver" => Suite::Solver,
            other => return Err(fail(MdimStatus::InvalidArgument, format!("unknown suite `{other}`"))),
        };
        let cfg = SuiteConfig { n: None, trials: (trials > 0).then_some(trials), seed };
        let report = run_suite(suite, &cfg).map_err(core_err)?;
        if let Some(out) = instances.as_mut() {
            *out = report.instances_checked;
        }
        if !report.passed {
            let witness = report.counterexample.map(|c| format!("{} on {}", c.witness, c.graph6)).unwrap_or_default();
            return Err(fail(MdimStatus::VerificationFailed, format!("{} failed: {witness}", report.suite)));
        }
        Ok(())
    })
}

/// Seed used by the command-line tool when none is given.
#[no_mangle]
pub extern "C" fn mdim_default_seed() -> u64 {
    DEFAULT_SEED
}
