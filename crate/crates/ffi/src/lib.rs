//! C ABI over the simplext library.
//!
//! Every fallible call returns an [`SxStatus`]; on failure the message is
//! available from [`sx_last_error`] on the same thread. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`sx_string_free`]. Graphs are opaque handles released with
//! [`sx_graph_free`]. Budgets are read from `SIMPLEXT_BUDGET`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use simplext::biclique::extension_report;
use simplext::closure::{closure, cover_lower_bound, CoverMode};
use simplext::io::{from_json, matching_from_json, to_json, FamilyDescriptor, GraphJson, NeighborTraceJson, WitnessJson};
use simplext::matching::three_common_neighbor;
use simplext::{Budget, Error, SkeletonGraph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    TooLarge = 3,
    ModeInapplicable = 4,
    NotAdjacent = 5,
    /// Unbounded, infeasible or otherwise unusable geometry.
    Geometry = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SxCoverMode {
    Exact = 0,
    Singleton = 1,
    Isolated = 2,
}

/// Opaque skeleton graph.
pub struct SxGraph {
    graph: SkeletonGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SxStatus {
    match e {
        Error::TooLarge(_) => SxStatus::TooLarge,
        Error::ModeInapplicable(_) => SxStatus::ModeInapplicable,
        Error::NotAdjacent | Error::NotAdjacentBase => SxStatus::NotAdjacent,
        Error::Unbounded
        | Error::Infeasible
        | Error::EmptyIntersection
        | Error::NotPointed
        | Error::ToleranceFailure(_) => SxStatus::Geometry,
        Error::InternalInvariantViolation(_) => SxStatus::Internal,
        _ => SxStatus::InvalidInput,
    }
}

struct Fail(SxStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, records any failure and converts panics.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SxStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SxStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside simplext".into());
            SxStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(SxStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(SxStatus::InvalidInput, "string is not UTF-8".into()))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| Fail(SxStatus::Internal, "interior NUL in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_graph(out: *mut *mut SxGraph, graph: SkeletonGraph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(SxGraph { graph }));
    Ok(())
}

/// # Safety
/// `g` must be null or a live handle from this library.
unsafe fn graph_ref<'a>(g: *const SxGraph) -> Result<&'a SkeletonGraph, Fail> {
    g.as_ref().map(|h| &h.graph).ok_or_else(null)
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Graph on `node_count` nodes from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sx_graph_new(
    node_count: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SxGraph,
) -> SxStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        write_graph(out, SkeletonGraph::new(node_count, pairs)?)
    })
}

/// Graph from the adjacency-list or edge-list JSON format.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sx_graph_from_json(json: *const c_char, out: *mut *mut SxGraph) -> SxStatus {
    guard(|| {
        let g = from_json::<GraphJson>(read_str(json)?)?.to_graph()?;
        write_graph(out, g)
    })
}

/// Skeleton of a family given by a `{"family": ..., "params": ...}`
/// descriptor.
///
/// # Safety
/// `descriptor` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sx_graph_from_family(descriptor: *const c_char, out: *mut *mut SxGraph) -> SxStatus {
    guard(|| {
        let desc: FamilyDescriptor = from_json(read_str(descriptor)?)?;
        write_graph(out, desc.skeleton(&Budget::from_env())?.graph)
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sx_graph_free(g: *mut SxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Node count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_graph_node_count(g: *const SxGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.node_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_graph_edge_count(g: *const SxGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.edge_count())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sx_graph_to_json(g: *const SxGraph, out: *mut *mut c_char) -> SxStatus {
    guard(|| write_string(out, to_json(&GraphJson::from(graph_ref(g)?))))
}

/// Closure certificate JSON for the seed nodes.
///
/// # Safety
/// `g` must be a live handle, `seed` must point to `seed_len` readable
/// values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sx_closure(
    g: *const SxGraph,
    seed: *const usize,
    seed_len: usize,
    out: *mut *mut c_char,
) -> SxStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if seed.is_null() {
            return Err(null());
        }
        let cert = closure(graph, std::slice::from_raw_parts(seed, seed_len))?;
        write_string(out, to_json(&cert))
    })
}

/// Lower-bound certificate JSON.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sx_lower_bound(g: *const SxGraph, mode: SxCoverMode, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let mode = match mode {
            SxCoverMode::Exact => CoverMode::Exact,
            SxCoverMode::Singleton => CoverMode::SingletonShortcut,
            SxCoverMode::Isolated => CoverMode::DegreeBound,
        };
        let lb = cover_lower_bound(graph_ref(g)?, mode, &Budget::from_env())?;
        write_string(out, to_json(&lb))
    })
}

/// Common neighbor of three perfect matchings given as 1-based pair lists;
/// writes the result and trace JSON.
///
/// # Safety
/// The three inputs must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sx_common_neighbor(
    m1: *const c_char,
    m2: *const c_char,
    m3: *const c_char,
    out: *mut *mut c_char,
) -> SxStatus {
    guard(|| {
        let parse = |s: *const c_char| -> Result<_, Fail> {
            Ok(matching_from_json(&from_json::<Vec<[usize; 2]>>(read_str(s)?)?)?)
        };
        let trace = three_common_neighbor(&parse(m1)?, &parse(m2)?, &parse(m3)?)?;
        write_string(out, to_json(&NeighborTraceJson::from(&trace)))
    })
}

/// Extension report JSON for a `{"P", "Q", "projection"}` witness.
/// A negative `drop_facet` keeps every facet in the covering.
///
/// # Safety
/// `witness` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sx_verify_extension(witness: *const c_char, drop_facet: i64, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let budget = Budget::from_env();
        let w = from_json::<WitnessJson>(read_str(witness)?)?.to_witness(&budget)?;
        let exclude = usize::try_from(drop_facet).ok();
        write_string(out, to_json(&extension_report(&w, exclude, &budget)?))
    })
}
