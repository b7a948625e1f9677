//! C ABI over `cpg-core`.
//!
//! Graphs and representations cross the boundary as opaque handles created
//! by `cpg_*` constructors and released with the matching `*_free`. Every
//! fallible call returns a [`CpgStatus`]; on failure a message is available
//! from [`cpg_last_error`] until the next call on the same thread. Strings
//! returned through out-parameters are owned by the caller and must be
//! released with [`cpg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cpg_core::format::{parse_graph, parse_representation, write_graph, write_representation};
use cpg_core::gk::{audit_gk, build_representation, generate_gk, rotation_system_gk, trace_faces};
use cpg_core::search::{search_representation, SearchBounds, SearchOutcome};
use cpg_core::{classify_grid_point, contact_graph, max_bend, validate, GridPoint, PointKind};

/// Opaque graph handle.
pub struct CpgGraph(cpg_core::LabeledGraph);

/// Opaque representation handle.
pub struct CpgRep(cpg_core::CpgRepresentation);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidRepresentation = 4,
    VertexSetMismatch = 5,
    NotFound = 6,
    BudgetExhausted = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpgPointKind {
    FreePoint = 0,
    PlainContact = 1,
    /// Endpoint of two paths, straight interior point of a third.
    Type2a = 2,
    /// Endpoint of two paths, bendpoint of a third.
    Type2b = 3,
    OtherConfiguration = 4,
}

impl From<PointKind> for CpgPointKind {
    fn from(k: PointKind) -> Self {
        match k {
            PointKind::FreePoint => CpgPointKind::FreePoint,
            PointKind::PlainContact => CpgPointKind::PlainContact,
            PointKind::TypeIIa => CpgPointKind::Type2a,
            PointKind::TypeIIb => CpgPointKind::Type2b,
            PointKind::OtherConfiguration => CpgPointKind::OtherConfiguration,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CpgStatus, msg: impl Into<String>) -> CpgStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> CpgStatus) -> CpgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(CpgStatus::Internal, "panic in cpg"))
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next `cpg_*` call on the same thread.
#[no_mangle]
pub extern "C" fn cpg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CpgStatus> {
    if s.is_null() {
        return Err(fail(CpgStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(CpgStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> CpgStatus {
    *out = Box::into_raw(Box::new(value));
    CpgStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> CpgStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CpgStatus::Ok
        }
        Err(_) => fail(CpgStatus::Internal, "output contains a nul byte"),
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            return fail(CpgStatus::NullPointer, "null argument");
        }
    };
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cpg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the graph `G_k`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn cpg_graph_generate_gk(k: u32, out: *mut *mut CpgGraph) -> CpgStatus {
    guard(|| {
        non_null!(out);
        put(out, CpgGraph(generate_gk(k)))
    })
}

/// Parses a `cpg-graph v1` document.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_graph_parse(text: *const c_char, out: *mut *mut CpgGraph) -> CpgStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_graph(text) {
            Ok(g) => put(out, CpgGraph(g)),
            Err(e) => fail(CpgStatus::ParseError, e.to_string()),
        }
    })
}

/// Serializes a graph in the canonical text format.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_graph_to_text(g: *const CpgGraph, out: *mut *mut c_char) -> CpgStatus {
    guard(|| {
        non_null!(g, out);
        put_string(out, write_graph(&(*g).0))
    })
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cpg_graph_vertex_count(g: *const CpgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cpg_graph_edge_count(g: *const CpgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// True iff both handles are non-null and the graphs are equal as labeled
/// graphs.
///
/// # Safety
/// Both arguments must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn cpg_graph_equal(a: *const CpgGraph, b: *const CpgGraph) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cpg_graph_free(g: *mut CpgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Builds the canonical `(k+1)`-bend representation of `G_k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_rep_build(k: u32, out: *mut *mut CpgRep) -> CpgStatus {
    guard(|| {
        non_null!(out);
        put(out, CpgRep(build_representation(k)))
    })
}

/// Parses a representation JSON document.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_rep_parse(text: *const c_char, out: *mut *mut CpgRep) -> CpgStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_representation(text) {
            Ok(r) => put(out, CpgRep(r)),
            Err(e) => fail(CpgStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_rep_to_json(rep: *const CpgRep, out: *mut *mut c_char) -> CpgStatus {
    guard(|| {
        non_null!(rep, out);
        put_string(out, write_representation(&(*rep).0))
    })
}

/// Writes the number of violations; also sets the last-error message to the
/// first violation when there are any.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_rep_violation_count(rep: *const CpgRep, out: *mut usize) -> CpgStatus {
    guard(|| {
        non_null!(rep, out);
        let v = validate(&(*rep).0);
        if let Some(first) = v.first() {
            set_error(first.to_string());
        }
        *out = v.len();
        CpgStatus::Ok
    })
}

/// # Safety
/// `rep` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cpg_rep_max_bend(rep: *const CpgRep) -> usize {
    rep.as_ref().map_or(0, |r| max_bend(&r.0))
}

/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_rep_contact_graph(rep: *const CpgRep, out: *mut *mut CpgGraph) -> CpgStatus {
    guard(|| {
        non_null!(rep, out);
        match contact_graph(&(*rep).0) {
            Ok(g) => put(out, CpgGraph(g)),
            Err(e) => fail(CpgStatus::InvalidRepresentation, e.to_string()),
        }
    })
}

/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_rep_classify_point(
    rep: *const CpgRep,
    x: i64,
    y: i64,
    out: *mut CpgPointKind,
) -> CpgStatus {
    guard(|| {
        non_null!(rep, out);
        match classify_grid_point(&(*rep).0, GridPoint::new(x, y)) {
            Ok(c) => {
                *out = c.kind.into();
                CpgStatus::Ok
            }
            Err(e) => fail(CpgStatus::InvalidRepresentation, e.to_string()),
        }
    })
}

/// # Safety
/// `rep` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cpg_rep_free(rep: *mut CpgRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Audits `rep` as a representation of `G_k`. `out_text` may be NULL.
///
/// # Safety
/// `rep` must be a live handle; `out_all_ok` must be writable; `out_text`
/// must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_audit_gk(
    rep: *const CpgRep,
    k: u32,
    out_all_ok: *mut bool,
    out_text: *mut *mut c_char,
) -> CpgStatus {
    guard(|| {
        non_null!(rep, out_all_ok);
        match audit_gk(&(*rep).0, k) {
            Ok(report) => {
                *out_all_ok = report.all_ok();
                if out_text.is_null() {
                    CpgStatus::Ok
                } else {
                    put_string(out_text, report.to_string())
                }
            }
            Err(e) => fail(CpgStatus::VertexSetMismatch, e.to_string()),
        }
    })
}

/// Face count of the planar rotation system of `G_k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_gk_face_count(k: u32, out: *mut usize) -> CpgStatus {
    guard(|| {
        non_null!(out);
        match trace_faces(&generate_gk(k), &rotation_system_gk(k)) {
            Ok(f) => {
                *out = f;
                CpgStatus::Ok
            }
            Err(e) => fail(CpgStatus::Internal, e.to_string()),
        }
    })
}

/// Bounded search on a `width x height` point grid. Returns `NotFound` when
/// the space is exhausted and `BudgetExhausted` when `node_budget` runs out.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cpg_search(
    g: *const CpgGraph,
    width: u32,
    height: u32,
    bend_budget: u32,
    node_budget: u64,
    out: *mut *mut CpgRep,
) -> CpgStatus {
    guard(|| {
        non_null!(g, out);
        let bounds = SearchBounds::new(width, height, bend_budget);
        match search_representation(&(*g).0, bounds, node_budget) {
            SearchOutcome::Found(rep) => put(out, CpgRep(rep)),
            SearchOutcome::ExhaustedNoSolution => {
                fail(CpgStatus::NotFound, "no representation within bounds")
            }
            SearchOutcome::AbortedBudget(n) => {
                fail(CpgStatus::BudgetExhausted, format!("aborted after {n} nodes"))
            }
        }
    })
}
